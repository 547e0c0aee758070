/* This is hermann.cpp: catalog loading and principal-orbit spectrum
   computations for isometric actions with per-root vertical/horizontal split
   data. */
#include "equifocal/hermann.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace equifocal {

namespace {

void require_per_root(const HermannActionDescriptor& action) {
  if (!action.per_root)
    throw std::invalid_argument("insufficient split data: action '" +
                                action.h_label + "' on " + action.space.label +
                                " carries aggregate counts only");
}

// b(x) as an exact pairing of the root with section coordinates.
Rational pairing(const ExactVector& root, const ExactVector& x) {
  if (root.size() != x.size())
    throw std::invalid_argument(
        "section coordinate dimension does not match the restricted system");
  return inner(root, x);
}

double pairing_d(const ExactVector& root, const Eigen::VectorXd& x) {
  if (root.size() != x.size())
    throw std::invalid_argument(
        "section coordinate dimension does not match the restricted system");
  double s = 0.0;
  for (Eigen::Index i = 0; i < root.size(); ++i)
    s += root(i).to_double() * x(i);
  return s;
}

std::map<std::string, long long> params_from_json(const nlohmann::json& j) {
  std::map<std::string, long long> params;
  for (auto it = j.begin(); it != j.end(); ++it)
    params[it.key()] = it.value().get<long long>();
  return params;
}

}  // namespace

std::vector<SpectrumValue> orbit_spectrum(const HermannActionDescriptor& action,
                                          const ExactVector& xi,
                                          const ExactVector& eta) {
  require_per_root(action);
  RootSystem restricted = restricted_system(action.space);
  std::vector<Root> pos = positive_roots(restricted);
  if (xi.size() != restricted.ambient_dim || eta.size() != restricted.ambient_dim)
    throw std::invalid_argument(
        "section coordinate dimension does not match the restricted system");
  for (size_t k = 0; k < pos.size(); ++k)
    if (action.split[k].in_V && pairing(pos[k].vector, xi).is_zero())
      throw std::invalid_argument("non-principal basepoint: a vertical root "
                                  "vanishes on xi");
  std::vector<SpectrumValue> values;
  for (size_t k = 0; k < pos.size(); ++k) {
    if (action.split[k].in_V)
      values.push_back({SpectrumValue::Kind::vertical, static_cast<int>(k)});
    if (action.split[k].in_H)
      values.push_back({SpectrumValue::Kind::horizontal, static_cast<int>(k)});
  }
  return values;
}

double evaluate_spectrum_value(const SpectrumValue& value,
                               const std::vector<Root>& positives,
                               const Eigen::VectorXd& xi,
                               const Eigen::VectorXd& eta) {
  if (value.kind == SpectrumValue::Kind::zero) return 0.0;
  const ExactVector& root = positives.at(value.root_index).vector;
  double bxi = pairing_d(root, xi);
  double beta = pairing_d(root, eta);
  if (value.kind == SpectrumValue::Kind::vertical)
    return -beta / std::tanh(bxi);
  return -beta * std::tanh(bxi);
}

long long max_distinct_spec(const HermannActionDescriptor& action) {
  // n_pos + count_both, with n_pos = count_V + count_H - count_both.
  return action.count_V + action.count_H;
}

int numeric_distinct_count(const HermannActionDescriptor& action,
                           const Eigen::VectorXd& xi,
                           const Eigen::VectorXd& eta, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  require_per_root(action);
  RootSystem restricted = restricted_system(action.space);
  std::vector<Root> pos = positive_roots(restricted);
  std::vector<double> values;
  for (size_t k = 0; k < pos.size(); ++k) {
    double bxi = pairing_d(pos[k].vector, xi);
    if (action.split[k].in_V) {
      if (std::abs(bxi) < 1e-9)
        throw std::invalid_argument("non-principal basepoint: a vertical root "
                                    "vanishes on xi");
      values.push_back(-pairing_d(pos[k].vector, eta) / std::tanh(bxi));
    }
    if (action.split[k].in_H)
      values.push_back(-pairing_d(pos[k].vector, eta) * std::tanh(bxi));
  }
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  int clusters = 1;
  for (size_t i = 1; i < values.size(); ++i)
    if (values[i] - values[i - 1] > tol) ++clusters;
  return clusters;
}

bool properness_check(const HermannActionDescriptor& action,
                      const ExactVector& xi, const ExactVector& eta) {
  require_per_root(action);
  RootSystem restricted = restricted_system(action.space);
  std::vector<Root> pos = positive_roots(restricted);
  for (size_t k = 0; k < pos.size(); ++k)
    if (action.split[k].in_V && pairing(pos[k].vector, xi).is_zero())
      throw std::invalid_argument("non-principal basepoint: a vertical root "
                                  "vanishes on xi");
  double norm = 0.0;
  for (Eigen::Index i = 0; i < eta.size(); ++i) {
    double c = eta(i).to_double();
    norm += c * c;
  }
  norm = std::sqrt(norm);
  if (norm == 0.0) return true;  // all mu vanish; nothing to collide with
  Eigen::VectorXd unit(eta.size());
  for (Eigen::Index i = 0; i < eta.size(); ++i)
    unit(i) = eta(i).to_double() / norm;
  Eigen::VectorXd xi_d(xi.size());
  for (Eigen::Index i = 0; i < xi.size(); ++i) xi_d(i) = xi(i).to_double();
  std::vector<std::pair<double, double>> pairs;
  for (size_t k = 0; k < pos.size(); ++k) {
    // An exactly vanishing pairing means mu = 0: nothing to collide with.
    // Detect it on the rational data; the normalized double pairing below
    // would only reach ~1e-17 and trip the boundary tolerance.
    if (pairing(pos[k].vector, eta).is_zero()) continue;
    double beta = pairing_d(pos[k].vector, unit);
    double mu = -beta * beta;
    double bxi = pairing_d(pos[k].vector, xi_d);
    if (action.split[k].in_V)
      pairs.push_back({-beta / std::tanh(bxi), mu});
    if (action.split[k].in_H) pairs.push_back({-beta * std::tanh(bxi), mu});
  }
  return properness_check(pairs);
}

bool properness_check(const std::vector<std::pair<double, double>>& pairs) {
  for (const auto& [lambda, mu] : pairs) {
    if (mu > 0)
      throw std::invalid_argument(
          "properness_check: curvature eigenvalue mu must be <= 0");
    double s = std::sqrt(-mu);
    if (s == 0.0) continue;
    double tol = 1e-9 * std::max(1.0, s);
    if (std::abs(lambda - s) <= tol || std::abs(lambda + s) <= tol)
      return false;
  }
  return true;
}

std::vector<AffineIsometry> real_coxeter_generators(
    const HermannActionDescriptor& action) {
  require_per_root(action);
  RootSystem restricted = restricted_system(action.space);
  std::vector<Root> pos = positive_roots(restricted);
  std::vector<AffineIsometry> gens;
  for (size_t k = 0; k < pos.size(); ++k)
    if (action.split[k].in_V) gens.push_back(reflection(pos[k].vector));
  return gens;
}

std::vector<HermannActionDescriptor> hermann_catalog_from_json(
    const nlohmann::json& j,
    const std::vector<SymmetricSpaceDescriptor>& spaces) {
  if (!j.is_object() || !j.contains("actions") || !j["actions"].is_array())
    throw std::invalid_argument(
        "action catalog: top level must be an object with an 'actions' array");
  std::vector<HermannActionDescriptor> catalog;
  for (const nlohmann::json& row : j["actions"]) {
    HermannActionDescriptor action;
    try {
      action.h_label = row.at("h_label").get<std::string>();
      const nlohmann::json& ref = row.at("space");
      std::string space_label = ref.at("label").get<std::string>();
      std::map<std::string, long long> params =
          params_from_json(ref.at("params"));
      const SymmetricSpaceDescriptor* space =
          find_space(spaces, space_label, params);
      if (space == nullptr) {
        std::string msg = "unknown space reference: " + space_label;
        for (const auto& [key, value] : params)
          msg += " " + key + "=" + std::to_string(value);
        throw std::invalid_argument(msg);
      }
      action.space = *space;
      action.table = row.at("table").get<int>();
      if (action.table < 2 || action.table > 4)
        throw std::invalid_argument("table must be 2, 3 or 4");
      action.expected_max_spec = row.at("expected_max_spec").get<long long>();
      if (action.expected_max_spec < 1)
        throw std::invalid_argument("expected_max_spec must be >= 1");

      RootSystem restricted = restricted_system(*space);
      std::vector<Root> pos = positive_roots(restricted);
      const nlohmann::json& split = row.at("split");
      if (split.contains("per_root")) {
        action.per_root = true;
        const nlohmann::json& per = split["per_root"];
        if (!per.is_array() || per.size() != pos.size())
          throw std::invalid_argument(
              "per_root split must list every positive root exactly once");
        action.split.resize(pos.size());
        for (size_t k = 0; k < pos.size(); ++k) {
          const nlohmann::json& entry = per[k];
          if (entry.at("root_index").get<long long>() !=
              static_cast<long long>(k))
            throw std::invalid_argument(
                "per_root entries must be in canonical ascending order");
          const nlohmann::json& coords = entry.at("root");
          if (!coords.is_array() ||
              coords.size() != static_cast<size_t>(pos[k].vector.size()))
            throw std::invalid_argument("root coordinate dimension mismatch");
          for (Eigen::Index i = 0; i < pos[k].vector.size(); ++i) {
            Rational c(coords[i].at(0).get<long long>(),
                       coords[i].at(1).get<long long>());
            if (!(c == pos[k].vector(i)))
              throw std::invalid_argument(
                  "root coordinates do not match the canonical positive root "
                  "at index " +
                  std::to_string(k));
          }
          action.split[k].in_V = entry.at("in_V").get<bool>();
          action.split[k].in_H = entry.at("in_H").get<bool>();
          if (!action.split[k].in_V && !action.split[k].in_H)
            throw std::invalid_argument(
                "every positive root must be vertical or horizontal");
          action.count_V += action.split[k].in_V;
          action.count_H += action.split[k].in_H;
          action.count_both += action.split[k].in_V && action.split[k].in_H;
        }
      } else {
        action.per_root = false;
        action.count_V = split.at("count_V").get<long long>();
        action.count_H = split.at("count_H").get<long long>();
        action.count_both = split.at("count_both").get<long long>();
        long long n_pos = static_cast<long long>(pos.size());
        if (action.count_both < 0 ||
            action.count_both > std::min(action.count_V, action.count_H) ||
            action.count_V > n_pos || action.count_H > n_pos)
          throw std::invalid_argument("inconsistent aggregate split counts");
        if (action.count_V + action.count_H - action.count_both != n_pos)
          throw std::invalid_argument(
              "aggregate split does not cover the positive roots: " +
              std::to_string(action.count_V + action.count_H -
                             action.count_both) +
              " != " + std::to_string(n_pos));
      }
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("action catalog entry '" + action.h_label +
                                  "': " + e.what());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("action catalog entry '" + action.h_label +
                                  "': " + e.what());
    }
    catalog.push_back(std::move(action));
  }
  return catalog;
}

std::vector<HermannActionDescriptor> hermann_catalog_load(
    const std::string& path,
    const std::vector<SymmetricSpaceDescriptor>& spaces) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open action catalog: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("cannot parse action catalog " + path + ": " +
                             e.what());
  }
  return hermann_catalog_from_json(j, spaces);
}

const HermannActionDescriptor* find_action(
    const std::vector<HermannActionDescriptor>& catalog,
    const std::string& h_label, const std::string& space_label,
    const std::map<std::string, long long>& params) {
  for (const HermannActionDescriptor& action : catalog)
    if (action.h_label == h_label && action.space.label == space_label &&
        action.space.params == params)
      return &action;
  return nullptr;
}

}  // namespace equifocal
