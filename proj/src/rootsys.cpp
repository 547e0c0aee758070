/* This is rootsys.cpp: construction, axiom checks, restriction and
   decomposition of exact root systems. */
#include "equifocal/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace equifocal {

namespace {

using RootSet = std::unordered_set<ExactVector, ExactVectorHash, ExactVectorEq>;

ExactVector unit(Eigen::Index dim, Eigen::Index i, long long scale = 1) {
  ExactVector v = ExactVector::Constant(dim, Rational(0));
  v(i) = Rational(scale);
  return v;
}

void push_pair(std::vector<Root>& roots, const ExactVector& v) {
  roots.push_back({v, 1});
  ExactVector neg = v;
  for (Eigen::Index i = 0; i < neg.size(); ++i) neg(i) = -neg(i);
  roots.push_back({neg, 1});
}

std::vector<Root> e8_roots() {
  std::vector<Root> roots;
  const Eigen::Index dim = 8;
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = i + 1; j < dim; ++j) {
      ExactVector v = unit(dim, i);
      v(j) = Rational(1);
      push_pair(roots, v);
      v(j) = Rational(-1);
      push_pair(roots, v);
    }
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    ExactVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i)
      v(i) = (mask >> i) & 1 ? Rational(-1, 2) : Rational(1, 2);
    roots.push_back({v, 1});
  }
  return roots;
}

std::vector<Root> e8_section(std::vector<ExactVector> normal) {
  std::vector<Root> roots;
  for (const Root& r : e8_roots()) {
    bool ok = true;
    for (const ExactVector& w : normal)
      if (!inner(r.vector, w).is_zero()) { ok = false; break; }
    if (ok) roots.push_back(r);
  }
  return roots;
}

RootSet vector_set(const RootSystem& rs) {
  RootSet set;
  for (const Root& r : rs.roots) set.insert(r.vector);
  return set;
}

ExactVector negate(const ExactVector& v) {
  ExactVector n = v;
  for (Eigen::Index i = 0; i < n.size(); ++i) n(i) = -n(i);
  return n;
}

}  // namespace

ExactVector reflect_vector(const ExactVector& x, const ExactVector& alpha,
                           const ExactVector& metric) {
  Rational coef = Rational(2) * inner(x, alpha, metric) / norm_sq(alpha, metric);
  ExactVector out = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) out(i) -= coef * alpha(i);
  return out;
}

RootSystem build_root_system(const std::string& type, int rank) {
  RootSystem rs;
  rs.label = type + std::to_string(rank);
  auto need_rank = [&](int expected) {
    if (rank != expected)
      throw std::invalid_argument("build_root_system: type " + type +
                                  " requires rank " + std::to_string(expected));
  };
  if (type == "A") {
    if (rank < 1) throw std::invalid_argument("build_root_system: rank must be >= 1");
    rs.ambient_dim = rank + 1;
    for (Eigen::Index i = 0; i <= rank; ++i)
      for (Eigen::Index j = i + 1; j <= rank; ++j) {
        ExactVector v = unit(rs.ambient_dim, i);
        v(j) = Rational(-1);
        push_pair(rs.roots, v);
      }
  } else if (type == "B" || type == "C" || type == "D" || type == "BC") {
    int min_rank = type == "D" ? 2 : 1;
    if (rank < min_rank)
      throw std::invalid_argument("build_root_system: rank must be >= " +
                                  std::to_string(min_rank) + " for type " + type);
    rs.ambient_dim = rank;
    for (Eigen::Index i = 0; i < rank; ++i)
      for (Eigen::Index j = i + 1; j < rank; ++j) {
        ExactVector v = unit(rank, i);
        v(j) = Rational(1);
        push_pair(rs.roots, v);
        v(j) = Rational(-1);
        push_pair(rs.roots, v);
      }
    if (type == "B" || type == "BC")
      for (Eigen::Index i = 0; i < rank; ++i) push_pair(rs.roots, unit(rank, i));
    if (type == "C" || type == "BC")
      for (Eigen::Index i = 0; i < rank; ++i) push_pair(rs.roots, unit(rank, i, 2));
  } else if (type == "G2") {
    need_rank(2);
    rs.ambient_dim = 3;
    for (Eigen::Index i = 0; i < 3; ++i)
      for (Eigen::Index j = i + 1; j < 3; ++j) {
        ExactVector v = unit(3, i);
        v(j) = Rational(-1);
        push_pair(rs.roots, v);
      }
    for (Eigen::Index i = 0; i < 3; ++i) {
      ExactVector v = ExactVector::Constant(3, Rational(-1));
      v(i) = Rational(2);
      push_pair(rs.roots, v);
    }
  } else if (type == "F4") {
    need_rank(4);
    rs.ambient_dim = 4;
    for (Eigen::Index i = 0; i < 4; ++i) push_pair(rs.roots, unit(4, i));
    for (Eigen::Index i = 0; i < 4; ++i)
      for (Eigen::Index j = i + 1; j < 4; ++j) {
        ExactVector v = unit(4, i);
        v(j) = Rational(1);
        push_pair(rs.roots, v);
        v(j) = Rational(-1);
        push_pair(rs.roots, v);
      }
    for (int mask = 0; mask < 16; ++mask) {
      ExactVector v(4);
      for (Eigen::Index i = 0; i < 4; ++i)
        v(i) = (mask >> i) & 1 ? Rational(-1, 2) : Rational(1, 2);
      rs.roots.push_back({v, 1});
    }
  } else if (type == "E8") {
    need_rank(8);
    rs.ambient_dim = 8;
    rs.roots = e8_roots();
  } else if (type == "E7") {
    need_rank(7);
    rs.ambient_dim = 8;
    ExactVector w = unit(8, 6);
    w(7) = Rational(1);
    rs.roots = e8_section({w});
  } else if (type == "E6") {
    need_rank(6);
    rs.ambient_dim = 8;
    ExactVector w1 = unit(8, 6);
    w1(7) = Rational(1);
    ExactVector w2 = unit(8, 5);
    w2(6) = Rational(-1);
    rs.roots = e8_section({w1, w2});
  } else {
    throw std::invalid_argument("build_root_system: unknown type " + type);
  }
  return rs;
}

bool check_weakly_root_system(const RootSystem& rs) {
  RootSet set = vector_set(rs);
  for (const Root& a : rs.roots)
    for (const Root& b : rs.roots) {
      ExactVector s = reflect_vector(b.vector, a.vector, rs.metric);
      if (set.find(s) == set.end()) return false;
    }
  return true;
}

RootConditionReport check_root_system_conditions(const RootSystem& rs) {
  RootConditionReport rep;
  rep.reflection_closed = check_weakly_root_system(rs);
  rep.pairings_integral = true;
  for (const Root& a : rs.roots) {
    for (const Root& b : rs.roots) {
      Rational pairing =
          Rational(2) * rs.inner_product(b.vector, a.vector) / norm_sq(a.vector, rs.metric);
      if (!pairing.is_integer()) {
        rep.pairings_integral = false;
        break;
      }
    }
    if (!rep.pairings_integral) break;
  }
  rep.no_scaled_pairs = true;
  for (const Root& a : rs.roots) {
    for (const Root& b : rs.roots) {
      // b = c*a with c other than +/-1 violates the condition.
      Rational ab = rs.inner_product(a.vector, b.vector);
      Rational aa = norm_sq(a.vector, rs.metric);
      Rational bb = norm_sq(b.vector, rs.metric);
      if (!(ab * ab == aa * bb)) continue;  // not collinear
      Rational c = ab / aa;
      ExactVector scaled = a.vector;
      for (Eigen::Index i = 0; i < scaled.size(); ++i) scaled(i) *= c;
      if (!exact_eq(scaled, b.vector)) continue;
      if (!(c == Rational(1) || c == Rational(-1))) {
        rep.no_scaled_pairs = false;
        break;
      }
    }
    if (!rep.no_scaled_pairs) break;
  }
  return rep;
}

std::vector<Root> positive_roots(const RootSystem& rs) {
  std::vector<Root> pos;
  for (const Root& r : rs.roots)
    if (lex_positive(r.vector)) pos.push_back(r);
  std::sort(pos.begin(), pos.end(),
            [](const Root& a, const Root& b) { return lex_less(a.vector, b.vector); });
  return pos;
}

int sum_of_multiplicities(const RootSystem& rs) {
  int total = 0;
  for (const Root& r : rs.roots) total += r.multiplicity;
  return total;
}

RootSystem restrict(const RootSystem& rs, const ExactMatrix& subspace_basis) {
  if (subspace_basis.rows() != rs.ambient_dim)
    throw std::invalid_argument("restrict: basis dimension mismatch");
  if (subspace_basis.cols() == 0)
    throw std::invalid_argument("restrict: empty basis");
  ExactMatrix q = gram_schmidt(subspace_basis, rs.metric);  // throws if dependent

  RootSystem out;
  out.ambient_dim = q.cols();
  out.label = rs.label.empty() ? std::string("restricted") : rs.label + " restricted";
  out.metric = ExactVector(q.cols());
  for (Eigen::Index k = 0; k < q.cols(); ++k)
    out.metric(k) = norm_sq(q.col(k), rs.metric);

  std::unordered_map<ExactVector, int, ExactVectorHash, ExactVectorEq> merged;
  for (const Root& r : rs.roots) {
    ExactVector c(q.cols());
    for (Eigen::Index k = 0; k < q.cols(); ++k)
      c(k) = inner(r.vector, q.col(k), rs.metric) / out.metric(k);
    if (is_zero(c)) continue;
    merged[c] += r.multiplicity;
  }
  for (const auto& [vec, mult] : merged) out.roots.push_back({vec, mult});
  std::sort(out.roots.begin(), out.roots.end(),
            [](const Root& a, const Root& b) { return lex_less(a.vector, b.vector); });
  return out;
}

std::vector<RootSystem> decompose(const RootSystem& rs) {
  std::vector<Root> pos = positive_roots(rs);
  std::vector<size_t> parent(pos.size());
  std::iota(parent.begin(), parent.end(), size_t(0));
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < pos.size(); ++i)
    for (size_t j = i + 1; j < pos.size(); ++j)
      if (!rs.inner_product(pos[i].vector, pos[j].vector).is_zero())
        parent[find(i)] = find(j);

  std::map<size_t, std::vector<size_t>> groups;
  for (size_t i = 0; i < pos.size(); ++i) groups[find(i)].push_back(i);

  std::vector<std::vector<size_t>> components;
  for (auto& [root_idx, members] : groups) components.push_back(members);
  std::sort(components.begin(), components.end(),
            [&](const std::vector<size_t>& a, const std::vector<size_t>& b) {
              return lex_less(pos[a.front()].vector, pos[b.front()].vector);
            });

  std::vector<RootSystem> out;
  for (size_t c = 0; c < components.size(); ++c) {
    RootSystem comp;
    comp.ambient_dim = rs.ambient_dim;
    comp.metric = rs.metric;
    comp.label = rs.label + " component " + std::to_string(c + 1);
    for (size_t idx : components[c]) {
      comp.roots.push_back(pos[idx]);
      comp.roots.push_back({negate(pos[idx].vector), pos[idx].multiplicity});
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_decomposable(const RootSystem& rs) { return decompose(rs).size() > 1; }

nlohmann::json to_json(const RootSystem& rs) {
  nlohmann::json j;
  j["ambient_dim"] = rs.ambient_dim;
  j["roots"] = nlohmann::json::array();
  for (const Root& r : rs.roots) {
    nlohmann::json coords = nlohmann::json::array();
    for (Eigen::Index i = 0; i < r.vector.size(); ++i)
      coords.push_back({r.vector(i).num(), r.vector(i).den()});
    j["roots"].push_back({{"coords", coords}, {"mult", r.multiplicity}});
  }
  if (!rs.label.empty()) j["label"] = rs.label;
  if (rs.metric.size() != 0) {
    nlohmann::json m = nlohmann::json::array();
    for (Eigen::Index i = 0; i < rs.metric.size(); ++i)
      m.push_back({rs.metric(i).num(), rs.metric(i).den()});
    j["metric"] = m;
  }
  return j;
}

RootSystem root_system_from_json(const nlohmann::json& j) {
  RootSystem rs;
  rs.ambient_dim = j.at("ambient_dim").get<Eigen::Index>();
  if (j.contains("label")) rs.label = j["label"].get<std::string>();
  if (j.contains("metric")) {
    const auto& m = j["metric"];
    rs.metric = ExactVector(m.size());
    for (size_t i = 0; i < m.size(); ++i)
      rs.metric((Eigen::Index)i) =
          Rational(m[i][0].get<long long>(), m[i][1].get<long long>());
  }
  for (const auto& rj : j.at("roots")) {
    const auto& coords = rj.at("coords");
    if ((Eigen::Index)coords.size() != rs.ambient_dim)
      throw std::invalid_argument("root system json: coordinate count mismatch");
    ExactVector v(rs.ambient_dim);
    for (Eigen::Index i = 0; i < rs.ambient_dim; ++i)
      v(i) = Rational(coords[i][0].get<long long>(), coords[i][1].get<long long>());
    int mult = rj.at("mult").get<int>();
    if (mult < 1)
      throw std::invalid_argument("root system json: multiplicity must be >= 1");
    rs.roots.push_back({v, mult});
  }
  // Validate: no duplicates, and negation closure with equal multiplicity.
  std::unordered_map<ExactVector, int, ExactVectorHash, ExactVectorEq> mults;
  for (const Root& r : rs.roots) {
    if (mults.count(r.vector))
      throw std::invalid_argument("root system json: duplicate root vector");
    mults[r.vector] = r.multiplicity;
  }
  for (const Root& r : rs.roots) {
    auto it = mults.find(negate(r.vector));
    if (it == mults.end() || it->second != r.multiplicity)
      throw std::invalid_argument(
          "root system json: not closed under negation with equal multiplicity");
  }
  return rs;
}

}  // namespace equifocal
