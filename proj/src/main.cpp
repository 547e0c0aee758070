// equifocal: command-line surface over the library.  Subcommands reproduce
// the catalog count tables, emit focal arrangements as CSV/SVG plot data,
// evaluate orbit spectra and closed-form focal radii, check root-system
// axioms and reflection-group orders, and drive the randomized matrix-model
// oracle.  Exit codes: 0 success / all rows match, 1 mismatch or failed
// check, 2 usage or data error.  Output is deterministic for a fixed --seed:
// CSV is RFC 4180 (CRLF), JSON is emitted with sorted keys, and doubles are
// printed in shortest round-trip form.
#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <json.hpp>

#include "equifocal/adnum.hpp"
#include "equifocal/focal.hpp"
#include "equifocal/hermann.hpp"
#include "equifocal/linalg.hpp"
#include "equifocal/rational.hpp"
#include "equifocal/reflgroup.hpp"
#include "equifocal/rootsys.hpp"
#include "equifocal/symcat.hpp"

namespace {

using namespace equifocal;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsageError = 2;

// Shortest round-trip decimal form; locale-independent and deterministic.
std::string fmt_double(double x) {
  if (x == 0.0) x = 0.0;  // collapse negative zero
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

std::string fmt_vector(const ExactVector& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += v(i).str();
  }
  return out;
}

// RFC 4180 writer: comma-separated, CRLF line endings, quotes only when a
// field contains a comma, quote, or line break.
class Csv {
 public:
  explicit Csv(const std::vector<std::string>& header) { row(header); }
  void row(const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
      if (i) out_ += ',';
      out_ += escaped(fields[i]);
    }
    out_ += "\r\n";
  }
  const std::string& str() const { return out_; }

 private:
  static std::string escaped(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string q = "\"";
    for (char c : field) {
      q += c;
      if (c == '"') q += '"';
    }
    q += '"';
    return q;
  }
  std::string out_;
};

// "-" writes to standard output.
void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content;
  if (!f) throw std::runtime_error("failed writing output file: " + path);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::pair<int, int> parse_j_range(const std::string& text) {
  size_t pos = text.find("..");
  try {
    if (pos == std::string::npos) throw std::invalid_argument("");
    return {std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 2))};
  } catch (const std::exception&) {
    throw std::invalid_argument("j range must look like -3..3, got '" + text +
                                "'");
  }
}

bool same_vec(const ExactVector& a, const ExactVector& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (!(a(i) == b(i))) return false;
  return true;
}

Eigen::VectorXd to_double_vec(const ExactVector& v) {
  Eigen::VectorXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i).to_double();
  return out;
}

// Positive roots not expressible as a sum of two positive roots.
std::vector<Root> simple_roots(const std::vector<Root>& positives) {
  std::vector<Root> out;
  for (const Root& a : positives) {
    bool is_sum = false;
    for (const Root& b : positives) {
      for (const Root& c : positives) {
        ExactVector sum = b.vector + c.vector;
        if (same_vec(sum, a.vector)) is_sum = true;
      }
      if (is_sum) break;
    }
    if (!is_sum) out.push_back(a);
  }
  return out;
}

// Section coordinates from the command line: either ambient coordinates
// directly, or (when the root span is a proper subspace or the count says so)
// one pairing value per simple root, realized as the minimum-norm ambient
// vector with those simple-root pairings.
ExactVector parse_section_vector(const std::string& text,
                                 const RootSystem& rs) {
  std::vector<std::string> parts = split(text, ',');
  ExactVector raw(static_cast<Eigen::Index>(parts.size()));
  for (size_t i = 0; i < parts.size(); ++i)
    raw(static_cast<Eigen::Index>(i)) = parse_rational(parts[i]);
  if (raw.size() == rs.ambient_dim) return raw;
  std::vector<Root> simples = simple_roots(positive_roots(rs));
  Eigen::Index rank = static_cast<Eigen::Index>(simples.size());
  if (raw.size() != rank)
    throw std::invalid_argument(
        "expected " + std::to_string(rs.ambient_dim) + " ambient or " +
        std::to_string(rank) + " simple-root pairing coordinates, got " +
        std::to_string(raw.size()));
  ExactMatrix gram(rank, rank);
  for (Eigen::Index i = 0; i < rank; ++i)
    for (Eigen::Index j = 0; j < rank; ++j)
      gram(i, j) = rs.inner_product(simples[i].vector, simples[j].vector);
  std::optional<ExactVector> y = solve(gram, raw);
  if (!y) throw std::invalid_argument("simple roots are not independent");
  ExactVector xi = ExactVector::Constant(rs.ambient_dim, Rational(0));
  for (Eigen::Index i = 0; i < rank; ++i)
    xi += (*y)(i) * simples[i].vector;
  return xi;
}

std::string family_name(FocalHyperplane::Family family) {
  return family == FocalHyperplane::Family::integer_pi ? "integer_pi"
                                                       : "half_integer_pi";
}

// ---------------------------------------------------------------------------
// table1: m-invariant reproduction over the symmetric-space catalog.

int cmd_table1(const std::string& catalog_path, const std::string& out_path) {
  std::vector<SymmetricSpaceDescriptor> catalog = catalog_load(catalog_path);
  Csv csv({"label", "name", "rank", "n_pos", "n_mult1", "m", "expected_n_pos",
           "expected_n_mult1", "expected_m", "match"});
  bool all_match = true;
  for (const SymmetricSpaceDescriptor& d : catalog) {
    PositiveRootCounts c = m_invariant(d);
    bool match = c.n_pos == d.expected_n_pos &&
                 c.n_mult1 == d.expected_n_mult1 && c.m == d.expected_m;
    all_match = all_match && match;
    csv.row({d.label, d.name, std::to_string(d.rank), std::to_string(c.n_pos),
             std::to_string(c.n_mult1), std::to_string(c.m),
             std::to_string(d.expected_n_pos),
             std::to_string(d.expected_n_mult1), std::to_string(d.expected_m),
             match ? "1" : "0"});
  }
  write_output(out_path, csv.str());
  return all_match ? kOk : kMismatch;
}

// ---------------------------------------------------------------------------
// hermann: maximal distinct-eigenvalue counts over the action catalog.

int cmd_hermann(const std::string& spaces_path, const std::string& actions_path,
                const std::string& out_path) {
  std::vector<SymmetricSpaceDescriptor> spaces = catalog_load(spaces_path);
  std::vector<HermannActionDescriptor> actions =
      hermann_catalog_load(actions_path, spaces);
  Csv csv({"table", "h_label", "space", "per_root", "computed_max_spec",
           "expected_max_spec", "match"});
  bool all_match = true;
  for (const HermannActionDescriptor& a : actions) {
    long long computed = max_distinct_spec(a);
    bool match = computed == a.expected_max_spec;
    all_match = all_match && match;
    csv.row({std::to_string(a.table), a.h_label, a.space.name,
             a.per_root ? "1" : "0", std::to_string(computed),
             std::to_string(a.expected_max_spec), match ? "1" : "0"});
  }
  write_output(out_path, csv.str());
  return all_match ? kOk : kMismatch;
}

// ---------------------------------------------------------------------------
// arrange: focal arrangement of one catalog action as CSV and optional SVG.

const char* kPalette[6] = {"#1f77b4", "#d62728", "#2ca02c",
                           "#9467bd", "#ff7f0e", "#8c564b"};

std::string arrangement_svg(const std::vector<FocalHyperplane>& arrangement,
                            const RootSystem& rs) {
  // Orthonormal 2-D basis of the root span, for projecting the section.
  std::vector<Root> pos = positive_roots(rs);
  Eigen::VectorXd u, v;
  bool have_u = false, have_v = false;
  for (const Root& r : pos) {
    Eigen::VectorXd w = to_double_vec(r.vector);
    if (!have_u) {
      u = w / w.norm();
      have_u = true;
      continue;
    }
    w -= w.dot(u) * u;
    if (w.norm() > 1e-9) {
      v = w / w.norm();
      have_v = true;
      break;
    }
  }
  if (!have_u || !have_v)
    throw std::invalid_argument("svg output needs a rank-2 arrangement");
  auto project = [&](const Eigen::VectorXd& p) {
    return std::make_pair(p.dot(u), p.dot(v));
  };

  struct LineDatum {
    double nx, ny, c;
    std::string color;
  };
  std::vector<LineDatum> lines;
  double radius = 1.0;
  size_t color_index = 0;
  for (const FocalHyperplane& h : arrangement) {
    if (h.family != FocalHyperplane::Family::integer_pi) continue;
    auto [nx, ny] = project(to_double_vec(h.root));
    double c = h.offset.to_double();
    lines.push_back({nx, ny, c, kPalette[color_index++ % 6]});
    double nn = nx * nx + ny * ny;
    radius = std::max({radius, std::abs(c * nx / nn), std::abs(c * ny / nn)});
  }
  RealFocalSet real = real_focal_set(arrangement);
  std::optional<std::pair<double, double>> center;
  if (real.common_point) {
    center = project(to_double_vec(*real.common_point));
    radius = std::max({radius, std::abs(center->first),
                       std::abs(center->second)});
  }
  radius *= 1.6;

  std::string svg;
  std::string r2 = fmt_double(2 * radius);
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" +
         fmt_double(-radius) + " " + fmt_double(-radius) + " " + r2 + " " +
         r2 + "\">\n";
  svg += "  <rect x=\"" + fmt_double(-radius) + "\" y=\"" +
         fmt_double(-radius) + "\" width=\"" + r2 + "\" height=\"" + r2 +
         "\" fill=\"#ffffff\"/>\n";
  double reach = 4 * radius;
  for (const LineDatum& line : lines) {
    double nn = line.nx * line.nx + line.ny * line.ny;
    double px = line.c * line.nx / nn, py = line.c * line.ny / nn;
    double norm = std::sqrt(nn);
    double dx = -line.ny / norm, dy = line.nx / norm;
    // SVG y grows downward; negate the second coordinate on emission.
    svg += "  <line x1=\"" + fmt_double(px - reach * dx) + "\" y1=\"" +
           fmt_double(-(py - reach * dy)) + "\" x2=\"" +
           fmt_double(px + reach * dx) + "\" y2=\"" +
           fmt_double(-(py + reach * dy)) + "\" stroke=\"" + line.color +
           "\" stroke-width=\"" + fmt_double(radius / 80) + "\"/>\n";
  }
  if (center) {
    svg += "  <circle cx=\"" + fmt_double(center->first) + "\" cy=\"" +
           fmt_double(-center->second) + "\" r=\"" + fmt_double(radius / 40) +
           "\" fill=\"#000000\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

int cmd_arrange(const std::string& spaces_path, const std::string& actions_path,
                const std::string& space_label, const std::string& params_text,
                const std::string& h_label, const std::string& xi_text,
                const std::string& j_range, const std::string& out_path,
                const std::string& svg_path) {
  std::vector<SymmetricSpaceDescriptor> spaces = catalog_load(spaces_path);
  std::map<std::string, long long> params;
  if (!params_text.empty())
    for (const std::string& kv : split(params_text, ',')) {
      size_t eq = kv.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("params must look like n=3 or p=2,q=5");
      params[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
    }
  const SymmetricSpaceDescriptor* space =
      find_space(spaces, space_label, params);
  if (!space) {
    std::cerr << "no catalog space " << space_label << " with params {"
              << params_text << "}\n";
    return kUsageError;
  }
  std::vector<HermannActionDescriptor> actions =
      hermann_catalog_load(actions_path, spaces);
  const HermannActionDescriptor* action =
      find_action(actions, h_label, space_label, params);
  if (!action) {
    std::cerr << "no catalog action " << h_label << " on " << space->name
              << "\n";
    return kUsageError;
  }
  auto [j_min, j_max] = parse_j_range(j_range);
  RootSystem rs = restricted_system(*space);
  ExactVector xi = parse_section_vector(xi_text, rs);
  std::vector<FocalHyperplane> arrangement =
      hermann_focal_arrangement(*action, xi, j_min, j_max);

  Csv csv({"root_index", "root", "family", "offset", "j", "level_re",
           "level_im"});
  for (const FocalHyperplane& h : arrangement)
    for (size_t idx = 0; idx < h.levels.size(); ++idx)
      csv.row({std::to_string(h.root_index), fmt_vector(h.root),
               family_name(h.family), h.offset.str(),
               std::to_string(j_min + static_cast<int>(idx)),
               fmt_double(h.levels[idx].real()),
               fmt_double(h.levels[idx].imag())});
  write_output(out_path, csv.str());

  if (!svg_path.empty()) {
    if (space->rank != 2)
      throw std::invalid_argument(
          "svg output needs a rank-2 space, got rank " +
          std::to_string(space->rank));
    write_output(svg_path, arrangement_svg(arrangement, rs));
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// spectra: closed-form shape spectrum of one action at section coordinates.

int cmd_spectra(const std::string& spaces_path, const std::string& actions_path,
                const std::string& space_label, const std::string& params_text,
                const std::string& h_label, const std::string& xi_text,
                const std::string& eta_text, double tol, bool distinct_only,
                const std::string& out_path) {
  std::vector<SymmetricSpaceDescriptor> spaces = catalog_load(spaces_path);
  std::map<std::string, long long> params;
  if (!params_text.empty())
    for (const std::string& kv : split(params_text, ',')) {
      size_t eq = kv.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("params must look like n=3 or p=2,q=5");
      params[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
    }
  const SymmetricSpaceDescriptor* space =
      find_space(spaces, space_label, params);
  if (!space) {
    std::cerr << "no catalog space " << space_label << " with params {"
              << params_text << "}\n";
    return kUsageError;
  }
  std::vector<HermannActionDescriptor> actions =
      hermann_catalog_load(actions_path, spaces);
  const HermannActionDescriptor* action =
      find_action(actions, h_label, space_label, params);
  if (!action) {
    std::cerr << "no catalog action " << h_label << " on " << space->name
              << "\n";
    return kUsageError;
  }
  RootSystem rs = restricted_system(*space);
  ExactVector xi = parse_section_vector(xi_text, rs);
  ExactVector eta = parse_section_vector(eta_text, rs);
  Eigen::VectorXd xi_d = to_double_vec(xi), eta_d = to_double_vec(eta);
  if (distinct_only) {
    nlohmann::json j;
    j["distinct"] = numeric_distinct_count(*action, xi_d, eta_d, tol);
    j["max"] = max_distinct_spec(*action);
    write_output(out_path, j.dump(2) + "\n");
    return kOk;
  }
  std::vector<SpectrumValue> spectrum = orbit_spectrum(*action, xi, eta);
  std::vector<Root> positives = positive_roots(rs);
  Csv csv({"kind", "root_index", "root", "value"});
  for (const SpectrumValue& s : spectrum) {
    std::string kind = s.kind == SpectrumValue::Kind::vertical ? "vertical"
                       : s.kind == SpectrumValue::Kind::horizontal
                           ? "horizontal"
                           : "zero";
    csv.row({kind, std::to_string(s.root_index),
             s.root_index >= 0
                 ? fmt_vector(positives[static_cast<size_t>(s.root_index)]
                                  .vector)
                 : "",
             fmt_double(evaluate_spectrum_value(s, positives, xi_d, eta_d))});
  }
  write_output(out_path, csv.str());
  return kOk;
}

// ---------------------------------------------------------------------------
// focal-radii: closed-form complex focal radii of one (lambda, beta) pair.

int cmd_focal_radii(double lambda, double beta, const std::string& j_range,
                    const std::string& out_path) {
  auto [j_min, j_max] = parse_j_range(j_range);
  std::vector<ComplexScalar> radii =
      complex_focal_radii(lambda, beta, j_min, j_max);
  std::string branch;
  if (beta == 0.0)
    branch = "flat";
  else if (std::abs(lambda) > beta)
    branch = "integer_pi";
  else if (std::abs(lambda) < beta)
    branch = "half_integer_pi";
  Csv csv({"branch", "j", "radius_re", "radius_im"});
  for (size_t idx = 0; idx < radii.size(); ++idx)
    csv.row({branch,
             branch == "flat" ? ""
                              : std::to_string(j_min + static_cast<int>(idx)),
             fmt_double(radii[idx].real()), fmt_double(radii[idx].imag())});
  write_output(out_path, csv.str());
  return kOk;
}

// ---------------------------------------------------------------------------
// roots-check: axioms of one built-in root system.

int cmd_roots_check(const std::string& type, int rank) {
  RootSystem rs = build_root_system(type, rank);
  RootConditionReport report = check_root_system_conditions(rs);
  bool weak = check_weakly_root_system(rs);
  nlohmann::json j;
  j["type"] = type;
  j["rank"] = rank;
  j["roots"] = rs.roots.size();
  j["positive"] = positive_roots(rs).size();
  j["reflection_closed"] = report.reflection_closed;
  j["pairings_integral"] = report.pairings_integral;
  j["no_scaled_pairs"] = report.no_scaled_pairs;
  j["weakly_closed"] = weak;
  std::cout << j.dump(2) << "\n";
  bool pass = report.reflection_closed && report.pairings_integral &&
              report.no_scaled_pairs && weak;
  return pass ? kOk : kMismatch;
}

// ---------------------------------------------------------------------------
// weyl-order: closed-form reflection-group order, optionally verified by
// brute-force closure of the simple reflections.

int cmd_weyl_order(const std::string& type, int rank, bool brute_force) {
  long long order = weyl_group_order(type, rank);
  nlohmann::json j;
  j["type"] = type;
  j["rank"] = rank;
  j["order"] = order;
  bool pass = true;
  if (brute_force) {
    RootSystem rs = build_root_system(type, rank);
    std::vector<AffineIsometry> gens;
    for (const Root& r : simple_roots(positive_roots(rs)))
      gens.push_back(reflection(r.vector));
    GeneratedGroup g = generate_finite(gens, order);
    j["closure_order"] = g.elements.size();
    pass = g.is_complete &&
           static_cast<long long>(g.elements.size()) == order;
    j["match"] = pass;
  }
  std::cout << j.dump(2) << "\n";
  return pass ? kOk : kMismatch;
}

// ---------------------------------------------------------------------------
// oracle: randomized invariant suites on one matrix model.

std::vector<double> oracle_expected_spectrum(const MatrixModel& model,
                                             const Eigen::VectorXd& v) {
  RootSystem rs = model_restricted_system(model);
  std::vector<double> out(model.rank, 0.0);
  for (const Root& r : positive_roots(rs)) {
    double b = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
      b += r.vector(i).to_double() * v(i);
    for (int m = 0; m < r.multiplicity; ++m) out.push_back(-b * b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct SpectralCluster {
  double beta;
  Eigen::MatrixXd projector;
};

std::vector<SpectralCluster> spectral_clusters(const MatrixModel& model,
                                               const Eigen::VectorXd& v) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi_operator(model, v));
  std::vector<SpectralCluster> out;
  Eigen::Index start = 0;
  while (start < es.eigenvalues().size()) {
    Eigen::Index stop = start + 1;
    while (stop < es.eigenvalues().size() &&
           es.eigenvalues()(stop) - es.eigenvalues()(start) < 1e-8)
      ++stop;
    Eigen::MatrixXd cols = es.eigenvectors().middleCols(start, stop - start);
    out.push_back({std::sqrt(std::max(0.0, -es.eigenvalues()(start))),
                   cols * cols.transpose()});
    start = stop;
  }
  return out;
}

int cmd_oracle(const std::string& family, int n, int p, int q,
               unsigned long long seed, int trials, double t_max) {
  MatrixModel model = family == "sl_n_R" ? make_sl_model(n)
                                         : make_so_model(p, q);
  Eigen::Index coords =
      model.family == MatrixModel::Family::sl_n_R ? model.n : model.p;
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  std::uniform_real_distribution<double> lam(-3.0, 3.0);
  auto random_flat = [&]() {
    Eigen::VectorXd v(coords);
    for (Eigen::Index i = 0; i < coords; ++i) v(i) = unif(rng);
    return v;
  };

  // Suite 1: Jacobi spectra against the restricted root system.
  double spectrum_residual = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    Eigen::VectorXd v = random_flat();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        jacobi_operator(model, v));
    std::vector<double> expected = oracle_expected_spectrum(model, v);
    for (size_t k = 0; k < expected.size(); ++k) {
      double got = es.eigenvalues()(static_cast<Eigen::Index>(k));
      spectrum_residual = std::max(
          spectrum_residual,
          std::abs(got - expected[k]) /
              std::max({1.0, std::abs(got), std::abs(expected[k])}));
    }
  }
  bool spectrum_ok = spectrum_residual < 1e-8;

  // Suite 2: hyperbolic identity of the transport operators.
  double transport_residual = 0.0;
  Eigen::Index dim = static_cast<Eigen::Index>(model.basis_p.size());
  for (int trial = 0; trial < 5; ++trial) {
    Eigen::VectorXd v = random_flat();
    Eigen::MatrixXd m = jacobi_operator(model, v);
    for (double s : {0.3, 1.7}) {
      auto [co, si] = d_operators(model, v, s);
      transport_residual = std::max(
          transport_residual,
          (co * co + s * s * m * si * si -
           Eigen::MatrixXd::Identity(dim, dim))
              .norm());
    }
  }
  bool transport_ok = transport_residual < 1e-9;

  // Suite 3: numeric focal radii against the closed-form real branch.
  int focal_trials = std::max(1, trials / 10);
  int focal_matches = 0;
  double focal_error = 0.0;
  for (int trial = 0; trial < focal_trials; ++trial) {
    Eigen::VectorXd v = random_flat();
    std::vector<SpectralCluster> clusters = spectral_clusters(model, v);
    Eigen::MatrixXd shape = Eigen::MatrixXd::Zero(dim, dim);
    std::vector<double> expected;
    for (const SpectralCluster& c : clusters) {
      double lambda = lam(rng);
      shape += lambda * c.projector;
      if (c.beta == 0) {
        if (lambda > 0 && 1.0 / lambda <= t_max)
          expected.push_back(1.0 / lambda);
      } else if (lambda > c.beta) {
        double radius = complex_focal_radii(lambda, c.beta, 0, 0)[0].real();
        if (radius <= t_max) expected.push_back(radius);
      }
    }
    std::sort(expected.begin(), expected.end());
    expected.erase(
        std::unique(expected.begin(), expected.end(),
                    [](double a, double b) { return b - a <= 1e-9; }),
        expected.end());
    std::vector<double> got = numeric_focal_radii(model, v, shape, t_max);
    if (got.size() != expected.size()) continue;
    double worst = 0.0;
    for (size_t i = 0; i < got.size(); ++i)
      worst = std::max(worst, std::abs(got[i] - expected[i]));
    focal_error = std::max(focal_error, worst);
    if (worst <= 1e-6) ++focal_matches;
  }
  bool focal_ok = focal_matches == focal_trials;

  // Suite 4: commuting family of Jacobi operators and synthetic shape
  // operators constant on the joint eigenvalue clusters.
  std::vector<Eigen::VectorXd> flat;
  for (Eigen::Index k = 0; k < model.rank; ++k)
    flat.push_back(Eigen::VectorXd::Unit(coords, k));
  bool commuting_ok = commuting_family_check(model, flat, {}, 1e-9);
  {
    Eigen::VectorXd v = random_flat();
    std::vector<SpectralCluster> clusters = spectral_clusters(model, v);
    Eigen::MatrixXd shape1 = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::MatrixXd shape2 = Eigen::MatrixXd::Zero(dim, dim);
    for (const SpectralCluster& c : clusters) {
      shape1 += lam(rng) * c.projector;
      shape2 += lam(rng) * c.projector;
    }
    commuting_ok = commuting_ok &&
                   commuting_family_check(model, flat, {shape1, shape2}, 1e-9);
  }

  bool pass = spectrum_ok && transport_ok && focal_ok && commuting_ok;
  nlohmann::json j;
  j["model"] = family == "sl_n_R"
                   ? "sl(" + std::to_string(n) + ",R)"
                   : "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
  j["seed"] = seed;
  j["trials"] = trials;
  j["spectrum_max_residual"] = spectrum_residual;
  j["spectrum_ok"] = spectrum_ok;
  j["transport_max_residual"] = transport_residual;
  j["transport_ok"] = transport_ok;
  j["focal_trials"] = focal_trials;
  j["focal_matches"] = focal_matches;
  j["focal_max_error"] = focal_error;
  j["focal_ok"] = focal_ok;
  j["commuting_ok"] = commuting_ok;
  j["pass"] = pass;
  std::cout << j.dump(2) << "\n";
  return pass ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "equifocal: catalog tables, focal arrangements, orbit spectra, and "
      "matrix-model oracles for isometric actions on symmetric spaces"};
  app.require_subcommand(1);

  std::string default_spaces = catalog_dir() + "/symmetric_spaces.json";
  std::string default_actions = catalog_dir() + "/hermann_actions.json";
  int rc = kOk;

  // table1
  auto* table1 = app.add_subcommand(
      "table1", "reproduce the spectral-capacity column of the space catalog");
  auto t1_catalog = std::make_shared<std::string>(default_spaces);
  auto t1_out = std::make_shared<std::string>("-");
  table1->add_option("--catalog", *t1_catalog, "space catalog JSON path");
  table1->add_option("--out", *t1_out, "CSV output path ('-' for stdout)");
  table1->callback([&, t1_catalog, t1_out]() {
    rc = cmd_table1(*t1_catalog, *t1_out);
  });

  // hermann
  auto* hermann = app.add_subcommand(
      "hermann", "reproduce the maximal distinct-eigenvalue counts of the "
                 "action catalog");
  auto h_spaces = std::make_shared<std::string>(default_spaces);
  auto h_actions = std::make_shared<std::string>(default_actions);
  auto h_out = std::make_shared<std::string>("-");
  hermann->add_option("--spaces", *h_spaces, "space catalog JSON path");
  hermann->add_option("--catalog", *h_actions, "action catalog JSON path");
  hermann->add_option("--out", *h_out, "CSV output path ('-' for stdout)");
  hermann->callback([&, h_spaces, h_actions, h_out]() {
    rc = cmd_hermann(*h_spaces, *h_actions, *h_out);
  });

  // arrange
  auto* arrange = app.add_subcommand(
      "arrange", "focal arrangement of one catalog action at a section point");
  auto a_spaces = std::make_shared<std::string>(default_spaces);
  auto a_actions = std::make_shared<std::string>(default_actions);
  auto a_space = std::make_shared<std::string>();
  auto a_params = std::make_shared<std::string>();
  auto a_h = std::make_shared<std::string>();
  auto a_xi = std::make_shared<std::string>();
  auto a_jrange = std::make_shared<std::string>("-3..3");
  auto a_out = std::make_shared<std::string>("-");
  auto a_svg = std::make_shared<std::string>();
  arrange->add_option("--spaces", *a_spaces, "space catalog JSON path");
  arrange->add_option("--catalog", *a_actions, "action catalog JSON path");
  arrange->add_option("--space", *a_space, "space label, e.g. AI")->required();
  arrange->add_option("--params", *a_params, "space parameters, e.g. n=3");
  arrange->add_option("--action", *a_h, "acting-group label, e.g. SO(3)")
      ->required();
  arrange
      ->add_option("--xi", *a_xi,
                   "section point: ambient coordinates, or one pairing per "
                   "simple root")
      ->required();
  arrange->add_option("--j-range", *a_jrange, "imaginary level range a..b");
  arrange->add_option("--out", *a_out, "CSV output path ('-' for stdout)");
  arrange->add_option("--svg", *a_svg, "SVG output path (rank-2 spaces)");
  arrange->callback([&, a_spaces, a_actions, a_space, a_params, a_h, a_xi,
                     a_jrange, a_out, a_svg]() {
    rc = cmd_arrange(*a_spaces, *a_actions, *a_space, *a_params, *a_h, *a_xi,
                     *a_jrange, *a_out, *a_svg);
  });

  // spectra
  auto* spectra = app.add_subcommand(
      "spectra", "closed-form shape spectrum of one catalog action");
  auto s_spaces = std::make_shared<std::string>(default_spaces);
  auto s_actions = std::make_shared<std::string>(default_actions);
  auto s_space = std::make_shared<std::string>();
  auto s_params = std::make_shared<std::string>();
  auto s_h = std::make_shared<std::string>();
  auto s_xi = std::make_shared<std::string>();
  auto s_eta = std::make_shared<std::string>();
  auto s_tol = std::make_shared<double>(1e-8);
  auto s_distinct = std::make_shared<bool>(false);
  auto s_out = std::make_shared<std::string>("-");
  spectra->add_option("--spaces", *s_spaces, "space catalog JSON path");
  spectra->add_option("--catalog", *s_actions, "action catalog JSON path");
  spectra->add_option("--space", *s_space, "space label")->required();
  spectra->add_option("--params", *s_params, "space parameters");
  spectra->add_option("--action", *s_h, "acting-group label")->required();
  spectra->add_option("--xi", *s_xi, "section basepoint")->required();
  spectra->add_option("--eta", *s_eta, "section normal direction")->required();
  spectra->add_option("--tol", *s_tol, "clustering tolerance for --distinct");
  spectra->add_flag("--distinct", *s_distinct,
                    "emit JSON distinct-count summary instead of CSV");
  spectra->add_option("--out", *s_out, "output path ('-' for stdout)");
  spectra->callback([&, s_spaces, s_actions, s_space, s_params, s_h, s_xi,
                     s_eta, s_tol, s_distinct, s_out]() {
    rc = cmd_spectra(*s_spaces, *s_actions, *s_space, *s_params, *s_h, *s_xi,
                     *s_eta, *s_tol, *s_distinct, *s_out);
  });

  // focal-radii
  auto* radii = app.add_subcommand(
      "focal-radii", "complex focal radii of one spectral pair");
  auto r_lambda = std::make_shared<double>(0.0);
  auto r_beta = std::make_shared<double>(0.0);
  auto r_jrange = std::make_shared<std::string>("-3..3");
  auto r_out = std::make_shared<std::string>("-");
  radii->add_option("--lambda", *r_lambda, "shape eigenvalue")->required();
  radii->add_option("--beta", *r_beta, "root value at the normal (>= 0)")
      ->required();
  radii->add_option("--j-range", *r_jrange, "imaginary level range a..b");
  radii->add_option("--out", *r_out, "CSV output path ('-' for stdout)");
  radii->callback([&, r_lambda, r_beta, r_jrange, r_out]() {
    rc = cmd_focal_radii(*r_lambda, *r_beta, *r_jrange, *r_out);
  });

  // roots-check
  auto* roots = app.add_subcommand(
      "roots-check", "axiom report for one built-in root system");
  auto rc_type = std::make_shared<std::string>();
  auto rc_rank = std::make_shared<int>(0);
  roots->add_option("--type", *rc_type, "system type (A, B, C, D, BC, E6, "
                                        "E7, E8, F4, G2)")
      ->required();
  roots->add_option("--rank", *rc_rank, "rank")->required();
  roots->callback(
      [&, rc_type, rc_rank]() { rc = cmd_roots_check(*rc_type, *rc_rank); });

  // weyl-order
  auto* weyl = app.add_subcommand(
      "weyl-order", "reflection-group order, optionally verified by closure");
  auto w_type = std::make_shared<std::string>();
  auto w_rank = std::make_shared<int>(0);
  auto w_brute = std::make_shared<bool>(false);
  weyl->add_option("--type", *w_type, "system type")->required();
  weyl->add_option("--rank", *w_rank, "rank")->required();
  weyl->add_flag("--brute-force", *w_brute,
                 "verify by generating the full group");
  weyl->callback([&, w_type, w_rank, w_brute]() {
    rc = cmd_weyl_order(*w_type, *w_rank, *w_brute);
  });

  // oracle
  auto* oracle = app.add_subcommand(
      "oracle", "randomized invariant suites on one matrix model");
  auto o_model = std::make_shared<std::string>();
  auto o_n = std::make_shared<int>(0);
  auto o_p = std::make_shared<int>(0);
  auto o_q = std::make_shared<int>(0);
  auto o_seed = std::make_shared<unsigned long long>(0);
  auto o_trials = std::make_shared<int>(100);
  auto o_tmax = std::make_shared<double>(5.0);
  oracle->add_option("--model", *o_model, "model family: sl_n_R or so_p_q")
      ->required()
      ->check(CLI::IsMember({"sl_n_R", "so_p_q"}));
  oracle->add_option("--n", *o_n, "size for sl_n_R");
  oracle->add_option("--p", *o_p, "first signature index for so_p_q");
  oracle->add_option("--q", *o_q, "second signature index for so_p_q");
  oracle->add_option("--seed", *o_seed, "random seed");
  oracle->add_option("--trials", *o_trials, "trials for randomized suites")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--t-max", *o_tmax, "focal search bound");
  oracle->callback([&, o_model, o_n, o_p, o_q, o_seed, o_trials, o_tmax]() {
    if (*o_model == "sl_n_R" && *o_n == 0)
      throw CLI::ValidationError("--model sl_n_R requires --n");
    if (*o_model == "so_p_q" && (*o_p == 0 || *o_q == 0))
      throw CLI::ValidationError("--model so_p_q requires --p and --q");
    rc = cmd_oracle(*o_model, *o_n, *o_p, *o_q, *o_seed, *o_trials, *o_tmax);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return rc;
}
