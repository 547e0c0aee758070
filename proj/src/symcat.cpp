/* This is symcat.cpp: the symmetric-space catalog loader (family templates
   with an integer expression language), length-class multiplicity
   attachment, and the positive-root counting behind the spectral capacity
   m = 2(n_pos - n_mult1) + n_mult1. */
#include "equifocal/symcat.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>

namespace equifocal {

namespace {

// ---- integer expression language ------------------------------------------
// expr := or; or := and ('||' and)*; and := cmp ('&&' cmp)*;
// cmp := add (relop add)?; add := mul (('+'|'-') mul)*;
// mul := unary (('*'|'/'|'%') unary)*; unary := ('-'|'!') unary | atom;
// atom := integer | identifier | '(' expr ')'.
struct ExprParser {
  const std::string& s;
  const std::map<std::string, long long>& vars;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }

  bool eat(const char* tok) {
    skip();
    size_t len = std::string(tok).size();
    if (s.compare(pos, len, tok) != 0) return false;
    // Do not let '<' match the front of '<=' and similar.
    if ((std::string(tok) == "<" || std::string(tok) == ">") &&
        pos + 1 < s.size() && s[pos + 1] == '=')
      return false;
    pos += len;
    return true;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("expression \"" + s + "\": " + why);
  }

  long long parse_or() {
    long long v = parse_and();
    while (eat("||")) {
      long long r = parse_and();
      v = (v != 0 || r != 0) ? 1 : 0;
    }
    return v;
  }

  long long parse_and() {
    long long v = parse_cmp();
    while (eat("&&")) {
      long long r = parse_cmp();
      v = (v != 0 && r != 0) ? 1 : 0;
    }
    return v;
  }

  long long parse_cmp() {
    long long v = parse_add();
    if (eat("==")) return v == parse_add() ? 1 : 0;
    if (eat("!=")) return v != parse_add() ? 1 : 0;
    if (eat("<=")) return v <= parse_add() ? 1 : 0;
    if (eat(">=")) return v >= parse_add() ? 1 : 0;
    if (eat("<")) return v < parse_add() ? 1 : 0;
    if (eat(">")) return v > parse_add() ? 1 : 0;
    return v;
  }

  long long parse_add() {
    long long v = parse_mul();
    while (true) {
      if (eat("+")) v += parse_mul();
      else if (eat("-")) v -= parse_mul();
      else return v;
    }
  }

  long long parse_mul() {
    long long v = parse_unary();
    while (true) {
      if (eat("*")) v *= parse_unary();
      else if (eat("/")) {
        long long d = parse_unary();
        if (d == 0) fail("division by zero");
        v /= d;
      } else if (eat("%")) {
        long long d = parse_unary();
        if (d == 0) fail("division by zero");
        v %= d;
      } else return v;
    }
  }

  long long parse_unary() {
    if (eat("-")) return -parse_unary();
    if (eat("!")) return parse_unary() == 0 ? 1 : 0;
    return parse_atom();
  }

  long long parse_atom() {
    skip();
    if (pos >= s.size()) fail("unexpected end");
    if (s[pos] == '(') {
      ++pos;
      long long v = parse_or();
      skip();
      if (pos >= s.size() || s[pos] != ')') fail("missing ')'");
      ++pos;
      return v;
    }
    if (std::isdigit((unsigned char)s[pos])) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
      return std::stoll(s.substr(start, pos - start));
    }
    if (std::isalpha((unsigned char)s[pos]) || s[pos] == '_') {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      if (name == "true") return 1;
      if (name == "false") return 0;
      auto it = vars.find(name);
      if (it == vars.end()) fail("unknown variable '" + name + "'");
      return it->second;
    }
    fail(std::string("unexpected character '") + s[pos] + "'");
  }
};

long long eval_expr_json(const nlohmann::json& j, const std::string& context,
                         const std::map<std::string, long long>& vars) {
  if (j.is_number_integer()) return j.get<long long>();
  if (j.is_string()) return eval_int_expr(j.get<std::string>(), vars);
  throw std::invalid_argument(context + ": expected an integer or expression string");
}

std::string substitute_name(const std::string& tmpl,
                            const std::map<std::string, long long>& vars) {
  std::string out;
  size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] != '{') {
      out += tmpl[i++];
      continue;
    }
    size_t close = tmpl.find('}', i);
    if (close == std::string::npos)
      throw std::invalid_argument("name template \"" + tmpl + "\": missing '}'");
    out += std::to_string(eval_int_expr(tmpl.substr(i + 1, close - i - 1), vars));
    i = close + 1;
  }
  return out;
}

const nlohmann::json& require_field(const nlohmann::json& j, const char* key,
                                    const std::string& context) {
  auto it = j.find(key);
  if (it == j.end())
    throw std::invalid_argument(context + ": missing field '" + key + "'");
  return *it;
}

}  // namespace

long long eval_int_expr(const std::string& expr,
                        const std::map<std::string, long long>& vars) {
  ExprParser p{expr, vars};
  long long v = p.parse_or();
  p.skip();
  if (p.pos != expr.size()) p.fail("trailing characters");
  return v;
}

std::string length_class(const std::string& type, const Rational& norm_square) {
  auto unknown = [&]() -> std::string {
    throw std::invalid_argument("length_class: type " + type +
                                " has no root of squared length " +
                                norm_square.str());
  };
  if (type == "A" || type == "D" || type == "E6" || type == "E7" || type == "E8")
    return norm_square == Rational(2) ? "all" : unknown();
  if (type == "B") {
    if (norm_square == Rational(1)) return "short";
    if (norm_square == Rational(2)) return "long";
    return unknown();
  }
  if (type == "C") {
    if (norm_square == Rational(2)) return "short";
    if (norm_square == Rational(4)) return "long";
    return unknown();
  }
  if (type == "BC") {
    if (norm_square == Rational(1)) return "short";
    if (norm_square == Rational(2)) return "middle";
    if (norm_square == Rational(4)) return "double";
    return unknown();
  }
  if (type == "F4") {
    if (norm_square == Rational(1)) return "short";
    if (norm_square == Rational(2)) return "long";
    return unknown();
  }
  if (type == "G2") {
    if (norm_square == Rational(2)) return "short";
    if (norm_square == Rational(6)) return "long";
    return unknown();
  }
  throw std::invalid_argument("length_class: unknown type " + type);
}

RootSystem restricted_system(const SymmetricSpaceDescriptor& desc) {
  RootSystem rs = build_root_system(desc.restricted_type, desc.rank);
  rs.label = desc.name;
  // A multiplicity key must name a class the type can have (so typos and
  // wrong-type keys fail loudly); a valid class may still be absent at low
  // rank (rank-one BC systems have no 'middle' roots).
  std::vector<std::string> valid;
  if (desc.restricted_type == "BC")
    valid = {"short", "middle", "double"};
  else if (desc.restricted_type == "B" || desc.restricted_type == "C" ||
           desc.restricted_type == "F4" || desc.restricted_type == "G2")
    valid = {"short", "long"};
  else
    valid = {"all"};
  for (const auto& entry : desc.multiplicities)
    if (std::find(valid.begin(), valid.end(), entry.first) == valid.end())
      throw std::invalid_argument(desc.label + " (" + desc.name +
                                  "): '" + entry.first +
                                  "' is not a length class of type " +
                                  desc.restricted_type);
  for (Root& r : rs.roots) {
    std::string cls = length_class(desc.restricted_type, norm_sq(r.vector));
    auto it = desc.multiplicities.find(cls);
    if (it == desc.multiplicities.end())
      throw std::invalid_argument(desc.label + " (" + desc.name +
                                  "): no multiplicity for length class '" +
                                  cls + "'");
    r.multiplicity = it->second;
  }
  return rs;
}

PositiveRootCounts count_positive_roots(const RootSystem& rs) {
  PositiveRootCounts c;
  for (const Root& r : positive_roots(rs)) {
    ++c.n_pos;
    if (r.multiplicity == 1) ++c.n_mult1;
  }
  c.m = 2 * (c.n_pos - c.n_mult1) + c.n_mult1;
  return c;
}

PositiveRootCounts m_invariant(const SymmetricSpaceDescriptor& desc) {
  return count_positive_roots(restricted_system(desc));
}

long long distinct_eigenvalue_bound(const SymmetricSpaceDescriptor& desc, int codim,
                          int dim_centralizer) {
  if (codim < 1 || codim > desc.rank)
    throw std::invalid_argument("distinct_eigenvalue_bound: codim must lie in [1, rank]");
  if (dim_centralizer < 0)
    throw std::invalid_argument("distinct_eigenvalue_bound: negative centralizer dimension");
  return m_invariant(desc).m + dim_centralizer - codim;
}

std::vector<SymmetricSpaceDescriptor> catalog_from_json(const nlohmann::json& j) {
  std::vector<SymmetricSpaceDescriptor> out;
  const nlohmann::json& families = require_field(j, "families", "catalog");
  if (!families.is_array())
    throw std::invalid_argument("catalog: 'families' must be an array");

  for (const nlohmann::json& family : families) {
    std::string label =
        require_field(family, "label", "family").get<std::string>();
    std::string context = "family " + label;
    std::string name_tmpl =
        require_field(family, "name", context).get<std::string>();
    const nlohmann::json& cases = require_field(family, "cases", context);
    if (!cases.is_array() || cases.empty())
      throw std::invalid_argument(context + ": 'cases' must be a non-empty array");

    // Parameter grid (empty for fixed rows), iterated in sorted-name order.
    std::vector<std::string> param_names;
    std::vector<long long> lo, hi;
    if (family.contains("params")) {
      for (auto it = family["params"].begin(); it != family["params"].end(); ++it) {
        const nlohmann::json& range = it.value();
        if (!range.is_array() || range.size() != 2)
          throw std::invalid_argument(context + ": parameter '" + it.key() +
                                      "' range must be [lo, hi]");
        param_names.push_back(it.key());
        lo.push_back(range[0].get<long long>());
        hi.push_back(range[1].get<long long>());
      }
    }
    std::string constraint =
        family.contains("constraint") ? family["constraint"].get<std::string>()
                                      : std::string("true");

    std::vector<long long> cursor = lo;
    bool done = false;
    while (!done) {
      std::map<std::string, long long> vars;
      for (size_t i = 0; i < param_names.size(); ++i)
        vars[param_names[i]] = cursor[i];

      if (eval_int_expr(constraint, vars) != 0) {
        const nlohmann::json* chosen = nullptr;
        for (const nlohmann::json& c : cases) {
          std::string when =
              c.contains("when") ? c["when"].get<std::string>() : "true";
          if (eval_int_expr(when, vars) != 0) {
            chosen = &c;
            break;
          }
        }
        if (!chosen)
          throw std::invalid_argument(context + ": no case matches the parameters");

        SymmetricSpaceDescriptor desc;
        desc.label = label;
        desc.name = param_names.empty() ? name_tmpl
                                        : substitute_name(name_tmpl, vars);
        desc.params = vars;
        desc.restricted_type =
            require_field(*chosen, "restricted_type", context).get<std::string>();
        long long rank = eval_expr_json(require_field(*chosen, "rank", context),
                                        context + " rank", vars);
        if (rank < 1 || rank > 1000)
          throw std::invalid_argument(context + ": rank " +
                                      std::to_string(rank) + " out of range");
        desc.rank = (int)rank;
        const nlohmann::json& mults =
            require_field(*chosen, "multiplicities", context);
        for (auto it = mults.begin(); it != mults.end(); ++it) {
          long long mv = eval_expr_json(it.value(), context + " multiplicity", vars);
          if (mv < 1)
            throw std::invalid_argument(context + ": multiplicity '" + it.key() +
                                        "' must be positive, got " +
                                        std::to_string(mv));
          desc.multiplicities[it.key()] = (int)mv;
        }
        const nlohmann::json& expected =
            require_field(*chosen, "expected", context);
        desc.expected_n_pos = eval_expr_json(
            require_field(expected, "n_pos", context), context, vars);
        desc.expected_n_mult1 = eval_expr_json(
            require_field(expected, "n_mult1", context), context, vars);
        desc.expected_m = eval_expr_json(require_field(expected, "m", context),
                                         context, vars);

        // Validates type/rank consistency and exact length-class coverage.
        try {
          restricted_system(desc);
        } catch (const std::invalid_argument& e) {
          throw std::invalid_argument(context + ": " + e.what());
        }
        out.push_back(std::move(desc));
      }

      // Advance the grid odometer.
      done = true;
      for (size_t i = param_names.size(); i-- > 0;) {
        if (cursor[i] < hi[i]) {
          ++cursor[i];
          for (size_t k = i + 1; k < cursor.size(); ++k) cursor[k] = lo[k];
          done = false;
          break;
        }
      }
      if (param_names.empty()) done = true;
    }
  }
  return out;
}

std::vector<SymmetricSpaceDescriptor> catalog_load(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("catalog_load: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("catalog_load: " + path + ": " + e.what());
  }
  return catalog_from_json(j);
}

std::string catalog_dir() {
  if (const char* env = std::getenv("EQUIFOCAL_CATALOG_DIR"))
    if (*env) return env;
  return EQUIFOCAL_SOURCE_DATA_DIR;
}

const SymmetricSpaceDescriptor* find_space(
    const std::vector<SymmetricSpaceDescriptor>& catalog,
    const std::string& label, const std::map<std::string, long long>& params) {
  for (const SymmetricSpaceDescriptor& d : catalog)
    if (d.label == label && d.params == params) return &d;
  return nullptr;
}

}  // namespace equifocal
