/* This is symcat.hpp: catalog of irreducible symmetric spaces of non-compact
   type. Each row carries the restricted root system type, its rank, and the
   root multiplicities by length class, all loaded from a JSON data file in
   which parametric families hold integer-expression templates. The module
   computes the positive-root counts (n_pos, n_mult1) and the spectral
   capacity m = 2(n_pos - n_mult1) + n_mult1 for every row. */
#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "equifocal/rootsys.hpp"

namespace equifocal {

struct SymmetricSpaceDescriptor {
  std::string label;  // family tag: AI, AII, AIII, BDI, BDI', DIII, CI, CII,
                      // EI..EIX, FI, FII, G, II-A, II-BD, II-C, II-E6..II-G2
  std::string name;   // display string with parameters substituted
  int rank = 0;       // rank of the space = rank of the restricted system
  std::map<std::string, long long> params;        // e.g. {n:4} or {p:2,q:5}
  std::string restricted_type;                    // build_root_system tag
  std::map<std::string, int> multiplicities;      // length class -> mult
  long long expected_n_pos = 0;                   // catalog data for checking
  long long expected_n_mult1 = 0;
  long long expected_m = 0;
};

struct PositiveRootCounts {
  long long n_pos = 0;    // positive roots, counted without multiplicity
  long long n_mult1 = 0;  // positive roots of multiplicity exactly 1
  long long m = 0;        // 2*(n_pos - n_mult1) + n_mult1
};

// Evaluates an integer expression over the given variables. Supports
// + - * / % (integer, exact-use expected), comparisons, ! && ||, unary minus,
// parentheses, and the literals true/false (1/0). Throws
// std::invalid_argument on malformed input, unknown variables, or division
// by zero.
long long eval_int_expr(const std::string& expr,
                        const std::map<std::string, long long>& vars);

// Materializes every family row of the parsed catalog document; validates
// each row by building its restricted system once. Throws
// std::invalid_argument with the offending family label on schema violations
// or inconsistent type/rank data.
std::vector<SymmetricSpaceDescriptor> catalog_from_json(const nlohmann::json& j);

// catalog_from_json over the file's contents; std::runtime_error when the
// file cannot be read or parsed.
std::vector<SymmetricSpaceDescriptor> catalog_load(const std::string& path);

// Directory holding the shipped data files: the EQUIFOCAL_CATALOG_DIR
// environment variable when set, else the source-tree data directory baked
// in at build time.
std::string catalog_dir();

// Length class of a root of the given squared length within the named system
// type: "all" for the simply-laced types, "short"/"long" for B, C, F4, G2,
// and "short"/"middle"/"double" for BC. Throws std::invalid_argument on a
// squared length the type does not contain.
std::string length_class(const std::string& type, const Rational& norm_square);

// Builds the restricted root system of the row with the catalog
// multiplicities attached per length class. The multiplicity map must cover
// exactly the classes the system contains.
RootSystem restricted_system(const SymmetricSpaceDescriptor& desc);

PositiveRootCounts count_positive_roots(const RootSystem& rs);
PositiveRootCounts m_invariant(const SymmetricSpaceDescriptor& desc);

// Upper bound m + dim_centralizer - codim for the number of distinct shape
// eigenvalues of a submanifold with the given normal codimension and
// centralizer dimension. Requires 1 <= codim <= rank and
// dim_centralizer >= 0.
long long distinct_eigenvalue_bound(const SymmetricSpaceDescriptor& desc, int codim,
                          int dim_centralizer);

// Row with the given label and exact parameter map, or nullptr.
const SymmetricSpaceDescriptor* find_space(
    const std::vector<SymmetricSpaceDescriptor>& catalog,
    const std::string& label, const std::map<std::string, long long>& params);

}  // namespace equifocal
