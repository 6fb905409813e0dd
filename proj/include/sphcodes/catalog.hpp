#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sphcodes/codes.hpp"

namespace sphcodes {

/// d + 1 unit vectors with pairwise inner products -1/d; cos(theta) = -1/d.
ClassicalCode gen_simplex(int d);

/// The 2d vectors +-e_i at theta = pi/2.
ClassicalCode gen_cross_polytope(int d);

/// theta = pi/3 codes of size 2, 6, 12, 24, 240 for d = 1, 2, 3, 4, 8.
ClassicalCode gen_kissing(int d);

/// The 12 minimal vectors of the FCC lattice, (+-1, +-1, 0)/sqrt(2) and
/// permutations: a 12-point code at theta = pi/3 with margin exactly 0.
ClassicalCode gen_cuboctahedron();

/// Standard basis e_1, ..., e_d of A^d.
ModularCode gen_orthonormal_modular(AlgebraDescriptor algebra, int d, Angle theta);

/// {(I), (diag(-1, 1))} over M_2(C), d = 1, theta = pi/2: the Gram difference
/// diag(4, 0) satisfies the norm inequality but not the order inequality.
ModularCode gen_norm_order_gap_pair();

using AnyCode = std::variant<ClassicalCode, ModularCode>;

struct CatalogEntry {
  std::string name;
  std::optional<AnyCode> code;  // empty for metadata-only entries
  std::string provenance;
  std::optional<long> known_optimal;
};

struct CatalogInfo {
  std::string name;
  std::string kind;  // "classical" | "modular"
  int d = 0;
  long size = 0;
  Angle theta;
  std::optional<long> known_optimal;
  bool generated = true;
  std::string provenance;
};

/// Fixed listing. Parametric names (simplexN, crossN, orthonormal-mM-dD) are
/// accepted by catalog_generate beyond the listed instances.
std::vector<CatalogInfo> catalog_list();

/// Throws DomainError for unknown names and for metadata-only entries.
CatalogEntry catalog_generate(const std::string& name);

}  // namespace sphcodes
