#include "sphcodes/catalog.hpp"

#include <cmath>
#include <regex>

#include "sphcodes/errors.hpp"

namespace sphcodes {

namespace {

const Angle& pi_over_3() {
  static const Angle a = Angle::from_pi_fraction(Rational(1, 3));
  return a;
}

void normalize_rows(Eigen::MatrixXd& points) {
  for (Eigen::Index i = 0; i < points.rows(); ++i) points.row(i).normalize();
}

ClassicalCode hexagon() {
  const double h = std::sqrt(3.0) / 2.0;
  Eigen::MatrixXd p(6, 2);
  p << 1.0, 0.0, 0.5, h, -0.5, h, -1.0, 0.0, -0.5, -h, 0.5, -h;
  return make_classical_code(2, pi_over_3(), std::move(p));
}

ClassicalCode icosahedron() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  Eigen::MatrixXd p(12, 3);
  int row = 0;
  // Cyclic permutations of (0, +-1, +-phi).
  for (int shift = 0; shift < 3; ++shift) {
    for (double s1 : {1.0, -1.0}) {
      for (double s2 : {1.0, -1.0}) {
        const double v[3] = {0.0, s1, s2 * phi};
        for (int c = 0; c < 3; ++c) p(row, (c + shift) % 3) = v[c];
        ++row;
      }
    }
  }
  normalize_rows(p);
  return make_classical_code(3, pi_over_3(), std::move(p));
}

// All vectors with two nonzero entries +-1 among `dim` coordinates, scaled by 1/sqrt(2).
Eigen::MatrixXd two_sparse_signs(int dim) {
  const int count = 2 * dim * (dim - 1);
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(count, dim);
  int row = 0;
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      for (double si : {1.0, -1.0}) {
        for (double sj : {1.0, -1.0}) {
          p(row, i) = si;
          p(row, j) = sj;
          ++row;
        }
      }
    }
  }
  return p / std::sqrt(2.0);
}

ClassicalCode e8() {
  Eigen::MatrixXd p(240, 8);
  p.topRows(112) = two_sparse_signs(8);
  int row = 112;
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
    for (int c = 0; c < 8; ++c) p(row, c) = (mask >> c) & 1 ? -0.5 : 0.5;
    ++row;
  }
  p.bottomRows(128) /= std::sqrt(2.0);
  return make_classical_code(8, pi_over_3(), std::move(p));
}

ClassicalCode generate_classical_or_throw(const std::string& name) {
  static const std::regex simplex_re("simplex([0-9]+)"), cross_re("cross([0-9]+)");
  std::smatch m;
  if (std::regex_match(name, m, simplex_re)) return gen_simplex(std::stoi(m[1]));
  if (std::regex_match(name, m, cross_re)) return gen_cross_polytope(std::stoi(m[1]));
  throw DomainError("unknown catalog name '" + name + "'");
}

}  // namespace

ClassicalCode gen_simplex(int d) {
  if (d < 1 || d > 4096) throw DomainError("gen_simplex: d must lie in [1, 4096]");
  // Vertices e_i of R^{d+1} in the Helmert basis of the hyperplane sum(x) = 0.
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(d + 1, d);
  for (int k = 1; k <= d; ++k) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
    for (int i = 0; i < k; ++i) p(i, k - 1) = scale;
    p(k, k - 1) = -k * scale;
  }
  normalize_rows(p);
  return make_classical_code(d, Angle::from_cos(Rational(-1, d)), std::move(p));
}

ClassicalCode gen_cross_polytope(int d) {
  if (d < 1 || d > 4096) throw DomainError("gen_cross_polytope: d must lie in [1, 4096]");
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(2 * d, d);
  for (int i = 0; i < d; ++i) {
    p(2 * i, i) = 1.0;
    p(2 * i + 1, i) = -1.0;
  }
  return make_classical_code(d, Angle::from_pi_fraction(Rational(1, 2)), std::move(p));
}

ClassicalCode gen_kissing(int d) {
  switch (d) {
    case 1: {
      Eigen::MatrixXd p(2, 1);
      p << 1.0, -1.0;
      return make_classical_code(1, pi_over_3(), std::move(p));
    }
    case 2:
      return hexagon();
    case 3:
      return icosahedron();
    case 4:
      return make_classical_code(4, pi_over_3(), two_sparse_signs(4));
    case 8:
      return e8();
    default:
      throw DomainError("gen_kissing: no generator for d = " + std::to_string(d) + " (supported: 1, 2, 3, 4, 8)");
  }
}

ClassicalCode gen_cuboctahedron() { return make_classical_code(3, pi_over_3(), two_sparse_signs(3)); }

ModularCode gen_orthonormal_modular(AlgebraDescriptor algebra, int d, Angle theta) {
  if (d < 1) throw DomainError("gen_orthonormal_modular: d must be positive");
  std::vector<ModuleVector> vectors;
  for (int i = 0; i < d; ++i) vectors.push_back(ModuleVector::basis(algebra, d, i));
  return make_modular_code(algebra, d, theta, std::move(vectors));
}

ModularCode gen_norm_order_gap_pair() {
  const AlgebraDescriptor m2 = AlgebraDescriptor::matrix(2);
  ComplexMatrix u = ComplexMatrix::Zero(2, 2);
  u(0, 0) = -1.0;
  u(1, 1) = 1.0;
  std::vector<ModuleVector> vectors{ModuleVector(m2, {AlgebraElement::identity(m2)}),
                                    ModuleVector(m2, {AlgebraElement(m2, u)})};
  return make_modular_code(m2, 1, Angle::from_pi_fraction(Rational(1, 2)), std::move(vectors));
}

std::vector<CatalogInfo> catalog_list() {
  const Angle third = pi_over_3();
  const Angle right = Angle::from_pi_fraction(Rational(1, 2));
  std::vector<CatalogInfo> out{
      {"antipodal", "classical", 1, 2, third, 2, true, "two antipodal points"},
      {"hexagon", "classical", 2, 6, third, 6, true, "unit sixth roots of unity"},
      {"icosahedron", "classical", 3, 12, third, 12, true, "icosahedron vertices (0, +-1, +-phi), golden ratio"},
      {"cuboctahedron", "classical", 3, 12, third, 12, true, "FCC minimal vectors (+-1, +-1, 0)/sqrt(2)"},
      {"d4", "classical", 4, 24, third, 24, true, "D4 minimal vectors (+-1, +-1, 0, 0)/sqrt(2)"},
      {"e8", "classical", 8, 240, third, 240, true, "E8 roots normalized by 1/sqrt(2)"},
      {"leech", "classical", 24, 196560, third, 196560, false, "Leech lattice minimal vectors (metadata only)"},
  };
  for (int d : {2, 3, 4, 8}) {
    out.push_back({"simplex" + std::to_string(d), "classical", d, d + 1, Angle::from_cos(Rational(-1, d)),
                   std::nullopt, true, "regular simplex, cos(theta) = -1/d"});
  }
  for (int d : {2, 3, 4}) {
    out.push_back({"cross" + std::to_string(d), "classical", d, 2 * d, right, std::nullopt, true,
                   "cross-polytope +-e_i"});
  }
  for (int d : {3, 4}) {
    out.push_back({"orthonormal-m2-d" + std::to_string(d), "modular", d, d, third, std::nullopt, true,
                   "standard basis of M_2(C)^d"});
  }
  out.push_back({"gap-pair", "modular", 1, 2, right, std::nullopt, true,
                 "M_2(C) pair passing the norm inequality but not the order inequality"});
  return out;
}

CatalogEntry catalog_generate(const std::string& name) {
  static const std::regex ortho_re("orthonormal-m([0-9]+)-d([0-9]+)");
  CatalogEntry entry;
  entry.name = name;
  for (const auto& info : catalog_list()) {
    if (info.name != name) continue;
    if (!info.generated) {
      throw DomainError("catalog entry '" + name + "' is metadata only (n = " + std::to_string(info.size) +
                        "); no generator is provided");
    }
    entry.provenance = info.provenance;
    entry.known_optimal = info.known_optimal;
  }
  std::smatch m;
  if (name == "antipodal") entry.code = gen_kissing(1);
  else if (name == "hexagon") entry.code = gen_kissing(2);
  else if (name == "icosahedron") entry.code = gen_kissing(3);
  else if (name == "cuboctahedron") entry.code = gen_cuboctahedron();
  else if (name == "d4") entry.code = gen_kissing(4);
  else if (name == "e8") entry.code = gen_kissing(8);
  else if (name == "gap-pair") entry.code = gen_norm_order_gap_pair();
  else if (std::regex_match(name, m, ortho_re)) {
    const int size = std::stoi(m[1]);
    const int d = std::stoi(m[2]);
    if (size < 1 || size > 64 || d < 1 || d > 64) throw DomainError("orthonormal catalog entry out of range");
    const AlgebraDescriptor alg = size == 1 ? AlgebraDescriptor::scalar() : AlgebraDescriptor::matrix(size);
    entry.code = gen_orthonormal_modular(alg, d, pi_over_3());
    if (entry.provenance.empty()) entry.provenance = "standard basis of M_" + std::to_string(size) + "(C)^d";
  } else {
    entry.code = generate_classical_or_throw(name);
    if (entry.provenance.empty()) entry.provenance = name.rfind("simplex", 0) == 0 ? "regular simplex" : "cross-polytope";
  }
  return entry;
}

}  // namespace sphcodes
