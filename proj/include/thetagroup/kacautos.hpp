#pragma once

#include "thetagroup/chevalley.hpp"

#include <array>
#include <string>
#include <vector>

namespace thetagroup {

/// Non-negative labels on the nodes of an affine diagram.
struct KacDiagram {
  AffineDiagram affine;
  /// One coefficient per node, in canonical node order.
  std::vector<int> coeffs;

  /// twist * sum of marks times coefficients.
  int order() const;
  /// gcd of the coefficients is 1.
  bool primitive() const;
  /// Compact string in the standard node order, e.g. "11101".
  std::string str() const;
  bool zero_one() const;
};

KacDiagram parse_kac_diagram(const AffineDiagram& affine, const std::string& s);

/// Primitive diagrams of order m, one per orbit of the diagram automorphisms.
std::vector<KacDiagram> enumerate_diagrams(const AffineDiagram& affine, int m, bool zero_one_only);

/// Automorphism of a Chevalley algebra that maps root spaces to root spaces:
/// e_k -> coef[k] e_{perm[k]} and h -> torus * h on the coroot coordinates.
class Automorphism {
 public:
  Automorphism(const LieAlgebra& alg, std::vector<int> perm, std::vector<Scalar> coef, IntMat torus);
  static Automorphism identity(const LieAlgebra& alg);

  const LieAlgebra& algebra() const { return *alg_; }
  int root_image(int k) const { return perm_[k]; }
  const Scalar& coefficient(int k) const { return coef_[k]; }
  const std::vector<int>& root_permutation() const { return perm_; }
  const IntMat& torus() const { return torus_; }

  Vec apply(const Vec& x) const;
  /// (*this) o other.
  Automorphism compose(const Automorphism& other) const;
  Automorphism power(int k) const;
  bool is_identity() const;
  /// Smallest k >= 1 with theta^k = 1; throws beyond `bound`.
  int order(int bound = 1000) const;
  /// theta[x, y] = [theta x, theta y] on all basis pairs.
  bool preserves_bracket() const;
  Mat matrix() const;

 private:
  const LieAlgebra* alg_;
  std::vector<int> perm_;
  std::vector<Scalar> coef_;
  IntMat torus_;
};

/// Ad t with alpha_i(t) = zeta^{n_i}.
Automorphism inner_kac_automorphism(const KacDiagram& d, const LieAlgebra& alg);
/// Triality of D4 fixing e_{alpha} for alpha in +-Delta up to the graph permutation
/// alpha_1 -> alpha_3 -> alpha_4 -> alpha_1.
Automorphism triality_gamma(const LieAlgebra& alg);
/// Ad t o gamma for a D4^(3) diagram.
Automorphism twisted_kac_automorphism(const KacDiagram& d, const LieAlgebra& alg);
/// Dispatches on the diagram's twist.
Automorphism kac_automorphism(const KacDiagram& d, const LieAlgebra& alg);

/// E_{beta_0}, E_{-beta_0}, H_{beta_0} for the twisted construction with sigma a
/// primitive cube root of unity.
std::array<Vec, 3> twisted_beta0_triple(const LieAlgebra& alg, const Scalar& sigma);

/// Eigenspace decomposition g = sum g(i), g(i) the zeta_m^i eigenspace.
struct Grading {
  int m = 1;
  std::vector<std::vector<Vec>> spaces;
  std::vector<int> dims() const;
  int dim(int i) const { return static_cast<int>(spaces[((i % m) + m) % m].size()); }
};

/// Throws when theta^m is not the identity.
Grading grading(const Automorphism& theta, int m);
/// [g(i), g(j)] inside g(i+j) for all pairs of basis vectors.
bool check_grading_compatibility(const Grading& gr, const Automorphism& theta);

struct FixedAlgebraType {
  std::string semisimple;  // "1" when g(0) is a torus
  int center_dim = 0;
  std::string str() const;
};

/// Type of g(0) from its roots relative to the fixed part of the torus.
FixedAlgebraType fixed_algebra_type(const Automorphism& theta);

/// Cocharacter sublattices Y(T_d) = ker p_d(theta*) for d | m.
struct TorusModel {
  IntMat theta;
  int m = 1;
  std::vector<int> divisors;
  std::vector<IntMat> lattices;  // basis columns
  int rank_of(int d) const;
};

TorusModel torus_decomposition(const IntMat& theta_star, int m);
/// Whether the m-torsion of the fixed torus lies in the product of the other pieces.
bool saturation_criterion(const TorusModel& tm);

struct CountingResult {
  Int lhs, rhs;
  bool equal = false;
  /// Diagram string and orbit size for each term of the sum.
  std::vector<std::pair<std::string, Int>> terms;
};

/// Orbit-size sum over primitive diagrams of order m against the number of
/// torus elements of order m (types whose coweight and coroot lattices agree).
CountingResult counting_check(const AffineDiagram& affine, int m);

/// Number of elements of order exactly m in a torus of the given rank.
Int torus_elements_of_order(int rank, int m);

}  // namespace thetagroup
