#pragma once

#include "thetagroup/rootsystem.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace thetagroup {

/// Sparse integer combination of basis elements.
using IntTerms = std::vector<std::pair<int, int>>;

/// Polynomial over a Field, ascending coefficients.
using FieldPoly = std::vector<Scalar>;

FieldPoly field_poly_trim(FieldPoly p);
FieldPoly field_poly_gcd(FieldPoly a, FieldPoly b);
FieldPoly field_poly_lcm(const FieldPoly& a, const FieldPoly& b);
FieldPoly field_poly_derivative(const FieldPoly& p);
bool field_poly_squarefree(const FieldPoly& p);

/// Chevalley basis {h_i} u {e_beta} with integer structure constants.
/// Basis index i < rank is h_{alpha_i}; index rank + k is e_{root k}.
class LieAlgebra {
 public:
  /// sign_flips: optional +-1 per positive root, applied as a consistent rescaling
  /// e_beta -> eps_beta e_beta (eps_{-beta} = eps_beta).
  LieAlgebra(const RootSystem& rs, FieldPtr field, std::vector<int> sign_flips = {});

  const RootSystem& roots() const { return rs_; }
  const Field& field() const { return *field_; }
  FieldPtr field_ptr() const { return field_; }
  int dim() const { return rank_ + rs_.size(); }
  int rank() const { return rank_; }
  int h(int i) const { return i; }
  int e(int k) const { return rank_ + k; }
  bool is_root_index(int b) const { return b >= rank_; }
  int root_of(int b) const { return b - rank_; }

  /// N_{a,b} for root indices, zero when a + b is not a root.
  int structure_constant(int a, int b) const { return n_[a][b]; }
  /// [basis_i, basis_j] as integer terms.
  const IntTerms& bracket_basis(int i, int j) const { return brk_[static_cast<size_t>(i) * dim() + j]; }

  Vec zero() const { return zero_vec(*field_, dim()); }
  Vec basis_vector(int i) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  /// Matrix of ad x (column j = [x, b_j]).
  Mat ad(const Vec& x) const;
  IntMat ad_int(const IntTerms& x) const;

  bool is_nilpotent(const Vec& x) const;
  /// Minimal polynomial of ad x.
  FieldPoly ad_min_poly(const Vec& x) const;
  bool is_semisimple(const Vec& x) const;
  /// dim {y in span(sub) : [y, x] = 0}; throws if span(sub) is not a subalgebra
  /// (skipped when check_closed is false).
  int centralizer_dim(const Vec& x, const std::vector<Vec>& sub, bool check_closed = true) const;
  /// Basis of the centralizer of x inside span(sub).
  std::vector<Vec> centralizer(const Vec& x, const std::vector<Vec>& sub) const;
  bool is_subalgebra(const std::vector<Vec>& sub) const;

  /// sum (ad x)^k / k! over the field; throws when x is not nilpotent or the
  /// characteristic is too small.
  Mat exp_ad_nilpotent(const Vec& x) const;
  /// exp(ad e_beta) over the integers.
  IntMat exp_ad_root(int root) const;
  /// n_beta = exp(ad e_beta) exp(ad -e_{-beta}) exp(ad e_beta).
  IntMat reflection_rep(int root) const;

  /// Jacobi identity on all triples (exhaustive) or on `samples` random triples.
  bool check_jacobi(std::uint64_t seed = 0, long samples = -1) const;
  /// Antisymmetry N_{a,b} = -N_{b,a} = -N_{-a,-b} and |N_{a,b}| = p + 1.
  bool check_structure_constants() const;

  /// "e_1100", "f_1122" (for e of a negative root), "h_2".
  std::string basis_name(int b) const;
  std::string element_str(const Vec& x) const;
  /// Parse "e_1100+e_0011+f_1122" style sums (coefficients default to 1, "-" allowed).
  Vec parse_element(const std::string& s) const;

 private:
  void compute_structure_constants(const std::vector<int>& flips);
  void apply_ad_sparse(const std::vector<std::pair<int, Scalar>>& x, const Vec& v, Vec& out) const;
  RootSystem rs_;
  FieldPtr field_;
  int rank_ = 0;
  std::vector<std::vector<int>> n_;
  std::vector<IntTerms> brk_;
};

/// Sparse view of a vector's nonzero entries.
std::vector<std::pair<int, Scalar>> sparse_of(const Vec& v);

}  // namespace thetagroup
