#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace thetagroup {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense integer polynomial, coefficients in ascending degree order.
using IntPoly = std::vector<Int>;

IntPoly poly_trim(IntPoly p);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
/// Exact division by a monic polynomial; throws if the remainder is nonzero.
IntPoly poly_div_exact(const IntPoly& a, const IntPoly& b);
bool poly_divides(const IntPoly& b, const IntPoly& a);
int poly_degree(const IntPoly& p);
std::string poly_to_string(const IntPoly& p, const std::string& var = "t");

IntPoly cyclotomic_poly(int d);
int euler_phi(int n);
std::vector<int> divisors(int n);
/// Multiplicity of Phi_m as a factor of p.
int cyclotomic_multiplicity(IntPoly p, int m);

class Field;

/// Element of a Field. Holds a non-owning pointer to its field, which must
/// outlive it.
class Scalar {
 public:
  Scalar() = default;

  const Field* field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;
  /// True when the value lies in the prime subfield (Q or F_p).
  bool is_rational() const;
  /// Rational value; throws if the scalar is not rational.
  Rat to_rational() const;
  std::int64_t residue() const { return r_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar inverse() const;
  Scalar pow(long long e) const;
  /// this += a*b, avoiding temporaries where possible.
  void add_mul(const Scalar& a, const Scalar& b);

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

 private:
  friend class Field;
  const Field* f_ = nullptr;
  std::int64_t r_ = 0;    // prime mode
  std::vector<Rat> c_;    // cyclotomic mode, size = degree
};

/// Working field: Q(zeta_m) = Q[x]/Phi_m, or F_p with a chosen primitive
/// m-th root of unity.
class Field {
 public:
  enum class Mode { Cyclotomic, Prime };

  static std::shared_ptr<const Field> cyclotomic(int m);
  /// p = 0 selects the smallest prime p > 3 with p = 1 mod m.
  static std::shared_ptr<const Field> prime(int m, std::int64_t p = 0);
  static std::int64_t default_prime(int m);

  Mode mode() const { return mode_; }
  bool is_prime() const { return mode_ == Mode::Prime; }
  int conductor() const { return m_; }
  std::int64_t characteristic() const { return p_; }
  int degree() const { return deg_; }
  const IntPoly& modulus() const { return modulus_; }
  std::string describe() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_rat(const Rat& v) const;
  /// zeta^k for the designated primitive m-th root (k may be negative).
  Scalar zeta(long long k = 1) const;
  /// Primitive d-th root zeta^(m/d); requires d | m.
  Scalar root_of_unity(int d) const;

  // internal arithmetic helpers
  std::int64_t mod(std::int64_t v) const;
  std::int64_t mulmod(std::int64_t a, std::int64_t b) const;
  std::int64_t invmod(std::int64_t a) const;
  void reduce(std::vector<Rat>& prod) const;

 private:
  Field() = default;
  Mode mode_ = Mode::Cyclotomic;
  int m_ = 1;
  std::int64_t p_ = 0;
  std::int64_t zeta_res_ = 1;
  int deg_ = 1;
  IntPoly modulus_;
  // x^k mod Phi_m for k in [deg, 2 deg - 2]
  std::vector<std::vector<Int>> reduction_;
};

using FieldPtr = std::shared_ptr<const Field>;
using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, int n);
bool is_zero_vec(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& s, const Vec& v);

/// Dense matrix over a Field, row-major.
class Mat {
 public:
  Mat() = default;
  Mat(const Field& f, int rows, int cols);
  static Mat identity(const Field& f, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return *f_; }
  Scalar& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Mat operator*(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Vec apply(const Vec& v) const;
  Vec column(int j) const;
  bool operator==(const Mat& o) const;
  bool is_identity() const;
  std::string key() const;

 private:
  const Field* f_ = nullptr;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> a_;
};

/// Row reduction to reduced echelon form in place; returns pivot columns.
std::vector<int> rref(Mat& m);
int rank_of(Mat m);
/// Kernel basis (column vectors), one per free column, in reduced form.
std::vector<Vec> kernel_over_field(const Mat& m);
/// Matrix whose columns are the given vectors.
Mat from_columns(const Field& f, const std::vector<Vec>& cols, int n);
/// Rank of the span of a list of vectors of length n.
int span_rank(const Field& f, const std::vector<Vec>& vs, int n);
bool in_span(const Field& f, const std::vector<Vec>& basis, const Vec& v);

/// Incrementally maintained echelon basis of a subspace of k^n.
class Echelon {
 public:
  Echelon(const Field& f, int n) : f_(&f), n_(n) {}
  /// Adds v to the span; returns false when v was already in it.
  bool add(const Vec& v);
  /// Remainder of v after elimination against the stored basis.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  const Field* f_;
  int n_;
  std::vector<Vec> rows_;  // each normalised to 1 at its pivot
  std::vector<int> pivots_;
};

/// Dense integer matrix, row-major.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  IntMat operator*(const IntMat& o) const;
  IntMat operator-(const IntMat& o) const;
  bool operator==(const IntMat& o) const;
  bool is_identity() const;
  IntMat transpose() const;
  Mat to_field(const Field& f) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> a_;
};

struct SmithForm {
  IntMat S, U, V;  // S = U * A * V
};

SmithForm smith_normal_form(const IntMat& a);
Int determinant(const IntMat& a);
/// Basis (as columns) of the integer kernel {x in Z^n : A x = 0}.
IntMat integer_kernel(const IntMat& a);
/// Whether b lies in the Z-span of the columns of A.
bool in_lattice(const IntMat& a, const std::vector<Int>& b);
/// Characteristic polynomial det(t I - A) of a square integer matrix.
IntPoly char_poly(const IntMat& a);
/// Evaluate an integer polynomial at a square integer matrix.
IntMat poly_eval(const IntPoly& p, const IntMat& a);

}  // namespace thetagroup
