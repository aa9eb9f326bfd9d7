#include "doctest.h"
#include "thetagroup/exactalg.hpp"

#include <random>

using namespace thetagroup;

namespace {

IntPoly x_pow_minus_one(int d) {
  IntPoly p(d + 1, 0);
  p[0] = -1;
  p[d] = 1;
  return p;
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-5, 5);
  Scalar s = f.zero();
  for (int k = 0; k < f.conductor(); ++k) {
    int c = coef(rng);
    if (c != 0) s += f.from_rat(Rat(c, 1 + (k % 3))) * f.zeta(k);
  }
  return s;
}

IntMat random_intmat(int r, int c, std::mt19937_64& rng, int bound = 6) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == IntPoly{-1, 1});
  CHECK(cyclotomic_poly(4) == IntPoly{1, 0, 1});
  CHECK(cyclotomic_poly(12) == IntPoly{1, 0, -1, 0, 1});
  for (int d = 1; d <= 64; ++d) {
    IntPoly prod{1};
    for (int e : divisors(d)) prod = poly_mul(prod, cyclotomic_poly(e));
    CHECK(prod == x_pow_minus_one(d));
    CHECK(poly_degree(cyclotomic_poly(d)) == euler_phi(d));
  }
  CHECK(cyclotomic_multiplicity(poly_mul(cyclotomic_poly(6), cyclotomic_poly(6)), 6) == 2);
  CHECK(cyclotomic_multiplicity(cyclotomic_poly(12), 6) == 0);
}

TEST_CASE("field configuration") {
  CHECK(Field::default_prime(3) == 7);
  CHECK(Field::default_prime(4) == 5);
  CHECK(Field::default_prime(12) == 13);
  CHECK(Field::default_prime(8) == 17);
  for (int m : {1, 2, 3, 4, 6, 8, 9, 12}) {
    auto fp = Field::prime(m);
    Scalar z = fp->zeta();
    CHECK(z.pow(m).is_one());
    for (int d : divisors(m))
      if (d < m) CHECK_FALSE(z.pow(d).is_one());
    auto fc = Field::cyclotomic(m);
    CHECK(fc->modulus() == cyclotomic_poly(m));
    CHECK(fc->zeta().pow(m).is_one());
    for (int d : divisors(m))
      if (d < m) CHECK_FALSE(fc->zeta().pow(d).is_one());
  }
  CHECK_THROWS(Field::prime(4, 7));
  CHECK_THROWS(Field::prime(2, 3));
}

TEST_CASE("field arithmetic round trips") {
  std::mt19937_64 rng(1);
  for (int m : {3, 4, 8, 9, 12}) {
    for (auto f : {Field::cyclotomic(m), Field::prime(m)}) {
      for (int trial = 0; trial < 40; ++trial) {
        Scalar a = random_scalar(*f, rng);
        Scalar b = random_scalar(*f, rng);
        CHECK((a + (-a)).is_zero());
        if (!b.is_zero()) CHECK((a * b) / b == a);
        Scalar c = random_scalar(*f, rng);
        CHECK(a * (b + c) == a * b + a * c);
      }
    }
  }
}

TEST_CASE("smith normal form") {
  {
    auto sf = smith_normal_form(IntMat::identity(3));
    CHECK(sf.S.is_identity());
  }
  {
    IntMat a(2, 2);
    a(0, 0) = 2;
    a(1, 1) = 3;
    auto sf = smith_normal_form(a);
    CHECK(sf.S(0, 0) == 1);
    CHECK(sf.S(1, 1) == 6);
  }
  {
    IntMat z(2, 3);
    CHECK(smith_normal_form(z).S == z);
  }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5);
    IntMat a = random_intmat(r, c, rng);
    if (trial % 4 == 0) a = a * random_intmat(c, c, rng, 1);  // rank deficiency
    auto sf = smith_normal_form(a);
    CHECK(sf.U * a * sf.V == sf.S);
    Int du = determinant(sf.U), dv = determinant(sf.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (i != j) CHECK(sf.S(i, j) == 0);
    int k = std::min(r, c);
    for (int i = 0; i < k; ++i) CHECK(sf.S(i, i) >= 0);
    for (int i = 0; i + 1 < k; ++i) {
      if (sf.S(i, i) == 0)
        CHECK(sf.S(i + 1, i + 1) == 0);
      else
        CHECK(sf.S(i + 1, i + 1) % sf.S(i, i) == 0);
    }
  }
}

TEST_CASE("integer kernels and lattice membership") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    IntMat a = random_intmat(2, 4, rng);
    IntMat k = integer_kernel(a);
    CHECK(k.cols() == 4 - rank_of(a.to_field(*Field::cyclotomic(1))));
    IntMat prod = a * k;
    for (int i = 0; i < prod.rows(); ++i)
      for (int j = 0; j < prod.cols(); ++j) CHECK(prod(i, j) == 0);
    std::vector<Int> x = {Int(1), Int(-2), Int(3), Int(0)};
    std::vector<Int> b(2, 0);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 4; ++j) b[i] += a(i, j) * x[j];
    CHECK(in_lattice(a, b));
  }
  IntMat two = IntMat::identity(2);
  two(0, 0) = 2;
  CHECK_FALSE(in_lattice(two, {Int(1), Int(0)}));
  CHECK(in_lattice(two, {Int(2), Int(5)}));
}

TEST_CASE("kernel over field") {
  auto f = Field::cyclotomic(4);
  CHECK(kernel_over_field(Mat::identity(*f, 3)).empty());
  CHECK(kernel_over_field(Mat(*f, 3, 3)).size() == 3);
  // companion matrix of x^2 + 1 minus zeta
  Mat c(*f, 2, 2);
  c(0, 1) = f->from_int(-1);
  c(1, 0) = f->one();
  Mat m = c - Mat::identity(*f, 2) * [&] {
    Mat s = Mat::identity(*f, 2);
    s(0, 0) = f->zeta();
    s(1, 1) = f->zeta();
    return s;
  }();
  auto ker = kernel_over_field(m);
  CHECK(ker.size() == 1);
  CHECK(is_zero_vec(m.apply(ker[0])));
}

TEST_CASE("kernel dimension agrees across fields") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    IntMat a = random_intmat(4, 5, rng, 3);
    if (trial % 2 == 0) {
      for (int j = 0; j < 5; ++j) a(3, j) = a(0, j) - a(1, j);
    }
    auto fc = Field::cyclotomic(6);
    auto fp = Field::prime(6, 37);
    CHECK(kernel_over_field(a.to_field(*fc)).size() == kernel_over_field(a.to_field(*fp)).size());
  }
}

TEST_CASE("characteristic polynomial") {
  IntMat m = IntMat::identity(4);
  IntPoly cp = char_poly(m);
  CHECK(cp == IntPoly{1, -4, 6, -4, 1});
  IntMat neg = IntMat::identity(4);
  for (int i = 0; i < 4; ++i) neg(i, i) = -1;
  CHECK(char_poly(neg) == IntPoly{1, 4, 6, 4, 1});
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    IntMat a = random_intmat(3, 3, rng);
    IntMat z = poly_eval(char_poly(a), a);
    CHECK(z == IntMat(3, 3));
  }
}
