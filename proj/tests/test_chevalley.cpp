#include "doctest.h"
#include "thetagroup/chevalley.hpp"

using namespace thetagroup;

TEST_CASE("Chevalley bases satisfy the Jacobi identity") {
  for (const char* t : {"G2", "F4", "D4", "B3", "C3", "A3"}) {
    CAPTURE(t);
    LieAlgebra g(RootSystem::build(t), Field::cyclotomic(1));
    CHECK(g.check_structure_constants());
    CHECK(g.check_jacobi());
  }
  LieAlgebra g2(RootSystem::build("G2"), Field::cyclotomic(1));
  LieAlgebra f4(RootSystem::build("F4"), Field::cyclotomic(1));
  CHECK(g2.dim() == 14);
  CHECK(f4.dim() == 52);
}

TEST_CASE("sign changes preserve the Jacobi identity") {
  RootSystem rs = RootSystem::build("F4");
  std::vector<int> flips(rs.num_positive(), 1);
  for (int k = 0; k < rs.num_positive(); k += 3) flips[k] = -1;
  LieAlgebra g(rs, Field::cyclotomic(1), flips);
  CHECK(g.check_structure_constants());
  CHECK(g.check_jacobi(7, 20000));
}

TEST_CASE("basic brackets") {
  LieAlgebra g(RootSystem::build("F4"), Field::cyclotomic(1));
  const RootSystem& rs = g.roots();
  const Field& f = g.field();
  Vec h1 = g.basis_vector(g.h(0));
  Vec e1 = g.basis_vector(g.e(0));
  CHECK(g.bracket(h1, e1) == vec_scale(f.from_int(2), e1));
  for (int k = 0; k < rs.size(); ++k) {
    Vec x = g.bracket(g.basis_vector(g.e(k)), g.basis_vector(g.e(rs.neg(k))));
    for (int j = 0; j < rs.rank(); ++j) CHECK(x[g.h(j)] == f.from_int(rs.coroot(k)[j]));
  }
  CHECK(g.element_str(g.parse_element("e_1100+e_0011+f_1122")) == "e_1100+e_0011+f_1122");
  CHECK(g.element_str(g.parse_element("2*h_1-e_0001")) == "2*h_1-e_0001");
  CHECK_THROWS(g.parse_element("x_1"));
}

TEST_CASE("Jordan type tests") {
  LieAlgebra g(RootSystem::build("F4"), Field::cyclotomic(1));
  CHECK(g.is_nilpotent(g.parse_element("e_1000+e_0100+e_0010+e_0001")));
  CHECK_FALSE(g.is_semisimple(g.parse_element("e_1000+e_0100")));
  CHECK(g.is_semisimple(g.parse_element("e_1100+e_0011+f_1122")));
  CHECK_FALSE(g.is_nilpotent(g.parse_element("e_1100+e_0011+f_1122")));
  CHECK(g.is_semisimple(g.parse_element("h_1+2*h_3")));
  Vec all = g.zero();
  std::vector<Vec> basis;
  for (int b = 0; b < g.dim(); ++b) basis.push_back(g.basis_vector(b));
  CHECK(g.centralizer_dim(g.parse_element("h_1"), basis) == 4 + 2 * 9);
  CHECK(g.centralizer_dim(all, basis) == 52);
  // principal nilpotent has a rank-dimensional centralizer
  CHECK(g.centralizer_dim(g.parse_element("e_1000+e_0100+e_0010+e_0001"), basis) == 4);
}

TEST_CASE("exp and reflection representatives") {
  LieAlgebra g(RootSystem::build("G2"), Field::cyclotomic(1));
  const RootSystem& rs = g.roots();
  for (int a = 0; a < rs.size(); ++a) {
    IntMat n = g.reflection_rep(a);
    CHECK(determinant(n) * determinant(n) == 1);
    for (int b = 0; b < rs.size(); ++b) {
      int target = g.e(rs.reflect(b, a));
      for (int r = 0; r < g.dim(); ++r) {
        const Int& v = n(r, g.e(b));
        if (r == target) CHECK(abs(v) == 1);
        else CHECK(v == 0);
      }
    }
  }
  Mat ex = g.exp_ad_nilpotent(g.basis_vector(g.e(0)));
  CHECK(ex == g.exp_ad_root(0).to_field(g.field()));
  LieAlgebra gp(RootSystem::build("G2"), Field::prime(6));
  CHECK(gp.exp_ad_nilpotent(gp.basis_vector(gp.e(0))) == gp.exp_ad_root(0).to_field(gp.field()));
  CHECK_THROWS(gp.exp_ad_nilpotent(gp.basis_vector(gp.h(0))));
}

TEST_CASE("polynomial gcd over fields") {
  auto f = Field::prime(4);
  FieldPoly p{f->from_int(-1), f->zero(), f->one()};   // t^2 - 1
  FieldPoly q{f->from_int(1), f->from_int(-2), f->one()};  // (t - 1)^2
  CHECK(field_poly_gcd(p, q).size() == 2);
  CHECK(field_poly_squarefree(p));
  CHECK_FALSE(field_poly_squarefree(q));
  CHECK(field_poly_lcm(p, q).size() == 4);
}
