#include "doctest.h"
#include "thetagroup/kacautos.hpp"

#include <algorithm>
#include <set>

using namespace thetagroup;

namespace {

std::set<std::string> strings(const std::vector<KacDiagram>& ds) {
  std::set<std::string> s;
  for (const auto& d : ds) s.insert(d.str());
  return s;
}

Grading grading_of(const std::string& type, int twist, const std::string& kac, const LieAlgebra& g) {
  KacDiagram d = parse_kac_diagram(affine_diagram(type, twist), kac);
  return grading(kac_automorphism(d, g), d.order());
}

}  // namespace

TEST_CASE("diagram orders and enumeration") {
  AffineDiagram f4 = affine_diagram("F4", 1);
  AffineDiagram g2 = affine_diagram("G2", 1);
  AffineDiagram d43 = affine_diagram("D4", 3);
  CHECK(parse_kac_diagram(f4, "11111").order() == 12);
  CHECK(parse_kac_diagram(f4, "00100").order() == 3);
  CHECK(parse_kac_diagram(g2, "111").order() == 6);
  CHECK(parse_kac_diagram(g2, "010").order() == 2);
  CHECK(parse_kac_diagram(d43, "111").order() == 12);
  CHECK(parse_kac_diagram(d43, "001").order() == 3);
  CHECK(parse_kac_diagram(f4, "10101").str() == "10101");
  CHECK_THROWS(parse_kac_diagram(f4, "1111"));
  CHECK_THROWS(parse_kac_diagram(f4, "00000"));
  CHECK_THROWS(parse_kac_diagram(f4, "0010x"));

  CHECK(strings(enumerate_diagrams(f4, 3, true)) == std::set<std::string>{"00100", "11000", "10001"});
  CHECK(strings(enumerate_diagrams(f4, 6, true)) == std::set<std::string>{"10101", "11100", "01010", "00011"});
  CHECK(strings(enumerate_diagrams(d43, 9, true)) == std::set<std::string>{"110", "011"});
  CHECK(strings(enumerate_diagrams(g2, 6, true)) == std::set<std::string>{"111"});
  // non-zero-one diagrams of order 2 in F4: 20000 is not primitive
  for (const auto& d : enumerate_diagrams(f4, 2, false)) CHECK(d.primitive());
}

TEST_CASE("inner Kac automorphisms have the diagram's order") {
  LieAlgebra g(RootSystem::build("F4"), Field::cyclotomic(24));
  AffineDiagram f4 = affine_diagram("F4", 1);
  for (const char* s : {"11111", "11101", "10101", "00100", "01000", "00001"}) {
    CAPTURE(s);
    KacDiagram d = parse_kac_diagram(f4, s);
    Automorphism th = inner_kac_automorphism(d, g);
    CHECK(th.order() == d.order());
  }
  Automorphism th = inner_kac_automorphism(parse_kac_diagram(f4, "01000"), g);
  CHECK(th.preserves_bracket());
}

TEST_CASE("fixed algebras of inner automorphisms") {
  AffineDiagram f4 = affine_diagram("F4", 1);
  auto fixed = [&](const std::string& s) {
    KacDiagram d = parse_kac_diagram(f4, s);
    LieAlgebra g(RootSystem::build("F4"), Field::cyclotomic(d.order()));
    return fixed_algebra_type(inner_kac_automorphism(d, g));
  };
  CHECK(fixed("00100").semisimple == "A2×Ã2");
  CHECK(fixed("00100").center_dim == 0);
  CHECK(fixed("01000").semisimple == "C3×A1");
  CHECK(fixed("10001").semisimple == "B3");
  CHECK(fixed("10001").center_dim == 1);
  CHECK(fixed("11000").semisimple == "C3");
  CHECK(fixed("11000").center_dim == 1);
  CHECK(fixed("00010").semisimple == "A3×Ã1");
  CHECK(fixed("11111").semisimple == "1");
  CHECK(fixed("11111").center_dim == 4);
  CHECK(fixed("11111").str() == "T4");
  CHECK(fixed("10001").str() == "B3+T1");
}

TEST_CASE("grading dimensions of inner automorphisms") {
  LieAlgebra g6(RootSystem::build("F4"), Field::cyclotomic(6));
  Grading a = grading_of("F4", 1, "00011", g6);
  CHECK(a.dim(0) == 16);
  CHECK(a.dim(1) == 5);
  LieAlgebra g2(RootSystem::build("F4"), Field::cyclotomic(2));
  Grading b = grading_of("F4", 1, "01000", g2);
  CHECK(b.dims() == std::vector<int>{24, 28});
  LieAlgebra g4(RootSystem::build("F4"), Field::cyclotomic(4));
  Grading c = grading_of("F4", 1, "00010", g4);
  CHECK(c.dim(1) == 8);
  int total = 0;
  for (int d : c.dims()) total += d;
  CHECK(total == 52);
}

TEST_CASE("triality and twisted automorphisms") {
  LieAlgebra g(RootSystem::build("D4"), Field::cyclotomic(12));
  Automorphism gamma = triality_gamma(g);
  CHECK(gamma.order() == 3);
  CHECK(gamma.preserves_bracket());
  FixedAlgebraType ft = fixed_algebra_type(gamma);
  CHECK(ft.semisimple == "G2");
  CHECK(ft.center_dim == 0);
  CHECK(grading(gamma, 3).dim(0) == 14);

  AffineDiagram d43 = affine_diagram("D4", 3);
  Automorphism t100 = twisted_kac_automorphism(parse_kac_diagram(d43, "100"), g);
  CHECK(t100.order() == 3);
  Automorphism t111 = twisted_kac_automorphism(parse_kac_diagram(d43, "111"), g);
  CHECK(t111.order() == 12);
  CHECK(t111.preserves_bracket());
  CHECK(fixed_algebra_type(t111).str() == "T2");

  // theta^2 for 101 fixes h_2 and h_1 + h_3 + h_4 (central node has index 1)
  Automorphism t101 = twisted_kac_automorphism(parse_kac_diagram(d43, "101"), g);
  CHECK(t101.order() == 6);
  Automorphism sq = t101.power(2);
  Vec h2 = g.basis_vector(g.h(1));
  Vec hs = vec_add(g.basis_vector(g.h(0)), vec_add(g.basis_vector(g.h(2)), g.basis_vector(g.h(3))));
  CHECK(sq.apply(h2) == h2);
  CHECK(sq.apply(hs) == hs);
}

TEST_CASE("the twisted affine root triple is an sl2 triple") {
  LieAlgebra g(RootSystem::build("D4"), Field::cyclotomic(3));
  const Field& f = g.field();
  auto [e, fm, h] = twisted_beta0_triple(g, f.root_of_unity(3));
  CHECK(!is_zero_vec(h));
  CHECK(g.bracket(h, e) == vec_scale(f.from_int(2), e));
  CHECK(g.bracket(h, fm) == vec_scale(f.from_int(-2), fm));
}

TEST_CASE("grading compatibility") {
  LieAlgebra g(RootSystem::build("F4"), Field::cyclotomic(12));
  AffineDiagram f4 = affine_diagram("F4", 1);
  for (const char* s : {"11111", "10101", "00001"}) {
    KacDiagram d = parse_kac_diagram(f4, s);
    Automorphism th = inner_kac_automorphism(d, g);
    CHECK(check_grading_compatibility(grading(th, d.order()), th));
  }
  LieAlgebra d4(RootSystem::build("D4"), Field::cyclotomic(6));
  Automorphism th = twisted_kac_automorphism(parse_kac_diagram(affine_diagram("D4", 3), "101"), d4);
  CHECK(check_grading_compatibility(grading(th, 6), th));
  CHECK_THROWS(grading(th, 4));
}

TEST_CASE("torus decompositions and the saturation criterion") {
  IntMat id = IntMat::identity(2);
  TorusModel a = torus_decomposition(id, 2);
  CHECK(a.rank_of(1) == 2);
  CHECK(a.rank_of(2) == 0);
  CHECK(!saturation_criterion(a));

  IntMat neg(2, 2);
  neg(0, 0) = -1;
  neg(1, 1) = -1;
  TorusModel b = torus_decomposition(neg, 2);
  CHECK(b.rank_of(2) == 2);
  CHECK(saturation_criterion(b));

  // swap of two coordinates: (-1,-1) lies on both the fixed and the anti-fixed torus
  IntMat swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  TorusModel c = torus_decomposition(swap, 2);
  CHECK(c.rank_of(1) == 1);
  CHECK(c.rank_of(2) == 1);
  CHECK(saturation_criterion(c));

  // a 3-cycle permuting coordinates
  IntMat cyc(3, 3);
  cyc(1, 0) = 1;
  cyc(2, 1) = 1;
  cyc(0, 2) = 1;
  TorusModel d = torus_decomposition(cyc, 3);
  CHECK(d.rank_of(1) == 1);
  CHECK(d.rank_of(3) == 2);
  CHECK(saturation_criterion(d));
  CHECK_THROWS(torus_decomposition(cyc, 2));
}

TEST_CASE("counting identity") {
  AffineDiagram f4 = affine_diagram("F4", 1);
  CHECK(torus_elements_of_order(4, 2) == 15);
  CHECK(torus_elements_of_order(4, 3) == 80);
  CHECK(counting_check(affine_diagram("G2", 1), 1).lhs == 1);
  for (int m : {2, 3}) {
    CountingResult r = counting_check(f4, m);
    CHECK(r.equal);
  }
  CHECK(counting_check(f4, 2).lhs == 15);
  CHECK(counting_check(f4, 3).lhs == 80);
  CHECK_THROWS(counting_check(affine_diagram("D4", 1), 2));
  CHECK_THROWS(counting_check(affine_diagram("D4", 3), 3));
}
