#include "doctest.h"
#include "thetagroup/weyl.hpp"

#include <map>
#include <set>

using namespace thetagroup;

namespace {

int coxeter_element(const WeylGroup& w) {
  int c = w.identity();
  for (int i = 0; i < w.root_system().rank(); ++i) c = w.mul(c, w.reflection(i));
  return c;
}

std::string label_of(const std::vector<CarterClass>& cls, const WeylGroup& w, int e) {
  int k = w.class_of(e);
  for (const auto& c : cls)
    if (w.class_of(c.rep) == k) return c.label;
  return "?";
}

const CarterClass& by_label(const std::vector<CarterClass>& cls, const std::string& l) {
  for (const auto& c : cls)
    if (c.label == l) return c;
  throw std::runtime_error("missing class " + l);
}

}  // namespace

TEST_CASE("Weyl group orders and group axioms") {
  WeylGroup g2(RootSystem::build("G2"));
  WeylGroup f4(RootSystem::build("F4"));
  WeylGroup d4(RootSystem::build("D4"));
  CHECK(g2.order() == 12);
  CHECK(f4.order() == 1152);
  CHECK(d4.order() == 192);
  CHECK(f4.order() / d4.order() == 6);
  for (int a = 0; a < f4.order(); a += 37) {
    CHECK(f4.mul(a, f4.inv(a)) == f4.identity());
    for (int b = 0; b < f4.order(); b += 53)
      for (int c = 0; c < f4.order(); c += 211) CHECK(f4.mul(f4.mul(a, b), c) == f4.mul(a, f4.mul(b, c)));
  }
  // words multiply back to the element
  for (int a = 0; a < f4.order(); ++a) {
    int x = f4.identity();
    for (int s : f4.word(a)) x = f4.mul(x, f4.reflection(s));
    CHECK(x == a);
  }
  CHECK(f4.length(f4.power(coxeter_element(f4), 1)) == 4);
}

TEST_CASE("Carter classes of G2 and F4") {
  WeylGroup g2(RootSystem::build("G2"));
  WeylGroup f4(RootSystem::build("F4"));
  auto cg = carter_classes(g2);
  auto cf = carter_classes(f4);
  CHECK(cg.size() == 6);
  CHECK(cf.size() == 25);
  int total = 0;
  std::set<std::string> labels;
  for (const auto& c : cf) {
    total += c.size;
    labels.insert(c.label);
    CHECK(c.size * c.centralizer_order == 1152);
  }
  CHECK(total == 1152);
  CHECK(labels.size() == 25);
  CHECK(by_label(cf, "F4(a_1)").centralizer_order == 72);
  CHECK(by_label(cf, "D4(a_1)").centralizer_order == 96);
  CHECK(by_label(cf, "F4").centralizer_order == 12);
  CHECK(by_label(cf, "B4").centralizer_order == 8);
  CHECK(poly_to_string(by_label(cf, "F4").char_poly) == "t^4 - t^2 + 1");
  CHECK(poly_to_string(by_label(cf, "D4(a_1)").char_poly) == "t^4 + 2t^2 + 1");
}

TEST_CASE("powers of the F4 Coxeter element") {
  WeylGroup f4(RootSystem::build("F4"));
  auto cf = carter_classes(f4);
  int c = coxeter_element(f4);
  CHECK(f4.element_order(c) == 12);
  CHECK(label_of(cf, f4, c) == "F4");
  CHECK(label_of(cf, f4, f4.power(c, 2)) == "F4(a_1)");
  CHECK(label_of(cf, f4, f4.power(c, 3)) == "D4(a_1)");
  CHECK(label_of(cf, f4, f4.power(c, 4)) == "A2×Ã2");
  CHECK(label_of(cf, f4, f4.power(c, 6)) == "A1^4");
  CHECK(f4.power(c, 12) == f4.identity());
}

TEST_CASE("eigenvalue multiplicities") {
  WeylGroup f4(RootSystem::build("F4"));
  auto cf = carter_classes(f4);
  CHECK(f4.eigenvalue_multiplicity(by_label(cf, "F4").rep, 12) == 1);
  CHECK(f4.eigenvalue_multiplicity(by_label(cf, "F4(a_1)").rep, 6) == 2);
  CHECK(f4.eigenvalue_multiplicity(by_label(cf, "D4(a_1)").rep, 4) == 2);
  CHECK(f4.eigenvalue_multiplicity(by_label(cf, "A2×Ã2").rep, 3) == 2);
  CHECK(f4.eigenvalue_multiplicity(by_label(cf, "A1^4").rep, 2) == 4);
  CHECK(f4.eigenvalue_multiplicity(by_label(cf, "C3").rep, 6) == 1);
  CHECK(f4.fixed_dim(by_label(cf, "C3").rep) == 1);
}

TEST_CASE("Carter decompositions and Phi2") {
  WeylGroup f4(RootSystem::build("F4"));
  const RootSystem& rs = f4.root_system();
  auto cf = carter_classes(f4);
  for (const auto& c : cf) {
    CAPTURE(c.label);
    // w = w1 w2 with both products of reflections in orthogonal roots
    int w1 = f4.identity(), w2 = f4.identity();
    for (int a : c.diagram_a) w1 = f4.mul(w1, f4.reflection(a));
    for (int b : c.diagram_b) w2 = f4.mul(w2, f4.reflection(b));
    CHECK(f4.mul(w1, w2) == c.rep);
    CHECK(static_cast<int>(c.diagram_a.size() + c.diagram_b.size()) == 4 - c.fixed_dim);
    // W(Phi2) acts trivially on the fixed space: w commutes with reflections in Phi2
    for (int r : c.phi2) {
      CHECK(f4.act(c.rep, r) == r);
      CHECK(f4.mul(c.rep, f4.reflection(r)) == f4.mul(f4.reflection(r), c.rep));
    }
  }
  CHECK(by_label(cf, "C3").phi2_type == "A1");
  CHECK(by_label(cf, "Ã1").phi2_type == "B3");
  CHECK(by_label(cf, "F4").phi2.empty());
  (void)rs;
}

TEST_CASE("Coxeter characteristic polynomials") {
  CHECK(poly_to_string(coxeter_char_poly("G2")) == "t^2 - t + 1");
  CHECK(poly_to_string(coxeter_char_poly("F4")) == "t^4 - t^2 + 1");
  CHECK(poly_to_string(coxeter_char_poly("A2")) == "t^2 + t + 1");
  CHECK(poly_to_string(coxeter_char_poly("B2")) == "t^2 + 1");
  CHECK(coxeter_number("B4") == 8);
  CHECK(coxeter_number("C3") == 6);
}
