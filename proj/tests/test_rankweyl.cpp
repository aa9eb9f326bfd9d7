#include "doctest.h"
#include "thetagroup/rankweyl.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace thetagroup;

namespace {

int class_rep(const std::vector<CarterClass>& classes, const std::string& label) {
  for (const auto& c : classes)
    if (c.label == label) return c.rep;
  throw std::runtime_error("no class " + label);
}

/// Centralizer order by brute force over the multiplication table.
int brute_centralizer(const WeylGroup& W, int w, const std::vector<int>* within = nullptr) {
  int n = 0;
  for (int u = 0; u < W.order(); ++u) {
    if (within && !std::binary_search(within->begin(), within->end(), u)) continue;
    if (W.mul(u, w) == W.mul(w, u)) ++n;
  }
  return n;
}

/// Dimension of the zeta_m eigenspace of w on t, via a kernel over Q(zeta_m).
int eigenspace_dim(const WeylGroup& W, int w, int m) {
  auto f = Field::cyclotomic(m);
  Mat a = W.matrix(w).to_field(*f);
  for (int i = 0; i < a.rows(); ++i) a(i, i) -= f->zeta(1);
  return static_cast<int>(kernel_over_field(a).size());
}

Grading grading_for(const LieAlgebra& g, const AffineDiagram& aff, const std::string& kac) {
  KacDiagram d = parse_kac_diagram(aff, kac);
  return grading(kac_automorphism(d, g), d.order());
}

/// The full group of monomial 2x2 matrices G(m, p, 2) over Q(zeta_m).
std::vector<Mat> imprimitive_group(const Field& f, int m, int p) {
  std::vector<Mat> out;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if ((a + b) % p != 0) continue;
      for (int swap = 0; swap < 2; ++swap) {
        Mat g(f, 2, 2);
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) g(i, j) = f.zero();
        }
        g(0, swap) = f.zeta(a);
        g(1, 1 - swap) = f.zeta(b);
        out.push_back(g);
      }
    }
  return out;
}

}  // namespace

TEST_CASE("rank from the Weyl group matches an eigenspace oracle") {
  RootSystem f4 = RootSystem::build("F4");
  WeylGroup W(f4);
  auto classes = carter_classes(W);
  CHECK(rank_via_weyl(W, class_rep(classes, "F4(a_1)"), 6) == 2);
  CHECK(rank_via_weyl(W, class_rep(classes, "Ã2"), 3) == 1);
  CHECK(rank_via_weyl(W, class_rep(classes, "A1^4"), 2) == 4);
  CHECK_THROWS(rank_via_weyl(W, class_rep(classes, "F4"), 6));
  for (const auto& c : classes) {
    if (c.order == 1) continue;
    CAPTURE(c.label);
    CHECK(rank_via_weyl(W, c.rep, c.order) == eigenspace_dim(W, c.rep, c.order));
  }
}

TEST_CASE("Tits lifts act on t as the Weyl element") {
  for (const char* type : {"G2", "F4"}) {
    RootSystem rs = RootSystem::build(type);
    WeylGroup W(rs);
    LieAlgebra g(rs, Field::cyclotomic(1));
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> pick(0, W.order() - 1);
    int samples = std::string(type) == "G2" ? W.order() : 25;
    for (int s = 0; s < samples; ++s) {
      int w = std::string(type) == "G2" ? s : pick(rng);
      CAPTURE(w);
      Automorphism th = realize_weyl_automorphism(W, w, g);
      CHECK(th.torus() == W.matrix(w));
      for (int k = 0; k < rs.size(); ++k) CHECK(th.root_image(k) == W.act(w, k));
      if (s < 6) CHECK(th.preserves_bracket());
    }
  }
}

TEST_CASE("generic orbit rank and zero-rank witnesses") {
  RootSystem f4 = RootSystem::build("F4");
  AffineDiagram aff = affine_diagram("F4", 1);
  {
    LieAlgebra g(f4, Field::cyclotomic(6));
    Grading gr = grading_for(g, aff, "00011");
    auto res = rank_via_generic_orbit(g, gr);
    CHECK(res.rank == 0);
    CHECK(res.dim_g0 == 16);
    CHECK(res.dim_g1 == 5);
    Vec e = g.parse_element("e_0010+e_0001");
    CHECK(g.centralizer_dim(e, gr.spaces[0]) == 11);
    CHECK(sparse_orbit_witness(g, gr, 11).has_value());
  }
  {
    LieAlgebra g(f4, Field::cyclotomic(4));
    Grading gr = grading_for(g, aff, "00010");
    auto res = rank_via_generic_orbit(g, gr, 3);
    CHECK(res.rank == 0);
    CHECK(res.dim_g0 == 18);
    CHECK(res.dim_g1 == 8);
    Vec e = g.parse_element("e_0010+f_1231");
    CHECK(g.centralizer_dim(e, gr.spaces[0]) == 10);
  }
  {
    RootSystem d4 = RootSystem::build("D4");
    LieAlgebra g(d4, Field::cyclotomic(3));
    Grading gr = grading_for(g, affine_diagram("D4", 3), "001");
    CHECK(rank_via_generic_orbit(g, gr).rank == 2);
  }
  {
    LieAlgebra g(f4, Field::cyclotomic(4));
    Grading gr = grading_for(g, aff, "01001");
    CHECK(rank_via_generic_orbit(g, gr, 7).rank == 1);
    // the semisimple element used for 01001
    Vec x = g.parse_element("e_1100+e_0011+f_1122");
    CHECK(in_span(g.field(), gr.spaces[1], x));
    CHECK(g.is_semisimple(x));
    auto ss = semisimple_witness(g, gr);
    REQUIRE(ss.has_value());
    CHECK(g.is_semisimple(*ss));
  }
  CHECK_THROWS_AS(rank_via_generic_orbit(LieAlgebra(f4, Field::cyclotomic(2)),
                                         grading_for(LieAlgebra(f4, Field::cyclotomic(2)), aff, "01000"), 0, 0),
                  std::invalid_argument);
}

TEST_CASE("Cartan subspaces") {
  RootSystem f4 = RootSystem::build("F4");
  WeylGroup W(f4);
  auto classes = carter_classes(W);
  LieAlgebra g12(f4, Field::cyclotomic(12));
  CHECK(cartan_subspace(W, class_rep(classes, "F4"), 12, g12).dim() == 1);
  LieAlgebra g2alg(f4, Field::cyclotomic(2));
  CHECK(cartan_subspace(W, class_rep(classes, "A1^4"), 2, g2alg).dim() == 4);
  RootSystem g2 = RootSystem::build("G2");
  WeylGroup Wg(g2);
  LieAlgebra g3(g2, Field::cyclotomic(3));
  CHECK(cartan_subspace(Wg, class_rep(carter_classes(Wg), "A2"), 3, g3).dim() == 1);
  LieAlgebra g4(f4, Field::cyclotomic(4));
  CHECK_THROWS(cartan_subspace(W, class_rep(classes, "F4"), 4, g4));
}

TEST_CASE("centralizer orders against brute force") {
  RootSystem f4 = RootSystem::build("F4");
  WeylGroup W(f4);
  auto classes = carter_classes(W);
  int fa1 = class_rep(classes, "F4(a_1)");
  int d4a1 = class_rep(classes, "D4(a_1)");
  int a2a2 = class_rep(classes, "A2×Ã2");
  CHECK(brute_centralizer(W, fa1) == 72);
  CHECK(static_cast<int>(W.centralizer(fa1).size()) == 72);
  CHECK(brute_centralizer(W, d4a1) == 96);
  CHECK(static_cast<int>(W.centralizer(d4a1).size()) == 96);
  std::vector<int> longs;
  for (int k = 0; k < f4.size(); ++k)
    if (f4.is_long(k)) longs.push_back(k);
  auto wl = W.reflection_subgroup(longs);
  std::sort(wl.begin(), wl.end());
  CHECK(wl.size() == 192);
  // an A2×Ã2 element outside W(D4) modulo which it has order 3
  int w = -1;
  const auto& cc = *std::find_if(classes.begin(), classes.end(), [](const auto& c) { return c.label == "A2×Ã2"; });
  for (int u : cc.members)
    if (!std::binary_search(wl.begin(), wl.end(), u) && !std::binary_search(wl.begin(), wl.end(), W.mul(u, u))) {
      w = u;
      break;
    }
  REQUIRE(w >= 0);
  CHECK(brute_centralizer(W, w, &wl) == 24);
  CHECK(static_cast<int>(W.centralizer(w, &wl).size()) == 24);
  CHECK(brute_centralizer(W, a2a2) == 72);
}

TEST_CASE("little Weyl groups") {
  RootSystem f4 = RootSystem::build("F4");
  WeylGroup W(f4);
  auto classes = carter_classes(W);
  {
    LieAlgebra g(f4, Field::cyclotomic(4));
    int w = class_rep(classes, "D4(a_1)");
    auto lw = little_weyl(W, w, cartan_subspace(W, w, 4, g), g);
    CHECK(lw.order() == 96);
    CHECK(lw.name == "G8");
    CHECK(lw.degrees == std::vector<int>{8, 12});
    CHECK(lw.reflection_orders.at(4) == 12);
  }
  {
    LieAlgebra g(f4, Field::cyclotomic(2));
    int w = class_rep(classes, "Ã1");
    auto lw = little_weyl(W, w, cartan_subspace(W, w, 2, g), g);
    CHECK(lw.name == "μ2");
    // W(Phi_2) = W(B3) of order 48 acts trivially, 96 / 48 = 2
    const auto& cc = *std::find_if(classes.begin(), classes.end(), [](const auto& c) { return c.label == "Ã1"; });
    CHECK(W.reflection_subgroup(cc.phi2).size() == 48);
    CHECK(cc.centralizer_order == 96);
  }
  {
    LieAlgebra g(f4, Field::cyclotomic(3));
    std::vector<int> longs;
    for (int k = 0; k < f4.size(); ++k)
      if (f4.is_long(k)) longs.push_back(k);
    auto wl = W.reflection_subgroup(longs);
    std::sort(wl.begin(), wl.end());
    const auto& cc = *std::find_if(classes.begin(), classes.end(), [](const auto& c) { return c.label == "A2×Ã2"; });
    int w = -1;
    for (int u : cc.members)
      if (!std::binary_search(wl.begin(), wl.end(), u) && !std::binary_search(wl.begin(), wl.end(), W.mul(u, u))) {
        w = u;
        break;
      }
    REQUIRE(w >= 0);
    auto lw = little_weyl(W, w, cartan_subspace(W, w, 3, g), g, &wl);
    CHECK(lw.order() == 24);
    CHECK(lw.name == "G4");
    auto full = little_weyl(W, w, cartan_subspace(W, w, 3, g), g);
    CHECK(full.name == "G5");
  }
}

TEST_CASE("little Weyl group of a power: F4(a_1) squared is A2×Ã2") {
  RootSystem f4 = RootSystem::build("F4");
  WeylGroup W(f4);
  auto classes = carter_classes(W);
  int w = class_rep(classes, "F4(a_1)");
  int w2 = W.mul(w, w);
  CHECK(classes[W.class_of(w2)].label == "A2×Ã2");
  LieAlgebra g(f4, Field::cyclotomic(6));
  auto c = cartan_subspace(W, w, 6, g);
  auto a = little_weyl(W, w, c, g);
  // c is also the zeta_3 eigenspace of w^2, and the groups act identically
  std::set<std::string> ka, kb;
  for (const auto& m : a.matrices) ka.insert(m.key());
  for (const auto& m : restrict_to_cartan(W, W.centralizer(w2), c, g)) kb.insert(m.key());
  CHECK(ka == kb);
}

TEST_CASE("Molien degrees and reflection group identification") {
  RootSystem f4 = RootSystem::build("F4");
  WeylGroup W(f4);
  auto q = Field::cyclotomic(1);
  LieAlgebra g(f4, q);
  CartanSubspace t;
  for (int i = 0; i < 4; ++i) t.basis.push_back(g.basis_vector(g.h(i)));
  std::vector<int> all(W.order());
  for (int i = 0; i < W.order(); ++i) all[i] = i;
  auto mats = restrict_to_cartan(W, all, t, g);
  CHECK(molien_degrees(mats) == std::vector<int>{2, 6, 8, 12});
  CHECK(identify_reflection_group(mats) == "W(F4)");
  CHECK(reflection_order_counts(mats).at(2) == 24);

  // parabolic subgroups: degrees multiply to the order (hand-rolled generator)
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<int> roots;
    for (int i = 0; i < 4; ++i)
      if (rng() % 2) roots.push_back(f4.simple(i));
    if (roots.empty()) continue;
    auto sub = W.reflection_subgroup(roots);
    auto sm = restrict_to_cartan(W, sub, t, g);
    auto deg = molien_degrees(sm);
    long long prod = 1;
    for (int d : deg) prod *= d;
    CHECK(prod == static_cast<long long>(sm.size()));
  }

  auto f12 = Field::cyclotomic(12);
  std::vector<Mat> mu12;
  for (int k = 0; k < 12; ++k) {
    Mat m(*f12, 1, 1);
    m(0, 0) = f12->zeta(k);
    mu12.push_back(m);
  }
  CHECK(identify_reflection_group(mu12) == "μ12");
  CHECK(molien_degrees(mu12) == std::vector<int>{12});

  // G(6,1,2) has order 72 like G5 but carries order-2 reflections
  auto f6 = Field::cyclotomic(6);
  auto g612 = imprimitive_group(*f6, 6, 1);
  CHECK(g612.size() == 72);
  CHECK(identify_reflection_group(g612) == "G(6,1,2)");
  auto g422 = imprimitive_group(*Field::cyclotomic(4), 4, 2);
  CHECK(identify_reflection_group(g422) == "G(4,2,2)");

  // a non-reflection group: the cyclic group generated by diag(i, -i)
  auto f4f = Field::cyclotomic(4);
  std::vector<Mat> rot;
  for (int k = 0; k < 4; ++k) {
    Mat m(*f4f, 2, 2);
    m(0, 0) = f4f->zeta(k);
    m(1, 1) = f4f->zeta(-k);
    m(0, 1) = m(1, 0) = f4f->zero();
    rot.push_back(m);
  }
  CHECK_THROWS(molien_degrees(rot));
}

TEST_CASE("N-regularity") {
  RootSystem f4 = RootSystem::build("F4");
  WeylGroup W(f4);
  AffineDiagram aff = affine_diagram("F4", 1);
  {
    LieAlgebra g(f4, Field::cyclotomic(12));
    auto th = kac_automorphism(parse_kac_diagram(aff, "11111"), g);
    auto nr = n_regular_check(W, th, 12);
    CHECK(nr.n_regular);
    CHECK(nr.centralizer_dim == 4);
    CHECK(th.apply(nr.witness) == vec_scale(g.field().zeta(1), nr.witness));
  }
  {
    LieAlgebra g(f4, Field::cyclotomic(6));
    auto th = kac_automorphism(parse_kac_diagram(aff, "01010"), g);
    CHECK_FALSE(n_regular_check(W, th, 6).n_regular);
  }
  {
    RootSystem g2 = RootSystem::build("G2");
    WeylGroup Wg(g2);
    LieAlgebra g(g2, Field::cyclotomic(2));
    auto th = kac_automorphism(parse_kac_diagram(affine_diagram("G2", 1), "010"), g);
    CHECK(n_regular_check(Wg, th, 2).n_regular);
  }
}

TEST_CASE("labels") {
  CHECK(group_name("B4") == "Spin(9)");
  CHECK(group_name("C3") == "Sp(6)");
  CHECK(group_name("B2") == "Spin(5)");
  CHECK(group_name("Ã1") == "short SL(2)");
  CHECK(group_name("A2") == "SL(3)");
  CHECK_THROWS(group_name(""));

  RootSystem f4 = RootSystem::build("F4");
  WeylGroup W(f4);
  auto classes = carter_classes(W);
  const auto& b3 = *std::find_if(classes.begin(), classes.end(), [](const auto& c) { return c.label == "B3"; });
  CHECK(signed_cycle_type(W, b3.rep, b3.phi1) == "negative 3-cycle");
  CHECK(signed_cycle_type(W, W.mul(b3.rep, b3.rep), b3.phi1) == "positive 3-cycle");
  const auto& a2 = *std::find_if(classes.begin(), classes.end(), [](const auto& c) { return c.label == "A2"; });
  CHECK_THROWS(signed_cycle_type(W, a2.rep, a2.phi1));
}

TEST_CASE("field configuration") {
  FieldConfig zero;
  CHECK_FALSE(zero.field_for(6)->is_prime());
  FieldConfig p7{7};
  std::string note;
  CHECK(p7.field_for(3, &note)->is_prime());
  CHECK(note.empty());
  CHECK_FALSE(p7.field_for(4, &note)->is_prime());
  CHECK_FALSE(note.empty());
}

TEST_CASE("classification of G2") {
  Classifier c("g2");
  auto res = c.classify();
  REQUIRE(res.rows.size() == 3);
  std::vector<std::tuple<std::string, int, std::string, int, std::string>> expect = {
      {"111", 6, "G2", 1, "μ6"}, {"011", 3, "A2", 1, "μ6"}, {"010", 2, "A1×Ã1", 2, "W(G2)"}};
  for (size_t i = 0; i < 3; ++i) {
    const auto& r = res.rows[i];
    CHECK(std::make_tuple(r.kac, r.order, r.carter, r.rank, r.little_weyl.name) == expect[i]);
    CHECK(r.kw.verified());
    CHECK(r.kw.criterion);
    CHECK(r.w_phi2_trivial);
    CHECK(r.rank == r.rank_weyl);
    CHECK(r.rank == r.cartan_dim);
  }
  for (const auto& z : res.zero_rank) CHECK(z.orbit.rank == 0);
  CHECK_THROWS_AS(Classifier("e8"), std::invalid_argument);
}

TEST_CASE("classification of D4 twisted by triality") {
  Classifier c("d4-3");
  auto res = c.classify();
  REQUIRE(res.rows.size() == 5);
  std::vector<std::string> kac, carter, wc, red;
  for (const auto& r : res.rows) {
    kac.push_back(r.kac);
    carter.push_back(r.carter);
    wc.push_back(r.little_weyl.name);
    red.push_back(r.kw.reduction + " " + r.kw.theta_on_l);
    CHECK(r.kw.verified());
  }
  CHECK(kac == std::vector<std::string>{"111", "101", "010", "001", "100"});
  CHECK(carter == std::vector<std::string>{"F4", "F4(a_1)", "C3", "A2×Ã2", "Ã2"});
  CHECK(wc == std::vector<std::string>{"μ4", "G4", "μ2", "G4", "μ2"});
  CHECK(red[2] == "SL(2)^3 τ");
  CHECK(red[4] == "SL(2)^3 τ²");
  REQUIRE(res.zero_rank.size() == 2);
  for (const auto& z : res.zero_rank) CHECK(z.order == 9);

  Dossier d = c.analyze(parse_kac_diagram(c.affine(), "100"));
  CHECK(d.order == 3);
  CHECK(d.g0_type == "G2");
  REQUIRE(d.row.has_value());
  CHECK(d.row->rank == 1);
  CHECK(d.row->little_weyl.name == "μ2");
}

TEST_CASE("class matching for F4") {
  Classifier c("f4");
  auto fam = [&](const std::string& label) {
    for (size_t i = 0; i < c.classes().size(); ++i)
      if (c.classes()[i].label == label) return c.lift_family(static_cast<int>(i));
    throw std::runtime_error(label);
  };
  auto has = [](const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
  };
  CHECK(has(fam("F4"), "11111"));
  CHECK(has(fam("B4"), "11101"));
  CHECK(has(fam("A1^4"), "01000"));
  CHECK(has(fam("Ã1"), "00001"));
  CHECK(c.classes()[c.match_class(parse_kac_diagram(c.affine(), "01010"), 1)].label == "C3");
  CHECK(c.classes()[c.match_class(parse_kac_diagram(c.affine(), "11100"), 1)].label == "B3");
  CHECK(c.classes()[c.match_class(parse_kac_diagram(c.affine(), "10001"), 1)].label == "Ã2");
  CHECK_THROWS(c.match_class(parse_kac_diagram(c.affine(), "11111"), 3));

  Dossier d = c.analyze(parse_kac_diagram(c.affine(), "01001"));
  REQUIRE(d.row.has_value());
  CHECK(d.order == 4);
  CHECK(d.row->rank == 1);
  CHECK(d.row->little_weyl.name == "μ4");
  CHECK(d.row->kw.reduction == "Spin(5)");

  Dossier z = c.analyze(parse_kac_diagram(c.affine(), "00011"));
  REQUIRE(z.zero_rank.has_value());
  CHECK(z.zero_rank->dim_g0 == 16);
  CHECK(z.zero_rank->dim_g1 == 5);
  CHECK(z.zero_rank->centralizer == 11);
  CHECK(z.zero_rank->witness == "e_0010+e_0001");
}
