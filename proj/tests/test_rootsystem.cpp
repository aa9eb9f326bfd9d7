#include "doctest.h"
#include "thetagroup/rootsystem.hpp"
#include "thetagroup/weyl.hpp"

#include <numeric>

using namespace thetagroup;

TEST_CASE("root system sizes and lengths") {
  struct Case {
    const char* type;
    int size, rank, longs;
  };
  for (auto c : {Case{"G2", 12, 2, 6}, Case{"F4", 48, 4, 24}, Case{"D4", 24, 4, 24}, Case{"B3", 18, 3, 12},
                 Case{"C3", 18, 3, 6}, Case{"A2", 6, 2, 6}}) {
    CAPTURE(c.type);
    RootSystem rs = RootSystem::build(c.type);
    CHECK(rs.size() == c.size);
    CHECK(rs.rank() == c.rank);
    int longs = 0;
    for (int k = 0; k < rs.size(); ++k) longs += rs.is_long(k);
    CHECK(longs == c.longs);
  }
}

TEST_CASE("root system axioms") {
  for (const char* t : {"G2", "F4", "D4", "B4", "C3", "A3"}) {
    CAPTURE(t);
    RootSystem rs = RootSystem::build(t);
    for (int a = 0; a < rs.size(); ++a) {
      CHECK(rs.neg(rs.neg(a)) == a);
      CHECK(rs.pairing(a, a) == 2);
      for (int b = 0; b < rs.size(); ++b) {
        CHECK(rs.reflect(a, b) >= 0);
        CHECK(rs.reflect(rs.reflect(a, b), b) == a);
        // <a, b^v> is an integer in [-3, 3]
        CHECK(std::abs(rs.pairing(a, b)) <= 3);
      }
    }
    for (int i = 0; i < rs.rank(); ++i) CHECK(rs.height(rs.simple(i)) == 1);
  }
}

TEST_CASE("highest roots and names") {
  RootSystem f4 = RootSystem::build("F4");
  CHECK(f4.root_name(f4.highest_root()) == "2342");
  CHECK(f4.root_name(f4.neg(f4.parse_root("1122"))) == "-1122");
  CHECK(f4.parse_root("-1122") == f4.neg(f4.parse_root("1122")));
  RootSystem g2 = RootSystem::build("G2");
  CHECK(g2.root_name(g2.highest_root()) == "32");
  CHECK(g2.is_short(g2.simple(0)));
  CHECK(g2.is_long(g2.simple(1)));
}

TEST_CASE("long roots of F4 form D4") {
  RootSystem f4 = RootSystem::build("F4");
  LongSubsystem ls = long_subsystem(f4);
  CHECK(ls.d4.type() == "D4");
  CHECK(ls.d4.size() == 24);
  REQUIRE(ls.basis.size() == 4);
  for (int k = 0; k < ls.d4.size(); ++k) CHECK(f4.is_long(ls.to_ambient[k]));
  CHECK(f4.coroot(f4.parse_root("0120")) == Root{0, 1, 1, 0});
}

TEST_CASE("subsystem types") {
  RootSystem f4 = RootSystem::build("F4");
  auto idx = [&](std::initializer_list<const char*> names) {
    std::vector<int> v;
    for (auto n : names) v.push_back(f4.parse_root(n));
    return v;
  };
  CHECK(subsystem_type(f4, idx({"1000", "0100"})) == "A2");
  CHECK(subsystem_type(f4, idx({"0010", "0001"})) == "Ã2");
  CHECK(subsystem_type(f4, idx({"1000", "0100", "0010"})) == "B3");
  CHECK(subsystem_type(f4, idx({"0100", "0010", "0001"})) == "C3");
  CHECK(subsystem_type(f4, idx({"1000", "0010", "0001"})) == "Ã2×A1");
  CHECK(subsystem_type(f4, {}) == "1");
  std::vector<int> all(f4.size());
  std::iota(all.begin(), all.end(), 0);
  CHECK(subsystem_type(f4, all) == "F4");
  CHECK(reflection_closure(f4, idx({"0100", "0010"})).size() == 8);
  // roots orthogonal to the highest root form C3
  CHECK(subsystem_type(f4, orthogonal_roots(f4, {f4.highest_root()})) == "C3");
}

TEST_CASE("affine marks sum to the Coxeter number") {
  for (auto [t, h] : {std::pair{"G2", 6}, std::pair{"F4", 12}, std::pair{"D4", 6}}) {
    AffineDiagram d = affine_diagram(t, 1);
    CHECK(std::accumulate(d.marks.begin(), d.marks.end(), 0) == h);
    CHECK(coxeter_number(t) == h);
  }
  AffineDiagram tw = affine_diagram("D4", 3);
  CHECK(tw.marks == std::vector<int>{1, 2, 1});
  CHECK(affine_diagram("D4", 1).automorphisms.size() == 24);
  CHECK_THROWS(affine_diagram("E6", 2));
}
