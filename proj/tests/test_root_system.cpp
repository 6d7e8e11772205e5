#include <doctest.h>

#include <random>

#include "solvsph/error.hpp"
#include "solvsph/root_system.hpp"

using namespace solvsph;

namespace {

RootSystemPtr rs_of(const std::string& type, LatticeKind kind = LatticeKind::adjoint) {
  return build_root_system(parse_type_string(type), kind);
}

}  // namespace

TEST_CASE("positive root closure per family") {
  CHECK(rs_of("A2")->positive_roots().size() == 3);
  CHECK(rs_of("A4")->positive_roots().size() == 10);
  CHECK(rs_of("B2")->positive_roots().size() == 4);
  CHECK(rs_of("B4")->positive_roots().size() == 16);
  CHECK(rs_of("C3")->positive_roots().size() == 9);
  CHECK(rs_of("D4")->positive_roots().size() == 12);
  CHECK(rs_of("F4")->positive_roots().size() == 24);
  CHECK(rs_of("G2")->positive_roots().size() == 6);
  CHECK(rs_of("E6")->positive_roots().size() == 36);
  CHECK(rs_of("E7")->positive_roots().size() == 63);
  CHECK(rs_of("E8")->positive_roots().size() == 120);
  CHECK(rs_of("A2xB2")->positive_roots().size() == 7);
}

TEST_CASE("A2 adjoint roots") {
  auto rs = rs_of("A2");
  CHECK(rs->is_positive_root({1, 0}));
  CHECK(rs->is_positive_root({0, 1}));
  CHECK(rs->is_positive_root({1, 1}));
  CHECK_FALSE(rs->is_positive_root({2, 1}));
}

TEST_CASE("G2 contains the long strings") {
  auto rs = rs_of("G2");
  CHECK(rs->is_positive_root({2, 1}));
  CHECK(rs->is_positive_root({3, 1}));
  CHECK(rs->is_positive_root({3, 2}));
}

TEST_CASE("illegal ranks") {
  CHECK_THROWS_AS(rs_of("B1"), error);
  CHECK_THROWS_AS(rs_of("D2"), error);
  CHECK_THROWS_AS(rs_of("E9"), error);
  CHECK_THROWS_AS(rs_of("F3"), error);
}

TEST_CASE("custom lattice must sit between root and weight lattice") {
  auto comps = parse_type_string("B2");
  // (0, 1/2) is not a weight of B2.
  QMat bad{{Rat(1), Rat(0)}, {Rat(0), Rat(1) / 2}};
  CHECK_THROWS_AS(build_root_system(comps, LatticeKind::custom, bad), error);

  // The weight lattice itself is fine.
  QMat weights{{Rat(1), Rat(1)}, {Rat(1) / 2, Rat(1)}};
  auto rs = build_root_system(comps, LatticeKind::custom, weights);
  CHECK(rs->in_character_lattice({Rat(1) / 2, Rat(1)}));
}

TEST_CASE("pairing normalization on B2") {
  auto rs = rs_of("B2");
  // alpha1 long, alpha2 short. (alpha2, alpha1 + alpha2) = 0.
  CHECK(rs->pairing_roots({0, 1}, {1, 1}) == 0);
  CHECK(rs->pairing_roots({1, 0}, {1, 1}) == 2);
  CHECK(rs->pairing_roots({0, 1}, {0, 1}) == 2);  // short squared length 2
  CHECK(rs->pairing_roots({1, 0}, {1, 0}) == 4);
}

TEST_CASE("pairing dimension mismatch") {
  auto rs = rs_of("A2");
  CHECK_THROWS_AS(rs->pairing({Rat(1)}, {Rat(1), Rat(0)}), error);
}

TEST_CASE("reflection examples in A2") {
  auto rs = rs_of("A2");
  CHECK(rs->reflect_root(0, {0, 1}) == Root{1, 1});
  // r_{alpha1}(alpha1 - alpha2) = -2 alpha1 - alpha2
  CHECK(rs->reflect_root(0, {1, -1}) == Root{-2, -1});
}

TEST_CASE("reflections are involutive isometries preserving X(T)") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (const char* type : {"A2", "B3", "G2", "C3"}) {
    for (LatticeKind kind : {LatticeKind::adjoint, LatticeKind::simply_connected}) {
      auto rs = build_root_system(parse_type_string(type), kind);
      const int n = rs->rank();
      for (int trial = 0; trial < 25; ++trial) {
        IVec coords(n);
        for (auto& c : coords) c = coeff(rng);
        QVec v = rs->from_lattice_coords(coords);
        IVec coords2(n);
        for (auto& c : coords2) c = coeff(rng);
        QVec w = rs->from_lattice_coords(coords2);
        for (int delta = 0; delta < n; ++delta) {
          QVec rv = rs->reflect(delta, v);
          CHECK(rs->in_character_lattice(rv));
          CHECK(rs->reflect(delta, rv) == v);
          CHECK(rs->pairing(rv, rs->reflect(delta, w)) == rs->pairing(v, w));
        }
      }
    }
  }
}

TEST_CASE("decompositions") {
  auto a2 = rs_of("A2");
  auto d = a2->decompositions({1, 1});
  REQUIRE(d.size() == 1);
  CHECK(d[0].first == Root{0, 1});
  CHECK(d[0].second == Root{1, 0});

  auto b2 = rs_of("B2");
  auto db = b2->decompositions({1, 2});
  REQUIRE(db.size() == 1);
  CHECK(db[0].first == Root{0, 1});
  CHECK(db[0].second == Root{1, 1});

  CHECK(RootSystem::height({3, 1}) == 4);
}

TEST_CASE("support union over decompositions") {
  for (const char* type : {"A3", "B3", "G2", "F4"}) {
    auto rs = rs_of(type);
    for (const Root& alpha : rs->positive_roots()) {
      const auto supp = RootSystem::support(alpha);
      for (const auto& [beta, gamma] : rs->decompositions(alpha)) {
        std::vector<int> u;
        for (int i = 0; i < rs->rank(); ++i)
          if (beta[i] != 0 || gamma[i] != 0) u.push_back(i);
        CHECK(u == supp);
      }
    }
  }
}

TEST_CASE("subdiagram structure") {
  auto b2 = rs_of("B2");
  auto info = b2->subdiagram({0, 1});
  REQUIRE(info.components.size() == 1);
  CHECK(info.terminals[0] == std::vector<int>{0, 1});
  REQUIRE(info.edges.size() == 1);
  CHECK(info.edges[0].multiplicity == 2);
  CHECK(info.edges[0].arrow_to == 1);  // arrow points at the short root

  auto a3 = rs_of("A3");
  CHECK(a3->subdiagram({0, 2}).components.size() == 2);

  auto f4 = rs_of("F4");
  auto mid = f4->subdiagram({1, 2});
  REQUIRE(mid.edges.size() == 1);
  CHECK(mid.edges[0].multiplicity == 2);
}

TEST_CASE("weight lattice coordinates in A2") {
  auto rs = rs_of("A2", LatticeKind::simply_connected);
  // omega1 = (2/3, 1/3) generates together with omega2.
  CHECK(rs->in_character_lattice({Rat(2) / 3, Rat(1) / 3}));
  CHECK(rs->in_character_lattice({Rat(1) / 3, Rat(2) / 3}));
  CHECK_FALSE(rs->in_character_lattice({Rat(1) / 3, Rat(1) / 3}));
  CHECK(rs->in_character_lattice({Rat(1), Rat(0)}));
}

TEST_CASE("diagram automorphisms") {
  CHECK(rs_of("A2")->diagram_automorphisms().size() == 2);
  CHECK(rs_of("B2")->diagram_automorphisms().size() == 1);
  CHECK(rs_of("D4")->diagram_automorphisms().size() == 6);
  CHECK(rs_of("A1xA1")->diagram_automorphisms().size() == 2);
  CHECK(rs_of("A2xB2")->diagram_automorphisms().size() == 2);
}

TEST_CASE("pairing is positive definite on random vectors") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(-5, 5);
  for (const char* type : {"A3", "B3", "C3", "G2", "F4"}) {
    auto rs = rs_of(type);
    for (int trial = 0; trial < 20; ++trial) {
      QVec v(rs->rank());
      bool zero = true;
      for (auto& x : v) {
        x = Rat(num(rng), 1 + std::uniform_int_distribution<int>(0, 3)(rng));
        x.canonicalize();
        if (x != 0) zero = false;
      }
      if (zero) continue;
      CHECK(rs->pairing(v, v) > 0);
    }
  }
}

TEST_CASE("custom lattice must contain the simple roots") {
  // 2Z inside the A1 root lattice leaves alpha outside.
  CHECK_THROWS_AS(build_root_system(parse_type_string("A1"), LatticeKind::custom, {{Rat(2)}}),
                  error);
  // Rank-deficient generator sets are rejected.
  CHECK_THROWS_AS(
      build_root_system(parse_type_string("A2"), LatticeKind::custom, {{Rat(1), Rat(0)}}),
      error);
}
