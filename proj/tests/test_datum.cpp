#include <doctest.h>

#include <algorithm>
#include <set>

#include "solvsph/classifier.hpp"
#include "solvsph/datum.hpp"
#include "solvsph/enumerator.hpp"
#include "solvsph/error.hpp"
#include "solvsph/linalg.hpp"

using namespace solvsph;

namespace {

RootSystemPtr rs_of(const std::string& type, LatticeKind kind = LatticeKind::adjoint) {
  return build_root_system(parse_type_string(type), kind);
}

// The running SL3 example: M = {alpha1}, Ker tau = <omega1 - omega2>.
FullDatum sl3_datum() {
  auto rs = rs_of("A2", LatticeKind::simply_connected);
  SphericalDatum d = make_datum(rs, {{{1, 0}, 0}}, {{0}});
  auto ker = IntegerLattice::from_generators(rs, {{Rat(1) / 3, Rat(-1) / 3}});
  return make_full_datum(std::move(d), std::move(ker));
}

}  // namespace

TEST_CASE("compute_family basics") {
  auto a2 = rs_of("A2");
  auto fam = compute_family(*a2, {1, 1}, 0);
  REQUIRE(fam.size() == 2);
  CHECK(fam[0] == std::pair<Root, int>{{0, 1}, 1});
  CHECK(fam[1] == std::pair<Root, int>{{1, 1}, 0});

  auto single = compute_family(*a2, {1, 0}, 0);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == std::pair<Root, int>{{1, 0}, 0});
}

TEST_CASE("compute_family in B3") {
  auto b3 = rs_of("B3");
  auto fam = compute_family(*b3, {1, 1, 2}, 0);
  REQUIRE(fam.size() == 3);
  std::set<std::pair<Root, int>> got(fam.begin(), fam.end());
  CHECK(got.count({{1, 1, 2}, 0}));
  CHECK(got.count({{0, 1, 2}, 1}));
  CHECK(got.count({{0, 0, 1}, 2}));
}

TEST_CASE("compute_family rejects bad pairs") {
  auto b2 = rs_of("B2");
  CHECK_THROWS_AS(compute_family(*b2, {1, 2}, 1), error);  // label at the doubled short root
  CHECK_THROWS_AS(compute_family(*b2, {1, 0}, 1), error);  // label outside the support
}

TEST_CASE("family invariants over all admissible pairs up to rank 4") {
  for (const char* type :
       {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "F4", "G2"}) {
    auto rs = rs_of(type);
    for (const Root& alpha : rs->positive_roots()) {
      for (int pa : RootSystem::support(alpha)) {
        if (!table1_check(*rs, alpha, pa).accepted) continue;
        const auto fam = compute_family(*rs, alpha, pa);
        const auto supp = RootSystem::support(alpha);
        CHECK(fam.size() == supp.size());

        // Labels biject onto the support.
        std::set<int> labels;
        for (const auto& [root, label] : fam) labels.insert(label);
        CHECK(labels == std::set<int>(supp.begin(), supp.end()));

        // <F(alpha)> = <Supp alpha>.
        QMat span;
        for (const auto& [root, label] : fam) span.push_back(to_qvec(root));
        CHECK(rank_of(span) == static_cast<int>(supp.size()));
      }
    }
  }
}

TEST_CASE("expand_active_set for the SL3 example") {
  const FullDatum full = sl3_datum();
  const ActiveSet aset = expand_active_set(full);
  REQUIRE(aset.roots.size() == 1);
  CHECK(aset.roots[0] == Root{1, 0});
  CHECK(aset.classes.size() == 1);
  CHECK(regular_roots(aset) == std::vector<Root>{{1, 0}});
}

TEST_CASE("expand_active_set with empty M") {
  auto rs = rs_of("B2");
  FullDatum full = make_full_datum(make_datum(rs, {}, {}), IntegerLattice::zero(rs));
  const ActiveSet aset = expand_active_set(full);
  CHECK(aset.roots.empty());
  CHECK(aset.classes.empty());
}

TEST_CASE("expand_active_set for B2 with the sober torus") {
  auto rs = rs_of("B2");
  SphericalDatum d = make_datum(rs, {{{1, 1}, 0}}, {{0}});
  const FullDatum full = sober_torus(d);
  const ActiveSet aset = expand_active_set(full);
  REQUIRE(aset.roots.size() == 2);
  CHECK(aset.roots[0] == Root{0, 1});
  CHECK(aset.roots[1] == Root{1, 1});
  CHECK(aset.classes.size() == 2);
  CHECK(regular_roots(aset).size() == 2);
}

TEST_CASE("two equivalent maximal roots are not regular") {
  auto rs = rs_of("A1xA1");
  SphericalDatum d = make_datum(rs, {{{1, 0}, 0}, {{0, 1}, 1}}, {{0, 1}});
  const FullDatum full = sober_torus(d);
  const ActiveSet aset = expand_active_set(full);
  CHECK(aset.classes.size() == 1);
  CHECK(regular_roots(aset).empty());
}

TEST_CASE("sphericity of the SL3 example") {
  CHECK(check_sphericity(sl3_datum()).spherical);
}

TEST_CASE("zero class weight is never spherical") {
  auto rs = rs_of("A2");
  SphericalDatum d = make_datum(rs, {{{1, 0}, 0}}, {{0}});
  // Ker tau = X(T): the torus S is trivial and the class weight vanishes.
  FullDatum full = make_full_datum(std::move(d), IntegerLattice::full(rs));
  const SphericityResult res = check_sphericity(full);
  CHECK_FALSE(res.spherical);
  REQUIRE(res.dependence.size() == 1);
  CHECK(res.dependence[0] != 0);
}

TEST_CASE("empty family is spherical") {
  auto rs = rs_of("A2");
  FullDatum full = make_full_datum(make_datum(rs, {}, {}), IntegerLattice::zero(rs));
  CHECK(check_sphericity(full).spherical);
}

TEST_CASE("label conflict on an inconsistent union") {
  auto a3 = rs_of("A3");
  SphericalDatum d = make_datum(a3, {{{1, 1, 0}, 0}, {{1, 1, 1}, 2}}, {{0}, {1}});
  FullDatum full{std::move(d), TorusDatum{IntegerLattice::zero(a3)}};
  CHECK_THROWS_AS(expand_active_set(full), error);
}

TEST_CASE("subordinate containment: families restrict to families") {
  for (const char* type : {"A3", "B3", "C3", "F4", "G2"}) {
    auto rs = rs_of(type);
    for (const Root& alpha : rs->positive_roots()) {
      for (int pa : RootSystem::support(alpha)) {
        if (!table1_check(*rs, alpha, pa).accepted) continue;
        const auto fam = compute_family(*rs, alpha, pa);
        for (const auto& [beta, pb] : fam) {
          CHECK(table1_check(*rs, beta, pb).accepted);
          const auto sub = compute_family(*rs, beta, pb);
          // F(beta) = members of F(alpha) supported inside Supp beta.
          std::set<std::pair<Root, int>> expected;
          const auto bsupp = RootSystem::support(beta);
          for (const auto& entry : fam) {
            const auto s = RootSystem::support(entry.first);
            if (std::includes(bsupp.begin(), bsupp.end(), s.begin(), s.end()))
              expected.insert(entry);
          }
          CHECK(std::set<std::pair<Root, int>>(sub.begin(), sub.end()) == expected);
        }
      }
    }
  }
}

TEST_CASE("active roots supported inside a maximal root lie in its family") {
  for (const char* type : {"A3", "B3", "C3", "D4", "F4"}) {
    auto rs = rs_of(type);
    for (const FullDatum& full : enumerate_sober(rs, {}).data) {
      const ActiveSet aset = expand_active_set(full);
      for (size_t mi = 0; mi < full.datum.m_roots.size(); ++mi) {
        const auto fam =
            compute_family(*rs, full.datum.m_roots[mi], full.datum.labels[mi]);
        std::set<Root> family_roots;
        for (const auto& [root, label] : fam) family_roots.insert(root);
        const auto msupp = RootSystem::support(full.datum.m_roots[mi]);
        for (const Root& beta : aset.roots) {
          const auto bsupp = RootSystem::support(beta);
          if (std::includes(msupp.begin(), msupp.end(), bsupp.begin(), bsupp.end()))
            CHECK(family_roots.count(beta) == 1);
        }
      }
    }
  }
}

TEST_CASE("tau-classes translate: beta - alpha positive moves whole classes") {
  // If alpha and beta are active with gamma = beta - alpha a positive root,
  // then adding gamma maps the tau-class of alpha into the class of beta.
  for (const char* type : {"A3", "B3", "C3", "G2"}) {
    auto rs = rs_of(type);
    for (const FullDatum& full : enumerate_sober(rs, {}).data) {
      const ActiveSet aset = expand_active_set(full);
      for (size_t i = 0; i < aset.roots.size(); ++i)
        for (size_t j = 0; j < aset.roots.size(); ++j) {
          if (i == j) continue;
          const Root gamma = root_sub(aset.roots[j], aset.roots[i]);
          bool nonneg = true;
          for (int c : gamma)
            if (c < 0) nonneg = false;
          if (!nonneg || !rs->is_positive_root(gamma)) continue;
          for (int k : aset.classes[aset.class_of[i]]) {
            const Root moved = root_add(aset.roots[k], gamma);
            const int idx = aset.index_of(moved);
            REQUIRE(idx >= 0);
            CHECK(aset.class_of[idx] == aset.class_of[j]);
          }
        }
    }
  }
}
