#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "solvsph/error.hpp"
#include "solvsph/lattice.hpp"
#include "solvsph/linalg.hpp"

using namespace solvsph;

namespace {

RootSystemPtr z2() { return build_root_system({{Family::A, 1}, {Family::A, 1}}, LatticeKind::adjoint); }
RootSystemPtr z3() {
  return build_root_system({{Family::A, 1}, {Family::A, 1}, {Family::A, 1}}, LatticeKind::adjoint);
}

QMat qm(std::vector<std::vector<long>> rows) {
  QMat out;
  for (auto& r : rows) {
    QVec v;
    for (long x : r) v.push_back(Rat(x));
    out.push_back(std::move(v));
  }
  return out;
}

// Elementary divisors of Z^n / L by explicit coset enumeration, assembled
// into invariant factors. Only for small index.
std::vector<Int> coset_invariant_factors(const IntegerLattice& lat, int n) {
  auto reduce = [&](std::vector<long> v) {
    const IMat& basis = lat.basis_coords();
    for (const IVec& row : basis) {
      int p = 0;
      while (row[p] == 0) ++p;
      const long piv = row[p].get_si();
      long q = v[p] >= 0 ? v[p] / piv : -((-v[p] + piv - 1) / piv);
      for (size_t j = 0; j < v.size(); ++j) v[j] -= q * row[j].get_si();
    }
    return v;
  };
  std::set<std::vector<long>> cosets;
  std::vector<std::vector<long>> frontier{reduce(std::vector<long>(n, 0))};
  cosets.insert(frontier[0]);
  while (!frontier.empty()) {
    auto cur = frontier.back();
    frontier.pop_back();
    for (int i = 0; i < n; ++i) {
      auto next = cur;
      next[i] += 1;
      next = reduce(next);
      if (cosets.insert(next).second) frontier.push_back(next);
    }
  }
  const long order = static_cast<long>(cosets.size());

  auto killed_by = [&](long m) {
    long cnt = 0;
    for (const auto& g : cosets) {
      std::vector<long> mg(g.size());
      for (size_t j = 0; j < g.size(); ++j) mg[j] = m * g[j];
      if (reduce(mg) == std::vector<long>(g.size(), 0)) ++cnt;
    }
    return cnt;
  };

  // #{g : p^k g = 0} = p^(sum_i min(k, e_i)) determines the p-exponents e_i.
  std::map<long, std::vector<int>> p_exponents;  // prime -> exponents, descending
  for (long p : {2L, 3L, 5L, 7L, 11L}) {
    if (order % p != 0) continue;
    std::vector<long> m_k;  // m_k[k-1] = #{i : e_i >= k}
    long prev_s = 0, pk = p;
    for (;;) {
      long c = killed_by(pk), s = 0;
      while (c % p == 0) c /= p, ++s;
      if (s == prev_s) break;
      m_k.push_back(s - prev_s);
      prev_s = s;
      pk *= p;
    }
    std::vector<int> exps;
    for (size_t k = 1; k <= m_k.size(); ++k) {
      const long cnt = m_k[k - 1] - (k < m_k.size() ? m_k[k] : 0);
      for (long c = 0; c < cnt; ++c) exps.push_back(static_cast<int>(k));
    }
    std::sort(exps.rbegin(), exps.rend());
    p_exponents[p] = exps;
  }

  // Largest invariant factor collects the largest power of every prime.
  size_t slots = 0;
  for (auto& [p, exps] : p_exponents) slots = std::max(slots, exps.size());
  std::vector<Int> descending(slots, Int(1));
  for (auto& [p, exps] : p_exponents)
    for (size_t i = 0; i < exps.size(); ++i) {
      Int power = 1;
      for (int e = 0; e < exps[i]; ++e) power *= p;
      descending[i] *= power;
    }
  std::vector<Int> out;
  for (auto it = descending.rbegin(); it != descending.rend(); ++it)
    if (*it > 1) out.push_back(*it);
  return out;
}

}  // namespace

TEST_CASE("canonical basis examples") {
  auto rs = z2();
  auto lat = IntegerLattice::from_generators(rs, qm({{2, 0}, {0, 3}, {2, 3}}));
  CHECK(lat.basis_vectors() == qm({{2, 0}, {0, 3}}));

  CHECK(IntegerLattice::from_generators(rs, {}).rank() == 0);
  CHECK(IntegerLattice::from_generators(rs, qm({{1, 1}, {1, -1}})).basis_vectors() ==
        qm({{1, 1}, {0, 2}}));
}

TEST_CASE("generator outside ambient") {
  auto rs = z2();
  CHECK_THROWS_AS(IntegerLattice::from_generators(rs, {{Rat(1) / 2, Rat(0)}}), error);
}

TEST_CASE("membership and spans") {
  auto rs = z2();
  auto lat = IntegerLattice::from_generators(rs, qm({{2, 0}}));
  CHECK(lat.contains({Rat(4), Rat(0)}));
  CHECK_FALSE(lat.contains({Rat(1), Rat(0)}));
  CHECK_FALSE(lat.contains({Rat(2), Rat(1)}));
}

TEST_CASE("saturation") {
  auto rs = z2();
  auto lat = IntegerLattice::from_generators(rs, qm({{2, 0}}));
  CHECK(lat.saturate().basis_vectors() == qm({{1, 0}}));
  CHECK(IntegerLattice::zero(rs).saturate().rank() == 0);
  CHECK(lat.saturate().saturate() == lat.saturate());
}

TEST_CASE("saturation of a multiple of a weight difference in A2") {
  auto rs = build_root_system({{Family::A, 2}}, LatticeKind::simply_connected);
  // 3(omega1 - omega2) = alpha1 - alpha2.
  auto lat = IntegerLattice::from_generators(rs, {{Rat(1), Rat(-1)}});
  auto sat = lat.saturate();
  CHECK(sat.rank() == 1);
  CHECK(sat.contains({Rat(1) / 3, Rat(-1) / 3}));  // omega1 - omega2
  CHECK(IntegerLattice::quotient_invariants(sat, lat) == std::vector<Int>{Int(3)});
}

TEST_CASE("quotient invariants") {
  auto rs = z2();
  auto big = IntegerLattice::from_generators(rs, qm({{1, 0}}));
  auto small = IntegerLattice::from_generators(rs, qm({{2, 0}}));
  CHECK(IntegerLattice::quotient_invariants(big, small) == std::vector<Int>{Int(2)});
  CHECK(IntegerLattice::quotient_invariants(big, big).empty());

  auto full = IntegerLattice::full(rs);
  auto diag = IntegerLattice::from_generators(rs, qm({{2, 0}, {0, 3}}));
  CHECK(IntegerLattice::quotient_invariants(full, diag) == std::vector<Int>{Int(6)});

  CHECK_THROWS_AS(IntegerLattice::quotient_invariants(small, big), error);
  auto line = IntegerLattice::from_generators(rs, qm({{1, 1}}));
  CHECK_THROWS_AS(IntegerLattice::quotient_invariants(full, line), error);
}

TEST_CASE("quotient invariants match coset enumeration") {
  auto rs = z3();
  std::mt19937 rng(20240808);
  std::uniform_int_distribution<int> entry(-4, 4);
  int done = 0;
  while (done < 60) {
    QMat gen(3, QVec(3));
    for (auto& row : gen)
      for (auto& x : row) x = Rat(entry(rng));
    auto lat = IntegerLattice::from_generators(rs, gen);
    if (lat.rank() != 3) continue;
    Int index = 1;
    for (const auto& row : lat.basis_coords()) {
      int p = 0;
      while (row[p] == 0) ++p;
      index *= row[p];
    }
    if (index > 12) continue;
    ++done;
    auto inv = IntegerLattice::quotient_invariants(IntegerLattice::full(rs), lat);
    CHECK(inv == coset_invariant_factors(lat, 3));
    Int prod = 1;
    for (const Int& d : inv) prod *= d;
    CHECK(prod == index);
  }
}
