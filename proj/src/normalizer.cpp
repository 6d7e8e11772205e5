#include "solvsph/normalizer.hpp"

#include <algorithm>

#include "solvsph/error.hpp"
#include "solvsph/linalg.hpp"

namespace solvsph {

std::pair<IntegerLattice, IntegerLattice> relation_lattices(const FullDatum& full) {
  const SphericalDatum& d = full.datum;
  QMat gens;
  for (size_t i = 0; i < d.m_roots.size(); ++i)
    for (size_t j = i + 1; j < d.m_roots.size(); ++j)
      if (d.equivalent(static_cast<int>(i), static_cast<int>(j)))
        gens.push_back(to_qvec(root_sub(d.m_roots[i], d.m_roots[j])));
  IntegerLattice L = IntegerLattice::from_generators(d.rs, gens);

  // The same lattice must arise from equivalent pairs across all of Psi.
  const ActiveSet aset = expand_active_set(full);
  QMat psi_gens;
  for (const auto& cls : aset.classes)
    for (size_t a = 0; a < cls.size(); ++a)
      for (size_t b = a + 1; b < cls.size(); ++b)
        psi_gens.push_back(to_qvec(root_sub(aset.roots[cls[a]], aset.roots[cls[b]])));
  if (IntegerLattice::from_generators(d.rs, psi_gens) != L)
    fail(errc::internal, "L from M and L from Psi disagree");

  IntegerLattice L0 = L.saturate();
  return {std::move(L), std::move(L0)};
}

std::vector<int> compute_P_definition(const FullDatum& full) {
  const ActiveSet aset = expand_active_set(full);
  std::vector<int> result;
  for (size_t i = 0; i < aset.roots.size(); ++i) {
    const Root& alpha = aset.roots[i];
    if (RootSystem::height(alpha) != 1) continue;
    if (aset.classes[aset.class_of[i]].size() != 1) continue;  // not regular
    bool orthogonal = true;
    for (size_t j = 0; j < aset.roots.size() && orthogonal; ++j)
      if (j != i && full.datum.rs->pairing_roots(alpha, aset.roots[j]) != 0) orthogonal = false;
    if (!orthogonal) continue;
    for (int k = 0; k < full.datum.rs->rank(); ++k)
      if (alpha[k] == 1) result.push_back(k);
  }
  std::sort(result.begin(), result.end());
  return result;
}

namespace {

bool disconnected_from(const RootSystem& rs, int node, const Root& beta) {
  const std::vector<int> supp = RootSystem::support(beta);
  if (std::binary_search(supp.begin(), supp.end(), node)) return false;
  for (int other : supp)
    if (rs.adjacent(node, other)) return false;
  return true;
}

}  // namespace

std::vector<int> compute_P_criterion(const SphericalDatum& d) {
  const RootSystem& rs = *d.rs;
  const int n = rs.rank();
  std::vector<int> result;

  for (int a = 0; a < n; ++a) {
    Root simple(n, 0);
    simple[a] = 1;
    const auto it = std::find(d.m_roots.begin(), d.m_roots.end(), simple);

    if (it != d.m_roots.end()) {
      // Case 1: a maximal active simple root, inequivalent to and
      // diagram-disconnected from every other root of M.
      const int idx = static_cast<int>(it - d.m_roots.begin());
      bool ok = true;
      for (size_t j = 0; j < d.m_roots.size() && ok; ++j) {
        if (static_cast<int>(j) == idx) continue;
        if (d.equivalent(idx, static_cast<int>(j))) ok = false;
        else if (!disconnected_from(rs, a, d.m_roots[j])) ok = false;
      }
      if (ok) result.push_back(a);
      continue;
    }

    // Case 2: a non-maximal simple root sitting at the short end of a
    // double edge inside the support of a unique all-coefficient-1 root.
    for (size_t bi = 0; bi < d.m_roots.size(); ++bi) {
      const Root& beta = d.m_roots[bi];
      if (beta[a] == 0) continue;
      const std::vector<int> supp = RootSystem::support(beta);
      bool all_one = true;
      for (int k : supp)
        if (beta[k] != 1) all_one = false;
      if (!all_one) continue;                                   // (1)
      if (!rs.terminal_in(a, supp)) continue;                   // (2)
      if (d.labels[bi] == a) continue;                          // (3)
      bool double_edge_to_a = false;                            // (4)
      for (int other : supp)
        if (other != a && rs.edge_multiplicity(a, other) == 2 &&
            rs.length_factors()[a] < rs.length_factors()[other])
          double_edge_to_a = true;
      if (!double_edge_to_a) continue;
      bool isolated = true;                                     // (5)
      for (size_t j = 0; j < d.m_roots.size() && isolated; ++j)
        if (j != bi && !disconnected_from(rs, a, d.m_roots[j])) isolated = false;
      if (isolated) {
        result.push_back(a);
        break;
      }
    }
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::vector<int> compute_P_S(const FullDatum& full, const std::vector<int>& P) {
  std::vector<int> out;
  for (int delta : P)
    if (full.torus.ker_tau.reflected(delta) == full.torus.ker_tau) out.push_back(delta);
  return out;
}

namespace {

void theory_assertions(const FullDatum& full, const ActiveSet& aset) {
  // Each tau-class lies in M or misses M entirely.
  for (const auto& cls : aset.classes) {
    int in_m = 0;
    for (int i : cls)
      if (std::find(full.datum.m_roots.begin(), full.datum.m_roots.end(), aset.roots[i]) !=
          full.datum.m_roots.end())
        ++in_m;
    if (in_m != 0 && in_m != static_cast<int>(cls.size()))
      fail(errc::internal, "a tau-class straddles the boundary of M");
  }
  // Equal labels force equal tau-classes.
  for (size_t i = 0; i < aset.roots.size(); ++i)
    for (size_t j = i + 1; j < aset.roots.size(); ++j)
      if (aset.labels[i] == aset.labels[j] && aset.class_of[i] != aset.class_of[j])
        fail(errc::internal, "equal labels in different tau-classes");
}

}  // namespace

NormalizerReport normalizer_report(const FullDatum& full) {
  const ValidationReport v = validate(full);
  if (!v.valid()) fail(errc::invalid_datum, v.witness.empty() ? "validation failed" : v.witness);

  const RootSystemPtr& rs = full.datum.rs;
  const int n = rs->rank();
  const ActiveSet aset = expand_active_set(full);
  theory_assertions(full, aset);

  auto [L, L0] = relation_lattices(full);

  NormalizerReport rep(L, L0);
  rep.component_group_L = IntegerLattice::quotient_invariants(L0, L);

  rep.P = compute_P_criterion(full.datum);
  const std::vector<int> p_def = compute_P_definition(full);
  if (rep.P != p_def) fail(errc::internal, "support criterion and definition of P disagree");
  rep.P_S = compute_P_S(full, rep.P);
  rep.r = static_cast<int>(rep.P_S.size());

  rep.dims.dim_T = n;
  rep.dims.dim_S = n - full.torus.ker_tau.rank();
  rep.dims.dim_A0 = n - L.rank();
  rep.dims.num_classes = static_cast<int>(aset.classes.size());
  rep.dims.dim_N = static_cast<int>(rs->positive_roots().size()) - rep.dims.num_classes;
  rep.dims.dim_H = rep.dims.dim_S + rep.dims.dim_N;
  rep.dims.dim_NGH0 = rep.dims.dim_A0 + rep.dims.dim_N;

  // A/S is diagonalizable with character group Ker tau / L.
  rep.quotient_NH.torus_rank = full.torus.ker_tau.rank() - L.rank();
  rep.quotient_NH.torsion = IntegerLattice::embedding_torsion(full.torus.ker_tau, L);
  rep.quotient_NH.two_torsion_rank = rep.r;
  if (rep.quotient_NH.torsion != rep.component_group_L)
    fail(errc::internal, "torsion of Ker tau / L differs from L0/L");

  rep.quotient_components.torus_rank = 0;
  rep.quotient_components.torsion = rep.component_group_L;
  rep.quotient_components.two_torsion_rank = rep.r;

  rep.generators.push_back("A");
  rep.generators.push_back("N");
  for (int delta : rep.P_S) rep.generators.push_back("rho_alpha" + std::to_string(delta + 1));
  return rep;
}

DoubleNormalizerResult double_normalizer_report(const FullDatum& full) {
  NormalizerReport base = normalizer_report(full);
  const bool stable = base.P == base.P_S;
  FullDatum sober = make_full_datum(full.datum, base.L0);
  NormalizerReport rep = normalizer_report(sober);
  return DoubleNormalizerResult{stable, std::move(sober), std::move(rep)};
}

}  // namespace solvsph
