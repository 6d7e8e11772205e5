#pragma once

#include <string>
#include <utility>
#include <vector>

#include "solvsph/classifier.hpp"
#include "solvsph/datum.hpp"
#include "solvsph/lattice.hpp"

namespace solvsph {

// A finitely generated diagonalizable quotient: T^torus_rank × Π Z/d × (Z/2)^r.
struct QuotientDesc {
  int torus_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1
  int two_torsion_rank = 0;

  bool trivial() const { return torus_rank == 0 && torsion.empty() && two_torsion_rank == 0; }
  bool operator==(const QuotientDesc&) const = default;
};

struct NormalizerDims {
  int dim_T = 0;
  int dim_S = 0;
  int dim_A0 = 0;
  int num_classes = 0;  // m, the number of tau-classes of Psi
  int dim_N = 0;
  int dim_H = 0;
  int dim_NGH0 = 0;

  bool operator==(const NormalizerDims&) const = default;
};

// The computed structure of N_G(H): N_G(H)^0 = A_0 ⋉ N, N_G(H) generated by
// A, N and the elements rho_delta for delta in P_S.
struct NormalizerReport {
  NormalizerReport(IntegerLattice l, IntegerLattice l0) : L(std::move(l)), L0(std::move(l0)) {}

  IntegerLattice L;
  IntegerLattice L0;
  std::vector<Int> component_group_L;  // invariant factors of L0/L
  std::vector<int> P;                  // simple root indices, sorted
  std::vector<int> P_S;
  int r = 0;                           // |P_S|
  NormalizerDims dims;
  QuotientDesc quotient_NH;            // N_G(H)/H  ≅ A/S × (Z/2)^r
  QuotientDesc quotient_components;    // N_G(H)/N_G(H)^0 ≅ L0/L × (Z/2)^r
  std::vector<std::string> generators; // "A", "N", "rho_alphaK"
};

// L from differences of equivalent maximal active roots, L0 its saturation.
// Cross-checks that differences over all of Psi generate the same L.
std::pair<IntegerLattice, IntegerLattice> relation_lattices(const FullDatum& full);

// P by its definition: regular active simple roots orthogonal to every other
// active root.
std::vector<int> compute_P_definition(const FullDatum& full);

// P from (M, pi, ~) alone, by the two-case support criterion; needs no torus
// and no expansion of Psi.
std::vector<int> compute_P_criterion(const SphericalDatum& d);

// P_S = { delta in P : r_delta(Ker tau) = Ker tau }.
std::vector<int> compute_P_S(const FullDatum& full, const std::vector<int>& P);

// Full report; throws errc::invalid_datum when validation fails and
// errc::internal if the two P computations ever disagree.
NormalizerReport normalizer_report(const FullDatum& full);

struct DoubleNormalizerResult {
  bool stable = false;        // N_G(N_G(H)) = N_G(H), i.e. P = P_S
  FullDatum sober_datum;      // datum of N_G(H)^0 = A_0 ⋉ N (Ker tau = L0)
  NormalizerReport report;    // normalizer structure of N_G(H)^0
};

DoubleNormalizerResult double_normalizer_report(const FullDatum& full);

}  // namespace solvsph
