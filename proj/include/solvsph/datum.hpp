#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "solvsph/lattice.hpp"
#include "solvsph/root_system.hpp"

namespace solvsph {

// The combinatorial datum Upsilon_0 = (M, pi, ~): maximal active roots, their
// labels, and an equivalence relation on M. Kept in canonical form: m_roots
// lex-sorted and distinct, equiv blocks sorted by least member.
struct SphericalDatum {
  RootSystemPtr rs;
  std::vector<Root> m_roots;
  std::vector<int> labels;                  // labels[i] in Supp(m_roots[i])
  std::vector<std::vector<int>> equiv;      // partition of {0, ..., |M|)

  bool equivalent(int i, int j) const;
};

SphericalDatum make_datum(RootSystemPtr rs, std::vector<std::pair<Root, int>> labelled_roots,
                          std::vector<std::vector<int>> equiv_blocks);

std::vector<std::vector<int>> canonical_partition(std::vector<std::vector<int>> blocks);

// Pi_0: the union of the supports of the maximal active roots.
std::vector<int> support_union(const SphericalDatum& d);

// Ker tau, encoding the torus S = H ∩ T as a primitive sublattice of X(T).
struct TorusDatum {
  IntegerLattice ker_tau;
};

// Upsilon = (S, M, pi, ~). The equivalence on M is authoritative from
// Ker tau; a declared equiv that disagrees fails validation.
struct FullDatum {
  SphericalDatum datum;
  TorusDatum torus;
};

// Builds a FullDatum with equiv derived from Ker tau.
FullDatum make_full_datum(SphericalDatum base, IntegerLattice ker_tau);

std::vector<std::vector<int>> derive_equiv(const std::vector<Root>& roots,
                                           const IntegerLattice& ker_tau);

// The full set of active roots with labels and tau-classes.
struct ActiveSet {
  std::vector<Root> roots;                  // Psi, lex-sorted
  std::vector<int> labels;                  // pi per root
  std::vector<std::vector<int>> classes;    // partition of root indices
  std::vector<int> class_of;

  int index_of(const Root& r) const;
};

// F(alpha): alpha together with its active subordinates, each with its label.
// The labeling is the unique assignment compatible with the decomposition
// rule; throws errc::no_consistent_labeling for an invalid (alpha, pa) pair
// and errc::ambiguous_labeling if uniqueness ever failed (it must not).
std::vector<std::pair<Root, int>> compute_family(const RootSystem& rs, const Root& alpha, int pa);

// Psi = union of F(alpha) over alpha in M; labels merged
// (errc::label_conflict if a root acquires two labels); tau-classes from
// exact membership of differences in Ker tau.
ActiveSet expand_active_set(const FullDatum& full);

// Roots alone in their tau-class.
std::vector<Root> regular_roots(const ActiveSet& aset);

struct SphericityResult {
  bool spherical = false;
  std::vector<Root> class_reps;
  // When not spherical: rational coefficients on class_reps witnessing a
  // dependence modulo the span of Ker tau.
  QVec dependence;
};

SphericityResult check_sphericity(const FullDatum& full);

}  // namespace solvsph
