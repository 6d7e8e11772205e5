#pragma once

#include <vector>

#include "solvsph/numeric.hpp"
#include "solvsph/root_system.hpp"

namespace solvsph {

// A sublattice of the character lattice X(T), stored as a canonical
// Hermite-echelon basis in X(T)-coordinates. Two lattices are equal iff
// their canonical bases are equal. Pure value semantics.
class IntegerLattice {
 public:
  // Generators are rational vectors in root coordinates; each must lie in
  // X(T) (errc::generator_outside_ambient otherwise).
  static IntegerLattice from_generators(RootSystemPtr rs, const QMat& generators);
  static IntegerLattice zero(RootSystemPtr rs);
  // The full character lattice X(T) itself.
  static IntegerLattice full(RootSystemPtr rs);

  const RootSystemPtr& ambient() const { return rs_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  const IMat& basis_coords() const { return basis_; }
  // Canonical basis rows in root coordinates.
  QMat basis_vectors() const;

  bool contains(const QVec& v_root_coords) const;
  bool operator==(const IntegerLattice& o) const;
  bool operator!=(const IntegerLattice& o) const { return !(*this == o); }

  // (rational span of this) ∩ X(T); primitive, contains this with finite index.
  IntegerLattice saturate() const;
  bool is_primitive() const { return *this == saturate(); }

  // Image of the lattice under a simple reflection.
  IntegerLattice reflected(int delta) const;

  // Basis of the rational span, in root coordinates.
  QMat span() const { return basis_vectors(); }

  // Invariant factors > 1 of big/small. Requires small ⊆ big
  // (errc::not_sublattice) with equal rational spans (errc::rank_mismatch).
  static std::vector<Int> quotient_invariants(const IntegerLattice& big,
                                              const IntegerLattice& small);

  // Torsion invariant factors (> 1) of big/small for small ⊆ big of any rank.
  static std::vector<Int> embedding_torsion(const IntegerLattice& big,
                                            const IntegerLattice& small);

 private:
  IntegerLattice(RootSystemPtr rs, IMat basis) : rs_(std::move(rs)), basis_(std::move(basis)) {}

  RootSystemPtr rs_;
  IMat basis_;
};

}  // namespace solvsph
