#include "solvsph/lattice.hpp"

#include <algorithm>

#include "solvsph/error.hpp"
#include "solvsph/linalg.hpp"

namespace solvsph {

namespace {

void require_same_ambient(const IntegerLattice& a, const IntegerLattice& b) {
  if (a.ambient() == b.ambient()) return;
  if (!(*a.ambient() == *b.ambient())) fail(errc::ambient_mismatch, "lattices in different X(T)");
}

// Coordinates of the rows of `small` with respect to the rows of `big`
// (exact rational solve). Non-integer entries mean small is not a sublattice.
IMat coords_in(const IMat& big, const IMat& small, bool* integral, bool* in_span) {
  *integral = true;
  *in_span = true;
  QMat bigq(big.size());
  for (size_t i = 0; i < big.size(); ++i) {
    bigq[i].resize(big[i].size());
    for (size_t j = 0; j < big[i].size(); ++j) bigq[i][j] = Rat(big[i][j]);
  }
  IMat out;
  for (const IVec& row : small) {
    QVec v(row.size());
    for (size_t j = 0; j < row.size(); ++j) v[j] = Rat(row[j]);
    auto x = solve_row_combination(bigq, v);
    if (!x) {
      *in_span = false;
      return {};
    }
    IVec z(x->size());
    for (size_t j = 0; j < x->size(); ++j) {
      if (!is_integer((*x)[j])) {
        *integral = false;
        return {};
      }
      z[j] = (*x)[j].get_num();
    }
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace

IntegerLattice IntegerLattice::from_generators(RootSystemPtr rs, const QMat& generators) {
  IMat coords;
  for (const QVec& g : generators) {
    auto x = rs->lattice_coords(g);
    if (!x) fail(errc::generator_outside_ambient, "generator not in X(T)");
    coords.push_back(std::move(*x));
  }
  return IntegerLattice(std::move(rs), hnf(std::move(coords)));
}

IntegerLattice IntegerLattice::zero(RootSystemPtr rs) { return IntegerLattice(std::move(rs), {}); }

IntegerLattice IntegerLattice::full(RootSystemPtr rs) {
  const int n = rs->rank();
  IMat basis(n, IVec(n, Int(0)));
  for (int i = 0; i < n; ++i) basis[i][i] = 1;
  return IntegerLattice(std::move(rs), std::move(basis));
}

QMat IntegerLattice::basis_vectors() const {
  QMat out;
  for (const IVec& row : basis_) out.push_back(rs_->from_lattice_coords(row));
  return out;
}

bool IntegerLattice::contains(const QVec& v) const {
  auto x = rs_->lattice_coords(v);
  if (!x) return false;
  if (basis_.empty()) {
    for (const Int& c : *x)
      if (c != 0) return false;
    return true;
  }
  bool integral = true, in_span = true;
  coords_in(basis_, {*x}, &integral, &in_span);
  return in_span && integral;
}

bool IntegerLattice::operator==(const IntegerLattice& o) const {
  require_same_ambient(*this, o);
  return basis_ == o.basis_;
}

IntegerLattice IntegerLattice::saturate() const {
  if (basis_.empty()) return *this;
  SmithResult s = smith_normal_form(basis_, /*want_saturation=*/true);
  return IntegerLattice(rs_, std::move(s.saturation_basis));
}

IntegerLattice IntegerLattice::reflected(int delta) const {
  QMat gens;
  for (const IVec& row : basis_) gens.push_back(rs_->reflect(delta, rs_->from_lattice_coords(row)));
  return from_generators(rs_, gens);
}

std::vector<Int> IntegerLattice::quotient_invariants(const IntegerLattice& big,
                                                     const IntegerLattice& small) {
  require_same_ambient(big, small);
  if (big.rank() != small.rank()) fail(errc::rank_mismatch, "quotient of unequal ranks");
  if (big.rank() == 0) return {};
  bool integral = true, in_span = true;
  IMat c = coords_in(big.basis_, small.basis_, &integral, &in_span);
  if (!in_span) fail(errc::rank_mismatch, "spans differ");
  if (!integral) fail(errc::not_sublattice, "small is not contained in big");
  SmithResult s = smith_normal_form(std::move(c));
  if (s.rank != small.rank()) fail(errc::rank_mismatch, "spans differ");
  std::vector<Int> out;
  for (const Int& d : s.invariant_factors)
    if (d > 1) out.push_back(d);
  return out;
}

std::vector<Int> IntegerLattice::embedding_torsion(const IntegerLattice& big,
                                                   const IntegerLattice& small) {
  require_same_ambient(big, small);
  if (small.rank() == 0) return {};
  bool integral = true, in_span = true;
  IMat c = coords_in(big.basis_, small.basis_, &integral, &in_span);
  if (!in_span || !integral) fail(errc::not_sublattice, "small is not contained in big");
  SmithResult s = smith_normal_form(std::move(c));
  std::vector<Int> out;
  for (const Int& d : s.invariant_factors)
    if (d > 1) out.push_back(d);
  return out;
}

}  // namespace solvsph
