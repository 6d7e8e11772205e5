#include "solvsph/linalg.hpp"

#include <algorithm>
#include <cstddef>

#include "solvsph/error.hpp"

namespace solvsph {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

QVec to_qvec(const std::vector<int>& v) {
  QVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

bool qvec_is_zero(const QVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

QVec qvec_add(const QVec& a, const QVec& b) {
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVec qvec_sub(const QVec& a, const QVec& b) {
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVec qvec_scale(const Rat& c, const QVec& v) {
  QVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

int rref(QMat& m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    const Rat inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

int rank_of(QMat m) { return rref(m); }

QMat row_space_basis(QMat m) {
  const int r = rref(m);
  m.resize(static_cast<size_t>(r));
  return m;
}

bool spans_equal(const QMat& a, const QMat& b) {
  if (a.empty() || b.empty()) {
    // Treat any all-zero span as equal to an empty one.
    auto zero = [](const QMat& m) {
      for (const auto& row : m)
        if (!qvec_is_zero(row)) return false;
      return true;
    };
    return zero(a) && zero(b);
  }
  return row_space_basis(a) == row_space_basis(b);
}

std::optional<QVec> solve_row_combination(const QMat& rows, const QVec& v) {
  const size_t k = rows.size();
  if (k == 0) {
    if (qvec_is_zero(v)) return QVec{};
    return std::nullopt;
  }
  const size_t n = rows[0].size();
  if (v.size() != n) fail(errc::dimension_mismatch, "solve_row_combination");
  // Augmented system over the transpose: columns are the given rows.
  QMat aug(n, QVec(k + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < k; ++j) aug[i][j] = rows[j][i];
    aug[i][k] = v[i];
  }
  rref(aug);
  QVec x(k, Rat(0));
  for (const QVec& row : aug) {
    size_t lead = 0;
    while (lead <= k && row[lead] == 0) ++lead;
    if (lead == k + 1) continue;
    if (lead == k) return std::nullopt;  // 0 = 1, inconsistent
    x[lead] = row[k];  // free variables pinned to zero
  }
  QVec check(n, Rat(0));
  for (size_t j = 0; j < k; ++j)
    if (x[j] != 0)
      for (size_t i = 0; i < n; ++i) check[i] += x[j] * rows[j][i];
  if (check != v) return std::nullopt;
  return x;
}

QMat left_kernel(const QMat& m) {
  const size_t k = m.size();
  if (k == 0) return {};
  const size_t n = m[0].size();
  // Right kernel of the transpose via rref.
  QMat t(n, QVec(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < n; ++j) t[j][i] = m[i][j];
  rref(t);
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(k, false);
  for (const QVec& row : t) {
    size_t lead = 0;
    while (lead < k && row[lead] == 0) ++lead;
    if (lead < k) {
      pivot_col.push_back(static_cast<int>(lead));
      is_pivot[lead] = true;
    }
  }
  QMat basis;
  for (size_t free = 0; free < k; ++free) {
    if (is_pivot[free]) continue;
    QVec x(k, Rat(0));
    x[free] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = -t[r][free];
    basis.push_back(std::move(x));
  }
  return row_space_basis(std::move(basis));
}

QMat span_intersection(const QMat& a, const QMat& b) {
  if (a.empty() || b.empty()) return {};
  const size_t n = a[0].size();
  if (b[0].size() != n) fail(errc::dimension_mismatch, "span_intersection");
  QMat stacked = a;
  stacked.insert(stacked.end(), b.begin(), b.end());
  const QMat ker = left_kernel(stacked);
  QMat result;
  for (const QVec& coeff : ker) {
    QVec v(n, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
      if (coeff[i] != 0)
        for (size_t j = 0; j < n; ++j) v[j] += coeff[i] * a[i][j];
    if (!qvec_is_zero(v)) result.push_back(std::move(v));
  }
  return row_space_basis(std::move(result));
}

QMat inverse(const QMat& m) {
  const size_t n = m.size();
  QMat aug(n, QVec(2 * n, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) fail(errc::dimension_mismatch, "inverse");
    for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  if (rref(aug) != static_cast<int>(n)) fail(errc::internal, "inverse of singular matrix");
  QMat inv(n, QVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

QVec mat_apply_left(const QVec& x, const QMat& m) {
  if (m.empty()) fail(errc::dimension_mismatch, "mat_apply_left");
  if (x.size() != m.size()) fail(errc::dimension_mismatch, "mat_apply_left");
  QVec out(m[0].size(), Rat(0));
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0)
      for (size_t j = 0; j < out.size(); ++j) out[j] += x[i] * m[i][j];
  return out;
}

namespace {

bool abs_less(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void row_submul(IVec& target, const IVec& src, const Int& q) {
  if (q == 0) return;
  for (size_t j = 0; j < target.size(); ++j) target[j] -= q * src[j];
}

}  // namespace

IMat hnf(IMat m) {
  if (m.empty()) return {};
  const size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    // Shrink column c (rows >= r) to a single entry by gcd steps.
    for (;;) {
      size_t best = rows;
      for (size_t i = r; i < rows; ++i)
        if (m[i][c] != 0 && (best == rows || abs_less(m[i][c], m[best][c]))) best = i;
      if (best == rows) break;  // column clear
      std::swap(m[r], m[best]);
      bool others = false;
      for (size_t i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        row_submul(m[i], m[r], floor_div(m[i][c], m[r][c]));
        if (m[i][c] != 0) others = true;
      }
      if (!others) break;
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0)
      for (size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
    for (size_t i = 0; i < r; ++i) row_submul(m[i], m[r], floor_div(m[i][c], m[r][c]));
    ++r;
  }
  m.resize(r);
  return m;
}

SmithResult smith_normal_form(IMat m, bool want_saturation) {
  SmithResult result;
  if (m.empty()) return result;
  const size_t rows = m.size(), cols = m[0].size();
  IMat vinv;
  if (want_saturation) {
    vinv.assign(cols, IVec(cols, Int(0)));
    for (size_t i = 0; i < cols; ++i) vinv[i][i] = 1;
  }
  // Column ops keep D = U * input * V with vinv = V^^-1.
  auto col_swap = [&](size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
    if (want_saturation) std::swap(vinv[a], vinv[b]);
  };
  auto col_submul = [&](size_t target, size_t src, const Int& q) {
    if (q == 0) return;
    for (size_t i = 0; i < rows; ++i) m[i][target] -= q * m[i][src];
    // C_t -= q C_s  ==>  row s of V^-1 += q * row t of V^-1
    if (want_saturation)
      for (size_t j = 0; j < cols; ++j) vinv[src][j] += q * vinv[target][j];
  };

  const size_t nmin = std::min(rows, cols);
  size_t t = 0;
  for (; t < nmin; ++t) {
    // Locate a nonzero entry in the trailing block.
    size_t pi = rows, pj = cols;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (pi == rows || abs_less(m[i][j], m[pi][pj]))) pi = i, pj = j;
    if (pi == rows) break;
    std::swap(m[t], m[pi]);
    col_swap(t, pj);

    for (;;) {
      bool dirty = false;
      for (size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        row_submul(m[i], m[t], floor_div(m[i][t], m[t][t]));
        if (m[i][t] != 0) dirty = true;
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        col_submul(j, t, floor_div(m[t][j], m[t][t]));
        if (m[t][j] != 0) dirty = true;
      }
      if (dirty) {
        // Pull the smallest remaining entry of row/column t to the pivot.
        size_t bi = t, bj = t;
        for (size_t i = t; i < rows; ++i)
          if (m[i][t] != 0 && abs_less(m[i][t], m[bi][bj])) bi = i, bj = t;
        for (size_t j = t; j < cols; ++j)
          if (m[t][j] != 0 && abs_less(m[t][j], m[bi][bj])) bi = t, bj = j;
        std::swap(m[t], m[bi]);
        col_swap(t, bj);
        continue;
      }
      // Pivot is lone; enforce divisibility of the trailing block.
      bool fixed = true;
      for (size_t i = t + 1; i < rows && fixed; ++i)
        for (size_t j = t + 1; j < cols && fixed; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (size_t cidx = 0; cidx < cols; ++cidx) m[t][cidx] += m[i][cidx];
            fixed = false;
          }
      if (fixed) break;
    }
    if (m[t][t] < 0)
      for (size_t j = 0; j < cols; ++j) m[t][j] = -m[t][j];
  }

  result.rank = static_cast<int>(t);
  for (size_t i = 0; i < t; ++i) result.invariant_factors.push_back(m[i][i]);
  if (want_saturation) {
    IMat sat(vinv.begin(), vinv.begin() + static_cast<std::ptrdiff_t>(t));
    result.saturation_basis = hnf(std::move(sat));
  }
  return result;
}

}  // namespace solvsph
