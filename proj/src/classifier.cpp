#include "solvsph/classifier.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "solvsph/error.hpp"
#include "solvsph/linalg.hpp"

namespace solvsph {

namespace {

std::string root_str(const Root& r) {
  std::string s = "(";
  for (size_t i = 0; i < r.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r[i]);
  }
  return s + ")";
}

// Orders a path-shaped subset from one terminal to the other; empty result
// when the induced diagram is not a single chain.
std::vector<int> chain_order(const RootSystem& rs, const std::vector<int>& subset) {
  if (subset.size() == 1) return subset;
  std::vector<int> degree(subset.size(), 0);
  for (size_t a = 0; a < subset.size(); ++a)
    for (size_t b = 0; b < subset.size(); ++b)
      if (a != b && rs.adjacent(subset[a], subset[b])) ++degree[a];
  int terminals = 0, start = -1;
  for (size_t a = 0; a < subset.size(); ++a) {
    if (degree[a] > 2) return {};
    if (degree[a] == 0) return {};
    if (degree[a] == 1) {
      ++terminals;
      if (start < 0 || subset[a] < subset[start]) start = static_cast<int>(a);
    }
  }
  if (terminals != 2) return {};
  std::vector<int> order{subset[start]};
  int prev = -1;
  while (order.size() < subset.size()) {
    int cur = order.back(), next = -1;
    for (int cand : subset)
      if (cand != prev && cand != cur && rs.adjacent(cur, cand)) {
        if (next >= 0) return {};
        next = cand;
      }
    if (next < 0) return {};
    prev = cur;
    order.push_back(next);
  }
  return order;
}

}  // namespace

Table1Match table1_check(const RootSystem& rs, const Root& alpha, int pa) {
  if (!rs.is_positive_root(alpha)) return {};
  if (pa < 0 || pa >= rs.rank() || alpha[pa] == 0) return {};
  const std::vector<int> supp = RootSystem::support(alpha);
  const auto& d = rs.length_factors();

  // Row 1: the sum of the simple roots in the support, any label.
  bool all_one = true;
  for (int i : supp)
    if (alpha[i] != 1) all_one = false;
  if (all_one) return {true, 1};

  if (supp.size() == 2) {
    const int x = supp[0], y = supp[1];
    if (rs.edge_multiplicity(x, y) == 3) {
      // G2 rows: 2*short + long and 3*short + long, labelled at the long root.
      const int s = d[x] < d[y] ? x : y, l = s == x ? y : x;
      if (alpha[l] == 1 && pa == l) {
        if (alpha[s] == 2) return {true, 5};
        if (alpha[s] == 3) return {true, 6};
      }
      return {};
    }
  }

  const std::vector<int> chain = chain_order(rs, supp);
  if (chain.empty()) return {};
  std::vector<std::pair<int, int>> doubles;
  bool triple = false;
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    const int m = rs.edge_multiplicity(chain[i], chain[i + 1]);
    if (m == 2) doubles.emplace_back(static_cast<int>(i), static_cast<int>(i) + 1);
    if (m >= 3) triple = true;
  }
  if (triple || doubles.size() != 1) return {};
  const auto [lo, hi] = doubles[0];

  const bool at_front = lo == 0, at_back = static_cast<size_t>(hi) + 1 == chain.size();
  if (at_front || at_back) {
    // Chain with the double edge at one end: type B or C depending on the
    // length of the terminal node of that edge.
    const int end = at_back ? chain[hi] : chain[lo];
    const int inner = at_back ? chain[lo] : chain[hi];
    if (d[end] < d[inner]) {
      // B-type: coefficient 2 exactly on the short terminal root.
      bool match = alpha[end] == 2;
      for (int i : supp)
        if (i != end && alpha[i] != 1) match = false;
      if (match && pa != end) return {true, 2};
    }
    if (d[end] > d[inner]) {
      // C-type: coefficient 1 exactly on the long terminal root.
      bool match = alpha[end] == 1;
      for (int i : supp)
        if (i != end && alpha[i] != 2) match = false;
      if (match && pa == end) return {true, 3};
    }
    // Rank 2 is both B and C; retry with the roles of the ends swapped.
    if (chain.size() == 2) {
      const int end2 = inner, inner2 = end;
      if (d[end2] > d[inner2] && alpha[end2] == 1 && alpha[inner2] == 2 && pa == end2)
        return {true, 3};
    }
    return {};
  }

  // Double edge strictly inside: the F4 shape, coefficient 2 on the two
  // short roots, labelled at either long (coefficient-1) root.
  if (chain.size() != 4 || lo != 1) return {};
  const int a0 = chain[0], a1 = chain[1], a2 = chain[2], a3 = chain[3];
  if (d[a0] != d[a1] || d[a2] != d[a3] || d[a1] == d[a2]) return {};
  const bool front_short = d[a0] < d[a2];
  const int s0 = front_short ? a0 : a2, s1 = front_short ? a1 : a3;
  const int l0 = front_short ? a2 : a0, l1 = front_short ? a3 : a1;
  if (alpha[s0] == 2 && alpha[s1] == 2 && alpha[l0] == 1 && alpha[l1] == 1 &&
      (pa == l0 || pa == l1))
    return {true, 4};
  return {};
}

const char* pattern_name(PairPattern p) {
  switch (p) {
    case PairPattern::D0: return "D0";
    case PairPattern::D1: return "D1";
    case PairPattern::E1: return "E1";
    case PairPattern::D2: return "D2";
    case PairPattern::E2: return "E2";
    case PairPattern::None: return "none";
  }
  return "?";
}

PairPattern pair_pattern(const RootSystem& rs, const Root& a, int pa, const Root& b, int pb) {
  const std::vector<int> sa = RootSystem::support(a), sb = RootSystem::support(b);
  std::vector<int> shared;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(shared));

  if (shared.empty()) return PairPattern::D0;

  if (shared.size() == 1) {
    const int delta = shared[0];
    if (!rs.terminal_in(delta, sa) || !rs.terminal_in(delta, sb)) return PairPattern::None;
    if (pa != delta && pb != delta) return PairPattern::D1;
    if (pa == delta && pb == delta) {
      Root da = a, db = b;
      da[delta] -= 1;
      db[delta] -= 1;
      if (rs.is_positive_root(da) && rs.is_positive_root(db)) return PairPattern::E1;
    }
    return PairPattern::None;
  }

  // Candidate tripod: both roots must be all-coefficient-1 sums.
  for (int i : sa)
    if (a[i] != 1) return PairPattern::None;
  for (int i : sb)
    if (b[i] != 1) return PairPattern::None;

  std::vector<int> all;
  std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(all));
  const SubdiagramInfo info = rs.subdiagram(all);
  if (info.components.size() != 1) return PairPattern::None;
  if (info.edges.size() + 1 != all.size()) return PairPattern::None;  // must be a tree

  int center = -1;
  for (int v : all) {
    int deg = 0;
    for (int w : all)
      if (w != v && rs.adjacent(v, w)) ++deg;
    if (deg > 3) return PairPattern::None;
    if (deg == 3) {
      if (center >= 0) return PairPattern::None;
      center = v;
    }
  }
  if (center < 0) return PairPattern::None;

  // Walk the three legs out of the center.
  std::vector<std::vector<int>> legs;
  for (int first : all) {
    if (!rs.adjacent(center, first)) continue;
    std::vector<int> leg{first};
    int prev = center;
    for (;;) {
      int cur = leg.back(), next = -1;
      for (int cand : all)
        if (cand != prev && cand != cur && cand != center && rs.adjacent(cur, cand)) next = cand;
      if (next < 0) break;
      prev = cur;
      leg.push_back(next);
    }
    legs.push_back(std::move(leg));
  }
  if (legs.size() != 3) return PairPattern::None;

  auto as_set = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  const std::vector<int> only_a = [&] {
    std::vector<int> v;
    std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(v));
    return v;
  }();
  const std::vector<int> only_b = [&] {
    std::vector<int> v;
    std::set_difference(sb.begin(), sb.end(), sa.begin(), sa.end(), std::back_inserter(v));
    return v;
  }();
  if (only_a.empty() || only_b.empty()) return PairPattern::None;

  // The shared support must be the center plus one full leg, the private
  // parts the other two legs.
  bool matched = false;
  for (int t = 0; t < 3 && !matched; ++t) {
    std::vector<int> tail = legs[t];
    tail.push_back(center);
    if (as_set(tail) != shared) continue;
    const std::vector<int> l1 = as_set(legs[(t + 1) % 3]), l2 = as_set(legs[(t + 2) % 3]);
    if ((l1 == only_a && l2 == only_b) || (l1 == only_b && l2 == only_a)) matched = true;
  }
  if (!matched) return PairPattern::None;

  const bool pa_shared = std::binary_search(shared.begin(), shared.end(), pa);
  const bool pb_shared = std::binary_search(shared.begin(), shared.end(), pb);
  if (!pa_shared && !pb_shared) return PairPattern::D2;
  if (pa_shared && pb_shared && pa == pb) return PairPattern::E2;
  return PairPattern::None;
}

bool check_C(const SphericalDatum& d) {
  for (size_t i = 0; i < d.m_roots.size(); ++i) {
    std::set<int> others;
    for (size_t j = 0; j < d.m_roots.size(); ++j)
      if (j != i)
        for (int k : RootSystem::support(d.m_roots[j])) others.insert(k);
    bool private_node = false;
    for (int k : RootSystem::support(d.m_roots[i]))
      if (!others.count(k)) private_node = true;
    if (!private_node) return false;
  }
  return true;
}

bool check_T(const FullDatum& full) {
  const SphericalDatum& d = full.datum;
  const int n = d.rs->rank();
  QMat pi0;
  for (int i : support_union(d)) {
    QVec e(n, Rat(0));
    e[i] = 1;
    pi0.push_back(std::move(e));
  }
  const QMat lhs = span_intersection(full.torus.ker_tau.span(), pi0);

  QMat diffs;
  for (size_t i = 0; i < d.m_roots.size(); ++i)
    for (size_t j = i + 1; j < d.m_roots.size(); ++j)
      if (d.equivalent(static_cast<int>(i), static_cast<int>(j)))
        diffs.push_back(to_qvec(root_sub(d.m_roots[i], d.m_roots[j])));

  return spans_equal(lhs, diffs);
}

namespace {

void run_common_checks(const SphericalDatum& d, ValidationReport& rep) {
  using V = ValidationReport::Verdict;
  auto witness = [&](const std::string& w) {
    if (rep.witness.empty()) rep.witness = w;
  };

  // Structural sanity of the datum itself.
  std::set<int> covered;
  size_t total = 0;
  for (const auto& block : d.equiv) {
    total += block.size();
    for (int i : block) covered.insert(i);
  }
  bool structural_ok =
      total == d.m_roots.size() && covered.size() == d.m_roots.size() &&
      (covered.empty() ||
       (*covered.begin() == 0 && *covered.rbegin() == static_cast<int>(d.m_roots.size()) - 1));
  if (d.labels.size() != d.m_roots.size()) structural_ok = false;
  for (size_t i = 0; i + 1 < d.m_roots.size(); ++i)
    if (!(d.m_roots[i] < d.m_roots[i + 1])) structural_ok = false;
  for (size_t i = 0; i < d.m_roots.size() && structural_ok; ++i) {
    if (!d.rs->is_positive_root(d.m_roots[i])) {
      structural_ok = false;
      witness("M contains a non-root " + root_str(d.m_roots[i]));
    } else if (d.labels[i] < 0 || d.labels[i] >= d.rs->rank() || d.m_roots[i][d.labels[i]] == 0) {
      structural_ok = false;
      witness("label of " + root_str(d.m_roots[i]) + " outside its support");
    }
  }
  if (!structural_ok) {
    rep.structural = V::fail;
    witness("malformed datum");
    return;
  }

  rep.table_rows.assign(d.m_roots.size(), 0);
  for (size_t i = 0; i < d.m_roots.size(); ++i) {
    const Table1Match m = table1_check(*d.rs, d.m_roots[i], d.labels[i]);
    rep.table_rows[i] = m.row;
    if (!m.accepted) {
      rep.cond_A = V::fail;
      witness("condition (A): pair (" + root_str(d.m_roots[i]) + ", alpha" +
              std::to_string(d.labels[i] + 1) + ") is not an admissible active pair");
    }
  }

  for (size_t i = 0; i < d.m_roots.size(); ++i)
    for (size_t j = i + 1; j < d.m_roots.size(); ++j) {
      const bool equiv = d.equivalent(static_cast<int>(i), static_cast<int>(j));
      const PairPattern p =
          pair_pattern(*d.rs, d.m_roots[i], d.labels[i], d.m_roots[j], d.labels[j]);
      rep.pairs.push_back({static_cast<int>(i), static_cast<int>(j), equiv, p});
      const bool ok = equiv ? p != PairPattern::None
                            : (p == PairPattern::D0 || p == PairPattern::D1 || p == PairPattern::D2);
      if (!ok) {
        (equiv ? rep.cond_E : rep.cond_D) = V::fail;
        witness(std::string("condition (") + (equiv ? "E" : "D") + "): pair " +
                root_str(d.m_roots[i]) + ", " + root_str(d.m_roots[j]) + " has pattern " +
                pattern_name(p));
      }
    }

  if (!check_C(d)) {
    rep.cond_C = V::fail;
    witness("condition (C): some root of M has no private support node");
  }
}

}  // namespace

ValidationReport validate(const SphericalDatum& d) {
  ValidationReport rep;
  rep.cond_T = ValidationReport::Verdict::skipped;
  run_common_checks(d, rep);
  return rep;
}

ValidationReport validate(const FullDatum& full) {
  using V = ValidationReport::Verdict;
  ValidationReport rep;
  run_common_checks(full.datum, rep);
  auto witness = [&](const std::string& w) {
    if (rep.witness.empty()) rep.witness = w;
  };

  if (!full.torus.ker_tau.is_primitive()) {
    rep.structural = V::fail;
    witness("Ker tau is not a primitive sublattice");
  }
  if (rep.structural != V::fail) {
    const auto derived = derive_equiv(full.datum.m_roots, full.torus.ker_tau);
    if (derived != full.datum.equiv) {
      rep.structural = V::fail;
      witness("declared equivalence disagrees with Ker tau");
    }
  }

  rep.cond_T = check_T(full) ? V::pass : V::fail;
  if (rep.cond_T == V::fail)
    witness("condition (T): <Ker tau> ∩ <Pi_0> differs from the span of equivalent differences");
  return rep;
}

}  // namespace solvsph
