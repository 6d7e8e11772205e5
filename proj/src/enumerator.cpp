#include "solvsph/enumerator.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "solvsph/classifier.hpp"
#include "solvsph/error.hpp"
#include "solvsph/linalg.hpp"
#include "solvsph/transforms.hpp"

namespace solvsph {

namespace {

// Every root that admits at least one admissible label, with its label set.
std::vector<std::pair<Root, std::vector<int>>> table1_roots(const RootSystem& rs) {
  std::vector<std::pair<Root, std::vector<int>>> out;
  for (const Root& alpha : rs.positive_roots()) {
    std::vector<int> labels;
    for (int pa : RootSystem::support(alpha))
      if (table1_check(rs, alpha, pa).accepted) labels.push_back(pa);
    if (!labels.empty()) out.emplace_back(alpha, std::move(labels));
  }
  return out;
}

// Set partitions of {0..k} in restricted-growth-string order, with the
// constraint that all indices inside one must-link group share a block.
void enumerate_partitions(int k, const std::vector<std::pair<int, int>>& must_link,
                          const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> parent(k);
  for (int i = 0; i < k; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : must_link) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  // Group indices: one per union-find component, ordered by least member.
  std::vector<int> group_of(k, -1);
  int groups = 0;
  for (int i = 0; i < k; ++i) {
    const int r = find(i);
    if (group_of[r] < 0) group_of[r] = groups++;
    group_of[i] = group_of[r];
  }

  std::vector<int> rgs(groups, 0);
  auto rec = [&](auto&& self, int pos, int max_used) -> void {
    if (pos == groups) {
      std::vector<int> block_of(k);
      for (int i = 0; i < k; ++i) block_of[i] = rgs[group_of[i]];
      emit(block_of);
      return;
    }
    for (int b = 0; b <= max_used + 1; ++b) {
      rgs[pos] = b;
      self(self, pos + 1, std::max(max_used, b));
    }
  };
  if (k == 0) {
    emit({});
    return;
  }
  rec(rec, 1, 0);  // rgs[0] = 0 always
}

std::string auto_canonical_key(const SphericalDatum& d,
                               const std::vector<std::vector<int>>& autos) {
  std::string best;
  for (const auto& sigma : autos) {
    std::vector<std::pair<Root, int>> mapped;
    for (size_t i = 0; i < d.m_roots.size(); ++i) {
      Root img(d.m_roots[i].size(), 0);
      for (size_t k = 0; k < img.size(); ++k) img[sigma[k]] = d.m_roots[i][k];
      mapped.emplace_back(std::move(img), sigma[d.labels[i]]);
    }
    // Transport the partition through the root reordering.
    std::vector<int> order(mapped.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return mapped[x].first < mapped[y].first; });
    std::vector<int> pos(order.size());
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> blocks = d.equiv;
    for (auto& blk : blocks)
      for (int& x : blk) x = pos[x];
    SphericalDatum img = make_datum(d.rs, std::move(mapped), std::move(blocks));
    std::string key = datum_key(img);
    if (best.empty() || key < best) best = key;
  }
  return best;
}

}  // namespace

std::vector<SphericalDatum> enumerate_data(const RootSystemPtr& rs,
                                           const EnumerationOptions& opts) {
  const auto croots = table1_roots(*rs);
  const int n = rs->rank();
  const int max_m = opts.max_m < 0 ? n : std::min(opts.max_m, n);

  std::vector<SphericalDatum> results;
  std::vector<int> chosen;

  auto emit_for_subset = [&]() {
    const int k = static_cast<int>(chosen.size());
    std::vector<std::pair<Root, int>> labelled(k);
    for (int i = 0; i < k; ++i) labelled[i].first = croots[chosen[i]].first;

    auto labels_rec = [&](auto&& self, int pos) -> void {
      if (pos == k) {
        // Pair patterns decide which partitions are admissible.
        std::vector<std::pair<int, int>> must_link;
        for (int i = 0; i < k; ++i)
          for (int j = i + 1; j < k; ++j) {
            const PairPattern p = pair_pattern(*rs, labelled[i].first, labelled[i].second,
                                               labelled[j].first, labelled[j].second);
            if (p == PairPattern::None) return;
            if (p == PairPattern::E1 || p == PairPattern::E2) must_link.emplace_back(i, j);
          }
        enumerate_partitions(k, must_link, [&](const std::vector<int>& block_of) {
          std::vector<std::vector<int>> blocks;
          for (int i = 0; i < k; ++i) {
            if (block_of[i] >= static_cast<int>(blocks.size()))
              blocks.resize(block_of[i] + 1);
            blocks[block_of[i]].push_back(i);
          }
          results.push_back(make_datum(rs, labelled, std::move(blocks)));
        });
        return;
      }
      for (int pa : croots[chosen[pos]].second) {
        labelled[pos].second = pa;
        self(self, pos + 1);
      }
    };
    labels_rec(labels_rec, 0);
  };

  auto subsets_rec = [&](auto&& self, size_t start) -> void {
    emit_for_subset();
    if (static_cast<int>(chosen.size()) == max_m) return;
    for (size_t idx = start; idx < croots.size(); ++idx) {
      chosen.push_back(static_cast<int>(idx));
      // Condition (C) only loses private nodes as roots are added, so it
      // prunes monotonically.
      SphericalDatum probe;
      probe.rs = rs;
      for (int c : chosen) probe.m_roots.push_back(croots[c].first);
      if (check_C(probe)) self(self, idx + 1);
      chosen.pop_back();
    }
  };
  subsets_rec(subsets_rec, 0);

  // The (A),(D),(E),(C) filter is built into the generation; partitions and
  // labellings were produced in deterministic order already, but sort by key
  // so that the contract is explicit.
  std::sort(results.begin(), results.end(),
            [](const SphericalDatum& a, const SphericalDatum& b) {
              return datum_key(a) < datum_key(b);
            });

  if (opts.dedupe_autos) {
    const auto autos = rs->diagram_automorphisms();
    std::set<std::string> kept;
    std::vector<SphericalDatum> filtered;
    for (auto& d : results) {
      std::string canon = auto_canonical_key(d, autos);
      if (kept.insert(std::move(canon)).second) filtered.push_back(std::move(d));
    }
    results = std::move(filtered);
  }
  return results;
}

FullDatum sober_torus(const SphericalDatum& d) {
  if (!validate(d).valid()) fail(errc::invalid_datum, "datum fails (A),(D),(E),(C)");
  QMat gens;
  for (size_t i = 0; i < d.m_roots.size(); ++i)
    for (size_t j = i + 1; j < d.m_roots.size(); ++j)
      if (d.equivalent(static_cast<int>(i), static_cast<int>(j)))
        gens.push_back(to_qvec(root_sub(d.m_roots[i], d.m_roots[j])));
  IntegerLattice L0 = IntegerLattice::from_generators(d.rs, gens).saturate();

  // Any admissible Ker tau contains L, hence contains L0 by primitivity; a
  // declared equivalence coarser than the one induced by L0 is unrealizable.
  const auto derived = derive_equiv(d.m_roots, L0);
  if (derived != d.equiv)
    fail(errc::invalid_datum, "declared equivalence admits no torus");
  FullDatum full{d, TorusDatum{std::move(L0)}};
  return full;
}

SoberEnumeration enumerate_sober(const RootSystemPtr& rs, const EnumerationOptions& opts) {
  SoberEnumeration out;
  for (const SphericalDatum& d : enumerate_data(rs, opts)) {
    try {
      out.data.push_back(sober_torus(d));
    } catch (const error& e) {
      if (e.code() != errc::invalid_datum) throw;
      ++out.dropped;
    }
  }
  return out;
}

}  // namespace solvsph
