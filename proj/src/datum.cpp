#include "solvsph/datum.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "solvsph/classifier.hpp"
#include "solvsph/error.hpp"
#include "solvsph/linalg.hpp"

namespace solvsph {

bool SphericalDatum::equivalent(int i, int j) const {
  if (i == j) return true;
  for (const auto& block : equiv) {
    const bool has_i = std::find(block.begin(), block.end(), i) != block.end();
    const bool has_j = std::find(block.begin(), block.end(), j) != block.end();
    if (has_i || has_j) return has_i && has_j;
  }
  return false;
}

std::vector<std::vector<int>> canonical_partition(std::vector<std::vector<int>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                              [](const std::vector<int>& b) { return b.empty(); }),
               blocks.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return blocks;
}

SphericalDatum make_datum(RootSystemPtr rs, std::vector<std::pair<Root, int>> labelled_roots,
                          std::vector<std::vector<int>> equiv_blocks) {
  std::vector<int> order(labelled_roots.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return labelled_roots[a].first < labelled_roots[b].first;
  });
  std::vector<int> pos(order.size());
  for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);

  SphericalDatum d;
  d.rs = std::move(rs);
  for (int idx : order) {
    d.m_roots.push_back(labelled_roots[idx].first);
    d.labels.push_back(labelled_roots[idx].second);
  }
  for (auto& block : equiv_blocks)
    for (int& i : block) i = pos[i];
  d.equiv = canonical_partition(std::move(equiv_blocks));
  return d;
}

std::vector<int> support_union(const SphericalDatum& d) {
  std::set<int> s;
  for (const Root& r : d.m_roots)
    for (int i : RootSystem::support(r)) s.insert(i);
  return std::vector<int>(s.begin(), s.end());
}

std::vector<std::vector<int>> derive_equiv(const std::vector<Root>& roots,
                                           const IntegerLattice& ker_tau) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of(roots.size(), -1);
  for (size_t i = 0; i < roots.size(); ++i) {
    if (block_of[i] >= 0) continue;
    block_of[i] = static_cast<int>(blocks.size());
    blocks.push_back({static_cast<int>(i)});
    for (size_t j = i + 1; j < roots.size(); ++j) {
      if (block_of[j] >= 0) continue;
      QVec diff = to_qvec(root_sub(roots[i], roots[j]));
      if (ker_tau.contains(diff)) {
        block_of[j] = block_of[i];
        blocks[block_of[i]].push_back(static_cast<int>(j));
      }
    }
  }
  return canonical_partition(std::move(blocks));
}

FullDatum make_full_datum(SphericalDatum base, IntegerLattice ker_tau) {
  base.equiv = derive_equiv(base.m_roots, ker_tau);
  return FullDatum{std::move(base), TorusDatum{std::move(ker_tau)}};
}

int ActiveSet::index_of(const Root& r) const {
  auto it = std::lower_bound(roots.begin(), roots.end(), r);
  if (it == roots.end() || *it != r) return -1;
  return static_cast<int>(it - roots.begin());
}

namespace {

// Search state for the family labeling: forced members with labels, plus
// roots forced out. Membership propagates top-down: each labelled member's
// decompositions force exactly one part in (the part avoiding the label)
// and the other part out.
struct FamilySearch {
  const RootSystem& rs;
  std::map<Root, int> assigned;      // root -> label
  std::set<Root> forced_out;
  std::set<Root> pending;            // forced in, label not chosen yet
  std::vector<bool> label_used;      // simple indices used so far

  explicit FamilySearch(const RootSystem& r) : rs(r), label_used(r.rank(), false) {}

  bool propagate(const Root& beta, int label) {
    for (const auto& [part1, part2] : rs.decompositions(beta)) {
      const bool c1 = part1[label] != 0, c2 = part2[label] != 0;
      if (c1 && c2) return false;  // neither part could be active
      const Root& in = c1 ? part2 : part1;
      const Root& out = c1 ? part1 : part2;
      if (forced_out.count(in)) return false;
      if (assigned.count(out) || pending.count(out)) return false;
      forced_out.insert(out);
      if (!assigned.count(in)) pending.insert(in);
    }
    return true;
  }

  void run(std::vector<std::map<Root, int>>& solutions) const {
    if (pending.empty()) {
      solutions.push_back(assigned);
      return;
    }
    const Root gamma = *pending.begin();
    for (int delta : RootSystem::support(gamma)) {
      if (label_used[delta]) continue;
      if (!table1_check(rs, gamma, delta).accepted) continue;
      FamilySearch branch(*this);
      branch.pending.erase(gamma);
      branch.assigned[gamma] = delta;
      branch.label_used[delta] = true;
      if (branch.propagate(gamma, delta)) branch.run(solutions);
    }
  }
};

}  // namespace

std::vector<std::pair<Root, int>> compute_family(const RootSystem& rs, const Root& alpha, int pa) {
  if (!rs.is_positive_root(alpha)) fail(errc::no_consistent_labeling, "alpha not a positive root");
  if (pa < 0 || pa >= rs.rank() || alpha[pa] == 0)
    fail(errc::no_consistent_labeling, "label outside the support");
  const size_t support_size = RootSystem::support(alpha).size();

  FamilySearch search(rs);
  if (!table1_check(rs, alpha, pa).accepted)
    fail(errc::no_consistent_labeling, "pair rejected by the active-root table");
  search.assigned[alpha] = pa;
  search.label_used[pa] = true;
  std::vector<std::map<Root, int>> solutions;
  if (search.propagate(alpha, pa)) search.run(solutions);

  // Completed assignments must use every support node exactly once.
  std::vector<std::map<Root, int>> complete;
  for (auto& sol : solutions)
    if (sol.size() == support_size) complete.push_back(std::move(sol));
  if (complete.empty()) fail(errc::no_consistent_labeling, "no labeling of the subordinates");
  if (complete.size() > 1) fail(errc::ambiguous_labeling, "labeling is not unique");

  std::vector<std::pair<Root, int>> out(complete[0].begin(), complete[0].end());
  return out;
}

ActiveSet expand_active_set(const FullDatum& full) {
  const SphericalDatum& d = full.datum;
  std::map<Root, int> merged;
  for (size_t i = 0; i < d.m_roots.size(); ++i) {
    for (const auto& [root, label] : compute_family(*d.rs, d.m_roots[i], d.labels[i])) {
      auto [it, inserted] = merged.emplace(root, label);
      if (!inserted && it->second != label)
        fail(errc::label_conflict, "root receives two labels in the family union");
    }
  }
  ActiveSet aset;
  for (const auto& [root, label] : merged) {
    aset.roots.push_back(root);
    aset.labels.push_back(label);
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of(aset.roots.size(), -1);
  for (size_t i = 0; i < aset.roots.size(); ++i) {
    if (block_of[i] >= 0) continue;
    block_of[i] = static_cast<int>(blocks.size());
    blocks.push_back({static_cast<int>(i)});
    for (size_t j = i + 1; j < aset.roots.size(); ++j) {
      if (block_of[j] >= 0) continue;
      if (full.torus.ker_tau.contains(to_qvec(root_sub(aset.roots[i], aset.roots[j])))) {
        block_of[j] = block_of[i];
        blocks[block_of[i]].push_back(static_cast<int>(j));
      }
    }
  }
  aset.classes = canonical_partition(std::move(blocks));
  aset.class_of.assign(aset.roots.size(), -1);
  for (size_t c = 0; c < aset.classes.size(); ++c)
    for (int i : aset.classes[c]) aset.class_of[i] = static_cast<int>(c);
  return aset;
}

std::vector<Root> regular_roots(const ActiveSet& aset) {
  std::vector<Root> out;
  for (const auto& cls : aset.classes)
    if (cls.size() == 1) out.push_back(aset.roots[cls[0]]);
  std::sort(out.begin(), out.end());
  return out;
}

SphericityResult check_sphericity(const FullDatum& full) {
  const ActiveSet aset = expand_active_set(full);
  SphericityResult result;
  for (const auto& cls : aset.classes) result.class_reps.push_back(aset.roots[cls[0]]);

  QMat stacked;
  for (const Root& rep : result.class_reps) stacked.push_back(to_qvec(rep));
  const QMat ker_span = full.torus.ker_tau.span();
  stacked.insert(stacked.end(), ker_span.begin(), ker_span.end());

  const QMat dependence = left_kernel(stacked);
  if (dependence.empty()) {
    result.spherical = true;
    return result;
  }
  result.spherical = false;
  result.dependence.assign(dependence[0].begin(),
                           dependence[0].begin() + static_cast<long>(result.class_reps.size()));
  return result;
}

}  // namespace solvsph
