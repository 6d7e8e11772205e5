#include "solvsph/transforms.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "solvsph/classifier.hpp"
#include "solvsph/error.hpp"

namespace solvsph {

std::vector<int> available_centers(const FullDatum& full) {
  const ActiveSet aset = expand_active_set(full);
  std::vector<int> centers;
  for (const auto& cls : aset.classes) {
    if (cls.size() != 1) continue;
    const Root& r = aset.roots[cls[0]];
    if (RootSystem::height(r) != 1) continue;
    for (size_t k = 0; k < r.size(); ++k)
      if (r[k] == 1) centers.push_back(static_cast<int>(k));
  }
  std::sort(centers.begin(), centers.end());
  return centers;
}

FullDatum elementary_transformation(const FullDatum& full, int delta) {
  const RootSystemPtr& rs = full.datum.rs;
  const ActiveSet aset = expand_active_set(full);

  Root delta_root(rs->rank(), 0);
  if (delta < 0 || delta >= rs->rank()) fail(errc::center_not_regular_simple, "bad index");
  delta_root[delta] = 1;
  const int di = aset.index_of(delta_root);
  if (di < 0 || aset.classes[aset.class_of[di]].size() != 1)
    fail(errc::center_not_regular_simple,
         "alpha" + std::to_string(delta + 1) + " is not a regular active simple root");

  // Psi' = r_delta(Psi \ {delta}) ∪ {delta}, labels transported.
  std::vector<std::pair<Root, int>> transformed;
  transformed.emplace_back(delta_root, delta);
  for (size_t i = 0; i < aset.roots.size(); ++i) {
    if (static_cast<int>(i) == di) continue;
    Root image = rs->reflect_root(delta, aset.roots[i]);
    if (!rs->is_positive_root(image)) fail(errc::internal, "reflection left the positive roots");
    transformed.emplace_back(std::move(image), aset.labels[i]);
  }

  // M' = maximal elements of Psi' under subordination.
  std::vector<std::pair<Root, int>> maximal;
  for (const auto& [root, label] : transformed) {
    bool is_max = true;
    for (const auto& [other, other_label] : transformed) {
      if (other == root) continue;
      Root diff = root_sub(other, root);
      bool nonneg = true;
      for (int c : diff)
        if (c < 0) nonneg = false;
      if (nonneg && rs->is_positive_root(diff)) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.emplace_back(root, label);
  }

  IntegerLattice ker = full.torus.ker_tau.reflected(delta);
  FullDatum out = make_full_datum(make_datum(rs, std::move(maximal), {}), std::move(ker));
  if (!validate(out).valid())
    fail(errc::internal, "elementary transformation produced an invalid datum");
  return out;
}

std::string datum_key(const SphericalDatum& d) {
  std::ostringstream os;
  for (size_t i = 0; i < d.m_roots.size(); ++i) {
    os << "[";
    for (int c : d.m_roots[i]) os << c << ",";
    os << "|" << d.labels[i] << "]";
  }
  os << "~";
  for (const auto& block : d.equiv) {
    os << "{";
    for (int i : block) os << i << ",";
    os << "}";
  }
  return os.str();
}

std::string datum_key(const FullDatum& full) {
  std::ostringstream os;
  os << datum_key(full.datum) << "#";
  for (const IVec& row : full.torus.ker_tau.basis_coords()) {
    os << "[";
    for (const Int& c : row) os << c.get_str() << ",";
    os << "]";
  }
  return os.str();
}

std::vector<FullDatum> orbit(const FullDatum& full) {
  std::map<std::string, FullDatum> seen;
  std::deque<FullDatum> frontier;
  seen.emplace(datum_key(full), full);
  frontier.push_back(full);
  while (!frontier.empty()) {
    FullDatum cur = std::move(frontier.front());
    frontier.pop_front();
    for (int delta : available_centers(cur)) {
      FullDatum next = elementary_transformation(cur, delta);
      std::string key = datum_key(next);
      if (seen.emplace(std::move(key), next).second) frontier.push_back(std::move(next));
    }
  }
  std::vector<FullDatum> out;
  for (auto& [key, datum] : seen) out.push_back(std::move(datum));
  return out;
}

bool conjugacy_test(const FullDatum& a, const FullDatum& b) {
  return conjugacy_chain(a, b).has_value();
}

std::optional<std::vector<int>> conjugacy_chain(const FullDatum& a, const FullDatum& b) {
  if (!(*a.datum.rs == *b.datum.rs))
    fail(errc::root_system_mismatch, "data live in different root systems");
  const std::string target = datum_key(b);

  struct Node {
    FullDatum datum;
    std::vector<int> chain;
  };
  std::map<std::string, std::vector<int>> seen;
  std::deque<Node> frontier;
  const std::string start = datum_key(a);
  seen.emplace(start, std::vector<int>{});
  if (start == target) return std::vector<int>{};
  frontier.push_back({a, {}});
  while (!frontier.empty()) {
    Node cur = std::move(frontier.front());
    frontier.pop_front();
    for (int delta : available_centers(cur.datum)) {
      FullDatum next = elementary_transformation(cur.datum, delta);
      std::string key = datum_key(next);
      if (seen.count(key)) continue;
      std::vector<int> chain = cur.chain;
      chain.push_back(delta);
      if (key == target) return chain;
      seen.emplace(std::move(key), chain);
      frontier.push_back({std::move(next), std::move(chain)});
    }
  }
  return std::nullopt;
}

}  // namespace solvsph
