#include "solvsph/root_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "solvsph/error.hpp"
#include "solvsph/linalg.hpp"

namespace solvsph {

bool legal_component(const SimpleComponent& c) {
  switch (c.family) {
    case Family::A: return c.rank >= 1;
    case Family::B: return c.rank >= 2;
    case Family::C: return c.rank >= 2;
    case Family::D: return c.rank >= 3;
    case Family::E: return c.rank >= 6 && c.rank <= 8;
    case Family::F: return c.rank == 4;
    case Family::G: return c.rank == 2;
  }
  return false;
}

Root root_add(const Root& a, const Root& b) {
  Root out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Root root_sub(const Root& a, const Root& b) {
  Root out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Root root_neg(const Root& a) {
  Root out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

namespace {

// Cartan data of one component under the conventions fixed here:
// B_n last root short, C_n last root long, G2 first root short,
// F4 roots 3,4 short. d holds half squared lengths, short = 1.
void component_cartan(const SimpleComponent& c, std::vector<std::vector<int>>& cartan,
                      std::vector<int>& d) {
  const int m = c.rank;
  cartan.assign(m, std::vector<int>(m, 0));
  d.assign(m, 1);
  for (int i = 0; i < m; ++i) cartan[i][i] = 2;
  auto chain_edge = [&](int i, int j) { cartan[i][j] = cartan[j][i] = -1; };
  switch (c.family) {
    case Family::A:
      for (int i = 0; i + 1 < m; ++i) chain_edge(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < m; ++i) chain_edge(i, i + 1);
      for (int i = 0; i + 1 < m; ++i) d[i] = 2;
      cartan[m - 2][m - 1] = -2;  // <alpha_{n-1}, alpha_n^vee>
      break;
    case Family::C:
      for (int i = 0; i + 1 < m; ++i) chain_edge(i, i + 1);
      d[m - 1] = 2;
      cartan[m - 1][m - 2] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 1 < m - 1; ++i) chain_edge(i, i + 1);
      chain_edge(m - 3, m - 1);
      break;
    case Family::E:
      // Chain 0-2-3-4-5(-6-7) with node 1 attached to node 3.
      chain_edge(0, 2);
      for (int i = 2; i + 1 < m; ++i) chain_edge(i, i + 1);
      chain_edge(1, 3);
      break;
    case Family::F:
      chain_edge(0, 1);
      chain_edge(2, 3);
      d[0] = d[1] = 2;
      cartan[1][2] = -2;
      cartan[2][1] = -1;
      break;
    case Family::G:
      d[1] = 3;
      cartan[0][1] = -1;
      cartan[1][0] = -3;
      break;
  }
}

long long expected_positive_count(const SimpleComponent& c) {
  const long long n = c.rank;
  switch (c.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return c.rank == 6 ? 36 : c.rank == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

}  // namespace

RootSystem::RootSystem(std::vector<SimpleComponent> components, LatticeKind kind,
                       QMat custom_generators)
    : components_(std::move(components)), kind_(kind) {
  if (components_.empty()) fail(errc::illegal_rank, "empty component list");
  for (const auto& c : components_)
    if (!legal_component(c))
      fail(errc::illegal_rank, std::string(1, static_cast<char>(c.family)) + std::to_string(c.rank));
  n_ = 0;
  for (const auto& c : components_) n_ += c.rank;
  build_cartan();
  build_positive_roots();
  build_lattice(kind, std::move(custom_generators));
}

void RootSystem::build_cartan() {
  cartan_.assign(n_, std::vector<int>(n_, 0));
  d_.assign(n_, 1);
  int off = 0;
  for (const auto& c : components_) {
    std::vector<std::vector<int>> block;
    std::vector<int> dblock;
    component_cartan(c, block, dblock);
    for (int i = 0; i < c.rank; ++i) {
      d_[off + i] = dblock[i];
      for (int j = 0; j < c.rank; ++j) cartan_[off + i][off + j] = block[i][j];
    }
    off += c.rank;
  }
  pairing_.assign(n_, QVec(n_, Rat(0)));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) pairing_[i][j] = Rat(cartan_[i][j] * d_[j]);
}

void RootSystem::build_positive_roots() {
  // Closure under root addition from the simple roots, walking up by height.
  std::set<Root> known;
  std::vector<Root> frontier;
  for (int i = 0; i < n_; ++i) {
    Root e(n_, 0);
    e[i] = 1;
    known.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& beta : frontier) {
      for (int j = 0; j < n_; ++j) {
        // q = p - <beta, alpha_j^vee> with p the depth of the alpha_j-string.
        long long scal = 0;
        for (int i = 0; i < n_; ++i) scal += static_cast<long long>(beta[i]) * cartan_[i][j];
        long long p = 0;
        Root down = beta;
        for (;;) {
          down[j] -= 1;
          bool positive = false, zero = true;
          for (int v : down) {
            if (v < 0) {
              positive = false;
              zero = false;
              break;
            }
            if (v > 0) zero = false, positive = true;
          }
          if (zero || !positive || !known.count(down)) break;
          ++p;
        }
        if (p - scal > 0) {
          Root up = beta;
          up[j] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }
  positive_roots_.assign(known.begin(), known.end());
  std::sort(positive_roots_.begin(), positive_roots_.end());
  long long expected = 0;
  for (const auto& c : components_) expected += expected_positive_count(c);
  if (static_cast<long long>(positive_roots_.size()) != expected)
    fail(errc::internal, "positive root count mismatch for " + type_string());
}

void RootSystem::build_lattice(LatticeKind kind, QMat custom) {
  QMat basis;
  switch (kind) {
    case LatticeKind::adjoint: {
      basis.assign(n_, QVec(n_, Rat(0)));
      for (int i = 0; i < n_; ++i) basis[i][i] = 1;
      break;
    }
    case LatticeKind::simply_connected: {
      // Fundamental weights: rows of the inverse Cartan matrix.
      QMat c(n_, QVec(n_));
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) c[i][j] = Rat(cartan_[i][j]);
      basis = inverse(c);
      break;
    }
    case LatticeKind::custom: {
      basis = std::move(custom);
      break;
    }
  }
  if (basis.empty() || static_cast<int>(basis.size()) < n_)
    fail(errc::lattice_not_between_root_and_weight, "generator matrix must have full rank");
  for (const QVec& row : basis)
    if (static_cast<int>(row.size()) != n_)
      fail(errc::dimension_mismatch, "lattice generator of wrong length");

  // Canonicalize: scale to integers, HNF, scale back.
  Int den = 1;
  for (const QVec& row : basis)
    for (const Rat& q : row) {
      Int d = q.get_den();
      den = lcm(den, d);
    }
  IMat zmat;
  for (const QVec& row : basis) {
    IVec zrow(n_);
    for (int j = 0; j < n_; ++j) {
      Rat scaled = row[j] * Rat(den);
      zrow[j] = scaled.get_num();
    }
    zmat.push_back(std::move(zrow));
  }
  IMat h = hnf(std::move(zmat));
  if (static_cast<int>(h.size()) != n_)
    fail(errc::lattice_not_between_root_and_weight, "generator matrix must have full rank");
  lattice_basis_.assign(n_, QVec(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) lattice_basis_[i][j] = Rat(h[i][j]) / Rat(den);
  lattice_basis_inv_ = inverse(lattice_basis_);

  // Root lattice <= X(T) <= weight lattice.
  for (int i = 0; i < n_; ++i) {
    QVec alpha(n_, Rat(0));
    alpha[i] = 1;
    if (!in_character_lattice(alpha))
      fail(errc::lattice_not_between_root_and_weight,
           "simple root " + std::to_string(i) + " not in lattice");
  }
  for (const QVec& row : lattice_basis_)
    for (int j = 0; j < n_; ++j) {
      Rat scal(0);
      for (int i = 0; i < n_; ++i) scal += row[i] * Rat(cartan_[i][j]);
      if (!is_integer(scal))
        fail(errc::lattice_not_between_root_and_weight, "generator is not a weight");
    }
}

std::string RootSystem::type_string() const {
  std::string s;
  for (const auto& c : components_) {
    if (!s.empty()) s += 'x';
    s += static_cast<char>(c.family);
    s += std::to_string(c.rank);
  }
  return s;
}

int RootSystem::positive_root_index(const Root& r) const {
  if (static_cast<int>(r.size()) != n_) return -1;
  auto it = std::lower_bound(positive_roots_.begin(), positive_roots_.end(), r);
  if (it == positive_roots_.end() || *it != r) return -1;
  return static_cast<int>(it - positive_roots_.begin());
}

std::vector<int> RootSystem::support(const Root& r) {
  std::vector<int> s;
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

long long RootSystem::height(const Root& r) {
  return std::accumulate(r.begin(), r.end(), 0LL);
}

std::vector<Root> RootSystem::positive_roots_supported_on(const std::vector<int>& subset) const {
  std::vector<bool> in(n_, false);
  for (int i : subset) in[i] = true;
  std::vector<Root> out;
  for (const Root& r : positive_roots_) {
    bool ok = true;
    for (int i = 0; i < n_ && ok; ++i)
      if (r[i] != 0 && !in[i]) ok = false;
    if (ok) out.push_back(r);
  }
  return out;
}

std::vector<std::pair<Root, Root>> RootSystem::decompositions(const Root& alpha) const {
  std::vector<std::pair<Root, Root>> out;
  for (const Root& beta : positive_roots_) {
    if (beta >= alpha) break;  // lex order: beta < alpha needed for beta + gamma = alpha
    Root gamma = root_sub(alpha, beta);
    if (beta <= gamma && is_positive_root(gamma)) out.emplace_back(beta, gamma);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rat RootSystem::pairing(const QVec& v, const QVec& w) const {
  if (static_cast<int>(v.size()) != n_ || static_cast<int>(w.size()) != n_)
    fail(errc::dimension_mismatch, "pairing");
  Rat sum(0);
  for (int i = 0; i < n_; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < n_; ++j)
      if (w[j] != 0) sum += v[i] * pairing_[i][j] * w[j];
  }
  return sum;
}

Rat RootSystem::pairing_roots(const Root& a, const Root& b) const {
  return pairing(to_qvec(a), to_qvec(b));
}

QVec RootSystem::reflect(int delta, const QVec& v) const {
  if (delta < 0 || delta >= n_) fail(errc::dimension_mismatch, "reflect: bad simple root index");
  if (static_cast<int>(v.size()) != n_) fail(errc::dimension_mismatch, "reflect");
  Rat scal(0);
  for (int i = 0; i < n_; ++i)
    if (v[i] != 0) scal += v[i] * Rat(cartan_[i][delta]);
  QVec out = v;
  out[delta] -= scal;
  return out;
}

Root RootSystem::reflect_root(int delta, const Root& r) const {
  long long scal = 0;
  for (int i = 0; i < n_; ++i) scal += static_cast<long long>(r[i]) * cartan_[i][delta];
  Root out = r;
  out[delta] -= static_cast<int>(scal);
  return out;
}

int RootSystem::edge_multiplicity(int i, int j) const {
  if (i == j) return 0;
  return cartan_[i][j] * cartan_[j][i];
}

bool RootSystem::terminal_in(int node, const std::vector<int>& subset) const {
  int deg = 0;
  for (int other : subset)
    if (other != node && adjacent(node, other)) ++deg;
  return deg == 1;
}

SubdiagramInfo RootSystem::subdiagram(std::vector<int> subset) const {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  SubdiagramInfo info;
  for (size_t a = 0; a < subset.size(); ++a)
    for (size_t b = a + 1; b < subset.size(); ++b) {
      const int i = subset[a], j = subset[b];
      const int mult = edge_multiplicity(i, j);
      if (mult == 0) continue;
      int arrow = -1;
      if (d_[i] != d_[j]) arrow = d_[i] < d_[j] ? i : j;
      info.edges.push_back({i, j, mult, arrow});
    }
  std::map<int, std::vector<int>> adj;
  for (const auto& e : info.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::set<int> seen;
  for (int start : subset) {
    if (seen.count(start)) continue;
    std::vector<int> comp, stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : adj[v])
        if (seen.insert(w).second) stack.push_back(w);
    }
    std::sort(comp.begin(), comp.end());
    std::vector<int> term;
    for (int v : comp)
      if (terminal_in(v, comp)) term.push_back(v);
    info.components.push_back(std::move(comp));
    info.terminals.push_back(std::move(term));
  }
  return info;
}

bool RootSystem::subset_connected(const std::vector<int>& subset) const {
  if (subset.empty()) return true;
  return subdiagram(subset).components.size() == 1;
}

std::optional<IVec> RootSystem::lattice_coords(const QVec& v) const {
  if (static_cast<int>(v.size()) != n_) fail(errc::dimension_mismatch, "lattice_coords");
  QVec x = mat_apply_left(v, lattice_basis_inv_);
  IVec out(n_);
  for (int i = 0; i < n_; ++i) {
    if (!is_integer(x[i])) return std::nullopt;
    out[i] = x[i].get_num();
  }
  return out;
}

QVec RootSystem::from_lattice_coords(const IVec& x) const {
  if (static_cast<int>(x.size()) != n_) fail(errc::dimension_mismatch, "from_lattice_coords");
  QVec out(n_, Rat(0));
  for (int i = 0; i < n_; ++i)
    if (x[i] != 0)
      for (int j = 0; j < n_; ++j) out[j] += Rat(x[i]) * lattice_basis_[i][j];
  return out;
}

std::vector<std::vector<int>> RootSystem::diagram_automorphisms() const {
  std::vector<std::vector<int>> result;
  std::vector<int> perm(n_, -1);
  std::vector<bool> used(n_, false);

  auto lattice_stable = [&](const std::vector<int>& p) {
    for (const QVec& row : lattice_basis_) {
      QVec img(n_, Rat(0));
      for (int i = 0; i < n_; ++i) img[p[i]] = row[i];
      if (!in_character_lattice(img)) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n_) {
      if (lattice_stable(perm)) result.push_back(perm);
      return;
    }
    for (int img = 0; img < n_; ++img) {
      if (used[img] || cartan_[img][img] != 2 || d_[img] != d_[pos]) continue;
      bool ok = true;
      for (int prev = 0; prev < pos && ok; ++prev)
        if (cartan_[pos][prev] != cartan_[img][perm[prev]] ||
            cartan_[prev][pos] != cartan_[perm[prev]][img])
          ok = false;
      if (!ok) continue;
      perm[pos] = img;
      used[img] = true;
      self(self, pos + 1);
      used[img] = false;
      perm[pos] = -1;
    }
  };
  rec(rec, 0);
  return result;
}

RootSystemPtr build_root_system(std::vector<SimpleComponent> components, LatticeKind kind,
                                QMat custom_generators) {
  return std::make_shared<const RootSystem>(std::move(components), kind,
                                            std::move(custom_generators));
}

std::vector<SimpleComponent> parse_type_string(const std::string& s) {
  std::vector<SimpleComponent> comps;
  size_t i = 0;
  while (i < s.size()) {
    const char f = s[i];
    if (f < 'A' || f > 'G') throw std::invalid_argument("bad type string: " + s);
    ++i;
    size_t j = i;
    while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw std::invalid_argument("missing rank in type string: " + s);
    comps.push_back({static_cast<Family>(f), std::stoi(s.substr(i, j - i))});
    i = j;
    if (i < s.size()) {
      if (s[i] != 'x' && s[i] != 'X') throw std::invalid_argument("bad type string: " + s);
      ++i;
    }
  }
  if (comps.empty()) throw std::invalid_argument("empty type string");
  return comps;
}

}  // namespace solvsph
