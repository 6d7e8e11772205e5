#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "solvsph/numeric.hpp"

namespace solvsph {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleComponent {
  Family family;
  int rank;

  bool operator==(const SimpleComponent&) const = default;
};

// Legal ranks: A>=1, B>=2, C>=2, D>=3, E in {6,7,8}, F=4, G=2.
bool legal_component(const SimpleComponent& c);

// A root is an integer coefficient vector in the simple-root basis.
// Characters of T are rational vectors in the same basis.
using Root = std::vector<int>;

Root root_add(const Root& a, const Root& b);
Root root_sub(const Root& a, const Root& b);
Root root_neg(const Root& a);

struct DiagramEdge {
  int a, b;          // node indices, a < b
  int multiplicity;  // 1, 2 or 3
  int arrow_to;      // index of the shorter endpoint, -1 on a single edge
};

struct SubdiagramInfo {
  std::vector<std::vector<int>> components;  // each sorted; sorted by first node
  std::vector<std::vector<int>> terminals;   // per component: nodes of induced degree 1
  std::vector<DiagramEdge> edges;
};

enum class LatticeKind { adjoint, simply_connected, custom };

// A semisimple root system with a chosen character lattice X(T), immutable
// after construction. Pairing normalization: per component, short roots have
// squared length 2.
class RootSystem {
 public:
  RootSystem(std::vector<SimpleComponent> components, LatticeKind kind, QMat custom_generators = {});

  int rank() const { return n_; }
  const std::vector<SimpleComponent>& components() const { return components_; }
  LatticeKind lattice_kind() const { return kind_; }
  std::string type_string() const;

  // cartan()[i][j] = <alpha_i, alpha_j^vee> = 2(alpha_i,alpha_j)/(alpha_j,alpha_j)
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const QMat& pairing_matrix() const { return pairing_; }
  // Half squared lengths (alpha_i,alpha_i)/2, in {1,2,3}.
  const std::vector<int>& length_factors() const { return d_; }

  // Lex-sorted ascending.
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  bool is_positive_root(const Root& r) const { return positive_root_index(r) >= 0; }
  int positive_root_index(const Root& r) const;

  static std::vector<int> support(const Root& r);
  static long long height(const Root& r);

  // Positive roots whose support lies inside the given simple-root subset.
  std::vector<Root> positive_roots_supported_on(const std::vector<int>& subset) const;

  // Unordered decompositions alpha = beta + gamma with beta, gamma positive
  // roots; pairs returned with beta lex <= gamma, sorted.
  std::vector<std::pair<Root, Root>> decompositions(const Root& alpha) const;

  Rat pairing(const QVec& v, const QVec& w) const;
  Rat pairing_roots(const Root& a, const Root& b) const;

  // Simple reflection r_delta applied to a character (rational coordinates).
  QVec reflect(int delta, const QVec& v) const;
  Root reflect_root(int delta, const Root& r) const;

  int edge_multiplicity(int i, int j) const;
  bool adjacent(int i, int j) const { return i != j && cartan_[i][j] != 0; }
  SubdiagramInfo subdiagram(std::vector<int> subset) const;
  bool subset_connected(const std::vector<int>& subset) const;
  // Node joined by an edge with exactly one node of the subset.
  bool terminal_in(int node, const std::vector<int>& subset) const;

  // Canonical generator matrix of X(T) in root coordinates (HNF-reduced rows).
  const QMat& lattice_basis() const { return lattice_basis_; }
  // Coordinates of v with respect to lattice_basis(), if v lies in X(T).
  std::optional<IVec> lattice_coords(const QVec& v) const;
  bool in_character_lattice(const QVec& v) const { return lattice_coords(v).has_value(); }
  QVec from_lattice_coords(const IVec& x) const;

  // Permutations of the simple roots preserving the Cartan matrix and X(T).
  std::vector<std::vector<int>> diagram_automorphisms() const;

  bool operator==(const RootSystem& o) const {
    return components_ == o.components_ && lattice_basis_ == o.lattice_basis_;
  }

 private:
  void build_cartan();
  void build_positive_roots();
  void build_lattice(LatticeKind kind, QMat custom);

  std::vector<SimpleComponent> components_;
  int n_ = 0;
  LatticeKind kind_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> d_;
  QMat pairing_;
  std::vector<Root> positive_roots_;
  QMat lattice_basis_;
  QMat lattice_basis_inv_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

RootSystemPtr build_root_system(std::vector<SimpleComponent> components, LatticeKind kind,
                                QMat custom_generators = {});

// Parses component lists like "A2", "B3xG2", "A1xA1xA1".
std::vector<SimpleComponent> parse_type_string(const std::string& s);

}  // namespace solvsph
