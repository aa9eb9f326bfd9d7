#pragma once

#include "thetagroup/exactalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace thetagroup {

/// Root in simple-root coordinates.
using Root = std::vector<int>;

class RootSystem {
 public:
  /// Supported labels: A1..A4, B2..B4, C3, C4, D4, G2, F4.
  static RootSystem build(const std::string& cartan_type);
  /// Build from a Gram matrix of the simple roots (short roots have squared length 2).
  static RootSystem from_gram(const std::string& label, const std::vector<std::vector<int>>& gram);

  const std::string& type() const { return type_; }
  int rank() const { return rank_; }
  int size() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return size() / 2; }

  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(int i) const { return roots_[i]; }
  /// Index of a root, or -1 when the vector is not a root.
  int index_of(const Root& r) const;
  bool contains(const Root& r) const { return index_of(r) >= 0; }
  int neg(int i) const { return i < num_positive() ? i + num_positive() : i - num_positive(); }
  bool is_positive(int i) const { return i < num_positive(); }
  int height(int i) const;
  int simple(int i) const { return i; }
  int highest_root() const { return num_positive() - 1; }

  /// a[i][j] = <alpha_i, alpha_j^vee>.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<std::vector<int>>& gram() const { return gram_; }
  /// Symmetric form on root coordinates.
  int inner(const Root& a, const Root& b) const;
  int norm(int i) const { return norms_[i]; }
  bool has_two_lengths() const { return min_norm_ != max_norm_; }
  bool is_long(int i) const { return norms_[i] == max_norm_; }
  bool is_short(int i) const { return has_two_lengths() && norms_[i] == min_norm_; }
  /// <root a, root b ^vee>.
  int pairing(int a, int b) const { return pairing_[a][b]; }
  int pairing(const Root& a, int b) const;
  /// Coroot of root i in the basis of simple coroots.
  const Root& coroot(int i) const { return coroots_[i]; }
  /// Index of s_b(a).
  int reflect(int a, int b) const { return reflect_[a][b]; }

  /// Compact coefficient name such as "1100" or "-1122".
  std::string root_name(int i) const;
  /// Inverse of root_name; throws on anything that is not a root.
  int parse_root(const std::string& s) const;

 private:
  std::string type_;
  int rank_ = 0;
  std::vector<std::vector<int>> gram_, cartan_;
  std::vector<Root> roots_, coroots_;
  std::vector<int> norms_;
  int min_norm_ = 2, max_norm_ = 2;
  std::map<Root, int> index_;
  std::vector<std::vector<int>> pairing_, reflect_;
};

/// Reflection closure of a set of root indices (always contains negatives).
std::vector<int> reflection_closure(const RootSystem& rs, const std::vector<int>& roots);

struct SubsystemFactor {
  std::string base;  // "A", "B", "C", "D", "G", "F"
  int rank = 0;
  bool tilde = false;
  std::string str() const;
};

/// Type label of the closed subsystem generated by the given roots, for example
/// "C3×A1", "A2×Ã2" or "A1^4". Tilde marks factors of ambient-short roots.
std::string subsystem_type(const RootSystem& rs, const std::vector<int>& roots);
std::vector<SubsystemFactor> subsystem_factors(const RootSystem& rs, const std::vector<int>& roots);
/// Irreducible type from the number of roots, the rank and the counts of long and
/// short roots (short meaning shorter than the longest roots of the ambient system).
SubsystemFactor classify_component(int size, int rank, int nlong, int nshort);
/// Sorted product label such as "A2×Ã2" or "A1^4"; "1" when empty.
std::string factors_label(std::vector<SubsystemFactor> factors);

/// Roots orthogonal to every root of the given set.
std::vector<int> orthogonal_roots(const RootSystem& rs, const std::vector<int>& roots);

/// D4 formed by the long roots of F4, with the embedding of its roots.
struct LongSubsystem {
  RootSystem d4;
  std::vector<Root> basis;           // simple roots of the D4, in F4 coordinates
  std::vector<int> to_ambient;       // D4 root index -> F4 root index
};
LongSubsystem long_subsystem(const RootSystem& f4);

/// Affine (possibly twisted) Dynkin diagram with marks.
struct AffineDiagram {
  std::string base_type;
  int twist = 1;
  /// Nodes in canonical order: alpha_0..alpha_r, or beta_0..beta_l when twisted.
  std::vector<std::string> nodes;
  std::vector<int> marks;
  /// For twisted diagrams, the simple roots each beta_i (i >= 1) stands for.
  std::vector<std::vector<int>> node_classes;
  /// Node index for each character of a Kac coefficient string.
  std::vector<int> string_nodes;
  /// Permutations of the nodes preserving the diagram and its marks.
  std::vector<std::vector<int>> automorphisms;
};

AffineDiagram affine_diagram(const std::string& cartan_type, int twist);

}  // namespace thetagroup
