#pragma once

#include "thetagroup/rootsystem.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace thetagroup {

/// Weyl group of a root system, stored as permutations of the roots with a
/// full multiplication table. Element 0 is the identity.
class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs);

  const RootSystem& root_system() const { return rs_; }
  int order() const { return static_cast<int>(perms_.size()); }
  int identity() const { return 0; }

  const std::vector<int>& perm(int e) const { return perms_[e]; }
  /// Image of root index k under element e.
  int act(int e, int k) const { return perms_[e][k]; }
  /// Matrix on the coroot lattice; column i holds the coroot coordinates of w(alpha_i).
  IntMat matrix(int e) const;
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * order() + b]; }
  int inv(int a) const { return inverse_[a]; }
  int power(int e, int k) const;
  /// Element with the given root permutation, or -1.
  int find(const std::vector<int>& perm) const;
  /// Reflection in root k.
  int reflection(int k) const { return reflection_[k]; }
  /// A shortest word in simple reflections: e = s_{w[0]} s_{w[1]} ...
  const std::vector<int>& word(int e) const { return words_[e]; }
  int length(int e) const { return static_cast<int>(words_[e].size()); }

  int element_order(int e) const;
  IntPoly char_poly(int e) const;
  /// Dimension of the fixed space on t.
  int fixed_dim(int e) const;
  /// Multiplicity of Phi_m in the characteristic polynomial.
  int eigenvalue_multiplicity(int e, int m) const;

  /// Closure of a set of elements under multiplication.
  std::vector<int> subgroup(const std::vector<int>& generators) const;
  /// Subgroup generated by reflections in the given roots.
  std::vector<int> reflection_subgroup(const std::vector<int>& roots) const;
  /// Centralizer of e, optionally inside a subgroup (sorted element list).
  std::vector<int> centralizer(int e, const std::vector<int>* within = nullptr) const;
  /// Conjugacy classes (each sorted); classes are ordered by their smallest element.
  const std::vector<std::vector<int>>& conjugacy_classes() const;
  int class_of(int e) const;

 private:
  std::uint64_t key_of(const std::vector<int>& perm) const;
  RootSystem rs_;
  std::vector<std::vector<int>> perms_;
  std::vector<std::vector<int>> words_;
  std::unordered_map<std::uint64_t, int> lookup_;
  std::vector<int> table_, inverse_, reflection_;
  mutable std::vector<std::vector<int>> classes_;
  mutable std::vector<int> class_index_;
};

/// One conjugacy class with its Carter data.
struct CarterClass {
  std::string label;
  int rep = 0;
  int size = 0;
  int order = 1;
  IntPoly char_poly;
  int fixed_dim = 0;
  int centralizer_order = 0;
  /// Involution decomposition w = w1 w2: w1 = prod s_a (a in A), w2 = prod s_b (b in B).
  std::vector<int> diagram_a, diagram_b;
  std::vector<int> phi1, phi2;
  std::string phi1_type, phi2_type;
  /// True when w is a Coxeter element of W(Phi1).
  bool coxeter_in_phi1 = false;
  std::vector<int> members;
};

/// Carter classes of W, labelled and cross-checked against the built-in catalog
/// (supported for G2, F4 and D4; other types get derived labels only).
std::vector<CarterClass> carter_classes(const WeylGroup& w);

/// Carter decomposition certificate for a single element.
struct CarterDecomposition {
  std::vector<int> a, b, phi1;
  std::string phi1_type;
  bool coxeter = false;
};
CarterDecomposition carter_decomposition(const WeylGroup& w, int e);

/// Characteristic polynomial of a Coxeter element of the given irreducible type.
IntPoly coxeter_char_poly(const std::string& cartan_type);
int coxeter_number(const std::string& cartan_type);

/// Roots orthogonal to phi1, with the type label of their closure.
std::pair<std::vector<int>, std::string> orthogonal_subsystem(const RootSystem& rs,
                                                              const std::vector<int>& phi1);

}  // namespace thetagroup
