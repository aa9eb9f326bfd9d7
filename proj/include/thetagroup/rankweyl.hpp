#pragma once

#include "thetagroup/kacautos.hpp"
#include "thetagroup/weyl.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace thetagroup {

/// n_{beta_1} ... n_{beta_k} for the given roots (rightmost factor applied first).
Automorphism tits_lift(const LieAlgebra& alg, const std::vector<int>& reflection_roots);
/// Tits lift of w along its shortest word in simple reflections.
Automorphism realize_weyl_automorphism(const WeylGroup& W, int w, const LieAlgebra& alg);

/// Multiplicity of Phi_m in the characteristic polynomial of w.
int rank_via_weyl(const WeylGroup& W, int w, int m);

struct GenericOrbitRank {
  int rank = 0;
  int dim_g0 = 0;
  int dim_g1 = 0;
  /// Smallest centralizer of a sample in g(0), and how often it was seen.
  int min_centralizer = 0;
  int witnessed = 0;
  Vec sample;
};

/// dim g(1) - dim g(0) + min dim z_{g(0)}(x) over random x in g(1) with integer
/// coefficients in [-3, 3]. Throws when the minimum is not witnessed twice.
GenericOrbitRank rank_via_generic_orbit(const LieAlgebra& alg, const Grading& gr, std::uint64_t seed = 0,
                                        int trials = 8);

/// Sparse element of g(1) (a sum of at most three basis vectors of g(1)) whose
/// centralizer in g(0) has the given dimension; empty when none exists.
std::optional<Vec> sparse_orbit_witness(const LieAlgebra& alg, const Grading& gr, int centralizer);

/// Semisimple element of g(1) taken from the sparse search space or the samples.
std::optional<Vec> semisimple_witness(const LieAlgebra& alg, const Grading& gr, std::uint64_t seed = 0);

struct CartanSubspace {
  std::vector<Vec> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

/// zeta_m-eigenspace of w on t, as elements of alg; checked commutative and semisimple.
CartanSubspace cartan_subspace(const WeylGroup& W, int w, int m, const LieAlgebra& alg);

/// Linear maps of c induced by a set of Weyl group elements, without repeats.
std::vector<Mat> restrict_to_cartan(const WeylGroup& W, const std::vector<int>& elements,
                                    const CartanSubspace& c, const LieAlgebra& alg);

struct LittleWeylGroup {
  std::vector<Mat> matrices;
  std::string name;
  std::vector<int> degrees;
  /// Number of pseudoreflections of each order.
  std::map<int, int> reflection_orders;
  int order() const { return static_cast<int>(matrices.size()); }
};

/// Z_ambient(w) acting on c, modulo the kernel. `ambient` restricts the centralizer
/// to a subgroup (sorted element list), e.g. the long-root W(D4) inside W(F4).
LittleWeylGroup little_weyl(const WeylGroup& W, int w, const CartanSubspace& c, const LieAlgebra& alg,
                            const std::vector<int>* ambient = nullptr);

/// Orders of the pseudoreflections in a finite matrix group.
std::map<int, int> reflection_order_counts(const std::vector<Mat>& group);
/// Degrees from the Molien series; throws when the series is not that of a
/// polynomial ring.
std::vector<int> molien_degrees(const std::vector<Mat>& group);
/// Shephard-Todd label of a finite matrix group of rank at most 4; throws when
/// the fingerprint is not in the catalog.
std::string identify_reflection_group(const std::vector<Mat>& group);

struct NRegularity {
  bool n_regular = false;
  Vec witness;
  int centralizer_dim = 0;
};

/// Looks for a base u(Delta) permuted by theta whose orbits carry zeta-eigenvectors;
/// their sum is a regular nilpotent element of g(1).
NRegularity n_regular_check(const WeylGroup& W_alg, const Automorphism& theta, int m);

struct KwEvidence {
  std::string reduction;   // "N-reg.", "Spin(9)", "SL(2)^3", ...
  std::string theta_on_l;  // "Coxeter", "positive 3-cycle", "τ", or empty
  bool stable = false;
  bool contains_c = false;
  bool n_regular = false;
  bool little_weyl_match = false;
  /// Degrees of W_c against the degrees divisible by m (inner N-regular cases).
  bool degree_identity = true;
  /// W_c = W-bar shown inside l: the saturation criterion for theta on the torus of
  /// a simply connected l', or (rank one) an invariant on l(1) of degree |W-bar|.
  bool l_certified = false;
  /// W_c = W-bar certified by the saturation criterion, by maximal rank, or on l.
  bool criterion = false;
  std::vector<std::string> notes;
  bool verified() const { return stable && contains_c && n_regular && little_weyl_match && degree_identity; }
};

/// Field choice: p = 0 for cyclotomic fields, otherwise F_p for every row of order
/// m with m | p - 1 (other rows fall back to cyclotomic).
struct FieldConfig {
  std::int64_t p = 0;
  FieldPtr field_for(int m, std::string* note = nullptr) const;
};

struct ZeroRankCertificate {
  int dim_g0 = 0;
  int dim_g1 = 0;
  int centralizer = 0;
  std::string witness;
};

struct ClassificationRow {
  std::string type;  // "G2", "F4", "D4^(3)"
  std::string kac;
  int order = 0;
  std::string carter;
  int rank = 0;
  int rank_weyl = 0;
  int cartan_dim = 0;
  std::string g0_type;
  std::vector<int> dims;
  LittleWeylGroup little_weyl;
  KwEvidence kw;
  bool w_phi2_trivial = true;
  std::string field;
  std::string note;
  std::string semisimple_witness;
};

/// Everything computed for one diagram.
struct Dossier {
  std::string type;
  std::string kac;
  int order = 0;
  bool primitive = true;
  std::string g0_type;
  std::vector<int> dims;
  GenericOrbitRank orbit;
  std::optional<ClassificationRow> row;
  std::optional<ZeroRankCertificate> zero_rank;
  std::string field;
};

struct Classification {
  std::vector<ClassificationRow> rows;
  std::vector<Dossier> zero_rank;
};

/// Classification engine for one of "G2", "F4", "D4-3".
class Classifier {
 public:
  explicit Classifier(const std::string& type);

  const std::string& label() const { return label_; }
  const AffineDiagram& affine() const { return affine_; }
  const WeylGroup& weyl() const { return weyl_; }
  const std::vector<CarterClass>& classes() const { return classes_; }
  bool twisted() const { return affine_.twist != 1; }

  Dossier analyze(const KacDiagram& d, const FieldConfig& fc = {}, std::uint64_t seed = 0) const;
  Classification classify(const FieldConfig& fc = {}, std::uint64_t seed = 0) const;

  /// Index into classes() of the Weyl class matched to a positive-rank diagram.
  int match_class(const KacDiagram& d, int rank) const;
  /// Diagrams produced by the Kac points of lifts of a class (inner types only).
  std::vector<std::string> lift_family(int class_index) const;
  /// Rank predicted from the Weyl group side: the largest eigenvalue multiplicity of
  /// a class whose lifts realize the diagram, 0 when no class of order m can, and
  /// -1 when the twisted matching needs the rank to decide.
  int weyl_side_rank(const KacDiagram& d) const;

 private:
  ClassificationRow build_row(const KacDiagram& d, const Dossier& dossier, const FieldConfig& fc) const;
  KwEvidence kw_inner(const ClassificationRow& row, int w, const CartanSubspace& c, const LieAlgebra& alg,
                      const Automorphism& theta_kac, int m) const;
  KwEvidence kw_twisted(const ClassificationRow& row, int w, const LieAlgebra& d4, const Automorphism& theta,
                        int m) const;

  std::string label_;
  AffineDiagram affine_;
  RootSystem weyl_roots_;  // G2 or F4
  RootSystem alg_roots_;   // G2, F4 or D4
  WeylGroup weyl_;
  std::vector<CarterClass> classes_;
  std::vector<int> long_subgroup_;  // W(D4) inside W(F4), twisted type only
  std::optional<WeylGroup> alg_weyl_;  // W(D4), twisted type only
};

/// Signed cycle type of w acting on the coordinate roots of a B_n or C_n subsystem,
/// e.g. "positive 3-cycle".
std::string signed_cycle_type(const WeylGroup& W, int w, const std::vector<int>& subsystem);

/// Group name for an irreducible subsystem label: B3 -> "Spin(7)", Ã1 -> "short SL(2)".
std::string group_name(const std::string& subsystem_label);

}  // namespace thetagroup
