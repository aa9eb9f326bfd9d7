#include "thetagroup/rankweyl.hpp"

#include <algorithm>
#include <functional>
#include <atomic>
#include <thread>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace thetagroup {

namespace {

/// Coordinates of v in the span of `basis`, or nullopt when v is outside it.
std::optional<Vec> coords_in_basis(const Field& f, const std::vector<Vec>& basis, const Vec& v) {
  int n = static_cast<int>(v.size());
  int k = static_cast<int>(basis.size());
  Mat a(f, n, k + 1);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) a(i, j) = basis[j][i];
  for (int i = 0; i < n; ++i) a(i, k) = v[i];
  auto piv = rref(a);
  Vec out = zero_vec(f, k);
  for (size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == k) return std::nullopt;
    out[piv[r]] = a(static_cast<int>(r), k);
  }
  return out;
}

/// Positive roots of a closed subsystem given as a set of root indices.
std::vector<int> positive_part(const RootSystem& rs, const std::vector<int>& sub) {
  std::vector<int> out;
  for (int k : sub)
    if (rs.is_positive(k)) out.push_back(k);
  return out;
}

/// <beta, rho^vee> for the subsystem, i.e. the height of beta in its base.
int subsystem_height(const RootSystem& rs, const std::vector<int>& pos, int beta) {
  int s = 0;
  for (int g : pos) s += rs.pairing(beta, g);
  return s / 2;
}

std::vector<int> subsystem_base(const RootSystem& rs, const std::vector<int>& sub) {
  auto pos = positive_part(rs, sub);
  std::vector<int> base;
  for (int k : pos)
    if (subsystem_height(rs, pos, k) == 1) base.push_back(k);
  return base;
}

/// Word in the base reflections of a subsystem for an element of its Weyl group.
std::vector<int> subsystem_word(const WeylGroup& W, int w, const std::vector<int>& sub) {
  const RootSystem& rs = W.root_system();
  auto base = subsystem_base(rs, sub);
  std::set<int> pos;
  for (int k : sub)
    if (rs.is_positive(k)) pos.insert(k);
  std::vector<int> rev;
  int cur = w;
  int guard = 0;
  while (cur != W.identity()) {
    bool moved = false;
    for (int d : base)
      if (!pos.count(W.act(cur, d))) {
        cur = W.mul(cur, W.reflection(d));
        rev.push_back(d);
        moved = true;
        break;
      }
    if (!moved || ++guard > 200) throw std::logic_error("element is not in the subsystem Weyl group");
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

/// Eigenspaces of a root-space-permuting automorphism on t_S + sum of root spaces
/// in R, where S indexes a theta-stable set of simple coroots.
struct SubGrading {
  int m = 1;
  bool periodic = true;
  std::vector<std::vector<Vec>> spaces;
  std::vector<int> dims() const {
    std::vector<int> d;
    for (const auto& s : spaces) d.push_back(static_cast<int>(s.size()));
    return d;
  }
};

SubGrading sub_grading(const Automorphism& th, const std::vector<int>& torus_idx, const std::vector<int>& roots,
                       int m) {
  const LieAlgebra& g = th.algebra();
  const Field& f = g.field();
  SubGrading sg;
  sg.m = m;
  sg.spaces.assign(m, {});
  Scalar zeta = f.root_of_unity(m);
  std::vector<Scalar> zp(m);
  for (int i = 0; i < m; ++i) zp[i] = zeta.pow(i);
  std::set<int> rset(roots.begin(), roots.end());
  std::set<int> seen;
  for (int s : roots) {
    if (seen.count(s)) continue;
    std::vector<int> cyc;
    std::vector<Scalar> pre;
    Scalar acc = f.one();
    int k = s;
    do {
      if (!rset.count(k)) throw std::invalid_argument("root set is not stable under the automorphism");
      seen.insert(k);
      cyc.push_back(k);
      pre.push_back(acc);
      acc = acc * th.coefficient(k);
      k = th.root_image(k);
    } while (k != s);
    int len = static_cast<int>(cyc.size());
    int found = 0;
    for (int i = 0; i < m; ++i) {
      if (zp[(static_cast<long long>(i) * len) % m] != acc) continue;
      ++found;
      Vec v = g.zero();
      for (int j = 0; j < len; ++j) v[g.e(cyc[j])] = zp[(static_cast<long long>(m - i) * j) % m] * pre[j];
      sg.spaces[i].push_back(std::move(v));
    }
    if (found != len) sg.periodic = false;
  }
  int t = static_cast<int>(torus_idx.size());
  const IntMat& T = th.torus();
  std::set<int> tset(torus_idx.begin(), torus_idx.end());
  for (int i : torus_idx)
    for (int j = 0; j < g.rank(); ++j)
      if (!tset.count(j) && T(j, i) != 0) throw std::invalid_argument("torus part is not stable");
  int found = 0;
  for (int i = 0; i < m; ++i) {
    Mat a(f, t, t);
    for (int r = 0; r < t; ++r)
      for (int c = 0; c < t; ++c) a(r, c) = f.from_int(T(torus_idx[r], torus_idx[c]).get_si());
    for (int r = 0; r < t; ++r) a(r, r) -= zp[i];
    for (const auto& kv : kernel_over_field(a)) {
      Vec v = g.zero();
      for (int r = 0; r < t; ++r) v[g.h(torus_idx[r])] = kv[r];
      sg.spaces[i].push_back(std::move(v));
      ++found;
    }
  }
  if (found != t) sg.periodic = false;
  return sg;
}

std::vector<int> all_indices(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

/// Dimensions of the grading of t + R by the Kac form rho_R^vee / m.
std::vector<int> kac_form_dims(const RootSystem& rs, const std::vector<int>& sub, int m) {
  auto pos = positive_part(rs, sub);
  std::vector<int> dims(m, 0);
  dims[0] += rs.rank();
  for (int k : sub) {
    int h = subsystem_height(rs, pos, k);
    dims[((h % m) + m) % m] += 1;
  }
  return dims;
}

Mat small_matrix_power_identity_check(const Mat& a, int* order_out) {
  Mat p = a;
  int k = 1;
  while (!p.is_identity()) {
    p = p * a;
    if (++k > 1000) throw std::logic_error("matrix of infinite order");
  }
  *order_out = k;
  return p;
}

int matrix_order(const Mat& a) {
  int k = 0;
  small_matrix_power_identity_check(a, &k);
  return k;
}

/// det(t I - A) coefficients (ascending) by Faddeev-LeVerrier.
FieldPoly small_char_poly(const Mat& a) {
  const Field& f = a.field();
  int n = a.rows();
  FieldPoly c(n + 1, f.zero());
  c[n] = f.one();
  Mat mk = Mat(f, n, n);
  for (int k = 1; k <= n; ++k) {
    Mat prev = mk;
    mk = a * prev;
    for (int i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    Mat am = a * mk;
    Scalar tr = f.zero();
    for (int i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / f.from_int(k);
  }
  return c;
}

std::string join_factors(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

}  // namespace

// ---------------------------------------------------------------- Weyl realizations

Automorphism tits_lift(const LieAlgebra& alg, const std::vector<int>& reflection_roots) {
  const RootSystem& rs = alg.roots();
  int r = alg.rank();
  Automorphism out = Automorphism::identity(alg);
  for (auto it = reflection_roots.rbegin(); it != reflection_roots.rend(); ++it) {
    IntMat n = alg.reflection_rep(*it);
    std::vector<int> perm(rs.size());
    std::vector<Scalar> coef(rs.size());
    for (int k = 0; k < rs.size(); ++k) {
      int target = alg.e(rs.reflect(k, *it));
      for (int i = 0; i < alg.dim(); ++i)
        if (i != target && n(i, alg.e(k)) != 0) throw std::logic_error("reflection representative is not monomial");
      perm[k] = rs.reflect(k, *it);
      coef[k] = alg.field().from_int(n(target, alg.e(k)).get_si());
    }
    IntMat torus(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) torus(i, j) = n(alg.h(i), alg.h(j));
    out = Automorphism(alg, perm, coef, torus).compose(out);
  }
  return out;
}

Automorphism realize_weyl_automorphism(const WeylGroup& W, int w, const LieAlgebra& alg) {
  if (W.root_system().type() != alg.roots().type()) throw std::invalid_argument("Weyl group and algebra differ");
  std::vector<int> roots;
  for (int i : W.word(w)) roots.push_back(W.root_system().simple(i));
  Automorphism th = tits_lift(alg, roots);
  if (!(th.torus() == W.matrix(w))) throw std::logic_error("Tits lift does not act on t as w");
  return th;
}

int rank_via_weyl(const WeylGroup& W, int w, int m) {
  if (W.element_order(w) != m) throw std::invalid_argument("w does not have order m");
  return W.eigenvalue_multiplicity(w, m);
}

// ---------------------------------------------------------------- generic orbits

GenericOrbitRank rank_via_generic_orbit(const LieAlgebra& alg, const Grading& gr, std::uint64_t seed, int trials) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  GenericOrbitRank out;
  const auto& g0 = gr.spaces[0];
  const auto& g1 = gr.spaces[1 % gr.m];
  out.dim_g0 = static_cast<int>(g0.size());
  out.dim_g1 = static_cast<int>(g1.size());
  if (g1.empty()) {
    out.rank = 0;
    out.witnessed = trials;
    out.sample = alg.zero();
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  const Field& f = alg.field();
  int best = -1;
  for (int t = 0; t < trials; ++t) {
    Vec x = alg.zero();
    for (const auto& v : g1) {
      int c = coef(rng);
      if (c != 0) x = vec_add(x, vec_scale(f.from_int(c), v));
    }
    int cd = alg.centralizer_dim(x, g0, false);
    if (best < 0 || cd < best) {
      best = cd;
      out.witnessed = 1;
      out.sample = x;
    } else if (cd == best) {
      ++out.witnessed;
    }
  }
  if (out.witnessed < 2) throw std::runtime_error("generic centralizer dimension did not stabilize");
  out.min_centralizer = best;
  out.rank = out.dim_g1 - out.dim_g0 + best;
  return out;
}

std::optional<Vec> sparse_orbit_witness(const LieAlgebra& alg, const Grading& gr, int centralizer) {
  const auto& g0 = gr.spaces[0];
  const auto& g1 = gr.spaces[1 % gr.m];
  int n = static_cast<int>(g1.size());
  for (int size = 1; size <= std::min(3, n); ++size) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      Vec x = alg.zero();
      for (int i : idx) x = vec_add(x, g1[i]);
      if (alg.centralizer_dim(x, g0, false) == centralizer) return x;
      int k = size - 1;
      while (k >= 0 && idx[k] == n - size + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (int j = k + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::optional<Vec> semisimple_witness(const LieAlgebra& alg, const Grading& gr, std::uint64_t seed) {
  const auto& g1 = gr.spaces[1 % gr.m];
  int n = static_cast<int>(g1.size());
  const RootSystem& rs = alg.roots();
  auto has_sign = [&](const Vec& v, bool positive) {
    for (int k = 0; k < rs.size(); ++k)
      if (!v[alg.e(k)].is_zero() && rs.is_positive(k) == positive) return true;
    return false;
  };
  auto torus_part = [&](const Vec& v) {
    for (int i = 0; i < alg.rank(); ++i)
      if (!v[alg.h(i)].is_zero()) return true;
    return false;
  };
  for (const auto& v : g1)
    if (torus_part(v) && alg.is_semisimple(v)) return v;
  int tested = 0;
  for (int size = 2; size <= std::min(3, n); ++size) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (tested < 400) {
      Vec x = alg.zero();
      for (int i : idx) x = vec_add(x, g1[i]);
      if (has_sign(x, true) && has_sign(x, false) && !alg.is_nilpotent(x)) {
        ++tested;
        if (alg.is_semisimple(x)) return x;
      }
      int k = size - 1;
      while (k >= 0 && idx[k] == n - size + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (int j = k + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < 4; ++t) {
    Vec x = alg.zero();
    for (const auto& v : g1) x = vec_add(x, vec_scale(alg.field().from_int(coef(rng)), v));
    if (!is_zero_vec(x) && alg.is_semisimple(x)) return x;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- Cartan subspaces

CartanSubspace cartan_subspace(const WeylGroup& W, int w, int m, const LieAlgebra& alg) {
  if (rank_via_weyl(W, w, m) < 1) throw std::invalid_argument("w has zero rank for this order");
  const Field& f = alg.field();
  Mat a = W.matrix(w).to_field(f);
  Scalar zeta = f.root_of_unity(m);
  for (int i = 0; i < a.rows(); ++i) a(i, i) -= zeta;
  CartanSubspace c;
  for (const auto& kv : kernel_over_field(a)) {
    Vec v = alg.zero();
    for (int i = 0; i < alg.rank(); ++i) v[alg.h(i)] = kv[i];
    c.basis.push_back(std::move(v));
  }
  for (size_t i = 0; i < c.basis.size(); ++i) {
    for (size_t j = i + 1; j < c.basis.size(); ++j)
      if (!is_zero_vec(alg.bracket(c.basis[i], c.basis[j]))) throw std::logic_error("Cartan subspace not commutative");
    if (!alg.is_semisimple(c.basis[i])) throw std::logic_error("Cartan subspace element not semisimple");
  }
  return c;
}

std::vector<Mat> restrict_to_cartan(const WeylGroup& W, const std::vector<int>& elements, const CartanSubspace& c,
                                    const LieAlgebra& alg) {
  const Field& f = alg.field();
  int r = alg.rank();
  int d = c.dim();
  std::vector<Vec> cb;
  for (const auto& v : c.basis) {
    Vec t = zero_vec(f, r);
    for (int i = 0; i < r; ++i) t[i] = v[alg.h(i)];
    cb.push_back(t);
  }
  std::vector<Mat> out;
  std::set<std::string> keys;
  for (int z : elements) {
    Mat mz = W.matrix(z).to_field(f);
    Mat res(f, d, d);
    for (int j = 0; j < d; ++j) {
      auto co = coords_in_basis(f, cb, mz.apply(cb[j]));
      if (!co) throw std::logic_error("element does not preserve the Cartan subspace");
      for (int i = 0; i < d; ++i) res(i, j) = (*co)[i];
    }
    if (keys.insert(res.key()).second) out.push_back(res);
  }
  return out;
}

std::map<int, int> reflection_order_counts(const std::vector<Mat>& group) {
  std::map<int, int> out;
  for (const auto& g : group) {
    if (g.is_identity()) continue;
    Mat a = g - Mat::identity(g.field(), g.rows());
    if (rank_of(a) == 1) out[matrix_order(g)] += 1;
  }
  return out;
}

std::vector<int> molien_degrees(const std::vector<Mat>& group) {
  if (group.empty()) throw std::invalid_argument("empty group");
  const Field& f = group[0].field();
  int n = group[0].rows();
  int order = static_cast<int>(group.size());
  int reflections = 0;
  for (auto [o, c] : reflection_order_counts(group)) reflections += c;
  // Molien series up to degree D, averaged in the field
  const int D = 2 * order + 2 > 40 ? 40 : 2 * order + 2;
  std::vector<Scalar> series(D + 1, f.zero());
  for (const auto& g : group) {
    FieldPoly cp = small_char_poly(g);
    std::vector<Scalar> q(n + 1);
    for (int j = 0; j <= n; ++j) q[j] = cp[n - j];  // det(1 - t g)
    std::vector<Scalar> inv(D + 1, f.zero());
    inv[0] = f.one();
    for (int k = 1; k <= D; ++k) {
      Scalar s = f.zero();
      for (int j = 1; j <= std::min(k, n); ++j) s.add_mul(q[j], inv[k - j]);
      inv[k] = -s;
    }
    for (int k = 0; k <= D; ++k) series[k] += inv[k];
  }
  Scalar scale = f.from_int(order).inverse();
  for (auto& c : series) c = c * scale;
  // Candidate degree sets have product |G| and sum(d - 1) equal to the number of
  // reflections; exactly one must reproduce the series.
  std::vector<std::vector<int>> matches;
  std::vector<int> cur;
  std::function<void(int, int, int)> search = [&](int start, int rem, int left) {
    if (static_cast<int>(cur.size()) == n) {
      if (rem != 1 || left != 0) return;
      std::vector<Scalar> prod(D + 1, f.zero());
      prod[0] = f.one();
      for (int d : cur)
        for (int k = d; k <= D; ++k) prod[k] += prod[k - d];
      if (prod == series) matches.push_back(cur);
      return;
    }
    for (int d = start; d <= rem; ++d)
      if (rem % d == 0 && d - 1 <= left) {
        cur.push_back(d);
        search(d, rem / d, left - (d - 1));
        cur.pop_back();
      }
  };
  search(1, order, reflections);
  if (matches.size() != 1) throw std::runtime_error("Molien series is not that of a polynomial ring");
  return matches[0];
}

namespace {

struct CatalogEntry {
  std::string name;
  int rank;
  int order;
  std::vector<int> degrees;
  std::map<int, int> reflections;
};

std::map<int, int> cyclic_reflections(int n) {
  std::map<int, int> out;
  for (int k = 1; k < n; ++k) out[n / std::gcd(n, k)] += 1;
  return out;
}

const std::vector<CatalogEntry>& reflection_catalog() {
  static const std::vector<CatalogEntry> cat = [] {
    std::vector<CatalogEntry> c;
    c.push_back({"G4", 2, 24, {4, 6}, {{3, 8}}});
    c.push_back({"G5", 2, 72, {6, 12}, {{3, 16}}});
    c.push_back({"G8", 2, 96, {8, 12}, {{2, 6}, {4, 12}}});
    c.push_back({"G13", 2, 96, {8, 12}, {{2, 18}}});
    c.push_back({"W(G2)", 2, 12, {2, 6}, {{2, 6}}});
    c.push_back({"W(F4)", 4, 1152, {2, 6, 8, 12}, {{2, 24}}});
    // imprimitive G(de, e, 2) with order at most 144
    for (int mm = 2; mm <= 12; ++mm)
      for (int p = 1; p <= mm; ++p) {
        if (mm % p != 0) continue;
        int order = 2 * mm * mm / p;
        if (order > 144) continue;
        std::map<int, int> refl;
        refl[2] += mm;
        for (auto [o, k] : cyclic_reflections(mm / p)) refl[o] += 2 * k;
        std::vector<int> deg{mm, 2 * mm / p};
        std::sort(deg.begin(), deg.end());
        c.push_back({"G(" + std::to_string(mm) + "," + std::to_string(p) + ",2)", 2, order, deg, refl});
      }
    return c;
  }();
  return cat;
}

bool is_abelian(const std::vector<Mat>& g) {
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j)
      if (!(g[i] * g[j] == g[j] * g[i])) return false;
  return true;
}

}  // namespace

std::string identify_reflection_group(const std::vector<Mat>& group) {
  if (group.empty()) throw std::invalid_argument("empty group");
  int n = group[0].rows();
  int order = static_cast<int>(group.size());
  bool abelian = is_abelian(group);
  if (n == 1) {
    if (!abelian) throw std::logic_error("rank one group is not abelian");
    return "μ" + std::to_string(order);
  }
  auto degrees = molien_degrees(group);
  auto refl = reflection_order_counts(group);
  if (abelian && n == 2 && degrees[0] * degrees[1] == order) {
    std::map<int, int> expect = cyclic_reflections(degrees[0]);
    for (auto [o, k] : cyclic_reflections(degrees[1])) expect[o] += k;
    if (expect == refl) return "μ" + std::to_string(degrees[0]) + "×μ" + std::to_string(degrees[1]);
  }
  for (const auto& e : reflection_catalog())
    if (e.rank == n && e.order == order && e.degrees == degrees && e.reflections == refl) return e.name;
  throw std::runtime_error("reflection group of order " + std::to_string(order) + " not in the catalog");
}

LittleWeylGroup little_weyl(const WeylGroup& W, int w, const CartanSubspace& c, const LieAlgebra& alg,
                            const std::vector<int>* ambient) {
  LittleWeylGroup lw;
  lw.matrices = restrict_to_cartan(W, W.centralizer(w, ambient), c, alg);
  lw.degrees = molien_degrees(lw.matrices);
  lw.reflection_orders = reflection_order_counts(lw.matrices);
  lw.name = identify_reflection_group(lw.matrices);
  return lw;
}

// ---------------------------------------------------------------- N-regularity

NRegularity n_regular_check(const WeylGroup& W, const Automorphism& theta, int m) {
  const LieAlgebra& g = theta.algebra();
  const RootSystem& rs = g.roots();
  if (W.root_system().type() != rs.type()) throw std::invalid_argument("Weyl group and algebra differ");
  const Field& f = g.field();
  Scalar zeta = f.root_of_unity(m);
  NRegularity out;
  for (int u = 0; u < W.order(); ++u) {
    std::vector<int> base;
    for (int i = 0; i < rs.rank(); ++i) base.push_back(W.act(u, rs.simple(i)));
    std::set<int> bset(base.begin(), base.end());
    bool ok = true;
    for (int b : base)
      if (!bset.count(theta.root_image(b))) ok = false;
    if (!ok) continue;
    Vec x = g.zero();
    std::set<int> done;
    for (int b : base) {
      if (done.count(b)) continue;
      std::vector<int> cyc;
      std::vector<Scalar> pre;
      Scalar acc = f.one();
      int k = b;
      do {
        done.insert(k);
        cyc.push_back(k);
        pre.push_back(acc);
        acc = acc * theta.coefficient(k);
        k = theta.root_image(k);
      } while (k != b);
      int len = static_cast<int>(cyc.size());
      if (zeta.pow(len) != acc) {
        ok = false;
        break;
      }
      for (int j = 0; j < len; ++j) x[g.e(cyc[j])] = zeta.pow(-j) * pre[j];
    }
    if (!ok) continue;
    if (theta.apply(x) != vec_scale(zeta, x)) throw std::logic_error("N-regular witness is not in g(1)");
    if (!g.is_nilpotent(x)) throw std::logic_error("N-regular witness is not nilpotent");
    std::vector<Vec> all;
    for (int b = 0; b < g.dim(); ++b) all.push_back(g.basis_vector(b));
    int cd = g.centralizer_dim(x, all, false);
    if (cd != g.rank()) continue;
    out.n_regular = true;
    out.witness = x;
    out.centralizer_dim = cd;
    return out;
  }
  return out;
}

// ---------------------------------------------------------------- labels

std::string group_name(const std::string& label) {
  if (label.empty()) throw std::invalid_argument("empty subsystem label");
  bool tilde = label.rfind("Ã", 0) == 0;
  std::string base = tilde ? "A" + label.substr(std::string("Ã").size()) : label;
  char t = base[0];
  int n = std::stoi(base.substr(1));
  std::string g;
  switch (t) {
    case 'A': g = "SL(" + std::to_string(n + 1) + ")"; break;
    case 'B': g = "Spin(" + std::to_string(2 * n + 1) + ")"; break;
    case 'C': g = "Sp(" + std::to_string(2 * n) + ")"; break;
    case 'D': g = "Spin(" + std::to_string(2 * n) + ")"; break;
    case 'G': g = "G2"; break;
    case 'F': g = "F4"; break;
    default: throw std::invalid_argument("unknown subsystem label " + label);
  }
  return tilde ? "short " + g : g;
}

std::string signed_cycle_type(const WeylGroup& W, int w, const std::vector<int>& sub) {
  const RootSystem& rs = W.root_system();
  auto factors = subsystem_factors(rs, sub);
  if (factors.size() != 1 || (factors[0].base != "B" && factors[0].base != "C"))
    throw std::invalid_argument("signed cycle type needs a B_n or C_n subsystem");
  int n = factors[0].rank;
  // coordinate roots: the 2n roots of the minority length
  int nlong = 0;
  for (int k : sub) nlong += rs.is_long(k);
  bool coord_long = nlong == 2 * n;
  std::vector<int> coords;
  for (int k : sub)
    if (rs.is_positive(k) && rs.is_long(k) == coord_long) coords.push_back(k);
  if (static_cast<int>(coords.size()) != n) throw std::logic_error("unexpected coordinate roots");
  std::set<int> seen;
  std::vector<std::string> parts;
  for (int e : coords) {
    if (seen.count(e)) continue;
    int len = 0;
    int k = e;
    do {
      int pk = rs.is_positive(k) ? k : rs.neg(k);
      seen.insert(pk);
      k = W.act(w, k);
      ++len;
    } while (k != e && k != rs.neg(e));
    bool positive = k == e;
    parts.push_back(std::string(positive ? "positive " : "negative ") + std::to_string(len) + "-cycle");
  }
  std::vector<std::string> nontrivial;
  for (const auto& p : parts)
    if (p != "positive 1-cycle") nontrivial.push_back(p);
  return nontrivial.empty() ? "identity" : join_factors(nontrivial, ", ");
}

// ---------------------------------------------------------------- fields

FieldPtr FieldConfig::field_for(int m, std::string* note) const {
  if (p == 0) return Field::cyclotomic(m);
  if ((p - 1) % m == 0) return Field::prime(m, p);
  if (note) *note = "order " + std::to_string(m) + " does not divide p-1; cyclotomic field used";
  return Field::cyclotomic(m);
}

// ---------------------------------------------------------------- classifier

namespace {

std::string normalize_type(const std::string& t) {
  std::string s;
  for (char c : t) s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (s == "G2" || s == "F4") return s;
  if (s == "D4-3" || s == "D4^(3)" || s == "D43" || s == "3D4") return "D4-3";
  throw std::invalid_argument("unknown type '" + t + "' (expected g2, f4 or d4-3)");
}

const std::vector<std::string>& presentation_order(const std::string& label) {
  static const std::map<std::string, std::vector<std::string>> orders = {
      {"G2", {"111", "011", "010"}},
      {"F4",
       {"11111", "11101", "10101", "01010", "11100", "10100", "01001", "00100", "11000", "10001", "01000", "00001"}},
      {"D4-3", {"111", "101", "010", "001", "100"}},
  };
  return orders.at(label);
}

/// Kac coordinates of the point with <alpha_i, lambda> = x_i after reduction to
/// the fundamental alcove.
std::vector<int> kac_point(const RootSystem& rs, std::vector<Rat> x, int m) {
  int r = rs.rank();
  int hi = rs.highest_root();
  auto hpair = [&](const std::vector<Rat>& v) {
    Rat s = 0;
    for (int i = 0; i < r; ++i) s += Rat(rs.root(hi)[i]) * v[i];
    return s;
  };
  for (int guard = 0; guard < 10000; ++guard) {
    bool changed = false;
    for (int j = 0; j < r; ++j)
      if (x[j] < 0) {
        Rat xj = x[j];
        for (int i = 0; i < r; ++i) x[i] -= Rat(rs.cartan()[i][j]) * xj;
        changed = true;
      }
    Rat hv = hpair(x);
    if (hv > 1) {
      Rat shift = hv - 1;
      for (int i = 0; i < r; ++i) x[i] -= shift * Rat(rs.pairing(rs.simple(i), hi));
      changed = true;
    }
    if (!changed) {
      std::vector<int> n(r + 1);
      Rat n0 = Rat(m) * (1 - hpair(x));
      if (n0.get_den() != 1) throw std::logic_error("Kac point is not of order dividing m");
      n[0] = static_cast<int>(n0.get_num().get_si());
      for (int i = 0; i < r; ++i) {
        Rat v = Rat(m) * x[i];
        if (v.get_den() != 1) throw std::logic_error("Kac point is not of order dividing m");
        n[i + 1] = static_cast<int>(v.get_num().get_si());
      }
      return n;
    }
  }
  throw std::logic_error("alcove reduction did not terminate");
}

bool in_sorted(const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); }

/// Eigenspace basis of w for zeta_m on t (coroot coordinates).
std::vector<Vec> torus_eigenspace(const WeylGroup& W, int w, int m, const Field& f) {
  Mat a = W.matrix(w).to_field(f);
  Scalar z = f.root_of_unity(m);
  for (int i = 0; i < a.rows(); ++i) a(i, i) -= z;
  return kernel_over_field(a);
}

/// Degree of the lowest l(0)-invariant polynomial on l(1) that is nonzero at x.
int lowest_invariant_degree(const LieAlgebra& g, const std::vector<Vec>& l0, const std::vector<Vec>& l1,
                            const Vec& x, int max_degree) {
  const Field& f = g.field();
  int n = static_cast<int>(l1.size());
  auto xc = coords_in_basis(f, l1, x);
  if (!xc) throw std::logic_error("witness is not in l(1)");
  std::vector<Mat> actions;
  for (const auto& y : l0) {
    Mat a(f, n, n);
    for (int j = 0; j < n; ++j) {
      auto c = coords_in_basis(f, l1, g.bracket(y, l1[j]));
      if (!c) throw std::logic_error("l(1) is not an l(0)-module");
      for (int i = 0; i < n; ++i) a(i, j) = (*c)[i];
    }
    actions.push_back(a);
  }
  for (int k = 1; k <= max_degree; ++k) {
    std::vector<std::vector<int>> monos;
    std::vector<int> e(n, 0);
    std::function<void(int, int)> gen = [&](int i, int left) {
      if (i == n - 1) {
        e[i] = left;
        monos.push_back(e);
        return;
      }
      for (int a = left; a >= 0; --a) {
        e[i] = a;
        gen(i + 1, left - a);
      }
    };
    gen(0, k);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < monos.size(); ++i) index[monos[i]] = static_cast<int>(i);
    int nm = static_cast<int>(monos.size());
    Mat big(f, nm * static_cast<int>(actions.size()), nm);
    for (size_t a = 0; a < actions.size(); ++a)
      for (int col = 0; col < nm; ++col) {
        const auto& mono = monos[col];
        for (int i = 0; i < n; ++i) {
          if (mono[i] == 0) continue;
          for (int j = 0; j < n; ++j) {
            // (A v)_i = sum_j A_ij x_j replaces one factor x_i
            if (actions[a](i, j).is_zero()) continue;
            auto t = mono;
            t[i] -= 1;
            t[j] += 1;
            big(static_cast<int>(a) * nm + index.at(t), col) += f.from_int(mono[i]) * actions[a](i, j);
          }
        }
      }
    for (const auto& inv : kernel_over_field(big)) {
      Scalar val = f.zero();
      for (int col = 0; col < nm; ++col) {
        if (inv[col].is_zero()) continue;
        Scalar term = inv[col];
        for (int i = 0; i < n; ++i) term *= (*xc)[i].pow(monos[col][i]);
        val += term;
      }
      if (!val.is_zero()) return k;
    }
  }
  return 0;
}

/// Matrix of w on the coroot lattice of a subsystem (basis: coroots of its base),
/// or nullopt when that lattice is not saturated in Y.
std::optional<IntMat> theta_on_subsystem_coroots(const WeylGroup& W, int w, const std::vector<int>& base) {
  const RootSystem& rs = W.root_system();
  int r = rs.rank();
  int k = static_cast<int>(base.size());
  IntMat B(r, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < r; ++i) B(i, j) = rs.coroot(base[j])[i];
  SmithForm sf = smith_normal_form(B);
  for (int i = 0; i < k; ++i)
    if (abs(sf.S(i, i)) != 1) return std::nullopt;
  auto q = Field::cyclotomic(1);
  std::vector<Vec> cols;
  for (int j = 0; j < k; ++j) {
    Vec v = zero_vec(*q, r);
    for (int i = 0; i < r; ++i) v[i] = q->from_int(B(i, j).get_si());
    cols.push_back(v);
  }
  IntMat mw = W.matrix(w);
  IntMat out(k, k);
  for (int j = 0; j < k; ++j) {
    Vec img = zero_vec(*q, r);
    for (int i = 0; i < r; ++i) {
      Int s = 0;
      for (int t = 0; t < r; ++t) s += mw(i, t) * B(t, j);
      img[i] = q->from_int(s.get_si());
    }
    auto c = coords_in_basis(*q, cols, img);
    if (!c) throw std::logic_error("w does not preserve the subsystem");
    for (int i = 0; i < k; ++i) {
      Rat v = (*c)[i].to_rational();
      if (v.get_den() != 1) throw std::logic_error("w is not integral on the subsystem coroots");
      out(i, j) = v.get_num();
    }
  }
  return out;
}

int restricted_order(const Automorphism& th, const std::vector<int>& torus_idx, const std::vector<int>& roots) {
  for (int k = 1; k <= 1000; ++k) {
    Automorphism p = th.power(k);
    bool id = true;
    for (int b : roots)
      if (p.root_image(b) != b || !p.coefficient(b).is_one()) id = false;
    for (int i : torus_idx)
      for (int j : torus_idx)
        if (p.torus()(i, j) != (i == j ? 1 : 0)) id = false;
    if (id) return k;
  }
  throw std::logic_error("restricted automorphism of unbounded order");
}

}  // namespace

Classifier::Classifier(const std::string& type)
    : label_(normalize_type(type)),
      affine_(label_ == "D4-3" ? affine_diagram("D4", 3) : affine_diagram(label_, 1)),
      weyl_roots_(RootSystem::build(label_ == "D4-3" ? "F4" : label_)),
      alg_roots_(RootSystem::build(label_ == "D4-3" ? "D4" : label_)),
      weyl_(weyl_roots_),
      classes_(carter_classes(weyl_)) {
  weyl_.conjugacy_classes();  // fill the lazy cache before any concurrent use
  if (twisted()) {
    std::vector<int> longs;
    for (int k = 0; k < weyl_roots_.size(); ++k)
      if (weyl_roots_.is_long(k)) longs.push_back(k);
    long_subgroup_ = weyl_.reflection_subgroup(longs);
    std::sort(long_subgroup_.begin(), long_subgroup_.end());
    alg_weyl_.emplace(alg_roots_);
  }
}

std::vector<std::string> Classifier::lift_family(int ci) const {
  if (twisted()) throw std::logic_error("lift families are defined for inner types");
  const RootSystem& rs = weyl_roots_;
  const CarterClass& cc = classes_.at(ci);
  int m = cc.order;
  int r = rs.rank();
  std::set<std::string> fam;
  auto add = [&](const std::vector<Rat>& x) {
    auto n = kac_point(rs, x, m);
    KacDiagram d{affine_, n};
    if (d.order() == m) fam.insert(d.str());
  };
  // regular classes: the principal point rho^vee / m
  auto fd = Field::cyclotomic(m);
  auto cvecs = torus_eigenspace(weyl_, cc.rep, m, *fd);
  bool regular = !cvecs.empty();
  for (int k = 0; k < rs.size() && regular; ++k) {
    bool vanishes = true;
    for (const auto& v : cvecs) {
      Scalar s = fd->zero();
      for (int i = 0; i < r; ++i) s += fd->from_int(rs.pairing(k, rs.simple(i))) * v[i];
      if (!s.is_zero()) vanishes = false;
    }
    if (vanishes) regular = false;
  }
  if (regular) add(std::vector<Rat>(r, Rat(1, m)));
  // Coxeter elements of standard parabolic subgroups
  for (int mask = 1; mask < (1 << r); ++mask) {
    int c = weyl_.identity();
    std::vector<int> I;
    for (int i = 0; i < r; ++i)
      if (mask & (1 << i)) {
        c = weyl_.mul(c, weyl_.reflection(rs.simple(i)));
        I.push_back(i);
      }
    if (weyl_.class_of(c) != weyl_.class_of(cc.rep)) continue;
    // component Coxeter numbers
    std::vector<int> comp(r, -1);
    std::vector<int> hcomp;
    for (int i : I) {
      if (comp[i] >= 0) continue;
      std::vector<int> members{i};
      comp[i] = static_cast<int>(hcomp.size());
      for (size_t q = 0; q < members.size(); ++q)
        for (int j : I)
          if (comp[j] < 0 && rs.cartan()[members[q]][j] != 0) {
            comp[j] = comp[i];
            members.push_back(j);
          }
      std::string t = subsystem_type(rs, members);
      if (t.rfind("Ã", 0) == 0) t = "A" + t.substr(std::string("Ã").size());
      hcomp.push_back(coxeter_number(t));
    }
    std::vector<int> free;
    for (int j = 0; j < r; ++j)
      if (!(mask & (1 << j))) free.push_back(j);
    std::vector<int> k(free.size(), 0);
    while (true) {
      std::vector<Rat> x(r);
      for (int i : I) x[i] = Rat(1, hcomp[comp[i]]);
      for (size_t q = 0; q < free.size(); ++q) x[free[q]] = Rat(k[q], m);
      for (auto& v : x) v.canonicalize();
      add(x);
      size_t q = 0;
      while (q < k.size() && ++k[q] == m) k[q++] = 0;
      if (q == k.size()) break;
    }
  }
  return {fam.begin(), fam.end()};
}

int Classifier::match_class(const KacDiagram& d, int rank) const {
  int m = d.order();
  std::vector<int> cand;
  for (size_t i = 0; i < classes_.size(); ++i) {
    const CarterClass& c = classes_[i];
    if (c.order != m || weyl_.eigenvalue_multiplicity(c.rep, m) != rank) continue;
    if (twisted()) {
      bool in1 = in_sorted(long_subgroup_, c.rep);
      bool in2 = in_sorted(long_subgroup_, weyl_.mul(c.rep, c.rep));
      if (in1 || in2) continue;
    }
    cand.push_back(static_cast<int>(i));
  }
  std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
    if (classes_[a].fixed_dim != classes_[b].fixed_dim) return classes_[a].fixed_dim > classes_[b].fixed_dim;
    return classes_[a].phi1.size() < classes_[b].phi1.size();
  });
  if (cand.empty()) throw std::runtime_error("no Weyl class of order " + std::to_string(m) + " and rank " +
                                             std::to_string(rank) + " for diagram " + d.str());
  if (twisted()) return cand.front();
  for (int ci : cand) {
    auto fam = lift_family(ci);
    if (std::find(fam.begin(), fam.end(), d.str()) != fam.end()) return ci;
  }
  throw std::runtime_error("no Weyl class lifts to diagram " + d.str());
}

int Classifier::weyl_side_rank(const KacDiagram& d) const {
  int m = d.order();
  int best = 0;
  bool any = false;
  for (size_t i = 0; i < classes_.size(); ++i) {
    const CarterClass& c = classes_[i];
    int mult = weyl_.eigenvalue_multiplicity(c.rep, m);
    if (c.order != m || mult == 0) continue;
    if (twisted()) {
      if (in_sorted(long_subgroup_, c.rep) || in_sorted(long_subgroup_, weyl_.mul(c.rep, c.rep))) continue;
      any = true;
      continue;
    }
    auto fam = lift_family(static_cast<int>(i));
    if (std::find(fam.begin(), fam.end(), d.str()) != fam.end()) best = std::max(best, mult);
  }
  return any ? -1 : best;
}

Dossier Classifier::analyze(const KacDiagram& d, const FieldConfig& fc, std::uint64_t seed) const {
  Dossier out;
  out.type = label_ == "D4-3" ? "D4^(3)" : label_;
  out.kac = d.str();
  out.order = d.order();
  out.primitive = d.primitive();
  if (!out.primitive) throw std::invalid_argument("diagram " + d.str() + " is not primitive");
  std::string note;
  FieldPtr f = fc.field_for(out.order, &note);
  out.field = f->describe();
  LieAlgebra g(alg_roots_, f);
  Automorphism th = kac_automorphism(d, g);
  if (th.order() != out.order) throw std::logic_error("Kac automorphism has the wrong order");
  Grading gr = grading(th, out.order);
  out.dims = gr.dims();
  out.g0_type = fixed_algebra_type(th).str();
  out.orbit = rank_via_generic_orbit(g, gr, seed);
  if (out.orbit.rank == 0) {
    ZeroRankCertificate z;
    z.dim_g0 = out.orbit.dim_g0;
    z.dim_g1 = out.orbit.dim_g1;
    z.centralizer = out.orbit.min_centralizer;
    auto wit = sparse_orbit_witness(g, gr, z.centralizer);
    z.witness = g.element_str(wit ? *wit : out.orbit.sample);
    out.zero_rank = z;
  } else {
    ClassificationRow row = build_row(d, out, fc);
    if (!note.empty()) row.note = note;
    out.row = row;
  }
  return out;
}

ClassificationRow Classifier::build_row(const KacDiagram& d, const Dossier& dos, const FieldConfig& fc) const {
  ClassificationRow row;
  row.type = dos.type;
  row.kac = dos.kac;
  row.order = dos.order;
  row.rank = dos.orbit.rank;
  row.g0_type = dos.g0_type;
  row.dims = dos.dims;
  row.field = dos.field;
  int m = row.order;
  int ci = match_class(d, row.rank);
  const CarterClass& cc = classes_[ci];
  row.carter = cc.label;
  int w = cc.rep;
  row.rank_weyl = rank_via_weyl(weyl_, w, m);
  if (row.rank_weyl != row.rank)
    throw std::runtime_error("rank methods disagree for " + row.kac + ": " + std::to_string(row.rank) + " vs " +
                             std::to_string(row.rank_weyl));
  FieldPtr f = fc.field_for(m);
  LieAlgebra weyl_alg(weyl_roots_, f);
  CartanSubspace c = cartan_subspace(weyl_, w, m, weyl_alg);
  row.cartan_dim = c.dim();
  if (row.cartan_dim != row.rank) throw std::runtime_error("Cartan subspace dimension differs from the rank");
  row.little_weyl = little_weyl(weyl_, w, c, weyl_alg, twisted() ? &long_subgroup_ : nullptr);
  // W(Phi2) acts trivially on c
  auto phi2_group = weyl_.reflection_subgroup(cc.phi2);
  for (const auto& mat : restrict_to_cartan(weyl_, phi2_group, c, weyl_alg))
    if (!mat.is_identity()) row.w_phi2_trivial = false;

  LieAlgebra kac_alg(alg_roots_, f);
  Automorphism theta = kac_automorphism(d, kac_alg);
  if (twisted())
    row.kw = kw_twisted(row, w, kac_alg, theta, m);
  else
    row.kw = kw_inner(row, w, c, weyl_alg, theta, m);
  bool maximal = row.rank * euler_phi(m) == weyl_roots_.rank();
  bool sat = saturation_criterion(torus_decomposition(weyl_.matrix(w), m));
  bool on_l = row.kw.l_certified && row.kw.little_weyl_match;
  row.kw.criterion = maximal || sat || on_l;
  if (maximal) row.kw.notes.push_back("maximal rank");
  if (sat) row.kw.notes.push_back("saturation criterion holds");
  if (on_l) row.kw.notes.push_back("W-bar realized inside l");

  auto ss = semisimple_witness(kac_alg, grading(theta, m));
  row.semisimple_witness = ss ? kac_alg.element_str(*ss) : "";
  return row;
}

KwEvidence Classifier::kw_inner(const ClassificationRow& row, int w, const CartanSubspace& c, const LieAlgebra& alg,
                                const Automorphism& theta_kac, int m) const {
  const RootSystem& rs = weyl_roots_;
  std::set<std::string> wc_keys;
  for (const auto& mat : row.little_weyl.matrices) wc_keys.insert(mat.key());
  std::vector<int> g_degrees = molien_degrees(restrict_to_cartan(
      weyl_, all_indices(weyl_.order()), CartanSubspace{[&] {
        std::vector<Vec> b;
        for (int i = 0; i < alg.rank(); ++i) b.push_back(alg.basis_vector(alg.h(i)));
        return b;
      }()},
      alg));
  auto divisible = [&](const std::vector<int>& degs) {
    std::vector<int> out;
    for (int d : degs)
      if (d % m == 0) out.push_back(d);
    return out;
  };

  // reduction to L = t + (root spaces of sub) with theta = (Tits lift of u)^power
  auto try_levi = [&](int u, int power, const std::vector<int>& sub, const std::string& theta_label,
                      KwEvidence& ev) -> bool {
    auto word = subsystem_word(weyl_, u, sub);
    Automorphism th = tits_lift(alg, word).power(power);
    if (!(th.torus() == weyl_.matrix(w))) throw std::logic_error("lift does not act on t as w");
    auto sub_group = weyl_.reflection_subgroup(sub);
    std::sort(sub_group.begin(), sub_group.end());
    auto local = restrict_to_cartan(weyl_, weyl_.centralizer(w, &sub_group), c, alg);
    std::set<std::string> local_keys;
    for (const auto& mat : local) local_keys.insert(mat.key());
    if (local_keys != wc_keys) return false;
    ev.little_weyl_match = true;
    std::set<int> subset(sub.begin(), sub.end());
    ev.stable = true;
    for (int k : sub)
      if (!subset.count(th.root_image(k))) ev.stable = false;
    ev.contains_c = true;
    for (const auto& v : c.basis)
      for (int k = 0; k < rs.size(); ++k)
        if (!v[alg.e(k)].is_zero()) ev.contains_c = false;
    SubGrading sg = sub_grading(th, all_indices(alg.rank()), sub, m);
    bool dims_match = sg.periodic && sg.dims() == kac_form_dims(rs, sub, m);
    if (!dims_match) ev.notes.push_back("grading of the lift on l differs from the Kac form");
    // regular nilpotent of l in l(1) for the Kac form rho_L^vee / m
    Vec e = alg.zero();
    for (int b : subsystem_base(rs, sub)) e[alg.e(b)] = alg.field().one();
    std::vector<Vec> lbasis;
    for (int i = 0; i < alg.rank(); ++i) lbasis.push_back(alg.basis_vector(alg.h(i)));
    for (int k : sub) lbasis.push_back(alg.basis_vector(alg.e(k)));
    bool regular = alg.is_nilpotent(e) && alg.centralizer_dim(e, lbasis, false) == alg.rank();
    ev.n_regular = dims_match && regular;
    auto factors = subsystem_factors(rs, sub);
    std::vector<std::string> names;
    for (const auto& fct : factors) names.push_back(group_name(fct.str()));
    ev.reduction = join_factors(names, "×");
    ev.theta_on_l = theta_label;
    std::vector<int> l_degrees = molien_degrees(restrict_to_cartan(
        weyl_, sub_group, CartanSubspace{[&] {
          std::vector<Vec> b;
          for (int i = 0; i < alg.rank(); ++i) b.push_back(alg.basis_vector(alg.h(i)));
          return b;
        }()},
        alg));
    ev.degree_identity = divisible(l_degrees) == row.little_weyl.degrees;
    auto yl = theta_on_subsystem_coroots(weyl_, w, subsystem_base(rs, sub));
    ev.l_certified = yl && saturation_criterion(torus_decomposition(*yl, m));
    return true;
  };

  KwEvidence ev;
  auto rep_it = std::find_if(classes_.begin(), classes_.end(), [&](const CarterClass& k) { return k.rep == w; });
  if (rep_it == classes_.end()) throw std::logic_error("w is not a class representative");
  const CarterClass& cc = *rep_it;
  // rule 1: w is a Coxeter element of a proper Phi1 that already carries W_c
  if (cc.coxeter_in_phi1 && static_cast<int>(cc.phi1.size()) < rs.size()) {
    KwEvidence e1;
    if (try_levi(w, 1, cc.phi1, "Coxeter", e1)) return e1;
  }
  // rule 2: theta is N-regular on g
  NRegularity nr = n_regular_check(weyl_, theta_kac, m);
  if (nr.n_regular) {
    ev.reduction = "N-reg.";
    ev.stable = true;
    ev.contains_c = true;
    ev.n_regular = true;
    ev.little_weyl_match = true;
    ev.degree_identity = divisible(g_degrees) == row.little_weyl.degrees;
    return ev;
  }
  // rule 3: w is a power of a Coxeter element of an irreducible proper subsystem
  for (int k = 2; k <= 12; ++k)
    for (int u = 0; u < weyl_.order(); ++u) {
      if (weyl_.element_order(u) != k * m || weyl_.power(u, k) != w) continue;
      CarterDecomposition dec = carter_decomposition(weyl_, u);
      if (!dec.coxeter || static_cast<int>(dec.phi1.size()) >= rs.size()) continue;
      if (subsystem_factors(rs, dec.phi1).size() != 1) continue;
      KwEvidence e3;
      std::string label;
      try {
        label = signed_cycle_type(weyl_, w, dec.phi1);
      } catch (const std::invalid_argument&) {
        label = "Coxeter^" + std::to_string(k);
      }
      if (try_levi(u, k, dec.phi1, label, e3)) return e3;
    }
  ev.reduction = "none";
  ev.notes.push_back("no reduction subgroup found");
  return ev;
}

KwEvidence Classifier::kw_twisted(const ClassificationRow& row, int /*w*/, const LieAlgebra& d4,
                                  const Automorphism& theta, int m) const {
  KwEvidence ev;
  NRegularity nr = n_regular_check(*alg_weyl_, theta, m);
  if (nr.n_regular) {
    ev.reduction = "N-reg.";
    ev.stable = true;
    ev.contains_c = true;
    ev.n_regular = true;
    ev.little_weyl_match = true;
    ev.notes.push_back("degree identity applies to inner automorphisms only");
    return ev;
  }
  // sl(2)^3 on the roots orthogonal to the highest root
  const RootSystem& rs = d4.roots();
  std::vector<int> tidx, roots;
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.pairing(rs.highest_root(), rs.simple(i)) == 0) {
      tidx.push_back(i);
      roots.push_back(rs.simple(i));
      roots.push_back(rs.neg(rs.simple(i)));
    }
  ev.reduction = "SL(2)^" + std::to_string(tidx.size());
  std::set<int> rset(roots.begin(), roots.end());
  ev.stable = true;
  for (int k : roots)
    if (!rset.count(theta.root_image(k))) ev.stable = false;
  if (!ev.stable) return ev;
  SubGrading sg = sub_grading(theta, tidx, roots, m);
  if (!sg.periodic) {
    ev.notes.push_back("automorphism does not have order dividing m on l");
    return ev;
  }
  std::vector<Vec> lbasis;
  for (int i : tidx) lbasis.push_back(d4.basis_vector(d4.h(i)));
  for (int k : roots) lbasis.push_back(d4.basis_vector(d4.e(k)));
  const auto& l1 = sg.spaces[1 % m];
  const auto& l0 = sg.spaces[0];
  // semisimple element of l(1) spanning a Cartan subspace
  std::optional<Vec> x;
  Vec epos = d4.zero(), eneg = d4.zero();
  for (const auto& v : l1) {
    bool torus = false, pos = false, neg = false;
    for (int i = 0; i < rs.rank(); ++i) torus = torus || !v[d4.h(i)].is_zero();
    for (int k = 0; k < rs.size(); ++k)
      if (!v[d4.e(k)].is_zero()) (rs.is_positive(k) ? pos : neg) = true;
    if (torus && !x) x = v;
    if (pos && is_zero_vec(epos)) epos = v;
    if (neg && is_zero_vec(eneg)) eneg = v;
  }
  if (!x && !is_zero_vec(epos) && !is_zero_vec(eneg)) x = vec_add(epos, eneg);
  ev.contains_c = x.has_value() && row.rank == 1 && d4.is_semisimple(*x);
  // regular nilpotent of l inside l(1)
  ev.n_regular = !is_zero_vec(epos) && d4.is_nilpotent(epos) &&
                 d4.centralizer_dim(epos, lbasis, false) == static_cast<int>(tidx.size());
  if (ev.contains_c) {
    int d = lowest_invariant_degree(d4, l0, l1, *x, 24);
    ev.little_weyl_match = row.little_weyl.matrices.size() == static_cast<size_t>(d) && row.little_weyl.name ==
                                                                                          "μ" + std::to_string(d);
    ev.notes.push_back("little Weyl group of l is μ" + std::to_string(d));
  }
  IntMat yl(static_cast<int>(tidx.size()), static_cast<int>(tidx.size()));
  for (size_t i = 0; i < tidx.size(); ++i)
    for (size_t j = 0; j < tidx.size(); ++j) yl(i, j) = theta.torus()(tidx[i], tidx[j]);
  ev.l_certified = ev.little_weyl_match || saturation_criterion(torus_decomposition(yl, m));
  int ord = restricted_order(theta, tidx, roots);
  ev.theta_on_l = ord == 6 ? "τ" : ord == 3 ? "τ²" : "order " + std::to_string(ord);
  ev.notes.push_back("degree identity applies to inner automorphisms only");
  return ev;
}

Classification Classifier::classify(const FieldConfig& fc, std::uint64_t seed) const {
  Classification out;
  int maxm = 0;
  for (int a : affine_.marks) maxm += a;
  maxm *= affine_.twist;
  std::vector<KacDiagram> diagrams;
  for (int m = 2; m <= maxm; ++m)
    for (const auto& d : enumerate_diagrams(affine_, m, true)) diagrams.push_back(d);
  // diagrams are independent; results are collected in enumeration order
  std::vector<std::optional<Dossier>> results(diagrams.size());
  std::vector<std::exception_ptr> errors(diagrams.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < diagrams.size(); i = next++) {
      try {
        results[i] = analyze(diagrams[i], fc, seed);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned nthreads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), diagrams.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (size_t i = 0; i < diagrams.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    if (results[i]->row)
      out.rows.push_back(*results[i]->row);
    else
      out.zero_rank.push_back(*results[i]);
  }
  const auto& pres = presentation_order(label_);
  auto pos = [&](const std::string& k) {
    auto it = std::find(pres.begin(), pres.end(), k);
    return it == pres.end() ? static_cast<int>(pres.size()) : static_cast<int>(it - pres.begin());
  };
  std::stable_sort(out.rows.begin(), out.rows.end(), [&](const ClassificationRow& a, const ClassificationRow& b) {
    if (a.order != b.order) return a.order > b.order;
    if (pos(a.kac) != pos(b.kac)) return pos(a.kac) < pos(b.kac);
    if (a.rank != b.rank) return a.rank > b.rank;
    return a.kac > b.kac;
  });
  std::stable_sort(out.zero_rank.begin(), out.zero_rank.end(), [](const Dossier& a, const Dossier& b) {
    if (a.order != b.order) return a.order > b.order;
    return a.kac > b.kac;
  });
  // matching audit: distinct diagrams of the same order never share a class
  std::set<std::pair<int, std::string>> seen;
  for (const auto& r : out.rows)
    if (!seen.insert({r.order, r.carter}).second)
      throw std::logic_error("two diagrams of order " + std::to_string(r.order) + " matched to " + r.carter);
  return out;
}

}  // namespace thetagroup
