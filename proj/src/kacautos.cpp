#include "thetagroup/kacautos.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "thetagroup/weyl.hpp"

namespace thetagroup {

// ---------------------------------------------------------------- diagrams

int KacDiagram::order() const {
  int s = 0;
  for (size_t i = 0; i < coeffs.size(); ++i) s += affine.marks[i] * coeffs[i];
  return affine.twist * s;
}

bool KacDiagram::primitive() const {
  int g = 0;
  for (int c : coeffs) g = std::gcd(g, c);
  return g == 1;
}

bool KacDiagram::zero_one() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0 || c == 1; });
}

std::string KacDiagram::str() const {
  std::string s;
  for (int node : affine.string_nodes) {
    int c = coeffs[node];
    if (c > 9) throw std::domain_error("coefficient too large for the compact notation");
    s += static_cast<char>('0' + c);
  }
  return s;
}

KacDiagram parse_kac_diagram(const AffineDiagram& affine, const std::string& s) {
  if (s.size() != affine.nodes.size())
    throw std::invalid_argument("diagram '" + s + "' needs " + std::to_string(affine.nodes.size()) + " digits");
  KacDiagram d{affine, std::vector<int>(s.size(), 0)};
  for (size_t c = 0; c < s.size(); ++c) {
    if (s[c] < '0' || s[c] > '9') throw std::invalid_argument("diagram '" + s + "' is not a digit string");
    d.coeffs[affine.string_nodes[c]] = s[c] - '0';
  }
  if (d.order() == 0) throw std::invalid_argument("diagram '" + s + "' has all coefficients zero");
  return d;
}

std::vector<KacDiagram> enumerate_diagrams(const AffineDiagram& affine, int m, bool zero_one_only) {
  if (m < 1) throw std::invalid_argument("order must be positive");
  std::vector<KacDiagram> out;
  if (m % affine.twist != 0) return out;
  int target = m / affine.twist;
  int n = static_cast<int>(affine.nodes.size());
  std::set<std::vector<int>> seen;
  std::vector<int> cur(n, 0);
  auto emit = [&]() {
    KacDiagram d{affine, cur};
    if (!d.primitive()) return;
    // canonical representative: lexicographically largest string in the orbit
    KacDiagram best = d;
    for (const auto& p : affine.automorphisms) {
      KacDiagram img{affine, std::vector<int>(n)};
      for (int k = 0; k < n; ++k) img.coeffs[p[k]] = cur[k];
      if (img.str() > best.str()) best = img;
    }
    if (seen.insert(best.coeffs).second) out.push_back(best);
  };
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == n) {
      if (left == 0) emit();
      return;
    }
    int cap = left / affine.marks[k];
    if (zero_one_only) cap = std::min(cap, 1);
    for (int c = cap; c >= 0; --c) {
      cur[k] = c;
      self(self, k + 1, left - c * affine.marks[k]);
    }
    cur[k] = 0;
  };
  rec(rec, 0, target);
  std::sort(out.begin(), out.end(), [](const KacDiagram& a, const KacDiagram& b) { return a.str() > b.str(); });
  return out;
}

// ---------------------------------------------------------------- automorphisms

Automorphism::Automorphism(const LieAlgebra& alg, std::vector<int> perm, std::vector<Scalar> coef, IntMat torus)
    : alg_(&alg), perm_(std::move(perm)), coef_(std::move(coef)), torus_(std::move(torus)) {
  int n = alg.roots().size();
  if (static_cast<int>(perm_.size()) != n || static_cast<int>(coef_.size()) != n ||
      torus_.rows() != alg.rank() || torus_.cols() != alg.rank())
    throw std::invalid_argument("automorphism data does not match the algebra");
}

Automorphism Automorphism::identity(const LieAlgebra& alg) {
  int n = alg.roots().size();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return Automorphism(alg, p, std::vector<Scalar>(n, alg.field().one()), IntMat::identity(alg.rank()));
}

Vec Automorphism::apply(const Vec& x) const {
  const LieAlgebra& g = *alg_;
  const Field& f = g.field();
  Vec out = g.zero();
  int r = g.rank();
  for (int j = 0; j < r; ++j) {
    if (x[j].is_zero()) continue;
    for (int i = 0; i < r; ++i)
      if (torus_(i, j) != 0) out[i].add_mul(f.from_int(torus_(i, j).get_si()), x[j]);
  }
  for (size_t k = 0; k < perm_.size(); ++k) {
    const Scalar& v = x[g.e(static_cast<int>(k))];
    if (!v.is_zero()) out[g.e(perm_[k])].add_mul(coef_[k], v);
  }
  return out;
}

Automorphism Automorphism::compose(const Automorphism& o) const {
  if (o.alg_ != alg_) throw std::invalid_argument("composing automorphisms of different algebras");
  int n = static_cast<int>(perm_.size());
  std::vector<int> p(n);
  std::vector<Scalar> c(n);
  for (int k = 0; k < n; ++k) {
    p[k] = perm_[o.perm_[k]];
    c[k] = o.coef_[k] * coef_[o.perm_[k]];
  }
  return Automorphism(*alg_, p, c, torus_ * o.torus_);
}

Automorphism Automorphism::power(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  Automorphism result = identity(*alg_);
  Automorphism base = *this;
  while (k > 0) {
    if (k & 1) result = result.compose(base);
    base = base.compose(base);
    k >>= 1;
  }
  return result;
}

bool Automorphism::is_identity() const {
  for (size_t k = 0; k < perm_.size(); ++k)
    if (perm_[k] != static_cast<int>(k) || !coef_[k].is_one()) return false;
  return torus_.is_identity();
}

int Automorphism::order(int bound) const {
  Automorphism x = *this;
  for (int k = 1; k <= bound; ++k) {
    if (x.is_identity()) return k;
    x = x.compose(*this);
  }
  throw std::runtime_error("automorphism order exceeds " + std::to_string(bound));
}

bool Automorphism::preserves_bracket() const {
  const LieAlgebra& g = *alg_;
  int d = g.dim();
  std::vector<Vec> img(d);
  for (int b = 0; b < d; ++b) img[b] = apply(g.basis_vector(b));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Vec lhs = g.zero();
      for (auto [b, n] : g.bracket_basis(i, j))
        for (int t = 0; t < d; ++t)
          if (!img[b][t].is_zero()) lhs[t].add_mul(g.field().from_int(n), img[b][t]);
      if (lhs != g.bracket(img[i], img[j])) return false;
    }
  return true;
}

Mat Automorphism::matrix() const {
  const LieAlgebra& g = *alg_;
  Mat m(g.field(), g.dim(), g.dim());
  for (int b = 0; b < g.dim(); ++b) {
    Vec c = apply(g.basis_vector(b));
    for (int i = 0; i < g.dim(); ++i) m(i, b) = c[i];
  }
  return m;
}

namespace {

/// Value of the root lattice homomorphism alpha_i -> n_i on root k.
int root_value(const RootSystem& rs, int k, const std::vector<int>& n) {
  int v = 0;
  for (int i = 0; i < rs.rank(); ++i) v += rs.root(k)[i] * n[i];
  return v;
}

void require_d4(const LieAlgebra& alg) {
  if (alg.roots().type() != "D4") throw std::invalid_argument("triality needs an algebra of type D4");
}

/// Graph automorphism of D4 on simple-root indices (central node 1).
const std::vector<int>& gamma_nodes() {
  static const std::vector<int> g = {2, 1, 3, 0};
  return g;
}

}  // namespace

Automorphism inner_kac_automorphism(const KacDiagram& d, const LieAlgebra& alg) {
  if (d.affine.twist != 1) throw std::invalid_argument("inner Kac automorphism needs an untwisted diagram");
  const RootSystem& rs = alg.roots();
  if (d.affine.base_type != rs.type()) throw std::invalid_argument("diagram and algebra types differ");
  int m = d.order();
  Scalar zeta = alg.field().root_of_unity(m);
  std::vector<int> n(d.coeffs.begin() + 1, d.coeffs.end());
  Automorphism id = Automorphism::identity(alg);
  std::vector<Scalar> coef(rs.size());
  for (int k = 0; k < rs.size(); ++k) coef[k] = zeta.pow(((root_value(rs, k, n) % m) + m) % m);
  return Automorphism(alg, id.root_permutation(), coef, IntMat::identity(rs.rank()));
}

Automorphism triality_gamma(const LieAlgebra& alg) {
  require_d4(alg);
  const RootSystem& rs = alg.roots();
  const Field& f = alg.field();
  const auto& gn = gamma_nodes();
  int N = rs.size(), r = rs.rank();
  auto image = [&](int k) {
    Root v(r, 0);
    for (int i = 0; i < r; ++i) v[gn[i]] = rs.root(k)[i];
    return rs.index_of(v);
  };
  std::vector<int> perm(N);
  for (int k = 0; k < N; ++k) perm[k] = image(k);
  std::vector<Scalar> coef(N);
  // simple roots and their negatives map with coefficient 1; others follow from
  // e_beta = [e_{alpha_i}, e_{beta - alpha_i}] / N_{alpha_i, beta - alpha_i}
  std::vector<int> order(rs.num_positive());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return rs.height(a) < rs.height(b); });
  for (int k : order)
    for (int sign = 0; sign < 2; ++sign) {
      int kk = sign ? rs.neg(k) : k;
      if (rs.height(k) == 1) {
        coef[kk] = f.one();
        continue;
      }
      for (int i = 0; i < r; ++i) {
        int a = sign ? rs.neg(rs.simple(i)) : rs.simple(i);
        Root rest = rs.root(kk);
        for (int j = 0; j < r; ++j) rest[j] -= rs.root(a)[j];
        int b = rs.index_of(rest);
        if (b < 0) continue;
        int n0 = alg.structure_constant(a, b);
        int n1 = alg.structure_constant(perm[a], perm[b]);
        coef[kk] = coef[b] * f.from_int(n1) * f.from_int(n0).inverse();
        break;
      }
    }
  IntMat torus(r, r);
  for (int i = 0; i < r; ++i) torus(gn[i], i) = 1;
  return Automorphism(alg, perm, coef, torus);
}

Automorphism twisted_kac_automorphism(const KacDiagram& d, const LieAlgebra& alg) {
  require_d4(alg);
  if (d.affine.twist != 3) throw std::invalid_argument("twisted Kac automorphism needs a D4^(3) diagram");
  int m = d.order();
  Scalar zeta = alg.field().root_of_unity(m);
  const RootSystem& rs = alg.roots();
  // alpha_1, alpha_3, alpha_4 take zeta^{n_1}; alpha_2 takes zeta^{n_2}
  std::vector<int> n(4, 0);
  for (size_t c = 1; c < d.affine.node_classes.size(); ++c)
    for (int i : d.affine.node_classes[c]) n[i] = d.coeffs[c];
  Automorphism gamma = triality_gamma(alg);
  std::vector<Scalar> coef(rs.size());
  for (int k = 0; k < rs.size(); ++k) coef[k] = zeta.pow(((root_value(rs, k, n) % m) + m) % m);
  Automorphism t(alg, Automorphism::identity(alg).root_permutation(), coef, IntMat::identity(4));
  return t.compose(gamma);
}

Automorphism kac_automorphism(const KacDiagram& d, const LieAlgebra& alg) {
  if (d.affine.twist == 1) return inner_kac_automorphism(d, alg);
  return twisted_kac_automorphism(d, alg);
}

std::array<Vec, 3> twisted_beta0_triple(const LieAlgebra& alg, const Scalar& sigma) {
  require_d4(alg);
  const RootSystem& rs = alg.roots();
  Automorphism g = triality_gamma(alg);
  Automorphism g2 = g.compose(g);
  int abar = rs.index_of(Root{1, 1, 1, 0});
  Vec em = alg.basis_vector(alg.e(rs.neg(abar)));
  Vec ep = alg.basis_vector(alg.e(abar));
  Scalar si = sigma.inverse();
  Vec e = vec_add(em, vec_add(vec_scale(si, g.apply(em)), vec_scale(sigma, g2.apply(em))));
  Vec f = vec_add(ep, vec_add(vec_scale(sigma, g.apply(ep)), vec_scale(si, g2.apply(ep))));
  return {e, f, alg.bracket(e, f)};
}

// ---------------------------------------------------------------- gradings

std::vector<int> Grading::dims() const {
  std::vector<int> d;
  for (const auto& s : spaces) d.push_back(static_cast<int>(s.size()));
  return d;
}

namespace {

struct RootCycle {
  std::vector<int> roots;
  std::vector<Scalar> prefix;  // theta^j e_{roots[0]} = prefix[j] e_{roots[j]}
  Scalar total;                // theta^k e_{roots[0]} = total e_{roots[0]}
};

std::vector<RootCycle> root_cycles(const Automorphism& th) {
  const LieAlgebra& g = th.algebra();
  int n = g.roots().size();
  std::vector<bool> seen(n, false);
  std::vector<RootCycle> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    RootCycle c;
    Scalar acc = g.field().one();
    int k = s;
    do {
      seen[k] = true;
      c.roots.push_back(k);
      c.prefix.push_back(acc);
      acc = acc * th.coefficient(k);
      k = th.root_image(k);
    } while (k != s);
    c.total = acc;
    out.push_back(std::move(c));
  }
  return out;
}

Mat int_to_field(const IntMat& a, const Field& f) { return a.to_field(f); }

}  // namespace

Grading grading(const Automorphism& theta, int m) {
  if (m < 1) throw std::invalid_argument("grading order must be positive");
  if (!theta.power(m).is_identity()) throw std::invalid_argument("automorphism does not have order dividing m");
  const LieAlgebra& g = theta.algebra();
  const Field& f = g.field();
  Scalar zeta = f.root_of_unity(m);
  Grading gr;
  gr.m = m;
  gr.spaces.assign(m, {});
  std::vector<Scalar> zp(m);
  for (int i = 0; i < m; ++i) zp[i] = zeta.pow(i);
  for (const auto& c : root_cycles(theta)) {
    int k = static_cast<int>(c.roots.size());
    for (int i = 0; i < m; ++i) {
      if (zp[(static_cast<long long>(i) * k) % m] != c.total) continue;
      Vec v = g.zero();
      for (int j = 0; j < k; ++j) {
        int e = static_cast<int>((static_cast<long long>(m - i) * j) % m);
        v[g.e(c.roots[j])] = zp[e] * c.prefix[j];
      }
      gr.spaces[i].push_back(std::move(v));
    }
  }
  Mat t = int_to_field(theta.torus(), f);
  int r = g.rank();
  for (int i = 0; i < m; ++i) {
    Mat a = t;
    for (int j = 0; j < r; ++j) a(j, j) -= zp[i];
    for (const auto& kv : kernel_over_field(a)) {
      Vec v = g.zero();
      for (int j = 0; j < r; ++j) v[g.h(j)] = kv[j];
      gr.spaces[i].push_back(std::move(v));
    }
  }
  int total = 0;
  for (const auto& s : gr.spaces) total += static_cast<int>(s.size());
  if (total != g.dim()) throw std::logic_error("eigenspaces do not span the algebra");
  return gr;
}

bool check_grading_compatibility(const Grading& gr, const Automorphism& theta) {
  const LieAlgebra& g = theta.algebra();
  Scalar zeta = g.field().root_of_unity(gr.m);
  for (int i = 0; i < gr.m; ++i)
    for (int j = i; j < gr.m; ++j) {
      Scalar ev = zeta.pow((i + j) % gr.m);
      for (const auto& u : gr.spaces[i])
        for (const auto& v : gr.spaces[j]) {
          Vec w = g.bracket(u, v);
          if (is_zero_vec(w)) continue;
          if (theta.apply(w) != vec_scale(ev, w)) return false;
        }
    }
  return true;
}

// ---------------------------------------------------------------- fixed algebra

std::string FixedAlgebraType::str() const {
  std::string s = semisimple;
  if (center_dim > 0) {
    if (s == "1") return center_dim == 1 ? "T1" : "T" + std::to_string(center_dim);
    s += center_dim == 1 ? "+T1" : "+T" + std::to_string(center_dim);
  }
  return s;
}

namespace {

using RatMat = std::vector<std::vector<Rat>>;

RatMat rat_inverse(RatMat a) {
  int n = static_cast<int>(a.size());
  RatMat inv(n, std::vector<Rat>(n, 0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::logic_error("singular form on the fixed torus");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rat s = 1 / a[c][c];
    for (int j = 0; j < n; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat fct = a[i][c];
      for (int j = 0; j < n; ++j) {
        a[i][j] -= fct * a[c][j];
        inv[i][j] -= fct * inv[c][j];
      }
    }
  }
  return inv;
}

int rat_rank(std::vector<std::vector<Rat>> rows) {
  int rank = 0;
  int ncols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < ncols && rank < static_cast<int>(rows.size()); ++c) {
    int p = rank;
    while (p < static_cast<int>(rows.size()) && rows[p][c] == 0) ++p;
    if (p == static_cast<int>(rows.size())) continue;
    std::swap(rows[p], rows[rank]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == rank || rows[i][c] == 0) continue;
      Rat fct = rows[i][c] / rows[rank][c];
      for (int j = 0; j < ncols; ++j) rows[i][j] -= fct * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

FixedAlgebraType fixed_algebra_type(const Automorphism& theta) {
  const LieAlgebra& g = theta.algebra();
  const RootSystem& rs = g.roots();
  int r = rs.rank();
  auto cycles = root_cycles(theta);
  FixedAlgebraType out;
  if (theta.torus().is_identity()) {
    std::vector<int> roots;
    for (const auto& c : cycles)
      if (c.total.is_one()) roots.push_back(c.roots[0]);
    out.semisimple = subsystem_type(rs, roots);
    int ss_rank = 0;
    for (const auto& f : subsystem_factors(rs, roots)) ss_rank += f.rank;
    out.center_dim = r - ss_rank;
    return out;
  }
  // restricted roots on h0 = t^theta
  IntMat tm = theta.torus() - IntMat::identity(r);
  IntMat h0 = integer_kernel(tm);
  int k = h0.cols();
  auto restrict_root = [&](int root) {
    std::vector<Rat> w(k, 0);
    for (int t = 0; t < k; ++t)
      for (int i = 0; i < r; ++i) w[t] += Rat(h0(i, t).get_si() * rs.pairing(root, rs.simple(i)));
    return w;
  };
  // W-invariant form on coroot coordinates, restricted to h0
  RatMat gram(k, std::vector<Rat>(k, 0));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          Rat kij(2 * rs.cartan()[i][j], rs.norm(rs.simple(i)));
          kij.canonicalize();
          gram[a][b] += Rat(h0(i, a).get_si()) * kij * Rat(h0(j, b).get_si());
        }
  RatMat ginv = rat_inverse(gram);
  auto form = [&](const std::vector<Rat>& x, const std::vector<Rat>& y) {
    Rat s = 0;
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) s += x[a] * ginv[a][b] * y[b];
    return s;
  };
  Rat global_max = 0;
  for (int root = 0; root < rs.size(); ++root) {
    auto w = restrict_root(root);
    global_max = std::max(global_max, form(w, w));
  }
  std::vector<std::vector<Rat>> weights;
  for (const auto& c : cycles) {
    if (!c.total.is_one()) continue;
    auto w = restrict_root(c.roots[0]);
    if (std::all_of(w.begin(), w.end(), [](const Rat& x) { return x == 0; }))
      throw std::logic_error("fixed torus is not a Cartan subalgebra of g(0)");
    if (std::find(weights.begin(), weights.end(), w) != weights.end())
      throw std::logic_error("restricted root spaces of g(0) are not one-dimensional");
    weights.push_back(w);
  }
  int n = static_cast<int>(weights.size());
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v)
        if (comp[v] < 0 && form(weights[u], weights[v]) != 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }
  std::vector<SubsystemFactor> factors;
  int ss_rank = 0;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<std::vector<Rat>> members;
    Rat cmax = 0;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) {
        members.push_back(weights[i]);
        cmax = std::max(cmax, form(weights[i], weights[i]));
      }
    int nlong = 0, nshort = 0;
    for (const auto& w : members) {
      if (form(w, w) == global_max) ++nlong;
      else ++nshort;
    }
    int rank = rat_rank(members);
    ss_rank += rank;
    int size = static_cast<int>(members.size());
    if (nlong > 0 && nshort > 0) {
      factors.push_back(classify_component(size, rank, nlong, nshort));
    } else {
      SubsystemFactor f = classify_component(size, rank, size, 0);
      f.tilde = cmax < global_max;
      factors.push_back(f);
    }
  }
  out.semisimple = factors_label(factors);
  out.center_dim = k - ss_rank;
  return out;
}

// ---------------------------------------------------------------- tori

int TorusModel::rank_of(int d) const {
  for (size_t i = 0; i < divisors.size(); ++i)
    if (divisors[i] == d) return lattices[i].cols();
  return 0;
}

TorusModel torus_decomposition(const IntMat& theta_star, int m) {
  int r = theta_star.rows();
  IntPoly xm(m + 1, 0);
  xm[0] = -1;
  xm[m] = 1;
  if (!(poly_eval(xm, theta_star) == IntMat(r, r)))
    throw std::invalid_argument("theta* does not have order dividing m");
  TorusModel tm;
  tm.theta = theta_star;
  tm.m = m;
  int total = 0;
  for (int d : divisors(m)) {
    IntMat k = integer_kernel(poly_eval(cyclotomic_poly(d), theta_star));
    tm.divisors.push_back(d);
    tm.lattices.push_back(k);
    total += k.cols();
  }
  if (total != r) throw std::logic_error("torus pieces do not add up to the rank");
  return tm;
}

bool saturation_criterion(const TorusModel& tm) {
  int r = tm.theta.rows();
  int fixed_index = -1;
  for (size_t i = 0; i < tm.divisors.size(); ++i)
    if (tm.divisors[i] == 1) fixed_index = static_cast<int>(i);
  const IntMat& fixed = tm.lattices.at(fixed_index);
  if (fixed.cols() == 0) return true;
  // Y' = Y meet (sum of the other pieces) = ker(1 + t + ... + t^{m-1})
  IntPoly q(tm.m, 1);
  IntMat other = integer_kernel(poly_eval(q, tm.theta));
  int b = other.cols();
  IntMat proj;  // rows mapping Y onto Y / Y'
  if (b == 0) {
    proj = IntMat::identity(r);
  } else {
    SmithForm sf = smith_normal_form(other);
    for (int i = 0; i < b; ++i)
      if (abs(sf.S(i, i)) != 1) throw std::logic_error("kernel lattice is not saturated");
    proj = IntMat(r - b, r);
    for (int i = b; i < r; ++i)
      for (int j = 0; j < r; ++j) proj(i - b, j) = sf.U(i, j);
  }
  for (int c = 0; c < fixed.cols(); ++c)
    for (int i = 0; i < proj.rows(); ++i) {
      Int s = 0;
      for (int j = 0; j < r; ++j) s += proj(i, j) * fixed(j, c);
      if (s % tm.m != 0) return false;
    }
  return true;
}

// ---------------------------------------------------------------- counting

Int torus_elements_of_order(int rank, int m) {
  Int total;
  mpz_pow_ui(total.get_mpz_t(), Int(m).get_mpz_t(), rank);
  for (int d : divisors(m))
    if (d != m) total -= torus_elements_of_order(rank, d);
  return total;
}

CountingResult counting_check(const AffineDiagram& affine, int m) {
  if (affine.twist != 1) throw std::invalid_argument("counting check is for untwisted diagrams");
  RootSystem rs = RootSystem::build(affine.base_type);
  IntMat cm(rs.rank(), rs.rank());
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j) cm(i, j) = rs.cartan()[i][j];
  if (abs(determinant(cm)) != 1)
    throw std::invalid_argument("counting check needs coweight lattice = coroot lattice");
  WeylGroup w(rs);
  CountingResult res;
  res.lhs = 0;
  for (const auto& d : enumerate_diagrams(affine, m, false)) {
    std::vector<int> n(d.coeffs.begin() + 1, d.coeffs.end());
    int stab = 0;
    for (int e = 0; e < w.order(); ++e) {
      bool fixes = true;
      for (int i = 0; i < rs.rank() && fixes; ++i) {
        int v = root_value(rs, w.act(e, rs.simple(i)), n) - n[i];
        if (((v % m) + m) % m != 0) fixes = false;
      }
      stab += fixes;
    }
    Int orbit = w.order() / stab;
    res.terms.emplace_back(d.str(), orbit);
    res.lhs += orbit;
  }
  res.rhs = torus_elements_of_order(rs.rank(), m);
  res.equal = res.lhs == res.rhs;
  return res;
}

}  // namespace thetagroup
