#include "thetagroup/chevalley.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <climits>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace thetagroup {

// ---------------------------------------------------------------- polynomials over a field

FieldPoly field_poly_trim(FieldPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

namespace {

FieldPoly poly_mod(FieldPoly a, const FieldPoly& b) {
  a = field_poly_trim(a);
  int db = static_cast<int>(b.size()) - 1;
  Scalar inv = b.back().inverse();
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    int da = static_cast<int>(a.size()) - 1;
    Scalar c = a.back() * inv;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= c * b[i];
    a = field_poly_trim(a);
  }
  return a;
}

FieldPoly poly_divexact(FieldPoly a, const FieldPoly& b) {
  a = field_poly_trim(a);
  int db = static_cast<int>(b.size()) - 1;
  int da = static_cast<int>(a.size()) - 1;
  if (da < db) return {};
  const Field& f = *b[0].field();
  FieldPoly q(da - db + 1, f.zero());
  Scalar inv = b.back().inverse();
  for (int k = da; k >= db; --k) {
    Scalar c = a[k] * inv;
    q[k - db] = c;
    if (c.is_zero()) continue;
    for (int i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
  }
  if (!field_poly_trim(a).empty()) throw std::logic_error("inexact polynomial division");
  return q;
}

FieldPoly poly_mul_f(const FieldPoly& a, const FieldPoly& b) {
  if (a.empty() || b.empty()) return {};
  const Field& f = *a[0].field();
  FieldPoly r(a.size() + b.size() - 1, f.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i + j].add_mul(a[i], b[j]);
  }
  return r;
}

FieldPoly monic(FieldPoly p) {
  p = field_poly_trim(p);
  if (p.empty()) return p;
  Scalar inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

}  // namespace

FieldPoly field_poly_gcd(FieldPoly a, FieldPoly b) {
  a = field_poly_trim(a);
  b = field_poly_trim(b);
  while (!b.empty()) {
    FieldPoly r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return monic(a);
}

FieldPoly field_poly_lcm(const FieldPoly& a, const FieldPoly& b) {
  FieldPoly g = field_poly_gcd(a, b);
  return monic(poly_mul_f(poly_divexact(a, g), b));
}

FieldPoly field_poly_derivative(const FieldPoly& p) {
  if (p.size() <= 1) return {};
  const Field& f = *p[0].field();
  FieldPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * f.from_int(static_cast<long long>(i)));
  return field_poly_trim(d);
}

bool field_poly_squarefree(const FieldPoly& p) {
  FieldPoly d = field_poly_derivative(p);
  if (d.empty()) return field_poly_trim(p).size() <= 1;
  return field_poly_gcd(p, d).size() == 1;
}

std::vector<std::pair<int, Scalar>> sparse_of(const Vec& v) {
  std::vector<std::pair<int, Scalar>> s;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(static_cast<int>(i), v[i]);
  return s;
}

// ---------------------------------------------------------------- structure constants

LieAlgebra::LieAlgebra(const RootSystem& rs, FieldPtr field, std::vector<int> sign_flips)
    : rs_(rs), field_(std::move(field)), rank_(rs.rank()) {
  compute_structure_constants(sign_flips);
  int d = dim();
  brk_.assign(static_cast<size_t>(d) * d, {});
  int N = rs_.size();
  for (int i = 0; i < rank_; ++i)
    for (int k = 0; k < N; ++k) {
      int c = rs_.pairing(k, rs_.simple(i));
      if (c == 0) continue;
      brk_[static_cast<size_t>(h(i)) * d + e(k)] = {{e(k), c}};
      brk_[static_cast<size_t>(e(k)) * d + h(i)] = {{e(k), -c}};
    }
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      IntTerms t;
      if (b == rs_.neg(a)) {
        const Root& co = rs_.coroot(a);
        for (int j = 0; j < rank_; ++j)
          if (co[j] != 0) t.emplace_back(h(j), co[j]);
      } else if (n_[a][b] != 0) {
        Root s = rs_.root(a);
        for (int j = 0; j < rank_; ++j) s[j] += rs_.root(b)[j];
        t.emplace_back(e(rs_.index_of(s)), n_[a][b]);
      }
      brk_[static_cast<size_t>(e(a)) * d + e(b)] = t;
    }
}

void LieAlgebra::compute_structure_constants(const std::vector<int>& flips) {
  const RootSystem& rs = rs_;
  int N = rs.size(), npos = rs.num_positive();
  const int unknown = INT_MIN;
  std::vector<std::vector<int>> tab(npos, std::vector<int>(npos, unknown));
  auto sum_index = [&](int a, int b) {
    Root s = rs.root(a);
    for (int j = 0; j < rank_; ++j) s[j] += rs.root(b)[j];
    return rs.index_of(s);
  };
  auto diff_index = [&](int a, int b) {
    Root s = rs.root(a);
    for (int j = 0; j < rank_; ++j) s[j] -= rs.root(b)[j];
    return rs.index_of(s);
  };
  auto scaled = [](int n, int num, int den) {
    if ((n * num) % den != 0) throw std::logic_error("non-integral structure constant");
    return n * num / den;
  };
  std::function<int(int, int)> get = [&](int r, int s) -> int {
    int x = sum_index(r, s);
    if (x < 0) return 0;
    bool pr = rs.is_positive(r), ps = rs.is_positive(s);
    if (pr && ps) {
      if (tab[r][s] == unknown) throw std::logic_error("structure constant requested out of order");
      return tab[r][s];
    }
    if (!pr && !ps) return -get(rs.neg(r), rs.neg(s));
    int u = rs.neg(x);
    // N_{r,s}/(u,u) = N_{s,u}/(r,r) = N_{u,r}/(s,s) for r + s + u = 0
    if (rs.is_positive(u) == ps) return scaled(get(s, u), rs.norm(u), rs.norm(r));
    return scaled(get(u, r), rs.norm(u), rs.norm(s));
  };
  for (int xi = 0; xi < npos; ++xi) {
    std::vector<std::pair<int, int>> pairs;
    for (int r = 0; r < npos; ++r) {
      int s = diff_index(xi, r);
      if (s >= 0 && rs.is_positive(s) && r < s) pairs.emplace_back(r, s);
    }
    if (pairs.empty()) continue;
    auto [a, b] = pairs.front();
    int p = 0;
    for (int c = b;;) {
      c = diff_index(c, a);
      if (c < 0) break;
      ++p;
    }
    tab[a][b] = p + 1;
    tab[b][a] = -(p + 1);
    int n_xi_minus_a = -scaled(tab[a][b], rs.norm(b), rs.norm(xi));
    int ma = rs.neg(a);
    for (size_t k = 1; k < pairs.size(); ++k) {
      auto [r, s] = pairs[k];
      int t = 0;
      int sa = diff_index(s, a);
      if (sa >= 0) t += get(s, ma) * get(sa, r);
      int ra = diff_index(r, a);
      if (ra >= 0) t += get(ma, r) * get(ra, s);
      if (t % n_xi_minus_a != 0) throw std::logic_error("non-integral structure constant");
      int v = -t / n_xi_minus_a;
      tab[r][s] = v;
      tab[s][r] = -v;
    }
  }
  n_.assign(N, std::vector<int>(N, 0));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) n_[a][b] = get(a, b);
  if (!flips.empty()) {
    if (static_cast<int>(flips.size()) != npos) throw std::invalid_argument("one sign per positive root");
    auto eps = [&](int k) { return flips[rs.is_positive(k) ? k : rs.neg(k)]; };
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        int x = sum_index(a, b);
        if (x >= 0) n_[a][b] *= eps(a) * eps(b) * eps(x);
      }
  }
}

bool LieAlgebra::check_structure_constants() const {
  int N = rs_.size();
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      Root s = rs_.root(a);
      for (int j = 0; j < rank_; ++j) s[j] += rs_.root(b)[j];
      int x = rs_.index_of(s);
      if (x < 0) {
        if (n_[a][b] != 0) return false;
        continue;
      }
      if (n_[a][b] != -n_[b][a]) return false;
      if (n_[a][b] != -n_[rs_.neg(a)][rs_.neg(b)]) return false;
      // |N_{a,b}| = p + 1 with p the largest integer such that b - p a is a root
      int p = 0;
      Root c = rs_.root(b);
      for (;;) {
        for (int j = 0; j < rank_; ++j) c[j] -= rs_.root(a)[j];
        if (!rs_.contains(c)) break;
        ++p;
      }
      if (std::abs(n_[a][b]) != p + 1) return false;
    }
  return true;
}

bool LieAlgebra::check_jacobi(std::uint64_t seed, long samples) const {
  int d = dim();
  std::vector<long long> acc(d, 0);
  auto triple = [&](int i, int j, int k) {
    std::fill(acc.begin(), acc.end(), 0);
    // [[i,j],k] + [[j,k],i] + [[k,i],j]
    for (auto [x, y, z] : {std::array<int, 3>{i, j, k}, {j, k, i}, {k, i, j}})
      for (auto [b, c] : bracket_basis(x, y))
        for (auto [b2, c2] : bracket_basis(b, z)) acc[b2] += static_cast<long long>(c) * c2;
    for (long long v : acc)
      if (v != 0) return false;
    return true;
  };
  if (samples < 0) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          if (!triple(i, j, k)) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, d - 1);
  for (long s = 0; s < samples; ++s)
    if (!triple(pick(rng), pick(rng), pick(rng))) return false;
  return true;
}

// ---------------------------------------------------------------- elements

Vec LieAlgebra::basis_vector(int i) const {
  Vec v = zero();
  v[i] = field_->one();
  return v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != static_cast<size_t>(dim()) || y.size() != static_cast<size_t>(dim()))
    throw std::invalid_argument("bracket of elements from different algebras");
  Vec out = zero();
  apply_ad_sparse(sparse_of(x), y, out);
  return out;
}

void LieAlgebra::apply_ad_sparse(const std::vector<std::pair<int, Scalar>>& xs, const Vec& v,
                                 Vec& out) const {
  int d = dim();
  for (int j = 0; j < d; ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& [i, c] : xs) {
      const IntTerms& t = bracket_basis(i, j);
      if (t.empty()) continue;
      Scalar cv = c * v[j];
      for (auto [b, n] : t) out[b].add_mul(cv, field_->from_int(n));
    }
  }
}

Mat LieAlgebra::ad(const Vec& x) const {
  int d = dim();
  Mat m(*field_, d, d);
  auto xs = sparse_of(x);
  for (int j = 0; j < d; ++j)
    for (const auto& [i, c] : xs)
      for (auto [b, n] : bracket_basis(i, j)) m(b, j).add_mul(c, field_->from_int(n));
  return m;
}

IntMat LieAlgebra::ad_int(const IntTerms& x) const {
  int d = dim();
  IntMat m(d, d);
  for (int j = 0; j < d; ++j)
    for (auto [i, c] : x)
      for (auto [b, n] : bracket_basis(i, j)) m(b, j) += c * n;
  return m;
}

bool LieAlgebra::is_nilpotent(const Vec& x) const {
  auto xs = sparse_of(x);
  int d = dim();
  for (int j = 0; j < d; ++j) {
    Vec v = basis_vector(j);
    int steps = 0;
    while (!is_zero_vec(v)) {
      if (++steps > d) return false;
      Vec w = zero();
      apply_ad_sparse(xs, v, w);
      v = std::move(w);
    }
  }
  return true;
}

FieldPoly LieAlgebra::ad_min_poly(const Vec& x) const {
  auto xs = sparse_of(x);
  int d = dim();
  const Field& f = *field_;
  Echelon covered(f, d);
  FieldPoly result{f.one()};
  for (int j = 0; j < d && covered.rank() < d; ++j) {
    Vec start = basis_vector(j);
    if (covered.contains(start)) continue;
    // Krylov chain of `start`, eliminating as we go
    std::vector<Vec> rows;
    std::vector<int> piv;
    std::vector<FieldPoly> comb;
    Vec v = start;
    for (int k = 0;; ++k) {
      covered.add(v);
      Vec w = v;
      FieldPoly c(k + 1, f.zero());
      c[k] = f.one();
      for (size_t i = 0; i < rows.size(); ++i) {
        if (w[piv[i]].is_zero()) continue;
        Scalar fac = -w[piv[i]];
        for (int t = 0; t < d; ++t)
          if (!rows[i][t].is_zero()) w[t].add_mul(fac, rows[i][t]);
        for (size_t t = 0; t < comb[i].size(); ++t)
          if (!comb[i][t].is_zero()) c[t].add_mul(fac, comb[i][t]);
      }
      int p = -1;
      for (int t = 0; t < d; ++t)
        if (!w[t].is_zero()) {
          p = t;
          break;
        }
      if (p < 0) {
        result = field_poly_lcm(result, monic(c));
        break;
      }
      Scalar inv = w[p].inverse();
      for (auto& s : w) s *= inv;
      for (auto& s : c) s *= inv;
      rows.push_back(std::move(w));
      piv.push_back(p);
      comb.push_back(std::move(c));
      Vec nv = zero();
      apply_ad_sparse(xs, v, nv);
      v = std::move(nv);
    }
  }
  return result;
}

bool LieAlgebra::is_semisimple(const Vec& x) const { return field_poly_squarefree(ad_min_poly(x)); }

bool LieAlgebra::is_subalgebra(const std::vector<Vec>& sub) const {
  Echelon span(*field_, dim());
  for (const auto& s : sub) span.add(s);
  for (size_t i = 0; i < sub.size(); ++i)
    for (size_t j = i + 1; j < sub.size(); ++j)
      if (!span.contains(bracket(sub[i], sub[j]))) return false;
  return true;
}

std::vector<Vec> LieAlgebra::centralizer(const Vec& x, const std::vector<Vec>& sub) const {
  int k = static_cast<int>(sub.size());
  if (k == 0) return {};
  std::vector<Vec> cols;
  for (const auto& s : sub) cols.push_back(bracket(x, s));
  Mat m = from_columns(*field_, cols, dim());
  std::vector<Vec> out;
  for (const auto& c : kernel_over_field(m)) {
    Vec y = zero();
    for (int i = 0; i < k; ++i)
      if (!c[i].is_zero()) y = vec_add(y, vec_scale(c[i], sub[i]));
    out.push_back(y);
  }
  return out;
}

int LieAlgebra::centralizer_dim(const Vec& x, const std::vector<Vec>& sub, bool check_closed) const {
  if (check_closed && !is_subalgebra(sub)) throw std::invalid_argument("span is not a subalgebra");
  if (sub.empty()) return 0;
  std::vector<Vec> cols;
  for (const auto& s : sub) cols.push_back(bracket(x, s));
  return span_rank(*field_, sub, dim()) - span_rank(*field_, cols, dim());
}

// ---------------------------------------------------------------- exponentials

Mat LieAlgebra::exp_ad_nilpotent(const Vec& x) const {
  if (!is_nilpotent(x)) throw std::invalid_argument("exp_ad_nilpotent needs a nilpotent element");
  int d = dim();
  Mat a = ad(x);
  Mat result = Mat::identity(*field_, d);
  Mat power = Mat::identity(*field_, d);
  for (int k = 1; k <= d; ++k) {
    power = power * a;
    bool zero = true;
    for (int i = 0; i < d && zero; ++i)
      for (int j = 0; j < d; ++j)
        if (!power(i, j).is_zero()) {
          zero = false;
          break;
        }
    if (zero) break;
    if (field_->is_prime() && k >= field_->characteristic())
      throw std::domain_error("characteristic too small for exp(ad x)");
    Scalar inv = field_->one();
    for (int t = 2; t <= k; ++t) inv *= field_->from_int(t);
    inv = inv.inverse();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (!power(i, j).is_zero()) result(i, j).add_mul(inv, power(i, j));
  }
  return result;
}

namespace {

IntMat exp_int(const IntMat& a) {
  int d = a.rows();
  IntMat result = IntMat::identity(d);
  IntMat power = IntMat::identity(d);
  Int fact = 1;
  for (int k = 1; k <= d; ++k) {
    power = power * a;
    if (power == IntMat(d, d)) break;
    fact *= k;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const Int& v = power(i, j);
        if (v == 0) continue;
        if (v % fact != 0) throw std::logic_error("non-integral exponential");
        result(i, j) += v / fact;
      }
  }
  return result;
}

}  // namespace

IntMat LieAlgebra::exp_ad_root(int root) const { return exp_int(ad_int({{e(root), 1}})); }

IntMat LieAlgebra::reflection_rep(int root) const {
  IntMat x = exp_ad_root(root);
  IntMat y = exp_int(ad_int({{e(rs_.neg(root)), -1}}));
  return x * y * x;
}

// ---------------------------------------------------------------- names

std::string LieAlgebra::basis_name(int b) const {
  if (b < rank_) return "h_" + std::to_string(b + 1);
  int k = root_of(b);
  if (rs_.is_positive(k)) return "e_" + rs_.root_name(k);
  return "f_" + rs_.root_name(rs_.neg(k));
}

std::string LieAlgebra::element_str(const Vec& x) const {
  std::ostringstream os;
  bool first = true;
  for (int b = 0; b < dim(); ++b) {
    if (x[b].is_zero()) continue;
    std::string c = x[b].str();
    bool neg = !c.empty() && c[0] == '-' && x[b].is_rational();
    if (!first) os << (neg ? "-" : "+");
    else if (neg) os << "-";
    first = false;
    if (neg) c = c.substr(1);
    if (c != "1") {
      if (x[b].is_rational()) os << c << "*";
      else os << "(" << c << ")*";
    }
    os << basis_name(b);
  }
  return first ? "0" : os.str();
}

Vec LieAlgebra::parse_element(const std::string& s) const {
  Vec v = zero();
  size_t i = 0;
  auto fail = [&]() { throw std::invalid_argument("cannot parse element: " + s); };
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-' || s[i] == ' ')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    long long coef = 1;
    if (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) {
      size_t j = i;
      while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && s[j] == '*') {
        coef = std::stoll(s.substr(i, j - i));
        i = j + 1;
      }
    }
    if (i + 2 > s.size() || s[i + 1] != '_') fail();
    char kind = s[i];
    i += 2;
    size_t j = i;
    if (j < s.size() && s[j] == '-') ++j;
    while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
    std::string name = s.substr(i, j - i);
    i = j;
    int b;
    if (kind == 'h') {
      int k = std::stoi(name);
      if (k < 1 || k > rank_) fail();
      b = h(k - 1);
    } else if (kind == 'e') {
      b = e(rs_.parse_root(name));
    } else if (kind == 'f') {
      b = e(rs_.neg(rs_.parse_root(name)));
    } else {
      fail();
    }
    v[b] += field_->from_int(sign * coef);
  }
  return v;
}

}  // namespace thetagroup
