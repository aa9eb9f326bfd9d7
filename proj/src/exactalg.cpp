#include "thetagroup/exactalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace thetagroup {

// ---------------------------------------------------------------- polynomials

IntPoly poly_trim(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int poly_degree(const IntPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return poly_trim(r);
}

namespace {

// Division by a monic polynomial; returns quotient, leaves remainder in a.
IntPoly poly_divmod_monic(IntPoly& a, const IntPoly& b) {
  int db = poly_degree(b);
  if (db < 0) throw std::invalid_argument("division by zero polynomial");
  if (b[db] != 1 && b[db] != -1) throw std::invalid_argument("divisor must be monic");
  a = poly_trim(a);
  int da = poly_degree(a);
  if (da < db) return {};
  IntPoly q(da - db + 1, 0);
  for (int k = da; k >= db; --k) {
    if (a[k] == 0) continue;
    Int c = a[k] * b[db];  // b[db] is +-1
    q[k - db] = c;
    for (int i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
  }
  a = poly_trim(a);
  return poly_trim(q);
}

}  // namespace

IntPoly poly_div_exact(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a;
  IntPoly q = poly_divmod_monic(r, b);
  if (!r.empty()) throw std::invalid_argument("polynomial division not exact");
  return q;
}

bool poly_divides(const IntPoly& b, const IntPoly& a) {
  IntPoly r = a;
  poly_divmod_monic(r, b);
  return r.empty();
}

std::string poly_to_string(const IntPoly& p, const std::string& var) {
  int d = poly_degree(p);
  if (d < 0) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = d; k >= 0; --k) {
    if (p[k] == 0) continue;
    Int c = p[k];
    bool neg = c < 0;
    Int a = neg ? Int(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (k == 0 || a != 1) os << a.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

int euler_phi(int n) {
  int r = n;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      while (n % q == 0) n /= q;
      r -= r / q;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int i = 1; i <= n; ++i)
    if (n % i == 0) d.push_back(i);
  return d;
}

IntPoly cyclotomic_poly(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic_poly: d must be positive");
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  IntPoly p(d + 1, 0);
  p[0] = -1;
  p[d] = 1;
  for (int e : divisors(d))
    if (e < d) p = poly_div_exact(p, cyclotomic_poly(e));
  std::lock_guard<std::mutex> lock(mu);
  cache[d] = p;
  return p;
}

int cyclotomic_multiplicity(IntPoly p, int m) {
  IntPoly phi = cyclotomic_poly(m);
  int k = 0;
  p = poly_trim(p);
  while (poly_degree(p) >= poly_degree(phi) && poly_divides(phi, p)) {
    p = poly_div_exact(p, phi);
    ++k;
  }
  return k;
}

// ---------------------------------------------------------------- fields

namespace {

bool is_prime_number(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a %= p;
  if (a < 0) a += p;
  while (e > 0) {
    if (e & 1) r = static_cast<std::int64_t>((__int128)r * a % p);
    a = static_cast<std::int64_t>((__int128)a * a % p);
    e >>= 1;
  }
  return r;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> f;
  for (int q = 2; q <= n; ++q) {
    if (n % q == 0) {
      f.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  return f;
}

}  // namespace

std::int64_t Field::default_prime(int m) {
  for (std::int64_t p = 5;; ++p)
    if (is_prime_number(p) && (p - 1) % m == 0) return p;
}

std::shared_ptr<const Field> Field::cyclotomic(int m) {
  if (m < 1) throw std::invalid_argument("conductor must be positive");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::shared_ptr<Field> f(new Field());
  f->mode_ = Mode::Cyclotomic;
  f->m_ = m;
  f->modulus_ = cyclotomic_poly(m);
  f->deg_ = poly_degree(f->modulus_);
  int d = f->deg_;
  // x^d = -(modulus - x^d)
  std::vector<Int> cur(d, 0);
  for (int i = 0; i < d; ++i) cur[i] = -f->modulus_[i];
  for (int k = d; k <= std::max(2 * d - 2, d); ++k) {
    f->reduction_.push_back(cur);
    // multiply by x
    std::vector<Int> nxt(d, 0);
    Int top = cur[d - 1];
    for (int i = d - 1; i >= 1; --i) nxt[i] = cur[i - 1];
    for (int i = 0; i < d; ++i) nxt[i] += top * (-f->modulus_[i]);
    cur = nxt;
  }
  cache[m] = f;
  return f;
}

std::shared_ptr<const Field> Field::prime(int m, std::int64_t p) {
  if (m < 1) throw std::invalid_argument("conductor must be positive");
  if (p == 0) p = default_prime(m);
  if (!is_prime_number(p) || p <= 3)
    throw std::invalid_argument("characteristic must be a prime greater than 3");
  if ((p - 1) % m != 0)
    throw std::invalid_argument("prime field F_" + std::to_string(p) + " has no primitive " +
                                std::to_string(m) + "-th root of unity");
  static std::mutex mu;
  static std::map<std::pair<int, std::int64_t>, std::shared_ptr<const Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(m, p);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::shared_ptr<Field> f(new Field());
  f->mode_ = Mode::Prime;
  f->m_ = m;
  f->p_ = p;
  f->deg_ = 1;
  auto qs = prime_factors(m);
  for (std::int64_t g = 1; g < p; ++g) {
    if (powmod(g, m, p) != 1) continue;
    bool prim = true;
    for (int q : qs)
      if (powmod(g, m / q, p) == 1) prim = false;
    if (prim) {
      f->zeta_res_ = g;
      break;
    }
  }
  cache[key] = f;
  return f;
}

std::string Field::describe() const {
  if (is_prime()) return "F_" + std::to_string(p_) + " (zeta_" + std::to_string(m_) + " = " +
                         std::to_string(zeta_res_) + ")";
  return "Q(zeta_" + std::to_string(m_) + ")";
}

std::int64_t Field::mod(std::int64_t v) const {
  v %= p_;
  return v < 0 ? v + p_ : v;
}

std::int64_t Field::mulmod(std::int64_t a, std::int64_t b) const {
  return static_cast<std::int64_t>((__int128)a * b % p_);
}

std::int64_t Field::invmod(std::int64_t a) const {
  if (mod(a) == 0) throw std::domain_error("inverse of zero");
  return powmod(a, p_ - 2, p_);
}

void Field::reduce(std::vector<Rat>& prod) const {
  for (int k = static_cast<int>(prod.size()) - 1; k >= deg_; --k) {
    if (prod[k] == 0) continue;
    const auto& red = reduction_[k - deg_];
    for (int i = 0; i < deg_; ++i)
      if (red[i] != 0) prod[i] += prod[k] * red[i];
  }
  prod.resize(deg_);
}

Scalar Field::zero() const {
  Scalar s;
  s.f_ = this;
  if (!is_prime()) s.c_.assign(deg_, Rat(0));
  return s;
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  Scalar s = zero();
  if (is_prime())
    s.r_ = mod(v);
  else
    s.c_[0] = Rat(static_cast<long>(v));
  return s;
}

Scalar Field::from_rat(const Rat& v) const {
  Scalar s = zero();
  if (is_prime()) {
    Int num = v.get_num() % Int(p_);
    Int den = v.get_den() % Int(p_);
    std::int64_t n = mod(num.get_si());
    std::int64_t d = mod(den.get_si());
    s.r_ = mulmod(n, invmod(d));
  } else {
    s.c_[0] = v;
    s.c_[0].canonicalize();
  }
  return s;
}

Scalar Field::zeta(long long k) const {
  k %= m_;
  if (k < 0) k += m_;
  Scalar s = zero();
  if (is_prime()) {
    s.r_ = powmod(zeta_res_, k, p_);
    return s;
  }
  std::vector<Rat> v(std::max<long long>(k + 1, deg_), Rat(0));
  v[k] = 1;
  // reduce degrees >= deg by repeated multiplication
  if (k < deg_) {
    v.resize(deg_);
    s.c_ = v;
    return s;
  }
  // x^k: build by powers of x
  std::vector<Rat> cur(deg_, Rat(0));
  cur[0] = 1;
  for (long long i = 0; i < k; ++i) {
    std::vector<Rat> nxt(deg_ + 1, Rat(0));
    for (int j = 0; j < deg_; ++j) nxt[j + 1] = cur[j];
    reduce(nxt);
    cur = nxt;
  }
  s.c_ = cur;
  return s;
}

Scalar Field::root_of_unity(int d) const {
  if (d <= 0 || m_ % d != 0)
    throw std::invalid_argument("field has no designated primitive " + std::to_string(d) +
                                "-th root");
  return zeta(m_ / d);
}

// ---------------------------------------------------------------- scalars

bool Scalar::is_zero() const {
  if (f_->is_prime()) return r_ == 0;
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  if (f_->is_prime()) return true;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Scalar::is_one() const {
  if (f_->is_prime()) return r_ == 1;
  return is_rational() && c_[0] == 1;
}

Rat Scalar::to_rational() const {
  if (f_->is_prime()) return Rat(static_cast<long>(r_));
  if (!is_rational()) throw std::domain_error("scalar is not rational");
  return c_[0];
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar s = *this;
  s += o;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar s = *this;
  s -= o;
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (f_->is_prime())
    s.r_ = r_ == 0 ? 0 : f_->characteristic() - r_;
  else
    for (auto& c : s.c_) c = -c;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (f_->is_prime()) {
    r_ += o.r_;
    if (r_ >= f_->characteristic()) r_ -= f_->characteristic();
  } else {
    for (size_t i = 0; i < c_.size(); ++i)
      if (o.c_[i] != 0) c_[i] += o.c_[i];
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (f_->is_prime()) {
    r_ -= o.r_;
    if (r_ < 0) r_ += f_->characteristic();
  } else {
    for (size_t i = 0; i < c_.size(); ++i)
      if (o.c_[i] != 0) c_[i] -= o.c_[i];
  }
  return *this;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar s = *this;
  s *= o;
  return s;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (f_->is_prime()) {
    r_ = f_->mulmod(r_, o.r_);
    return *this;
  }
  int d = f_->degree();
  if (o.is_rational()) {
    const Rat& k = o.c_[0];
    for (auto& c : c_) c *= k;
    return *this;
  }
  if (is_rational()) {
    Rat k = c_[0];
    c_ = o.c_;
    for (auto& c : c_) c *= k;
    return *this;
  }
  std::vector<Rat> prod(2 * d - 1, Rat(0));
  for (int i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < d; ++j)
      if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
  }
  f_->reduce(prod);
  c_ = std::move(prod);
  return *this;
}

void Scalar::add_mul(const Scalar& a, const Scalar& b) {
  if (f_->is_prime()) {
    r_ = (r_ + f_->mulmod(a.r_, b.r_)) % f_->characteristic();
    return;
  }
  if (a.is_rational() && b.is_rational()) {
    if (a.c_[0] != 0 && b.c_[0] != 0) c_[0] += a.c_[0] * b.c_[0];
    return;
  }
  *this += a * b;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  Scalar s = *this;
  if (f_->is_prime()) {
    s.r_ = f_->invmod(r_);
    return s;
  }
  if (is_rational()) {
    s.c_[0] = 1 / c_[0];
    return s;
  }
  // Solve (multiplication by this) * y = 1 over Q.
  int d = f_->degree();
  std::vector<std::vector<Rat>> a(d, std::vector<Rat>(d + 1, Rat(0)));
  Scalar basis = f_->one();
  Scalar x = f_->zeta(1);
  for (int j = 0; j < d; ++j) {
    Scalar col = *this * basis;
    for (int i = 0; i < d; ++i) a[i][j] = col.c_[i];
    basis *= x;
  }
  a[0][d] = 1;
  for (int c = 0, r = 0; c < d; ++c, ++r) {
    int piv = r;
    while (piv < d && a[piv][c] == 0) ++piv;
    if (piv == d) throw std::domain_error("singular multiplication matrix");
    std::swap(a[piv], a[r]);
    Rat inv = 1 / a[r][c];
    for (int k = c; k <= d; ++k) a[r][k] *= inv;
    for (int i = 0; i < d; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat fct = a[i][c];
      for (int k = c; k <= d; ++k) a[i][k] -= fct * a[r][k];
    }
  }
  for (int i = 0; i < d; ++i) s.c_[i] = a[i][d];
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r = f_->one();
  Scalar b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (f_ != o.f_) return false;
  if (f_->is_prime()) return r_ == o.r_;
  return c_ == o.c_;
}

std::string Scalar::str() const {
  if (f_->is_prime()) return std::to_string(r_);
  std::ostringstream os;
  bool first = true;
  for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) {
    if (c_[k] == 0) continue;
    Rat c = c_[k];
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? "-" : "+");
    first = false;
    if (k == 0 || a != 1) os << a.get_str();
    if (k >= 1) os << "z";
    if (k >= 2) os << "^" << k;
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------- vectors and matrices

Vec zero_vec(const Field& f, int n) { return Vec(n, f.zero()); }

bool is_zero_vec(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] += b[i];
  return r;
}

Vec vec_scale(const Scalar& s, const Vec& v) {
  Vec r = v;
  for (auto& x : r)
    if (!x.is_zero()) x *= s;
  return r;
}

Mat::Mat(const Field& f, int rows, int cols)
    : f_(&f), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, f.zero()) {}

Mat Mat::identity(const Field& f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  Mat r(*f_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) r(i, j).add_mul(a, b);
      }
    }
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Vec Mat::apply(const Vec& v) const {
  Vec r = zero_vec(*f_, rows_);
  for (int j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero()) r[i].add_mul(a, v[j]);
    }
  }
  return r;
}

Vec Mat::column(int j) const {
  Vec r;
  r.reserve(rows_);
  for (int i = 0; i < rows_; ++i) r.push_back((*this)(i, j));
  return r;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Mat::is_identity() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Scalar& s = (*this)(i, j);
      if (i == j ? !s.is_one() : !s.is_zero()) return false;
    }
  return true;
}

std::string Mat::key() const {
  std::string k;
  for (const auto& s : a_) {
    k += s.str();
    k += ',';
  }
  return k;
}

std::vector<int> rref(Mat& m) {
  const Field& f = m.field();
  int rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  int r = 0;
  std::vector<int> nz;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    nz.clear();
    for (int j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) {
        m(r, j) *= inv;
        nz.push_back(j);
      }
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar fct = -m(i, c);
      for (int j : nz) m(i, j).add_mul(fct, m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  (void)f;
  return pivots;
}

int rank_of(Mat m) { return static_cast<int>(rref(m).size()); }

std::vector<Vec> kernel_over_field(const Mat& m) {
  Mat a = m;
  auto pivots = rref(a);
  const Field& f = m.field();
  std::vector<bool> is_piv(m.cols(), false);
  for (int c : pivots) is_piv[c] = true;
  std::vector<Vec> basis;
  for (int fc = 0; fc < m.cols(); ++fc) {
    if (is_piv[fc]) continue;
    Vec v = zero_vec(f, m.cols());
    v[fc] = f.one();
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(static_cast<int>(r), fc);
    basis.push_back(v);
  }
  return basis;
}

Mat from_columns(const Field& f, const std::vector<Vec>& cols, int n) {
  Mat m(f, n, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < n; ++i) m(i, static_cast<int>(j)) = cols[j][i];
  return m;
}

int span_rank(const Field& f, const std::vector<Vec>& vs, int n) {
  if (vs.empty()) return 0;
  // rows = vectors, so elimination runs over the short dimension when few vectors
  Mat m(f, static_cast<int>(vs.size()), n);
  for (size_t i = 0; i < vs.size(); ++i)
    for (int j = 0; j < n; ++j) m(static_cast<int>(i), j) = vs[i][j];
  return rank_of(m);
}

bool in_span(const Field& f, const std::vector<Vec>& basis, const Vec& v) {
  int n = static_cast<int>(v.size());
  int r0 = span_rank(f, basis, n);
  auto ext = basis;
  ext.push_back(v);
  return span_rank(f, ext, n) == r0;
}

Vec Echelon::reduce(Vec v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& c = v[pivots_[i]];
    if (c.is_zero()) continue;
    Scalar f = -c;
    const Vec& r = rows_[i];
    for (int j = 0; j < n_; ++j)
      if (!r[j].is_zero()) v[j].add_mul(f, r[j]);
  }
  return v;
}

bool Echelon::add(const Vec& v) {
  Vec w = reduce(v);
  int piv = -1;
  for (int j = 0; j < n_; ++j)
    if (!w[j].is_zero()) {
      piv = j;
      break;
    }
  if (piv < 0) return false;
  Scalar inv = w[piv].inverse();
  for (auto& x : w)
    if (!x.is_zero()) x *= inv;
  // keep stored rows reduced at the new pivot
  for (auto& r : rows_) {
    if (r[piv].is_zero()) continue;
    Scalar f = -r[piv];
    for (int j = 0; j < n_; ++j)
      if (!w[j].is_zero()) r[j].add_mul(f, w[j]);
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(piv);
  return true;
}

// ---------------------------------------------------------------- integer matrices

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Int& b = o(k, j);
        if (b != 0) r(i, j) += a * b;
      }
    }
  return r;
}

IntMat IntMat::operator-(const IntMat& o) const {
  IntMat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

bool IntMat::operator==(const IntMat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool IntMat::is_identity() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMat IntMat::transpose() const {
  IntMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Mat IntMat::to_field(const Field& f) const {
  Mat m(f, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Int& v = (*this)(i, j);
      if (v != 0) m(i, j) = f.from_rat(Rat(v));
    }
  return m;
}

namespace {

void swap_rows(IntMat& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMat& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row_a -= q * row_b
void row_axpy(IntMat& m, int a, int b, const Int& q) {
  for (int j = 0; j < m.cols(); ++j)
    if (m(b, j) != 0) m(a, j) -= q * m(b, j);
}
void col_axpy(IntMat& m, int a, int b, const Int& q) {
  for (int i = 0; i < m.rows(); ++i)
    if (m(i, b) != 0) m(i, a) -= q * m(i, b);
}

}  // namespace

SmithForm smith_normal_form(const IntMat& a) {
  int m = a.rows(), n = a.cols();
  IntMat S = a, U = IntMat::identity(m), V = IntMat::identity(n);
  for (int t = 0; t < std::min(m, n); ++t) {
    // choose the smallest nonzero entry in the trailing block
    int bi = -1, bj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (S(i, j) != 0 && (bi < 0 || abs(S(i, j)) < abs(S(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi < 0) break;
    swap_rows(S, t, bi);
    swap_rows(U, t, bi);
    swap_cols(S, t, bj);
    swap_cols(V, t, bj);
    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), S(i, t).get_mpz_t(), S(t, t).get_mpz_t());
        row_axpy(S, i, t, q);
        row_axpy(U, i, t, q);
        if (S(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), S(t, j).get_mpz_t(), S(t, t).get_mpz_t());
        col_axpy(S, j, t, q);
        col_axpy(V, j, t, q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) {
        // move the smallest remaining entry of row/column t to the pivot
        int pi = t, pj = t;
        for (int i = t + 1; i < m; ++i)
          if (S(i, t) != 0 && abs(S(i, t)) < abs(S(pi, pj))) {
            pi = i;
            pj = t;
          }
        for (int j = t + 1; j < n; ++j)
          if (S(t, j) != 0 && abs(S(t, j)) < abs(S(pi, pj))) {
            pi = t;
            pj = j;
          }
        swap_rows(S, t, pi);
        swap_rows(U, t, pi);
        swap_cols(S, t, pj);
        swap_cols(V, t, pj);
        continue;
      }
      // divisibility of the trailing block
      int bad = -1;
      for (int i = t + 1; i < m && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_axpy(S, t, bad, Int(-1));
      row_axpy(U, t, bad, Int(-1));
    }
    if (S(t, t) < 0) {
      for (int j = 0; j < n; ++j) S(t, j) = -S(t, j);
      for (int j = 0; j < m; ++j) U(t, j) = -U(t, j);
    }
  }
  return {S, U, V};
}

Int determinant(const IntMat& a) {
  int n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return 1;
  IntMat m = a;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int sw = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          sw = i;
          break;
        }
      if (sw < 0) return 0;
      swap_rows(m, k, sw);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMat integer_kernel(const IntMat& a) {
  auto sf = smith_normal_form(a);
  int n = a.cols();
  int rank = 0;
  for (int i = 0; i < std::min(a.rows(), n); ++i)
    if (sf.S(i, i) != 0) ++rank;
  IntMat k(n, n - rank);
  for (int j = rank; j < n; ++j)
    for (int i = 0; i < n; ++i) k(i, j - rank) = sf.V(i, j);
  return k;
}

bool in_lattice(const IntMat& a, const std::vector<Int>& b) {
  auto sf = smith_normal_form(a);
  int m = a.rows();
  std::vector<Int> c(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) c[i] += sf.U(i, j) * b[j];
  for (int i = 0; i < m; ++i) {
    Int s = i < a.cols() ? sf.S(i, i) : Int(0);
    if (s == 0) {
      if (c[i] != 0) return false;
    } else if (c[i] % s != 0) {
      return false;
    }
  }
  return true;
}

IntPoly char_poly(const IntMat& a) {
  int n = a.rows();
  // Faddeev-LeVerrier over Q
  std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n)), M(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = Rat(a(i, j));
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  for (int k = 1; k <= n; ++k) {
    // M = A*M + c_{n-k+1} I
    std::vector<std::vector<Rat>> nm(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        if (A[i][l] == 0) continue;
        for (int j = 0; j < n; ++j) nm[i][j] += A[i][l] * M[l][j];
      }
    for (int i = 0; i < n; ++i) nm[i][i] += c[n - k + 1];
    M = nm;
    Rat tr = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) tr += A[i][l] * M[l][i];
    c[n - k] = -tr / k;
  }
  IntPoly p(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (c[i].get_den() != 1) throw std::logic_error("non-integral characteristic polynomial");
    p[i] = c[i].get_num();
  }
  return p;
}

IntMat poly_eval(const IntPoly& p, const IntMat& a) {
  int n = a.rows();
  IntMat r(n, n);
  for (int k = poly_degree(p); k >= 0; --k) {
    r = r * a;
    for (int i = 0; i < n; ++i) r(i, i) += p[k];
  }
  return r;
}

}  // namespace thetagroup
