#include "thetagroup/weyl.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace thetagroup {

namespace {

// Rank of a small list of integer vectors (fraction-free elimination).
int int_rank(std::vector<std::vector<long long>> rows) {
  int rank = 0;
  if (rows.empty()) return 0;
  int cols = static_cast<int>(rows[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    for (int i = rank + 1; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][c] == 0) continue;
      long long a = rows[rank][c], b = rows[i][c];
      for (int j = 0; j < cols; ++j) rows[i][j] = rows[i][j] * a - rows[rank][j] * b;
      long long g = 0;
      for (long long x : rows[i]) g = std::gcd(g, std::llabs(x));
      if (g > 1)
        for (auto& x : rows[i]) x /= g;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

WeylGroup::WeylGroup(const RootSystem& rs) : rs_(rs) {
  int N = rs_.size(), r = rs_.rank();
  if (N > 255 || r > 8) throw std::invalid_argument("root system too large for WeylGroup");
  std::vector<std::vector<int>> gens(r, std::vector<int>(N));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < N; ++k) gens[i][k] = rs_.reflect(k, i);
  std::vector<int> id(N);
  for (int k = 0; k < N; ++k) id[k] = k;
  perms_.push_back(id);
  words_.push_back({});
  lookup_[key_of(id)] = 0;
  for (size_t e = 0; e < perms_.size(); ++e) {
    for (int i = 0; i < r; ++i) {
      std::vector<int> p(N);
      for (int k = 0; k < N; ++k) p[k] = gens[i][perms_[e][k]];
      auto key = key_of(p);
      if (lookup_.count(key)) continue;
      lookup_[key] = static_cast<int>(perms_.size());
      std::vector<int> w{i};
      w.insert(w.end(), words_[e].begin(), words_[e].end());
      perms_.push_back(std::move(p));
      words_.push_back(std::move(w));
    }
  }
  int n = order();
  table_.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::uint64_t key = 0;
      for (int i = 0; i < r; ++i)
        key |= static_cast<std::uint64_t>(perms_[a][perms_[b][i]]) << (8 * i);
      table_[static_cast<size_t>(a) * n + b] = lookup_.at(key);
    }
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
  reflection_.assign(N, -1);
  for (int k = 0; k < N; ++k) {
    std::vector<int> p(N);
    for (int j = 0; j < N; ++j) p[j] = rs_.reflect(j, k);
    reflection_[k] = find(p);
  }
}

std::uint64_t WeylGroup::key_of(const std::vector<int>& perm) const {
  std::uint64_t key = 0;
  for (int i = 0; i < rs_.rank(); ++i) key |= static_cast<std::uint64_t>(perm[i]) << (8 * i);
  return key;
}

int WeylGroup::find(const std::vector<int>& perm) const {
  auto it = lookup_.find(key_of(perm));
  if (it == lookup_.end() || perms_[it->second] != perm) return -1;
  return it->second;
}

IntMat WeylGroup::matrix(int e) const {
  int r = rs_.rank();
  IntMat m(r, r);
  for (int i = 0; i < r; ++i) {
    const Root& c = rs_.coroot(perms_[e][i]);
    for (int j = 0; j < r; ++j) m(j, i) = c[j];
  }
  return m;
}

int WeylGroup::power(int e, int k) const {
  int r = 0;
  for (int i = 0; i < k; ++i) r = mul(r, e);
  return r;
}

int WeylGroup::element_order(int e) const {
  int k = 1, x = e;
  while (x != 0) {
    x = mul(x, e);
    ++k;
  }
  return k;
}

IntPoly WeylGroup::char_poly(int e) const { return thetagroup::char_poly(matrix(e)); }

int WeylGroup::fixed_dim(int e) const { return cyclotomic_multiplicity(char_poly(e), 1); }

int WeylGroup::eigenvalue_multiplicity(int e, int m) const {
  return cyclotomic_multiplicity(char_poly(e), m);
}

std::vector<int> WeylGroup::subgroup(const std::vector<int>& generators) const {
  std::vector<char> in(order(), 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (size_t i = 0; i < elems.size(); ++i)
    for (int g : generators) {
      int x = mul(elems[i], g);
      if (!in[x]) {
        in[x] = 1;
        elems.push_back(x);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> WeylGroup::reflection_subgroup(const std::vector<int>& roots) const {
  std::vector<int> gens;
  for (int k : roots) gens.push_back(reflection(k));
  return subgroup(gens);
}

std::vector<int> WeylGroup::centralizer(int e, const std::vector<int>* within) const {
  std::vector<int> out;
  auto test = [&](int z) {
    if (mul(z, e) == mul(e, z)) out.push_back(z);
  };
  if (within)
    for (int z : *within) test(z);
  else
    for (int z = 0; z < order(); ++z) test(z);
  return out;
}

const std::vector<std::vector<int>>& WeylGroup::conjugacy_classes() const {
  if (!classes_.empty()) return classes_;
  int n = order();
  class_index_.assign(n, -1);
  std::vector<int> gens;
  for (int i = 0; i < rs_.rank(); ++i) gens.push_back(reflection(i));
  for (int e = 0; e < n; ++e) {
    if (class_index_[e] >= 0) continue;
    int c = static_cast<int>(classes_.size());
    std::vector<int> cls{e};
    class_index_[e] = c;
    for (size_t i = 0; i < cls.size(); ++i)
      for (int g : gens) {
        int y = mul(mul(g, cls[i]), g);
        if (class_index_[y] < 0) {
          class_index_[y] = c;
          cls.push_back(y);
        }
      }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(cls);
  }
  return classes_;
}

int WeylGroup::class_of(int e) const {
  conjugacy_classes();
  return class_index_[e];
}

// ---------------------------------------------------------------- Coxeter data

IntPoly coxeter_char_poly(const std::string& cartan_type) {
  RootSystem rs = RootSystem::build(cartan_type);
  int r = rs.rank();
  const auto& a = rs.cartan();
  IntMat c = IntMat::identity(r);
  for (int i = 0; i < r; ++i) {
    // s_i(alpha_j^vee) = alpha_j^vee - <alpha_i, alpha_j^vee> alpha_i^vee
    IntMat s = IntMat::identity(r);
    for (int j = 0; j < r; ++j) s(i, j) -= a[i][j];
    c = c * s;
  }
  return char_poly(c);
}

int coxeter_number(const std::string& cartan_type) {
  RootSystem rs = RootSystem::build(cartan_type);
  return rs.size() / rs.rank();
}

std::pair<std::vector<int>, std::string> orthogonal_subsystem(const RootSystem& rs,
                                                              const std::vector<int>& phi1) {
  auto roots = orthogonal_roots(rs, phi1);
  return {roots, roots.empty() ? std::string("1") : subsystem_type(rs, roots)};
}

// ---------------------------------------------------------------- Carter decomposition

namespace {

std::string factor_type(const SubsystemFactor& f) {
  if (f.base == "C" && f.rank == 2) return "B2";
  return f.base + std::to_string(f.rank);
}

}  // namespace

CarterDecomposition carter_decomposition(const WeylGroup& W, int e) {
  const RootSystem& rs = W.root_system();
  int r = rs.rank();
  int target = r - W.fixed_dim(e);
  int npos = rs.num_positive();
  std::vector<int> pos(npos);
  for (int i = 0; i < npos; ++i) pos[i] = i;

  auto vecs_of = [&](const std::vector<int>& roots) {
    std::vector<std::vector<long long>> v;
    for (int k : roots) v.emplace_back(rs.root(k).begin(), rs.root(k).end());
    return v;
  };
  auto rank_one_minus = [&](int x) {
    IntMat m = W.matrix(x) - IntMat::identity(r);
    std::vector<std::vector<long long>> rows;
    for (int i = 0; i < r; ++i) {
      std::vector<long long> row;
      for (int j = 0; j < r; ++j) row.push_back(m(i, j).get_si());
      rows.push_back(row);
    }
    return int_rank(rows);
  };

  // all orthogonal sets of positive roots of size <= target, lexicographic
  std::vector<std::vector<int>> ortho_sets;
  std::function<void(std::vector<int>&, int)> grow = [&](std::vector<int>& cur, int start) {
    ortho_sets.push_back(cur);
    if (static_cast<int>(cur.size()) == target) return;
    for (int k = start; k < npos; ++k) {
      bool ok = true;
      for (int c : cur)
        if (rs.inner(rs.root(c), rs.root(k)) != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(k);
      grow(cur, k + 1);
      cur.pop_back();
    }
  };
  std::vector<int> cur;
  grow(cur, 0);

  struct Best {
    bool found = false;
    size_t closure = 0;
    int nlong = 0;
    std::vector<int> roots;
    std::vector<int> a, b, phi1;
  } best;
  std::set<std::vector<int>> seen_unions;

  for (const auto& A : ortho_sets) {
    int w1 = 0;
    for (int k : A) w1 = W.mul(w1, W.reflection(k));
    int w2 = W.mul(w1, e);
    if (W.mul(w2, w2) != 0) continue;
    int need = target - static_cast<int>(A.size());
    if (need < 0 || rank_one_minus(w2) != need) continue;
    std::vector<int> negated;
    for (int k = 0; k < npos; ++k)
      if (W.act(w2, k) == rs.neg(k)) negated.push_back(k);
    // orthogonal subsets of the negated roots of size `need`
    std::vector<int> B;
    std::function<void(int)> pick = [&](int start) {
      if (static_cast<int>(B.size()) == need) {
        std::vector<int> uni = A;
        uni.insert(uni.end(), B.begin(), B.end());
        std::sort(uni.begin(), uni.end());
        if (std::adjacent_find(uni.begin(), uni.end()) != uni.end()) return;
        if (int_rank(vecs_of(uni)) != static_cast<int>(uni.size())) return;
        if (!seen_unions.insert(uni).second) return;
        auto cl = reflection_closure(rs, uni);
        int nlong = 0;
        for (int k : uni)
          if (!rs.is_short(k)) ++nlong;
        bool better = !best.found || cl.size() < best.closure ||
                      (cl.size() == best.closure &&
                       (nlong > best.nlong || (nlong == best.nlong && uni < best.roots)));
        if (better) {
          best.found = true;
          best.closure = cl.size();
          best.nlong = nlong;
          best.roots = uni;
          best.a = A;
          best.b = B;
          best.phi1 = cl;
        }
        return;
      }
      for (size_t i = start; i < negated.size(); ++i) {
        int k = negated[i];
        bool ok = true;
        for (int c : B)
          if (rs.inner(rs.root(c), rs.root(k)) != 0) {
            ok = false;
            break;
          }
        if (!ok) continue;
        B.push_back(k);
        pick(static_cast<int>(i) + 1);
        B.pop_back();
      }
    };
    pick(0);
  }
  if (!best.found) throw std::logic_error("no involution decomposition found");
  CarterDecomposition d;
  d.a = best.a;
  d.b = best.b;
  d.phi1 = best.phi1;
  d.phi1_type = d.phi1.empty() ? "1" : subsystem_type(rs, d.phi1);
  // Coxeter test: compare with the product of Coxeter polynomials of the factors
  IntPoly expect{1};
  int covered = 0;
  if (!d.phi1.empty())
    for (const auto& f : subsystem_factors(rs, d.phi1)) {
      expect = poly_mul(expect, coxeter_char_poly(factor_type(f)));
      covered += f.rank;
    }
  for (int i = covered; i < r; ++i) expect = poly_mul(expect, cyclotomic_poly(1));
  d.coxeter = expect == W.char_poly(e);
  return d;
}

// ---------------------------------------------------------------- catalog

namespace {

struct CatalogEntry {
  const char* type;
  int order;
  const char* char_poly;
  int size;
  const char* phi1_type;
  const char* label;
};

// Carter labels keyed by (order, characteristic polynomial, class size, Phi1 type).
const CatalogEntry kCatalog[] = {
#include "carter_catalog.inc"
};

}  // namespace

std::vector<CarterClass> carter_classes(const WeylGroup& W) {
  const RootSystem& rs = W.root_system();
  std::vector<CarterClass> out;
  bool any_catalogued = false;
  for (const auto& cls : W.conjugacy_classes()) {
    CarterClass c;
    c.members = cls;
    c.rep = cls.front();
    c.size = static_cast<int>(cls.size());
    c.order = W.element_order(c.rep);
    c.char_poly = W.char_poly(c.rep);
    c.fixed_dim = cyclotomic_multiplicity(c.char_poly, 1);
    c.centralizer_order = W.order() / c.size;
    auto d = carter_decomposition(W, c.rep);
    c.diagram_a = d.a;
    c.diagram_b = d.b;
    c.phi1 = d.phi1;
    c.phi1_type = d.phi1_type;
    c.coxeter_in_phi1 = d.coxeter;
    auto [phi2, phi2_type] = orthogonal_subsystem(rs, c.phi1);
    c.phi2 = phi2;
    c.phi2_type = phi2_type;
    std::string derived = d.coxeter ? d.phi1_type : d.phi1_type + "(a_1)";
    c.label = derived;
    bool catalogued = false, matched = false;
    std::string cp = poly_to_string(c.char_poly);
    for (const auto& entry : kCatalog) {
      if (rs.type() != entry.type) continue;
      catalogued = true;
      if (entry.order == c.order && cp == entry.char_poly && entry.size == c.size &&
          c.phi1_type == entry.phi1_type) {
        if (matched) throw std::logic_error("Carter catalog tuple is not separating");
        matched = true;
        c.label = entry.label;
      }
    }
    any_catalogued = any_catalogued || catalogued;
    if (catalogued && !matched)
      throw std::logic_error("Weyl class not in the Carter catalog: " + rs.type() + " order " +
                             std::to_string(c.order) + " " + cp + " size " +
                             std::to_string(c.size) + " " + c.phi1_type);
    out.push_back(std::move(c));
  }
  std::set<std::string> labels;
  if (any_catalogued)
    for (const auto& c : out)
    if (!labels.insert(c.label).second)
      throw std::logic_error("duplicate Carter label " + c.label + " in " + rs.type());
  return out;
}

}  // namespace thetagroup
