#include "thetagroup/rootsystem.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace thetagroup {

namespace {

using Gram = std::vector<std::vector<int>>;

Gram chain_gram(int n) {
  Gram g(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) g[i][i] = 2;
  for (int i = 0; i + 1 < n; ++i) g[i][i + 1] = g[i + 1][i] = -1;
  return g;
}

Gram gram_for(const std::string& t) {
  if (t.size() != 2) throw std::invalid_argument("unsupported Cartan type: " + t);
  char base = t[0];
  int n = t[1] - '0';
  if (base == 'A' && n >= 1 && n <= 4) return chain_gram(n);
  if (base == 'B' && n >= 2 && n <= 4) {
    Gram g = chain_gram(n);
    for (auto& row : g)
      for (auto& x : row) x *= 2;
    g[n - 1][n - 1] = 2;
    return g;
  }
  if (base == 'C' && n >= 3 && n <= 4) {
    Gram g = chain_gram(n);
    g[n - 1][n - 1] = 4;
    g[n - 2][n - 1] = g[n - 1][n - 2] = -2;
    return g;
  }
  if (t == "D4") {
    Gram g(4, std::vector<int>(4, 0));
    for (int i = 0; i < 4; ++i) g[i][i] = 2;
    for (int j : {0, 2, 3}) g[1][j] = g[j][1] = -1;
    return g;
  }
  if (t == "G2") return {{2, -3}, {-3, 6}};
  if (t == "F4") return {{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
  throw std::invalid_argument("unsupported Cartan type: " + t);
}

}  // namespace

RootSystem RootSystem::build(const std::string& cartan_type) {
  return from_gram(cartan_type, gram_for(cartan_type));
}

RootSystem RootSystem::from_gram(const std::string& label, const Gram& gram) {
  RootSystem rs;
  rs.type_ = label;
  rs.rank_ = static_cast<int>(gram.size());
  rs.gram_ = gram;
  int r = rs.rank_;
  rs.cartan_.assign(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) rs.cartan_[i][j] = 2 * gram[i][j] / gram[j][j];

  // Positive roots by height: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0,
  // where p is the largest k with beta - k alpha_i a root.
  std::set<Root> seen;
  std::vector<std::vector<Root>> by_height(1);
  for (int i = 0; i < r; ++i) {
    Root a(r, 0);
    a[i] = 1;
    by_height[0].push_back(a);
    seen.insert(a);
  }
  auto pair_simple = [&](const Root& b, int i) {
    int s = 0;
    for (int j = 0; j < r; ++j) s += b[j] * rs.cartan_[j][i];
    return s;
  };
  for (size_t h = 0; h < by_height.size(); ++h) {
    std::vector<Root> next;
    for (const Root& b : by_height[h]) {
      for (int i = 0; i < r; ++i) {
        int p = 0;
        Root c = b;
        for (;;) {
          c[i] -= 1;
          if (seen.count(c)) ++p;
          else break;
        }
        if (p - pair_simple(b, i) > 0) {
          Root n = b;
          n[i] += 1;
          if (!seen.count(n)) {
            seen.insert(n);
            next.push_back(n);
          }
        }
      }
    }
    if (!next.empty()) by_height.push_back(next);
  }
  std::vector<Root> pos;
  for (auto& level : by_height) {
    std::sort(level.begin(), level.end(), std::greater<Root>());
    pos.insert(pos.end(), level.begin(), level.end());
  }
  rs.roots_ = pos;
  for (const Root& p : pos) {
    Root n = p;
    for (auto& x : n) x = -x;
    rs.roots_.push_back(n);
  }
  int N = rs.size();
  for (int i = 0; i < N; ++i) rs.index_[rs.roots_[i]] = i;
  rs.norms_.resize(N);
  for (int i = 0; i < N; ++i) rs.norms_[i] = rs.inner(rs.roots_[i], rs.roots_[i]);
  rs.min_norm_ = *std::min_element(rs.norms_.begin(), rs.norms_.end());
  rs.max_norm_ = *std::max_element(rs.norms_.begin(), rs.norms_.end());
  rs.coroots_.resize(N);
  for (int i = 0; i < N; ++i) {
    Root c(r);
    for (int j = 0; j < r; ++j) {
      int num = rs.roots_[i][j] * gram[j][j];
      if (num % rs.norms_[i] != 0) throw std::logic_error("non-integral coroot");
      c[j] = num / rs.norms_[i];
    }
    rs.coroots_[i] = c;
  }
  rs.pairing_.assign(N, std::vector<int>(N, 0));
  rs.reflect_.assign(N, std::vector<int>(N, 0));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      int p = 2 * rs.inner(rs.roots_[a], rs.roots_[b]) / rs.norms_[b];
      rs.pairing_[a][b] = p;
      Root s = rs.roots_[a];
      for (int j = 0; j < r; ++j) s[j] -= p * rs.roots_[b][j];
      int idx = rs.index_of(s);
      if (idx < 0) throw std::logic_error("root system not closed under reflections");
      rs.reflect_[a][b] = idx;
    }
  return rs;
}

int RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::height(int i) const { return std::accumulate(roots_[i].begin(), roots_[i].end(), 0); }

int RootSystem::inner(const Root& a, const Root& b) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += a[i] * gram_[i][j] * b[j];
  }
  return s;
}

int RootSystem::pairing(const Root& a, int b) const { return 2 * inner(a, roots_[b]) / norms_[b]; }

std::string RootSystem::root_name(int i) const {
  std::string s = is_positive(i) ? "" : "-";
  for (int c : roots_[i]) s += std::to_string(std::abs(c));
  return s;
}

int RootSystem::parse_root(const std::string& s) const {
  std::string t = s;
  int sign = 1;
  if (!t.empty() && t[0] == '-') {
    sign = -1;
    t = t.substr(1);
  }
  if (static_cast<int>(t.size()) != rank_) throw std::invalid_argument("not a root: " + s);
  Root r(rank_);
  for (int i = 0; i < rank_; ++i) {
    if (t[i] < '0' || t[i] > '9') throw std::invalid_argument("not a root: " + s);
    r[i] = sign * (t[i] - '0');
  }
  int idx = index_of(r);
  if (idx < 0) throw std::invalid_argument("not a root: " + s);
  return idx;
}

std::vector<int> reflection_closure(const RootSystem& rs, const std::vector<int>& roots) {
  std::set<int> cl;
  for (int a : roots) {
    cl.insert(a);
    cl.insert(rs.neg(a));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(cl.begin(), cl.end());
    for (int a : cur)
      for (int b : cur) {
        int c = rs.reflect(a, b);
        if (cl.insert(c).second) grew = true;
      }
  }
  return {cl.begin(), cl.end()};
}

std::string SubsystemFactor::str() const {
  std::string s = base;
  if (tilde) {
    if (base == "A") s = "Ã";
    else s = base + "̃";
  }
  return s + std::to_string(rank);
}

namespace {

void sort_factors(std::vector<SubsystemFactor>& fs) {
  std::sort(fs.begin(), fs.end(), [](const SubsystemFactor& a, const SubsystemFactor& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    if (a.tilde != b.tilde) return !a.tilde;
    return a.base < b.base;
  });
}

}  // namespace

std::vector<SubsystemFactor> subsystem_factors(const RootSystem& rs, const std::vector<int>& roots) {
  for (int a : roots)
    if (a < 0 || a >= rs.size()) throw std::invalid_argument("root index outside the root system");
  auto cl = reflection_closure(rs, roots);
  int n = static_cast<int>(cl.size());
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
        if (comp[v] < 0 && rs.inner(rs.root(cl[u]), rs.root(cl[v])) != 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }
  auto fld = Field::cyclotomic(1);
  std::vector<SubsystemFactor> out;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) members.push_back(cl[i]);
    std::vector<Vec> vs;
    int nlong = 0, nshort = 0;
    for (int a : members) {
      Vec v;
      for (int x : rs.root(a)) v.push_back(fld->from_int(x));
      vs.push_back(v);
      if (rs.is_short(a)) ++nshort;
      else ++nlong;
    }
    int rank = span_rank(*fld, vs, rs.rank());
    int size = static_cast<int>(members.size());
    SubsystemFactor f = classify_component(size, rank, nlong, nshort);
    out.push_back(f);
  }
  sort_factors(out);
  return out;
}

SubsystemFactor classify_component(int size, int rank, int nlong, int nshort) {
  SubsystemFactor f;
  f.rank = rank;
  if (nlong > 0 && nshort > 0) {
    if (size == 12 && rank == 2 && nlong == 6) f.base = "G";
    else if (size == 48) f.base = "F";
    else if (rank == 2) f.base = "B";
    else if (nlong == 2 * rank * (rank - 1)) f.base = "B";
    else f.base = "C";
  } else {
    if (size == rank * (rank + 1)) f.base = "A";
    else if (size == 2 * rank * (rank - 1)) f.base = "D";
    else throw std::logic_error("unrecognised simply-laced component");
    f.tilde = nshort > 0;
  }
  return f;
}

std::string factors_label(std::vector<SubsystemFactor> fs) {
  sort_factors(fs);
  if (fs.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < fs.size();) {
    size_t j = i;
    while (j < fs.size() && fs[j].str() == fs[i].str()) ++j;
    if (!s.empty()) s += "×";
    s += fs[i].str();
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::string subsystem_type(const RootSystem& rs, const std::vector<int>& roots) {
  return factors_label(subsystem_factors(rs, roots));
}

std::vector<int> orthogonal_roots(const RootSystem& rs, const std::vector<int>& roots) {
  std::vector<int> out;
  for (int b = 0; b < rs.size(); ++b) {
    bool ok = true;
    for (int a : roots)
      if (rs.inner(rs.root(a), rs.root(b)) != 0) {
        ok = false;
        break;
      }
    if (ok) out.push_back(b);
  }
  return out;
}

LongSubsystem long_subsystem(const RootSystem& f4) {
  if (f4.type() != "F4") throw std::invalid_argument("long_subsystem expects F4");
  LongSubsystem ls;
  ls.d4 = RootSystem::build("D4");
  ls.basis = {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 1, 2, 0}, {0, 1, 2, 2}};
  for (int i = 0; i < ls.d4.size(); ++i) {
    Root amb(4, 0);
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) amb[k] += ls.d4.root(i)[j] * ls.basis[j][k];
    int idx = f4.index_of(amb);
    if (idx < 0 || !f4.is_long(idx)) throw std::logic_error("long-root embedding failed");
    ls.to_ambient.push_back(idx);
  }
  return ls;
}

AffineDiagram affine_diagram(const std::string& cartan_type, int twist) {
  AffineDiagram d;
  d.base_type = cartan_type;
  d.twist = twist;
  if (twist == 1 && (cartan_type == "G2" || cartan_type == "F4" || cartan_type == "D4")) {
    RootSystem rs = RootSystem::build(cartan_type);
    const Root& h = rs.root(rs.highest_root());
    d.nodes.push_back("alpha_0");
    d.marks.push_back(1);
    for (int i = 0; i < rs.rank(); ++i) {
      d.nodes.push_back("alpha_" + std::to_string(i + 1));
      d.marks.push_back(h[i]);
    }
    int n = static_cast<int>(d.nodes.size());
    d.string_nodes.resize(n);
    std::iota(d.string_nodes.begin(), d.string_nodes.end(), 0);
    if (cartan_type == "G2") d.string_nodes = {1, 2, 0};
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    d.automorphisms.push_back(id);
    if (cartan_type == "D4") {
      // permutations of the outer nodes alpha_0, alpha_1, alpha_3, alpha_4
      std::vector<int> outer = {0, 1, 3, 4};
      std::vector<int> perm = outer;
      d.automorphisms.clear();
      do {
        std::vector<int> p = id;
        for (int k = 0; k < 4; ++k) p[outer[k]] = perm[k];
        d.automorphisms.push_back(p);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return d;
  }
  if (twist == 3 && cartan_type == "D4") {
    d.nodes = {"beta_0", "beta_1", "beta_2"};
    d.marks = {1, 2, 1};
    d.node_classes = {{}, {0, 2, 3}, {1}};
    d.string_nodes = {0, 1, 2};
    d.automorphisms = {{0, 1, 2}};
    return d;
  }
  throw std::invalid_argument("unsupported affine diagram: " + cartan_type + " twist " +
                              std::to_string(twist));
}

}  // namespace thetagroup
