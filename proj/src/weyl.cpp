#include "dfv/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>
#include <unordered_set>

namespace dfv {

namespace {

// Flatten a matrix for hashing/equality in the dedup sets.
VecI flatten(const std::vector<VecI>& m) {
  VecI out;
  out.reserve(m.size() * m.size());
  for (const auto& row : m)
    for (int v : row) out.push_back(v);
  return out;
}

// Matrix of the simple reflection s_i: alpha_j -> alpha_j - <alpha_j, alpha_i^vee> alpha_i.
std::vector<VecI> gen_matrix(const RootSystem& rs, int i) {
  auto m = weyl_identity_matrix(rs.rank);
  for (int j = 0; j < rs.rank; ++j) m[i][j] -= rs.cartan[j][i];
  return m;
}

// Column i of the matrix = image of alpha_i, in simple-root coordinates.
VecI column(const std::vector<VecI>& m, int i) {
  VecI c(m.size());
  for (size_t k = 0; k < m.size(); ++k) c[k] = m[k][i];
  return c;
}

bool is_positive(const VecI& v) {
  bool nonzero = false;
  for (int x : v) {
    if (x < 0) return false;
    if (x > 0) nonzero = true;
  }
  return nonzero;
}

// l(w s_i) > l(w)  iff  w(alpha_i) > 0.
bool ascends_right(const std::vector<VecI>& m, int i) { return is_positive(column(m, i)); }

std::vector<VecI> inverse_matrix(const RootSystem& rs, const WeylElement& w) {
  auto m = weyl_identity_matrix(rs.rank);
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
    m = weyl_matmul(m, gen_matrix(rs, *it));
  return m;
}

Int factorial(int n) {
  Int f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Int pow2(int n) {
  Int p = 1;
  for (int k = 0; k < n; ++k) p *= 2;
  return p;
}

}  // namespace

VecI weyl_apply(const std::vector<VecI>& m, const VecI& x) {
  const int n = static_cast<int>(m.size());
  VecI y(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) y[i] += m[i][j] * x[j];
  return y;
}

std::vector<VecI> weyl_matmul(const std::vector<VecI>& a, const std::vector<VecI>& b) {
  const int n = static_cast<int>(a.size());
  std::vector<VecI> c(n, VecI(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int aik = a[i][k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c[i][j] += aik * b[k][j];
    }
  return c;
}

std::vector<VecI> weyl_identity_matrix(int rank) {
  std::vector<VecI> m(rank, VecI(rank, 0));
  for (int i = 0; i < rank; ++i) m[i][i] = 1;
  return m;
}

WeylElement weyl_identity(int rank) { return WeylElement{{}, weyl_identity_matrix(rank)}; }

WeylElement weyl_mul_gen(const RootSystem& rs, const WeylElement& w, int i) {
  WeylElement out;
  out.word = w.word;
  out.word.push_back(i);
  out.matrix = weyl_matmul(w.matrix, gen_matrix(rs, i));
  return out;
}

Int weyl_order(char type, int rank) {
  switch (type) {
    case 'A': return factorial(rank + 1);
    case 'B':
    case 'C': return pow2(rank) * factorial(rank);
    case 'D': return pow2(rank - 1) * factorial(rank);
    case 'E':
      if (rank == 6) return 51840;
      if (rank == 7) return 2903040;
      return Int(696729600);
    case 'F': return 1152;
    case 'G': return 12;
    default: fail("weyl_order: unknown type ", std::string(1, type));
  }
  return 0;  // unreachable
}

Int weyl_order_subsystem(const RootSystem& rs, const VecI& j_nodes) {
  if (j_nodes.empty()) return 1;
  const int m = static_cast<int>(j_nodes.size());
  auto comps = classify_diagram(
      m, [&](int a, int b) { return rs.cartan[j_nodes[a]][j_nodes[b]]; },
      [&](int a) { return rs.d[j_nodes[a]]; });
  Int order = 1;
  for (const auto& c : comps) order *= weyl_order(c.type, c.rank);
  return order;
}

long weyl_enumeration_bound() {
  if (const char* env = std::getenv("DFV_WEYL_BOUND")) {
    long v = std::atol(env);
    if (v > 0) return v;
  }
  return 10000000L;
}

std::vector<WeylElement> weyl_generate(const RootSystem& rs, long bound) {
  if (bound <= 0) bound = weyl_enumeration_bound();
  VecI all(rs.rank);
  for (int i = 0; i < rs.rank; ++i) all[i] = i;
  const Int order = weyl_order_subsystem(rs, all);
  if (order > bound)
    fail("weyl_generate: |W(", rs.type, std::to_string(rs.rank), ")| = ", order.get_str(),
         " exceeds enumeration bound ", bound);

  std::vector<WeylElement> out;
  out.push_back(weyl_identity(rs.rank));
  std::unordered_set<VecI, VecIHash> seen;
  seen.insert(flatten(out[0].matrix));

  std::vector<WeylElement> level = {out[0]};
  while (!level.empty()) {
    std::vector<WeylElement> next;
    for (const auto& w : level)
      for (int i = 0; i < rs.rank; ++i) {
        if (!ascends_right(w.matrix, i)) continue;
        WeylElement w2 = weyl_mul_gen(rs, w, i);
        if (seen.insert(flatten(w2.matrix)).second) next.push_back(w2);
      }
    for (const auto& w : next) out.push_back(w);
    level = std::move(next);
  }
  if (Int(static_cast<long>(out.size())) != order)
    fail("weyl_generate: enumerated ", out.size(), " elements but |W| = ", order.get_str());
  return out;
}

WeylElement weyl_longest(const RootSystem& rs, const VecI& j_nodes) {
  WeylElement w = weyl_identity(rs.rank);
  for (;;) {
    bool advanced = false;
    for (int i : j_nodes) {
      if (ascends_right(w.matrix, i)) {
        w = weyl_mul_gen(rs, w, i);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  // Sanity: the length must equal the number of positive roots supported on J.
  int expected = 0;
  for (const auto& beta : rs.positive_roots) {
    bool inside = true;
    for (int i = 0; i < rs.rank && inside; ++i)
      if (beta[i] != 0 && std::find(j_nodes.begin(), j_nodes.end(), i) == j_nodes.end())
        inside = false;
    if (inside) ++expected;
  }
  if (w.length() != expected)
    fail("weyl_longest: greedy ascent stopped at length ", w.length(), ", expected ", expected);
  return w;
}

std::vector<WeylElement> min_coset_reps(const RootSystem& rs, const VecI& j_nodes, long bound) {
  auto all = weyl_generate(rs, bound);
  std::vector<WeylElement> reps;
  for (const auto& w : all) {
    auto inv = inverse_matrix(rs, w);
    bool minimal = true;
    for (int i : j_nodes)
      if (!is_positive(column(inv, i))) {
        minimal = false;
        break;
      }
    if (minimal) reps.push_back(w);
  }
  return reps;
}

std::vector<WeylElement> min_double_coset_reps(const RootSystem& rs, const VecI& j_nodes,
                                               const VecI& j2_nodes, long bound) {
  auto all = weyl_generate(rs, bound);
  std::vector<WeylElement> reps;
  for (const auto& w : all) {
    bool minimal = true;
    for (int j : j2_nodes)
      if (!ascends_right(w.matrix, j)) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    auto inv = inverse_matrix(rs, w);
    for (int i : j_nodes)
      if (!is_positive(column(inv, i))) {
        minimal = false;
        break;
      }
    if (minimal) reps.push_back(w);
  }

  // For groups small enough to afford it, verify each double coset holds exactly
  // one representative (union of cosets must partition W).
  if (all.size() <= 200000) {
    std::unordered_map<VecI, int, VecIHash> index;
    for (size_t k = 0; k < all.size(); ++k) index.emplace(flatten(all[k].matrix), static_cast<int>(k));
    std::vector<int> parent(all.size());
    for (size_t k = 0; k < all.size(); ++k) parent[k] = static_cast<int>(k);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (size_t k = 0; k < all.size(); ++k) {
      for (int i : j_nodes)
        unite(static_cast<int>(k),
              index.at(flatten(weyl_matmul(gen_matrix(rs, i), all[k].matrix))));
      for (int j : j2_nodes)
        unite(static_cast<int>(k),
              index.at(flatten(weyl_matmul(all[k].matrix, gen_matrix(rs, j)))));
    }
    std::unordered_set<int> roots;
    for (size_t k = 0; k < all.size(); ++k) roots.insert(find(k));
    if (roots.size() != reps.size())
      fail("min_double_coset_reps: found ", reps.size(), " minimal representatives but ",
           roots.size(), " double cosets");
  }
  return reps;
}

VecI j_star(const RootSystem& rs, const VecI& j_nodes) {
  VecI all(rs.rank);
  for (int i = 0; i < rs.rank; ++i) all[i] = i;
  const auto w0 = weyl_longest(rs, all);
  VecI out;
  for (int j : j_nodes) {
    VecI img = column(w0.matrix, j);
    int target = -1;
    for (int i = 0; i < rs.rank; ++i) {
      bool match = true;
      for (int k = 0; k < rs.rank; ++k)
        if (img[k] != (k == i ? -1 : 0)) {
          match = false;
          break;
        }
      if (match) {
        target = i;
        break;
      }
    }
    if (target < 0)
      fail("j_star: -w0(alpha_", j, ") is not a simple root (image ", vi_str(img), ")");
    out.push_back(target);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dfv
