#include "dfv/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>

namespace dfv {

// ------------------------------------------------------------- basic queries

Rat RootSystem::inner(const VecQ& x, const VecQ& y) const {
  Rat s = 0;
  for (int i = 0; i < rank; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank; ++j) {
      if (y[j] == 0) continue;
      s += x[i] * y[j] * Rat(cartan[i][j]) * d[j];
    }
  }
  return s;
}

Rat RootSystem::inner(const VecI& x, const VecI& y) const {
  return inner(to_vecq(x), to_vecq(y));
}

int RootSystem::pair_coroot(const VecI& beta, int i) const {
  // <beta, alpha_i^vee> = sum_j beta_j <alpha_j, alpha_i^vee>
  int s = 0;
  for (int j = 0; j < rank; ++j) s += beta[j] * cartan[j][i];
  return s;
}

int RootSystem::height(const VecI& beta) const {
  int h = 0;
  for (int c : beta) h += c;
  return h;
}

bool RootSystem::is_positive_root(const VecI& beta) const { return m_posset.count(beta) > 0; }

// ------------------------------------------------------------- construction

namespace {

void add_edge(std::vector<VecI>& c, int i, int j, int cij, int cji) {
  c[i][j] = cij;
  c[j][i] = cji;
}

// Cartan matrix and root lengths for one simple type, Bourbaki numbering.
void make_cartan(char type, int n, std::vector<VecI>& cartan, VecQ& d) {
  cartan.assign(n, VecI(n, 0));
  for (int i = 0; i < n; ++i) cartan[i][i] = 2;
  d.assign(n, Rat(1));
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) add_edge(cartan, i, i + 1, -1, -1);
  };
  switch (type) {
    case 'A':
      chain(0, n - 1);
      break;
    case 'B':  // alpha_n short
      chain(0, n - 2);
      add_edge(cartan, n - 2, n - 1, -2, -1);
      d[n - 1] = Rat(1, 2);
      break;
    case 'C':  // alpha_n long
      chain(0, n - 2);
      add_edge(cartan, n - 2, n - 1, -1, -2);
      for (int i = 0; i < n - 1; ++i) d[i] = Rat(1, 2);
      break;
    case 'D':  // chain alpha_1..alpha_{n-2}, both alpha_{n-1} and alpha_n on the fork
      chain(0, n - 2);
      add_edge(cartan, n - 3, n - 1, -1, -1);
      break;
    case 'E':
      // 1-3-4-5-6(-7-8), 2 attached to 4
      add_edge(cartan, 0, 2, -1, -1);
      for (int i = 2; i < n - 1; ++i) add_edge(cartan, i, i + 1, -1, -1);
      add_edge(cartan, 1, 3, -1, -1);
      break;
    case 'F':  // 1-2=>3-4, alpha_3 alpha_4 short
      add_edge(cartan, 0, 1, -1, -1);
      add_edge(cartan, 1, 2, -2, -1);
      add_edge(cartan, 2, 3, -1, -1);
      d[2] = d[3] = Rat(1, 2);
      break;
    case 'G':  // alpha_1 short, alpha_2 long
      add_edge(cartan, 0, 1, -1, -3);
      d[0] = Rat(1, 3);
      break;
    default:
      fail("make_cartan: unknown type ", type);
  }
}

void check_type_rank(char type, int n) {
  auto bad = [&](const char* need) {
    fail("build_root_system: invalid rank ", n, " for type ", std::string(1, type), " (need ",
         need, ")");
  };
  switch (type) {
    case 'A': if (n < 1) bad("n >= 1"); break;
    case 'B': if (n < 2) bad("n >= 2"); break;
    case 'C': if (n < 2) bad("n >= 2"); break;
    case 'D': if (n < 3) bad("n >= 3"); break;
    case 'E': if (n < 6 || n > 8) bad("n in {6,7,8}"); break;
    case 'F': if (n != 4) bad("n = 4"); break;
    case 'G': if (n != 2) bad("n = 2"); break;
    default:
      fail("build_root_system: unknown type '", std::string(1, type), "' (expected A..G)");
  }
}

// Positive roots by height-saturation: beta + alpha_i is a root iff the
// alpha_i-string through beta descends further than <beta, alpha_i^vee>.
std::vector<VecI> generate_positive_roots(const RootSystem& rs) {
  std::vector<VecI> roots;
  std::unordered_set<VecI, VecIHash> seen;
  std::vector<VecI> level;  // current height slice
  for (int i = 0; i < rs.rank; ++i) {
    VecI e(rs.rank, 0);
    e[i] = 1;
    level.push_back(e);
    seen.insert(e);
    roots.push_back(e);
  }
  while (!level.empty()) {
    std::vector<VecI> next;
    for (const VecI& beta : level) {
      for (int i = 0; i < rs.rank; ++i) {
        VecI up = beta;
        up[i] += 1;
        if (seen.count(up)) continue;
        // p = length of the descending alpha_i-string from beta
        int p = 0;
        VecI down = beta;
        while (true) {
          down[i] -= 1;
          bool neg = false;
          for (int c : down)
            if (c < 0) neg = true;
          if (neg || !seen.count(down)) break;
          ++p;
        }
        if (p - rs.pair_coroot(beta, i) > 0) {
          seen.insert(up);
          next.push_back(up);
          roots.push_back(up);
        }
      }
    }
    level = std::move(next);
  }
  std::sort(roots.begin(), roots.end(), [&](const VecI& a, const VecI& b) {
    int ha = rs.height(a), hb = rs.height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return roots;
}

}  // namespace

const RootSystem& build_root_system(char type, int rank) {
  static std::mutex mu;
  static std::map<std::pair<char, int>, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(type, rank);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  check_type_rank(type, rank);
  auto rs = std::make_unique<RootSystem>();
  rs->type = type;
  rs->rank = rank;
  make_cartan(type, rank, rs->cartan, rs->d);
  rs->simple_roots.assign(rank, VecI(rank, 0));
  for (int i = 0; i < rank; ++i) rs->simple_roots[i][i] = 1;
  rs->positive_roots = generate_positive_roots(*rs);
  for (const VecI& r : rs->positive_roots) rs->m_posset.insert(r);
  const RootSystem& ref = *rs;
  cache.emplace(key, std::move(rs));
  return ref;
}

std::pair<MatQ, MatQ> fundamental_weight_basis(const RootSystem& rs) {
  // root coords x |-> omega coords C^T x  (alpha_i = sum_j C_ij omega_j)
  MatQ to_omega(rs.rank, rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) to_omega.at(i, j) = rs.cartan[j][i];
  return {to_omega, inverse(to_omega)};
}

// -------------------------------------------------------- reductive algebras

int factor_dim(const SimpleFactor& f) {
  switch (f.type) {
    case 'A': return (f.rank + 1) * (f.rank + 1) - 1;
    case 'B': return f.rank * (2 * f.rank + 1);
    case 'C': return f.rank * (2 * f.rank + 1);
    case 'D': return f.rank * (2 * f.rank - 1);
    case 'E': return f.rank == 6 ? 78 : f.rank == 7 ? 133 : 248;
    case 'F': return 52;
    case 'G': return 14;
  }
  fail("factor_dim: unknown type ", f.type);
}

std::string factor_name(const SimpleFactor& f) {
  switch (f.type) {
    case 'A': return "sl_" + std::to_string(f.rank + 1);
    case 'B': return "so_" + std::to_string(2 * f.rank + 1);
    case 'C': return "sp_" + std::to_string(f.rank);
    case 'D': return "so_" + std::to_string(2 * f.rank);
    case 'E': return "e" + std::to_string(f.rank);
    case 'F': return "f4";
    case 'G': return "g2";
  }
  fail("factor_name: unknown type ", f.type);
}

void ReductiveAlgebra::add_factor(char type, int rank) {
  // Canonicalize the small isomorphisms so summaries compare reliably.
  if ((type == 'A' && rank < 1) || ((type == 'B' || type == 'D') && rank == 0)) return;
  if (type == 'D' && rank == 1) {  // so_2 is a torus
    center_dim += 1;
    return;
  }
  if (type == 'D' && rank == 2) {  // so_4 = sl_2 + sl_2
    add_factor('A', 1);
    add_factor('A', 1);
    return;
  }
  if (type == 'D' && rank == 3) type = 'A';          // so_6 = sl_4
  if ((type == 'B' || type == 'C') && rank == 1) {   // so_3 = sp_1 = sl_2
    type = 'A';
  }
  SimpleFactor f{type, rank};
  factors.insert(std::upper_bound(factors.begin(), factors.end(), f), f);
}

int ReductiveAlgebra::dim() const {
  int s = center_dim;
  for (const auto& f : factors) s += factor_dim(f);
  return s;
}

int ReductiveAlgebra::rank() const {
  int s = center_dim;
  for (const auto& f : factors) s += f.rank;
  return s;
}

std::string ReductiveAlgebra::name() const {
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += "+";
    s += factor_name(f);
  }
  if (center_dim > 0) {
    if (!s.empty()) s += "+";
    s += "gl_1";
    if (center_dim > 1) s += "^" + std::to_string(center_dim);
  }
  if (s.empty()) s = "0";
  return s;
}

Int weyl_dimension_factor(char type, int rank, const VecI& hw_omega) {
  if (static_cast<int>(hw_omega.size()) != rank)
    fail("weyl_dimension: weight has ", hw_omega.size(), " coords, factor rank is ", rank);
  for (int c : hw_omega)
    if (c < 0)
      fail("weyl_dimension: non-dominant highest weight ", vi_str(hw_omega), " for ",
           factor_name({type, rank}));
  const RootSystem& rs = build_root_system(type, rank);
  auto [to_omega, to_root] = fundamental_weight_basis(rs);
  VecQ lam = to_root.apply(to_vecq(hw_omega));
  VecQ rho(rs.rank, Rat(0));
  for (const VecI& a : rs.positive_roots) rho = vq_add(rho, vq_scale(Rat(1, 2), to_vecq(a)));
  Rat num = 1, den = 1;
  for (const VecI& a : rs.positive_roots) {
    VecQ aq = to_vecq(a);
    num *= rs.inner(vq_add(lam, rho), aq);
    den *= rs.inner(rho, aq);
  }
  Rat r = num / den;
  r.canonicalize();
  if (r.get_den() != 1) fail("weyl_dimension: non-integral result (internal error)");
  return r.get_num();
}

Int weyl_dimension(const ReductiveAlgebra& alg, const Weight& hw) {
  if (hw.omega.size() != alg.factors.size())
    fail("weyl_dimension: weight has ", hw.omega.size(), " factor components, algebra has ",
         alg.factors.size());
  Int d = 1;
  for (size_t i = 0; i < alg.factors.size(); ++i)
    d *= weyl_dimension_factor(alg.factors[i].type, alg.factors[i].rank, hw.omega[i]);
  return d;
}

// ------------------------------------------------- irreducible weight tables

namespace {

// Weights of V(hw) tracked as offsets c (weight = hw - sum c_i alpha_i).
WeightMultiset compute_weight_multiset(char type, int rank, const VecI& hw) {
  const RootSystem& rs = build_root_system(type, rank);
  for (int c : hw)
    if (c < 0) fail("irrep_weight_multiset: non-dominant weight ", vi_str(hw));

  auto pair_offset = [&](const VecI& c, int i) {  // <weight(c), alpha_i^vee>
    int s = hw[i];
    for (int j = 0; j < rank; ++j) s -= c[j] * rs.cartan[j][i];
    return s;
  };

  std::unordered_map<VecI, VecI, VecIHash> pstring;  // offset -> up-string lengths
  std::vector<VecI> order;                           // offsets by height
  std::vector<VecI> level{VecI(rank, 0)};
  pstring[level[0]] = VecI(rank, 0);
  order.push_back(level[0]);
  while (!level.empty()) {
    std::vector<VecI> next;
    for (const VecI& c : level) {
      for (int i = 0; i < rank; ++i) {
        if (pstring[c][i] + pair_offset(c, i) < 1) continue;  // string ends here
        VecI down = c;
        down[i] += 1;
        if (pstring.count(down)) continue;
        VecI p(rank, 0);
        for (int j = 0; j < rank; ++j) {
          VecI up = down;
          up[j] -= 1;
          bool ok = up[j] >= 0 && pstring.count(up);
          p[j] = ok ? pstring[up][j] + 1 : 0;
        }
        pstring[down] = p;
        next.push_back(down);
        order.push_back(down);
      }
    }
    level = std::move(next);
  }

  // Freudenthal recursion down the height order.
  auto [to_omega, to_root] = fundamental_weight_basis(rs);
  VecQ lam = to_root.apply(to_vecq(hw));
  VecQ rho(rank, Rat(0));
  for (const VecI& a : rs.positive_roots) rho = vq_add(rho, vq_scale(Rat(1, 2), to_vecq(a)));
  auto weight_of = [&](const VecI& c) {
    VecQ w = lam;
    for (int i = 0; i < rank; ++i) w[i] -= Rat(c[i]);
    return w;  // root coords
  };
  std::unordered_map<VecI, Int, VecIHash> mult;
  mult[VecI(rank, 0)] = 1;
  const Rat top = rs.inner(vq_add(lam, rho), vq_add(lam, rho));
  for (const VecI& c : order) {
    if (mult.count(c)) continue;  // only the highest weight is pre-set
    VecQ nu = weight_of(c);
    Rat num = 0;
    for (const VecI& a : rs.positive_roots) {
      for (int k = 1;; ++k) {
        VecI upc = c;
        bool valid = true;
        for (int i = 0; i < rank; ++i) {
          upc[i] -= k * a[i];
          if (upc[i] < 0) valid = false;
        }
        if (!valid || !pstring.count(upc)) break;
        VecQ mu = weight_of(upc);
        num += Rat(2) * Rat(mult[upc]) * rs.inner(mu, to_vecq(a));
      }
    }
    Rat den = top - rs.inner(vq_add(nu, rho), vq_add(nu, rho));
    Rat m = num / den;
    m.canonicalize();
    if (m.get_den() != 1 || m < 0)
      fail("irrep_weight_multiset: Freudenthal gave non-integral multiplicity at offset ",
           vi_str(c));
    mult[c] = m.get_num();
  }

  WeightMultiset out;
  for (const VecI& c : order) {
    VecI w(rank);
    for (int i = 0; i < rank; ++i) w[i] = pair_offset(c, i);
    long m = static_cast<long>(mult[c].get_si());
    if (m == 0) continue;
    out.entries.emplace_back(w, m);
    out.total += m;
  }
  Int expect = weyl_dimension_factor(type, rank, hw);
  if (Int(out.total) != expect)
    fail("irrep_weight_multiset: weight count ", out.total, " != Weyl dimension ",
         expect.get_str(), " for ", factor_name({type, rank}), " hw ", vi_str(hw));
  return out;
}

}  // namespace

const WeightMultiset& irrep_weight_multiset(char type, int rank, const VecI& hw_omega) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<WeightMultiset>> cache;
  std::string key = std::string(1, type) + std::to_string(rank) + ":" + vi_str(hw_omega);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  auto w = std::make_unique<WeightMultiset>(compute_weight_multiset(type, rank, hw_omega));
  const WeightMultiset& ref = *w;
  cache.emplace(key, std::move(w));
  return ref;
}

std::vector<VecI> weyl_orbit_of_weight(char type, int rank, const VecI& weight_omega) {
  const RootSystem& rs = build_root_system(type, rank);
  std::unordered_set<VecI, VecIHash> seen{weight_omega};
  std::vector<VecI> frontier{weight_omega}, all{weight_omega};
  while (!frontier.empty()) {
    std::vector<VecI> next;
    for (const VecI& w : frontier) {
      for (int i = 0; i < rank; ++i) {
        VecI r = w;
        for (int j = 0; j < rank; ++j) r[j] -= w[i] * rs.cartan[i][j];
        if (seen.insert(r).second) {
          next.push_back(r);
          all.push_back(r);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

// --------------------------------------------------- diagram classification

namespace {

std::vector<int> chain_order(const std::vector<int>& nodes,
                             const std::function<bool(int, int)>& adj, int start) {
  std::vector<int> out{start};
  int prev = -1, cur = start;
  while (static_cast<int>(out.size()) < static_cast<int>(nodes.size())) {
    int nxt = -1;
    for (int v : nodes)
      if (v != prev && v != cur && adj(cur, v)) nxt = v;
    if (nxt < 0) fail("classify_diagram: broken chain");
    out.push_back(nxt);
    prev = cur;
    cur = nxt;
  }
  return out;
}

}  // namespace

std::vector<DiagramComponent> classify_diagram(int n, const std::function<int(int, int)>& cart,
                                               const std::function<Rat(int)>& len) {
  auto adj = [&](int i, int j) { return i != j && cart(i, j) != 0; };
  std::vector<int> comp_of(n, -1);
  std::vector<std::vector<int>> comps;
  for (int i = 0; i < n; ++i) {
    if (comp_of[i] >= 0) continue;
    std::vector<int> stack{i}, members;
    comp_of[i] = static_cast<int>(comps.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int u = 0; u < n; ++u)
        if (adj(v, u) && comp_of[u] < 0) {
          comp_of[u] = comp_of[i];
          stack.push_back(u);
        }
    }
    std::sort(members.begin(), members.end());
    comps.push_back(members);
  }

  std::vector<DiagramComponent> out;
  for (const auto& nodes : comps) {
    const int r = static_cast<int>(nodes.size());
    if (r == 1) {
      out.push_back({'A', 1, nodes});
      continue;
    }
    int max_bond = 1;
    for (int a : nodes)
      for (int b : nodes)
        if (adj(a, b)) max_bond = std::max(max_bond, cart(a, b) * cart(b, a));
    Rat maxlen = len(nodes[0]);
    for (int a : nodes) maxlen = std::max(maxlen, len(a));
    std::vector<int> shorts, longs;
    for (int a : nodes) (len(a) < maxlen ? shorts : longs).push_back(a);

    if (max_bond >= 3) {
      if (r != 2) fail("classify_diagram: triple bond in component of size ", r);
      // G2 with the short root first
      std::vector<int> ord = nodes;
      if (len(ord[0]) > len(ord[1])) std::swap(ord[0], ord[1]);
      out.push_back({'G', 2, ord});
      continue;
    }
    if (max_bond == 2) {
      std::vector<int> deg(n, 0);
      for (int a : nodes)
        for (int b : nodes)
          if (adj(a, b)) ++deg[a];
      std::vector<int> ends;
      for (int a : nodes)
        if (deg[a] == 1) ends.push_back(a);
      if (ends.size() != 2) fail("classify_diagram: non-chain multiply-laced component");
      if (static_cast<int>(shorts.size()) == 1 && r >= 2) {
        // B_r: chain ending at the unique short node
        int start = (ends[0] == shorts[0]) ? ends[1] : ends[0];
        out.push_back({'B', r, chain_order(nodes, adj, start)});
      } else if (static_cast<int>(longs.size()) == 1) {
        // C_r: chain ending at the unique long node
        int start = (ends[0] == longs[0]) ? ends[1] : ends[0];
        out.push_back({'C', r, chain_order(nodes, adj, start)});
      } else if (r == 4 && shorts.size() == 2 && longs.size() == 2) {
        int start = (len(ends[0]) == maxlen) ? ends[0] : ends[1];
        out.push_back({'F', 4, chain_order(nodes, adj, start)});
      } else {
        fail("classify_diagram: unrecognised multiply-laced component");
      }
      continue;
    }

    // simply laced
    std::vector<int> deg(n, 0);
    int center = -1;
    for (int a : nodes) {
      for (int b : nodes)
        if (adj(a, b)) ++deg[a];
      if (deg[a] == 3) center = a;
      if (deg[a] > 3) fail("classify_diagram: node of degree > 3");
    }
    if (center < 0) {
      std::vector<int> ends;
      for (int a : nodes)
        if (deg[a] == 1) ends.push_back(a);
      out.push_back({'A', r, chain_order(nodes, adj, std::min(ends[0], ends[1]))});
      continue;
    }
    // three branches from the center
    std::vector<std::vector<int>> branches;  // each ordered center-outward
    for (int b : nodes) {
      if (!adj(center, b)) continue;
      std::vector<int> br{b};
      int prev = center, cur = b;
      while (true) {
        int nxt = -1;
        for (int v : nodes)
          if (v != prev && adj(cur, v)) nxt = v;
        if (nxt < 0) break;
        br.push_back(nxt);
        prev = cur;
        cur = nxt;
      }
      branches.push_back(br);
    }
    if (branches.size() != 3) fail("classify_diagram: branch count != 3");
    std::sort(branches.begin(), branches.end(), [](const auto& x, const auto& y) {
      if (x.size() != y.size()) return x.size() < y.size();
      return x.back() < y.back();
    });
    const size_t l0 = branches[0].size(), l1 = branches[1].size(), l2 = branches[2].size();
    if (l0 == 1 && l1 == 1) {
      // D_r: alpha_1..alpha_{r-2} along the long branch, leaves last.
      // For D_4 all branches tie; the sort already fixed a deterministic pick.
      std::vector<int> ord(branches[2].rbegin(), branches[2].rend());
      ord.push_back(center);
      int a = branches[0][0], b = branches[1][0];
      ord.push_back(std::min(a, b));
      ord.push_back(std::max(a, b));
      out.push_back({'D', r, ord});
    } else if (l0 == 1 && l1 == 2 && l2 >= 2 && l2 <= 4) {
      // E_r: alpha_2 = short leaf, alpha_1/alpha_3 = two-branch, tail = 5,6,..
      std::vector<int> ord;
      ord.push_back(branches[1][1]);  // alpha_1
      ord.push_back(branches[0][0]);  // alpha_2
      ord.push_back(branches[1][0]);  // alpha_3
      ord.push_back(center);          // alpha_4
      for (int v : branches[2]) ord.push_back(v);
      out.push_back({'E', r, ord});
    } else {
      fail("classify_diagram: not a finite-type branching");
    }
  }
  std::sort(out.begin(), out.end(), [](const DiagramComponent& a, const DiagramComponent& b) {
    return a.nodes < b.nodes;
  });
  return out;
}

}  // namespace dfv
