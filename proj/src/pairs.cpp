// Symmetric pairs: involution presentations, restricted-root data, Levi
// intersections on the K side, theta-stable enlargements and M-parts.
//
// Everything here is derived from the diagram involution + painted nodes by
// exact arithmetic; every structural claim that the derivation relies on is
// asserted at build time and fails loudly if violated.

#include "dfv/pairs.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pairs_internal.hpp"

namespace dfv {

namespace {

uint32_t support_mask(const VecI& v) {
  if (v.size() > 32) fail("support_mask: vector too long (", v.size(), ")");
  uint32_t m = 0;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) m |= (1u << i);
  return m;
}

bool mask_subset(uint32_t a, uint32_t b) { return (a & ~b) == 0; }

VecI vec_add(const VecI& a, const VecI& b) {
  VecI r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

int vec_height(const VecI& v) {
  int h = 0;
  for (int x : v) h += x;
  return h;
}

// Indecomposable elements of a finite set of vectors: w is decomposable iff
// w = u + v for some u, v in the set.
std::vector<VecI> indecomposables(const std::vector<VecI>& vecs) {
  std::set<VecI> all(vecs.begin(), vecs.end());
  std::vector<VecI> out;
  for (const VecI& w : vecs) {
    bool decomp = false;
    for (const VecI& u : vecs) {
      VecI v(w.size());
      bool ok = true;
      for (size_t i = 0; i < w.size(); ++i) {
        v[i] = w[i] - u[i];
        if (u[i] > w[i]) ok = false;
      }
      if (!ok || vq_is_zero(to_vecq(v))) continue;
      if (all.count(v)) {
        decomp = true;
        break;
      }
    }
    if (!decomp) out.push_back(w);
  }
  return out;
}

ReductiveAlgebra classify_standard(char type, int rank) {
  const RootSystem& rs = build_root_system(type, rank);
  auto comps = classify_diagram(
      rank, [&](int i, int j) { return rs.cartan[i][j]; },
      [&](int i) { return rs.d[i]; });
  ReductiveAlgebra a;
  for (const auto& c : comps) a.add_factor(c.type, c.rank);
  return a;
}

}  // namespace

ReductiveAlgebra alg_center(int dim) {
  ReductiveAlgebra a;
  a.center_dim = dim;
  return a;
}

ReductiveAlgebra alg_sum(ReductiveAlgebra a, const ReductiveAlgebra& b) {
  for (const auto& f : b.factors) a.add_factor(f.type, f.rank);
  a.center_dim += b.center_dim;
  return a;
}

ReductiveAlgebra alg_sl(int m) {
  if (m <= 1) return {};
  return classify_standard('A', m - 1);
}

ReductiveAlgebra alg_so(int m) {
  ReductiveAlgebra a;
  if (m <= 1) return a;
  if (m == 2) return alg_center(1);
  if (m == 3) {
    a.add_factor('A', 1);
    return a;
  }
  if (m == 4) {
    a.add_factor('A', 1);
    a.add_factor('A', 1);
    return a;
  }
  if (m == 6) {
    a.add_factor('A', 3);
    return a;
  }
  if (m % 2 == 1) return classify_standard('B', (m - 1) / 2);
  return classify_standard('D', m / 2);
}

ReductiveAlgebra alg_sp(int m) {
  ReductiveAlgebra a;
  if (m <= 0) return a;
  if (m == 1) {
    a.add_factor('A', 1);
    return a;
  }
  return classify_standard('C', m);
}

VecI sigma_apply(const VoganDiagram& vd, const VecI& v) {
  VecI out(v.size(), 0);
  for (size_t i = 0; i < v.size(); ++i) out[vd.node_involution[i]] = v[i];
  return out;
}

VecI doubled_restriction(const VoganDiagram& vd, const VecI& v) {
  return vec_add(v, sigma_apply(vd, v));
}

std::optional<VecQ> solve_in_basis(const std::vector<VecI>& columns,
                                   const VecI& target) {
  if (columns.empty()) return std::nullopt;
  size_t n = columns[0].size();
  size_t m = columns.size();
  // Augmented matrix [columns | target], Gaussian elimination.
  std::vector<VecQ> aug(n, VecQ(m + 1, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < m; ++j) aug[i][j] = Rat(columns[j][i]);
    aug[i][m] = Rat(target[i]);
  }
  std::vector<int> pivot_row_of_col(m, -1);
  size_t prow = 0;
  for (size_t c = 0; c < m && prow < n; ++c) {
    size_t sel = prow;
    while (sel < n && aug[sel][c] == 0) ++sel;
    if (sel == n) continue;  // dependent column
    std::swap(aug[sel], aug[prow]);
    Rat inv = 1 / aug[prow][c];
    for (size_t j = c; j <= m; ++j) aug[prow][j] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == prow || aug[r][c] == 0) continue;
      Rat f = aug[r][c];
      for (size_t j = c; j <= m; ++j) aug[r][j] -= f * aug[prow][j];
    }
    pivot_row_of_col[c] = static_cast<int>(prow);
    ++prow;
  }
  // Consistency: rows beyond the pivots must have zero RHS.
  for (size_t r = prow; r < n; ++r)
    if (aug[r][m] != 0) return std::nullopt;
  // Any column without a pivot would make the solution non-unique; the basis
  // sets used here are independent, so treat that as "no (canonical) solution".
  VecQ x(m, Rat(0));
  for (size_t c = 0; c < m; ++c) {
    if (pivot_row_of_col[c] < 0) {
      // Dependent generating set: refuse rather than pick arbitrarily.
      return std::nullopt;
    }
    x[c] = aug[pivot_row_of_col[c]][m];
  }
  return x;
}

// Sign of the pinned lift of the diagram automorphism on the root spaces of
// automorphism-fixed roots.  It is uniform over the fixed roots of one
// diagram: -1 exactly for the flip of A_{2m} (computed in the matrix model
// with the alternating pinning; forces so_{2m+1} to come out as the fixed
// subalgebra), +1 for A_{2m-1}, for the last-two-node swap of D_n (the lift is
// conjugation by a reflection that leaves those root spaces alone), and for
// the flip of E6 (whose pinned involution famously fixes exactly f4).
int fixed_root_sign(const RootSystem& rs, const VecI& sigma) {
  bool trivial = true;
  for (size_t i = 0; i < sigma.size(); ++i)
    if (sigma[i] != static_cast<int>(i)) trivial = false;
  if (trivial) return +1;
  if (rs.type == 'A' && (rs.rank + 1) % 2 == 1) return -1;
  return +1;
}

namespace {

// ---------------------------------------------------------------------------
// Presentation derivation
// ---------------------------------------------------------------------------

struct DerivedLines {
  std::vector<VecI> k_lines;
  std::vector<VecI> p_lines;
  std::vector<std::vector<int>> k_fibers;  // positive-root indices per k-line
};

DerivedLines derive_lines(const RootSystem& rs, const VoganDiagram& vd) {
  DerivedLines out;
  int fsign = fixed_root_sign(rs, vd.node_involution);
  std::map<VecI, int> pos_index;
  for (size_t i = 0; i < rs.positive_roots.size(); ++i)
    pos_index[rs.positive_roots[i]] = static_cast<int>(i);
  std::map<VecI, int> kline_of, pline_of;
  for (size_t idx = 0; idx < rs.positive_roots.size(); ++idx) {
    const VecI& r = rs.positive_roots[idx];
    VecI sr = sigma_apply(vd, r);
    if (!rs.is_positive_root(sr))
      fail("presentation: involution does not permute positive roots at ",
           vi_str(r));
    VecI dbl = vec_add(r, sr);
    if (sr == r) {
      long psum = 0;
      for (int p : vd.painted) psum += r[p];
      bool compact = ((psum % 2 == 0) == (fsign > 0));
      if (compact) {
        if (kline_of.count(dbl))
          fail("presentation: repeated compact restricted root ", vi_str(dbl));
        kline_of[dbl] = static_cast<int>(out.k_lines.size());
        out.k_lines.push_back(dbl);
        out.k_fibers.push_back({static_cast<int>(idx)});
      } else {
        if (pline_of.count(dbl))
          fail("presentation: repeated noncompact restricted root ",
               vi_str(dbl));
        pline_of[dbl] = static_cast<int>(out.p_lines.size());
        out.p_lines.push_back(dbl);
      }
    } else if (r < sr) {
      // A two-element involution orbit contributes one compact and one
      // noncompact line at the same restricted weight.
      if (kline_of.count(dbl))
        fail("presentation: repeated compact restricted root ", vi_str(dbl));
      if (pline_of.count(dbl))
        fail("presentation: repeated noncompact restricted root ",
             vi_str(dbl));
      kline_of[dbl] = static_cast<int>(out.k_lines.size());
      out.k_lines.push_back(dbl);
      out.k_fibers.push_back({static_cast<int>(idx), pos_index.at(sr)});
      pline_of[dbl] = static_cast<int>(out.p_lines.size());
      out.p_lines.push_back(dbl);
    }
  }
  return out;
}

// Choose the catalog ordering of the simple restricted roots so that the
// classified components appear in the declared block order.
std::vector<VecI> order_betas(std::vector<VecI> betas,
                              const std::vector<ReductiveAlgebra>& blocks,
                              const RootSystem& rs,
                              const std::string& pname) {
  // Deterministic base ordering.
  std::sort(betas.begin(), betas.end(), [&](const VecI& a, const VecI& b) {
    int ha = vec_height(a), hb = vec_height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  size_t m = betas.size();
  auto comps = classify_diagram(
      static_cast<int>(m),
      [&](int i, int j) {
        Rat num = 2 * rs.inner(betas[i], betas[j]);
        Rat den = rs.inner(betas[j], betas[j]);
        Rat q = num / den;
        if (q.get_den() != 1)
          fail("restricted Cartan entry not integral in ", pname);
        return static_cast<int>(q.get_num().get_si());
      },
      [&](int i) -> Rat { return rs.inner(betas[i], betas[i]) / 2; });
  std::vector<bool> used(comps.size(), false);
  std::vector<VecI> ordered;
  for (const auto& block : blocks) {
    for (const auto& f : block.factors) {
      int best = -1;
      int best_min = 1 << 30;
      for (size_t c = 0; c < comps.size(); ++c) {
        if (used[c]) continue;
        if (comps[c].type != f.type || comps[c].rank != f.rank) continue;
        int mn = *std::min_element(comps[c].nodes.begin(),
                                   comps[c].nodes.end());
        if (mn < best_min) {
          best_min = mn;
          best = static_cast<int>(c);
        }
      }
      if (best < 0)
        fail("presentation ", pname, ": no component matches expected factor ",
             factor_name(f));
      used[best] = true;
      for (int node : comps[best].nodes) ordered.push_back(betas[node]);
    }
  }
  for (size_t c = 0; c < comps.size(); ++c)
    if (!used[c])
      fail("presentation ", pname,
           ": derived component not covered by expected blocks");
  if (ordered.size() != m) fail("presentation ", pname, ": ordering lost roots");
  return ordered;
}

Presentation derive_presentation(const PresentationSpec& ps) {
  const RootSystem& rs = build_root_system(ps.type, ps.rank);
  int n = ps.rank;
  Presentation P;
  P.name = ps.name;
  P.vd.rs = &rs;
  if (ps.sigma.empty()) {
    P.vd.node_involution.resize(n);
    for (int i = 0; i < n; ++i) P.vd.node_involution[i] = i;
  } else {
    P.vd.node_involution = ps.sigma;
  }
  const VecI& sig = P.vd.node_involution;
  if (static_cast<int>(sig.size()) != n)
    fail("presentation ", ps.name, ": involution has wrong size");
  for (int i = 0; i < n; ++i) {
    if (sig[i] < 0 || sig[i] >= n || sig[sig[i]] != i)
      fail("presentation ", ps.name, ": node map is not an involution");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.cartan[sig[i]][sig[j]] != rs.cartan[i][j])
        fail("presentation ", ps.name,
             ": node map is not a diagram automorphism");
  P.vd.painted = ps.painted;
  std::sort(P.vd.painted.begin(), P.vd.painted.end());
  for (size_t i = 0; i < P.vd.painted.size(); ++i) {
    int p = P.vd.painted[i];
    if (p < 0 || p >= n) fail("presentation ", ps.name, ": painted node range");
    if (sig[p] != p)
      fail("presentation ", ps.name, ": painted node not fixed by involution");
    if (i > 0 && P.vd.painted[i] == P.vd.painted[i - 1])
      fail("presentation ", ps.name, ": repeated painted node");
  }

  DerivedLines L = derive_lines(rs, P.vd);
  PresentationData& d = P.data;
  d.k_lines = L.k_lines;
  d.p_lines = L.p_lines;
  d.num_node_orbits = 0;
  for (int i = 0; i < n; ++i)
    if (sig[i] >= i) ++d.num_node_orbits;

  // Simple restricted roots on the compact side.
  std::vector<VecI> auto_betas = indecomposables(d.k_lines);
  if (!ps.beta_exprs.empty()) {
    for (const VecI& e : ps.beta_exprs) {
      if (!rs.is_positive_root(e))
        fail("presentation ", ps.name, ": declared representative ", vi_str(e),
             " is not a positive root");
      d.beta_doubled.push_back(doubled_restriction(P.vd, e));
    }
    std::set<VecI> a(auto_betas.begin(), auto_betas.end());
    std::set<VecI> b(d.beta_doubled.begin(), d.beta_doubled.end());
    if (a != b)
      fail("presentation ", ps.name,
           ": declared simple restricted roots disagree with the derived set");
    P.beta_exprs = ps.beta_exprs;
  } else {
    d.beta_doubled = order_betas(auto_betas, ps.expected_blocks, rs, ps.name);
    // Representative: the fiber root of minimal (height, lex) order.
    for (const VecI& bd : d.beta_doubled) {
      VecI best;
      for (const VecI& r : rs.positive_roots) {
        if (doubled_restriction(P.vd, r) != bd) continue;
        if (best.empty() || rs.height(r) < rs.height(best) ||
            (rs.height(r) == rs.height(best) && r < best))
          best = r;
      }
      if (best.empty())
        fail("presentation ", ps.name, ": no representative for ",
             vi_str(bd));
      P.beta_exprs.push_back(best);
    }
  }
  size_t m = d.beta_doubled.size();

  // Independence of the simple restricted roots.
  {
    MatQ B(n, static_cast<int>(m));
    for (int i = 0; i < n; ++i) {
      VecQ row(m, Rat(0));
      for (size_t j = 0; j < m; ++j) row[j] = Rat(d.beta_doubled[j][i]);
      B.set_row(i, row);
    }
    if (rank_bareiss(B) != m)
      fail("presentation ", ps.name, ": simple restricted roots dependent");
  }

  // Every compact line is a nonnegative integral combination of the betas.
  for (const VecI& line : d.k_lines) {
    auto x = solve_in_basis(d.beta_doubled, line);
    if (!x) fail("presentation ", ps.name, ": line outside the beta lattice");
    VecI coeffs(m, 0);
    for (size_t j = 0; j < m; ++j) {
      if ((*x)[j].get_den() != 1 || (*x)[j] < 0)
        fail("presentation ", ps.name,
             ": line expansion not a nonnegative integer combination");
      coeffs[j] = static_cast<int>((*x)[j].get_num().get_si());
    }
    d.kroot_beta.push_back(coeffs);
  }

  // Fibers and masks.
  std::map<VecI, int> line_index;
  for (size_t i = 0; i < d.k_lines.size(); ++i) line_index[d.k_lines[i]] = (int)i;
  d.fiber_of_line = L.k_fibers;
  for (const VecI& bd : d.beta_doubled) {
    auto it = line_index.find(bd);
    if (it == line_index.end())
      fail("presentation ", ps.name, ": beta is not a compact line");
    d.fiber_of_beta.push_back(d.fiber_of_line[it->second]);
  }
  for (const auto& fib : d.fiber_of_line) {
    uint32_t mk = 0;
    for (int idx : fib) mk |= support_mask(rs.positive_roots[idx]);
    d.line_fiber_mask.push_back(mk);
  }
  for (const auto& fib : d.fiber_of_beta) {
    uint32_t mk = 0;
    for (int idx : fib) mk |= support_mask(rs.positive_roots[idx]);
    d.beta_fiber_mask.push_back(mk);
  }
  for (const VecI& coeffs : d.kroot_beta) d.line_beta_mask.push_back(support_mask(coeffs));

  // Cartan matrix of the restricted system (must be integral).
  for (size_t i = 0; i < m; ++i) {
    VecI row(m, 0);
    for (size_t j = 0; j < m; ++j) {
      Rat q = 2 * rs.inner(d.beta_doubled[i], d.beta_doubled[j]) /
              rs.inner(d.beta_doubled[j], d.beta_doubled[j]);
      if (q.get_den() != 1)
        fail("presentation ", ps.name, ": restricted Cartan entry not integral");
      row[j] = static_cast<int>(q.get_num().get_si());
    }
    d.kcartan.push_back(row);
  }
  return P;
}

ReductiveAlgebra classify_presentation_k(const Presentation& P,
                                         const RootSystem& rs) {
  const PresentationData& d = P.data;
  size_t m = d.beta_doubled.size();
  auto comps = classify_diagram(
      static_cast<int>(m), [&](int i, int j) { return d.kcartan[i][j]; },
      [&](int i) -> Rat { return rs.inner(d.beta_doubled[i], d.beta_doubled[i]) / 2; });
  ReductiveAlgebra a;
  std::set<int> seen;
  for (const auto& c : comps) {
    a.add_factor(c.type, c.rank);
    // Catalog ordering: each component occupies a contiguous block of labels
    // (the order within a block may differ from the classification order, e.g.
    // a rank-3 orthogonal block enumerated fork-first).
    int lo = *std::min_element(c.nodes.begin(), c.nodes.end());
    int hi = *std::max_element(c.nodes.begin(), c.nodes.end());
    if (hi - lo + 1 != static_cast<int>(c.nodes.size()))
      fail("presentation ", P.name,
           ": component labels are not contiguous in catalog order");
    for (int t : c.nodes) seen.insert(t);
  }
  if (seen.size() != m) fail("presentation ", P.name, ": classification lost nodes");
  a.center_dim = d.num_node_orbits - static_cast<int>(m);
  if (a.center_dim < 0)
    fail("presentation ", P.name, ": negative center dimension");
  return a;
}

}  // namespace

SymmetricPair build_pair_from_spec(const PairSpec& spec) {
  SymmetricPair sp;
  sp.family = spec.family;
  sp.params = spec.params;
  sp.name = spec.name;
  sp.hermitian = spec.hermitian;
  sp.hermitian_node = spec.hermitian_node;
  sp.msplit_rule_valid = spec.msplit;
  sp.recipe = spec.recipe;
  sp.mpart_table = spec.mpart_table;
  if (spec.presentations.empty()) fail("pair ", spec.name, ": no presentations");
  char type0 = spec.presentations[0].type;
  int rank0 = spec.presentations[0].rank;
  for (const auto& ps : spec.presentations) {
    if (ps.type != type0 || ps.rank != rank0)
      fail("pair ", spec.name, ": presentations with different ambient types");
    sp.presentations.push_back(derive_presentation(ps));
  }
  const RootSystem& rs = build_root_system(type0, rank0);
  sp.rank_g = rank0;
  sp.dim_g = rs.dim_algebra();

  bool first = true;
  for (const auto& P : sp.presentations) {
    ReductiveAlgebra a = classify_presentation_k(P, rs);
    int rank_k = P.data.num_node_orbits;
    if (a.rank() != rank_k)
      fail("pair ", spec.name, ": rank bookkeeping failed in ", P.name);
    Int dim_k = Int(rank_k) + 2 * Int(P.data.k_lines.size());
    if (a.dim() != dim_k)
      fail("pair ", spec.name, ": fixed-subalgebra dimension mismatch in ",
           P.name, " (classified ", a.name(), " = ", a.dim(), ", counted ",
           dim_k.get_str(), ")");
    Int lhs = 2 * Int(P.data.p_lines.size()) + Int(sp.rank_g - rank_k);
    if (lhs != sp.dim_g - dim_k)
      fail("pair ", spec.name, ": odd-part dimension mismatch in ", P.name);
    if (first) {
      sp.k_algebra = a;
      sp.rank_k = rank_k;
      sp.dim_k = dim_k;
      first = false;
    } else {
      if (!(a == sp.k_algebra) || rank_k != sp.rank_k)
        fail("pair ", spec.name,
             ": presentations disagree on the fixed subalgebra");
    }
  }
  if (!(sp.k_algebra == spec.expected_k))
    fail("pair ", spec.name, ": derived fixed subalgebra ", sp.k_algebra.name(),
         " differs from the declared ", spec.expected_k.name());
  if (sp.hermitian != (sp.k_algebra.center_dim == 1))
    fail("pair ", spec.name, ": Hermitian flag inconsistent with center");
  if (sp.hermitian) {
    if (sp.hermitian_node < 0 || sp.hermitian_node >= sp.rank_g)
      fail("pair ", spec.name, ": missing cominuscule node");
    const Presentation& P0 = sp.presentations[0];
    if (P0.vd.painted != VecI{sp.hermitian_node})
      fail("pair ", spec.name, ": cominuscule node must be the painted node");
    size_t levi_count = 0;
    for (const VecI& r : rs.positive_roots)
      if (r[sp.hermitian_node] == 0) ++levi_count;
    if (levi_count != P0.data.k_lines.size())
      fail("pair ", spec.name,
           ": fixed subalgebra is not the Levi of the cominuscule node");
  }
  return sp;
}

namespace {

struct Registry {
  std::vector<PairFamily> families;
  std::map<std::string, std::function<SymmetricPair(const std::vector<int>&)>>
      builders;
};

Registry& registry() {
  static Registry* r = [] {
    auto* reg = new Registry;
    register_catalog(reg->families, reg->builders);
    return reg;
  }();
  return *r;
}

std::mutex g_pair_mutex;

}  // namespace

const std::vector<PairFamily>& catalog() { return registry().families; }

const SymmetricPair& get_pair(const std::string& family,
                              const std::vector<int>& params) {
  std::lock_guard<std::mutex> lock(g_pair_mutex);
  static std::map<std::pair<std::string, std::vector<int>>,
                  std::unique_ptr<SymmetricPair>>
      cache;
  auto key = std::make_pair(family, params);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  Registry& reg = registry();
  auto bit = reg.builders.find(family);
  if (bit == reg.builders.end()) {
    std::ostringstream os;
    for (const auto& f : reg.families) os << " " << f.id;
    fail("unknown pair family '", family, "' (known:", os.str(), ")");
  }
  for (const auto& f : reg.families) {
    if (f.id != family) continue;
    if (static_cast<int>(params.size()) != f.num_params)
      fail("family ", family, " expects ", f.num_params, " parameter(s)");
    std::string msg = f.check(params);
    if (!msg.empty()) fail("family ", family, ": ", msg);
  }
  auto built = std::make_unique<SymmetricPair>(bit->second(params));
  const SymmetricPair& ref = *built;
  cache.emplace(std::move(key), std::move(built));
  return ref;
}

PairDims dims(const SymmetricPair& pair) {
  PairDims d;
  d.dim_g = pair.dim_g;
  d.dim_k = pair.dim_k;
  d.rank_g = pair.rank_g;
  d.rank_k = pair.rank_k;
  return d;
}

LeviIntersection levi_intersection(const SymmetricPair& pair,
                                   const ParabolicSpec& spec,
                                   int presentation) {
  if (spec.side != ParabolicSpec::GSide)
    fail("levi_intersection expects an ambient-side parabolic");
  if (presentation < 0 ||
      presentation >= static_cast<int>(pair.presentations.size()))
    fail("levi_intersection: presentation index out of range");
  const Presentation& P = pair.presentations[presentation];
  const RootSystem& rs = pair.rs();
  uint32_t full = (pair.rank_g >= 32) ? ~0u : ((1u << pair.rank_g) - 1);
  uint32_t removed_mask = 0;
  for (int i : spec.removed) {
    if (i < 0 || i >= pair.rank_g)
      fail("levi_intersection: removed node ", i, " out of range");
    removed_mask |= (1u << i);
  }
  uint32_t jmask = full & ~removed_mask;

  const PresentationData& d = P.data;
  size_t m = d.beta_doubled.size();
  LeviIntersection out;
  uint32_t jk_mask = 0;
  for (size_t b = 0; b < m; ++b) {
    if (mask_subset(d.beta_fiber_mask[b], jmask)) {
      out.j_k.push_back(static_cast<int>(b));
      jk_mask |= (1u << b);
    }
  }
  // The compact intersection must itself be the Levi generated by j_k.
  for (size_t l = 0; l < d.k_lines.size(); ++l) {
    bool in_j = mask_subset(d.line_fiber_mask[l], jmask);
    bool in_span = mask_subset(d.line_beta_mask[l], jk_mask);
    if (in_j != in_span)
      fail("levi_intersection: intersection with the fixed subalgebra is not "
           "the expected Levi (pair ", pair.name, ", presentation ", P.name,
           ")");
  }
  auto comps = classify_diagram(
      static_cast<int>(out.j_k.size()),
      [&](int i, int j) { return d.kcartan[out.j_k[i]][out.j_k[j]]; },
      [&](int i) -> Rat {
        const VecI& b = d.beta_doubled[out.j_k[i]];
        return rs.inner(b, b) / 2;
      });
  for (const auto& c : comps) out.algebra.add_factor(c.type, c.rank);
  out.algebra.center_dim = pair.rank_k - static_cast<int>(out.j_k.size());
  return out;
}

std::vector<VecI> k_roots_in_span(const SymmetricPair& pair, int presentation,
                                  const VecI& jk) {
  const Presentation& P = pair.presentations.at(presentation);
  uint32_t jk_mask = 0;
  for (int b : jk) jk_mask |= (1u << b);
  std::vector<VecI> out;
  for (size_t l = 0; l < P.data.k_lines.size(); ++l)
    if (mask_subset(P.data.line_beta_mask[l], jk_mask))
      out.push_back(P.data.kroot_beta[l]);
  return out;
}

namespace {

// Check that removing `removed_g` (ambient nodes) in presentation `pres`
// induces exactly the compact Levi `target_jk` (a sorted list of beta labels).
bool round_trip_matches(const SymmetricPair& pair, int pres,
                        const VecI& removed_g, const VecI& target_jk) {
  ParabolicSpec gs{ParabolicSpec::GSide, removed_g};
  LeviIntersection li = levi_intersection(pair, gs, pres);
  return li.j_k == target_jk;
}

bool sigma_stable_subset(const Presentation& P, uint32_t keep_mask, int n) {
  for (int i = 0; i < n; ++i) {
    bool in = (keep_mask >> i) & 1u;
    bool sin = (keep_mask >> P.vd.node_involution[i]) & 1u;
    if (in != sin) return false;
  }
  return true;
}

}  // namespace

RecipeResult theta_stable_parabolic_for(const SymmetricPair& pair,
                                        const ParabolicSpec& spec) {
  if (spec.side != ParabolicSpec::KSide)
    fail("theta_stable_parabolic_for expects a compact-side parabolic");
  size_t m = pair.presentations[0].data.beta_doubled.size();
  VecI removed = spec.removed;
  std::sort(removed.begin(), removed.end());
  for (int b : removed)
    if (b < 0 || b >= static_cast<int>(m))
      fail("theta_stable_parabolic_for: removed label out of range");
  VecI target_jk;
  {
    std::set<int> rem(removed.begin(), removed.end());
    for (int b = 0; b < static_cast<int>(m); ++b)
      if (!rem.count(b)) target_jk.push_back(b);
  }

  if (removed.empty()) {
    // Q = K itself: the whole group is the enlargement and its Levi is all
    // of the fixed subalgebra.
    RecipeResult rr;
    rr.presentation = 0;
    rr.removed_g = {};
    rr.kind = MKind::Identity;
    return rr;
  }

  if (pair.recipe) {
    auto rr = pair.recipe(removed);
    if (rr) {
      // Validate: the removed ambient set must be involution-stable and must
      // induce exactly the requested compact Levi.
      const Presentation& P = pair.presentations.at(rr->presentation);
      for (int i : rr->removed_g) {
        int si = P.vd.node_involution[i];
        if (std::find(rr->removed_g.begin(), rr->removed_g.end(), si) ==
            rr->removed_g.end())
          fail("catalog recipe for ", pair.name,
               " produced a non-stable ambient set");
      }
      if (!round_trip_matches(pair, rr->presentation, rr->removed_g, target_jk))
        fail("catalog recipe for ", pair.name,
             " fails its round trip at removed=", vi_str(removed));
      return *rr;
    }
  }

  // Fallback: search all presentations for a stable ambient Levi that induces
  // the requested compact Levi, preferring small removed sets.
  int n = pair.rank_g;
  if (n <= 24) {
    for (int pc = 1; pc <= n; ++pc) {
      for (int pres = 0; pres < static_cast<int>(pair.presentations.size());
           ++pres) {
        const Presentation& P = pair.presentations[pres];
        for (uint32_t rm = 1; rm < (1u << n); ++rm) {
          if (__builtin_popcount(rm) != pc) continue;
          uint32_t keep = ((1u << n) - 1) & ~rm;
          if (!sigma_stable_subset(P, keep, n)) continue;
          VecI removed_g;
          for (int i = 0; i < n; ++i)
            if ((rm >> i) & 1u) removed_g.push_back(i);
          if (round_trip_matches(pair, pres, removed_g, target_jk)) {
            RecipeResult rr;
            rr.presentation = pres;
            rr.removed_g = removed_g;
            rr.kind = MKind::FilterOnly;
            rr.encoded_id = "search";
            return rr;
          }
        }
      }
    }
  }
  fail("unsupported corner: no theta-stable enlargement known for ", pair.name,
       " with removed compact labels ", vi_str(removed),
       " (covered: catalog recipes plus exhaustive search up to rank 24)");
}

ReductiveAlgebra m_part(const SymmetricPair& pair, const ParabolicSpec& spec,
                        int presentation) {
  if (spec.side != ParabolicSpec::GSide)
    fail("m_part expects an ambient-side parabolic");
  const Presentation& P = pair.presentations.at(presentation);
  const RootSystem& rs = pair.rs();
  int n = pair.rank_g;
  VecI removed = spec.removed;
  std::sort(removed.begin(), removed.end());
  if (pair.mpart_table) {
    auto t = pair.mpart_table(presentation, removed);
    if (t) return *t;
  }
  uint32_t removed_mask = 0;
  for (int i : removed) removed_mask |= (1u << i);
  uint32_t jmask = ((n >= 32) ? ~0u : ((1u << n) - 1)) & ~removed_mask;

  bool sigma_id = true;
  for (int i = 0; i < n; ++i)
    if (P.vd.node_involution[i] != i) sigma_id = false;

  int fsign = fixed_root_sign(rs, P.vd.node_involution);
  if (sigma_id && pair.rank_g == pair.rank_k) {
    // Equal-rank case: if every root of the Levi is compact, the Levi lies in
    // the fixed subalgebra and is its own M-part.
    bool all_compact = true;
    for (const VecI& r : rs.positive_roots) {
      if (!mask_subset(support_mask(r), jmask)) continue;
      long psum = 0;
      for (int p : P.vd.painted) psum += r[p];
      if ((psum % 2 == 0) != (fsign > 0)) {
        all_compact = false;
        break;
      }
    }
    if (all_compact) {
      VecI keep;
      for (int i = 0; i < n; ++i)
        if ((jmask >> i) & 1u) keep.push_back(i);
      auto comps = classify_diagram(
          static_cast<int>(keep.size()),
          [&](int i, int j) { return rs.cartan[keep[i]][keep[j]]; },
          [&](int i) { return rs.d[keep[i]]; });
      ReductiveAlgebra a;
      for (const auto& c : comps) a.add_factor(c.type, c.rank);
      a.center_dim = pair.rank_g - static_cast<int>(keep.size());
      return a;
    }
  }

  if (pair.msplit_rule_valid) {
    // The split part of the torus is maximal for this pair, so the M-part is
    // spanned by the fixed compact roots supported on the Levi, plus center.
    std::vector<VecI> fixed_compact;
    for (const VecI& r : rs.positive_roots) {
      if (sigma_apply(P.vd, r) != r) continue;
      long psum = 0;
      for (int p : P.vd.painted) psum += r[p];
      if ((psum % 2 == 0) != (fsign > 0)) continue;
      if (!mask_subset(support_mask(r), jmask)) continue;
      fixed_compact.push_back(r);
    }
    std::vector<VecI> simples = indecomposables(fixed_compact);
    auto comps = classify_diagram(
        static_cast<int>(simples.size()),
        [&](int i, int j) {
          Rat q = 2 * rs.inner(simples[i], simples[j]) /
                  rs.inner(simples[j], simples[j]);
          if (q.get_den() != 1) fail("m_part: non-integral Cartan entry");
          return static_cast<int>(q.get_num().get_si());
        },
        [&](int i) -> Rat { return rs.inner(simples[i], simples[i]) / 2; });
    ReductiveAlgebra a;
    for (const auto& c : comps) a.add_factor(c.type, c.rank);
    a.center_dim = pair.rank_k - static_cast<int>(simples.size());
    if (a.center_dim < 0) fail("m_part: negative center");
    return a;
  }

  fail("unsupported corner: no M-part rule applies to ", pair.name,
       " at removed ambient nodes ", vi_str(removed),
       " (covered: tabulated cases, the equal-rank compact-Levi rule, and "
       "pairs with maximally split torus)");
}

std::string catalog_json() {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& fam : catalog()) {
    const SymmetricPair& sp = get_pair(fam.id, fam.sample);
    nlohmann::json jf;
    jf["id"] = fam.id;
    jf["display"] = fam.display;
    jf["num_params"] = fam.num_params;
    jf["sample_params"] = fam.sample;
    jf["sample"] = {{"name", sp.name},
                    {"ambient", std::string(1, sp.rs().type) +
                                    std::to_string(sp.rank_g)},
                    {"dim_g", sp.dim_g.get_str()},
                    {"dim_k", sp.dim_k.get_str()},
                    {"rank_g", sp.rank_g},
                    {"rank_k", sp.rank_k},
                    {"fixed_subalgebra", sp.k_algebra.name()},
                    {"hermitian", sp.hermitian}};
    nlohmann::json jps = nlohmann::json::array();
    for (const auto& P : sp.presentations) {
      nlohmann::json jp;
      jp["name"] = P.name;
      jp["involution"] = P.vd.node_involution;
      jp["painted"] = P.vd.painted;
      nlohmann::json roots = nlohmann::json::array();
      for (const VecI& e : P.beta_exprs) roots.push_back(e);
      jp["simple_restricted_root_reps"] = roots;
      jps.push_back(jp);
    }
    jf["sample"]["presentations"] = jps;
    arr.push_back(jf);
  }
  return arr.dump(2);
}

}  // namespace dfv
