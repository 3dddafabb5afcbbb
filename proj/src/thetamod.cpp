#include "dfv/thetamod.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "pairs_internal.hpp"

namespace dfv {

namespace {

VecI vec_add(const VecI& a, const VecI& b) {
  VecI out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

std::map<VecI, int> positive_index(const RootSystem& rs) {
  std::map<VecI, int> m;
  for (size_t i = 0; i < rs.positive_roots.size(); ++i)
    m[rs.positive_roots[i]] = static_cast<int>(i);
  return m;
}

// Pairing of a symmetrised weight with the coroot of the j-th simple
// restricted root; integral for every weight of the algebra.
int coroot_pairing(const RootSystem& rs, const VecI& v, const VecI& dbl) {
  Rat q = 2 * rs.inner(v, dbl) / rs.inner(dbl, dbl);
  if (q.get_den() != 1)
    fail("restricted weight pairing is not integral");
  return static_cast<int>(q.get_num().get_si());
}

// Symbolic name of one irreducible factor module, "" when unrecognised.
std::string factor_tag(char type, int rank, const VecI& hw) {
  auto unit = [&](int pos, int val) {
    for (int i = 0; i < rank; ++i)
      if (hw[i] != (i == pos ? val : 0)) return false;
    return true;
  };
  auto num = [](int n) { return std::to_string(n); };
  switch (type) {
    case 'A':
      if (unit(0, 1)) return "C" + num(rank + 1);
      if (rank >= 2 && unit(rank - 1, 1)) return "C" + num(rank + 1) + "*";
      if (unit(0, 2)) return "S2 C" + num(rank + 1);
      if (rank >= 2 && unit(rank - 1, 2)) return "S2 C" + num(rank + 1) + "*";
      if (rank >= 3 && unit(1, 1)) return "L2 C" + num(rank + 1);
      if (rank >= 4 && unit(rank - 2, 1)) return "L2 C" + num(rank + 1) + "*";
      if (rank == 5 && unit(2, 1)) return "L3 C6";
      break;
    case 'B':
      if (unit(0, 1)) return "C" + num(2 * rank + 1);
      if (unit(rank - 1, 1)) return "spin" + num(2 * rank + 1);
      break;
    case 'C':
      if (unit(0, 1)) return "C" + num(2 * rank);
      break;
    case 'D':
      if (unit(0, 1)) return "C" + num(2 * rank);
      if (unit(rank - 1, 1) || unit(rank - 2, 1)) return "hspin" + num(2 * rank);
      break;
    case 'G':
      if (unit(0, 1)) return "C7";
      break;
    case 'E':
      if (rank == 6 && (unit(0, 1) || unit(5, 1))) return "C27";
      if (rank == 7 && unit(6, 1)) return "C56";
      break;
    default:
      break;
  }
  return "";
}

}  // namespace

ThetaRoots theta_on_roots(const SymmetricPair& pair, int presentation) {
  const Presentation& P = pair.presentations.at(presentation);
  const RootSystem& rs = pair.rs();
  auto idx = positive_index(rs);
  int fsign = fixed_root_sign(rs, P.vd.node_involution);
  ThetaRoots out;
  out.image.resize(rs.positive_roots.size());
  out.fixed_sign.assign(rs.positive_roots.size(), 0);
  for (size_t i = 0; i < rs.positive_roots.size(); ++i) {
    const VecI& r = rs.positive_roots[i];
    VecI sr = sigma_apply(P.vd, r);
    auto it = idx.find(sr);
    if (it == idx.end())
      fail("involution does not permute the positive roots");
    out.image[i] = it->second;
    if (sr == r) {
      long psum = 0;
      for (int p : P.vd.painted) psum += r[p];
      bool compact = (psum % 2 == 0) == (fsign > 0);
      out.fixed_sign[i] = compact ? +1 : -1;
    }
  }
  return out;
}

std::vector<RestrictedWeight> nilrad_theta_weights(const SymmetricPair& pair,
                                                   const ParabolicSpec& j,
                                                   int presentation) {
  if (j.side != ParabolicSpec::GSide)
    fail("nilrad_theta_weights expects an ambient-side parabolic");
  const RootSystem& rs = pair.rs();
  int n = rs.rank;
  for (int t : j.removed)
    if (t < 0 || t >= n) fail("nilrad_theta_weights: node out of range");
  std::set<int> removed(j.removed.begin(), j.removed.end());
  auto in_nilrad = [&](const VecI& r) {
    for (int t : removed)
      if (r[t] > 0) return true;
    return false;
  };
  ThetaRoots th = theta_on_roots(pair, presentation);
  std::vector<RestrictedWeight> out;
  for (size_t i = 0; i < rs.positive_roots.size(); ++i) {
    const VecI& r = rs.positive_roots[i];
    if (!in_nilrad(r)) continue;
    int im = th.image[i];
    if (im == static_cast<int>(i)) {
      if (th.fixed_sign[i] < 0) {
        RestrictedWeight w;
        w.doubled = vec_add(r, r);
        w.sources = {static_cast<int>(i)};
        out.push_back(std::move(w));
      }
    } else if (im > static_cast<int>(i) &&
               in_nilrad(rs.positive_roots[im])) {
      RestrictedWeight w;
      w.doubled = vec_add(r, rs.positive_roots[im]);
      w.sources = {static_cast<int>(i), im};
      out.push_back(std::move(w));
    }
  }
  return out;
}

HWModule decompose(const SymmetricPair& pair, const ParabolicSpec& j,
                   int presentation) {
  const Presentation& P = pair.presentations.at(presentation);
  const RootSystem& rs = pair.rs();
  HWModule mod;
  mod.levi = levi_intersection(pair, j, presentation);
  const std::vector<VecI>& dbl = P.data.beta_doubled;
  const VecI& jk = mod.levi.j_k;
  int m = static_cast<int>(dbl.size());

  auto omega_full = [&](const VecI& v) {
    VecI o(m);
    for (int b = 0; b < m; ++b) o[b] = coroot_pairing(rs, v, dbl[b]);
    return o;
  };

  // Weight multiset, keyed by the symmetrised vector.
  std::map<VecI, long> pool;
  for (const auto& w : nilrad_theta_weights(pair, j, presentation))
    ++pool[w.doubled];

  // Basis of surviving simple restricted roots, for dominance tests.
  std::vector<VecI> jk_dbl;
  for (int b : jk) jk_dbl.push_back(dbl[b]);
  auto strictly_below = [&](const VecI& v, const VecI& w) {
    // v < w iff w - v is a nonzero nonnegative combination of jk_dbl.
    if (v == w || jk_dbl.empty()) return false;
    VecI diff(v.size());
    for (size_t t = 0; t < v.size(); ++t) diff[t] = w[t] - v[t];
    auto x = solve_in_basis(jk_dbl, diff);
    if (!x) return false;
    for (const Rat& c : *x)
      if (c < 0) return false;
    return true;
  };

  auto comps = classify_diagram(
      static_cast<int>(jk.size()),
      [&](int a, int b) { return P.data.kcartan[jk[a]][jk[b]]; },
      [&](int a) -> Rat { return rs.inner(dbl[jk[a]], dbl[jk[a]]) / 2; });

  // Canonical centre coordinates: restrict weights to one ambient coordinate
  // per node orbit of the fixed torus, echelonize the surviving simple
  // restricted roots there, and read the reduced residual off at the
  // non-pivot positions.  The residual is the canonical representative of the
  // weight's class modulo the root lattice of the acting factors, i.e. its
  // central character.
  std::vector<int> reps;
  for (size_t i = 0; i < P.vd.node_involution.size(); ++i)
    if (P.vd.node_involution[i] >= static_cast<int>(i))
      reps.push_back(static_cast<int>(i));
  std::vector<VecQ> ech;
  std::vector<size_t> piv_col;
  std::vector<bool> is_piv(reps.size(), false);
  auto reduce_row = [&](VecQ& row) {
    for (size_t r = 0; r < ech.size(); ++r) {
      Rat c = row[piv_col[r]] / ech[r][piv_col[r]];
      if (c == 0) continue;
      for (size_t t = 0; t < row.size(); ++t) row[t] -= c * ech[r][t];
    }
  };
  for (int b : jk) {
    VecQ row(reps.size());
    for (size_t t = 0; t < reps.size(); ++t) row[t] = dbl[b][reps[t]];
    reduce_row(row);
    size_t pc = 0;
    while (pc < row.size() && row[pc] == 0) ++pc;
    if (pc == row.size())
      fail("decompose: dependent simple restricted roots (", pair.name, ")");
    piv_col.push_back(pc);
    is_piv[pc] = true;
    ech.push_back(std::move(row));
  }
  std::vector<size_t> centre_cols;
  for (size_t t = 0; t < reps.size(); ++t)
    if (!is_piv[t]) centre_cols.push_back(t);
  if (static_cast<int>(centre_cols.size()) != mod.levi.algebra.center_dim)
    fail("decompose: centre coordinate count mismatch (", pair.name, ")");
  auto central_of = [&](const VecI& v) {
    VecQ row(reps.size());
    for (size_t t = 0; t < reps.size(); ++t) row[t] = v[reps[t]];
    reduce_row(row);
    VecQ out;
    for (size_t c : centre_cols) out.push_back(row[c]);
    return out;
  };

  while (!pool.empty()) {
    // Deterministic maximal-weight choice: among the dominance-maximal
    // elements take the lexicographically largest full omega vector.
    std::optional<VecI> pick;
    VecI pick_omega;
    for (const auto& [v, cnt] : pool) {
      (void)cnt;
      bool maximal = true;
      for (const auto& [w, cnt2] : pool) {
        (void)cnt2;
        if (strictly_below(v, w)) {
          maximal = false;
          break;
        }
      }
      if (!maximal) continue;
      VecI o = omega_full(v);
      if (!pick || o > pick_omega ||
          (o == pick_omega && v > *pick)) {
        pick = v;
        pick_omega = o;
      }
    }
    if (!pick) fail("decompose: no maximal weight in a nonempty pool");
    const VecI hw = *pick;

    for (int b : jk)
      if (coroot_pairing(rs, hw, dbl[b]) < 0)
        fail("decompose: maximal weight is not dominant for the Levi part (",
             pair.name, ")");

    // Expand the irreducible with this highest weight: per component, get the
    // weight multiset in fundamental coordinates and convert each weight to
    // root-descent coordinates by solving against the component Cartan rows.
    // Per-factor highest weights, then aligned with the sorted factor list of
    // the acting algebra (stable, so duplicate factors keep diagram order).
    std::vector<VecI> comp_hw(comps.size());
    std::vector<std::pair<SimpleFactor, VecI>> fh;
    for (size_t ci = 0; ci < comps.size(); ++ci) {
      const auto& comp = comps[ci];
      VecI hw_c(comp.rank);
      for (int t = 0; t < comp.rank; ++t)
        hw_c[t] = coroot_pairing(rs, hw, dbl[jk[comp.nodes[t]]]);
      comp_hw[ci] = hw_c;
      fh.push_back({{comp.type, comp.rank}, std::move(hw_c)});
    }
    std::stable_sort(fh.begin(), fh.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    const auto& facs = mod.levi.algebra.factors;
    if (fh.size() != facs.size())
      fail("decompose: factor count mismatch (", pair.name, ")");
    std::vector<VecI> factor_hw;
    for (size_t t = 0; t < fh.size(); ++t) {
      if (!(fh[t].first == facs[t]))
        fail("decompose: factor alignment mismatch (", pair.name, ")");
      factor_hw.push_back(std::move(fh[t].second));
    }

    std::vector<std::pair<VecI, long>> expansion = {{hw, 1}};
    Int dim_one = 1;
    std::string tag;
    bool tagged = true;
    for (size_t ci = 0; ci < comps.size(); ++ci) {
      const auto& comp = comps[ci];
      int r = comp.rank;
      const VecI& hw_c = comp_hw[ci];
      bool trivial = std::all_of(hw_c.begin(), hw_c.end(),
                                 [](int x) { return x == 0; });
      if (trivial) continue;
      std::string ft = factor_tag(comp.type, r, hw_c);
      if (ft.empty()) tagged = false;
      if (!tag.empty()) tag += " x ";
      tag += ft;
      const WeightMultiset& wm = irrep_weight_multiset(comp.type, r, hw_c);
      dim_one *= wm.total;
      // Cartan rows of the component, in its own node order.
      std::vector<VecI> rows(r, VecI(r));
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
          rows[a][b] = P.data.kcartan[jk[comp.nodes[a]]][jk[comp.nodes[b]]];
      std::vector<std::pair<VecI, long>> next;
      for (const auto& [mu, mult] : wm.entries) {
        VecI drop(r);
        for (int t = 0; t < r; ++t) drop[t] = hw_c[t] - mu[t];
        auto c = solve_in_basis(rows, drop);
        if (!c) fail("decompose: weight outside the component root lattice");
        VecI ci(r);
        for (int t = 0; t < r; ++t) {
          if ((*c)[t].get_den() != 1 || (*c)[t] < 0)
            fail("decompose: non-integral root descent");
          ci[t] = static_cast<int>((*c)[t].get_num().get_si());
        }
        for (const auto& [base, bmult] : expansion) {
          VecI wvec = base;
          for (int t = 0; t < r; ++t)
            for (size_t u = 0; u < wvec.size(); ++u)
              wvec[u] -= ci[t] * dbl[jk[comp.nodes[t]]][u];
          next.push_back({std::move(wvec), bmult * mult});
        }
      }
      expansion = std::move(next);
    }
    if (!tagged) tag = "";
    if (tag.empty() && tagged) tag = "C1";  // all components trivial

    for (const auto& [wvec, mult] : expansion) {
      auto it = pool.find(wvec);
      if (it == pool.end() || it->second < mult)
        fail("decompose: character subtraction went negative (", pair.name,
             ")");
      it->second -= mult;
      if (it->second == 0) pool.erase(it);
    }

    if (!mod.summands.empty() && mod.summands.back().hw_doubled == hw) {
      ++mod.summands.back().multiplicity;
    } else {
      ModuleSummand s;
      s.hw_doubled = hw;
      s.omega = omega_full(hw);
      s.multiplicity = 1;
      s.dim = dim_one;
      s.tag = tag;
      s.factor_hw = std::move(factor_hw);
      s.central = central_of(hw);
      mod.summands.push_back(std::move(s));
    }
  }
  return mod;
}

HWModule pbborel_module(const SymmetricPair& pair, const ParabolicSpec& q) {
  RecipeResult rr = theta_stable_parabolic_for(pair, q);
  ParabolicSpec amb;
  amb.side = ParabolicSpec::GSide;
  amb.removed = rr.removed_g;
  return decompose(pair, amb, rr.presentation);
}

}  // namespace dfv
