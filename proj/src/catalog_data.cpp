// Catalog of the symmetric pairs (g, k) of simple g, presented by a diagram
// involution plus painted nodes, with the simple restricted roots of k listed
// in the catalog order used by the finiteness tables.  Closed-form reduction
// recipes (K-side removed set -> theta-stable ambient parabolic) and the few
// hand-entered M-part values live here as well.

#include "pairs_internal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dfv {

namespace {

// alpha_i (1-based) in an ambient rank-n diagram.
VecI al(int n, int i) {
  VecI v(n, 0);
  v[i - 1] = 1;
  return v;
}

// c * (alpha_lo + ... + alpha_hi), 1-based inclusive; empty range gives 0.
VecI rng(int n, int lo, int hi, int c) {
  VecI v(n, 0);
  for (int i = lo; i <= hi; ++i) v[i - 1] = c;
  return v;
}

VecI vadd(VecI a, const VecI& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

ReductiveAlgebra one(char t, int r) {
  ReductiveAlgebra a;
  a.add_factor(t, r);
  return a;
}

RecipeResult rr(int pres, VecI removed, MKind kind, std::string id = "") {
  RecipeResult r;
  r.presentation = pres;
  std::sort(removed.begin(), removed.end());
  r.removed_g = std::move(removed);
  r.kind = kind;
  r.encoded_id = std::move(id);
  return r;
}

std::string ns(int v) { return std::to_string(v); }

// ------------------------------------------------------------------ builders

// (sl_m, so_m): ambient A_{m-1}, involution = diagram flip.
SymmetricPair build_sl_so(int m) {
  int n = m - 1;
  PairSpec s;
  s.family = "sl-so";
  s.params = {m};
  s.name = "(sl_" + ns(m) + ", so_" + ns(m) + ")";
  PresentationSpec P;
  P.name = "std";
  P.type = 'A';
  P.rank = n;
  P.sigma.resize(n);
  for (int i = 0; i < n; ++i) P.sigma[i] = n - 1 - i;
  if (m % 2 == 0) {
    int k = m / 2;
    P.painted = {k - 1};
    for (int i = 1; i <= k - 1; ++i) P.beta_exprs.push_back(al(n, i));
    P.beta_exprs.push_back(vadd(al(n, k - 1), al(n, k)));
  } else {
    int k = (m - 1) / 2;
    for (int i = 1; i <= k; ++i) P.beta_exprs.push_back(al(n, i));
  }
  s.presentations = {P};
  s.expected_k = alg_so(m);
  return build_pair_from_spec(s);
}

// (sl_2n, sp_n): ambient A_{2n-1}, involution = diagram flip, nothing painted.
SymmetricPair build_sl_sp(int n) {
  int N = 2 * n - 1;
  PairSpec s;
  s.family = "sl2n-spn";
  s.params = {n};
  s.name = "(sl_" + ns(2 * n) + ", sp_" + ns(n) + ")";
  PresentationSpec P;
  P.name = "std";
  P.type = 'A';
  P.rank = N;
  P.sigma.resize(N);
  for (int i = 0; i < N; ++i) P.sigma[i] = N - 1 - i;
  for (int i = 1; i <= n; ++i) P.beta_exprs.push_back(al(N, i));
  s.presentations = {P};
  s.expected_k = alg_sp(n);
  s.msplit = true;
  s.recipe = [n, N](const VecI& S) -> std::optional<RecipeResult> {
    if (S.size() == 1) {
      int i = S[0];
      if (i == 0) return rr(0, {0, N - 1}, MKind::Encoded, "slsp.b1");
      if (i == n - 1) return rr(0, {n - 1}, MKind::Torus);
      return rr(0, {i, 2 * n - i - 2}, MKind::FilterOnly);
    }
    if (S.size() == 2 && S[0] == 0 && S[1] == n - 1)
      return rr(0, {0, n - 1, N - 1}, MKind::Torus);
    return std::nullopt;
  };
  return build_pair_from_spec(s);
}

// (sl_{a+b}, sl_a + sl_b + C): ambient A_{a+b-1}, alpha_a painted.
SymmetricPair build_sl_slsl(int a, int b) {
  int N = a + b - 1;
  PairSpec s;
  s.family = "sl-slsl";
  s.params = {a, b};
  s.name = "(sl_" + ns(a + b) + ", sl_" + ns(a) + " + sl_" + ns(b) + " + C)";
  PresentationSpec P;
  P.name = "std";
  P.type = 'A';
  P.rank = N;
  P.painted = {a - 1};
  for (int i = 1; i <= a - 1; ++i) P.beta_exprs.push_back(al(N, i));
  for (int i = a + 1; i <= N; ++i) P.beta_exprs.push_back(al(N, i));
  s.presentations = {P};
  s.expected_k = alg_sum(alg_sum(alg_sl(a), alg_sl(b)), alg_center(1));
  s.hermitian = true;
  s.hermitian_node = a - 1;
  return build_pair_from_spec(s);
}

// (so_{p+q}, so_p + so_q).  Ambient B_r for p+q odd, D_{(p+q)/2} for p+q even
// (with the fork swap as involution when p and q are both odd).
SymmetricPair build_so_soso(int p, int q) {
  int N = p + q;
  PairSpec s;
  s.family = "so-soso";
  s.params = {p, q};
  s.name = "(so_" + ns(N) + ", so_" + ns(p) + " + so_" + ns(q) + ")";
  PresentationSpec P;
  P.name = "std";
  if (N % 2 == 1) {
    int r = (N - 1) / 2;
    P.type = 'B';
    P.rank = r;
    int e = (p % 2 == 0) ? p : q;  // the even one of p, q
    int sdx = e / 2;
    P.painted = {sdx - 1};
    if (sdx >= 2) {
      for (int i = 1; i <= sdx - 1; ++i) P.beta_exprs.push_back(al(r, i));
      P.beta_exprs.push_back(vadd(al(r, sdx - 1), rng(r, sdx, r, 2)));
    }
    for (int i = sdx + 1; i <= r; ++i) P.beta_exprs.push_back(al(r, i));
  } else {
    int nn = N / 2;
    P.type = 'D';
    P.rank = nn;
    if (p % 2 == 0) {
      int sdx = p / 2;
      P.painted = {sdx - 1};
      if (sdx >= 2) {
        for (int i = 1; i <= sdx - 1; ++i) P.beta_exprs.push_back(al(nn, i));
        VecI lo = vadd(al(nn, sdx - 1), rng(nn, sdx, nn - 2, 2));
        lo = vadd(lo, al(nn, nn - 1));
        lo = vadd(lo, al(nn, nn));
        P.beta_exprs.push_back(lo);
      }
      for (int i = sdx + 1; i <= nn; ++i) P.beta_exprs.push_back(al(nn, i));
    } else {
      int a = (p - 1) / 2;
      P.sigma.resize(nn);
      for (int i = 0; i < nn; ++i) P.sigma[i] = i;
      std::swap(P.sigma[nn - 2], P.sigma[nn - 1]);
      if (a >= 1) {
        P.painted = {a - 1};
        for (int i = 1; i <= a - 1; ++i) P.beta_exprs.push_back(al(nn, i));
        P.beta_exprs.push_back(rng(nn, a, nn - 1, 1));
      }
      for (int i = a + 1; i <= nn - 2; ++i) P.beta_exprs.push_back(al(nn, i));
      P.beta_exprs.push_back(al(nn, nn - 1));
    }
  }
  s.presentations = {P};
  s.expected_k = alg_sum(alg_so(p), alg_so(q));
  s.hermitian = (p == 2);
  if (s.hermitian) s.hermitian_node = 0;
  s.msplit = (p == 1 && N % 2 == 0);
  bool both_odd = (p % 2 == 1) && (q % 2 == 1);
  int dblock = 0;  // even factor realized as the leading block
  if (!both_odd) dblock = (p % 2 == 0) ? p : q;
  if (p >= 3 && q >= 3 && (both_odd || dblock >= 6)) {
    s.recipe = [](const VecI& S) -> std::optional<RecipeResult> {
      if (S.size() == 1 && S[0] == 0)
        return rr(0, {0}, MKind::Encoded, "so.first");
      return std::nullopt;
    };
  }
  return build_pair_from_spec(s);
}

// (so_2n, sl_n + C): ambient D_n, alpha_n painted.
SymmetricPair build_so_sl(int n) {
  PairSpec s;
  s.family = "so-sl";
  s.params = {n};
  s.name = "(so_" + ns(2 * n) + ", sl_" + ns(n) + " + C)";
  PresentationSpec P;
  P.name = "std";
  P.type = 'D';
  P.rank = n;
  P.painted = {n - 1};
  for (int i = 1; i <= n - 1; ++i) P.beta_exprs.push_back(al(n, i));
  s.presentations = {P};
  s.expected_k = alg_sum(alg_sl(n), alg_center(1));
  s.hermitian = true;
  s.hermitian_node = n - 1;
  return build_pair_from_spec(s);
}

// (sp_n, sl_n + C): ambient C_n, alpha_n painted.
SymmetricPair build_sp_sl(int n) {
  PairSpec s;
  s.family = "sp-sl";
  s.params = {n};
  s.name = "(sp_" + ns(n) + ", sl_" + ns(n) + " + C)";
  PresentationSpec P;
  P.name = "std";
  P.type = 'C';
  P.rank = n;
  P.painted = {n - 1};
  for (int i = 1; i <= n - 1; ++i) P.beta_exprs.push_back(al(n, i));
  s.presentations = {P};
  s.expected_k = alg_sum(alg_sl(n), alg_center(1));
  s.hermitian = true;
  s.hermitian_node = n - 1;
  return build_pair_from_spec(s);
}

// (sp_{p+q}, sp_p + sp_q): ambient C_n, n = p+q.  Besides the standard
// presentation (alpha_p painted) the catalog carries the block-swapped one and
// every two-painted presentation; the reduction recipes for removed pairs that
// straddle the two factors land in those.  Every presentation lists the sp_p
// block first so removed-set indices line up across presentations.
SymmetricPair build_sp_spsp(int p, int q) {
  int n = p + q;
  PairSpec s;
  s.family = "sp-spsp";
  s.params = {p, q};
  s.name = "(sp_" + ns(n) + ", sp_" + ns(p) + " + sp_" + ns(q) + ")";
  auto longroot = [n](int j) {  // 2(alpha_j + ... + alpha_{n-1}) + alpha_n
    VecI v = rng(n, j, n - 1, 2);
    v[n - 1] += 1;
    return v;
  };
  {
    PresentationSpec P;
    P.name = "std";
    P.type = 'C';
    P.rank = n;
    P.painted = {p - 1};
    for (int i = 1; i <= p - 1; ++i) P.beta_exprs.push_back(al(n, i));
    P.beta_exprs.push_back(longroot(p));
    for (int i = p + 1; i <= n - 1; ++i) P.beta_exprs.push_back(al(n, i));
    P.beta_exprs.push_back(al(n, n));
    s.presentations.push_back(P);
  }
  {
    PresentationSpec P;
    P.name = "swap";
    P.type = 'C';
    P.rank = n;
    P.painted = {q - 1};
    for (int i = q + 1; i <= n - 1; ++i) P.beta_exprs.push_back(al(n, i));
    P.beta_exprs.push_back(al(n, n));
    for (int i = 1; i <= q - 1; ++i) P.beta_exprs.push_back(al(n, i));
    P.beta_exprs.push_back(longroot(q));
    s.presentations.push_back(P);
  }
  for (int j = p + 1; j <= n - 1; ++j) {
    PresentationSpec P;
    P.name = "cross" + ns(j);
    P.type = 'C';
    P.rank = n;
    P.painted = {j - p - 1, j - 1};
    for (int i = j - p + 1; i <= j - 1; ++i) P.beta_exprs.push_back(al(n, i));
    P.beta_exprs.push_back(longroot(j));
    for (int i = 1; i <= j - p - 1; ++i) P.beta_exprs.push_back(al(n, i));
    P.beta_exprs.push_back(rng(n, j - p, j, 1));
    for (int i = j + 1; i <= n - 1; ++i) P.beta_exprs.push_back(al(n, i));
    P.beta_exprs.push_back(al(n, n));
    s.presentations.push_back(P);
  }
  for (int jt = q + 1; jt <= n - 1; ++jt) {
    PresentationSpec P;
    P.name = "crossswap" + ns(jt);
    P.type = 'C';
    P.rank = n;
    P.painted = {jt - q - 1, jt - 1};
    for (int i = 1; i <= jt - q - 1; ++i) P.beta_exprs.push_back(al(n, i));
    P.beta_exprs.push_back(rng(n, jt - q, jt, 1));
    for (int i = jt + 1; i <= n - 1; ++i) P.beta_exprs.push_back(al(n, i));
    P.beta_exprs.push_back(al(n, n));
    for (int i = jt - q + 1; i <= jt - 1; ++i) P.beta_exprs.push_back(al(n, i));
    P.beta_exprs.push_back(longroot(jt));
    s.presentations.push_back(P);
  }
  s.expected_k = alg_sum(alg_sp(p), alg_sp(q));
  s.recipe = [p, q, n](const VecI& S) -> std::optional<RecipeResult> {
    auto cross_idx = [p](int j) { return 2 + (j - p - 1); };
    auto crossswap_idx = [q](int jt) { return 2 + (q - 1) + (jt - q - 1); };
    if (S.size() == 1) {
      int i = S[0] + 1;
      if (i <= p) return rr(0, {i - 1}, MKind::Encoded, "sp.A");
      int k = i - p;
      return rr(1, {k - 1}, MKind::Encoded, "sp.A.swap");
    }
    if (S.size() == 2) {
      int i = S[0] + 1, j2 = S[1] + 1;
      if (j2 <= p) return rr(0, {i - 1, j2 - 1}, MKind::Encoded, "sp.B");
      if (i > p) {
        int k = i - p, l = j2 - p;
        return rr(1, {k - 1, l - 1}, MKind::Encoded, "sp.B.swap");
      }
      int k = j2 - p;  // removed pair straddles the factors
      if (i == p && k == q)
        return rr(0, {p - 1, n - 1}, MKind::Encoded, "sp.CC");
      if (k < q)
        return rr(cross_idx(p + k), {k - 1, k + i - 1}, MKind::Encoded, "sp.C");
      return rr(crossswap_idx(q + i), {i - 1, q + i - 1}, MKind::Encoded,
                "sp.C.swap");
    }
    return std::nullopt;
  };
  return build_pair_from_spec(s);
}

SymmetricPair build_f4_so9() {
  PairSpec s;
  s.family = "f4-so9";
  s.name = "(f4, so_9)";
  {
    PresentationSpec P;
    P.name = "std";
    P.type = 'F';
    P.rank = 4;
    P.painted = {3};
    P.beta_exprs = {{0, 1, 2, 2}, al(4, 1), al(4, 2), al(4, 3)};
    s.presentations.push_back(P);
  }
  {
    PresentationSpec P;
    P.name = "alt3";
    P.type = 'F';
    P.rank = 4;
    P.painted = {2};
    P.expected_blocks = {alg_so(9)};
    s.presentations.push_back(P);
  }
  {
    PresentationSpec P;
    P.name = "two";
    P.type = 'F';
    P.rank = 4;
    P.painted = {2, 3};
    P.expected_blocks = {alg_so(9)};
    s.presentations.push_back(P);
  }
  s.expected_k = alg_so(9);
  s.recipe = [](const VecI& S) -> std::optional<RecipeResult> {
    if (S == VecI{0}) return rr(0, {3}, MKind::Identity);
    if (S == VecI{1}) return rr(0, {0}, MKind::Identity);
    if (S == VecI{2}) return rr(1, {2}, MKind::Identity);
    if (S == VecI{3}) return rr(2, {3}, MKind::Encoded, "f4so9.b4");
    if (S == VecI({0, 1})) return rr(0, {0, 3}, MKind::Identity);
    return std::nullopt;
  };
  s.mpart_table = [](int pres,
                     const VecI& rem) -> std::optional<ReductiveAlgebra> {
    if (pres == 2 && rem == VecI{3}) {
      ReductiveAlgebra a = one('B', 2);
      a.center_dim = 1;
      return a;
    }
    return std::nullopt;
  };
  return build_pair_from_spec(s);
}

SymmetricPair build_e6_sp4() {
  PairSpec s;
  s.family = "e6-sp4";
  s.name = "(e6, sp_4)";
  PresentationSpec P;
  P.name = "std";
  P.type = 'E';
  P.rank = 6;
  P.sigma = {5, 1, 4, 3, 2, 0};
  P.painted = {1};
  P.beta_exprs = {{0, 1, 1, 1, 0, 0}, al(6, 1), al(6, 3), al(6, 4)};
  s.presentations = {P};
  s.expected_k = alg_sp(4);
  return build_pair_from_spec(s);
}

SymmetricPair build_e6_sl6sl2() {
  PairSpec s;
  s.family = "e6-sl6sl2";
  s.name = "(e6, sl_6 + sl_2)";
  PresentationSpec P;
  P.name = "std";
  P.type = 'E';
  P.rank = 6;
  P.painted = {1};
  P.beta_exprs = {al(6, 1), al(6, 3),          al(6, 4),
                  al(6, 5), al(6, 6),          {1, 2, 2, 3, 2, 1}};
  s.presentations = {P};
  s.expected_k = alg_sum(alg_sl(6), alg_sl(2));
  s.recipe = [](const VecI& S) -> std::optional<RecipeResult> {
    if (S == VecI{5}) return rr(0, {1}, MKind::FilterOnly);
    return std::nullopt;
  };
  return build_pair_from_spec(s);
}

SymmetricPair build_e6_f4() {
  PairSpec s;
  s.family = "e6-f4";
  s.name = "(e6, f4)";
  PresentationSpec P;
  P.name = "std";
  P.type = 'E';
  P.rank = 6;
  P.sigma = {5, 1, 4, 3, 2, 0};
  P.beta_exprs = {al(6, 2), al(6, 4), al(6, 3), al(6, 1)};
  s.presentations = {P};
  s.expected_k = one('F', 4);
  s.msplit = true;
  s.recipe = [](const VecI& S) -> std::optional<RecipeResult> {
    if (S == VecI{0}) return rr(0, {1}, MKind::Encoded, "e6f4.b1");
    if (S == VecI{3}) return rr(0, {0, 5}, MKind::FilterOnly);
    return std::nullopt;
  };
  return build_pair_from_spec(s);
}

SymmetricPair build_e6_so10() {
  PairSpec s;
  s.family = "e6-so10";
  s.name = "(e6, so_10 + C)";
  PresentationSpec P;
  P.name = "std";
  P.type = 'E';
  P.rank = 6;
  P.painted = {0};
  P.beta_exprs = {al(6, 6), al(6, 5), al(6, 4), al(6, 3), al(6, 2)};
  s.presentations = {P};
  s.expected_k = alg_sum(alg_so(10), alg_center(1));
  s.hermitian = true;
  s.hermitian_node = 0;
  return build_pair_from_spec(s);
}

SymmetricPair build_e7_sl8() {
  PairSpec s;
  s.family = "e7-sl8";
  s.name = "(e7, sl_8)";
  PresentationSpec P;
  P.name = "std";
  P.type = 'E';
  P.rank = 7;
  P.painted = {1};
  P.beta_exprs = {al(7, 1), al(7, 3), al(7, 4), al(7, 5),
                  al(7, 6), al(7, 7), {1, 2, 2, 3, 2, 1, 0}};
  s.presentations = {P};
  s.expected_k = alg_sl(8);
  return build_pair_from_spec(s);
}

SymmetricPair build_e7_so12sl2() {
  PairSpec s;
  s.family = "e7-so12sl2";
  s.name = "(e7, so_12 + sl_2)";
  PresentationSpec P;
  P.name = "std";
  P.type = 'E';
  P.rank = 7;
  P.painted = {0};
  P.beta_exprs = {al(7, 7), al(7, 6), al(7, 5), al(7, 4),
                  al(7, 3), al(7, 2), {2, 2, 3, 4, 3, 2, 1}};
  s.presentations = {P};
  s.expected_k = alg_sum(alg_so(12), alg_sl(2));
  s.recipe = [](const VecI& S) -> std::optional<RecipeResult> {
    if (S == VecI{6}) return rr(0, {0}, MKind::FilterOnly);
    return std::nullopt;
  };
  return build_pair_from_spec(s);
}

SymmetricPair build_e7_e6() {
  PairSpec s;
  s.family = "e7-e6";
  s.name = "(e7, e6 + C)";
  PresentationSpec P;
  P.name = "std";
  P.type = 'E';
  P.rank = 7;
  P.painted = {6};
  for (int i = 1; i <= 6; ++i) P.beta_exprs.push_back(al(7, i));
  s.presentations = {P};
  s.expected_k = alg_sum(one('E', 6), alg_center(1));
  s.hermitian = true;
  s.hermitian_node = 6;
  return build_pair_from_spec(s);
}

SymmetricPair build_e8_so16() {
  PairSpec s;
  s.family = "e8-so16";
  s.name = "(e8, so_16)";
  PresentationSpec P;
  P.name = "std";
  P.type = 'E';
  P.rank = 8;
  P.painted = {0};
  P.beta_exprs = {{2, 2, 3, 4, 3, 2, 1, 0}, al(8, 8), al(8, 7), al(8, 6),
                  al(8, 5),                 al(8, 4), al(8, 3), al(8, 2)};
  s.presentations = {P};
  s.expected_k = alg_so(16);
  return build_pair_from_spec(s);
}

SymmetricPair build_e8_e7sl2() {
  PairSpec s;
  s.family = "e8-e7sl2";
  s.name = "(e8, e7 + sl_2)";
  PresentationSpec P;
  P.name = "std";
  P.type = 'E';
  P.rank = 8;
  P.painted = {7};
  for (int i = 1; i <= 7; ++i) P.beta_exprs.push_back(al(8, i));
  P.beta_exprs.push_back({2, 3, 4, 6, 5, 4, 3, 2});
  s.presentations = {P};
  s.expected_k = alg_sum(one('E', 7), alg_sl(2));
  return build_pair_from_spec(s);
}

SymmetricPair build_g2_sl2sl2() {
  PairSpec s;
  s.family = "g2-sl2sl2";
  s.name = "(g2, sl_2 + sl_2)";
  PresentationSpec P;
  P.name = "std";
  P.type = 'G';
  P.rank = 2;
  P.painted = {1};
  P.beta_exprs = {al(2, 1), {3, 2}};
  s.presentations = {P};
  s.expected_k = alg_sum(alg_sl(2), alg_sl(2));
  return build_pair_from_spec(s);
}

SymmetricPair build_f4_sp3sp1() {
  PairSpec s;
  s.family = "f4-sp3sp1";
  s.name = "(f4, sp_3 + sp_1)";
  PresentationSpec P;
  P.name = "std";
  P.type = 'F';
  P.rank = 4;
  P.painted = {0};
  P.beta_exprs = {al(4, 4), al(4, 3), al(4, 2), {2, 3, 4, 2}};
  s.presentations = {P};
  s.expected_k = alg_sum(alg_sp(3), alg_sp(1));
  return build_pair_from_spec(s);
}

}  // namespace

void register_catalog(
    std::vector<PairFamily>& families,
    std::map<std::string, std::function<SymmetricPair(const std::vector<int>&)>>&
        builders) {
  auto addf = [&](const std::string& id, std::string display, int np,
                  std::vector<int> sample,
                  std::function<std::string(const std::vector<int>&)> check,
                  std::function<SymmetricPair(const std::vector<int>&)> build) {
    PairFamily f;
    f.id = id;
    f.display = std::move(display);
    f.num_params = np;
    f.sample = std::move(sample);
    f.check = std::move(check);
    families.push_back(std::move(f));
    builders[id] = std::move(build);
  };
  auto no_params = [](const std::vector<int>& p) -> std::string {
    if (!p.empty()) return "family takes no parameters";
    return "";
  };

  addf(
      "sl-so", "(sl_m, so_m)", 1, {5},
      [](const std::vector<int>& p) -> std::string {
        if (p.size() != 1) return "expected one parameter m";
        if (p[0] < 3) return "requires m >= 3";
        return "";
      },
      [](const std::vector<int>& p) { return build_sl_so(p[0]); });
  addf(
      "sl2n-spn", "(sl_2n, sp_n)", 1, {3},
      [](const std::vector<int>& p) -> std::string {
        if (p.size() != 1) return "expected one parameter n";
        if (p[0] < 2) return "requires n >= 2";
        return "";
      },
      [](const std::vector<int>& p) { return build_sl_sp(p[0]); });
  addf(
      "sl-slsl", "(sl_{a+b}, sl_a + sl_b + C)", 2, {2, 3},
      [](const std::vector<int>& p) -> std::string {
        if (p.size() != 2) return "expected parameters a, b";
        if (p[0] < 1 || p[0] > p[1]) return "requires 1 <= a <= b";
        return "";
      },
      [](const std::vector<int>& p) { return build_sl_slsl(p[0], p[1]); });
  addf(
      "so-soso", "(so_{p+q}, so_p + so_q)", 2, {3, 5},
      [](const std::vector<int>& p) -> std::string {
        if (p.size() != 2) return "expected parameters p, q";
        if (p[0] < 1 || p[0] > p[1]) return "requires 1 <= p <= q";
        if (p[0] + p[1] < 5) return "requires p + q >= 5";
        return "";
      },
      [](const std::vector<int>& p) { return build_so_soso(p[0], p[1]); });
  addf(
      "so-sl", "(so_2n, sl_n + C)", 1, {5},
      [](const std::vector<int>& p) -> std::string {
        if (p.size() != 1) return "expected one parameter n";
        if (p[0] < 4) return "requires n >= 4";
        return "";
      },
      [](const std::vector<int>& p) { return build_so_sl(p[0]); });
  addf(
      "sp-sl", "(sp_n, sl_n + C)", 1, {3},
      [](const std::vector<int>& p) -> std::string {
        if (p.size() != 1) return "expected one parameter n";
        if (p[0] < 2) return "requires n >= 2";
        return "";
      },
      [](const std::vector<int>& p) { return build_sp_sl(p[0]); });
  addf(
      "sp-spsp", "(sp_{p+q}, sp_p + sp_q)", 2, {2, 3},
      [](const std::vector<int>& p) -> std::string {
        if (p.size() != 2) return "expected parameters p, q";
        if (p[0] < 1 || p[0] > p[1]) return "requires 1 <= p <= q";
        return "";
      },
      [](const std::vector<int>& p) { return build_sp_spsp(p[0], p[1]); });
  addf("f4-so9", "(f4, so_9)", 0, {}, no_params,
       [](const std::vector<int>&) { return build_f4_so9(); });
  addf("e6-sp4", "(e6, sp_4)", 0, {}, no_params,
       [](const std::vector<int>&) { return build_e6_sp4(); });
  addf("e6-sl6sl2", "(e6, sl_6 + sl_2)", 0, {}, no_params,
       [](const std::vector<int>&) { return build_e6_sl6sl2(); });
  addf("e6-f4", "(e6, f4)", 0, {}, no_params,
       [](const std::vector<int>&) { return build_e6_f4(); });
  addf("e6-so10", "(e6, so_10 + C)", 0, {}, no_params,
       [](const std::vector<int>&) { return build_e6_so10(); });
  addf("e7-sl8", "(e7, sl_8)", 0, {}, no_params,
       [](const std::vector<int>&) { return build_e7_sl8(); });
  addf("e7-so12sl2", "(e7, so_12 + sl_2)", 0, {}, no_params,
       [](const std::vector<int>&) { return build_e7_so12sl2(); });
  addf("e7-e6", "(e7, e6 + C)", 0, {}, no_params,
       [](const std::vector<int>&) { return build_e7_e6(); });
  addf("e8-so16", "(e8, so_16)", 0, {}, no_params,
       [](const std::vector<int>&) { return build_e8_so16(); });
  addf("e8-e7sl2", "(e8, e7 + sl_2)", 0, {}, no_params,
       [](const std::vector<int>&) { return build_e8_e7sl2(); });
  addf("g2-sl2sl2", "(g2, sl_2 + sl_2)", 0, {}, no_params,
       [](const std::vector<int>&) { return build_g2_sl2sl2(); });
  addf("f4-sp3sp1", "(f4, sp_3 + sp_1)", 0, {}, no_params,
       [](const std::vector<int>&) { return build_f4_sp3sp1(); });
}

}  // namespace dfv
