#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "dfv/matq.hpp"
#include "dfv/weyl.hpp"

using namespace dfv;

namespace {

std::set<std::vector<VecI>> matrix_set(const std::vector<WeylElement>& els) {
  std::set<std::vector<VecI>> s;
  for (const auto& w : els) s.insert(w.matrix);
  return s;
}

VecI all_nodes(const RootSystem& rs) {
  VecI v(rs.rank);
  for (int i = 0; i < rs.rank; ++i) v[i] = i;
  return v;
}

}  // namespace

TEST_CASE("group orders by formula and by enumeration") {
  struct Row {
    char type;
    int rank;
    long order;
  };
  const Row rows[] = {{'A', 2, 6},   {'A', 3, 24},   {'A', 4, 120}, {'B', 3, 48},
                      {'C', 4, 384}, {'D', 4, 192},  {'D', 5, 1920}, {'G', 2, 12},
                      {'F', 4, 1152}};
  for (const auto& r : rows) {
    CAPTURE(r.type);
    CAPTURE(r.rank);
    CHECK(weyl_order(r.type, r.rank) == r.order);
    const auto& rs = build_root_system(r.type, r.rank);
    auto els = weyl_generate(rs);
    CHECK(els.size() == static_cast<size_t>(r.order));
    CHECK(matrix_set(els).size() == els.size());
    // BFS ordering: lengths are non-decreasing and match word sizes.
    for (size_t k = 1; k < els.size(); ++k) CHECK(els[k - 1].length() <= els[k].length());
    CHECK(els.front().length() == 0);
    CHECK(els.back().length() == static_cast<int>(rs.positive_roots.size()));
  }
  CHECK(weyl_order('E', 6) == 51840);
  CHECK(weyl_order('E', 7) == 2903040);
  CHECK(weyl_order('E', 8) == 696729600);
}

TEST_CASE("B3 enumeration matches the signed-permutation group") {
  const auto& rs = build_root_system('B', 3);
  // Base change: columns are the simple roots in orthonormal coordinates.
  MatQ e_from_root(3, 3);
  // alpha_1 = e1 - e2, alpha_2 = e2 - e3, alpha_3 = e3.
  e_from_root.at(0, 0) = 1;
  e_from_root.at(1, 0) = -1;
  e_from_root.at(1, 1) = 1;
  e_from_root.at(2, 1) = -1;
  e_from_root.at(2, 2) = 1;
  MatQ root_from_e = inverse(e_from_root);

  std::set<std::vector<VecI>> oracle;
  int perm[3] = {0, 1, 2};
  do {
    for (int signs = 0; signs < 8; ++signs) {
      MatQ p(3, 3);
      for (int i = 0; i < 3; ++i) p.at(perm[i], i) = (signs >> i & 1) ? -1 : 1;
      MatQ m = root_from_e.mul(p).mul(e_from_root);
      std::vector<VecI> mi(3, VecI(3));
      bool integral = true;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          Rat v = m.at(i, j);
          if (v.get_den() != 1) integral = false;
          else mi[i][j] = static_cast<int>(v.get_num().get_si());
        }
      REQUIRE(integral);
      oracle.insert(mi);
    }
  } while (std::next_permutation(perm, perm + 3));
  CHECK(oracle.size() == 48);
  CHECK(oracle == matrix_set(weyl_generate(rs)));
}

TEST_CASE("longest elements") {
  const auto& a3 = build_root_system('A', 3);
  auto w0 = weyl_longest(a3, all_nodes(a3));
  CHECK(w0.length() == 6);
  CHECK(weyl_matmul(w0.matrix, w0.matrix) == weyl_identity_matrix(3));

  const auto& d4 = build_root_system('D', 4);
  auto w0_d4 = weyl_longest(d4, all_nodes(d4));
  CHECK(w0_d4.length() == 12);
  std::vector<VecI> minus_id(4, VecI(4, 0));
  for (int i = 0; i < 4; ++i) minus_id[i][i] = -1;
  CHECK(w0_d4.matrix == minus_id);

  const auto& f4 = build_root_system('F', 4);
  CHECK(weyl_longest(f4, all_nodes(f4)).length() == 24);

  // Parabolic longest element: A1 x A1 inside A3.
  auto w_j = weyl_longest(a3, {0, 2});
  CHECK(w_j.length() == 2);
}

TEST_CASE("subsystem orders via diagram classification") {
  const auto& b4 = build_root_system('B', 4);
  CHECK(weyl_order_subsystem(b4, {0, 1, 3}) == 12);   // A2 x A1
  CHECK(weyl_order_subsystem(b4, {1, 2, 3}) == 48);   // B3
  CHECK(weyl_order_subsystem(b4, {}) == 1);
  const auto& d4 = build_root_system('D', 4);
  CHECK(weyl_order_subsystem(d4, {0, 2, 3}) == 8);    // A1^3
  const auto& e6 = build_root_system('E', 6);
  CHECK(weyl_order_subsystem(e6, all_nodes(e6)) == 51840);
  CHECK(weyl_order_subsystem(e6, {0, 2, 3, 4, 5}) == 720);  // A5
}

TEST_CASE("enumeration refuses over the bound, naming the order") {
  const auto& e8 = build_root_system('E', 8);
  CHECK_THROWS_WITH_AS(weyl_generate(e8), doctest::Contains("696729600"), std::runtime_error);
  const auto& a2 = build_root_system('A', 2);
  CHECK_THROWS_WITH_AS(weyl_generate(a2, 3), doctest::Contains("exceeds"), std::runtime_error);
}

TEST_CASE("one-sided minimal coset representatives") {
  const auto& a3 = build_root_system('A', 3);
  auto reps = min_coset_reps(a3, {0, 1});  // W_J = S_3, index 4
  CHECK(reps.size() == 4);
  // The cosets W_J r must partition W.
  auto all = weyl_generate(a3);
  std::set<std::vector<VecI>> covered;
  CHECK(min_coset_reps(a3, {}).size() == 24);
  std::vector<WeylElement> subgroup;
  for (const auto& w : all) {
    bool in_j = true;
    for (int letter : w.word)
      if (letter != 0 && letter != 1) in_j = false;
    if (in_j) subgroup.push_back(w);
  }
  CHECK(subgroup.size() == 6);
  for (const auto& r : reps)
    for (const auto& u : subgroup) covered.insert(weyl_matmul(u.matrix, r.matrix));
  CHECK(covered.size() == 24);
  // Each representative is shortest in its coset.
  for (const auto& r : reps)
    for (const auto& u : subgroup)
      if (u.length() > 0) {
        auto prod = weyl_matmul(u.matrix, r.matrix);
        for (const auto& w : all)
          if (w.matrix == prod) CHECK(w.length() > r.length());
      }
}

TEST_CASE("minimal double coset representatives") {
  const auto& a2 = build_root_system('A', 2);
  auto reps = min_double_coset_reps(a2, {0}, {1});
  REQUIRE(reps.size() == 2);
  CHECK(reps[0].word == VecI{});
  CHECK(reps[1].word == VecI{1, 0});
  // Coset sizes 4 + 2.
  auto all = weyl_generate(a2);
  std::vector<std::set<std::vector<VecI>>> cosets;
  for (const auto& r : reps) {
    std::set<std::vector<VecI>> c;
    for (const auto& a : all) {
      bool a_in = true;
      for (int letter : a.word)
        if (letter != 0) a_in = false;
      if (!a_in) continue;
      for (const auto& b : all) {
        bool b_in = true;
        for (int letter : b.word)
          if (letter != 1) b_in = false;
        if (!b_in) continue;
        c.insert(weyl_matmul(a.matrix, weyl_matmul(r.matrix, b.matrix)));
      }
    }
    cosets.push_back(c);
  }
  CHECK(cosets[0].size() == 4);
  CHECK(cosets[1].size() == 2);

  // Partition property, brute force, on a rank-4 system.
  const auto& b4 = build_root_system('B', 4);
  const VecI j1 = {0, 1};
  const VecI j2 = {1, 2, 3};
  auto reps_b4 = min_double_coset_reps(b4, j1, j2);
  size_t total = 0;
  auto all_b4 = weyl_generate(b4);
  std::vector<WeylElement> g1, g2;
  for (const auto& w : all_b4) {
    bool in1 = true, in2 = true;
    for (int letter : w.word) {
      if (std::find(j1.begin(), j1.end(), letter) == j1.end()) in1 = false;
      if (std::find(j2.begin(), j2.end(), letter) == j2.end()) in2 = false;
    }
    if (in1) g1.push_back(w);
    if (in2) g2.push_back(w);
  }
  std::set<std::vector<VecI>> seen_total;
  for (const auto& r : reps_b4) {
    std::set<std::vector<VecI>> c;
    for (const auto& a : g1)
      for (const auto& b : g2)
        c.insert(weyl_matmul(a.matrix, weyl_matmul(r.matrix, b.matrix)));
    total += c.size();
    for (const auto& m : c) seen_total.insert(m);
  }
  CHECK(total == all_b4.size());
  CHECK(seen_total.size() == all_b4.size());
}

TEST_CASE("node duality via the longest element") {
  const auto& a3 = build_root_system('A', 3);
  CHECK(j_star(a3, {0}) == VecI{2});
  CHECK(j_star(a3, {2}) == VecI{0});
  CHECK(j_star(a3, {1}) == VecI{1});
  CHECK(j_star(a3, {0, 1}) == (VecI{1, 2}));

  for (int n = 2; n <= 4; ++n) {
    const auto& bn = build_root_system('B', n);
    for (int i = 0; i < n; ++i) CHECK(j_star(bn, {i}) == VecI{i});
  }
  const auto& d4 = build_root_system('D', 4);
  for (int i = 0; i < 4; ++i) CHECK(j_star(d4, {i}) == VecI{i});
  const auto& d5 = build_root_system('D', 5);
  CHECK(j_star(d5, {3}) == VecI{4});
  CHECK(j_star(d5, {4}) == VecI{3});
  CHECK(j_star(d5, {0}) == VecI{0});
  const auto& e6 = build_root_system('E', 6);
  CHECK(j_star(e6, {0}) == VecI{5});
  CHECK(j_star(e6, {2}) == VecI{4});
  CHECK(j_star(e6, {1}) == VecI{1});
  CHECK(j_star(e6, {3}) == VecI{3});
  // Involution.
  const auto& a5 = build_root_system('A', 5);
  for (int i = 0; i < 5; ++i) {
    auto once = j_star(a5, {i});
    CHECK(j_star(a5, once) == VecI{i});
  }
}
