#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>
#include <set>

#include "dfv/pairs.hpp"

using namespace dfv;

namespace {

ParabolicSpec gside(VecI removed) {
  ParabolicSpec s;
  s.side = ParabolicSpec::GSide;
  s.removed = std::move(removed);
  return s;
}

ParabolicSpec kside(VecI removed) {
  ParabolicSpec s;
  s.side = ParabolicSpec::KSide;
  s.removed = std::move(removed);
  return s;
}

ReductiveAlgebra alg(std::vector<SimpleFactor> fs, int center) {
  ReductiveAlgebra a;
  for (const auto& f : fs) a.add_factor(f.type, f.rank);
  a.center_dim = center;
  return a;
}

}  // namespace

TEST_CASE("catalog lists the expected families") {
  const auto& fams = catalog();
  CHECK(fams.size() == 19);
  std::set<std::string> ids;
  for (const auto& f : fams) {
    CHECK(ids.insert(f.id).second);  // unique ids
    CHECK(f.check(f.sample) == "");  // samples are admissible
    CHECK(static_cast<int>(f.sample.size()) == f.num_params);
  }
  for (const char* id : {"sl-so", "sl2n-spn", "sl-slsl", "so-soso", "so-sl",
                         "sp-sl", "sp-spsp", "f4-so9", "e6-sp4", "e6-sl6sl2",
                         "e6-f4", "e6-so10", "e7-sl8", "e7-so12sl2", "e7-e6",
                         "e8-so16", "e8-e7sl2", "g2-sl2sl2", "f4-sp3sp1"})
    CHECK(ids.count(id) == 1);
}

TEST_CASE("inadmissible parameters are rejected") {
  CHECK_THROWS(get_pair("sl-so", {2}));
  CHECK_THROWS(get_pair("sl-slsl", {3, 2}));   // wants a <= b
  CHECK_THROWS(get_pair("so-soso", {0, 5}));
  CHECK_THROWS(get_pair("sl2n-spn", {1}));
  CHECK_THROWS(get_pair("no-such-family", {}));
  CHECK_THROWS(get_pair("e6-f4", {3}));        // takes no parameters
}

TEST_CASE("pairs have the expected dimensions and fixed subalgebras") {
  struct Row {
    const char* family;
    std::vector<int> params;
    int dim_g, dim_k, rank_g, rank_k;
    const char* kname;
  };
  const std::vector<Row> rows = {
      {"sl-so", {3}, 8, 3, 2, 1, "sl_2"},
      {"sl-so", {4}, 15, 6, 3, 2, "sl_2+sl_2"},
      {"sl-so", {5}, 24, 10, 4, 2, "so_5"},
      {"sl2n-spn", {2}, 15, 10, 3, 2, "so_5"},  // sp_2 reported as so_5
      {"sl2n-spn", {3}, 35, 21, 5, 3, "sp_3"},
      {"sl2n-spn", {4}, 63, 36, 7, 4, "sp_4"},
      {"sl-slsl", {1, 1}, 3, 1, 1, 1, "gl_1"},
      {"sl-slsl", {2, 3}, 24, 12, 4, 4, "sl_2+sl_3+gl_1"},
      {"so-soso", {1, 6}, 21, 15, 3, 3, "sl_4"},
      {"so-soso", {2, 5}, 21, 11, 3, 3, "so_5+gl_1"},
      {"so-soso", {3, 5}, 28, 13, 4, 3, "sl_2+so_5"},
      {"so-soso", {4, 4}, 28, 12, 4, 4, "sl_2+sl_2+sl_2+sl_2"},
      {"so-sl", {5}, 45, 25, 5, 5, "sl_5+gl_1"},
      {"sp-sl", {3}, 21, 9, 3, 3, "sl_3+gl_1"},
      {"sp-spsp", {1, 1}, 10, 6, 2, 2, "sl_2+sl_2"},
      {"sp-spsp", {2, 3}, 55, 31, 5, 5, "so_5+sp_3"},
      {"f4-so9", {}, 52, 36, 4, 4, "so_9"},
      {"e6-sp4", {}, 78, 36, 6, 4, "sp_4"},
      {"e6-sl6sl2", {}, 78, 38, 6, 6, "sl_2+sl_6"},
      {"e6-f4", {}, 78, 52, 6, 4, "f4"},
      {"e6-so10", {}, 78, 46, 6, 6, "so_10+gl_1"},
      {"e7-sl8", {}, 133, 63, 7, 7, "sl_8"},
      {"e7-so12sl2", {}, 133, 69, 7, 7, "sl_2+so_12"},
      {"e7-e6", {}, 133, 79, 7, 7, "e6+gl_1"},
      {"e8-so16", {}, 248, 120, 8, 8, "so_16"},
      {"e8-e7sl2", {}, 248, 136, 8, 8, "sl_2+e7"},
      {"g2-sl2sl2", {}, 14, 6, 2, 2, "sl_2+sl_2"},
      {"f4-sp3sp1", {}, 52, 24, 4, 4, "sl_2+sp_3"},
  };
  for (const auto& r : rows) {
    CAPTURE(r.family);
    CAPTURE(r.params);
    const SymmetricPair& sp = get_pair(r.family, r.params);
    CHECK(sp.dim_g == r.dim_g);
    CHECK(sp.dim_k == r.dim_k);
    CHECK(sp.rank_g == r.rank_g);
    CHECK(sp.rank_k == r.rank_k);
    CHECK(sp.k_algebra.name() == r.kname);
    CHECK(sp.k_algebra.dim() == r.dim_k);
    CHECK(sp.k_algebra.rank() == r.rank_k);
  }
}

TEST_CASE("parameter sweeps construct with consistent bookkeeping") {
  std::vector<std::pair<std::string, std::vector<int>>> todo;
  for (int m = 3; m <= 9; ++m) todo.push_back({"sl-so", {m}});
  for (int n = 2; n <= 5; ++n) todo.push_back({"sl2n-spn", {n}});
  for (int a = 1; a <= 3; ++a)
    for (int b = a; a + b <= 7; ++b) todo.push_back({"sl-slsl", {a, b}});
  for (int p = 1; p <= 4; ++p)
    for (int q = p; p + q <= 10; ++q)
      if (p + q >= 5) todo.push_back({"so-soso", {p, q}});
  for (int n = 4; n <= 8; ++n) todo.push_back({"so-sl", {n}});
  for (int n = 2; n <= 6; ++n) todo.push_back({"sp-sl", {n}});
  for (int p = 1; p <= 3; ++p)
    for (int q = p; p + q <= 6; ++q) todo.push_back({"sp-spsp", {p, q}});
  for (const auto& fam : catalog())
    if (fam.num_params == 0) todo.push_back({fam.id, {}});

  for (const auto& [id, params] : todo) {
    CAPTURE(id);
    CAPTURE(params);
    const SymmetricPair* sp = nullptr;
    CHECK_NOTHROW(sp = &get_pair(id, params));
    REQUIRE(sp != nullptr);
    // Global bookkeeping between the pair and its derived data.
    CHECK(sp->k_algebra.dim() == sp->dim_k);
    CHECK(sp->k_algebra.rank() == sp->rank_k);
    CHECK(sp->rs().dim_algebra() == sp->dim_g);
    CHECK(sp->rs().rank == sp->rank_g);
    for (const auto& P : sp->presentations) {
      int nsimple = sp->rank_k - sp->k_algebra.center_dim;
      CHECK(static_cast<int>(P.data.beta_doubled.size()) == nsimple);
      CHECK(2 * static_cast<int>(P.data.k_lines.size()) ==
            sp->dim_k - sp->rank_k);
      CHECK(P.data.num_node_orbits == sp->rank_k);
    }
  }
}

TEST_CASE("doubled simple restricted roots match hand computations") {
  {
    const SymmetricPair& sp = get_pair("so-soso", {3, 5});
    REQUIRE(sp.presentations[0].data.beta_doubled.size() == 3);
    CHECK(sp.presentations[0].data.beta_doubled ==
          std::vector<VecI>{{2, 2, 1, 1}, {0, 2, 0, 0}, {0, 0, 1, 1}});
  }
  {
    const SymmetricPair& sp = get_pair("e6-f4", {});
    CHECK(sp.presentations[0].data.beta_doubled ==
          std::vector<VecI>{{0, 2, 0, 0, 0, 0},
                            {0, 0, 0, 2, 0, 0},
                            {0, 0, 1, 0, 1, 0},
                            {1, 0, 0, 0, 0, 1}});
  }
  {
    const SymmetricPair& sp = get_pair("sl2n-spn", {4});
    CHECK(sp.presentations[0].data.beta_doubled ==
          std::vector<VecI>{{1, 0, 0, 0, 0, 0, 1},
                            {0, 1, 0, 0, 0, 1, 0},
                            {0, 0, 1, 0, 1, 0, 0},
                            {0, 0, 0, 2, 0, 0, 0}});
  }
}

TEST_CASE("levi intersection at the extreme parabolic choices") {
  for (const auto& fam : catalog()) {
    CAPTURE(fam.id);
    const SymmetricPair& sp = get_pair(fam.id, fam.sample);
    int m = static_cast<int>(sp.presentations[0].data.beta_doubled.size());

    LeviIntersection full = levi_intersection(sp, gside({}));
    CHECK(full.algebra == sp.k_algebra);
    CHECK(static_cast<int>(full.j_k.size()) == m);

    VecI all;
    for (int i = 0; i < sp.rank_g; ++i) all.push_back(i);
    LeviIntersection empty = levi_intersection(sp, gside(all));
    CHECK(empty.algebra.factors.empty());
    CHECK(empty.algebra.center_dim == sp.rank_k);
    CHECK(empty.j_k.empty());
  }
}

TEST_CASE("levi intersection matches hand computations") {
  {
    // (sl_8, sp_4), ambient nodes 1 and 3 removed.
    const SymmetricPair& sp = get_pair("sl2n-spn", {4});
    LeviIntersection li = levi_intersection(sp, gside({0, 2}));
    CHECK(li.j_k == VecI{1, 3});
    CHECK(li.algebra == alg({{'A', 1}, {'A', 1}}, 2));
  }
  {
    // (sl_8, sp_4), middle node removed: an sl_4 survives.
    const SymmetricPair& sp = get_pair("sl2n-spn", {4});
    LeviIntersection li = levi_intersection(sp, gside({3}));
    CHECK(li.j_k == VecI{0, 1, 2});
    CHECK(li.algebra == alg({{'A', 3}}, 1));
  }
  {
    // (f4, so_9), second node removed.
    const SymmetricPair& sp = get_pair("f4-so9", {});
    LeviIntersection li = levi_intersection(sp, gside({1}));
    CHECK(li.j_k == VecI{1, 3});
    CHECK(li.algebra == alg({{'A', 1}, {'A', 1}}, 2));
  }
  {
    // (e6, f4), outer nodes removed: a so_7 block survives.
    const SymmetricPair& sp = get_pair("e6-f4", {});
    LeviIntersection li = levi_intersection(sp, gside({0, 5}));
    CHECK(li.j_k == VecI{0, 1, 2});
    CHECK(li.algebra == alg({{'B', 3}}, 1));
  }
}

TEST_CASE("stable enlargement of the full compact group is the whole group") {
  for (const char* id : {"sl2n-spn", "f4-so9", "e6-f4", "sp-spsp"}) {
    const auto& fams = catalog();
    for (const auto& fam : fams) {
      if (fam.id != id) continue;
      const SymmetricPair& sp = get_pair(fam.id, fam.sample);
      RecipeResult rr = theta_stable_parabolic_for(sp, kside({}));
      CHECK(rr.presentation == 0);
      CHECK(rr.removed_g.empty());
      CHECK(rr.kind == MKind::Identity);
    }
  }
}

TEST_CASE("stable enlargements follow the closed-form recipes") {
  {
    const SymmetricPair& sp = get_pair("sl2n-spn", {3});
    RecipeResult rr = theta_stable_parabolic_for(sp, kside({0}));
    CHECK(rr.presentation == 0);
    CHECK(rr.removed_g == VecI{0, 4});
    CHECK(rr.kind == MKind::Encoded);
    CHECK(rr.encoded_id == "slsp.b1");

    rr = theta_stable_parabolic_for(sp, kside({2}));
    CHECK(rr.removed_g == VecI{2});
    CHECK(rr.kind == MKind::Torus);

    rr = theta_stable_parabolic_for(sp, kside({1}));
    CHECK(rr.removed_g == VecI{1, 3});
    CHECK(rr.kind == MKind::FilterOnly);

    rr = theta_stable_parabolic_for(sp, kside({0, 2}));
    CHECK(rr.removed_g == VecI{0, 2, 4});
    CHECK(rr.kind == MKind::Torus);
  }
  {
    const SymmetricPair& sp = get_pair("f4-so9", {});
    RecipeResult rr = theta_stable_parabolic_for(sp, kside({0}));
    CHECK(rr.presentation == 0);
    CHECK(rr.removed_g == VecI{3});
    CHECK(rr.kind == MKind::Identity);

    rr = theta_stable_parabolic_for(sp, kside({1}));
    CHECK(rr.presentation == 0);
    CHECK(rr.removed_g == VecI{0});
    CHECK(rr.kind == MKind::Identity);

    rr = theta_stable_parabolic_for(sp, kside({2}));
    CHECK(rr.presentation == 1);
    CHECK(rr.removed_g == VecI{2});
    CHECK(rr.kind == MKind::Identity);

    rr = theta_stable_parabolic_for(sp, kside({3}));
    CHECK(rr.presentation == 2);
    CHECK(rr.removed_g == VecI{3});
    CHECK(rr.kind == MKind::Encoded);
    CHECK(rr.encoded_id == "f4so9.b4");

    rr = theta_stable_parabolic_for(sp, kside({0, 1}));
    CHECK(rr.presentation == 0);
    CHECK(rr.removed_g == VecI{0, 3});
    CHECK(rr.kind == MKind::Identity);
  }
  {
    const SymmetricPair& sp = get_pair("e6-f4", {});
    RecipeResult rr = theta_stable_parabolic_for(sp, kside({0}));
    CHECK(rr.presentation == 0);
    CHECK(rr.removed_g == VecI{1});
    CHECK(rr.kind == MKind::Encoded);
    CHECK(rr.encoded_id == "e6f4.b1");

    rr = theta_stable_parabolic_for(sp, kside({3}));
    CHECK(rr.removed_g == VecI{0, 5});
    CHECK(rr.kind == MKind::FilterOnly);
  }
  {
    // A cross pair lands in a crossed presentation.
    const SymmetricPair& sp = get_pair("sp-spsp", {2, 3});
    RecipeResult rr = theta_stable_parabolic_for(sp, kside({1, 3}));
    CHECK(rr.presentation == 3);
    CHECK(rr.removed_g == VecI{1, 3});
    CHECK(rr.kind == MKind::Encoded);
    CHECK(rr.encoded_id == "sp.C");
  }
  {
    const SymmetricPair& sp = get_pair("e6-sl6sl2", {});
    RecipeResult rr = theta_stable_parabolic_for(sp, kside({5}));
    CHECK(rr.removed_g == VecI{1});
    CHECK(rr.kind == MKind::FilterOnly);
  }
  {
    const SymmetricPair& sp = get_pair("e7-so12sl2", {});
    RecipeResult rr = theta_stable_parabolic_for(sp, kside({6}));
    CHECK(rr.removed_g == VecI{0});
    CHECK(rr.kind == MKind::FilterOnly);
  }
  CHECK_THROWS(theta_stable_parabolic_for(get_pair("e6-f4", {}), kside({9})));
}

TEST_CASE("stable enlargements beyond the recipes fall back to search") {
  const SymmetricPair& sp = get_pair("sp-spsp", {1, 4});
  RecipeResult rr = theta_stable_parabolic_for(sp, kside({0, 1, 2}));
  CHECK(rr.kind == MKind::FilterOnly);
  CHECK(rr.encoded_id == "search");
}

TEST_CASE("reductive parts of stable enlargements") {
  {
    // (sl_8, sp_4): maximally split, three orthogonal fixed root lines.
    const SymmetricPair& sp = get_pair("sl2n-spn", {4});
    ReductiveAlgebra a = m_part(sp, gside({0, 6}), 0);
    CHECK(a == alg({{'A', 1}, {'A', 1}, {'A', 1}}, 1));
  }
  {
    // Blocks pair off under the involution: the reductive part is all torus.
    const SymmetricPair& sp = get_pair("sl2n-spn", {3});
    ReductiveAlgebra a = m_part(sp, gside({0, 2, 4}), 0);
    CHECK(a == alg({}, 3));
  }
  {
    const SymmetricPair& sp = get_pair("e6-f4", {});
    ReductiveAlgebra a = m_part(sp, gside({1}), 0);
    CHECK(a == alg({{'A', 1}, {'A', 1}, {'A', 1}}, 1));
  }
  {
    // Equal-rank identity involution: the Levi itself sits in the fixed part.
    const SymmetricPair& sp = get_pair("f4-so9", {});
    ReductiveAlgebra a = m_part(sp, gside({2}), 1);
    CHECK(a == alg({{'A', 2}, {'A', 1}}, 1));
  }
  {
    // Table-driven entry.
    const SymmetricPair& sp = get_pair("f4-so9", {});
    ReductiveAlgebra a = m_part(sp, gside({3}), 2);
    CHECK(a == alg({{'B', 2}}, 1));
  }
}

TEST_CASE("hermitian pairs are exactly those with a one-dimensional centre") {
  struct Row {
    const char* family;
    std::vector<int> params;
    bool hermitian;
    int node;  // ambient painted node, -1 when not hermitian
  };
  const std::vector<Row> rows = {
      {"e6-so10", {}, true, 0},   {"e7-e6", {}, true, 6},
      {"sl-slsl", {2, 3}, true, 1}, {"so-sl", {5}, true, 4},
      {"sp-sl", {3}, true, 2},    {"so-soso", {2, 5}, true, 0},
      {"so-soso", {2, 6}, true, 0}, {"sl-so", {5}, false, -1},
      {"sl2n-spn", {3}, false, -1}, {"so-soso", {3, 5}, false, -1},
      {"sp-spsp", {2, 3}, false, -1}, {"f4-so9", {}, false, -1},
      {"e6-sp4", {}, false, -1},  {"e6-sl6sl2", {}, false, -1},
      {"e6-f4", {}, false, -1},   {"e7-sl8", {}, false, -1},
      {"e7-so12sl2", {}, false, -1}, {"e8-so16", {}, false, -1},
      {"e8-e7sl2", {}, false, -1}, {"g2-sl2sl2", {}, false, -1},
      {"f4-sp3sp1", {}, false, -1},
  };
  for (const auto& r : rows) {
    CAPTURE(r.family);
    CAPTURE(r.params);
    const SymmetricPair& sp = get_pair(r.family, r.params);
    CHECK(sp.hermitian == r.hermitian);
    CHECK(sp.hermitian_node == r.node);
    CHECK((sp.k_algebra.center_dim == 1) == r.hermitian);
  }
}

TEST_CASE("pair instances are cached") {
  const SymmetricPair& a = get_pair("e6-f4", {});
  const SymmetricPair& b = get_pair("e6-f4", {});
  CHECK(&a == &b);
}

TEST_CASE("catalog dump is well-formed json") {
  nlohmann::json j = nlohmann::json::parse(catalog_json());
  REQUIRE(j.is_array());
  CHECK(j.size() == 19);
  bool saw_e6f4 = false;
  for (const auto& e : j) {
    CHECK(e.contains("id"));
    CHECK(e.contains("display"));
    REQUIRE(e.contains("sample"));
    CHECK(e["sample"].contains("fixed_subalgebra"));
    if (e["id"] == "e6-f4") {
      saw_e6f4 = true;
      CHECK(e["sample"]["dim_g"] == "78");
      CHECK(e["sample"]["dim_k"] == "52");
      CHECK(e["sample"]["fixed_subalgebra"] == "f4");
      CHECK(e["sample"]["hermitian"] == false);
    }
  }
  CHECK(saw_e6f4);
}
