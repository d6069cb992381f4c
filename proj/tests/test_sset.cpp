#include <random>

#include "doctest.h"
#include "simpcat/sset.hpp"

using namespace simpcat;

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Discrete complex on m points, one cell per point in every dimension.
TruncatedSSet discrete_points(int m, int cap) {
  TruncatedSSet X;
  X.cap = cap;
  X.cells.resize(cap + 1);
  X.face.resize(cap + 1);
  X.degen.resize(cap + 1);
  std::vector<int> idmap(m);
  for (int i = 0; i < m; ++i) idmap[i] = i;
  for (int k = 0; k <= cap; ++k)
    for (int i = 0; i < m; ++i)
      X.cells[k].push_back("p" + std::to_string(i));
  for (int k = 1; k <= cap; ++k) X.face[k].assign(k + 1, idmap);
  for (int k = 0; k < cap; ++k) X.degen[k].assign(k + 1, idmap);
  X.rebuild_index();
  return X;
}

std::vector<int> random_monotone(std::mt19937& rng, int m, int n) {
  std::vector<int> v(m + 1);
  std::uniform_int_distribution<int> d(0, n);
  for (auto& x : v) x = d(rng);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("standard simplices have binomial cell counts") {
  // |Delta^n_k| = number of monotone [k] -> [n] = C(n+k+1, k+1).
  for (int n = 0; n <= 3; ++n) {
    TruncatedSSet X = standard_simplex(n, 3);
    for (int k = 0; k <= 3; ++k) CHECK(X.size(k) == binom(n + k + 1, k + 1));
    CHECK(validate_sset(X).ok());
  }
  TruncatedSSet d2 = standard_simplex(2, 2);
  CHECK(cell_counts(d2) == std::vector<long long>{3, 6, 10});
  TruncatedSSet pt = standard_simplex(0, 2);
  CHECK(cell_counts(pt) == std::vector<long long>{1, 1, 1});
  TruncatedSSet d1 = standard_simplex(1, 1);
  CHECK(d1.size(0) == 2);
  CHECK(d1.size(1) == 3);
  CHECK(nondegenerate_cells(d1, 1).size() == 1);
}

TEST_CASE("validator reports a corrupted face identity") {
  TruncatedSSet X = standard_simplex(2, 2);
  // Swap one entry of d_0 on 2-cells so d_0 d_1 = d_0 d_0 fails somewhere.
  REQUIRE(X.face[2][0][0] != (X.face[2][0][0] + 1) % X.size(1));
  X.face[2][0][0] = (X.face[2][0][0] + 1) % X.size(1);
  X.rebuild_index();
  Report rep = validate_sset(X);
  CHECK(!rep.ok());
  bool names_cell = false;
  for (const auto& v : rep.violations)
    if (v.witness.find(X.id(2, 0)) != std::string::npos) names_cell = true;
  CHECK(names_cell);
}

TEST_CASE("apply_monotone realizes precomposition on standard simplices") {
  std::mt19937 rng(7);
  TruncatedSSet X = standard_simplex(3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + trial % 3;
    int m = 1 + (trial / 3) % 3;
    auto alpha = random_monotone(rng, m, n);
    auto beta = random_monotone(rng, n, 3);
    std::vector<int> composite(m + 1);
    for (int i = 0; i <= m; ++i) composite[i] = beta[alpha[i]];
    std::string wanted;
    for (int i = 0; i <= m; ++i) {
      if (i) wanted += '.';
      wanted += std::to_string(composite[i]);
    }
    std::string beta_id;
    for (int i = 0; i <= n; ++i) {
      if (i) beta_id += '.';
      beta_id += std::to_string(beta[i]);
    }
    int got = apply_monotone(X, alpha, n, X.find(n, beta_id));
    CHECK(X.id(m, got) == wanted);
  }
}

TEST_CASE("opposite is a strict involution and swaps face indices") {
  TruncatedSSet X = standard_simplex(2, 3);
  TruncatedSSet Y = opposite_sset(X);
  CHECK(validate_sset(Y).ok());
  CHECK(opposite_sset(Y) == X);
  for (int i = 0; i <= 2; ++i)
    CHECK(Y.face[2][i] == X.face[2][2 - i]);
  CHECK(sset_iso(X, Y).has_value());  // order reversal of a linear order
}

TEST_CASE("binary product of intervals") {
  TruncatedSSet d1 = standard_simplex(1, 2);
  TruncatedSSet P = binary_product(d1, d1);
  CHECK(validate_sset(P).ok());
  CHECK(cell_counts(P) == std::vector<long long>{4, 9, 16});
  CHECK(nondegenerate_counts(P) == std::vector<long long>{4, 5, 2});
}

TEST_CASE("product with a point is the identity up to pairing") {
  TruncatedSSet X = standard_simplex(2, 2);
  TruncatedSSet P = binary_product(X, standard_simplex(0, 2));
  auto iso = sset_iso(X, P);
  REQUIRE(iso.has_value());
}

TEST_CASE("opposite commutes with products on the nose") {
  TruncatedSSet a = standard_simplex(1, 2);
  TruncatedSSet b = standard_simplex(2, 2);
  CHECK(data_equal(opposite_sset(binary_product(a, b)),
                   binary_product(opposite_sset(a), opposite_sset(b))));
}

TEST_CASE("pullback over the point is the product") {
  auto X = share(standard_simplex(1, 2));
  auto Y = share(standard_simplex(2, 2));
  auto pt = share(standard_simplex(0, 2));
  auto to_pt = [&](SSetPtr S) {
    SSetMap m;
    m.source = S;
    m.target = pt;
    m.assign.resize(S->cap + 1);
    for (int k = 0; k <= S->cap; ++k) m.assign[k].assign(S->size(k), 0);
    return m;
  };
  PullbackResult pb = pullback(to_pt(X), to_pt(Y));
  CHECK(validate_sset(*pb.object).ok());
  CHECK(cell_counts(*pb.object) == cell_counts(binary_product(*X, *Y)));
  CHECK(validate_ssetmap(pb.to_left).ok());
  CHECK(validate_ssetmap(pb.to_right).ok());
}

TEST_CASE("pullback of an inclusion along itself is the included object") {
  TruncatedSSet horn = simplex_horn(2, 1, 2);
  auto H = share(horn);
  auto full = share(standard_simplex(2, 2));
  SSetMap inc;
  inc.source = H;
  inc.target = full;
  inc.assign.resize(3);
  for (int k = 0; k <= 2; ++k)
    for (int i = 0; i < H->size(k); ++i)
      inc.assign[k].push_back(full->find(k, H->id(k, i)));
  REQUIRE(validate_ssetmap(inc).ok());
  PullbackResult pb = pullback(inc, inc);
  CHECK(cell_counts(*pb.object) == cell_counts(*H));
  CHECK(sset_iso(*pb.object, *H).has_value());
}

TEST_CASE("horn checks") {
  SUBCASE("inner horns of a simplex fill") {
    TruncatedSSet d3 = standard_simplex(3, 3);
    CHECK(horn_check(d3, HornMode::Inner, 3).ok());
  }
  SUBCASE("the horn itself has no filler for its identity horn") {
    TruncatedSSet horn = simplex_horn(2, 1, 2);
    REQUIRE(validate_sset(horn).ok());
    HornReport rep = horn_check(horn, HornMode::Inner, 2);
    CHECK(!rep.ok());
    bool found = false;
    for (const auto& u : rep.unfilled)
      if (u.n == 2 && u.k == 1) found = true;
    CHECK(found);
  }
  SUBCASE("outer horns of a simplex need not fill") {
    TruncatedSSet d1 = standard_simplex(1, 2);
    CHECK(!horn_check(d1, HornMode::All, 2).ok());
    CHECK(horn_check(d1, HornMode::Inner, 2).ok());
  }
  SUBCASE("d above cap is rejected") {
    TruncatedSSet d1 = standard_simplex(1, 1);
    CHECK_THROWS_AS(horn_check(d1, HornMode::All, 2), InputError);
  }
}

TEST_CASE("sset_iso finds identity and refuses mismatches") {
  TruncatedSSet X = standard_simplex(2, 2);
  auto iso = sset_iso(X, X);
  REQUIRE(iso.has_value());
  for (int k = 0; k <= 2; ++k)
    for (int i = 0; i < X.size(k); ++i) CHECK((*iso)[k][i] == i);
  TruncatedSSet d1 = standard_simplex(1, 1);
  TruncatedSSet two = discrete_points(2, 1);
  CHECK(!sset_iso(d1, two).has_value());  // edge counts differ in dim 1
}

TEST_CASE("ez forms strip degeneracies correctly") {
  TruncatedSSet X = standard_simplex(1, 3);
  int edge = X.find(1, "0.1");
  int cell = X.s(1, 0, edge);  // s_0 of the nondegenerate edge
  EzForm f = ez_form(X, 2, cell);
  CHECK(f.base_dim == 1);
  CHECK(f.base_idx == edge);
  CHECK(f.word == std::vector<int>{0});
  CHECK(!is_degenerate(X, 1, edge));
  CHECK(is_degenerate(X, 2, cell));
}

TEST_CASE("markings") {
  auto d0 = share(standard_simplex(0, 2));
  MarkedSSet sharp0 = mark_sharp(d0);
  CHECK(sharp0.marked.size() == 1);  // single degenerate edge
  auto d1 = share(standard_simplex(1, 2));
  CHECK(mark_sharp(d1).marked.size() == 3);
  SUBCASE("sharp commutes with opposites") {
    MarkedSSet a = opposite_marked(mark_sharp(d1));
    MarkedSSet b = mark_sharp(share(opposite_sset(*d1)));
    CHECK(a.marked == b.marked);
    CHECK(data_equal(*a.base, *b.base));
  }
  SUBCASE("natural marking on a poset nerve marks only degenerates") {
    auto d2 = share(standard_simplex(2, 2));
    MarkedSSet nat = mark_natural(d2);
    for (int e : nat.marked) CHECK(is_degenerate(*d2, 1, e));
    // all degenerate edges are present
    int degen_count = 0;
    for (int e = 0; e < d2->size(1); ++e)
      if (is_degenerate(*d2, 1, e)) ++degen_count;
    CHECK(static_cast<int>(nat.marked.size()) == degen_count);
  }
  SUBCASE("cap below 2 is rejected") {
    CHECK_THROWS_AS(mark_natural(share(standard_simplex(1, 1))), InputError);
  }
}

TEST_CASE("subcomplex span and closed deletion") {
  TruncatedSSet full = standard_simplex(2, 2);
  TruncatedSSet horn = simplex_horn(2, 1, 2);
  CHECK(horn.size(0) == 3);
  CHECK(nondegenerate_cells(horn, 1).size() == 2);  // edges 01 and 12
  CHECK(nondegenerate_cells(horn, 2).empty());
  TruncatedSSet del = delete_cells_closed(full, {{0, full.find(0, "0")}});
  CHECK(validate_sset(del).ok());
  CHECK(del.find(0, "0") == -1);
  CHECK(del.find(1, "1.2") >= 0);
  CHECK(del.find(1, "0.1") == -1);  // has the deleted vertex as a face
}

TEST_CASE("random products validate and iso-search is exhaustive-safe") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    int n1 = rng() % 3, n2 = rng() % 3;
    TruncatedSSet P = binary_product(standard_simplex(n1, 2),
                                     standard_simplex(n2, 2));
    CHECK(validate_sset(P).ok());
    CHECK(opposite_sset(opposite_sset(P)) == P);
  }
}
