#include <algorithm>
#include <functional>
#include <sstream>

#include "doctest.h"
#include "simpcat/fincat.hpp"
#include "simpcat/scat.hpp"

using namespace simpcat;

namespace {

FinCat z2() { return monoid_fincat({"e", "a"}, {{0, 1}, {1, 0}}); }

FinCat arrow_cat() {
  return make_fincat(
      {"0", "1"}, {{"id0", "0", "0"}, {"id1", "1", "1"}, {"f", "0", "1"}},
      {"id0", "id1"}, [](const std::string& g, const std::string& f) {
        if (f.rfind("id", 0) == 0) return g;
        return f;  // g must be an identity
      });
}

std::vector<int> parse_tuple(const std::string& id) {
  std::vector<int> out;
  std::stringstream ss(id);
  std::string part;
  while (std::getline(ss, part, '.')) out.push_back(std::stoi(part));
  return out;
}

std::string tuple_id(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(v[i]);
  }
  return s;
}

// One-object enriched category with the given hom complex; composition is
// the pointwise minimum of cell tuples (ids are dot-joined digit tuples).
SCat one_object_min_scat(TruncatedSSet hom, const std::string& unit_vertex) {
  SCat C;
  C.cap = hom.cap;
  C.objects = {"*"};
  C.ident = {hom.find(0, unit_vertex)};
  C.comp.resize(1);
  auto& table = C.comp[0];
  table.resize(C.cap + 1);
  for (int k = 0; k <= C.cap; ++k) {
    int m = hom.size(k);
    table[k].resize(static_cast<long long>(m) * m);
    for (int g = 0; g < m; ++g)
      for (int f = 0; f < m; ++f) {
        auto gt = parse_tuple(hom.id(k, g));
        auto ft = parse_tuple(hom.id(k, f));
        std::vector<int> h(gt.size());
        for (std::size_t i = 0; i < gt.size(); ++i)
          h[i] = std::min(gt[i], ft[i]);
        table[k][static_cast<long long>(g) * m + f] = hom.find(k, tuple_id(h));
      }
  }
  C.homs = {share(std::move(hom))};
  return C;
}

// Nerve of the indiscrete groupoid on {0,1}: k-cells are all 0/1 tuples.
TruncatedSSet indiscrete_complex(int cap) {
  TruncatedSSet X;
  X.cap = cap;
  X.cells.resize(cap + 1);
  X.face.resize(cap + 1);
  X.degen.resize(cap + 1);
  auto tuples = [](int len) {
    std::vector<std::vector<int>> out;
    for (int m = 0; m < (1 << len); ++m) {
      std::vector<int> t(len);
      for (int i = 0; i < len; ++i) t[i] = (m >> (len - 1 - i)) & 1;
      out.push_back(t);
    }
    return out;
  };
  for (int k = 0; k <= cap; ++k)
    for (const auto& t : tuples(k + 1)) X.cells[k].push_back(tuple_id(t));
  X.rebuild_index();
  for (int k = 1; k <= cap; ++k) {
    X.face[k].assign(k + 1, std::vector<int>(X.size(k)));
    for (int i = 0; i <= k; ++i)
      for (int c = 0; c < X.size(k); ++c) {
        auto t = parse_tuple(X.cells[k][c]);
        t.erase(t.begin() + i);
        X.face[k][i][c] = X.find(k - 1, tuple_id(t));
      }
  }
  for (int k = 0; k < cap; ++k) {
    X.degen[k].assign(k + 1, std::vector<int>(X.size(k)));
    for (int i = 0; i <= k; ++i)
      for (int c = 0; c < X.size(k); ++c) {
        auto t = parse_tuple(X.cells[k][c]);
        t.insert(t.begin() + i, t[i]);
        X.degen[k][i][c] = X.find(k + 1, tuple_id(t));
      }
  }
  return X;
}

// All strict functors between enrichments whose homs are determined by
// vertices (discrete or indiscrete), by brute force.
int count_strict_functors(const SCat& C, const SCat& D) {
  int count = 0;
  int n = C.nobj();
  std::vector<int> obj(n, 0);
  std::function<void(int)> rec_obj = [&](int x) {
    if (x == n) {
      std::vector<std::pair<int, int>> pairs;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) pairs.push_back({a, b});
      std::vector<std::vector<int>> choice(pairs.size());
      std::function<void(std::size_t)> rec_pair = [&](std::size_t p) {
        if (p == pairs.size()) {
          SFunctor F;
          F.source = std::make_shared<const SCat>(C);
          F.target = std::make_shared<const SCat>(D);
          F.obj = obj;
          F.hom.resize(n * n);
          for (std::size_t q = 0; q < pairs.size(); ++q) {
            auto [a, b] = pairs[q];
            auto& h = F.hom[a * n + b];
            h.resize(C.cap + 1);
            for (int k = 0; k <= C.cap; ++k) h[k] = choice[q];
          }
          if (validate_sfunctor(F).ok()) ++count;
          return;
        }
        auto [a, b] = pairs[p];
        int src_cells = C.hom(a, b).size(0);
        int tgt_cells = D.hom(obj[a], obj[b]).size(0);
        if (src_cells == 0) {
          choice[p] = {};
          rec_pair(p + 1);
          return;
        }
        if (tgt_cells == 0) return;  // no assignment possible
        std::vector<int> asg(src_cells, 0);
        std::function<void(int)> rec_cell = [&](int c) {
          if (c == src_cells) {
            choice[p] = asg;
            rec_pair(p + 1);
            return;
          }
          for (int v = 0; v < tgt_cells; ++v) {
            asg[c] = v;
            rec_cell(c + 1);
          }
        };
        rec_cell(0);
      };
      rec_pair(0);
    } else {
      for (int v = 0; v < D.nobj(); ++v) {
        obj[x] = v;
        rec_obj(x + 1);
      }
    }
  };
  rec_obj(0);
  return count;
}

}  // namespace

TEST_CASE("discrete enrichments") {
  SUBCASE("terminal category") {
    FinCat t = make_fincat({"*"}, {{"id", "*", "*"}}, {"id"},
                           [](const std::string&, const std::string&) {
                             return std::string("id");
                           });
    SCat C = discrete_scat(t, 2);
    CHECK(validate_scat(C).ok());
    CHECK(C.nobj() == 1);
    CHECK(cell_counts(C.hom(0, 0)) == std::vector<long long>{1, 1, 1});
  }
  SUBCASE("arrow category") {
    SCat C = discrete_scat(arrow_cat(), 2);
    CHECK(validate_scat(C).ok());
    CHECK(C.hom(0, 1).size(0) == 1);
    CHECK(C.hom(1, 0).size(0) == 0);
  }
  SUBCASE("Z/2 as a one-object enriched category") {
    SCat C = discrete_scat(z2(), 3);
    CHECK(validate_scat(C).ok());
    CHECK(cell_counts(C.hom(0, 0)) == std::vector<long long>{2, 2, 2, 2});
    CHECK(nondegenerate_counts(C.hom(0, 0)) ==
          std::vector<long long>{2, 0, 0, 0});
  }
}

TEST_CASE("corrupted composition is reported") {
  SCat C = discrete_scat(z2(), 2);
  C.comp[0][1][1] = 1 - C.comp[0][1][1];  // break one dim-1 entry
  Report rep = validate_scat(C);
  CHECK(!rep.ok());
}

TEST_CASE("opposite enriched category") {
  SCat C = discrete_scat(arrow_cat(), 2);
  SCat Cop = opposite_scat(C);
  CHECK(validate_scat(Cop).ok());
  SUBCASE("involution on the data") {
    CHECK(scat_data_equal(opposite_scat(Cop), C));
  }
  SUBCASE("opposite of discrete is discrete of opposite") {
    SCat D = discrete_scat(opposite_fincat(arrow_cat()), 2);
    CHECK(scat_data_equal(Cop, D));
  }
  SUBCASE("homs are transposed") {
    CHECK(Cop.hom(1, 0).size(0) == 1);
    CHECK(Cop.hom(0, 1).size(0) == 0);
  }
}

TEST_CASE("products of enriched categories") {
  SCat C = discrete_scat(z2(), 2);
  SUBCASE("product with the terminal category is the identity on indices") {
    SCat T = terminal_scat(2);
    SCat P = scat_product(C, T);
    CHECK(validate_scat(P).ok());
    CHECK(P.nobj() == C.nobj());
    for (int k = 0; k <= 2; ++k)
      CHECK(P.hom(0, 0).size(k) == C.hom(0, 0).size(k));
    for (int k = 0; k <= 2; ++k)
      for (int g = 0; g < 2; ++g)
        for (int f = 0; f < 2; ++f)
          CHECK(P.compose(0, 0, 0, k, g, f) == C.compose(0, 0, 0, k, g, f));
  }
  SUBCASE("hom of a product is the product of homs") {
    SCat D = discrete_scat(arrow_cat(), 2);
    SCat P = scat_product(C, D);
    CHECK(validate_scat(P).ok());
    int x = P.find_object("(*,0)");
    int y = P.find_object("(*,1)");
    REQUIRE(x >= 0);
    REQUIRE(y >= 0);
    CHECK(P.hom(x, y).size(0) == C.hom(0, 0).size(0) * D.hom(0, 1).size(0));
  }
  SUBCASE("power of an opposite equals opposite of a power") {
    SCat lhs = scat_power(opposite_scat(C), 2);
    SCat rhs = opposite_scat(scat_power(C, 2));
    CHECK(scat_data_equal(lhs, rhs));
  }
  SUBCASE("iterated products agree up to the canonical flattening") {
    SCat A = discrete_scat(arrow_cat(), 2);
    SCat T = terminal_scat(2);
    SCat left = scat_product(scat_product(C, A), T);
    SCat right = scat_product(C, scat_product(A, T));
    // the canonical flattening is the identity on indices
    REQUIRE(left.nobj() == right.nobj());
    CHECK(left.ident == right.ident);
    CHECK(left.comp == right.comp);
    for (int x = 0; x < left.nobj(); ++x)
      for (int y = 0; y < left.nobj(); ++y)
        CHECK(cell_counts(left.hom(x, y)) == cell_counts(right.hom(x, y)));
  }
}

TEST_CASE("local Kan checks") {
  SUBCASE("discrete enrichments are locally Kan") {
    CHECK(is_locally_kan(discrete_scat(z2(), 3), 3).ok());
    CHECK(is_locally_kan(discrete_scat(arrow_cat(), 2), 2).ok());
  }
  SUBCASE("indiscrete-groupoid hom complex is locally Kan") {
    SCat E = one_object_min_scat(indiscrete_complex(3), "1");
    REQUIRE(validate_scat(E).ok());
    CHECK(is_locally_kan(E, 3).ok());
  }
  SUBCASE("an interval hom complex fails at an outer 2-horn") {
    SCat E = one_object_min_scat(standard_simplex(1, 2), "1");
    REQUIRE(validate_scat(E).ok());
    LocalKanReport rep = is_locally_kan(E, 2);
    CHECK(!rep.ok());
    bool outer2 = false;
    for (const auto& e : rep.entries)
      for (const auto& u : e.horns.unfilled)
        if (u.n == 2 && (u.k == 0 || u.k == 2)) outer2 = true;
    CHECK(outer2);
  }
  SUBCASE("opposite of a locally Kan category is locally Kan") {
    SCat E = one_object_min_scat(indiscrete_complex(3), "1");
    CHECK(is_locally_kan(opposite_scat(E), 3).ok());
  }
}

TEST_CASE("functor validation") {
  auto C = share(discrete_scat(z2(), 2));
  SUBCASE("identity functor validates") {
    CHECK(validate_sfunctor(identity_sfunctor(C)).ok());
  }
  SUBCASE("breaking the hom assignment on one pair is reported") {
    SFunctor F = identity_sfunctor(C);
    F.hom[0][1][0] = 1 - F.hom[0][1][0];  // swap images in dim 1 only
    CHECK(!validate_sfunctor(F).ok());
  }
}

TEST_CASE("strict functors biject under opposites") {
  SCat C = discrete_scat(arrow_cat(), 1);
  SCat D = discrete_scat(z2(), 1);
  CHECK(count_strict_functors(opposite_scat(C), D) ==
        count_strict_functors(C, opposite_scat(D)));
  CHECK(count_strict_functors(opposite_scat(D), C) ==
        count_strict_functors(D, opposite_scat(C)));
}

TEST_CASE("deleting a vertex that surviving composites need is rejected") {
  SCat C = discrete_scat(z2(), 2);
  // a.a = e, so removing e is not closed under composition
  CHECK_THROWS_AS(delete_hom_vertex(C, 0, 0, C.ident[0]), InputError);
}
