#include <vector>

#include "doctest.h"
#include "simpcat/corpus.hpp"
#include "simpcat/monoidal.hpp"

using namespace simpcat;

namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Independent count of the hom complexes of the category of operators over a
// one-object category whose hom set has `h` elements: between levels n and m
// there are C(n+m+1, m+1) monotone maps, each contributing h^m cells.
long long operator_hom_count(int n, int m, int h) {
  long long maps = binom(n + m + 1, m + 1);
  long long cells = 1;
  for (int i = 0; i < m; ++i) cells *= h;
  return maps * cells;
}

MonSCat terminal_monoidal(int cap) {
  auto cat = share(terminal_scat(cap));
  return make_monoidal(
      cat, [](int, int) { return 0; },
      [](int, int, int, int, int, int, int) { return 0; }, 0);
}

}  // namespace

TEST_CASE("monoidal validation") {
  Corpus C = corpus(2);
  SUBCASE("commutative monoid fixtures pass") {
    for (const auto& name : {"bz2", "bz3", "idem", "two_min"}) {
      CAPTURE(name);
      CHECK(validate_monoidal(C.monoidal(name)).ok());
    }
  }
  SUBCASE("terminal category passes") {
    CHECK(validate_monoidal(terminal_monoidal(2)).ok());
  }
  SUBCASE("noncommutative multiplication fails interchange") {
    Report rep = validate_monoidal(C.monoidal("leftzero3"));
    CHECK(!rep.ok());
    bool interchange = false;
    for (const auto& v : rep.violations)
      if (v.check.find("tensor") != std::string::npos ||
          v.check.find("composition preservation") != std::string::npos)
        interchange = true;
    CHECK(interchange);
  }
}

TEST_CASE("apply_cf") {
  Corpus Cp = corpus(2);
  const MonSCat& C = Cp.monoidal("two_min");
  // objects of the underlying category: "0", "1"; tensor is min; unit is 1.
  int o0 = C.cat->find_object("0"), o1 = C.cat->find_object("1");
  SUBCASE("outer face drops the first entry") {
    // delta_0 : [n-1] -> [n]
    std::vector<int> d0{1, 2};
    CHECK(apply_cf(C, d0, {o0, o1}) == std::vector<int>{o1});
  }
  SUBCASE("degeneracy inserts the unit") {
    std::vector<int> s0{0, 0, 1};
    CHECK(apply_cf(C, s0, {o0}) == std::vector<int>{C.unit, o0});
  }
  SUBCASE("identity acts as the identity") {
    std::vector<int> id{0, 1, 2};
    CHECK(apply_cf(C, id, {o0, o1}) == std::vector<int>{o0, o1});
  }
  SUBCASE("inner face tensors adjacent entries") {
    std::vector<int> d1{0, 2};
    CHECK(apply_cf(C, d1, {o0, o1}) ==
          std::vector<int>{std::min(o0, o1)});
  }
  SUBCASE("level mismatch is rejected") {
    std::vector<int> f{0, 3};
    CHECK_THROWS_AS(apply_cf(C, f, {o0, o1}), InputError);
  }
}

TEST_CASE("truncated opposite simplex category") {
  FinCat D = delta_op_fincat(2);
  CHECK(validate_fincat(D).ok());
  CHECK(D.objects.size() == 3);
  // arrows [n] -> [m] are monotone [m] -> [n]: sum of C(n+m+1, m+1)
  CHECK(D.arrows.size() == 31);
  CHECK_THROWS_AS(delta_op_fincat(0), InputError);
}

TEST_CASE("the simplicial object of powers") {
  Corpus Cp = corpus(2);
  SUBCASE("construction validates for the corpus fixtures") {
    for (const auto& name : {"bz2", "two_min"}) {
      CAPTURE(name);
      DiagramSCat F = c_simplicial_object(Cp.monoidal(name), 2);
      CHECK(validate_diagram_scat(F).ok());
      CHECK(F.at[0]->nobj() == 1);  // the empty power
    }
  }
  SUBCASE("inner face is the tensor of adjacent coordinates") {
    const MonSCat& C = Cp.monoidal("two_min");
    DiagramSCat F = c_simplicial_object(C, 2);
    std::vector<int> d1{0, 2};
    int arrow = F.base->find_arrow(monotone_arrow_name(2, 1, d1));
    REQUIRE(arrow >= 0);
    const SFunctor& Fd1 = F.arrow[arrow];
    int n = C.cat->nobj();
    for (int x1 = 0; x1 < n; ++x1)
      for (int x2 = 0; x2 < n; ++x2)
        CHECK(Fd1.obj[x1 * n + x2] == tensor_obj2(C, x1, x2));
  }
}

TEST_CASE("category of operators") {
  Corpus Cp = corpus(2);
  const MonSCat& C = Cp.monoidal("bz2");
  COtimes X = c_otimes(C, 2, 2);
  SUBCASE("it is a valid enriched category with the documented hom counts") {
    CHECK(validate_scat(*X.cat).ok());
    int two = X.find_seq({0, 0});
    int one = X.find_seq({0});
    REQUIRE(two >= 0);
    REQUIRE(one >= 0);
    CHECK(X.cat->hom(two, one).size(0) == 12);
    CHECK(static_cast<long long>(monotone_maps(1, 2).size()) == 6);
    // every hom complex matches the closed-form count
    for (int A = 0; A < X.cat->nobj(); ++A)
      for (int B = 0; B < X.cat->nobj(); ++B) {
        int n = static_cast<int>(X.obj_seq[A].size());
        int m = static_cast<int>(X.obj_seq[B].size());
        CHECK(X.cat->hom(A, B).size(0) == operator_hom_count(n, m, 2));
      }
  }
  SUBCASE("identities are the identity tuples over the identity map") {
    for (int A = 0; A < X.cat->nobj(); ++A) {
      int n = static_cast<int>(X.obj_seq[A].size());
      std::vector<int> id(n + 1);
      for (int i = 0; i <= n; ++i) id[i] = i;
      GrArrow lift = X.chosen_lift(C, A, id);
      CHECK(lift.tgt == A);
      CHECK(lift.vertex == X.cat->ident[A]);
    }
  }
  SUBCASE("chosen lifts pass the pullback criterion and split strictly") {
    for (int A = 0; A < X.cat->nobj(); ++A) {
      int n = static_cast<int>(X.obj_seq[A].size());
      for (int m = 0; m <= 2; ++m)
        for (const auto& f : monotone_maps(m, n)) {
          GrArrow lift = X.chosen_lift(C, A, f);
          CHECK(is_pcocartesian(X.projection, lift.src, lift.tgt, lift.vertex,
                                2)
                    .ok());
          // split cleavage: the lift of a composite is the composite of lifts
          int l = static_cast<int>(X.obj_seq[lift.tgt].size());
          for (const auto& g : monotone_maps(std::min(2, l), l)) {
            GrArrow second = X.chosen_lift(C, lift.tgt, g);
            std::vector<int> fg(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) fg[i] = f[g[i]];
            GrArrow direct = X.chosen_lift(C, A, fg);
            int composed = X.cat->compose(A, lift.tgt, second.tgt, 0,
                                          second.vertex, lift.vertex);
            CHECK(composed == direct.vertex);
            CHECK(second.tgt == direct.tgt);
          }
        }
    }
  }
  SUBCASE("the projection is an opfibration") {
    CHECK(is_opfibration(X.projection, 2).ok());
  }
}

TEST_CASE("category of operators agrees with the power construction") {
  Corpus Cp = corpus(2);
  SUBCASE("certificates at bound two for every fixture") {
    for (const auto& name : {"bz2", "bz3", "idem", "two_min"}) {
      CAPTURE(name);
      Certificate cert = check_cotimes_gr_iso(Cp.monoidal(name), 2);
      CHECK(cert.pass());
      if (std::string(name) == "bz2")
        CHECK(cert.counts.at("hom[2>1]")[0] == 12);
    }
  }
  SUBCASE("terminal fixture gives the discrete truncation on both sides") {
    Certificate cert = check_cotimes_gr_iso(terminal_monoidal(2), 2);
    CHECK(cert.pass());
    // all hom components are single points: counts equal the map counts
    CHECK(cert.counts.at("hom[2>1]")[0] == 6);
  }
  SUBCASE("bound three for the group fixture") {
    Corpus C3 = corpus(3);
    Certificate cert = check_cotimes_gr_iso(C3.monoidal("bz2"), 3);
    CHECK(cert.pass());
  }
}

TEST_CASE("operadic nerve") {
  Corpus Cp = corpus(2);
  SUBCASE("terminal fixture projects isomorphically onto the base nerve") {
    OperadicNerve X = operadic_nerve(terminal_monoidal(2), 2, 2);
    CHECK(validate_sset(*X.nerve.sset).ok());
    CHECK(validate_ssetmap(X.projection).ok());
    CHECK(cell_counts(*X.nerve.sset) == cell_counts(*X.base_nerve.sset));
    for (int k = 0; k <= 2; ++k) {
      std::vector<bool> seen(X.base_nerve.sset->size(k), false);
      for (int c = 0; c < X.nerve.sset->size(k); ++c) {
        CHECK(!seen[X.projection.at(k, c)]);
        seen[X.projection.at(k, c)] = true;
      }
    }
  }
  SUBCASE("group fixture counts, doubly enumerated") {
    OperadicNerve X = operadic_nerve(Cp.monoidal("bz2"), 2, 2);
    CHECK(validate_sset(*X.nerve.sset).ok());
    CHECK(validate_ssetmap(X.projection).ok());
    // vertices: sequences of length <= 2 over one object
    CHECK(cell_counts(*X.nerve.sset)[0] == 3);
    // edges: sum of all hom vertex counts (discrete homs)
    long long edges = 0;
    long long two_cells = 0;
    std::vector<long long> into(3, 0), outof(3, 0);
    for (int n = 0; n <= 2; ++n)
      for (int m = 0; m <= 2; ++m) {
        long long h = operator_hom_count(n, m, 2);
        edges += h;
        into[m] += h;
        outof[n] += h;
      }
    for (int b = 0; b <= 2; ++b) two_cells += into[b] * outof[b];
    CHECK(cell_counts(*X.nerve.sset)[1] == edges);
    CHECK(cell_counts(*X.nerve.sset)[2] == two_cells);
    CHECK(edges == 86);
    CHECK(two_cells == 3822);
  }
  SUBCASE("inner horns fill and chosen lifts satisfy the filler property") {
    OperadicNerve X = operadic_nerve(Cp.monoidal("bz2"), 2, 2);
    CHECK(horn_check(*X.nerve.sset, HornMode::Inner, 2).ok());
    const MonSCat& C = Cp.monoidal("bz2");
    for (int A = 0; A < X.cx.cat->nobj(); ++A) {
      int n = static_cast<int>(X.cx.obj_seq[A].size());
      for (int m = 0; m <= 2; ++m)
        for (const auto& f : monotone_maps(m, n)) {
          GrArrow lift = X.cx.chosen_lift(C, A, f);
          CoherentSimplex edge;
          edge.n = 1;
          edge.objects = {lift.src, lift.tgt};
          edge.cells[{{0, 1}}] = lift.vertex;
          int idx = X.nerve.find(edge);
          REQUIRE(idx >= 0);
          CHECK(cocart_edge_fillers(*X.nerve.sset, X.projection, idx, 2).ok());
        }
    }
  }
  SUBCASE("a non locally Kan input is rejected") {
    Corpus C3 = corpus(2);
    auto interval = C3.scat("interval");
    MonSCat M = make_monoidal(
        interval,
        [&](int, int) { return 0; },
        [&](int, int, int, int, int k, int c1, int c2) {
          return interval->compose(0, 0, 0, k, c1, c2);
        },
        0);
    CHECK_THROWS_AS(operadic_nerve(M, 2, 2), InputError);
  }
}

TEST_CASE("monoidal fibers") {
  Corpus Cp = corpus(2);
  for (const auto& name : {"bz2", "two_min"}) {
    CAPTURE(name);
    OperadicNerve X = operadic_nerve(Cp.monoidal(name), 2, 2);
    for (int n = 0; n <= 2; ++n) {
      Certificate cert = check_monoidal_fibers(Cp.monoidal(name), X, n);
      CHECK(cert.pass());
      if (n == 0)
        CHECK(cert.counts.at("fiber") == std::vector<long long>{1, 1, 1});
    }
  }
}

TEST_CASE("opposite monoidal structure") {
  Corpus Cp = corpus(2);
  SUBCASE("involution and validation") {
    for (const auto& name : {"bz2", "idem", "two_min"}) {
      CAPTURE(name);
      const MonSCat& C = Cp.monoidal(name);
      MonSCat Cop = opposite_monoidal(C);
      CHECK(validate_monoidal(Cop).ok());
      MonSCat back = opposite_monoidal(Cop);
      CHECK(scat_data_equal(*back.cat, *C.cat));
      CHECK(back.unit == C.unit);
      CHECK(sfunctor_data_equal(back.tensor, C.tensor));
    }
  }
}

TEST_CASE("operadic nerve composes with the relative-nerve comparison") {
  // Composite of the two comparison certificates: the operadic nerve is the
  // relative nerve of the nerved power diagram, checked by an explicit map.
  Corpus Cp = corpus(2);
  const MonSCat& C = Cp.monoidal("bz2");
  const int M = 2, cap = 2;
  REQUIRE(check_cotimes_gr_iso(C, M).pass());
  DiagramSCat Cb = c_simplicial_object(C, M);
  REQUIRE(check_gr_relnerve_iso(Cb, cap).pass());
  COtimes X = c_otimes(C, M, C.cat->cap);
  GrCat E = grothendieck(Cb);
  SFunctor Phi = cotimes_to_gr_functor(C, X, E);
  CoherentNerve NX = coherent_nerve(X.cat, cap);
  CoherentNerve NG = coherent_nerve(E.total, cap);
  SSetMap nerve_phi = coherent_nerve_map(Phi, NX, NG);
  NervedDiagram ND = nerve_diagram(Cb, cap);
  RelativeNerve RN = relative_nerve(Cb.base, ND.diagram, cap);
  SSetMap composite;
  composite.source = NX.sset;
  composite.target = RN.sset;
  composite.assign.resize(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    composite.assign[n].resize(NX.sset->size(n));
    for (int c = 0; c < NX.sset->size(n); ++c) {
      const CoherentSimplex& S = NG.simplices[n][nerve_phi.at(n, c)];
      int idx = RN.find(gr_simplex_to_relnerve(E, ND, S));
      REQUIRE(idx >= 0);
      composite.assign[n][c] = idx;
    }
  }
  CHECK(validate_ssetmap(composite).ok());
  for (int n = 0; n <= cap; ++n) {
    REQUIRE(NX.sset->size(n) == RN.sset->size(n));
    std::vector<bool> seen(RN.sset->size(n), false);
    for (int c = 0; c < NX.sset->size(n); ++c) {
      CHECK(!seen[composite.at(n, c)]);
      seen[composite.at(n, c)] = true;
    }
  }
}

TEST_CASE("opposite comparison certificate") {
  Corpus Cp = corpus(2);
  for (const auto& name : {"bz2", "bz3", "idem", "two_min"}) {
    CAPTURE(name);
    Certificate cert = check_op_theorems(Cp.monoidal(name), 2, 2);
    CHECK(cert.pass());
  }
  SUBCASE("all legs are identities for the terminal fixture") {
    Certificate cert = check_op_theorems(terminal_monoidal(2), 2, 2);
    CHECK(cert.pass());
  }
}
