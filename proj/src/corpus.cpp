#include "simpcat/corpus.hpp"

#include <algorithm>

namespace simpcat {

namespace {

FinCat terminal_cat() {
  return make_fincat({"*"}, {{"id", "*", "*"}}, {"id"},
                     [](const std::string&, const std::string&) {
                       return std::string("id");
                     });
}

FinCat arrow_cat() {
  return make_fincat(
      {"0", "1"}, {{"id0", "0", "0"}, {"id1", "1", "1"}, {"f", "0", "1"}},
      {"id0", "id1"}, [](const std::string& g, const std::string& f) {
        if (f.rfind("id", 0) == 0) return g;
        return f;
      });
}

FinCat square_cat() {
  auto comp = [](const std::string& g, const std::string& f) -> std::string {
    if (f.rfind("id", 0) == 0) return g;
    if (g.rfind("id", 0) == 0) return f;
    return "st";
  };
  return make_fincat({"s", "a", "b", "t"},
                     {{"ids", "s", "s"},
                      {"ida", "a", "a"},
                      {"idb", "b", "b"},
                      {"idt", "t", "t"},
                      {"sa", "s", "a"},
                      {"sb", "s", "b"},
                      {"at", "a", "t"},
                      {"bt", "b", "t"},
                      {"st", "s", "t"}},
                     {"ids", "ida", "idb", "idt"}, comp);
}

// Discrete two-object category {a -> b}, the arrow written out as objects.
FinCat arrowfib_cat() {
  return make_fincat(
      {"a", "b"}, {{"ida", "a", "a"}, {"idb", "b", "b"}, {"m", "a", "b"}},
      {"ida", "idb"}, [](const std::string& g, const std::string& f) {
        if (f.rfind("id", 0) == 0) return g;
        return f;
      });
}

FinCat two_obj_discrete() {
  return make_fincat({"0", "1"}, {{"id0", "0", "0"}, {"id1", "1", "1"}},
                     {"id0", "id1"},
                     [](const std::string& g, const std::string&) {
                       return g;
                     });
}

// Nerve of the indiscrete groupoid on {0,1} as a raw tuple complex.
TruncatedSSet indiscrete_complex(int cap) {
  TruncatedSSet X;
  X.cap = cap;
  X.cells.resize(cap + 1);
  X.face.resize(cap + 1);
  X.degen.resize(cap + 1);
  auto tuple_id = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += '.';
      s += std::to_string(v[i]);
    }
    return s;
  };
  std::vector<std::vector<std::vector<int>>> tuples(cap + 2);
  for (int k = 0; k <= cap; ++k)
    for (int m = 0; m < (1 << (k + 1)); ++m) {
      std::vector<int> t(k + 1);
      for (int i = 0; i <= k; ++i) t[i] = (m >> (k - i)) & 1;
      tuples[k].push_back(t);
      X.cells[k].push_back(tuple_id(t));
    }
  X.rebuild_index();
  for (int k = 1; k <= cap; ++k) {
    X.face[k].assign(k + 1, std::vector<int>(X.size(k)));
    for (int i = 0; i <= k; ++i)
      for (int c = 0; c < X.size(k); ++c) {
        auto t = tuples[k][c];
        t.erase(t.begin() + i);
        X.face[k][i][c] = X.find(k - 1, tuple_id(t));
      }
  }
  for (int k = 0; k < cap; ++k) {
    X.degen[k].assign(k + 1, std::vector<int>(X.size(k)));
    for (int i = 0; i <= k; ++i)
      for (int c = 0; c < X.size(k); ++c) {
        auto t = tuples[k][c];
        t.insert(t.begin() + i, t[i]);
        X.degen[k][i][c] = X.find(k + 1, tuple_id(t));
      }
  }
  return X;
}

// One-object enrichment over a tuple complex with pointwise-min composition.
SCat one_object_min_scat(TruncatedSSet hom, const std::string& unit_vertex) {
  auto parse = [](const std::string& id) {
    std::vector<int> out;
    std::string part;
    for (char ch : id) {
      if (ch == '.') {
        out.push_back(std::stoi(part));
        part.clear();
      } else {
        part += ch;
      }
    }
    out.push_back(std::stoi(part));
    return out;
  };
  auto tuple_id = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += '.';
      s += std::to_string(v[i]);
    }
    return s;
  };
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
        auto gt = parse(hom.id(k, g));
        auto ft = parse(hom.id(k, f));
        std::vector<int> h(gt.size());
        for (std::size_t i = 0; i < gt.size(); ++i)
          h[i] = std::min(gt[i], ft[i]);
        table[k][static_cast<long long>(g) * m + f] = hom.find(k, tuple_id(h));
      }
  }
  C.homs = {share(std::move(hom))};
  return C;
}

// Strict functor between discrete enrichments, given by name tables.
SFunctor discrete_functor(
    SCatPtr src, SCatPtr tgt, const FinCat& Dsrc, const FinCat& Dtgt,
    const std::function<std::string(const std::string&)>& obj_map,
    const std::function<std::string(const std::string&)>& arrow_map) {
  SFunctor F;
  F.source = src;
  F.target = tgt;
  int n = src->nobj();
  for (int x = 0; x < n; ++x) {
    int img = tgt->find_object(obj_map(src->objects[x]));
    if (img < 0) throw InputError("discrete_functor: unknown object image");
    F.obj.push_back(img);
  }
  (void)Dsrc;
  (void)Dtgt;
  F.hom.resize(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const TruncatedSSet& H = src->hom(x, y);
      const TruncatedSSet& T = tgt->hom(F.obj[x], F.obj[y]);
      auto& h = F.hom[x * n + y];
      h.resize(src->cap + 1);
      for (int k = 0; k <= src->cap; ++k) {
        h[k].resize(H.size(k));
        for (int c = 0; c < H.size(k); ++c) {
          int img = T.find(k, arrow_map(H.id(k, c)));
          if (img < 0)
            throw InputError("discrete_functor: unknown arrow image");
          h[k][c] = img;
        }
      }
    }
  return F;
}

MonSCat monoid_monoidal(const FinCat& monoid, int cap) {
  auto cat = share(discrete_scat(monoid, cap));
  // one object; hom cells are monoid elements in arrow order
  return make_monoidal(
      cat, [](int, int) { return 0; },
      [&monoid, cat](int, int, int, int, int, int c1, int c2) {
        return monoid.comp[c1][c2];
      },
      0);
}

MonSCat two_min_monoidal(int cap) {
  FinCat D = two_obj_discrete();
  auto cat = share(discrete_scat(D, cap));
  return make_monoidal(
      cat, [](int x, int y) { return std::min(x, y); },
      [](int, int, int, int, int, int, int) { return 0; },
      cat->find_object("1"));
}

}  // namespace

FinCatPtr Corpus::fincat(const std::string& name) const {
  auto it = fincats.find(name);
  if (it == fincats.end()) throw InputError("unknown base category: " + name);
  return it->second;
}

SCatPtr Corpus::scat(const std::string& name) const {
  auto it = scats.find(name);
  if (it == scats.end())
    throw InputError("unknown enriched category: " + name);
  return it->second;
}

const MonSCat& Corpus::monoidal(const std::string& name) const {
  auto it = monoidals.find(name);
  if (it == monoidals.end()) {
    it = bad_monoidals.find(name);
    if (it == bad_monoidals.end())
      throw InputError("unknown monoidal fixture: " + name);
  }
  return it->second;
}

const DiagramSCat& Corpus::diagram(const std::string& name) const {
  auto it = diagrams.find(name);
  if (it == diagrams.end()) throw InputError("unknown diagram: " + name);
  return it->second;
}

Corpus corpus(int cap) {
  Corpus C;
  C.cap = cap;
  C.fincats["terminal"] = std::make_shared<const FinCat>(terminal_cat());
  C.fincats["arrow"] = std::make_shared<const FinCat>(arrow_cat());
  C.fincats["square"] = std::make_shared<const FinCat>(square_cat());
  C.fincats["arrowfib"] = std::make_shared<const FinCat>(arrowfib_cat());
  C.fincats["two"] = std::make_shared<const FinCat>(two_obj_discrete());
  C.fincats["z2"] = std::make_shared<const FinCat>(
      monoid_fincat({"e", "a"}, {{0, 1}, {1, 0}}));
  C.fincats["z3"] = std::make_shared<const FinCat>(
      monoid_fincat({"e", "a", "b"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
  C.fincats["idem"] = std::make_shared<const FinCat>(
      monoid_fincat({"e", "a"}, {{0, 1}, {1, 1}}));
  C.fincats["leftzero3"] = std::make_shared<const FinCat>(
      monoid_fincat({"e", "a", "b"}, {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}));

  for (const auto& name :
       {"terminal", "arrow", "square", "arrowfib", "two", "z2", "z3", "idem"})
    C.scats[name] = share(discrete_scat(*C.fincats[name], cap));
  C.scats["indiscrete"] =
      share(one_object_min_scat(indiscrete_complex(cap), "1"));
  C.scats["interval"] =
      share(one_object_min_scat(standard_simplex(1, cap), "1"));

  C.monoidals["bz2"] = monoid_monoidal(*C.fincats["z2"], cap);
  C.monoidals["bz3"] = monoid_monoidal(*C.fincats["z3"], cap);
  C.monoidals["idem"] = monoid_monoidal(*C.fincats["idem"], cap);
  C.monoidals["two_min"] = two_min_monoidal(cap);
  C.bad_monoidals["leftzero3"] = monoid_monoidal(*C.fincats["leftzero3"], cap);

  // Diagrams over the arrow category.
  {
    FinCatPtr arrow = C.fincats["arrow"];
    SCatPtr z2 = C.scats["z2"];
    DiagramSCat F;
    F.base = arrow;
    F.at = {z2, z2};
    F.arrow = {identity_sfunctor(z2), identity_sfunctor(z2),
               identity_sfunctor(z2)};
    C.diagrams["bz2_over_arrow"] = F;

    SCatPtr term = C.scats["terminal"];
    DiagramSCat P;
    P.base = arrow;
    P.at = {term, term};
    P.arrow = {identity_sfunctor(term), identity_sfunctor(term),
               identity_sfunctor(term)};
    C.diagrams["point_over_arrow"] = P;

    SCatPtr fib = C.scats["arrowfib"];
    DiagramSCat A;
    A.base = arrow;
    A.at = {term, fib};
    auto pick_a = discrete_functor(
        term, fib, *C.fincats["terminal"], *C.fincats["arrowfib"],
        [](const std::string&) { return "a"; },
        [](const std::string&) { return "ida"; });
    A.arrow = {identity_sfunctor(term), identity_sfunctor(fib), pick_a};
    C.diagrams["arrowfib_over_arrow"] = A;
  }

  // Diagrams over the commutative square.
  {
    FinCatPtr sq = C.fincats["square"];
    SCatPtr z2 = C.scats["z2"];
    SCatPtr term = C.scats["terminal"];
    auto pick_e = [&](SCatPtr target, const FinCat& tcat) {
      return discrete_functor(
          term, target, *C.fincats["terminal"], tcat,
          [](const std::string&) { return "*"; },
          [](const std::string&) { return "e"; });
    };
    DiagramSCat M;
    M.base = sq;
    M.at = {term, z2, term, z2};  // s, a, b, t
    M.arrow.resize(sq->arrows.size());
    M.arrow[sq->find_arrow("ids")] = identity_sfunctor(term);
    M.arrow[sq->find_arrow("ida")] = identity_sfunctor(z2);
    M.arrow[sq->find_arrow("idb")] = identity_sfunctor(term);
    M.arrow[sq->find_arrow("idt")] = identity_sfunctor(z2);
    M.arrow[sq->find_arrow("sa")] = pick_e(z2, *C.fincats["z2"]);
    M.arrow[sq->find_arrow("sb")] = identity_sfunctor(term);
    M.arrow[sq->find_arrow("at")] = identity_sfunctor(z2);
    M.arrow[sq->find_arrow("bt")] = pick_e(z2, *C.fincats["z2"]);
    M.arrow[sq->find_arrow("st")] = pick_e(z2, *C.fincats["z2"]);
    C.diagrams["mixed_over_square"] = M;

    DiagramSCat B;
    B.base = sq;
    B.at = {z2, z2, z2, z2};
    B.arrow.assign(sq->arrows.size(), identity_sfunctor(z2));
    C.diagrams["bz2_over_square"] = B;
  }
  return C;
}

NoLiftFixture no_lift_fixture(int cap) {
  Corpus C = corpus(cap);
  GrCat E = grothendieck(C.diagram("bz2_over_arrow"));
  int s = E.total_obj(0, 0);
  int t = E.total_obj(1, 0);
  if (E.total->hom(s, t).size(0) != 2)
    throw std::logic_error("no_lift_fixture: unexpected fixture shape");
  // Removing the whole component over the nonidentity base arrow leaves a
  // sub-enriched-category with no lift of that arrow at all.
  SCat cut = delete_hom_vertices(*E.total, s, t, {0, 1});
  NoLiftFixture fx;
  fx.total = share(std::move(cut));
  SFunctor P;
  P.source = fx.total;
  P.target = E.base_scat;
  P.obj = E.projection.obj;
  int n = fx.total->nobj();
  P.hom.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto& h = P.hom[a * n + b];
      h.resize(cap + 1);
      const TruncatedSSet& H = fx.total->hom(a, b);
      const TruncatedSSet& old = E.total->hom(a, b);
      for (int k = 0; k <= cap; ++k) {
        h[k].resize(H.size(k));
        for (int c = 0; c < H.size(k); ++c)
          h[k][c] = E.projection.at_cell(a, b, k, old.find(k, H.id(k, c)));
      }
    }
  fx.projection = std::move(P);
  return fx;
}

}  // namespace simpcat
