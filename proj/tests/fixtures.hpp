#pragma once

// Small categories and enriched fixtures shared across the test suites.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "simpcat/fincat.hpp"
#include "simpcat/scat.hpp"

namespace fixtures {

using namespace simpcat;

inline FinCat z2() { return monoid_fincat({"e", "a"}, {{0, 1}, {1, 0}}); }

inline FinCat z3() {
  return monoid_fincat({"e", "a", "b"},
                       {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
}

// Idempotent commutative monoid {e, a} with a.a = a.
inline FinCat idem() { return monoid_fincat({"e", "a"}, {{0, 1}, {1, 1}}); }

inline FinCat terminal_cat() {
  return make_fincat({"*"}, {{"id", "*", "*"}}, {"id"},
                     [](const std::string&, const std::string&) {
                       return std::string("id");
                     });
}

inline FinCat arrow_cat() {
  return make_fincat(
      {"0", "1"}, {{"id0", "0", "0"}, {"id1", "1", "1"}, {"f", "0", "1"}},
      {"id0", "id1"}, [](const std::string& g, const std::string& f) {
        if (f.rfind("id", 0) == 0) return g;
        return f;  // g must be an identity
      });
}

// Commutative square poset: s < a, b < t.
inline FinCat square_cat() {
  auto comp = [](const std::string& g, const std::string& f) -> std::string {
    if (f.rfind("id", 0) == 0) return g;
    if (g.rfind("id", 0) == 0) return f;
    return "st";  // only nonidentity composites run corner to corner
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

// The two-element discrete category {0, 1}; min is its product operation.
inline FinCat two_obj_discrete() {
  return make_fincat({"0", "1"}, {{"id0", "0", "0"}, {"id1", "1", "1"}},
                     {"id0", "id1"},
                     [](const std::string& g, const std::string&) {
                       return g;
                     });
}

// Noncommutative three-element monoid (left-zero on {a,b} plus unit).
inline FinCat leftzero3() {
  return monoid_fincat({"e", "a", "b"},
                       {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}});
}

inline std::vector<int> parse_tuple(const std::string& id) {
  std::vector<int> out;
  std::stringstream ss(id);
  std::string part;
  while (std::getline(ss, part, '.')) out.push_back(std::stoi(part));
  return out;
}

inline std::string tuple_id(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(v[i]);
  }
  return s;
}

// Nerve of the indiscrete groupoid on {0,1}: k-cells are all 0/1 tuples.
inline TruncatedSSet indiscrete_complex(int cap) {
  TruncatedSSet X;
  X.cap = cap;
  X.cells.resize(cap + 1);
  X.face.resize(cap + 1);
  X.degen.resize(cap + 1);
  for (int k = 0; k <= cap; ++k)
    for (int m = 0; m < (1 << (k + 1)); ++m) {
      std::vector<int> t(k + 1);
      for (int i = 0; i <= k; ++i) t[i] = (m >> (k - i)) & 1;
      X.cells[k].push_back(tuple_id(t));
    }
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

// One-object enriched category whose hom complex has dot-joined digit tuple
// ids; composition is the pointwise minimum.
inline SCat one_object_min_scat(TruncatedSSet hom,
                                const std::string& unit_vertex) {
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

}  // namespace fixtures
