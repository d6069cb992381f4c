#pragma once

#include <memory>
#include <string>
#include <vector>

#include "simpcat/fincat.hpp"
#include "simpcat/sset.hpp"

namespace simpcat {

/// A finite simplicially enriched category. Hom complexes share one cap;
/// composition tables are stored per dimension with the pair (g, f) flattened
/// as g * |hom(x,y)_k| + f, meaning "g after f".
struct SCat {
  int cap = 0;
  std::vector<std::string> objects;
  std::vector<SSetPtr> homs;  // homs[x * nobj + y]
  // comp[(x*nobj+y)*nobj+z][k][g*|hom(x,y)_k|+f] in hom(x,z)_k
  std::vector<std::vector<std::vector<int>>> comp;
  std::vector<int> ident;  // per object: vertex index in hom(x,x)

  int nobj() const { return static_cast<int>(objects.size()); }
  int find_object(const std::string& name) const;
  const TruncatedSSet& hom(int x, int y) const { return *homs[x * nobj() + y]; }
  SSetPtr hom_ptr(int x, int y) const { return homs[x * nobj() + y]; }
  int compose(int x, int y, int z, int k, int g, int f) const {
    return comp[(x * nobj() + y) * nobj() + z][k]
               [static_cast<long long>(g) * hom(x, y).size(k) + f];
  }
};

using SCatPtr = std::shared_ptr<const SCat>;
SCatPtr share(SCat c);

/// A strict simplicial functor: preserves identities and composition on the
/// nose.
struct SFunctor {
  SCatPtr source, target;
  std::vector<int> obj;
  // hom[x*nobj+y][k]: source hom cell -> target hom cell
  std::vector<std::vector<std::vector<int>>> hom;

  int at_obj(int x) const { return obj[x]; }
  int at_cell(int x, int y, int k, int c) const {
    return hom[x * static_cast<int>(source->objects.size()) + y][k][c];
  }
};

Report validate_scat(const SCat& C);
Report validate_sfunctor(const SFunctor& F);

SCat opposite_scat(const SCat& C);
SFunctor opposite_sfunctor(const SFunctor& F);

/// Enrichment of a finite category with discrete hom complexes: one cell per
/// arrow in every dimension.
SCat discrete_scat(const FinCat& D, int cap);

SCat scat_product(const SCat& C, const SCat& D);
/// n-fold product with flat tuples; power 0 is the terminal category and
/// power 1 returns C itself.
SCat scat_power(const SCat& C, int n);
SCat scat_power(const SCat& C, int n, int cap);
SCat terminal_scat(int cap);

struct LocalKanReport {
  struct Entry {
    std::string hom;
    HornReport horns;
  };
  std::vector<Entry> entries;
  bool ok() const {
    for (const auto& e : entries)
      if (!e.horns.ok()) return false;
    return true;
  }
};
LocalKanReport is_locally_kan(const SCat& C, int d);

SFunctor identity_sfunctor(SCatPtr C);
SFunctor compose(const SFunctor& G, const SFunctor& F);
bool scat_data_equal(const SCat& C, const SCat& D);
bool sfunctor_data_equal(const SFunctor& F, const SFunctor& G);

/// Precomposition E(e2, x) -> E(e1, x) with a vertex chi of E(e1, e2).
SSetMap precomposition_map(const SCat& E, int e1, int e2, int chi, int x);
/// The hom-component of a functor as a simplicial-set map.
SSetMap hom_map(const SFunctor& F, int x, int y);

/// Deletes hom vertices plus everything they generate (cells with one of
/// them as an iterated face) from one hom complex. Rejected if a surviving
/// composite lands on a deleted cell.
SCat delete_hom_vertices(const SCat& E, int x, int y,
                         const std::vector<int>& vertices);
SCat delete_hom_vertex(const SCat& E, int x, int y, int vertex);

}  // namespace simpcat
