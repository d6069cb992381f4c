#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "simpcat/fincat.hpp"
#include "simpcat/scat.hpp"
#include "simpcat/sset.hpp"

namespace simpcat {

/// An ordered partition <I_0 | I_1 | ... | I_r> of a finite ordered set I
/// whose first block is exactly the endpoint pair of I. Equivalently, the
/// strictly increasing chain of subsets I_0 c I_0 u I_1 c ... c I.
struct BeadShape {
  std::vector<std::vector<int>> blocks;

  int dim() const { return static_cast<int>(blocks.size()) - 1; }
  std::vector<int> ground() const;
  std::vector<std::vector<int>> chain() const;
  bool operator<(const BeadShape& o) const { return blocks < o.blocks; }
};

/// Complete, duplicate-free, sorted by dimension then lexicographically.
std::vector<BeadShape> enumerate_bead_shapes(const std::vector<int>& I);

/// The generating data of a simplicial functor out of the enriched simplex
/// category of [n]: one target object per vertex, one hom cell per bead
/// shape of every subset of [n] with at least two elements.
struct CoherentSimplex {
  int n = 0;
  std::vector<int> objects;  // object indices in the target category
  std::map<std::vector<std::vector<int>>, int> cells;  // shape blocks -> cell

  std::string key() const;
};

/// A cell of some hom complex together with its location.
struct HomCell {
  int src = 0, tgt = 0, dim = 0, idx = 0;
};

/// Evaluates an arbitrary chain T_0 <= T_1 <= ... <= T_r of subsets (all
/// sharing their min and max) against stored bead-shape cells: splits the
/// chain into atomic segments over consecutive elements of T_0, lifts each
/// normalized segment by degeneracies and composes. A single-point chain
/// evaluates to the degenerate identity.
HomCell eval_chain(const SCat& K, const std::function<int(int)>& obj_of,
                   const std::function<int(const BeadShape&)>& resolve,
                   const std::vector<std::vector<int>>& chain);

/// Boundary faces forced on the cell of `shape` by lower-dimensional data.
std::vector<HomCell> bead_boundary(
    const SCat& K, const std::function<int(int)>& obj_of,
    const std::function<int(const BeadShape&)>& resolve,
    const BeadShape& shape);

// --------------------------------------------------------------- ordinary

struct OrdinaryNerve {
  SSetPtr sset;
  FinCatPtr cat;
  // per dimension: (first object, arrow list) per cell
  std::vector<std::vector<std::pair<int, std::vector<int>>>> chains;

  int find_chain(int obj0, const std::vector<int>& arrows) const;
};

OrdinaryNerve ordinary_nerve(FinCatPtr D, int cap);

// --------------------------------------------------------------- coherent

struct CoherentNerve {
  SSetPtr sset;
  SCatPtr cat;
  std::vector<std::vector<CoherentSimplex>> simplices;
  std::vector<std::map<std::string, int>> lookup;

  int find(const CoherentSimplex& S) const;
};

/// Homotopy-coherent nerve, cell-by-cell via bead shapes. Dimension n needs
/// hom complexes of dimension n-1, so cap may exceed the hom cap by one.
CoherentNerve coherent_nerve(SCatPtr K, int cap);

/// Action of a monotone map alpha : [m] -> [n] on a coherent n-simplex.
CoherentSimplex reindex_coherent(const SCat& K, const CoherentSimplex& S,
                                 const std::vector<int>& alpha);

/// Post-composition of a coherent simplex with a strict functor.
CoherentSimplex map_coherent(const SFunctor& F, const CoherentSimplex& S);

/// The simplicial-set map N(F) between computed nerves.
SSetMap coherent_nerve_map(const SFunctor& F, const CoherentNerve& NS,
                           const CoherentNerve& NT);

/// Reports boundary compatibility of every bead cell of S.
Report validate_coherent(const SCat& K, const CoherentSimplex& S);

/// The constructed (not searched) bijection op(N(C)) -> N(C^op): reverse
/// objects, reflect every bead shape, keep the cells. NCop must be the nerve
/// of opposite_scat of NC's category.
SSetMap opposite_nerve_canonical(const CoherentNerve& NC,
                                 const CoherentNerve& NCop);

// --------------------------------------------------------------- relative

/// A strict diagram of simplicial sets over a finite base category.
struct DiagramSSet {
  FinCatPtr base;
  std::vector<SSetPtr> at;      // per object
  std::vector<SSetMap> arrow;   // per arrow
};

Report validate_diagram_sset(const DiagramSSet& f);
DiagramSSet constant_point_diagram(FinCatPtr D, int cap);

/// One n-simplex of the relative nerve: a chain in the base plus one cell of
/// f(d_{max J}) for every nonempty J, restricting compatibly.
struct RelNerveSimplex {
  int n = 0;
  std::vector<int> objects;  // d_0 ... d_n
  std::vector<int> arrows;   // consecutive arrows, size n
  std::map<std::vector<int>, int> s;  // sorted J -> cell of f(d_maxJ)

  std::string key() const;
};

struct RelativeNerve {
  SSetPtr sset;
  FinCatPtr base;
  DiagramSSet f;
  std::vector<std::vector<RelNerveSimplex>> simplices;
  std::vector<std::map<std::string, int>> lookup;
  OrdinaryNerve base_nerve;
  SSetMap projection;  // sset -> base_nerve.sset

  int find(const RelNerveSimplex& T) const;
};

RelativeNerve relative_nerve(FinCatPtr D, const DiagramSSet& f, int cap);

RelNerveSimplex reindex_relative(const FinCat& D, const DiagramSSet& f,
                                 const RelNerveSimplex& T,
                                 const std::vector<int>& alpha);

Report validate_relative(const FinCat& D, const DiagramSSet& f,
                         const RelNerveSimplex& T);

/// Checks the coCartesian lifting property of one edge of X against the
/// projection: every outer 0-horn on the edge with a filled base must fill
/// compatibly, for all dimensions 2..up_to.
Report cocart_edge_fillers(const TruncatedSSet& X, const SSetMap& proj,
                           int edge, int up_to);

}  // namespace simpcat
