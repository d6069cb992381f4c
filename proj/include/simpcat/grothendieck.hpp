#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "simpcat/fincat.hpp"
#include "simpcat/nerves.hpp"
#include "simpcat/report.hpp"
#include "simpcat/scat.hpp"

namespace simpcat {

/// A strict diagram of enriched categories over a finite base category.
struct DiagramSCat {
  FinCatPtr base;
  std::vector<SCatPtr> at;      // per object of the base
  std::vector<SFunctor> arrow;  // per arrow of the base
};

Report validate_diagram_scat(const DiagramSCat& F);
/// Applies the opposite pointwise: fibers and transition functors.
DiagramSCat opposite_diagram_scat(const DiagramSCat& F);

/// Total category of a diagram: objects are pairs (x, d), hom complexes
/// decompose as coproducts over base arrows with fiber hom components.
struct GrCat {
  SCatPtr total;
  SCatPtr base_scat;  // discrete enrichment of the base
  SFunctor projection;
  DiagramSCat provenance;

  std::vector<std::pair<int, int>> obj_info;    // total obj -> (d, x)
  std::vector<std::vector<int>> obj_of;         // [d][x] -> total obj
  std::vector<std::vector<int>> comp_arrows;    // per obj pair: base arrows
  std::vector<std::vector<std::vector<int>>> comp_sizes;  // [pair][pos][dim]

  int total_obj(int d, int x) const { return obj_of[d][x]; }
  /// (position in comp_arrows, local cell index) of a total hom cell.
  std::pair<int, int> component_of(int a, int b, int k, int cell) const;
  int gr_cell(int a, int b, int k, int pos, int local) const;
  /// Base arrow of the component containing the cell.
  int base_arrow_of(int a, int b, int k, int cell) const;
};

GrCat grothendieck(const DiagramSCat& F);

struct GrArrow {
  int src = 0, tgt = 0;  // total objects
  int vertex = 0;        // vertex of total.hom(src, tgt)
};

/// The canonical coCartesian lift (identity component over phi).
GrArrow cocartesian_lift(const GrCat& E, int total_obj, int phi);

/// Pullback criterion for an arrow chi against a projection onto a discrete
/// base: for every object, the comparison into the pullback must be a
/// dimension-wise bijection up to dimension d.
Report is_pcocartesian(const SFunctor& P, int e_src, int e_tgt,
                       int chi_vertex, int d);

/// Searches a coCartesian lift of every base arrow at every object.
Report is_opfibration(const SFunctor& P, int d);

/// Fiberwise opposite of a split opfibration, computed through provenance.
GrCat fiberwise_op_split(const GrCat& E);

/// A diagram of enriched categories together with its fiberwise coherent
/// nerves and the induced diagram of simplicial sets.
struct NervedDiagram {
  DiagramSCat F;
  std::vector<CoherentNerve> fibers;
  DiagramSSet diagram;
};

NervedDiagram nerve_diagram(const DiagramSCat& F, int cap);

/// Explicit simplex translation from the nerve of the total category to the
/// relative nerve, and back.
RelNerveSimplex gr_simplex_to_relnerve(const GrCat& E, const NervedDiagram& ND,
                                       const CoherentSimplex& S);
CoherentSimplex relnerve_simplex_to_gr(const GrCat& E, const NervedDiagram& ND,
                                       const RelNerveSimplex& T);

/// Per-dimension comparison of the two nerve constructions: equal counts,
/// mutually inverse explicit maps, compatibility with structure maps and
/// with both projections.
Certificate check_gr_relnerve_iso(const DiagramSCat& F, int n_max);

}  // namespace simpcat
