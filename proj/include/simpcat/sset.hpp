#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "simpcat/report.hpp"

namespace simpcat {

using CellId = std::string;

/// A simplicial set truncated at dimension `cap`. Cells are stored in every
/// dimension up to the cap, degenerate ones included; face[k][i] and
/// degen[k][i] are index-aligned with cells[k]. Values are immutable after
/// construction and freely shareable.
struct TruncatedSSet {
  int cap = 0;
  std::vector<std::vector<CellId>> cells;            // per dimension 0..cap
  std::vector<std::vector<std::vector<int>>> face;   // face[k][i], 1<=k, 0<=i<=k
  std::vector<std::vector<std::vector<int>>> degen;  // degen[k][i], k<cap, 0<=i<=k

  int size(int k) const {
    return (k < 0 || k > cap) ? 0 : static_cast<int>(cells[k].size());
  }
  const CellId& id(int k, int idx) const { return cells[k][idx]; }
  int find(int k, const CellId& name) const;
  int d(int k, int i, int idx) const { return face[k][i][idx]; }
  int s(int k, int i, int idx) const { return degen[k][i][idx]; }

  /// Recomputes the id -> index lookup; call after assembling the data.
  void rebuild_index();
  bool operator==(const TruncatedSSet& o) const {
    return cap == o.cap && cells == o.cells && face == o.face &&
           degen == o.degen;
  }

 private:
  std::vector<std::unordered_map<std::string, int>> index_;
};

using SSetPtr = std::shared_ptr<const TruncatedSSet>;
SSetPtr share(TruncatedSSet x);

/// Dimension-wise map of simplicial sets; commutes with faces and
/// degeneracies (checked by validate_ssetmap).
struct SSetMap {
  SSetPtr source, target;
  std::vector<std::vector<int>> assign;  // per dimension

  int at(int k, int idx) const { return assign[k][idx]; }
};

/// Simplicial set with a distinguished set of edges containing all
/// degenerate ones.
struct MarkedSSet {
  SSetPtr base;
  std::vector<int> marked;  // sorted indices into base->cells[1]
};

// ---------------------------------------------------------------- structure

bool is_degenerate(const TruncatedSSet& X, int k, int idx);

/// Eilenberg-Zilber form: idx == s_{word[0]}(s_{word[1]}(... (base) ...)).
struct EzForm {
  int base_dim = 0;
  int base_idx = 0;
  std::vector<int> word;
};
EzForm ez_form(const TruncatedSSet& X, int k, int idx);

std::vector<int> nondegenerate_cells(const TruncatedSSet& X, int k);
std::vector<long long> cell_counts(const TruncatedSSet& X);
std::vector<long long> nondegenerate_counts(const TruncatedSSet& X);

/// Applies the simplicial operator induced by the monotone map
/// alpha : [m] -> [n] (given as its m+1 values) to an n-cell.
int apply_monotone(const TruncatedSSet& X, const std::vector<int>& alpha,
                   int n, int idx);

/// Lifts a vertex to the totally degenerate k-cell on it.
int degenerate_vertex(const TruncatedSSet& X, int vertex, int k);

// ---------------------------------------------------------------- operations

Report validate_sset(const TruncatedSSet& X);
Report validate_ssetmap(const SSetMap& f);

TruncatedSSet standard_simplex(int n, int cap);
TruncatedSSet opposite_sset(const TruncatedSSet& X);
TruncatedSSet binary_product(const TruncatedSSet& X, const TruncatedSSet& Y);
/// n-ary product with flat tuple cells; the empty product is the terminal
/// truncated simplicial set at the given cap.
TruncatedSSet nary_product(const std::vector<SSetPtr>& Xs, int cap);

struct PullbackResult {
  SSetPtr object;
  SSetMap to_left;   // into f.source
  SSetMap to_right;  // into g.source
};
PullbackResult pullback(const SSetMap& f, const SSetMap& g);

enum class HornMode { Inner, All };

/// Filler search for all horns of dimension <= d. Results are only claimed
/// up to the cap; fillability beyond the truncation is unknown.
struct HornReport {
  int max_dim = 0;
  long long horns_checked = 0;
  long long horns_filled = 0;
  struct Unfilled {
    int n = 0, k = 0;
    std::vector<CellId> faces;  // given faces, in position order, skipping k
  };
  std::vector<Unfilled> unfilled;
  bool ok() const { return unfilled.empty(); }
};
HornReport horn_check(const TruncatedSSet& X, HornMode mode, int d);

/// Backtracking search for a dimension-wise bijection commuting with all
/// structure maps. A returned family is verified before return; nullopt
/// means the exhaustive search ruled every candidate out.
std::optional<std::vector<std::vector<int>>> sset_iso(const TruncatedSSet& X,
                                                      const TruncatedSSet& Y);

MarkedSSet mark_sharp(SSetPtr X);
MarkedSSet mark_natural(SSetPtr X);
MarkedSSet opposite_marked(const MarkedSSet& M);

// ---------------------------------------------------------------- maps

SSetMap identity_map(SSetPtr X);
SSetMap compose(const SSetMap& g, const SSetMap& f);

/// Order-insensitive comparison keyed by cell ids.
bool data_equal(const TruncatedSSet& X, const TruncatedSSet& Y);

/// Smallest subcomplex containing the seed cells (closed under faces and
/// degeneracies). Seeds are (dimension, index) pairs.
TruncatedSSet span_subcomplex(const TruncatedSSet& X,
                              const std::vector<std::pair<int, int>>& seeds);

/// Removes the given cells together with everything having one of them as an
/// iterated face; the survivors form a subcomplex.
TruncatedSSet delete_cells_closed(const TruncatedSSet& X,
                                  const std::vector<std::pair<int, int>>& del);

/// Restricts to the cells satisfying the predicate, which must already be
/// closed under faces and degeneracies.
TruncatedSSet subcomplex_where(const TruncatedSSet& X,
                               const std::function<bool(int, int)>& keep);

/// The horn Lambda^n_k as a complex of its own, truncated at cap.
TruncatedSSet simplex_horn(int n, int k, int cap);

}  // namespace simpcat
