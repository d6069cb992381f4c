#pragma once

#include <functional>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "simpcat/report.hpp"

namespace simpcat {

/// A finite ordinary category given by tables.
struct FinCat {
  struct Arrow {
    std::string name;
    int src = 0, tgt = 0;
  };

  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<int> ident;              // per object: its identity arrow
  std::vector<std::vector<int>> comp;  // comp[g][f] = g after f; -1 otherwise

  int find_object(const std::string& name) const;
  int find_arrow(const std::string& name) const;
  std::vector<int> arrows_from_to(int x, int y) const;
  bool composable(int g, int f) const {
    return arrows[f].tgt == arrows[g].src;
  }
  int compose(int g, int f) const { return comp[g][f]; }
  /// Composite of a consecutive run arrows[i..j) of a composable chain.
  int chain_arrow(const std::vector<int>& chain_arrows,
                  const std::vector<int>& chain_objects, int i, int j) const;
};

using FinCatPtr = std::shared_ptr<const FinCat>;

Report validate_fincat(const FinCat& D);
FinCat opposite_fincat(const FinCat& D);

/// Builds a category from object names, named arrows (name, src, tgt) and a
/// composition function; identities must be listed among the arrows.
FinCat make_fincat(
    const std::vector<std::string>& objects,
    const std::vector<std::tuple<std::string, std::string, std::string>>&
        arrows,
    const std::vector<std::string>& identities,
    const std::function<std::string(const std::string&, const std::string&)>&
        compose_names);

/// One-object category on a finite monoid given by its multiplication table;
/// element 0 is the unit. mult[a][b] corresponds to "a after b".
FinCat monoid_fincat(const std::vector<std::string>& elements,
                     const std::vector<std::vector<int>>& mult);

}  // namespace simpcat
