#include "simpcat/fincat.hpp"

#include <functional>
#include <tuple>

namespace simpcat {

int FinCat::find_object(const std::string& name) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == name) return static_cast<int>(i);
  return -1;
}

int FinCat::find_arrow(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  return -1;
}

std::vector<int> FinCat::arrows_from_to(int x, int y) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].src == x && arrows[i].tgt == y)
      out.push_back(static_cast<int>(i));
  return out;
}

int FinCat::chain_arrow(const std::vector<int>& chain_arrows,
                        const std::vector<int>& chain_objects, int i,
                        int j) const {
  int cur = ident[chain_objects[i]];
  for (int p = i; p < j; ++p) cur = compose(chain_arrows[p], cur);
  return cur;
}

Report validate_fincat(const FinCat& D) {
  Report rep;
  int n = static_cast<int>(D.objects.size());
  if (static_cast<int>(D.ident.size()) != n) {
    rep.add("identities", "one identity per object required");
    return rep;
  }
  for (int x = 0; x < n; ++x) {
    int e = D.ident[x];
    if (e < 0 || e >= static_cast<int>(D.arrows.size()) ||
        D.arrows[e].src != x || D.arrows[e].tgt != x)
      rep.add("identity", D.objects[x]);
  }
  int m = static_cast<int>(D.arrows.size());
  if (static_cast<int>(D.comp.size()) != m) {
    rep.add("composition", "table not aligned with arrows");
    return rep;
  }
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      int h = D.comp[g][f];
      if (D.composable(g, f)) {
        if (h < 0 || h >= m || D.arrows[h].src != D.arrows[f].src ||
            D.arrows[h].tgt != D.arrows[g].tgt)
          rep.add("composition", D.arrows[g].name + " o " + D.arrows[f].name);
      } else if (h != -1) {
        rep.add("composition", "non-composable pair has a composite: " +
                                   D.arrows[g].name + " o " +
                                   D.arrows[f].name);
      }
    }
  for (int f = 0; f < m; ++f) {
    if (D.comp[f][D.ident[D.arrows[f].src]] != f ||
        D.comp[D.ident[D.arrows[f].tgt]][f] != f)
      rep.add("unit law", D.arrows[f].name);
  }
  for (int h = 0; h < m; ++h)
    for (int g = 0; g < m; ++g)
      for (int f = 0; f < m; ++f)
        if (D.composable(g, f) && D.composable(h, g) &&
            D.comp[h][D.comp[g][f]] != D.comp[D.comp[h][g]][f])
          rep.add("associativity", D.arrows[h].name + " o " +
                                       D.arrows[g].name + " o " +
                                       D.arrows[f].name);
  return rep;
}

FinCat opposite_fincat(const FinCat& D) {
  FinCat E = D;
  for (auto& a : E.arrows) std::swap(a.src, a.tgt);
  int m = static_cast<int>(D.arrows.size());
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) E.comp[g][f] = D.comp[f][g];
  return E;
}

FinCat make_fincat(
    const std::vector<std::string>& objects,
    const std::vector<std::tuple<std::string, std::string, std::string>>&
        arrows,
    const std::vector<std::string>& identities,
    const std::function<std::string(const std::string&, const std::string&)>&
        compose_names) {
  FinCat D;
  D.objects = objects;
  for (const auto& [name, src, tgt] : arrows) {
    int s = D.find_object(src), t = D.find_object(tgt);
    if (s < 0 || t < 0) throw InputError("make_fincat: unknown object");
    D.arrows.push_back({name, s, t});
  }
  for (const auto& id_name : identities) {
    int a = D.find_arrow(id_name);
    if (a < 0) throw InputError("make_fincat: unknown identity arrow");
    D.ident.push_back(a);
  }
  int m = static_cast<int>(D.arrows.size());
  D.comp.assign(m, std::vector<int>(m, -1));
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f)
      if (D.composable(g, f)) {
        int h = D.find_arrow(compose_names(D.arrows[g].name, D.arrows[f].name));
        if (h < 0) throw InputError("make_fincat: composite not an arrow");
        D.comp[g][f] = h;
      }
  return D;
}

FinCat monoid_fincat(const std::vector<std::string>& elements,
                     const std::vector<std::vector<int>>& mult) {
  FinCat D;
  D.objects = {"*"};
  for (const auto& e : elements) D.arrows.push_back({e, 0, 0});
  D.ident = {0};
  int m = static_cast<int>(elements.size());
  D.comp.assign(m, std::vector<int>(m, -1));
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) D.comp[g][f] = mult[g][f];
  return D;
}

}  // namespace simpcat
