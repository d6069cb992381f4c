#include "simpcat/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace simpcat {

using nlohmann::json;

namespace {

json parse(const std::string& doc) {
  try {
    return json::parse(doc);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
}

template <typename T>
T field(const json& j, const std::string& name) {
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& e) {
    throw InputError("missing or bad field '" + name + "': " + e.what());
  }
}

std::string dim_key(int k, int i) {
  return std::to_string(k) + "." + std::to_string(i);
}

}  // namespace

// --------------------------------------------------------------------- sset

std::string sset_to_json(const TruncatedSSet& X) {
  json j;
  j["cap"] = X.cap;
  j["cells"] = X.cells;
  json face = json::object();
  for (int k = 1; k <= X.cap; ++k)
    for (int i = 0; i <= k; ++i) {
      json arr = json::array();
      for (int c = 0; c < X.size(k); ++c)
        arr.push_back(X.id(k - 1, X.d(k, i, c)));
      face[dim_key(k, i)] = std::move(arr);
    }
  j["face"] = std::move(face);
  json degen = json::object();
  for (int k = 0; k < X.cap; ++k)
    for (int i = 0; i <= k; ++i) {
      json arr = json::array();
      for (int c = 0; c < X.size(k); ++c)
        arr.push_back(X.id(k + 1, X.s(k, i, c)));
      degen[dim_key(k, i)] = std::move(arr);
    }
  j["degen"] = std::move(degen);
  return j.dump(2);
}

TruncatedSSet sset_from_json(const std::string& doc) {
  json j = parse(doc);
  TruncatedSSet X;
  X.cap = field<int>(j, "cap");
  if (X.cap < 0) throw InputError("negative cap");
  X.cells = field<std::vector<std::vector<CellId>>>(j, "cells");
  if (static_cast<int>(X.cells.size()) != X.cap + 1)
    throw InputError("cells must list one array per dimension up to the cap");
  X.rebuild_index();
  X.face.resize(X.cap + 1);
  X.degen.resize(X.cap + 1);
  const json& face = j.at("face");
  for (int k = 1; k <= X.cap; ++k) {
    X.face[k].resize(k + 1);
    for (int i = 0; i <= k; ++i) {
      auto ids = field<std::vector<std::string>>(face, dim_key(k, i));
      if (static_cast<int>(ids.size()) != X.size(k))
        throw InputError("face array not aligned at " + dim_key(k, i));
      for (const auto& id : ids) {
        int idx = X.find(k - 1, id);
        if (idx < 0) throw InputError("unknown face target '" + id + "'");
        X.face[k][i].push_back(idx);
      }
    }
  }
  const json& degen = j.at("degen");
  for (int k = 0; k < X.cap; ++k) {
    X.degen[k].resize(k + 1);
    for (int i = 0; i <= k; ++i) {
      auto ids = field<std::vector<std::string>>(degen, dim_key(k, i));
      if (static_cast<int>(ids.size()) != X.size(k))
        throw InputError("degeneracy array not aligned at " + dim_key(k, i));
      for (const auto& id : ids) {
        int idx = X.find(k + 1, id);
        if (idx < 0) throw InputError("unknown degeneracy target '" + id + "'");
        X.degen[k][i].push_back(idx);
      }
    }
  }
  Report rep = validate_sset(X);
  if (!rep.ok())
    throw InputError("document violates the simplicial identities: " +
                     rep.summary());
  return X;
}

std::string marked_to_json(const MarkedSSet& M) {
  json j;
  j["base"] = json::parse(sset_to_json(*M.base));
  json marked = json::array();
  for (int e : M.marked) marked.push_back(M.base->id(1, e));
  j["marked"] = std::move(marked);
  return j.dump(2);
}

MarkedSSet marked_from_json(const std::string& doc) {
  json j = parse(doc);
  MarkedSSet M;
  M.base = share(sset_from_json(j.at("base").dump()));
  for (const auto& id : field<std::vector<std::string>>(j, "marked")) {
    int e = M.base->find(1, id);
    if (e < 0) throw InputError("unknown marked edge '" + id + "'");
    M.marked.push_back(e);
  }
  std::sort(M.marked.begin(), M.marked.end());
  for (int e = 0; e < M.base->size(1); ++e)
    if (is_degenerate(*M.base, 1, e) &&
        !std::binary_search(M.marked.begin(), M.marked.end(), e))
      throw InputError("degenerate edge left unmarked");
  return M;
}

// ------------------------------------------------------------------- fincat

std::string fincat_to_json(const FinCat& D) {
  json j;
  j["objects"] = D.objects;
  json arrows = json::array();
  for (const auto& a : D.arrows)
    arrows.push_back({{"name", a.name},
                      {"src", D.objects[a.src]},
                      {"tgt", D.objects[a.tgt]}});
  j["arrows"] = std::move(arrows);
  json ident = json::object();
  for (std::size_t x = 0; x < D.objects.size(); ++x)
    ident[D.objects[x]] = D.arrows[D.ident[x]].name;
  j["ident"] = std::move(ident);
  json comp = json::array();
  for (std::size_t g = 0; g < D.arrows.size(); ++g)
    for (std::size_t f = 0; f < D.arrows.size(); ++f)
      if (D.comp[g][f] >= 0)
        comp.push_back({D.arrows[g].name, D.arrows[f].name,
                        D.arrows[D.comp[g][f]].name});
  j["comp"] = std::move(comp);
  return j.dump(2);
}

FinCat fincat_from_json(const std::string& doc) {
  json j = parse(doc);
  FinCat D;
  D.objects = field<std::vector<std::string>>(j, "objects");
  for (const auto& a : j.at("arrows")) {
    FinCat::Arrow arrow;
    arrow.name = field<std::string>(a, "name");
    arrow.src = D.find_object(field<std::string>(a, "src"));
    arrow.tgt = D.find_object(field<std::string>(a, "tgt"));
    if (arrow.src < 0 || arrow.tgt < 0)
      throw InputError("arrow endpoints must be listed objects");
    D.arrows.push_back(std::move(arrow));
  }
  for (const auto& obj : D.objects) {
    int a = D.find_arrow(field<std::string>(j.at("ident"), obj));
    if (a < 0) throw InputError("unknown identity arrow for " + obj);
    D.ident.push_back(a);
  }
  int m = static_cast<int>(D.arrows.size());
  D.comp.assign(m, std::vector<int>(m, -1));
  for (const auto& row : j.at("comp")) {
    int g = D.find_arrow(row.at(0).get<std::string>());
    int f = D.find_arrow(row.at(1).get<std::string>());
    int h = D.find_arrow(row.at(2).get<std::string>());
    if (g < 0 || f < 0 || h < 0) throw InputError("unknown arrow in comp");
    D.comp[g][f] = h;
  }
  Report rep = validate_fincat(D);
  if (!rep.ok())
    throw InputError("document violates the category axioms: " +
                     rep.summary());
  return D;
}

// --------------------------------------------------------------------- scat

namespace {

json scat_to_json_obj(const SCat& C) {
  json j;
  j["cap"] = C.cap;
  j["objects"] = C.objects;
  json homs = json::object();
  for (int x = 0; x < C.nobj(); ++x) {
    json row = json::object();
    for (int y = 0; y < C.nobj(); ++y)
      row[C.objects[y]] = json::parse(sset_to_json(C.hom(x, y)));
    homs[C.objects[x]] = std::move(row);
  }
  j["homs"] = std::move(homs);
  json ident = json::object();
  for (int x = 0; x < C.nobj(); ++x)
    ident[C.objects[x]] = C.hom(x, x).id(0, C.ident[x]);
  j["ident"] = std::move(ident);
  json comp = json::array();
  for (int x = 0; x < C.nobj(); ++x)
    for (int y = 0; y < C.nobj(); ++y)
      for (int z = 0; z < C.nobj(); ++z) {
        json table;
        table["src"] = C.objects[x];
        table["mid"] = C.objects[y];
        table["tgt"] = C.objects[z];
        json dims = json::object();
        for (int k = 0; k <= C.cap; ++k) {
          json rows = json::array();
          for (int g = 0; g < C.hom(y, z).size(k); ++g)
            for (int f = 0; f < C.hom(x, y).size(k); ++f)
              rows.push_back({C.hom(y, z).id(k, g), C.hom(x, y).id(k, f),
                              C.hom(x, z).id(k, C.compose(x, y, z, k, g, f))});
          dims[std::to_string(k)] = std::move(rows);
        }
        table["cells"] = std::move(dims);
        comp.push_back(std::move(table));
      }
  j["comp"] = std::move(comp);
  return j;
}

SCat scat_from_json_obj(const json& j) {
  SCat C;
  C.cap = field<int>(j, "cap");
  C.objects = field<std::vector<std::string>>(j, "objects");
  int n = C.nobj();
  C.homs.resize(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      C.homs[x * n + y] = share(sset_from_json(
          j.at("homs").at(C.objects[x]).at(C.objects[y]).dump()));
  for (int x = 0; x < n; ++x) {
    std::string id = field<std::string>(j.at("ident"), C.objects[x]);
    int v = C.hom(x, x).find(0, id);
    if (v < 0) throw InputError("unknown identity vertex for " + C.objects[x]);
    C.ident.push_back(v);
  }
  C.comp.resize(static_cast<std::size_t>(n) * n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        auto& table = C.comp[(x * n + y) * n + z];
        table.assign(C.cap + 1, {});
        for (int k = 0; k <= C.cap; ++k)
          table[k].assign(
              static_cast<long long>(C.hom(y, z).size(k)) *
                  C.hom(x, y).size(k),
              -1);
      }
  for (const auto& table : j.at("comp")) {
    int x = C.find_object(field<std::string>(table, "src"));
    int y = C.find_object(field<std::string>(table, "mid"));
    int z = C.find_object(field<std::string>(table, "tgt"));
    if (x < 0 || y < 0 || z < 0) throw InputError("unknown object in comp");
    for (const auto& [key, rows] : table.at("cells").items()) {
      int k = std::stoi(key);
      if (k < 0 || k > C.cap) throw InputError("bad dimension in comp");
      for (const auto& row : rows) {
        int g = C.hom(y, z).find(k, row.at(0).get<std::string>());
        int f = C.hom(x, y).find(k, row.at(1).get<std::string>());
        int h = C.hom(x, z).find(k, row.at(2).get<std::string>());
        if (g < 0 || f < 0 || h < 0)
          throw InputError("unknown cell in comp row");
        C.comp[(x * n + y) * n + z][k]
              [static_cast<long long>(g) * C.hom(x, y).size(k) + f] = h;
      }
    }
  }
  for (const auto& table : C.comp)
    for (const auto& dim : table)
      for (int v : dim)
        if (v < 0) throw InputError("incomplete composition table");
  Report rep = validate_scat(C);
  if (!rep.ok())
    throw InputError("document violates the enrichment axioms: " +
                     rep.summary());
  return C;
}

}  // namespace

std::string scat_to_json(const SCat& C) { return scat_to_json_obj(C).dump(2); }

SCat scat_from_json(const std::string& doc) {
  return scat_from_json_obj(parse(doc));
}

// ----------------------------------------------------------------- monoidal

std::string monoidal_to_json(const MonSCat& C) {
  json j;
  j["cat"] = scat_to_json_obj(*C.cat);
  j["unit"] = C.cat->objects[C.unit];
  json obj = json::array();
  int n = C.cat->nobj();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      obj.push_back({C.cat->objects[x], C.cat->objects[y],
                     C.cat->objects[tensor_obj2(C, x, y)]});
  j["tensor_obj"] = std::move(obj);
  json hom = json::array();
  for (int x1 = 0; x1 < n; ++x1)
    for (int x2 = 0; x2 < n; ++x2)
      for (int y1 = 0; y1 < n; ++y1)
        for (int y2 = 0; y2 < n; ++y2) {
          json entry;
          entry["src"] = {C.cat->objects[x1], C.cat->objects[x2]};
          entry["tgt"] = {C.cat->objects[y1], C.cat->objects[y2]};
          json dims = json::object();
          for (int k = 0; k <= C.cat->cap; ++k) {
            json rows = json::array();
            for (int c1 = 0; c1 < C.cat->hom(x1, y1).size(k); ++c1)
              for (int c2 = 0; c2 < C.cat->hom(x2, y2).size(k); ++c2) {
                HomCell img = [&] {
                  std::vector<HomCell> pair{{x1, y1, k, c1}, {x2, y2, k, c2}};
                  return tensor_cells(C, k, pair);
                }();
                rows.push_back({C.cat->hom(x1, y1).id(k, c1),
                                C.cat->hom(x2, y2).id(k, c2),
                                C.cat->hom(img.src, img.tgt).id(k, img.idx)});
              }
            dims[std::to_string(k)] = std::move(rows);
          }
          entry["cells"] = std::move(dims);
          hom.push_back(std::move(entry));
        }
  j["tensor_hom"] = std::move(hom);
  return j.dump(2);
}

MonSCat monoidal_from_json(const std::string& doc) {
  json j = parse(doc);
  auto cat = share(scat_from_json_obj(j.at("cat")));
  int n = cat->nobj();
  std::vector<int> obj_table(static_cast<std::size_t>(n) * n, -1);
  for (const auto& row : j.at("tensor_obj")) {
    int x = cat->find_object(row.at(0).get<std::string>());
    int y = cat->find_object(row.at(1).get<std::string>());
    int z = cat->find_object(row.at(2).get<std::string>());
    if (x < 0 || y < 0 || z < 0)
      throw InputError("unknown object in tensor table");
    obj_table[x * n + y] = z;
  }
  for (int v : obj_table)
    if (v < 0) throw InputError("incomplete tensor object table");
  // cell tables keyed by located pairs
  std::map<std::tuple<int, int, int, int, int>, std::map<std::pair<int, int>, int>>
      cell_table;
  for (const auto& entry : j.at("tensor_hom")) {
    int x1 = cat->find_object(entry.at("src").at(0).get<std::string>());
    int x2 = cat->find_object(entry.at("src").at(1).get<std::string>());
    int y1 = cat->find_object(entry.at("tgt").at(0).get<std::string>());
    int y2 = cat->find_object(entry.at("tgt").at(1).get<std::string>());
    if (x1 < 0 || x2 < 0 || y1 < 0 || y2 < 0)
      throw InputError("unknown object in tensor hom table");
    for (const auto& [key, rows] : entry.at("cells").items()) {
      int k = std::stoi(key);
      for (const auto& row : rows) {
        int c1 = cat->hom(x1, y1).find(k, row.at(0).get<std::string>());
        int c2 = cat->hom(x2, y2).find(k, row.at(1).get<std::string>());
        int tx = obj_table[x1 * n + x2];
        int ty = obj_table[y1 * n + y2];
        int img = cat->hom(tx, ty).find(k, row.at(2).get<std::string>());
        if (c1 < 0 || c2 < 0 || img < 0)
          throw InputError("unknown cell in tensor hom row");
        cell_table[{x1, x2, y1, y2, k}][{c1, c2}] = img;
      }
    }
  }
  int unit = cat->find_object(field<std::string>(j, "unit"));
  if (unit < 0) throw InputError("unknown unit object");
  MonSCat M = make_monoidal(
      cat, [&](int x, int y) { return obj_table[x * n + y]; },
      [&](int x1, int x2, int y1, int y2, int k, int c1, int c2) {
        auto it = cell_table.find({x1, x2, y1, y2, k});
        if (it == cell_table.end())
          throw InputError("incomplete tensor hom table");
        auto jt = it->second.find({c1, c2});
        if (jt == it->second.end())
          throw InputError("incomplete tensor hom table");
        return jt->second;
      },
      unit);
  Report rep = validate_monoidal(M);
  if (!rep.ok())
    throw InputError("document is not strictly monoidal: " + rep.summary());
  return M;
}

// ------------------------------------------------------------ diagram scat

std::string diagram_scat_to_json(const DiagramSCat& F) {
  json j;
  j["base"] = json::parse(fincat_to_json(*F.base));
  json fibers = json::object();
  for (std::size_t d = 0; d < F.at.size(); ++d)
    fibers[F.base->objects[d]] = scat_to_json_obj(*F.at[d]);
  j["fibers"] = std::move(fibers);
  json arrows = json::object();
  for (std::size_t a = 0; a < F.arrow.size(); ++a) {
    const SFunctor& Fa = F.arrow[a];
    json fj;
    json obj = json::object();
    for (int x = 0; x < Fa.source->nobj(); ++x)
      obj[Fa.source->objects[x]] = Fa.target->objects[Fa.obj[x]];
    fj["obj"] = std::move(obj);
    json hom = json::array();
    for (int x = 0; x < Fa.source->nobj(); ++x)
      for (int y = 0; y < Fa.source->nobj(); ++y) {
        json entry;
        entry["src"] = Fa.source->objects[x];
        entry["tgt"] = Fa.source->objects[y];
        json dims = json::object();
        for (int k = 0; k <= Fa.source->cap; ++k) {
          json rows = json::array();
          for (int c = 0; c < Fa.source->hom(x, y).size(k); ++c)
            rows.push_back(
                {Fa.source->hom(x, y).id(k, c),
                 Fa.target->hom(Fa.obj[x], Fa.obj[y])
                     .id(k, Fa.at_cell(x, y, k, c))});
          dims[std::to_string(k)] = std::move(rows);
        }
        entry["cells"] = std::move(dims);
        hom.push_back(std::move(entry));
      }
    fj["hom"] = std::move(hom);
    arrows[F.base->arrows[a].name] = std::move(fj);
  }
  j["arrows"] = std::move(arrows);
  return j.dump(2);
}

DiagramSCat diagram_scat_from_json(const std::string& doc) {
  json j = parse(doc);
  DiagramSCat F;
  F.base = std::make_shared<const FinCat>(
      fincat_from_json(j.at("base").dump()));
  for (const auto& obj : F.base->objects)
    F.at.push_back(share(scat_from_json_obj(j.at("fibers").at(obj))));
  for (std::size_t a = 0; a < F.base->arrows.size(); ++a) {
    const auto& arrow = F.base->arrows[a];
    const json& fj = j.at("arrows").at(arrow.name);
    SFunctor Fa;
    Fa.source = F.at[arrow.src];
    Fa.target = F.at[arrow.tgt];
    int n = Fa.source->nobj();
    for (int x = 0; x < n; ++x) {
      int img = Fa.target->find_object(
          field<std::string>(fj.at("obj"), Fa.source->objects[x]));
      if (img < 0) throw InputError("unknown object image in " + arrow.name);
      Fa.obj.push_back(img);
    }
    Fa.hom.resize(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        auto& h = Fa.hom[x * n + y];
        h.resize(Fa.source->cap + 1);
        for (int k = 0; k <= Fa.source->cap; ++k)
          h[k].assign(Fa.source->hom(x, y).size(k), -1);
      }
    for (const auto& entry : fj.at("hom")) {
      int x = Fa.source->find_object(field<std::string>(entry, "src"));
      int y = Fa.source->find_object(field<std::string>(entry, "tgt"));
      if (x < 0 || y < 0) throw InputError("unknown pair in " + arrow.name);
      for (const auto& [key, rows] : entry.at("cells").items()) {
        int k = std::stoi(key);
        for (const auto& row : rows) {
          int c = Fa.source->hom(x, y).find(k, row.at(0).get<std::string>());
          int img = Fa.target->hom(Fa.obj[x], Fa.obj[y])
                        .find(k, row.at(1).get<std::string>());
          if (c < 0 || img < 0)
            throw InputError("unknown cell image in " + arrow.name);
          Fa.hom[x * n + y][k][c] = img;
        }
      }
    }
    for (const auto& pair : Fa.hom)
      for (const auto& dim : pair)
        for (int v : dim)
          if (v < 0)
            throw InputError("incomplete hom table in " + arrow.name);
    F.arrow.push_back(std::move(Fa));
  }
  Report rep = validate_diagram_scat(F);
  if (!rep.ok())
    throw InputError("document is not a strict diagram: " + rep.summary());
  return F;
}

// ----------------------------------------------------------------- sidecars

std::string ordinary_nerve_sidecar(const OrdinaryNerve& N) {
  json j = json::object();
  for (int k = 0; k <= N.sset->cap; ++k)
    for (std::size_t c = 0; c < N.chains[k].size(); ++c) {
      const auto& [o0, arrs] = N.chains[k][c];
      json entry;
      entry["object"] = N.cat->objects[o0];
      json names = json::array();
      for (int a : arrs) names.push_back(N.cat->arrows[a].name);
      entry["chain"] = std::move(names);
      j[N.sset->id(k, static_cast<int>(c))] = std::move(entry);
    }
  return j.dump(2);
}

std::string coherent_nerve_sidecar(const CoherentNerve& N) {
  json j = json::object();
  for (int k = 0; k <= N.sset->cap; ++k)
    for (std::size_t c = 0; c < N.simplices[k].size(); ++c) {
      const CoherentSimplex& S = N.simplices[k][c];
      json entry;
      json objs = json::array();
      for (int o : S.objects) objs.push_back(N.cat->objects[o]);
      entry["objects"] = std::move(objs);
      json beads = json::object();
      for (const auto& [blocks, cell] : S.cells) {
        std::string key;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
          if (b) key += "|";
          for (std::size_t e = 0; e < blocks[b].size(); ++e) {
            if (e) key += " ";
            key += std::to_string(blocks[b][e]);
          }
        }
        BeadShape shape{blocks};
        auto g = shape.ground();
        beads[key] = N.cat->hom(S.objects[g.front()], S.objects[g.back()])
                         .id(shape.dim(), cell);
      }
      entry["beads"] = std::move(beads);
      j[N.sset->id(k, static_cast<int>(c))] = std::move(entry);
    }
  return j.dump(2);
}

std::string relative_nerve_sidecar(const RelativeNerve& N) {
  json j = json::object();
  for (int k = 0; k <= N.sset->cap; ++k)
    for (std::size_t c = 0; c < N.simplices[k].size(); ++c) {
      const RelNerveSimplex& T = N.simplices[k][c];
      json entry;
      json objs = json::array();
      for (int o : T.objects) objs.push_back(N.base->objects[o]);
      entry["chain_objects"] = std::move(objs);
      json arrs = json::array();
      for (int a : T.arrows) arrs.push_back(N.base->arrows[a].name);
      entry["chain"] = std::move(arrs);
      json fam = json::object();
      for (const auto& [J, cell] : T.s) {
        std::string key;
        for (std::size_t i = 0; i < J.size(); ++i) {
          if (i) key += " ";
          key += std::to_string(J[i]);
        }
        fam[key] =
            N.f.at[T.objects[J.back()]]->id(static_cast<int>(J.size()) - 1,
                                            cell);
      }
      entry["family"] = std::move(fam);
      j[N.sset->id(k, static_cast<int>(c))] = std::move(entry);
    }
  return j.dump(2);
}

// -------------------------------------------------------------------- files

std::string content_hash(const std::string& doc) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : doc) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
}

}  // namespace simpcat
