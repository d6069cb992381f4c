#include "simpcat/monoidal.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace simpcat {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

std::string seq_name(const SCat& C, const std::vector<int>& seq) {
  std::string s = "[";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) s += ",";
    s += C.objects[seq[i]];
  }
  return s + "]";
}

// Object index in the n-th power (flat tuples, last component fastest).
int power_obj_index(const SCat& C, const std::vector<int>& seq) {
  int idx = 0;
  for (int x : seq) idx = idx * C.nobj() + x;
  return idx;
}

// Flat cell index of a tuple against per-component radices.
int pack_tuple(const std::vector<int>& tuple, const std::vector<int>& radix) {
  int idx = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    idx = idx * radix[i] + tuple[i];
  return idx;
}

std::vector<int> unpack_tuple(int flat, const std::vector<int>& radix) {
  std::vector<int> t(radix.size());
  for (int i = static_cast<int>(radix.size()) - 1; i >= 0; --i) {
    t[i] = flat % radix[i];
    flat /= radix[i];
  }
  return t;
}

}  // namespace

// ------------------------------------------------------------------ tensors

int tensor_obj2(const MonSCat& C, int x, int y) {
  return C.tensor.obj[x * C.cat->nobj() + y];
}

int tensor_obj(const MonSCat& C, const std::vector<int>& xs) {
  int acc = C.unit;
  for (int x : xs) acc = tensor_obj2(C, acc, x);
  return acc;
}

namespace {

HomCell tensor_cells2(const MonSCat& C, int k, const HomCell& a,
                      const HomCell& b) {
  int n = C.cat->nobj();
  int X = a.src * n + b.src;
  int Y = a.tgt * n + b.tgt;
  int flat = a.idx * C.cat->hom(b.src, b.tgt).size(k) + b.idx;
  return {tensor_obj2(C, a.src, b.src), tensor_obj2(C, a.tgt, b.tgt), k,
          C.tensor.at_cell(X, Y, k, flat)};
}

}  // namespace

HomCell tensor_cells(const MonSCat& C, int k, const std::vector<HomCell>& cs) {
  HomCell acc{C.unit, C.unit, k,
              degenerate_vertex(C.cat->hom(C.unit, C.unit),
                                C.cat->ident[C.unit], k)};
  for (const auto& c : cs) acc = tensor_cells2(C, k, acc, c);
  return acc;
}

// --------------------------------------------------------------- validation

Report validate_monoidal(const MonSCat& C) {
  Report rep;
  rep.absorb(validate_scat(*C.cat), "underlying: ");
  if (!rep.ok()) return rep;
  if (C.unit < 0 || C.unit >= C.cat->nobj()) {
    rep.add("unit", "unit object out of range");
    return rep;
  }
  rep.absorb(validate_sfunctor(C.tensor), "tensor: ");
  int n = C.cat->nobj();
  for (int x = 0; x < n; ++x) {
    if (tensor_obj2(C, C.unit, x) != x)
      rep.add("left unit law", C.cat->objects[x]);
    if (tensor_obj2(C, x, C.unit) != x)
      rep.add("right unit law", C.cat->objects[x]);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (tensor_obj2(C, tensor_obj2(C, x, y), z) !=
            tensor_obj2(C, x, tensor_obj2(C, y, z)))
          rep.add("associativity on objects",
                  "(" + C.cat->objects[x] + "," + C.cat->objects[y] + "," +
                      C.cat->objects[z] + ")");
  if (!rep.ok()) return rep;
  // Associativity and unit laws on hom cells, elementwise.
  for (int k = 0; k <= C.cat->cap; ++k) {
    std::vector<HomCell> located;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int c = 0; c < C.cat->hom(x, y).size(k); ++c)
          located.push_back({x, y, k, c});
    HomCell unit_cell{C.unit, C.unit, k,
                      degenerate_vertex(C.cat->hom(C.unit, C.unit),
                                        C.cat->ident[C.unit], k)};
    for (const auto& f : located) {
      HomCell l = tensor_cells2(C, k, unit_cell, f);
      HomCell r = tensor_cells2(C, k, f, unit_cell);
      if (l.idx != f.idx || l.src != f.src || r.idx != f.idx)
        rep.add("unit law on cells", C.cat->hom(f.src, f.tgt).id(k, f.idx));
    }
    for (const auto& a : located)
      for (const auto& b : located)
        for (const auto& c : located) {
          HomCell lhs = tensor_cells2(C, k, tensor_cells2(C, k, a, b), c);
          HomCell rhs = tensor_cells2(C, k, a, tensor_cells2(C, k, b, c));
          if (lhs.idx != rhs.idx)
            rep.add("associativity on cells",
                    C.cat->hom(a.src, a.tgt).id(k, a.idx) + " | " +
                        C.cat->hom(b.src, b.tgt).id(k, b.idx) + " | " +
                        C.cat->hom(c.src, c.tgt).id(k, c.idx));
        }
  }
  return rep;
}

MonSCat make_monoidal(
    SCatPtr cat, const std::function<int(int, int)>& obj_tensor,
    const std::function<int(int, int, int, int, int, int, int)>& cell_tensor,
    int unit) {
  MonSCat M;
  M.cat = cat;
  M.square = share(scat_product(*cat, *cat));
  M.unit = unit;
  SFunctor T;
  T.source = M.square;
  T.target = cat;
  int n = cat->nobj();
  for (int x1 = 0; x1 < n; ++x1)
    for (int x2 = 0; x2 < n; ++x2) T.obj.push_back(obj_tensor(x1, x2));
  int N = n * n;
  T.hom.resize(static_cast<std::size_t>(N) * N);
  for (int X = 0; X < N; ++X)
    for (int Y = 0; Y < N; ++Y) {
      int x1 = X / n, x2 = X % n, y1 = Y / n, y2 = Y % n;
      auto& h = T.hom[X * N + Y];
      h.resize(cat->cap + 1);
      for (int k = 0; k <= cat->cap; ++k) {
        int s2 = cat->hom(x2, y2).size(k);
        h[k].resize(static_cast<long long>(cat->hom(x1, y1).size(k)) * s2);
        for (int c1 = 0; c1 < cat->hom(x1, y1).size(k); ++c1)
          for (int c2 = 0; c2 < s2; ++c2)
            h[k][static_cast<long long>(c1) * s2 + c2] =
                cell_tensor(x1, x2, y1, y2, k, c1, c2);
      }
    }
  M.tensor = std::move(T);
  return M;
}

MonSCat opposite_monoidal(const MonSCat& C) {
  MonSCat M;
  M.cat = share(opposite_scat(*C.cat));
  M.square = share(scat_product(*M.cat, *M.cat));
  M.unit = C.unit;
  SFunctor T;
  T.source = M.square;
  T.target = M.cat;
  T.obj = C.tensor.obj;  // the tensor of two objects is unchanged
  int N = C.cat->nobj() * C.cat->nobj();
  T.hom.resize(static_cast<std::size_t>(N) * N);
  for (int X = 0; X < N; ++X)
    for (int Y = 0; Y < N; ++Y) T.hom[X * N + Y] = C.tensor.hom[Y * N + X];
  M.tensor = std::move(T);
  return M;
}

// ----------------------------------------------------------------- Delta op

std::vector<std::vector<int>> monotone_maps(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(m + 1, 0);
  while (true) {
    out.push_back(cur);
    int p = m;
    while (p >= 0 && cur[p] == n) --p;
    if (p < 0) break;
    ++cur[p];
    for (int q = p + 1; q <= m; ++q) cur[q] = cur[p];
  }
  return out;
}

std::string monotone_arrow_name(int src_level, int tgt_level,
                                const std::vector<int>& f) {
  std::string s = "[" + std::to_string(src_level) + ">" +
                  std::to_string(tgt_level) + "]";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f[i]);
  }
  return s;
}

std::vector<int> monotone_of_arrow(const FinCat& delta, int arrow) {
  const std::string& name = delta.arrows[arrow].name;
  std::vector<int> f;
  std::size_t p = name.find(']');
  std::string part;
  for (std::size_t i = p + 1; i <= name.size(); ++i) {
    if (i == name.size() || name[i] == ',') {
      f.push_back(std::stoi(part));
      part.clear();
    } else {
      part += name[i];
    }
  }
  return f;
}

FinCat delta_op_fincat(int M) {
  if (M < 1) throw InputError("delta_op_fincat: bound must be at least 1");
  FinCat D;
  for (int n = 0; n <= M; ++n) D.objects.push_back("[" + std::to_string(n) + "]");
  std::vector<std::vector<int>> data;  // parallel to arrows
  for (int n = 0; n <= M; ++n)
    for (int m = 0; m <= M; ++m)
      for (const auto& f : monotone_maps(m, n)) {
        D.arrows.push_back({monotone_arrow_name(n, m, f), n, m});
        data.push_back(f);
      }
  for (int n = 0; n <= M; ++n) {
    std::vector<int> id(n + 1);
    for (int i = 0; i <= n; ++i) id[i] = i;
    D.ident.push_back(D.find_arrow(monotone_arrow_name(n, n, id)));
  }
  int count = static_cast<int>(D.arrows.size());
  D.comp.assign(count, std::vector<int>(count, -1));
  for (int b = 0; b < count; ++b)
    for (int a = 0; a < count; ++a) {
      if (D.arrows[a].tgt != D.arrows[b].src) continue;
      // a: [n] -> [m] via f_a : [m] -> [n]; b: [m] -> [l] via f_b.
      const auto& fa = data[a];
      const auto& fb = data[b];
      std::vector<int> comp(fb.size());
      for (std::size_t i = 0; i < fb.size(); ++i) comp[i] = fa[fb[i]];
      D.comp[b][a] = D.find_arrow(monotone_arrow_name(
          D.arrows[a].src, D.arrows[b].tgt, comp));
    }
  return D;
}

// --------------------------------------------------------------- operations

std::vector<int> apply_cf(const MonSCat& C, const std::vector<int>& f,
                          const std::vector<int>& xs) {
  int n = static_cast<int>(xs.size());
  int m = static_cast<int>(f.size()) - 1;
  for (int v : f)
    if (v < 0 || v > n) throw InputError("apply_cf: level mismatch");
  std::vector<int> ys;
  for (int i = 1; i <= m; ++i) {
    std::vector<int> slice(xs.begin() + f[i - 1], xs.begin() + f[i]);
    ys.push_back(tensor_obj(C, slice));
  }
  return ys;
}

std::vector<HomCell> apply_cf_cells(const MonSCat& C,
                                    const std::vector<int>& f, int k,
                                    const std::vector<int>& xs,
                                    const std::vector<int>& ys,
                                    const std::vector<int>& cells) {
  int m = static_cast<int>(f.size()) - 1;
  std::vector<HomCell> out;
  for (int i = 1; i <= m; ++i) {
    std::vector<HomCell> slice;
    for (int j = f[i - 1]; j < f[i]; ++j)
      slice.push_back({xs[j], ys[j], k, cells[j]});
    out.push_back(tensor_cells(C, k, slice));
  }
  return out;
}

namespace {

// The functor C^f : C^n -> C^m induced by a monotone f : [m] -> [n].
SFunctor cf_functor(const MonSCat& C, const std::vector<int>& f, SCatPtr Cn,
                    SCatPtr Cm, int n, int m) {
  SFunctor F;
  F.source = Cn;
  F.target = Cm;
  const SCat& base = *C.cat;
  int b = base.nobj();
  // enumerate source objects as tuples
  long long nobj = 1;
  for (int i = 0; i < n; ++i) nobj *= b;
  auto unpack_obj = [&](int flat, int len) {
    std::vector<int> t(len);
    for (int i = len - 1; i >= 0; --i) {
      t[i] = flat % b;
      flat /= b;
    }
    return t;
  };
  for (long long o = 0; o < nobj; ++o) {
    auto xs = unpack_obj(static_cast<int>(o), n);
    F.obj.push_back(power_obj_index(base, apply_cf(C, f, xs)));
  }
  int N = Cn->nobj();
  F.hom.resize(static_cast<std::size_t>(N) * N);
  for (int X = 0; X < N; ++X) {
    auto xs = unpack_obj(X, n);
    for (int Y = 0; Y < N; ++Y) {
      auto ys = unpack_obj(Y, n);
      auto& h = F.hom[X * N + Y];
      h.resize(Cn->cap + 1);
      auto ys_img = apply_cf(C, f, ys);
      auto xs_img = apply_cf(C, f, xs);
      for (int k = 0; k <= Cn->cap; ++k) {
        std::vector<int> src_radix(n), tgt_radix(m);
        for (int i = 0; i < n; ++i)
          src_radix[i] = base.hom(xs[i], ys[i]).size(k);
        for (int i = 0; i < m; ++i)
          tgt_radix[i] = base.hom(xs_img[i], ys_img[i]).size(k);
        h[k].resize(Cn->hom(X, Y).size(k));
        for (int c = 0; c < Cn->hom(X, Y).size(k); ++c) {
          auto tuple = unpack_tuple(c, src_radix);
          auto imgs = apply_cf_cells(C, f, k, xs, ys, tuple);
          std::vector<int> img_idx;
          for (const auto& hc : imgs) img_idx.push_back(hc.idx);
          h[k][c] = pack_tuple(img_idx, tgt_radix);
        }
      }
    }
  }
  return F;
}

// Generator functors from the face and degeneracy descriptions: tensor of
// two adjacent coordinates, deletion of an outer coordinate, unit insertion.
SFunctor generator_functor(const MonSCat& C, bool is_face, int n, int i,
                           SCatPtr src, SCatPtr tgt) {
  // For faces, source level n, target n-1; for degeneracies source level
  // n-1, target n (unit inserted at position i).
  int src_len = is_face ? n : n - 1;
  auto transform_obj = [&](const std::vector<int>& xs) {
    std::vector<int> out;
    if (is_face) {
      for (int j = 0; j < n; ++j) {
        if (i > 0 && i < n && j == i - 1) {
          out.push_back(tensor_obj2(C, xs[j], xs[j + 1]));
          ++j;
        } else if (i == 0 && j == 0) {
          // drop the first coordinate
        } else if (i == n && j == n - 1) {
          // drop the last coordinate
        } else {
          out.push_back(xs[j]);
        }
      }
    } else {
      out = xs;
      out.insert(out.begin() + i, C.unit);
    }
    return out;
  };
  auto transform_cells = [&](const std::vector<int>& xs,
                             const std::vector<int>& ys, int k,
                             const std::vector<int>& cells) {
    std::vector<HomCell> out;
    if (is_face) {
      for (int j = 0; j < n; ++j) {
        if (i > 0 && i < n && j == i - 1) {
          out.push_back(tensor_cells2(C, k, {xs[j], ys[j], k, cells[j]},
                                      {xs[j + 1], ys[j + 1], k, cells[j + 1]}));
          ++j;
        } else if (i == 0 && j == 0) {
        } else if (i == n && j == n - 1) {
        } else {
          out.push_back({xs[j], ys[j], k, cells[j]});
        }
      }
    } else {
      for (int j = 0; j < src_len; ++j)
        out.push_back({xs[j], ys[j], k, cells[j]});
      HomCell unit_cell{C.unit, C.unit, k,
                        degenerate_vertex(C.cat->hom(C.unit, C.unit),
                                          C.cat->ident[C.unit], k)};
      out.insert(out.begin() + i, unit_cell);
    }
    return out;
  };
  const SCat& base = *C.cat;
  int b = base.nobj();
  SFunctor F;
  F.source = src;
  F.target = tgt;
  auto unpack_obj = [&](int flat, int len) {
    std::vector<int> t(len);
    for (int q = len - 1; q >= 0; --q) {
      t[q] = flat % b;
      flat /= b;
    }
    return t;
  };
  for (int o = 0; o < src->nobj(); ++o)
    F.obj.push_back(power_obj_index(base, transform_obj(unpack_obj(o, src_len))));
  int N = src->nobj();
  F.hom.resize(static_cast<std::size_t>(N) * N);
  for (int X = 0; X < N; ++X) {
    auto xs = unpack_obj(X, src_len);
    auto xs_img = transform_obj(xs);
    for (int Y = 0; Y < N; ++Y) {
      auto ys = unpack_obj(Y, src_len);
      auto ys_img = transform_obj(ys);
      auto& h = F.hom[X * N + Y];
      h.resize(src->cap + 1);
      for (int k = 0; k <= src->cap; ++k) {
        std::vector<int> src_radix(src_len), tgt_radix(xs_img.size());
        for (int q = 0; q < src_len; ++q)
          src_radix[q] = base.hom(xs[q], ys[q]).size(k);
        for (std::size_t q = 0; q < xs_img.size(); ++q)
          tgt_radix[q] = base.hom(xs_img[q], ys_img[q]).size(k);
        h[k].resize(src->hom(X, Y).size(k));
        for (int c = 0; c < src->hom(X, Y).size(k); ++c) {
          auto imgs = transform_cells(xs, ys, k, unpack_tuple(c, src_radix));
          std::vector<int> img_idx;
          for (const auto& hc : imgs) img_idx.push_back(hc.idx);
          h[k][c] = pack_tuple(img_idx, tgt_radix);
        }
      }
    }
  }
  return F;
}

}  // namespace

DiagramSCat c_simplicial_object(const MonSCat& C, int M) {
  if (M < 1) throw InputError("c_simplicial_object: bound must be >= 1");
  DiagramSCat F;
  F.base = std::make_shared<const FinCat>(delta_op_fincat(M));
  for (int n = 0; n <= M; ++n) F.at.push_back(share(scat_power(*C.cat, n)));
  for (std::size_t a = 0; a < F.base->arrows.size(); ++a) {
    int n = F.base->arrows[a].src;
    int m = F.base->arrows[a].tgt;
    F.arrow.push_back(cf_functor(C, monotone_of_arrow(*F.base, static_cast<int>(a)),
                                 F.at[n], F.at[m], n, m));
  }
  // The generator images must agree with the closed formula, and all
  // simplicial identities must hold as functor equalities.
  for (int n = 1; n <= M; ++n)
    for (int i = 0; i <= n; ++i) {
      std::vector<int> delta_i;
      for (int v = 0; v <= n; ++v)
        if (v != i) delta_i.push_back(v);
      int arrow = F.base->find_arrow(monotone_arrow_name(n, n - 1, delta_i));
      SFunctor gen =
          generator_functor(C, true, n, i, F.at[n], F.at[n - 1]);
      if (!sfunctor_data_equal(F.arrow[arrow], gen))
        throw InputError(
            "c_simplicial_object: face generator disagrees with the closed "
            "formula at level " +
            std::to_string(n) + ", index " + std::to_string(i));
    }
  for (int n = 1; n <= M; ++n)
    for (int i = 0; i <= n - 1; ++i) {
      std::vector<int> sigma_i;
      for (int v = 0; v <= n; ++v) sigma_i.push_back(v <= i ? v : v - 1);
      int arrow = F.base->find_arrow(monotone_arrow_name(n - 1, n, sigma_i));
      SFunctor gen =
          generator_functor(C, false, n, i, F.at[n - 1], F.at[n]);
      if (!sfunctor_data_equal(F.arrow[arrow], gen))
        throw InputError(
            "c_simplicial_object: degeneracy generator disagrees with the "
            "closed formula at level " +
            std::to_string(n) + ", index " + std::to_string(i));
    }
  Report rep = validate_diagram_scat(F);
  if (!rep.ok())
    throw InputError("c_simplicial_object: simplicial identities fail: " +
                     rep.summary());
  return F;
}

// ---------------------------------------------------------------- C-otimes

int COtimes::find_seq(const std::vector<int>& seq) const {
  for (std::size_t o = 0; o < obj_seq.size(); ++o)
    if (obj_seq[o] == seq) return static_cast<int>(o);
  return -1;
}

std::pair<int, int> COtimes::component_of(int a, int b, int k,
                                          int cell) const {
  int n = static_cast<int>(obj_seq.size());
  const auto& comps = hom_comps[a * n + b];
  int offset = 0;
  for (std::size_t pos = 0; pos < comps.size(); ++pos) {
    if (cell < offset + comps[pos].sizes[k])
      return {static_cast<int>(pos), cell - offset};
    offset += comps[pos].sizes[k];
  }
  throw std::logic_error("COtimes::component_of: cell out of range");
}

int COtimes::cell_of(int a, int b, int k, int comp_pos, int local_flat) const {
  int n = static_cast<int>(obj_seq.size());
  const auto& comps = hom_comps[a * n + b];
  int offset = 0;
  for (int p = 0; p < comp_pos; ++p) offset += comps[p].sizes[k];
  return offset + local_flat;
}

GrArrow COtimes::chosen_lift(const MonSCat& C, int obj,
                             const std::vector<int>& f) const {
  const auto& xs = obj_seq[obj];
  std::vector<int> ys = apply_cf(C, f, xs);
  int tgt = find_seq(ys);
  if (tgt < 0) throw InputError("chosen_lift: image sequence above the bound");
  const auto& comps = hom_comps[obj * cat->nobj() + tgt];
  int pos = -1;
  for (std::size_t p = 0; p < comps.size(); ++p)
    if (comps[p].f == f) pos = static_cast<int>(p);
  if (pos < 0) throw InputError("chosen_lift: bad monotone map");
  std::vector<int> idents;
  for (int y : ys) idents.push_back(C.cat->ident[y]);
  return {obj, tgt,
          cell_of(obj, tgt, 0, pos,
                  pack_tuple(idents, [&] {
                    std::vector<int> radix;
                    for (int y : ys)
                      radix.push_back(C.cat->hom(y, y).size(0));
                    return radix;
                  }()))};
}

COtimes c_otimes(const MonSCat& C, int M, int cap) {
  if (M < 1) throw InputError("c_otimes: bound must be >= 1");
  if (cap > C.cat->cap)
    throw InputError("c_otimes: requested cap exceeds the hom cap");
  COtimes X;
  X.delta = std::make_shared<const FinCat>(delta_op_fincat(M));
  X.delta_scat = share(discrete_scat(*X.delta, cap));
  const SCat& base = *C.cat;
  SCat T;
  T.cap = cap;
  for (int lvl = 0; lvl <= M; ++lvl) {
    std::vector<int> seq(lvl, 0);
    while (true) {
      X.obj_seq.push_back(seq);
      T.objects.push_back(seq_name(base, seq));
      if (lvl == 0) break;
      int p = lvl - 1;
      while (p >= 0 && seq[p] == base.nobj() - 1) --p;
      if (p < 0) break;
      ++seq[p];
      for (int q = p + 1; q < lvl; ++q) seq[q] = 0;
    }
  }
  int N = T.nobj();
  T.homs.resize(static_cast<std::size_t>(N) * N);
  X.hom_comps.resize(static_cast<std::size_t>(N) * N);
  for (int A = 0; A < N; ++A) {
    const auto& xs = X.obj_seq[A];
    int n = static_cast<int>(xs.size());
    for (int B = 0; B < N; ++B) {
      const auto& ys = X.obj_seq[B];
      int m = static_cast<int>(ys.size());
      TruncatedSSet H;
      H.cap = cap;
      H.cells.resize(cap + 1);
      H.face.resize(cap + 1);
      H.degen.resize(cap + 1);
      for (int k = 1; k <= cap; ++k) H.face[k].resize(k + 1);
      for (int k = 0; k < cap; ++k) H.degen[k].resize(k + 1);
      auto& comps = X.hom_comps[A * N + B];
      for (const auto& f : monotone_maps(m, n)) {
        COtimes::HomComp comp;
        comp.f = f;
        comp.delta_arrow = X.delta->find_arrow(monotone_arrow_name(n, m, f));
        comp.radix.resize(cap + 1);
        comp.sizes.resize(cap + 1);
        std::vector<int> srcs = apply_cf(C, f, xs);
        std::vector<int> offset(cap + 1);
        for (int k = 0; k <= cap; ++k) {
          comp.radix[k].resize(m);
          int size = 1;
          for (int i = 0; i < m; ++i) {
            comp.radix[k][i] = base.hom(srcs[i], ys[i]).size(k);
            size *= comp.radix[k][i];
          }
          comp.sizes[k] = size;
          offset[k] = static_cast<int>(H.cells[k].size());
        }
        std::string prefix = monotone_arrow_name(n, m, f) + ":";
        for (int k = 0; k <= cap; ++k)
          for (int flat = 0; flat < comp.sizes[k]; ++flat) {
            auto tuple = unpack_tuple(flat, comp.radix[k]);
            std::string id = prefix + "(";
            for (int i = 0; i < m; ++i) {
              if (i) id += ",";
              id += base.hom(srcs[i], ys[i]).id(k, tuple[i]);
            }
            id += ")";
            H.cells[k].push_back(std::move(id));
          }
        for (int k = 1; k <= cap; ++k)
          for (int i = 0; i <= k; ++i)
            for (int flat = 0; flat < comp.sizes[k]; ++flat) {
              auto tuple = unpack_tuple(flat, comp.radix[k]);
              for (int q = 0; q < m; ++q)
                tuple[q] = base.hom(srcs[q], ys[q]).d(k, i, tuple[q]);
              H.face[k][i].push_back(offset[k - 1] +
                                     pack_tuple(tuple, comp.radix[k - 1]));
            }
        for (int k = 0; k < cap; ++k)
          for (int i = 0; i <= k; ++i)
            for (int flat = 0; flat < comp.sizes[k]; ++flat) {
              auto tuple = unpack_tuple(flat, comp.radix[k]);
              for (int q = 0; q < m; ++q)
                tuple[q] = base.hom(srcs[q], ys[q]).s(k, i, tuple[q]);
              H.degen[k][i].push_back(offset[k + 1] +
                                      pack_tuple(tuple, comp.radix[k + 1]));
            }
        comps.push_back(std::move(comp));
      }
      H.rebuild_index();
      T.homs[A * N + B] = share(std::move(H));
    }
  }
  for (int A = 0; A < N; ++A) {
    const auto& xs = X.obj_seq[A];
    int n = static_cast<int>(xs.size());
    std::vector<int> id(n + 1);
    for (int i = 0; i <= n; ++i) id[i] = i;
    const auto& comps = X.hom_comps[A * N + A];
    int pos = -1;
    for (std::size_t p = 0; p < comps.size(); ++p)
      if (comps[p].f == id) pos = static_cast<int>(p);
    std::vector<int> idents, radix;
    for (int x : xs) {
      idents.push_back(base.ident[x]);
      radix.push_back(base.hom(x, x).size(0));
    }
    int offset = 0;
    for (int p = 0; p < pos; ++p) offset += comps[p].sizes[0];
    T.ident.push_back(offset + pack_tuple(idents, radix));
  }
  // Composition: [g; gs] o [f; fs] = [f o g; g_i o (tensor of the f-slice)].
  T.comp.resize(static_cast<std::size_t>(N) * N * N);
  for (int A = 0; A < N; ++A) {
    const auto& xs = X.obj_seq[A];
    for (int B = 0; B < N; ++B) {
      const auto& ys = X.obj_seq[B];
      for (int Cc = 0; Cc < N; ++Cc) {
        const auto& zs = X.obj_seq[Cc];
        auto& table = T.comp[(A * N + B) * N + Cc];
        table.resize(cap + 1);
        const auto& fcomps = X.hom_comps[A * N + B];
        const auto& gcomps = X.hom_comps[B * N + Cc];
        const auto& hcomps = X.hom_comps[A * N + Cc];
        for (int k = 0; k <= cap; ++k) {
          long long fn = 0, gn = 0;
          for (const auto& c : fcomps) fn += c.sizes[k];
          for (const auto& c : gcomps) gn += c.sizes[k];
          table[k].resize(gn * fn);
          int goff = 0;
          for (const auto& gc : gcomps) {
            const auto& g = gc.f;
            int foff = 0;
            for (const auto& fc : fcomps) {
              const auto& f = fc.f;
              // composite base map f o g : [l] -> [n]
              std::vector<int> fg(g.size());
              for (std::size_t i = 0; i < g.size(); ++i) fg[i] = f[g[i]];
              int hpos = -1;
              for (std::size_t p = 0; p < hcomps.size(); ++p)
                if (hcomps[p].f == fg) hpos = static_cast<int>(p);
              std::vector<int> f_srcs = apply_cf(C, f, xs);
              int l = static_cast<int>(zs.size());
              for (int gflat = 0; gflat < gc.sizes[k]; ++gflat) {
                auto gt = unpack_tuple(gflat, gc.radix[k]);
                for (int fflat = 0; fflat < fc.sizes[k]; ++fflat) {
                  auto ft = unpack_tuple(fflat, fc.radix[k]);
                  std::vector<int> ht(l);
                  for (int i = 1; i <= l; ++i) {
                    std::vector<HomCell> slice;
                    for (int j = g[i - 1]; j < g[i]; ++j)
                      slice.push_back({f_srcs[j], ys[j], k, ft[j]});
                    HomCell tens = tensor_cells(C, k, slice);
                    // g_i lives in C(tensor of the y-slice, z_i)
                    int src = tens.src;
                    int mid = tens.tgt;
                    ht[i - 1] = base.compose(src, mid, zs[i - 1], k,
                                             gt[i - 1], tens.idx);
                  }
                  table[k][static_cast<long long>(goff + gflat) * fn +
                           (foff + fflat)] =
                      X.cell_of(A, Cc, k, hpos,
                                pack_tuple(ht, hcomps[hpos].radix[k]));
                }
              }
              foff += fc.sizes[k];
            }
            goff += gc.sizes[k];
          }
        }
      }
    }
  }
  X.cat = share(std::move(T));

  // Projection onto the discrete truncation of Delta op.
  SFunctor P;
  P.source = X.cat;
  P.target = X.delta_scat;
  for (int A = 0; A < N; ++A)
    P.obj.push_back(static_cast<int>(X.obj_seq[A].size()));
  P.hom.resize(static_cast<std::size_t>(N) * N);
  for (int A = 0; A < N; ++A)
    for (int B = 0; B < N; ++B) {
      int n = P.obj[A], m = P.obj[B];
      auto base_list = X.delta->arrows_from_to(n, m);
      auto& h = P.hom[A * N + B];
      h.resize(cap + 1);
      for (int k = 0; k <= cap; ++k) {
        h[k].resize(X.cat->hom(A, B).size(k));
        for (int cell = 0; cell < X.cat->hom(A, B).size(k); ++cell) {
          auto [pos, local] = X.component_of(A, B, k, cell);
          int arrow = X.hom_comps[A * N + B][pos].delta_arrow;
          h[k][cell] = static_cast<int>(
              std::find(base_list.begin(), base_list.end(), arrow) -
              base_list.begin());
        }
      }
    }
  X.projection = std::move(P);
  return X;
}

// -------------------------------------------------------- comparison checks

SFunctor cotimes_to_gr_functor(const MonSCat& C, const COtimes& X,
                               const GrCat& E) {
  SFunctor F;
  F.source = X.cat;
  F.target = E.total;
  int N = X.cat->nobj();
  for (int A = 0; A < N; ++A) {
    const auto& seq = X.obj_seq[A];
    F.obj.push_back(E.total_obj(static_cast<int>(seq.size()),
                                power_obj_index(*C.cat, seq)));
  }
  F.hom.resize(static_cast<std::size_t>(N) * N);
  for (int A = 0; A < N; ++A)
    for (int B = 0; B < N; ++B) {
      auto& h = F.hom[A * N + B];
      h.resize(X.cat->cap + 1);
      const auto& comps = X.hom_comps[A * N + B];
      int EA = F.obj[A], EB = F.obj[B];
      const auto& earrows = E.comp_arrows[EA * E.total->nobj() + EB];
      for (int k = 0; k <= X.cat->cap; ++k) {
        h[k].resize(X.cat->hom(A, B).size(k));
        for (int cell = 0; cell < X.cat->hom(A, B).size(k); ++cell) {
          auto [pos, local] = X.component_of(A, B, k, cell);
          int arrow = comps[pos].delta_arrow;
          int epos = static_cast<int>(
              std::find(earrows.begin(), earrows.end(), arrow) -
              earrows.begin());
          h[k][cell] = E.gr_cell(EA, EB, k, epos, local);
        }
      }
    }
  return F;
}

Certificate check_cotimes_gr_iso(const MonSCat& C, int M) {
  auto start = std::chrono::steady_clock::now();
  Certificate cert;
  cert.command = "check cotimes-gr";
  Report mon = validate_monoidal(C);
  cert.check("monoidal structure is strict", mon.ok(), mon.summary());
  if (!mon.ok()) return cert;
  int cap = C.cat->cap;
  COtimes X = c_otimes(C, M, cap);
  DiagramSCat Cb = c_simplicial_object(C, M);
  GrCat E = grothendieck(Cb);
  SFunctor F = cotimes_to_gr_functor(C, X, E);
  Report fn = validate_sfunctor(F);
  cert.check("correspondence is a strict functor", fn.ok(), fn.summary());

  // Object bijection.
  bool obj_bij = X.cat->nobj() == E.total->nobj();
  std::vector<bool> hit(E.total->nobj(), false);
  for (int o = 0; o < X.cat->nobj() && obj_bij; ++o) {
    if (hit[F.obj[o]]) obj_bij = false;
    hit[F.obj[o]] = true;
  }
  cert.check("bijective on objects", obj_bij);

  // Dimension-wise hom bijections, plus the hom count table per level pair.
  bool hom_bij = true;
  std::map<std::pair<int, int>, std::vector<long long>> level_counts;
  for (int A = 0; A < X.cat->nobj() && hom_bij; ++A)
    for (int B = 0; B < X.cat->nobj() && hom_bij; ++B) {
      int EA = F.obj[A], EB = F.obj[B];
      auto key = std::make_pair(static_cast<int>(X.obj_seq[A].size()),
                                static_cast<int>(X.obj_seq[B].size()));
      auto& row = level_counts[key];
      row.resize(cap + 1, 0);
      for (int k = 0; k <= cap; ++k) {
        row[k] += X.cat->hom(A, B).size(k);
        if (X.cat->hom(A, B).size(k) != E.total->hom(EA, EB).size(k)) {
          hom_bij = false;
          break;
        }
        std::vector<bool> seen(E.total->hom(EA, EB).size(k), false);
        for (int c = 0; c < X.cat->hom(A, B).size(k); ++c) {
          int img = F.at_cell(A, B, k, c);
          if (seen[img]) {
            hom_bij = false;
            break;
          }
          seen[img] = true;
        }
      }
    }
  cert.check("dimension-wise hom isomorphism", hom_bij);
  for (const auto& [key, row] : level_counts)
    cert.counts["hom[" + std::to_string(key.first) + ">" +
                std::to_string(key.second) + "]"] = row;

  // Projection compatibility: both sides report the same base arrow.
  bool proj_ok = true;
  for (int A = 0; A < X.cat->nobj() && proj_ok; ++A)
    for (int B = 0; B < X.cat->nobj() && proj_ok; ++B)
      for (int k = 0; k <= cap && proj_ok; ++k)
        for (int c = 0; c < X.cat->hom(A, B).size(k); ++c) {
          auto [pos, local] = X.component_of(A, B, k, c);
          int lhs = X.hom_comps[A * X.cat->nobj() + B][pos].delta_arrow;
          int rhs =
              E.base_arrow_of(F.obj[A], F.obj[B], k, F.at_cell(A, B, k, c));
          if (lhs != rhs) {
            proj_ok = false;
            cert.fail("projection compatibility",
                      "cell " + X.cat->hom(A, B).id(k, c));
            break;
          }
        }
  if (proj_ok) cert.check("projection compatibility", true);
  cert.wall_ms = elapsed_ms(start);
  return cert;
}

// ------------------------------------------------------------ operadic nerve

OperadicNerve operadic_nerve(const MonSCat& C, int M, int cap) {
  LocalKanReport kan = is_locally_kan(*C.cat, C.cat->cap);
  if (!kan.ok())
    throw InputError("operadic_nerve: the category is not locally Kan");
  OperadicNerve X;
  X.cx = c_otimes(C, M, C.cat->cap);
  X.nerve = coherent_nerve(X.cx.cat, cap);
  X.base_nerve = ordinary_nerve(X.cx.delta, cap);
  X.projection.source = X.nerve.sset;
  X.projection.target = X.base_nerve.sset;
  X.projection.assign.resize(cap + 1);
  int N = X.cx.cat->nobj();
  for (int n = 0; n <= cap; ++n) {
    X.projection.assign[n].resize(X.nerve.simplices[n].size());
    for (std::size_t c = 0; c < X.nerve.simplices[n].size(); ++c) {
      const CoherentSimplex& S = X.nerve.simplices[n][c];
      std::vector<int> arrs;
      int obj0 = static_cast<int>(X.cx.obj_seq[S.objects[0]].size());
      for (int i = 0; i < n; ++i) {
        int A = S.objects[i], B = S.objects[i + 1];
        auto [pos, local] =
            X.cx.component_of(A, B, 0, S.cells.at({{i, i + 1}}));
        arrs.push_back(X.cx.hom_comps[A * N + B][pos].delta_arrow);
      }
      X.projection.assign[n][c] = X.base_nerve.find_chain(obj0, arrs);
    }
  }
  return X;
}

Certificate check_monoidal_fibers(const MonSCat& C, const OperadicNerve& X,
                                  int n) {
  auto start = std::chrono::steady_clock::now();
  Certificate cert;
  cert.command = "check fibers";
  int cap = X.nerve.sset->cap;
  int M = static_cast<int>(X.cx.delta->objects.size()) - 1;
  if (n > M) throw InputError("check_monoidal_fibers: level above the bound");

  auto fiber_over = [&](int level) {
    int v = X.base_nerve.find_chain(level, {});
    return subcomplex_where(*X.nerve.sset, [&](int k, int c) {
      return X.projection.at(k, c) ==
             degenerate_vertex(*X.base_nerve.sset, v, k);
    });
  };
  TruncatedSSet fib = fiber_over(n);
  cert.counts["fiber"] = cell_counts(fib);

  CoherentNerve NC = coherent_nerve(C.cat, cap);
  cert.counts["nerve-power"] = [&] {
    std::vector<SSetPtr> factors(n, NC.sset);
    return cell_counts(nary_product(factors, cap));
  }();

  // The comparison map: project each fiber cell through the n segment
  // functors and pair the results.
  std::vector<SSetPtr> factors(n, NC.sset);
  TruncatedSSet power = nary_product(factors, cap);
  bool bij = true;
  std::string witness;
  int Nobj = X.cx.cat->nobj();
  for (int k = 0; k <= cap && bij; ++k) {
    if (fib.size(k) != power.size(k)) {
      bij = false;
      witness = "count mismatch at dim " + std::to_string(k);
      break;
    }
    std::vector<bool> seen(power.size(k), false);
    for (int c = 0; c < fib.size(k); ++c) {
      int full = X.nerve.lookup[k].at(fib.id(k, c));
      const CoherentSimplex& S = X.nerve.simplices[k][full];
      // component projections
      std::vector<int> comp_idx(n);
      for (int i = 0; i < n; ++i) {
        CoherentSimplex Si;
        Si.n = k;
        for (int j = 0; j <= k; ++j)
          Si.objects.push_back(X.cx.obj_seq[S.objects[j]][i]);
        for (const auto& [blocks, cell] : S.cells) {
          BeadShape b{blocks};
          auto g = b.ground();
          int A = S.objects[g.front()], B = S.objects[g.back()];
          auto [pos, local] = X.cx.component_of(A, B, b.dim(), cell);
          const auto& comp = X.cx.hom_comps[A * Nobj + B][pos];
          Si.cells[blocks] = unpack_tuple(local, comp.radix[b.dim()])[i];
        }
        comp_idx[i] = NC.find(Si);
        if (comp_idx[i] < 0) {
          bij = false;
          witness = "segment projection left the nerve at dim " +
                    std::to_string(k);
          break;
        }
      }
      if (!bij) break;
      int flat = 0;
      for (int i = 0; i < n; ++i)
        flat = flat * NC.sset->size(k) + comp_idx[i];
      if (seen[flat]) {
        bij = false;
        witness = "comparison not injective at dim " + std::to_string(k);
        break;
      }
      seen[flat] = true;
    }
    for (int c = 0; c < power.size(k) && bij; ++c)
      if (!seen[c]) {
        bij = false;
        witness = "comparison not surjective at dim " + std::to_string(k);
      }
  }
  cert.check("fiber over [" + std::to_string(n) +
                 "] is the power of the fiber over [1]",
             bij, witness);

  // Fiber over [1] against the coherent nerve of the underlying category.
  TruncatedSSet fib1 = fiber_over(1);
  bool one_ok = cell_counts(fib1) == cell_counts(*NC.sset);
  if (one_ok) {
    for (int k = 0; k <= cap && one_ok; ++k) {
      std::vector<bool> seen(NC.sset->size(k), false);
      for (int c = 0; c < fib1.size(k); ++c) {
        int full = X.nerve.lookup[k].at(fib1.id(k, c));
        const CoherentSimplex& S = X.nerve.simplices[k][full];
        CoherentSimplex Si;
        Si.n = k;
        for (int j = 0; j <= k; ++j)
          Si.objects.push_back(X.cx.obj_seq[S.objects[j]][0]);
        for (const auto& [blocks, cell] : S.cells) {
          BeadShape b{blocks};
          auto g = b.ground();
          int A = S.objects[g.front()], B = S.objects[g.back()];
          auto [pos, local] = X.cx.component_of(A, B, b.dim(), cell);
          const auto& comp = X.cx.hom_comps[A * Nobj + B][pos];
          Si.cells[blocks] = unpack_tuple(local, comp.radix[b.dim()])[0];
        }
        int idx = NC.find(Si);
        if (idx < 0 || seen[idx]) {
          one_ok = false;
          break;
        }
        seen[idx] = true;
      }
    }
  }
  cert.check("fiber over [1] is the nerve of the underlying category",
             one_ok);
  cert.wall_ms = elapsed_ms(start);
  return cert;
}

// ------------------------------------------------------------ op theorems

Certificate check_op_theorems(const MonSCat& C, int M, int cap) {
  auto start = std::chrono::steady_clock::now();
  Certificate cert;
  cert.command = "check opposites";
  MonSCat Cop = opposite_monoidal(C);
  Report mon = validate_monoidal(Cop);
  cert.check("opposite is strictly monoidal", mon.ok(), mon.summary());

  // (a) the power diagram of the opposite equals the opposite of the
  // power diagram, as data.
  DiagramSCat A = c_simplicial_object(C, M);
  DiagramSCat Aop = opposite_diagram_scat(A);
  DiagramSCat B = c_simplicial_object(Cop, M);
  bool leg_a = true;
  for (std::size_t i = 0; i < A.at.size() && leg_a; ++i)
    if (!scat_data_equal(*Aop.at[i], *B.at[i])) leg_a = false;
  for (std::size_t i = 0; i < A.arrow.size() && leg_a; ++i)
    if (!sfunctor_data_equal(Aop.arrow[i], B.arrow[i])) leg_a = false;
  cert.check("(a) powers of the opposite equal the opposite powers", leg_a);

  // (b) Grothendieck constructions agree with the fiberwise opposite.
  GrCat EB = grothendieck(B);
  GrCat EAop = fiberwise_op_split(grothendieck(A));
  bool leg_b = scat_data_equal(*EB.total, *EAop.total) &&
               sfunctor_data_equal(EB.projection, EAop.projection);
  cert.check("(b) total categories agree with the fiberwise opposite", leg_b);

  // (c) canonical bijection between the opposite of the operadic nerve and
  // the nerve of the opposite category of operators.
  COtimes X = c_otimes(C, M, C.cat->cap);
  CoherentNerve NX = coherent_nerve(X.cat, cap);
  CoherentNerve NXop = coherent_nerve(share(opposite_scat(*X.cat)), cap);
  bool leg_c = true;
  std::string c_witness;
  try {
    SSetMap can = opposite_nerve_canonical(NX, NXop);
    Report can_ok = validate_ssetmap(can);
    if (!can_ok.ok()) {
      leg_c = false;
      c_witness = can_ok.summary();
    }
    for (int k = 0; k <= cap && leg_c; ++k) {
      std::vector<bool> seen(NXop.sset->size(k), false);
      for (int c = 0; c < NX.sset->size(k); ++c) {
        if (seen[can.at(k, c)]) {
          leg_c = false;
          c_witness = "not injective at dim " + std::to_string(k);
          break;
        }
        seen[can.at(k, c)] = true;
      }
      if (leg_c && NX.sset->size(k) != NXop.sset->size(k)) {
        leg_c = false;
        c_witness = "count mismatch at dim " + std::to_string(k);
      }
    }
  } catch (const std::logic_error& e) {
    leg_c = false;
    c_witness = e.what();
  }
  cert.check("(c) canonical bijection onto the opposite nerve", leg_c,
             c_witness);
  cert.counts["operadic-nerve"] = cell_counts(*NX.sset);

  // (d) operadic nerve of the opposite against the fiberwise-opposite
  // construction, including the fiber comparison over [1].
  COtimes Xop = c_otimes(Cop, M, Cop.cat->cap);
  CoherentNerve NZ = coherent_nerve(Xop.cat, cap);
  CoherentNerve NG = coherent_nerve(EAop.total, cap);
  bool leg_d = true;
  std::string d_witness;
  try {
    SFunctor Phi = cotimes_to_gr_functor(Cop, Xop, EAop);
    Report phi_ok = validate_sfunctor(Phi);
    if (!phi_ok.ok()) {
      leg_d = false;
      d_witness = phi_ok.summary();
    }
    SSetMap nerve_phi = coherent_nerve_map(Phi, NZ, NG);
    Report nat = validate_ssetmap(nerve_phi);
    if (leg_d && !nat.ok()) {
      leg_d = false;
      d_witness = nat.summary();
    }
    for (int k = 0; k <= cap && leg_d; ++k) {
      if (NZ.sset->size(k) != NG.sset->size(k)) {
        leg_d = false;
        d_witness = "count mismatch at dim " + std::to_string(k);
        break;
      }
      std::vector<bool> seen(NG.sset->size(k), false);
      for (int c = 0; c < NZ.sset->size(k); ++c) {
        if (seen[nerve_phi.at(k, c)]) {
          leg_d = false;
          d_witness = "not injective at dim " + std::to_string(k);
          break;
        }
        seen[nerve_phi.at(k, c)] = true;
      }
    }
  } catch (const std::logic_error& e) {
    leg_d = false;
    d_witness = e.what();
  }
  cert.check("(d) operadic nerve of the opposite matches the fiberwise "
             "opposite",
             leg_d, d_witness);

  // (d) fiber leg: N(C-op) against op(N(C)) by the canonical bijection.
  CoherentNerve NC = coherent_nerve(C.cat, cap);
  CoherentNerve NCop = coherent_nerve(Cop.cat, cap);
  bool fiber_ok = true;
  std::string f_witness;
  try {
    SSetMap can = opposite_nerve_canonical(NC, NCop);
    Report ok = validate_ssetmap(can);
    if (!ok.ok()) {
      fiber_ok = false;
      f_witness = ok.summary();
    }
  } catch (const std::logic_error& e) {
    fiber_ok = false;
    f_witness = e.what();
  }
  cert.check("(d) underlying nerve of the opposite is the opposite nerve",
             fiber_ok, f_witness);
  cert.wall_ms = elapsed_ms(start);
  return cert;
}

}  // namespace simpcat
