#include "simpcat/nerves.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace simpcat {

// ------------------------------------------------------------------ beads

std::vector<int> BeadShape::ground() const {
  std::vector<int> g;
  for (const auto& b : blocks) g.insert(g.end(), b.begin(), b.end());
  std::sort(g.begin(), g.end());
  return g;
}

std::vector<std::vector<int>> BeadShape::chain() const {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  for (const auto& b : blocks) {
    cur.insert(cur.end(), b.begin(), b.end());
    std::sort(cur.begin(), cur.end());
    out.push_back(cur);
  }
  return out;
}

std::vector<BeadShape> enumerate_bead_shapes(const std::vector<int>& I) {
  if (I.size() < 2)
    throw InputError("enumerate_bead_shapes: need at least two elements");
  std::vector<int> S = I;
  std::sort(S.begin(), S.end());
  std::vector<int> interior(S.begin() + 1, S.end() - 1);
  std::vector<int> endpoints = {S.front(), S.back()};
  std::vector<BeadShape> out;
  int q = static_cast<int>(interior.size());
  if (q == 0) {
    out.push_back({{endpoints}});
    return out;
  }
  // Ordered partitions of the interior into r nonempty blocks correspond to
  // surjections interior -> {0..r-1}.
  for (int r = 1; r <= q; ++r) {
    std::vector<int> f(q, 0);
    while (true) {
      std::vector<std::vector<int>> fibers(r);
      for (int e = 0; e < q; ++e) fibers[f[e]].push_back(interior[e]);
      bool surj = true;
      for (const auto& fb : fibers)
        if (fb.empty()) surj = false;
      if (surj) {
        BeadShape b;
        b.blocks.push_back(endpoints);
        for (auto& fb : fibers) b.blocks.push_back(fb);
        out.push_back(std::move(b));
      }
      int p = q - 1;
      while (p >= 0 && f[p] == r - 1) --p;
      if (p < 0) break;
      ++f[p];
      for (int e = p + 1; e < q; ++e) f[e] = 0;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const BeadShape& a, const BeadShape& b) {
              if (a.dim() != b.dim()) return a.dim() < b.dim();
              return a.blocks < b.blocks;
            });
  return out;
}

std::string CoherentSimplex::key() const {
  std::ostringstream os;
  os << "o";
  for (int o : objects) os << "," << o;
  for (const auto& [blocks, cell] : cells) {
    os << "|";
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (b) os << "-";
      for (std::size_t e = 0; e < blocks[b].size(); ++e) {
        if (e) os << ".";
        os << blocks[b][e];
      }
    }
    os << ":" << cell;
  }
  return os.str();
}

HomCell eval_chain(const SCat& K, const std::function<int(int)>& obj_of,
                   const std::function<int(const BeadShape&)>& resolve,
                   const std::vector<std::vector<int>>& chain) {
  int r = static_cast<int>(chain.size()) - 1;
  const std::vector<int>& T0 = chain.front();
  int a = obj_of(T0.front());
  if (T0.front() == T0.back())
    return {a, a, r, degenerate_vertex(K.hom(a, a), K.ident[a], r)};
  HomCell acc;
  bool first = true;
  for (std::size_t l = 0; l + 1 < T0.size(); ++l) {
    int lo = T0[l], hi = T0[l + 1];
    // Restrict the chain to the segment [lo, hi] and normalize repeats.
    std::vector<std::vector<int>> distinct;
    std::vector<int> sigma(r + 1);
    for (int qi = 0; qi <= r; ++qi) {
      std::vector<int> rT;
      for (int v : chain[qi])
        if (v >= lo && v <= hi) rT.push_back(v);
      if (distinct.empty() || rT != distinct.back())
        distinct.push_back(std::move(rT));
      sigma[qi] = static_cast<int>(distinct.size()) - 1;
    }
    int p = static_cast<int>(distinct.size()) - 1;
    BeadShape bead;
    bead.blocks.push_back(distinct[0]);
    for (int qi = 1; qi <= p; ++qi) {
      std::vector<int> blk;
      std::set_difference(distinct[qi].begin(), distinct[qi].end(),
                          distinct[qi - 1].begin(), distinct[qi - 1].end(),
                          std::back_inserter(blk));
      bead.blocks.push_back(std::move(blk));
    }
    const TruncatedSSet& H = K.hom(obj_of(lo), obj_of(hi));
    HomCell cur{obj_of(lo), obj_of(hi), r,
                apply_monotone(H, sigma, p, resolve(bead))};
    if (first) {
      acc = cur;
      first = false;
    } else {
      acc = {acc.src, cur.tgt, r,
             K.compose(acc.src, cur.src, cur.tgt, r, cur.idx, acc.idx)};
    }
  }
  return acc;
}

std::vector<HomCell> bead_boundary(
    const SCat& K, const std::function<int(int)>& obj_of,
    const std::function<int(const BeadShape&)>& resolve,
    const BeadShape& shape) {
  auto chain = shape.chain();
  int r = shape.dim();
  std::vector<HomCell> out;
  for (int q = 0; q <= r; ++q) {
    std::vector<std::vector<int>> sub;
    for (int t = 0; t <= r; ++t)
      if (t != q) sub.push_back(chain[t]);
    out.push_back(eval_chain(K, obj_of, resolve, sub));
  }
  return out;
}

// --------------------------------------------------------------- ordinary

int OrdinaryNerve::find_chain(int obj0, const std::vector<int>& arrows) const {
  if (arrows.empty()) return sset->find(0, cat->objects[obj0]);
  std::string id;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (i) id += '|';
    id += cat->arrows[arrows[i]].name;
  }
  return sset->find(static_cast<int>(arrows.size()), id);
}

OrdinaryNerve ordinary_nerve(FinCatPtr D, int cap) {
  OrdinaryNerve N;
  N.cat = D;
  N.chains.resize(cap + 1);
  TruncatedSSet X;
  X.cap = cap;
  X.cells.resize(cap + 1);
  X.face.resize(cap + 1);
  X.degen.resize(cap + 1);
  for (int x = 0; x < static_cast<int>(D->objects.size()); ++x) {
    N.chains[0].push_back({x, {}});
    X.cells[0].push_back(D->objects[x]);
  }
  for (int k = 1; k <= cap; ++k) {
    for (const auto& [o0, arrs] : N.chains[k - 1]) {
      int last = arrs.empty() ? o0 : D->arrows[arrs.back()].tgt;
      for (std::size_t a = 0; a < D->arrows.size(); ++a)
        if (D->arrows[a].src == last) {
          auto ext = arrs;
          ext.push_back(static_cast<int>(a));
          std::string id;
          for (std::size_t i = 0; i < ext.size(); ++i) {
            if (i) id += '|';
            id += D->arrows[ext[i]].name;
          }
          N.chains[k].push_back({o0, std::move(ext)});
          X.cells[k].push_back(std::move(id));
        }
    }
  }
  X.rebuild_index();
  auto find_chain = [&](int obj0, const std::vector<int>& arrows) {
    if (arrows.empty()) return X.find(0, D->objects[obj0]);
    std::string id;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      if (i) id += '|';
      id += D->arrows[arrows[i]].name;
    }
    return X.find(static_cast<int>(arrows.size()), id);
  };
  auto object_at = [&](int o0, const std::vector<int>& arrs, int i) {
    return i == 0 ? o0 : D->arrows[arrs[i - 1]].tgt;
  };
  for (int k = 1; k <= cap; ++k) {
    X.face[k].assign(k + 1, std::vector<int>(X.size(k)));
    for (int c = 0; c < X.size(k); ++c) {
      const auto& [o0, arrs] = N.chains[k][c];
      for (int i = 0; i <= k; ++i) {
        int obj0 = o0;
        std::vector<int> out;
        if (i == 0) {
          obj0 = D->arrows[arrs[0]].tgt;
          out.assign(arrs.begin() + 1, arrs.end());
        } else if (i == k) {
          out.assign(arrs.begin(), arrs.end() - 1);
        } else {
          out = arrs;
          out[i - 1] = D->compose(arrs[i], arrs[i - 1]);
          out.erase(out.begin() + i);
        }
        X.face[k][i][c] = find_chain(obj0, out);
      }
    }
  }
  for (int k = 0; k < cap; ++k) {
    X.degen[k].assign(k + 1, std::vector<int>(X.size(k)));
    for (int c = 0; c < X.size(k); ++c) {
      const auto& [o0, arrs] = N.chains[k][c];
      for (int i = 0; i <= k; ++i) {
        auto out = arrs;
        out.insert(out.begin() + i, D->ident[object_at(o0, arrs, i)]);
        X.degen[k][i][c] = find_chain(o0, out);
      }
    }
  }
  N.sset = share(std::move(X));
  return N;
}

// --------------------------------------------------------------- coherent

namespace {

// All bead shapes of subsets of [n], grouped by dimension.
std::vector<std::vector<BeadShape>> shapes_by_dim(int n) {
  std::vector<std::vector<BeadShape>> by_dim(std::max(n, 0));
  for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
    std::vector<int> I;
    for (int i = 0; i <= n; ++i)
      if (mask & (1 << i)) I.push_back(i);
    if (I.size() < 2) continue;
    for (auto& b : enumerate_bead_shapes(I))
      by_dim[b.dim()].push_back(std::move(b));
  }
  return by_dim;
}

std::vector<CoherentSimplex> enumerate_coherent(const SCat& K, int n) {
  std::vector<CoherentSimplex> out;
  if (n == 0) {
    for (int x = 0; x < K.nobj(); ++x) {
      CoherentSimplex S;
      S.n = 0;
      S.objects = {x};
      out.push_back(std::move(S));
    }
    return out;
  }
  auto levels = shapes_by_dim(n);
  CoherentSimplex cur;
  cur.n = n;
  cur.objects.assign(n + 1, 0);
  auto obj_of = [&](int label) { return cur.objects[label]; };
  std::function<int(const BeadShape&)> resolve = [&](const BeadShape& b) {
    return cur.cells.at(b.blocks);
  };
  std::function<void(int)> level = [&](int r) {
    if (r >= static_cast<int>(levels.size())) {
      out.push_back(cur);
      return;
    }
    const auto& shapes = levels[r];
    std::vector<std::vector<int>> cands(shapes.size());
    for (std::size_t si = 0; si < shapes.size(); ++si) {
      const BeadShape& b = shapes[si];
      auto g = b.ground();
      const TruncatedSSet& H =
          K.hom(cur.objects[g.front()], cur.objects[g.back()]);
      if (r == 0) {
        for (int v = 0; v < H.size(0); ++v) cands[si].push_back(v);
      } else {
        auto req = bead_boundary(K, obj_of, resolve, b);
        for (int c = 0; c < H.size(r); ++c) {
          bool ok = true;
          for (int q = 0; q <= r && ok; ++q)
            if (H.d(r, q, c) != req[q].idx) ok = false;
          if (ok) cands[si].push_back(c);
        }
      }
      if (cands[si].empty()) return;
    }
    std::function<void(std::size_t)> fill = [&](std::size_t si) {
      if (si == shapes.size()) {
        level(r + 1);
        return;
      }
      for (int c : cands[si]) {
        cur.cells[shapes[si].blocks] = c;
        fill(si + 1);
      }
      cur.cells.erase(shapes[si].blocks);
    };
    fill(0);
  };
  std::function<void(int)> pick = [&](int i) {
    if (i == n + 1) {
      level(0);
      return;
    }
    for (int x = 0; x < K.nobj(); ++x) {
      cur.objects[i] = x;
      pick(i + 1);
    }
  };
  pick(0);
  return out;
}

std::vector<int> coface(int n, int i) {
  // delta_i : [n-1] -> [n]
  std::vector<int> a;
  for (int v = 0; v <= n; ++v)
    if (v != i) a.push_back(v);
  return a;
}

std::vector<int> codegeneracy(int n, int i) {
  // sigma_i : [n+1] -> [n]
  std::vector<int> a;
  for (int v = 0; v <= n + 1; ++v) a.push_back(v <= i ? v : v - 1);
  return a;
}

}  // namespace

int CoherentNerve::find(const CoherentSimplex& S) const {
  if (S.n >= static_cast<int>(lookup.size())) return -1;
  auto it = lookup[S.n].find(S.key());
  return it == lookup[S.n].end() ? -1 : it->second;
}

CoherentSimplex reindex_coherent(const SCat& K, const CoherentSimplex& S,
                                 const std::vector<int>& alpha) {
  int m = static_cast<int>(alpha.size()) - 1;
  CoherentSimplex out;
  out.n = m;
  for (int i = 0; i <= m; ++i) out.objects.push_back(S.objects[alpha[i]]);
  auto obj_of = [&](int label) { return S.objects[label]; };
  std::function<int(const BeadShape&)> resolve = [&](const BeadShape& b) {
    return S.cells.at(b.blocks);
  };
  for (int mask = 1; mask < (1 << (m + 1)); ++mask) {
    std::vector<int> I;
    for (int i = 0; i <= m; ++i)
      if (mask & (1 << i)) I.push_back(i);
    if (I.size() < 2) continue;
    for (const auto& b : enumerate_bead_shapes(I)) {
      std::vector<std::vector<int>> transported;
      for (const auto& T : b.chain()) {
        std::vector<int> mapped;
        for (int v : T) mapped.push_back(alpha[v]);
        std::sort(mapped.begin(), mapped.end());
        mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
        transported.push_back(std::move(mapped));
      }
      out.cells[b.blocks] = eval_chain(K, obj_of, resolve, transported).idx;
    }
  }
  return out;
}

CoherentSimplex map_coherent(const SFunctor& F, const CoherentSimplex& S) {
  CoherentSimplex out;
  out.n = S.n;
  for (int o : S.objects) out.objects.push_back(F.obj[o]);
  for (const auto& [blocks, cell] : S.cells) {
    BeadShape b{blocks};
    auto g = b.ground();
    out.cells[blocks] =
        F.at_cell(S.objects[g.front()], S.objects[g.back()], b.dim(), cell);
  }
  return out;
}

Report validate_coherent(const SCat& K, const CoherentSimplex& S) {
  Report rep;
  auto obj_of = [&](int label) { return S.objects[label]; };
  std::function<int(const BeadShape&)> resolve = [&](const BeadShape& b) {
    return S.cells.at(b.blocks);
  };
  int expected = 0;
  for (int mask = 1; mask < (1 << (S.n + 1)); ++mask) {
    std::vector<int> I;
    for (int i = 0; i <= S.n; ++i)
      if (mask & (1 << i)) I.push_back(i);
    if (I.size() < 2) continue;
    for (const auto& b : enumerate_bead_shapes(I)) {
      ++expected;
      auto it = S.cells.find(b.blocks);
      if (it == S.cells.end()) {
        rep.add("missing bead cell", S.key());
        continue;
      }
      auto g = b.ground();
      const TruncatedSSet& H = K.hom(S.objects[g.front()], S.objects[g.back()]);
      int r = b.dim();
      if (it->second < 0 || it->second >= H.size(r)) {
        rep.add("bead cell out of range", S.key());
        continue;
      }
      if (r >= 1) {
        auto req = bead_boundary(K, obj_of, resolve, b);
        for (int q = 0; q <= r; ++q)
          if (H.d(r, q, it->second) != req[q].idx)
            rep.add("boundary mismatch at face " + std::to_string(q), S.key());
      }
    }
  }
  if (static_cast<int>(S.cells.size()) != expected)
    rep.add("bead cell count", std::to_string(S.cells.size()) + " given, " +
                                   std::to_string(expected) + " required");
  return rep;
}

CoherentNerve coherent_nerve(SCatPtr K, int cap) {
  if (cap > K->cap + 1)
    throw InputError(
        "coherent_nerve: requested cap needs hom complexes of dimension " +
        std::to_string(cap - 1) + " but hom cap is " + std::to_string(K->cap));
  CoherentNerve N;
  N.cat = K;
  N.simplices.resize(cap + 1);
  N.lookup.resize(cap + 1);
  TruncatedSSet X;
  X.cap = cap;
  X.cells.resize(cap + 1);
  X.face.resize(cap + 1);
  X.degen.resize(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    N.simplices[n] = enumerate_coherent(*K, n);
    for (std::size_t i = 0; i < N.simplices[n].size(); ++i) {
      std::string key = N.simplices[n][i].key();
      N.lookup[n][key] = static_cast<int>(i);
      X.cells[n].push_back(std::move(key));
    }
  }
  for (int n = 1; n <= cap; ++n) {
    X.face[n].assign(n + 1, std::vector<int>(N.simplices[n].size()));
    for (int i = 0; i <= n; ++i) {
      auto alpha = coface(n, i);
      for (std::size_t c = 0; c < N.simplices[n].size(); ++c) {
        int idx = N.find(reindex_coherent(*K, N.simplices[n][c], alpha));
        if (idx < 0)
          throw std::logic_error("coherent_nerve: face left the enumeration");
        X.face[n][i][c] = idx;
      }
    }
  }
  for (int n = 0; n < cap; ++n) {
    X.degen[n].assign(n + 1, std::vector<int>(N.simplices[n].size()));
    for (int i = 0; i <= n; ++i) {
      auto alpha = codegeneracy(n, i);
      for (std::size_t c = 0; c < N.simplices[n].size(); ++c) {
        int idx = N.find(reindex_coherent(*K, N.simplices[n][c], alpha));
        if (idx < 0)
          throw std::logic_error(
              "coherent_nerve: degeneracy left the enumeration");
        X.degen[n][i][c] = idx;
      }
    }
  }
  X.rebuild_index();
  N.sset = share(std::move(X));
  return N;
}

SSetMap coherent_nerve_map(const SFunctor& F, const CoherentNerve& NS,
                           const CoherentNerve& NT) {
  SSetMap m;
  m.source = NS.sset;
  m.target = NT.sset;
  int cap = NS.sset->cap;
  m.assign.resize(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    m.assign[n].resize(NS.simplices[n].size());
    for (std::size_t c = 0; c < NS.simplices[n].size(); ++c) {
      int idx = NT.find(map_coherent(F, NS.simplices[n][c]));
      if (idx < 0)
        throw std::logic_error("coherent_nerve_map: image cell not found");
      m.assign[n][c] = idx;
    }
  }
  return m;
}

SSetMap opposite_nerve_canonical(const CoherentNerve& NC,
                                 const CoherentNerve& NCop) {
  SSetMap m;
  m.source = share(opposite_sset(*NC.sset));
  m.target = NCop.sset;
  int cap = NC.sset->cap;
  m.assign.resize(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    m.assign[n].resize(NC.simplices[n].size());
    for (std::size_t c = 0; c < NC.simplices[n].size(); ++c) {
      const CoherentSimplex& S = NC.simplices[n][c];
      CoherentSimplex R;
      R.n = n;
      for (int i = 0; i <= n; ++i) R.objects.push_back(S.objects[n - i]);
      for (const auto& [blocks, cell] : S.cells) {
        std::vector<std::vector<int>> reflected;
        for (const auto& blk : blocks) {
          std::vector<int> rb;
          for (int v : blk) rb.push_back(n - v);
          std::sort(rb.begin(), rb.end());
          reflected.push_back(std::move(rb));
        }
        R.cells[reflected] = cell;
      }
      int idx = NCop.find(R);
      if (idx < 0)
        throw std::logic_error(
            "opposite_nerve_canonical: reversed cell not found");
      m.assign[n][c] = idx;
    }
  }
  return m;
}

// --------------------------------------------------------------- relative

Report validate_diagram_sset(const DiagramSSet& f) {
  Report rep;
  const FinCat& D = *f.base;
  if (f.at.size() != D.objects.size() || f.arrow.size() != D.arrows.size()) {
    rep.add("shape", "diagram tables not aligned with base");
    return rep;
  }
  for (std::size_t a = 0; a < D.arrows.size(); ++a) {
    const SSetMap& m = f.arrow[a];
    if (m.source.get() != f.at[D.arrows[a].src].get() ||
        m.target.get() != f.at[D.arrows[a].tgt].get())
      rep.add("endpoints", D.arrows[a].name);
    rep.absorb(validate_ssetmap(m), "arrow " + D.arrows[a].name + ": ");
  }
  if (!rep.ok()) return rep;
  for (std::size_t x = 0; x < D.objects.size(); ++x) {
    const SSetMap& m = f.arrow[D.ident[x]];
    for (int k = 0; k <= f.at[x]->cap; ++k)
      for (int c = 0; c < f.at[x]->size(k); ++c)
        if (m.at(k, c) != c) rep.add("identity arrow", D.objects[x]);
  }
  for (std::size_t g = 0; g < D.arrows.size(); ++g)
    for (std::size_t a = 0; a < D.arrows.size(); ++a)
      if (D.composable(static_cast<int>(g), static_cast<int>(a))) {
        int h = D.compose(static_cast<int>(g), static_cast<int>(a));
        for (int k = 0; k <= f.at[D.arrows[a].src]->cap; ++k)
          for (int c = 0; c < f.at[D.arrows[a].src]->size(k); ++c)
            if (f.arrow[h].at(k, c) != f.arrow[g].at(k, f.arrow[a].at(k, c)))
              rep.add("functoriality",
                      D.arrows[g].name + " o " + D.arrows[a].name);
      }
  return rep;
}

DiagramSSet constant_point_diagram(FinCatPtr D, int cap) {
  DiagramSSet f;
  f.base = D;
  SSetPtr pt = share(standard_simplex(0, cap));
  f.at.assign(D->objects.size(), pt);
  for (std::size_t a = 0; a < D->arrows.size(); ++a)
    f.arrow.push_back(identity_map(pt));
  return f;
}

std::string RelNerveSimplex::key() const {
  std::ostringstream os;
  os << "d";
  for (int o : objects) os << "," << o;
  os << ";a";
  for (int a : arrows) os << "," << a;
  for (const auto& [J, cell] : s) {
    os << "|";
    for (std::size_t i = 0; i < J.size(); ++i) {
      if (i) os << ".";
      os << J[i];
    }
    os << ":" << cell;
  }
  return os.str();
}

int RelativeNerve::find(const RelNerveSimplex& T) const {
  if (T.n >= static_cast<int>(lookup.size())) return -1;
  auto it = lookup[T.n].find(T.key());
  return it == lookup[T.n].end() ? -1 : it->second;
}

namespace {

std::vector<std::vector<int>> subsets_by_size(int n) {
  std::vector<std::vector<int>> subs;
  for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
    std::vector<int> J;
    for (int i = 0; i <= n; ++i)
      if (mask & (1 << i)) J.push_back(i);
    subs.push_back(std::move(J));
  }
  std::sort(subs.begin(), subs.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return subs;
}

std::vector<RelNerveSimplex> enumerate_relative(const FinCat& D,
                                                const DiagramSSet& f,
                                                const OrdinaryNerve& base,
                                                int n) {
  std::vector<RelNerveSimplex> out;
  auto subs = subsets_by_size(n);
  for (const auto& [o0, arrs] : base.chains[n]) {
    RelNerveSimplex cur;
    cur.n = n;
    cur.arrows = arrs;
    cur.objects = {o0};
    for (int a : arrs) cur.objects.push_back(D.arrows[a].tgt);
    std::function<void(std::size_t)> rec = [&](std::size_t p) {
      if (p == subs.size()) {
        out.push_back(cur);
        return;
      }
      const auto& J = subs[p];
      int j = J.back();
      const TruncatedSSet& X = *f.at[cur.objects[j]];
      int dim = static_cast<int>(J.size()) - 1;
      if (dim == 0) {
        for (int v = 0; v < X.size(0); ++v) {
          cur.s[J] = v;
          rec(p + 1);
        }
        cur.s.erase(J);
        return;
      }
      // Every face of the candidate is pinned by a one-smaller subset.
      std::vector<int> req(dim + 1);
      for (int pos = 0; pos <= dim; ++pos) {
        std::vector<int> I = J;
        I.erase(I.begin() + pos);
        int cell = cur.s.at(I);
        if (pos == dim) {
          int i2 = I.back();
          int arr = D.chain_arrow(cur.arrows, cur.objects, i2, j);
          req[pos] = f.arrow[arr].at(dim - 1, cell);
        } else {
          req[pos] = cell;
        }
      }
      for (int c = 0; c < X.size(dim); ++c) {
        bool ok = true;
        for (int pos = 0; pos <= dim && ok; ++pos)
          if (X.d(dim, pos, c) != req[pos]) ok = false;
        if (ok) {
          cur.s[J] = c;
          rec(p + 1);
        }
      }
      cur.s.erase(J);
    };
    rec(0);
  }
  return out;
}

}  // namespace

RelNerveSimplex reindex_relative(const FinCat& D, const DiagramSSet& f,
                                 const RelNerveSimplex& T,
                                 const std::vector<int>& alpha) {
  int m = static_cast<int>(alpha.size()) - 1;
  RelNerveSimplex out;
  out.n = m;
  for (int i = 0; i <= m; ++i) out.objects.push_back(T.objects[alpha[i]]);
  for (int i = 0; i < m; ++i)
    out.arrows.push_back(
        D.chain_arrow(T.arrows, T.objects, alpha[i], alpha[i + 1]));
  for (const auto& J : subsets_by_size(m)) {
    std::vector<int> JA;
    for (int v : J) JA.push_back(alpha[v]);
    std::sort(JA.begin(), JA.end());
    JA.erase(std::unique(JA.begin(), JA.end()), JA.end());
    std::vector<int> pos_map;
    for (int v : J)
      pos_map.push_back(static_cast<int>(
          std::lower_bound(JA.begin(), JA.end(), alpha[v]) - JA.begin()));
    const TruncatedSSet& X = *f.at[T.objects[JA.back()]];
    out.s[J] = apply_monotone(X, pos_map, static_cast<int>(JA.size()) - 1,
                              T.s.at(JA));
  }
  return out;
}

Report validate_relative(const FinCat& D, const DiagramSSet& f,
                         const RelNerveSimplex& T) {
  Report rep;
  for (int i = 0; i < T.n; ++i) {
    const auto& a = D.arrows[T.arrows[i]];
    if (a.src != T.objects[i] || a.tgt != T.objects[i + 1])
      rep.add("chain", "arrow " + std::to_string(i));
  }
  auto subs = subsets_by_size(T.n);
  for (const auto& J : subs)
    if (!T.s.count(J)) rep.add("missing family member", T.key());
  if (!rep.ok()) return rep;
  // Full compatibility over all nested pairs I <= J.
  for (const auto& J : subs) {
    int j = J.back();
    const TruncatedSSet& XJ = *f.at[T.objects[j]];
    int cellJ = T.s.at(J);
    if (cellJ < 0 || cellJ >= XJ.size(static_cast<int>(J.size()) - 1)) {
      rep.add("cell out of range", T.key());
      continue;
    }
    for (const auto& I : subs) {
      if (I.size() > J.size()) continue;
      if (!std::includes(J.begin(), J.end(), I.begin(), I.end())) continue;
      int i2 = I.back();
      std::vector<int> pos_map;
      for (int v : I)
        pos_map.push_back(static_cast<int>(
            std::lower_bound(J.begin(), J.end(), v) - J.begin()));
      int restricted =
          apply_monotone(XJ, pos_map, static_cast<int>(J.size()) - 1, cellJ);
      int arr = D.chain_arrow(T.arrows, T.objects, i2, j);
      int pushed = f.arrow[arr].at(static_cast<int>(I.size()) - 1, T.s.at(I));
      if (restricted != pushed) rep.add("compatibility square", T.key());
    }
  }
  return rep;
}

RelativeNerve relative_nerve(FinCatPtr D, const DiagramSSet& f, int cap) {
  for (const auto& X : f.at) {
    if (X->cap != f.at.front()->cap)
      throw InputError("relative_nerve: diagram complexes have mixed caps");
    if (X->cap < cap)
      throw InputError("relative_nerve: diagram cap below requested cap");
  }
  RelativeNerve R;
  R.base = D;
  R.f = f;
  R.base_nerve = ordinary_nerve(D, cap);
  R.simplices.resize(cap + 1);
  R.lookup.resize(cap + 1);
  TruncatedSSet X;
  X.cap = cap;
  X.cells.resize(cap + 1);
  X.face.resize(cap + 1);
  X.degen.resize(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    R.simplices[n] = enumerate_relative(*D, f, R.base_nerve, n);
    for (std::size_t i = 0; i < R.simplices[n].size(); ++i) {
      std::string key = R.simplices[n][i].key();
      R.lookup[n][key] = static_cast<int>(i);
      X.cells[n].push_back(std::move(key));
    }
  }
  for (int n = 1; n <= cap; ++n) {
    X.face[n].assign(n + 1, std::vector<int>(R.simplices[n].size()));
    for (int i = 0; i <= n; ++i) {
      auto alpha = coface(n, i);
      for (std::size_t c = 0; c < R.simplices[n].size(); ++c) {
        int idx = R.find(reindex_relative(*D, f, R.simplices[n][c], alpha));
        if (idx < 0)
          throw std::logic_error("relative_nerve: face left the enumeration");
        X.face[n][i][c] = idx;
      }
    }
  }
  for (int n = 0; n < cap; ++n) {
    X.degen[n].assign(n + 1, std::vector<int>(R.simplices[n].size()));
    for (int i = 0; i <= n; ++i) {
      auto alpha = codegeneracy(n, i);
      for (std::size_t c = 0; c < R.simplices[n].size(); ++c) {
        int idx = R.find(reindex_relative(*D, f, R.simplices[n][c], alpha));
        if (idx < 0)
          throw std::logic_error(
              "relative_nerve: degeneracy left the enumeration");
        X.degen[n][i][c] = idx;
      }
    }
  }
  X.rebuild_index();
  R.sset = share(std::move(X));
  R.projection.source = R.sset;
  R.projection.target = R.base_nerve.sset;
  R.projection.assign.resize(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    R.projection.assign[n].resize(R.simplices[n].size());
    for (std::size_t c = 0; c < R.simplices[n].size(); ++c) {
      const auto& T = R.simplices[n][c];
      R.projection.assign[n][c] =
          R.base_nerve.find_chain(T.objects[0], T.arrows);
    }
  }
  return R;
}

// ------------------------------------------------- coCartesian edge fillers

Report cocart_edge_fillers(const TruncatedSSet& X, const SSetMap& proj,
                           int edge, int up_to) {
  Report rep;
  const TruncatedSSet& B = *proj.target;
  const std::vector<int> edge01{0, 1};
  for (int n = 2; n <= std::min(up_to, X.cap); ++n) {
    // Outer 0-horns (x_1..x_n) whose {0,1} edge is the given one.
    std::vector<std::vector<int>> horns;
    std::vector<int> chosen(n + 1, -1);
    std::function<void(int)> rec = [&](int i) {
      if (i == n + 1) {
        horns.emplace_back(chosen.begin() + 1, chosen.end());
        return;
      }
      for (int cand = 0; cand < X.size(n - 1); ++cand) {
        bool ok = true;
        for (int j = 1; j < i && ok; ++j)
          if (X.d(n - 1, j, cand) != X.d(n - 1, i - 1, chosen[j])) ok = false;
        if (ok && i >= 2 && apply_monotone(X, edge01, n - 1, cand) != edge)
          ok = false;
        if (ok) {
          chosen[i] = cand;
          rec(i + 1);
          chosen[i] = -1;
        }
      }
    };
    rec(1);
    for (const auto& fam : horns) {
      for (int b = 0; b < B.size(n); ++b) {
        bool matches = true;
        for (int i = 1; i <= n && matches; ++i)
          if (B.d(n, i, b) != proj.at(n - 1, fam[i - 1])) matches = false;
        if (!matches) continue;
        bool filled = false;
        for (int z = 0; z < X.size(n) && !filled; ++z) {
          if (proj.at(n, z) != b) continue;
          bool ok = true;
          for (int i = 1; i <= n && ok; ++i)
            if (X.d(n, i, z) != fam[i - 1]) ok = false;
          if (ok) filled = true;
        }
        if (!filled)
          rep.add("unfilled lifting problem",
                  "dim " + std::to_string(n) + " over base cell '" +
                      B.id(n, b) + "'");
      }
    }
  }
  return rep;
}

}  // namespace simpcat
