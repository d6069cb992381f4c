#include "simpcat/scat.hpp"

#include <algorithm>
#include <sstream>

namespace simpcat {

namespace {

std::string pair_name(const SCat& C, int x, int y) {
  return C.objects[x] + " -> " + C.objects[y];
}

}  // namespace

int SCat::find_object(const std::string& name) const {
  for (int i = 0; i < nobj(); ++i)
    if (objects[i] == name) return i;
  return -1;
}

SCatPtr share(SCat c) { return std::make_shared<const SCat>(std::move(c)); }

// ----------------------------------------------------------------- validation

Report validate_scat(const SCat& C) {
  Report rep;
  int n = C.nobj();
  if (static_cast<int>(C.homs.size()) != n * n ||
      static_cast<int>(C.comp.size()) != n * n * n ||
      static_cast<int>(C.ident.size()) != n) {
    rep.add("shape", "hom/comp/ident tables not aligned with objects");
    return rep;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!C.homs[x * n + y] || C.hom(x, y).cap != C.cap) {
        rep.add("cap", "hom " + pair_name(C, x, y));
        return rep;
      }
      rep.absorb(validate_sset(C.hom(x, y)), "hom " + pair_name(C, x, y) + ": ");
    }
  if (!rep.ok()) return rep;
  for (int x = 0; x < n; ++x)
    if (C.ident[x] < 0 || C.ident[x] >= C.hom(x, x).size(0)) {
      rep.add("identity", C.objects[x]);
      return rep;
    }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const auto& table = C.comp[(x * n + y) * n + z];
        if (static_cast<int>(table.size()) != C.cap + 1) {
          rep.add("composition shape", pair_name(C, x, z));
          return rep;
        }
        for (int k = 0; k <= C.cap; ++k) {
          long long expect = static_cast<long long>(C.hom(y, z).size(k)) *
                             C.hom(x, y).size(k);
          if (static_cast<long long>(table[k].size()) != expect) {
            rep.add("composition shape", pair_name(C, x, z) + " dim " +
                                             std::to_string(k));
            return rep;
          }
          for (int v : table[k])
            if (v < 0 || v >= C.hom(x, z).size(k)) {
              rep.add("composition range", pair_name(C, x, z));
              return rep;
            }
        }
      }

  // Composition is a simplicial map on the product of hom complexes.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const TruncatedSSet& GF = C.hom(y, z);
        const TruncatedSSet& FF = C.hom(x, y);
        for (int k = 1; k <= C.cap; ++k)
          for (int i = 0; i <= k; ++i)
            for (int g = 0; g < GF.size(k); ++g)
              for (int f = 0; f < FF.size(k); ++f)
                if (C.hom(x, z).face[k][i][C.compose(x, y, z, k, g, f)] !=
                    C.compose(x, y, z, k - 1, GF.d(k, i, g), FF.d(k, i, f)))
                  rep.add("composition vs d_" + std::to_string(i),
                          pair_name(C, x, z) + " dim " + std::to_string(k));
        for (int k = 0; k < C.cap; ++k)
          for (int i = 0; i <= k; ++i)
            for (int g = 0; g < GF.size(k); ++g)
              for (int f = 0; f < FF.size(k); ++f)
                if (C.hom(x, z).degen[k][i][C.compose(x, y, z, k, g, f)] !=
                    C.compose(x, y, z, k + 1, GF.s(k, i, g), FF.s(k, i, f)))
                  rep.add("composition vs s_" + std::to_string(i),
                          pair_name(C, x, z) + " dim " + std::to_string(k));
      }

  // Strict associativity, elementwise over triples of cells.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w)
          for (int k = 0; k <= C.cap; ++k)
            for (int h = 0; h < C.hom(z, w).size(k); ++h)
              for (int g = 0; g < C.hom(y, z).size(k); ++g)
                for (int f = 0; f < C.hom(x, y).size(k); ++f)
                  if (C.compose(x, z, w, k, h, C.compose(x, y, z, k, g, f)) !=
                      C.compose(x, y, w, k, C.compose(y, z, w, k, h, g), f))
                    rep.add("associativity",
                            "(" + C.objects[x] + "," + C.objects[y] + "," +
                                C.objects[z] + "," + C.objects[w] + ") dim " +
                                std::to_string(k) + " cells (" +
                                C.hom(z, w).id(k, h) + "," +
                                C.hom(y, z).id(k, g) + "," +
                                C.hom(x, y).id(k, f) + ")");

  // Unit laws against the degenerate identity cells.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int k = 0; k <= C.cap; ++k) {
        int idx = degenerate_vertex(C.hom(x, x), C.ident[x], k);
        int idy = degenerate_vertex(C.hom(y, y), C.ident[y], k);
        for (int f = 0; f < C.hom(x, y).size(k); ++f) {
          if (C.compose(x, x, y, k, f, idx) != f)
            rep.add("right unit", pair_name(C, x, y) + " cell " +
                                      C.hom(x, y).id(k, f));
          if (C.compose(x, y, y, k, idy, f) != f)
            rep.add("left unit", pair_name(C, x, y) + " cell " +
                                     C.hom(x, y).id(k, f));
        }
      }
  return rep;
}

Report validate_sfunctor(const SFunctor& F) {
  Report rep;
  const SCat& C = *F.source;
  const SCat& D = *F.target;
  int n = C.nobj();
  if (static_cast<int>(F.obj.size()) != n ||
      static_cast<int>(F.hom.size()) != n * n) {
    rep.add("shape", "assignments not aligned with source");
    return rep;
  }
  for (int x = 0; x < n; ++x)
    if (F.obj[x] < 0 || F.obj[x] >= D.nobj()) {
      rep.add("objects", C.objects[x]);
      return rep;
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      rep.absorb(validate_ssetmap(hom_map(F, x, y)),
                 "hom " + pair_name(C, x, y) + ": ");
  if (!rep.ok()) return rep;
  for (int x = 0; x < n; ++x)
    if (F.at_cell(x, x, 0, C.ident[x]) != D.ident[F.obj[x]])
      rep.add("identity preservation", C.objects[x]);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int k = 0; k <= C.cap; ++k)
          for (int g = 0; g < C.hom(y, z).size(k); ++g)
            for (int f = 0; f < C.hom(x, y).size(k); ++f)
              if (F.at_cell(x, z, k, C.compose(x, y, z, k, g, f)) !=
                  D.compose(F.obj[x], F.obj[y], F.obj[z], k,
                            F.at_cell(y, z, k, g), F.at_cell(x, y, k, f)))
                rep.add("composition preservation",
                        "(" + C.objects[x] + "," + C.objects[y] + "," +
                            C.objects[z] + ") dim " + std::to_string(k) +
                            " cells (" + C.hom(y, z).id(k, g) + "," +
                            C.hom(x, y).id(k, f) + ")");
  return rep;
}

// ------------------------------------------------------------------ opposites

SCat opposite_scat(const SCat& C) {
  int n = C.nobj();
  SCat D;
  D.cap = C.cap;
  D.objects = C.objects;
  D.ident = C.ident;
  D.homs.resize(n * n);
  D.comp.resize(n * n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) D.homs[x * n + y] = C.hom_ptr(y, x);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        auto& table = D.comp[(x * n + y) * n + z];
        table.resize(C.cap + 1);
        for (int k = 0; k <= C.cap; ++k) {
          int ng = C.hom(z, y).size(k);  // = |D.hom(y,z)_k|
          int nf = C.hom(y, x).size(k);  // = |D.hom(x,y)_k|
          table[k].resize(static_cast<long long>(ng) * nf);
          for (int g = 0; g < ng; ++g)
            for (int f = 0; f < nf; ++f)
              table[k][static_cast<long long>(g) * nf + f] =
                  C.compose(z, y, x, k, f, g);
        }
      }
  return D;
}

SFunctor opposite_sfunctor(const SFunctor& F) {
  SFunctor G;
  G.source = share(opposite_scat(*F.source));
  G.target = share(opposite_scat(*F.target));
  G.obj = F.obj;
  int n = F.source->nobj();
  G.hom.resize(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) G.hom[x * n + y] = F.hom[y * n + x];
  return G;
}

// --------------------------------------------------------------- constructors

SCat discrete_scat(const FinCat& D, int cap) {
  int n = static_cast<int>(D.objects.size());
  SCat C;
  C.cap = cap;
  C.objects = D.objects;
  C.homs.resize(n * n);
  C.comp.resize(n * n * n);
  std::vector<std::vector<int>> arrows(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      arrows[x * n + y] = D.arrows_from_to(x, y);
      TruncatedSSet H;
      H.cap = cap;
      H.cells.resize(cap + 1);
      H.face.resize(cap + 1);
      H.degen.resize(cap + 1);
      int m = static_cast<int>(arrows[x * n + y].size());
      std::vector<int> idmap(m);
      for (int i = 0; i < m; ++i) idmap[i] = i;
      for (int k = 0; k <= cap; ++k)
        for (int a : arrows[x * n + y])
          H.cells[k].push_back(D.arrows[a].name);
      for (int k = 1; k <= cap; ++k) H.face[k].assign(k + 1, idmap);
      for (int k = 0; k < cap; ++k) H.degen[k].assign(k + 1, idmap);
      H.rebuild_index();
      C.homs[x * n + y] = share(std::move(H));
    }
  for (int x = 0; x < n; ++x) {
    const auto& loops = arrows[x * n + x];
    C.ident.push_back(static_cast<int>(
        std::find(loops.begin(), loops.end(), D.ident[x]) - loops.begin()));
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        auto& table = C.comp[(x * n + y) * n + z];
        table.resize(cap + 1);
        const auto& gs = arrows[y * n + z];
        const auto& fs = arrows[x * n + y];
        const auto& hs = arrows[x * n + z];
        std::vector<int> flat;
        for (int g : gs)
          for (int f : fs) {
            int h = D.compose(g, f);
            flat.push_back(static_cast<int>(
                std::find(hs.begin(), hs.end(), h) - hs.begin()));
          }
        for (int k = 0; k <= cap; ++k) table[k] = flat;
      }
  return C;
}

SCat terminal_scat(int cap) { return scat_power(SCat{}, 0, cap); }

namespace {

SCat power_impl(const SCat& C, int n, int cap) {
  SCat P;
  P.cap = cap;
  if (n == 0) {
    P.objects = {"()"};
    P.homs = {share(nary_product({}, cap))};
    P.ident = {0};
    P.comp.resize(1);
    auto& table = P.comp[0];
    table.assign(cap + 1, std::vector<int>{0});
    return P;
  }
  int b = C.nobj();
  long long nobj = 1;
  for (int i = 0; i < n; ++i) nobj *= b;
  auto unpack = [&](long long flat) {
    std::vector<int> t(n);
    for (int i = n - 1; i >= 0; --i) {
      t[i] = static_cast<int>(flat % b);
      flat /= b;
    }
    return t;
  };
  for (long long o = 0; o < nobj; ++o) {
    auto t = unpack(o);
    std::string name = "(";
    for (int i = 0; i < n; ++i) {
      if (i) name += ",";
      name += C.objects[t[i]];
    }
    name += ")";
    P.objects.push_back(name);
  }
  int N = P.nobj();
  P.homs.resize(static_cast<long long>(N) * N);
  for (int x = 0; x < N; ++x) {
    auto xs = unpack(x);
    for (int y = 0; y < N; ++y) {
      auto ys = unpack(y);
      std::vector<SSetPtr> factors;
      for (int i = 0; i < n; ++i) factors.push_back(C.hom_ptr(xs[i], ys[i]));
      P.homs[static_cast<long long>(x) * N + y] =
          share(nary_product(factors, cap));
    }
  }
  for (int x = 0; x < N; ++x) {
    auto xs = unpack(x);
    // Tuple identity vertex, packed with component i varying fastest last.
    long long v = 0;
    for (int i = 0; i < n; ++i)
      v = v * C.hom(xs[i], xs[i]).size(0) + C.ident[xs[i]];
    P.ident.push_back(static_cast<int>(v));
  }
  P.comp.resize(static_cast<long long>(N) * N * N);
  for (int x = 0; x < N; ++x) {
    auto xs = unpack(x);
    for (int y = 0; y < N; ++y) {
      auto ys = unpack(y);
      for (int z = 0; z < N; ++z) {
        auto zs = unpack(z);
        auto& table = P.comp[(static_cast<long long>(x) * N + y) * N + z];
        table.resize(cap + 1);
        for (int k = 0; k <= cap; ++k) {
          std::vector<int> grad_g(n), grad_f(n), grad_h(n);
          for (int i = 0; i < n; ++i) {
            grad_g[i] = C.hom(ys[i], zs[i]).size(k);
            grad_f[i] = C.hom(xs[i], ys[i]).size(k);
            grad_h[i] = C.hom(xs[i], zs[i]).size(k);
          }
          long long ng = 1, nf = 1;
          for (int i = 0; i < n; ++i) {
            ng *= grad_g[i];
            nf *= grad_f[i];
          }
          table[k].resize(ng * nf);
          auto unflat = [&](long long v, const std::vector<int>& rad) {
            std::vector<int> t(n);
            for (int i = n - 1; i >= 0; --i) {
              t[i] = static_cast<int>(v % rad[i]);
              v /= rad[i];
            }
            return t;
          };
          for (long long g = 0; g < ng; ++g) {
            auto gt = unflat(g, grad_g);
            for (long long f = 0; f < nf; ++f) {
              auto ft = unflat(f, grad_f);
              long long h = 0;
              for (int i = 0; i < n; ++i)
                h = h * grad_h[i] +
                    C.compose(xs[i], ys[i], zs[i], k, gt[i], ft[i]);
              table[k][g * nf + f] = static_cast<int>(h);
            }
          }
        }
      }
    }
  }
  return P;
}

}  // namespace

SCat scat_power(const SCat& C, int n) {
  if (n < 0) throw InputError("scat_power: negative power");
  if (n == 1) return C;
  return power_impl(C, n, C.cap);
}

SCat scat_power(const SCat& C, int n, int cap) { return power_impl(C, n, cap); }

SCat scat_product(const SCat& C, const SCat& D) {
  if (C.cap != D.cap) throw InputError("scat_product: cap mismatch");
  // Same layout as a flat binary power, but over two different factors.
  SCat P;
  P.cap = C.cap;
  int nc = C.nobj(), nd = D.nobj();
  for (int a = 0; a < nc; ++a)
    for (int b = 0; b < nd; ++b)
      P.objects.push_back("(" + C.objects[a] + "," + D.objects[b] + ")");
  int N = P.nobj();
  P.homs.resize(static_cast<long long>(N) * N);
  auto split = [&](int o) { return std::pair<int, int>{o / nd, o % nd}; };
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      auto [xa, xb] = split(x);
      auto [ya, yb] = split(y);
      P.homs[static_cast<long long>(x) * N + y] = share(
          nary_product({C.hom_ptr(xa, ya), D.hom_ptr(xb, yb)}, C.cap));
    }
  for (int x = 0; x < N; ++x) {
    auto [xa, xb] = split(x);
    P.ident.push_back(C.ident[xa] * D.hom(xb, xb).size(0) + D.ident[xb]);
  }
  P.comp.resize(static_cast<long long>(N) * N * N);
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y)
      for (int z = 0; z < N; ++z) {
        auto [xa, xb] = split(x);
        auto [ya, yb] = split(y);
        auto [za, zb] = split(z);
        auto& table = P.comp[(static_cast<long long>(x) * N + y) * N + z];
        table.resize(P.cap + 1);
        for (int k = 0; k <= P.cap; ++k) {
          int ga = C.hom(ya, za).size(k), gb = D.hom(yb, zb).size(k);
          int fa = C.hom(xa, ya).size(k), fb = D.hom(xb, yb).size(k);
          int hb = D.hom(xb, zb).size(k);
          table[k].resize(static_cast<long long>(ga) * gb * fa * fb);
          for (int g1 = 0; g1 < ga; ++g1)
            for (int g2 = 0; g2 < gb; ++g2)
              for (int f1 = 0; f1 < fa; ++f1)
                for (int f2 = 0; f2 < fb; ++f2) {
                  long long g = static_cast<long long>(g1) * gb + g2;
                  long long f = static_cast<long long>(f1) * fb + f2;
                  int h1 = C.compose(xa, ya, za, k, g1, f1);
                  int h2 = D.compose(xb, yb, zb, k, g2, f2);
                  table[k][g * (static_cast<long long>(fa) * fb) + f] =
                      h1 * hb + h2;
                }
        }
      }
  return P;
}

// ----------------------------------------------------------------- local Kan

LocalKanReport is_locally_kan(const SCat& C, int d) {
  if (d > C.cap) throw InputError("is_locally_kan: d exceeds cap");
  LocalKanReport rep;
  for (int x = 0; x < C.nobj(); ++x)
    for (int y = 0; y < C.nobj(); ++y)
      rep.entries.push_back(
          {pair_name(C, x, y), horn_check(C.hom(x, y), HornMode::All, d)});
  return rep;
}

// -------------------------------------------------------------------- functors

SFunctor identity_sfunctor(SCatPtr C) {
  SFunctor F;
  F.source = C;
  F.target = C;
  int n = C->nobj();
  for (int x = 0; x < n; ++x) F.obj.push_back(x);
  F.hom.resize(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto& h = F.hom[x * n + y];
      h.resize(C->cap + 1);
      for (int k = 0; k <= C->cap; ++k) {
        h[k].resize(C->hom(x, y).size(k));
        for (int c = 0; c < C->hom(x, y).size(k); ++c) h[k][c] = c;
      }
    }
  return F;
}

SFunctor compose(const SFunctor& G, const SFunctor& F) {
  if (!scat_data_equal(*F.target, *G.source))
    throw InputError("compose(SFunctor): middle categories differ");
  SFunctor H;
  H.source = F.source;
  H.target = G.target;
  int n = F.source->nobj();
  for (int x = 0; x < n; ++x) H.obj.push_back(G.obj[F.obj[x]]);
  H.hom.resize(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto& h = H.hom[x * n + y];
      h.resize(F.source->cap + 1);
      for (int k = 0; k <= F.source->cap; ++k) {
        h[k].resize(F.source->hom(x, y).size(k));
        for (int c = 0; c < F.source->hom(x, y).size(k); ++c)
          h[k][c] = G.at_cell(F.obj[x], F.obj[y], k, F.at_cell(x, y, k, c));
      }
    }
  return H;
}

bool scat_data_equal(const SCat& C, const SCat& D) {
  if (C.cap != D.cap || C.objects != D.objects) return false;
  int n = C.nobj();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!data_equal(C.hom(x, y), D.hom(x, y))) return false;
  for (int x = 0; x < n; ++x)
    if (D.hom(x, x).id(0, D.ident[x]) != C.hom(x, x).id(0, C.ident[x]))
      return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int k = 0; k <= C.cap; ++k)
          for (int g = 0; g < C.hom(y, z).size(k); ++g)
            for (int f = 0; f < C.hom(x, y).size(k); ++f) {
              int gd = D.hom(y, z).find(k, C.hom(y, z).id(k, g));
              int fd = D.hom(x, y).find(k, C.hom(x, y).id(k, f));
              if (D.hom(x, z).id(k, D.compose(x, y, z, k, gd, fd)) !=
                  C.hom(x, z).id(k, C.compose(x, y, z, k, g, f)))
                return false;
            }
  return true;
}

bool sfunctor_data_equal(const SFunctor& F, const SFunctor& G) {
  if (!scat_data_equal(*F.source, *G.source) ||
      !scat_data_equal(*F.target, *G.target))
    return false;
  int n = F.source->nobj();
  for (int x = 0; x < n; ++x)
    if (F.target->objects[F.obj[x]] != G.target->objects[G.obj[x]])
      return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int k = 0; k <= F.source->cap; ++k)
        for (int c = 0; c < F.source->hom(x, y).size(k); ++c) {
          int cg = G.source->hom(x, y).find(k, F.source->hom(x, y).id(k, c));
          if (F.target->hom(F.obj[x], F.obj[y])
                  .id(k, F.at_cell(x, y, k, c)) !=
              G.target->hom(G.obj[x], G.obj[y]).id(k, G.at_cell(x, y, k, cg)))
            return false;
        }
  return true;
}

SSetMap precomposition_map(const SCat& E, int e1, int e2, int chi, int x) {
  SSetMap m;
  m.source = E.hom_ptr(e2, x);
  m.target = E.hom_ptr(e1, x);
  m.assign.resize(E.cap + 1);
  for (int k = 0; k <= E.cap; ++k) {
    int chik = degenerate_vertex(E.hom(e1, e2), chi, k);
    m.assign[k].resize(E.hom(e2, x).size(k));
    for (int t = 0; t < E.hom(e2, x).size(k); ++t)
      m.assign[k][t] = E.compose(e1, e2, x, k, t, chik);
  }
  return m;
}

SSetMap hom_map(const SFunctor& F, int x, int y) {
  SSetMap m;
  m.source = F.source->hom_ptr(x, y);
  m.target = F.target->hom_ptr(F.obj[x], F.obj[y]);
  m.assign = F.hom[x * F.source->nobj() + y];
  return m;
}

SCat delete_hom_vertex(const SCat& E, int x, int y, int vertex) {
  return delete_hom_vertices(E, x, y, {vertex});
}

SCat delete_hom_vertices(const SCat& E, int x, int y,
                         const std::vector<int>& vertices) {
  int n = E.nobj();
  SCat S = E;
  std::vector<std::pair<int, int>> seeds;
  for (int v : vertices) seeds.push_back({0, v});
  TruncatedSSet H = delete_cells_closed(E.hom(x, y), seeds);
  std::vector<std::vector<int>> old_to_new(E.cap + 1);
  for (int k = 0; k <= E.cap; ++k) {
    old_to_new[k].assign(E.hom(x, y).size(k), -1);
    for (int c = 0; c < E.hom(x, y).size(k); ++c)
      old_to_new[k][c] = H.find(k, E.hom(x, y).id(k, c));
  }
  S.homs[x * n + y] = share(std::move(H));
  // Rebuild composition tables touching the modified hom complex.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        bool gf_is = (a == x && b == y);
        bool gg_is = (b == x && c == y);
        bool hh_is = (a == x && c == y);
        if (!gf_is && !gg_is && !hh_is) continue;
        auto& table = S.comp[(a * n + b) * n + c];
        for (int k = 0; k <= E.cap; ++k) {
          const TruncatedSSet& GS = *S.homs[b * n + c];
          const TruncatedSSet& FS = *S.homs[a * n + b];
          std::vector<int> fresh(
              static_cast<long long>(GS.size(k)) * FS.size(k));
          for (int g = 0; g < GS.size(k); ++g)
            for (int f = 0; f < FS.size(k); ++f) {
              int g_old = gg_is
                              ? E.hom(b, c).find(k, GS.id(k, g))
                              : g;
              int f_old = gf_is
                              ? E.hom(a, b).find(k, FS.id(k, f))
                              : f;
              int h_old = E.compose(a, b, c, k, g_old, f_old);
              int h_new =
                  hh_is ? old_to_new[k][h_old] : h_old;
              if (h_new < 0)
                throw InputError(
                    "delete_hom_vertex: deletion is not closed under "
                    "composition");
              fresh[static_cast<long long>(g) * FS.size(k) + f] = h_new;
            }
          table[k] = std::move(fresh);
        }
      }
  return S;
}

}  // namespace simpcat
