#include "simpcat/grothendieck.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace simpcat {

// ----------------------------------------------------------------- diagrams

Report validate_diagram_scat(const DiagramSCat& F) {
  Report rep;
  const FinCat& D = *F.base;
  if (F.at.size() != D.objects.size() || F.arrow.size() != D.arrows.size()) {
    rep.add("shape", "diagram tables not aligned with base");
    return rep;
  }
  rep.absorb(validate_fincat(D), "base: ");
  for (std::size_t d = 0; d < F.at.size(); ++d) {
    if (F.at[d]->cap != F.at.front()->cap)
      rep.add("cap", "fiber " + D.objects[d]);
    rep.absorb(validate_scat(*F.at[d]), "fiber " + D.objects[d] + ": ");
  }
  if (!rep.ok()) return rep;
  for (std::size_t a = 0; a < D.arrows.size(); ++a) {
    const SFunctor& Fa = F.arrow[a];
    if (Fa.source.get() != F.at[D.arrows[a].src].get() ||
        Fa.target.get() != F.at[D.arrows[a].tgt].get())
      rep.add("endpoints", D.arrows[a].name);
    rep.absorb(validate_sfunctor(Fa), "arrow " + D.arrows[a].name + ": ");
  }
  if (!rep.ok()) return rep;
  for (std::size_t x = 0; x < D.objects.size(); ++x)
    if (!sfunctor_data_equal(F.arrow[D.ident[x]],
                             identity_sfunctor(F.at[x])))
      rep.add("identity arrow", D.objects[x]);
  for (std::size_t g = 0; g < D.arrows.size(); ++g)
    for (std::size_t f = 0; f < D.arrows.size(); ++f)
      if (D.composable(static_cast<int>(g), static_cast<int>(f))) {
        int h = D.compose(static_cast<int>(g), static_cast<int>(f));
        if (!sfunctor_data_equal(F.arrow[h],
                                 compose(F.arrow[g], F.arrow[f])))
          rep.add("functoriality", D.arrows[g].name + " o " + D.arrows[f].name);
      }
  return rep;
}

DiagramSCat opposite_diagram_scat(const DiagramSCat& F) {
  DiagramSCat G;
  G.base = F.base;
  for (const auto& C : F.at) G.at.push_back(share(opposite_scat(*C)));
  for (std::size_t a = 0; a < F.arrow.size(); ++a) {
    const SFunctor& Fa = F.arrow[a];
    SFunctor op;
    op.source = G.at[F.base->arrows[a].src];
    op.target = G.at[F.base->arrows[a].tgt];
    op.obj = Fa.obj;
    int n = Fa.source->nobj();
    op.hom.resize(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) op.hom[x * n + y] = Fa.hom[y * n + x];
    G.arrow.push_back(std::move(op));
  }
  return G;
}

// ------------------------------------------------------------- construction

std::pair<int, int> GrCat::component_of(int a, int b, int k, int cell) const {
  int n = static_cast<int>(obj_info.size());
  const auto& sizes = comp_sizes[a * n + b];
  int offset = 0;
  for (std::size_t pos = 0; pos < sizes.size(); ++pos) {
    if (cell < offset + sizes[pos][k]) return {static_cast<int>(pos),
                                               cell - offset};
    offset += sizes[pos][k];
  }
  throw std::logic_error("component_of: cell out of range");
}

int GrCat::gr_cell(int a, int b, int k, int pos, int local) const {
  int n = static_cast<int>(obj_info.size());
  const auto& sizes = comp_sizes[a * n + b];
  int offset = 0;
  for (int p = 0; p < pos; ++p) offset += sizes[p][k];
  return offset + local;
}

int GrCat::base_arrow_of(int a, int b, int k, int cell) const {
  int n = static_cast<int>(obj_info.size());
  return comp_arrows[a * n + b][component_of(a, b, k, cell).first];
}

GrCat grothendieck(const DiagramSCat& F) {
  Report ok = validate_diagram_scat(F);
  if (!ok.ok())
    throw InputError("grothendieck: invalid diagram: " + ok.summary());
  const FinCat& D = *F.base;
  int cap = F.at.empty() ? 0 : F.at.front()->cap;
  GrCat E;
  E.provenance = F;
  E.base_scat = share(discrete_scat(D, cap));

  SCat T;
  T.cap = cap;
  E.obj_of.resize(D.objects.size());
  for (std::size_t d = 0; d < D.objects.size(); ++d)
    for (int x = 0; x < F.at[d]->nobj(); ++x) {
      E.obj_of[d].push_back(T.nobj());
      E.obj_info.push_back({static_cast<int>(d), x});
      T.objects.push_back(F.at[d]->objects[x] + "@" + D.objects[d]);
    }
  int N = T.nobj();
  T.homs.resize(static_cast<std::size_t>(N) * N);
  E.comp_arrows.resize(static_cast<std::size_t>(N) * N);
  E.comp_sizes.resize(static_cast<std::size_t>(N) * N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      auto [c, x] = E.obj_info[a];
      auto [d, y] = E.obj_info[b];
      const SCat& Fd = *F.at[d];
      TruncatedSSet H;
      H.cap = cap;
      H.cells.resize(cap + 1);
      H.face.resize(cap + 1);
      H.degen.resize(cap + 1);
      auto& arrows = E.comp_arrows[a * N + b];
      auto& sizes = E.comp_sizes[a * N + b];
      arrows = D.arrows_from_to(c, d);
      sizes.resize(arrows.size());
      for (int k = 1; k <= cap; ++k) H.face[k].resize(k + 1);
      for (int k = 0; k < cap; ++k) H.degen[k].resize(k + 1);
      for (std::size_t pos = 0; pos < arrows.size(); ++pos) {
        int phi = arrows[pos];
        const TruncatedSSet& C = Fd.hom(F.arrow[phi].obj[x], y);
        sizes[pos].resize(cap + 1);
        std::vector<int> offset(cap + 1);
        for (int k = 0; k <= cap; ++k) {
          sizes[pos][k] = C.size(k);
          offset[k] = static_cast<int>(H.cells[k].size());
        }
        for (int k = 0; k <= cap; ++k)
          for (int i = 0; i < C.size(k); ++i)
            H.cells[k].push_back(D.arrows[phi].name + ":" + C.id(k, i));
        for (int k = 1; k <= cap; ++k)
          for (int i = 0; i <= k; ++i)
            for (int cidx = 0; cidx < C.size(k); ++cidx)
              H.face[k][i].push_back(offset[k - 1] + C.d(k, i, cidx));
        for (int k = 0; k < cap; ++k)
          for (int i = 0; i <= k; ++i)
            for (int cidx = 0; cidx < C.size(k); ++cidx)
              H.degen[k][i].push_back(offset[k + 1] + C.s(k, i, cidx));
      }
      H.rebuild_index();
      T.homs[a * N + b] = share(std::move(H));
    }
  for (int a = 0; a < N; ++a) {
    auto [d, x] = E.obj_info[a];
    int pos = -1;
    const auto& arrows = E.comp_arrows[a * N + a];
    for (std::size_t p = 0; p < arrows.size(); ++p)
      if (arrows[p] == D.ident[d]) pos = static_cast<int>(p);
    int offset = 0;
    for (int p = 0; p < pos; ++p) offset += E.comp_sizes[a * N + a][p][0];
    T.ident.push_back(offset + F.at[d]->ident[x]);
  }
  T.comp.resize(static_cast<std::size_t>(N) * N * N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int cobj = 0; cobj < N; ++cobj) {
        auto [dc, x] = E.obj_info[a];
        auto [dd, y] = E.obj_info[b];
        auto [de, z] = E.obj_info[cobj];
        auto& table = T.comp[(a * N + b) * N + cobj];
        table.resize(cap + 1);
        const auto& g_arrows = E.comp_arrows[b * N + cobj];
        const auto& f_arrows = E.comp_arrows[a * N + b];
        const auto& g_sizes = E.comp_sizes[b * N + cobj];
        const auto& f_sizes = E.comp_sizes[a * N + b];
        const SCat& Fe = *F.at[de];
        for (int k = 0; k <= cap; ++k) {
          int gn = 0, fn = 0;
          for (const auto& s : g_sizes) gn += s[k];
          for (const auto& s : f_sizes) fn += s[k];
          table[k].resize(static_cast<long long>(gn) * fn);
          int goff = 0;
          for (std::size_t gp = 0; gp < g_arrows.size(); ++gp) {
            int psi = g_arrows[gp];
            int foff = 0;
            for (std::size_t fp = 0; fp < f_arrows.size(); ++fp) {
              int phi = f_arrows[fp];
              int chi = D.compose(psi, phi);
              int chi_pos = -1;
              const auto& h_arrows = E.comp_arrows[a * N + cobj];
              for (std::size_t hp = 0; hp < h_arrows.size(); ++hp)
                if (h_arrows[hp] == chi) chi_pos = static_cast<int>(hp);
              // sigma in Fd(F(phi)x, y), tau in Fe(F(psi)y, z); the
              // composite component is tau . F(psi)(sigma).
              int fphi_x = F.arrow[phi].obj[x];
              int src_e = F.arrow[psi].obj[fphi_x];
              int mid_e = F.arrow[psi].obj[y];
              for (int g = 0; g < g_sizes[gp][k]; ++g)
                for (int f = 0; f < f_sizes[fp][k]; ++f) {
                  int pushed = F.arrow[psi].at_cell(fphi_x, y, k, f);
                  int local = Fe.compose(src_e, mid_e, z, k, g, pushed);
                  table[k][static_cast<long long>(goff + g) * fn +
                           (foff + f)] =
                      E.gr_cell(a, cobj, k, chi_pos, local);
                }
              foff += f_sizes[fp][k];
            }
            goff += g_sizes[gp][k];
          }
        }
      }
  E.total = share(std::move(T));

  // Projection to the discrete base.
  SFunctor P;
  P.source = E.total;
  P.target = E.base_scat;
  for (int a = 0; a < N; ++a) P.obj.push_back(E.obj_info[a].first);
  P.hom.resize(static_cast<std::size_t>(N) * N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      auto [c, x] = E.obj_info[a];
      auto [d, y] = E.obj_info[b];
      auto base_list = D.arrows_from_to(c, d);
      auto& h = P.hom[a * N + b];
      h.resize(cap + 1);
      for (int k = 0; k <= cap; ++k) {
        h[k].resize(E.total->hom(a, b).size(k));
        for (int cell = 0; cell < E.total->hom(a, b).size(k); ++cell) {
          int phi = E.base_arrow_of(a, b, k, cell);
          int pos = static_cast<int>(
              std::find(base_list.begin(), base_list.end(), phi) -
              base_list.begin());
          h[k][cell] = pos;
        }
      }
    }
  E.projection = std::move(P);
  return E;
}

GrArrow cocartesian_lift(const GrCat& E, int total_obj, int phi) {
  auto [c, x] = E.obj_info[total_obj];
  const FinCat& D = *E.provenance.base;
  if (phi < 0 || phi >= static_cast<int>(D.arrows.size()) ||
      D.arrows[phi].src != c)
    throw InputError("cocartesian_lift: arrow does not start at the object");
  int d = D.arrows[phi].tgt;
  int y = E.provenance.arrow[phi].obj[x];
  int tgt = E.total_obj(d, y);
  const auto& arrows = E.comp_arrows[total_obj * E.total->nobj() + tgt];
  int pos = static_cast<int>(
      std::find(arrows.begin(), arrows.end(), phi) - arrows.begin());
  int vertex =
      E.gr_cell(total_obj, tgt, 0, pos, E.provenance.at[d]->ident[y]);
  return {total_obj, tgt, vertex};
}

// ------------------------------------------------------------- coCartesian

Report is_pcocartesian(const SFunctor& P, int e_src, int e_tgt,
                       int chi_vertex, int d) {
  Report rep;
  const SCat& E = *P.source;
  const SCat& B = *P.target;
  if (d > E.cap) throw InputError("is_pcocartesian: d exceeds cap");
  for (int x = 0; x < B.nobj(); ++x)
    for (int y = 0; y < B.nobj(); ++y)
      for (int k = 1; k <= B.cap; ++k)
        if (!nondegenerate_cells(B.hom(x, y), k).empty())
          throw InputError("is_pcocartesian: base is not discrete");

  int p_chi = P.at_cell(e_src, e_tgt, 0, chi_vertex);
  for (int x = 0; x < E.nobj(); ++x) {
    SSetMap pre_chi = precomposition_map(E, e_src, e_tgt, chi_vertex, x);
    SSetMap pre_base = precomposition_map(B, P.obj[e_src], P.obj[e_tgt],
                                          p_chi, P.obj[x]);
    SSetMap p_src = hom_map(P, e_src, x);
    PullbackResult pb = pullback(pre_base, p_src);
    // Comparison E(e_tgt, x) -> pullback, cell by cell.
    const TruncatedSSet& A = E.hom(e_tgt, x);
    SSetMap p_tgt = hom_map(P, e_tgt, x);
    for (int k = 0; k <= d; ++k) {
      std::vector<int> hits(pb.object->size(k), 0);
      for (int t = 0; t < A.size(k); ++t) {
        std::string id = "(" +
                         B.hom(P.obj[e_tgt], P.obj[x]).id(k, p_tgt.at(k, t)) +
                         "," + E.hom(e_src, x).id(k, pre_chi.at(k, t)) + ")";
        int cell = pb.object->find(k, id);
        if (cell < 0) {
          rep.add("comparison leaves the pullback",
                  "object " + E.objects[x] + " dim " + std::to_string(k) +
                      " cell " + A.id(k, t));
          continue;
        }
        if (hits[cell]++)
          rep.add("comparison not injective",
                  "object " + E.objects[x] + " dim " + std::to_string(k) +
                      " pullback cell " + pb.object->id(k, cell));
      }
      for (int cell = 0; cell < pb.object->size(k); ++cell)
        if (!hits[cell])
          rep.add("comparison not surjective",
                  "object " + E.objects[x] + " dim " + std::to_string(k) +
                      " pullback cell " + pb.object->id(k, cell) +
                      " has no preimage");
    }
  }
  return rep;
}

Report is_opfibration(const SFunctor& P, int d) {
  Report rep;
  const SCat& E = *P.source;
  const SCat& B = *P.target;
  for (int e = 0; e < E.nobj(); ++e) {
    int c = P.obj[e];
    for (int bobj = 0; bobj < B.nobj(); ++bobj) {
      // Base arrows c -> bobj are the vertices of the discrete hom.
      for (int phi_pos = 0; phi_pos < B.hom(c, bobj).size(0); ++phi_pos) {
        bool lifted = false;
        for (int e2 = 0; e2 < E.nobj() && !lifted; ++e2) {
          if (P.obj[e2] != bobj) continue;
          for (int v = 0; v < E.hom(e, e2).size(0) && !lifted; ++v) {
            if (P.at_cell(e, e2, 0, v) != phi_pos) continue;
            if (is_pcocartesian(P, e, e2, v, d).ok()) lifted = true;
          }
        }
        if (!lifted)
          rep.add("no coCartesian lift",
                  "object " + E.objects[e] + ", base arrow " +
                      B.hom(c, bobj).id(0, phi_pos));
      }
    }
  }
  return rep;
}

GrCat fiberwise_op_split(const GrCat& E) {
  if (!E.provenance.base)
    throw InputError("fiberwise_op_split: input lacks provenance");
  return grothendieck(opposite_diagram_scat(E.provenance));
}

// ------------------------------------------------------------ translations

NervedDiagram nerve_diagram(const DiagramSCat& F, int cap) {
  NervedDiagram ND;
  ND.F = F;
  for (const auto& C : F.at) ND.fibers.push_back(coherent_nerve(C, cap));
  ND.diagram.base = F.base;
  for (const auto& nerve : ND.fibers) ND.diagram.at.push_back(nerve.sset);
  for (std::size_t a = 0; a < F.arrow.size(); ++a)
    ND.diagram.arrow.push_back(
        coherent_nerve_map(F.arrow[a], ND.fibers[F.base->arrows[a].src],
                           ND.fibers[F.base->arrows[a].tgt]));
  return ND;
}

RelNerveSimplex gr_simplex_to_relnerve(const GrCat& E, const NervedDiagram& ND,
                                       const CoherentSimplex& S) {
  const FinCat& D = *E.provenance.base;
  int n = S.n;
  RelNerveSimplex out;
  out.n = n;
  std::vector<int> xs(n + 1);
  for (int i = 0; i <= n; ++i) {
    auto [d, x] = E.obj_info[S.objects[i]];
    out.objects.push_back(d);
    xs[i] = x;
  }
  for (int i = 0; i < n; ++i)
    out.arrows.push_back(
        E.base_arrow_of(S.objects[i], S.objects[i + 1], 0,
                        S.cells.at({{i, i + 1}})));
  for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
    std::vector<int> J;
    for (int i = 0; i <= n; ++i)
      if (mask & (1 << i)) J.push_back(i);
    int j = J.back();
    int dj = out.objects[j];
    CoherentSimplex SJ;
    SJ.n = static_cast<int>(J.size()) - 1;
    for (int i : J) {
      int arr = D.chain_arrow(out.arrows, out.objects, i, j);
      SJ.objects.push_back(E.provenance.arrow[arr].obj[xs[i]]);
    }
    if (J.size() >= 2) {
      for (int sub = 1; sub < (1 << J.size()); ++sub) {
        std::vector<int> pos;
        for (std::size_t p = 0; p < J.size(); ++p)
          if (sub & (1 << p)) pos.push_back(static_cast<int>(p));
        if (pos.size() < 2) continue;
        for (const auto& b : enumerate_bead_shapes(pos)) {
          // Translate the position shape to labels to read off S's cell.
          std::vector<std::vector<int>> label_blocks;
          for (const auto& blk : b.blocks) {
            std::vector<int> lb;
            for (int p : blk) lb.push_back(J[p]);
            label_blocks.push_back(std::move(lb));
          }
          int i0 = J[pos.front()], im = J[pos.back()];
          int gr = S.cells.at(label_blocks);
          auto [cpos, local] =
              E.component_of(S.objects[i0], S.objects[im], b.dim(), gr);
          int phi = E.comp_arrows[S.objects[i0] * E.total->nobj() +
                                  S.objects[im]][cpos];
          // Discreteness of the base forces every component to sit over the
          // chain composite.
          int arr_imj = D.chain_arrow(out.arrows, out.objects, im, j);
          int arr_i0im = D.chain_arrow(out.arrows, out.objects, i0, im);
          if (phi != arr_i0im)
            throw std::logic_error(
                "gr_simplex_to_relnerve: bead cell sits over the wrong "
                "base arrow");
          int src_obj = E.provenance.arrow[arr_i0im].obj[xs[i0]];
          int tgt_obj = xs[im];
          SJ.cells[b.blocks] = E.provenance.arrow[arr_imj].at_cell(
              src_obj, tgt_obj, b.dim(), local);
        }
      }
    }
    int cell = ND.fibers[dj].find(SJ);
    if (cell < 0)
      throw std::logic_error(
          "gr_simplex_to_relnerve: transported simplex not found");
    out.s[J] = cell;
  }
  return out;
}

CoherentSimplex relnerve_simplex_to_gr(const GrCat& E, const NervedDiagram& ND,
                                       const RelNerveSimplex& T) {
  const FinCat& D = *E.provenance.base;
  Report valid = validate_relative(D, ND.diagram, T);
  if (!valid.ok())
    throw InputError("relnerve_simplex_to_gr: family violates the "
                     "compatibility squares: " +
                     valid.summary());
  int n = T.n;
  CoherentSimplex out;
  out.n = n;
  std::vector<int> xs(n + 1);
  for (int i = 0; i <= n; ++i) {
    const CoherentSimplex& Si = ND.fibers[T.objects[i]].simplices[0]
                                    [T.s.at(std::vector<int>{i})];
    xs[i] = Si.objects[0];
    out.objects.push_back(E.total_obj(T.objects[i], xs[i]));
  }
  for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
    std::vector<int> I;
    for (int i = 0; i <= n; ++i)
      if (mask & (1 << i)) I.push_back(i);
    if (I.size() < 2) continue;
    int im = I.back();
    const CoherentSimplex& SI =
        ND.fibers[T.objects[im]].simplices[static_cast<int>(I.size()) - 1]
            [T.s.at(I)];
    std::vector<int> all_pos;
    for (std::size_t p = 0; p < I.size(); ++p)
      all_pos.push_back(static_cast<int>(p));
    for (const auto& b : enumerate_bead_shapes(all_pos)) {
      std::vector<std::vector<int>> label_blocks;
      for (const auto& blk : b.blocks) {
        std::vector<int> lb;
        for (int p : blk) lb.push_back(I[p]);
        label_blocks.push_back(std::move(lb));
      }
      int local = SI.cells.at(b.blocks);
      int i0 = I.front();
      int a = out.objects[i0], bb = out.objects[im];
      int phi = D.chain_arrow(T.arrows, T.objects, i0, im);
      const auto& arrows = E.comp_arrows[a * E.total->nobj() + bb];
      int pos = static_cast<int>(
          std::find(arrows.begin(), arrows.end(), phi) - arrows.begin());
      out.cells[label_blocks] = E.gr_cell(a, bb, b.dim(), pos, local);
    }
  }
  return out;
}

Certificate check_gr_relnerve_iso(const DiagramSCat& F, int n_max) {
  auto start = std::chrono::steady_clock::now();
  Certificate cert;
  cert.command = "check gr-relnerve";
  GrCat E = grothendieck(F);
  CoherentNerve NG = coherent_nerve(E.total, n_max);
  NervedDiagram ND = nerve_diagram(F, n_max);
  RelativeNerve RN = relative_nerve(F.base, ND.diagram, n_max);

  std::vector<long long> gr_counts = cell_counts(*NG.sset);
  std::vector<long long> rel_counts = cell_counts(*RN.sset);
  cert.counts["total-nerve"] = gr_counts;
  cert.counts["relative-nerve"] = rel_counts;
  cert.check("equal cell counts per dimension", gr_counts == rel_counts,
             gr_counts == rel_counts ? "" : "count mismatch");

  SSetMap fwd;
  fwd.source = NG.sset;
  fwd.target = RN.sset;
  fwd.assign.resize(n_max + 1);
  SSetMap bwd;
  bwd.source = RN.sset;
  bwd.target = NG.sset;
  bwd.assign.resize(n_max + 1);
  bool mapped = true;
  std::string witness;
  for (int n = 0; n <= n_max && mapped; ++n) {
    fwd.assign[n].resize(NG.simplices[n].size());
    for (std::size_t c = 0; c < NG.simplices[n].size(); ++c) {
      int idx = RN.find(gr_simplex_to_relnerve(E, ND, NG.simplices[n][c]));
      if (idx < 0) {
        mapped = false;
        witness = "dim " + std::to_string(n) + " cell " + NG.sset->id(n, c);
        break;
      }
      fwd.assign[n][c] = idx;
    }
    bwd.assign[n].resize(RN.simplices[n].size());
    for (std::size_t c = 0; c < RN.simplices[n].size() && mapped; ++c) {
      int idx = NG.find(relnerve_simplex_to_gr(E, ND, RN.simplices[n][c]));
      if (idx < 0) {
        mapped = false;
        witness = "dim " + std::to_string(n) + " cell " + RN.sset->id(n, c);
        break;
      }
      bwd.assign[n][c] = idx;
    }
  }
  cert.check("explicit maps land in the enumerated nerves", mapped, witness);
  if (!mapped) return cert;

  bool inverse = true;
  for (int n = 0; n <= n_max && inverse; ++n) {
    for (std::size_t c = 0; c < NG.simplices[n].size(); ++c)
      if (bwd.assign[n][fwd.assign[n][c]] != static_cast<int>(c)) {
        inverse = false;
        cert.fail("mutually inverse",
                  "dim " + std::to_string(n) + " cell " + NG.sset->id(n, c));
        break;
      }
    for (std::size_t c = 0; c < RN.simplices[n].size() && inverse; ++c)
      if (fwd.assign[n][bwd.assign[n][c]] != static_cast<int>(c)) {
        inverse = false;
        cert.fail("mutually inverse",
                  "dim " + std::to_string(n) + " cell " + RN.sset->id(n, c));
        break;
      }
  }
  if (inverse) cert.check("mutually inverse", true);

  Report fwd_nat = validate_ssetmap(fwd);
  cert.check("forward map commutes with faces and degeneracies", fwd_nat.ok(),
             fwd_nat.summary());
  Report bwd_nat = validate_ssetmap(bwd);
  cert.check("backward map commutes with faces and degeneracies",
             bwd_nat.ok(), bwd_nat.summary());

  bool proj_ok = true;
  for (int n = 0; n <= n_max && proj_ok; ++n)
    for (std::size_t c = 0; c < NG.simplices[n].size(); ++c) {
      const CoherentSimplex& S = NG.simplices[n][c];
      std::vector<int> base_arrows;
      std::vector<int> base_objs;
      for (int i = 0; i <= n; ++i)
        base_objs.push_back(E.obj_info[S.objects[i]].first);
      for (int i = 0; i < n; ++i)
        base_arrows.push_back(E.base_arrow_of(
            S.objects[i], S.objects[i + 1], 0, S.cells.at({{i, i + 1}})));
      int lhs = RN.base_nerve.find_chain(base_objs[0], base_arrows);
      int rhs = RN.projection.at(n, fwd.assign[n][c]);
      if (lhs != rhs) {
        proj_ok = false;
        cert.fail("projection compatibility",
                  "dim " + std::to_string(n) + " cell " + NG.sset->id(n, c));
        break;
      }
    }
  if (proj_ok) cert.check("projection compatibility", true);

  cert.wall_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return cert;
}

}  // namespace simpcat
