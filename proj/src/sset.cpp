#include "simpcat/sset.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace simpcat {

namespace {

std::string dim_cell(int k, const std::string& id) {
  return "dim " + std::to_string(k) + " cell '" + id + "'";
}

int env_threads() {
  const char* v = std::getenv("SIMPCAT_THREADS");
  if (!v) return 1;
  int n = std::atoi(v);
  return n > 1 ? n : 1;
}

}  // namespace

// -------------------------------------------------------------- TruncatedSSet

void TruncatedSSet::rebuild_index() {
  index_.assign(cells.size(), {});
  for (std::size_t k = 0; k < cells.size(); ++k) {
    index_[k].reserve(cells[k].size());
    for (std::size_t i = 0; i < cells[k].size(); ++i) {
      auto [it, fresh] = index_[k].emplace(cells[k][i], static_cast<int>(i));
      if (!fresh)
        throw InputError("duplicate cell id '" + cells[k][i] +
                         "' in dimension " + std::to_string(k));
    }
  }
}

int TruncatedSSet::find(int k, const CellId& name) const {
  if (k < 0 || k > cap) return -1;
  auto it = index_[k].find(name);
  return it == index_[k].end() ? -1 : it->second;
}

SSetPtr share(TruncatedSSet x) {
  return std::make_shared<const TruncatedSSet>(std::move(x));
}

// ----------------------------------------------------------------- structure

bool is_degenerate(const TruncatedSSet& X, int k, int idx) {
  for (int i = 0; i < k; ++i)
    if (X.s(k - 1, i, X.d(k, i, idx)) == idx) return true;
  return false;
}

EzForm ez_form(const TruncatedSSet& X, int k, int idx) {
  EzForm f;
  int dim = k, cur = idx;
  while (dim > 0) {
    int strip = -1;
    for (int i = 0; i < dim; ++i) {
      if (X.s(dim - 1, i, X.d(dim, i, cur)) == cur) {
        strip = i;
        break;
      }
    }
    if (strip < 0) break;
    f.word.push_back(strip);
    cur = X.d(dim, strip, cur);
    --dim;
  }
  f.base_dim = dim;
  f.base_idx = cur;
  return f;
}

std::vector<int> nondegenerate_cells(const TruncatedSSet& X, int k) {
  std::vector<int> out;
  for (int i = 0; i < X.size(k); ++i)
    if (!is_degenerate(X, k, i)) out.push_back(i);
  return out;
}

std::vector<long long> cell_counts(const TruncatedSSet& X) {
  std::vector<long long> out;
  for (int k = 0; k <= X.cap; ++k) out.push_back(X.size(k));
  return out;
}

std::vector<long long> nondegenerate_counts(const TruncatedSSet& X) {
  std::vector<long long> out;
  for (int k = 0; k <= X.cap; ++k)
    out.push_back(static_cast<long long>(nondegenerate_cells(X, k).size()));
  return out;
}

namespace {

// X(sigma) for a monotone surjection sigma : [m] ->> [k] via the standard
// codegeneracy factorisation.
int apply_surjection(const TruncatedSSet& X, const std::vector<int>& sigma,
                     int k, int idx) {
  int m = static_cast<int>(sigma.size()) - 1;
  if (m == k) return idx;  // monotone surjection [m] ->> [m] is the identity
  int j = 0;
  while (sigma[j] != sigma[j + 1]) ++j;
  std::vector<int> rest;
  rest.reserve(sigma.size() - 1);
  for (int q = 0; q <= m; ++q)
    if (q != j) rest.push_back(sigma[q]);
  int y = apply_surjection(X, rest, k, idx);
  return X.s(m - 1, j, y);
}

}  // namespace

int apply_monotone(const TruncatedSSet& X, const std::vector<int>& alpha,
                   int n, int idx) {
  int m = static_cast<int>(alpha.size()) - 1;
  if (m > X.cap) throw InputError("apply_monotone: target dimension above cap");
  // Injective part: restrict to the distinct values hit by alpha.
  std::vector<int> values;
  for (int v : alpha)
    if (values.empty() || values.back() != v) values.push_back(v);
  std::vector<bool> hit(n + 1, false);
  for (int v : values) hit[v] = true;
  int cur = idx;
  int dim = n;
  for (int v = n; v >= 0; --v) {
    if (!hit[v]) {
      cur = X.d(dim, v, cur);
      --dim;
    }
  }
  // Surjective part onto the distinct values.
  std::vector<int> sigma(alpha.size());
  for (std::size_t q = 0; q < alpha.size(); ++q)
    sigma[q] = static_cast<int>(
        std::lower_bound(values.begin(), values.end(), alpha[q]) -
        values.begin());
  return apply_surjection(X, sigma, dim, cur);
}

int degenerate_vertex(const TruncatedSSet& X, int vertex, int k) {
  int cur = vertex;
  for (int j = 0; j < k; ++j) cur = X.s(j, 0, cur);
  return cur;
}

// ----------------------------------------------------------------- validation

namespace {

// All nondegenerate bases reachable by stripping degeneracies in any order.
void ez_bases(const TruncatedSSet& X, int k, int idx,
              std::set<std::pair<int, int>>& out) {
  bool stripped = false;
  for (int i = 0; i < k; ++i) {
    int below = X.d(k, i, idx);
    if (X.s(k - 1, i, below) == idx) {
      stripped = true;
      ez_bases(X, k - 1, below, out);
    }
  }
  if (!stripped) out.insert({k, idx});
}

}  // namespace

Report validate_sset(const TruncatedSSet& X) {
  Report rep;
  if (X.cap < 0) {
    rep.add("cap", "negative cap");
    return rep;
  }
  bool shape_ok = static_cast<int>(X.cells.size()) == X.cap + 1 &&
                  static_cast<int>(X.face.size()) == X.cap + 1 &&
                  static_cast<int>(X.degen.size()) == X.cap + 1;
  if (!shape_ok) {
    rep.add("shape", "cells/face/degen arrays not sized cap+1");
    return rep;
  }
  for (int k = 1; k <= X.cap; ++k) {
    if (static_cast<int>(X.face[k].size()) != k + 1) {
      rep.add("shape", "face[" + std::to_string(k) + "] needs k+1 maps");
      return rep;
    }
    for (int i = 0; i <= k; ++i) {
      if (static_cast<int>(X.face[k][i].size()) != X.size(k)) {
        rep.add("shape", "face map not aligned with cells");
        return rep;
      }
      for (int idx = 0; idx < X.size(k); ++idx)
        if (X.d(k, i, idx) < 0 || X.d(k, i, idx) >= X.size(k - 1)) {
          rep.add("range", "face image out of range at " +
                               dim_cell(k, X.id(k, idx)));
          return rep;
        }
    }
  }
  for (int k = 0; k < X.cap; ++k) {
    if (static_cast<int>(X.degen[k].size()) != k + 1) {
      rep.add("shape", "degen[" + std::to_string(k) + "] needs k+1 maps");
      return rep;
    }
    for (int i = 0; i <= k; ++i) {
      if (static_cast<int>(X.degen[k][i].size()) != X.size(k)) {
        rep.add("shape", "degeneracy map not aligned with cells");
        return rep;
      }
      for (int idx = 0; idx < X.size(k); ++idx)
        if (X.s(k, i, idx) < 0 || X.s(k, i, idx) >= X.size(k + 1)) {
          rep.add("range", "degeneracy image out of range at " +
                               dim_cell(k, X.id(k, idx)));
          return rep;
        }
    }
  }

  // d_i d_j = d_{j-1} d_i for i < j.
  for (int k = 2; k <= X.cap; ++k)
    for (int j = 1; j <= k; ++j)
      for (int i = 0; i < j; ++i)
        for (int idx = 0; idx < X.size(k); ++idx)
          if (X.d(k - 1, i, X.d(k, j, idx)) !=
              X.d(k - 1, j - 1, X.d(k, i, idx)))
            rep.add("d_" + std::to_string(i) + " d_" + std::to_string(j),
                    dim_cell(k, X.id(k, idx)));

  // s_i s_j = s_{j+1} s_i for i <= j.
  for (int k = 0; k + 2 <= X.cap; ++k)
    for (int j = 0; j <= k; ++j)
      for (int i = 0; i <= j; ++i)
        for (int idx = 0; idx < X.size(k); ++idx)
          if (X.s(k + 1, i, X.s(k, j, idx)) !=
              X.s(k + 1, j + 1, X.s(k, i, idx)))
            rep.add("s_" + std::to_string(i) + " s_" + std::to_string(j),
                    dim_cell(k, X.id(k, idx)));

  // Mixed identities on cells of dimension k, via s_j into dimension k+1.
  for (int k = 0; k + 1 <= X.cap; ++k)
    for (int j = 0; j <= k; ++j)
      for (int i = 0; i <= k + 1; ++i)
        for (int idx = 0; idx < X.size(k); ++idx) {
          int lhs = X.d(k + 1, i, X.s(k, j, idx));
          int rhs;
          if (i < j)
            rhs = k >= 1 ? X.s(k - 1, j - 1, X.d(k, i, idx)) : -1;
          else if (i == j || i == j + 1)
            rhs = idx;
          else
            rhs = k >= 1 ? X.s(k - 1, j, X.d(k, i - 1, idx)) : -1;
          if (rhs >= 0 && lhs != rhs)
            rep.add("d_" + std::to_string(i) + " s_" + std::to_string(j),
                    dim_cell(k, X.id(k, idx)));
        }

  // Eilenberg-Zilber: every cell decomposes onto a unique nondegenerate base.
  for (int k = 1; k <= X.cap; ++k)
    for (int idx = 0; idx < X.size(k); ++idx) {
      std::set<std::pair<int, int>> bases;
      ez_bases(X, k, idx, bases);
      if (bases.size() != 1)
        rep.add("ez-uniqueness", dim_cell(k, X.id(k, idx)) + " has " +
                                     std::to_string(bases.size()) + " bases");
    }
  return rep;
}

Report validate_ssetmap(const SSetMap& f) {
  Report rep;
  const TruncatedSSet& X = *f.source;
  const TruncatedSSet& Y = *f.target;
  int top = std::min(X.cap, Y.cap);
  if (static_cast<int>(f.assign.size()) < top + 1) {
    rep.add("shape", "assignment missing dimensions");
    return rep;
  }
  for (int k = 0; k <= top; ++k) {
    if (static_cast<int>(f.assign[k].size()) != X.size(k)) {
      rep.add("shape", "assignment not aligned at dim " + std::to_string(k));
      return rep;
    }
    for (int idx = 0; idx < X.size(k); ++idx)
      if (f.at(k, idx) < 0 || f.at(k, idx) >= Y.size(k)) {
        rep.add("range", dim_cell(k, X.id(k, idx)));
        return rep;
      }
  }
  for (int k = 1; k <= top; ++k)
    for (int i = 0; i <= k; ++i)
      for (int idx = 0; idx < X.size(k); ++idx)
        if (f.at(k - 1, X.d(k, i, idx)) != Y.d(k, i, f.at(k, idx)))
          rep.add("face d_" + std::to_string(i), dim_cell(k, X.id(k, idx)));
  for (int k = 0; k < top; ++k)
    for (int i = 0; i <= k; ++i)
      for (int idx = 0; idx < X.size(k); ++idx)
        if (f.at(k + 1, X.s(k, i, idx)) != Y.s(k, i, f.at(k, idx)))
          rep.add("degeneracy s_" + std::to_string(i),
                  dim_cell(k, X.id(k, idx)));
  return rep;
}

// --------------------------------------------------------------- constructors

namespace {

std::string monotone_id(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(v[i]);
  }
  return s;
}

void enumerate_monotone(int k, int n, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(k + 1, 0);
  while (true) {
    out.push_back(cur);
    int p = k;
    while (p >= 0 && cur[p] == n) --p;
    if (p < 0) break;
    ++cur[p];
    for (int q = p + 1; q <= k; ++q) cur[q] = cur[p];
  }
}

}  // namespace

TruncatedSSet standard_simplex(int n, int cap) {
  if (n < 0 || cap < 0) throw InputError("standard_simplex: negative argument");
  TruncatedSSet X;
  X.cap = cap;
  X.cells.resize(cap + 1);
  X.face.resize(cap + 1);
  X.degen.resize(cap + 1);
  std::vector<std::vector<std::vector<int>>> maps(cap + 1);
  for (int k = 0; k <= cap; ++k) enumerate_monotone(k, n, maps[k]);
  std::vector<std::map<std::vector<int>, int>> pos(cap + 1);
  for (int k = 0; k <= cap; ++k)
    for (std::size_t i = 0; i < maps[k].size(); ++i)
      pos[k][maps[k][i]] = static_cast<int>(i);
  for (int k = 0; k <= cap; ++k)
    for (const auto& m : maps[k]) X.cells[k].push_back(monotone_id(m));
  for (int k = 1; k <= cap; ++k) {
    X.face[k].assign(k + 1, std::vector<int>(maps[k].size()));
    for (int i = 0; i <= k; ++i)
      for (std::size_t c = 0; c < maps[k].size(); ++c) {
        std::vector<int> v = maps[k][c];
        v.erase(v.begin() + i);
        X.face[k][i][c] = pos[k - 1][v];
      }
  }
  for (int k = 0; k < cap; ++k) {
    X.degen[k].assign(k + 1, std::vector<int>(maps[k].size()));
    for (int i = 0; i <= k; ++i)
      for (std::size_t c = 0; c < maps[k].size(); ++c) {
        std::vector<int> v = maps[k][c];
        v.insert(v.begin() + i, v[i]);
        X.degen[k][i][c] = pos[k + 1][v];
      }
  }
  X.rebuild_index();
  return X;
}

TruncatedSSet opposite_sset(const TruncatedSSet& X) {
  TruncatedSSet Y;
  Y.cap = X.cap;
  Y.cells = X.cells;
  Y.face.resize(X.cap + 1);
  Y.degen.resize(X.cap + 1);
  for (int k = 1; k <= X.cap; ++k) {
    Y.face[k].resize(k + 1);
    for (int i = 0; i <= k; ++i) Y.face[k][i] = X.face[k][k - i];
  }
  for (int k = 0; k < X.cap; ++k) {
    Y.degen[k].resize(k + 1);
    for (int i = 0; i <= k; ++i) Y.degen[k][i] = X.degen[k][k - i];
  }
  Y.rebuild_index();
  return Y;
}

TruncatedSSet nary_product(const std::vector<SSetPtr>& Xs, int cap) {
  for (const auto& X : Xs)
    if (X->cap != cap) throw InputError("nary_product: cap mismatch");
  int n = static_cast<int>(Xs.size());
  TruncatedSSet P;
  P.cap = cap;
  P.cells.resize(cap + 1);
  P.face.resize(cap + 1);
  P.degen.resize(cap + 1);
  // Mixed-radix tuples; component i varies fastest for i = n-1.
  std::vector<std::vector<int>> radix(cap + 1, std::vector<int>(n));
  std::vector<long long> total(cap + 1, 1);
  for (int k = 0; k <= cap; ++k)
    for (int i = 0; i < n; ++i) {
      radix[k][i] = Xs[i]->size(k);
      total[k] *= radix[k][i];
    }
  auto unpack = [&](int k, long long flat) {
    std::vector<int> t(n);
    for (int i = n - 1; i >= 0; --i) {
      t[i] = static_cast<int>(flat % radix[k][i]);
      flat /= radix[k][i];
    }
    return t;
  };
  auto pack = [&](int k, const std::vector<int>& t) {
    long long flat = 0;
    for (int i = 0; i < n; ++i) flat = flat * radix[k][i] + t[i];
    return static_cast<int>(flat);
  };
  for (int k = 0; k <= cap; ++k) {
    for (long long flat = 0; flat < total[k]; ++flat) {
      auto t = unpack(k, flat);
      std::string id = "(";
      for (int i = 0; i < n; ++i) {
        if (i) id += ",";
        id += Xs[i]->id(k, t[i]);
      }
      id += ")";
      P.cells[k].push_back(id);
    }
  }
  for (int k = 1; k <= cap; ++k) {
    P.face[k].assign(k + 1, std::vector<int>(P.cells[k].size()));
    for (int i = 0; i <= k; ++i)
      for (long long flat = 0; flat < total[k]; ++flat) {
        auto t = unpack(k, flat);
        for (int c = 0; c < n; ++c) t[c] = Xs[c]->d(k, i, t[c]);
        P.face[k][i][flat] = pack(k - 1, t);
      }
  }
  for (int k = 0; k < cap; ++k) {
    P.degen[k].assign(k + 1, std::vector<int>(P.cells[k].size()));
    for (int i = 0; i <= k; ++i)
      for (long long flat = 0; flat < total[k]; ++flat) {
        auto t = unpack(k, flat);
        for (int c = 0; c < n; ++c) t[c] = Xs[c]->s(k, i, t[c]);
        P.degen[k][i][flat] = pack(k + 1, t);
      }
  }
  P.rebuild_index();
  return P;
}

TruncatedSSet binary_product(const TruncatedSSet& X, const TruncatedSSet& Y) {
  if (X.cap != Y.cap) throw InputError("binary_product: cap mismatch");
  return nary_product({std::make_shared<const TruncatedSSet>(X),
                       std::make_shared<const TruncatedSSet>(Y)},
                      X.cap);
}

PullbackResult pullback(const SSetMap& f, const SSetMap& g) {
  const TruncatedSSet& X = *f.source;
  const TruncatedSSet& Y = *g.source;
  if (!(f.target && g.target) || !data_equal(*f.target, *g.target))
    throw InputError("pullback: maps do not share a target");
  if (X.cap != Y.cap || X.cap != f.target->cap)
    throw InputError("pullback: cap mismatch");
  int cap = X.cap;
  TruncatedSSet P;
  P.cap = cap;
  P.cells.resize(cap + 1);
  P.face.resize(cap + 1);
  P.degen.resize(cap + 1);
  std::vector<std::vector<std::pair<int, int>>> members(cap + 1);
  std::vector<std::map<std::pair<int, int>, int>> pos(cap + 1);
  for (int k = 0; k <= cap; ++k) {
    for (int i = 0; i < X.size(k); ++i)
      for (int j = 0; j < Y.size(k); ++j)
        if (f.target->id(k, f.at(k, i)) == g.target->id(k, g.at(k, j))) {
          pos[k][{i, j}] = static_cast<int>(members[k].size());
          members[k].push_back({i, j});
          P.cells[k].push_back("(" + X.id(k, i) + "," + Y.id(k, j) + ")");
        }
  }
  for (int k = 1; k <= cap; ++k) {
    P.face[k].assign(k + 1, std::vector<int>(members[k].size()));
    for (int i = 0; i <= k; ++i)
      for (std::size_t c = 0; c < members[k].size(); ++c) {
        auto [a, b] = members[k][c];
        P.face[k][i][c] = pos[k - 1].at({X.d(k, i, a), Y.d(k, i, b)});
      }
  }
  for (int k = 0; k < cap; ++k) {
    P.degen[k].assign(k + 1, std::vector<int>(members[k].size()));
    for (int i = 0; i <= k; ++i)
      for (std::size_t c = 0; c < members[k].size(); ++c) {
        auto [a, b] = members[k][c];
        P.degen[k][i][c] = pos[k + 1].at({X.s(k, i, a), Y.s(k, i, b)});
      }
  }
  P.rebuild_index();
  PullbackResult res;
  res.object = share(std::move(P));
  res.to_left.source = res.object;
  res.to_left.target = f.source;
  res.to_right.source = res.object;
  res.to_right.target = g.source;
  res.to_left.assign.resize(cap + 1);
  res.to_right.assign.resize(cap + 1);
  for (int k = 0; k <= cap; ++k)
    for (auto [a, b] : members[k]) {
      res.to_left.assign[k].push_back(a);
      res.to_right.assign[k].push_back(b);
    }
  return res;
}

// ---------------------------------------------------------------- horn check

namespace {

struct HornTask {
  int n, k;
};

// Families (x_i)_{i != k} of (n-1)-cells with d_j x_i = d_{i-1} x_j for j < i.
void enumerate_horns(const TruncatedSSet& X, int n, int k,
                     std::vector<std::vector<int>>& out) {
  std::vector<int> positions;
  for (int i = 0; i <= n; ++i)
    if (i != k) positions.push_back(i);
  std::vector<int> chosen(n + 1, -1);
  std::function<void(std::size_t)> rec = [&](std::size_t p) {
    if (p == positions.size()) {
      std::vector<int> fam;
      for (int i : positions) fam.push_back(chosen[i]);
      out.push_back(std::move(fam));
      return;
    }
    int i = positions[p];
    for (int cand = 0; cand < X.size(n - 1); ++cand) {
      bool ok = true;
      for (std::size_t q = 0; q < p && ok; ++q) {
        int j = positions[q];  // j < i
        if (X.d(n - 1, j, cand) != X.d(n - 1, i - 1, chosen[j])) ok = false;
      }
      if (ok) {
        chosen[i] = cand;
        rec(p + 1);
        chosen[i] = -1;
      }
    }
  };
  rec(0);
}

}  // namespace

HornReport horn_check(const TruncatedSSet& X, HornMode mode, int d) {
  if (d > X.cap) throw InputError("horn_check: d exceeds cap");
  HornReport rep;
  rep.max_dim = d;
  std::vector<HornTask> tasks;
  for (int n = 1; n <= d; ++n)
    for (int k = 0; k <= n; ++k) {
      if (mode == HornMode::Inner && (k == 0 || k == n)) continue;
      tasks.push_back({n, k});
    }

  auto run_task = [&X](const HornTask& t, HornReport& local) {
    int n = t.n, k = t.k;
    std::vector<std::vector<int>> horns;
    enumerate_horns(X, n, k, horns);
    // Index n-cells by their faces away from position k.
    std::map<std::vector<int>, int> filler;
    for (int c = 0; c < X.size(n); ++c) {
      std::vector<int> key;
      for (int i = 0; i <= n; ++i)
        if (i != k) key.push_back(X.d(n, i, c));
      filler.emplace(std::move(key), c);
    }
    for (const auto& fam : horns) {
      ++local.horns_checked;
      if (filler.count(fam)) {
        ++local.horns_filled;
      } else {
        HornReport::Unfilled u;
        u.n = n;
        u.k = k;
        for (int idx : fam) u.faces.push_back(X.id(n - 1, idx));
        local.unfilled.push_back(std::move(u));
      }
    }
  };

  int threads = env_threads();
  if (threads <= 1 || tasks.size() <= 1) {
    for (const auto& t : tasks) run_task(t, rep);
  } else {
    std::vector<HornReport> partial(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) break;
        run_task(tasks[i], partial[i]);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (const auto& p : partial) {  // deterministic merge in task order
      rep.horns_checked += p.horns_checked;
      rep.horns_filled += p.horns_filled;
      rep.unfilled.insert(rep.unfilled.end(), p.unfilled.begin(),
                          p.unfilled.end());
    }
  }
  return rep;
}

// ------------------------------------------------------------------- sset_iso

namespace {

struct IsoSearch {
  const TruncatedSSet& X;
  const TruncatedSSet& Y;
  std::vector<std::vector<int>> nd_x, nd_y;
  // Partial map on nondegenerate cells; -1 where unassigned.
  std::vector<std::vector<int>> map_nd;
  std::vector<std::vector<bool>> used;

  // Image of an arbitrary cell through the partial assignment, or -1.
  int image(int k, int idx) const {
    EzForm f = ez_form(X, k, idx);
    int y = map_nd[f.base_dim][f.base_idx];
    if (y < 0) return -1;
    for (auto it = f.word.rbegin(); it != f.word.rend(); ++it) {
      y = Y.s(f.base_dim, *it, y);
      ++f.base_dim;
    }
    return y;
  }

  bool faces_ok(int k, int x, int y) const {
    for (int i = 0; i <= k; ++i) {
      int want = image(k - 1, X.d(k, i, x));
      if (want < 0 || Y.d(k, i, y) != want) return false;
    }
    return true;
  }

  bool assign_dim(int k, std::size_t pos) {
    if (pos == nd_x[k].size())
      return k == X.cap ? true : assign_dim(k + 1, 0);
    int x = nd_x[k][pos];
    for (std::size_t cand = 0; cand < nd_y[k].size(); ++cand) {
      if (used[k][cand]) continue;
      int y = nd_y[k][cand];
      if (k > 0 && !faces_ok(k, x, y)) continue;
      map_nd[k][x] = y;
      used[k][cand] = true;
      if (assign_dim(k, pos + 1)) return true;
      map_nd[k][x] = -1;
      used[k][cand] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::vector<int>>> sset_iso(const TruncatedSSet& X,
                                                      const TruncatedSSet& Y) {
  if (X.cap != Y.cap) throw InputError("sset_iso: cap mismatch");
  for (int k = 0; k <= X.cap; ++k)
    if (X.size(k) != Y.size(k)) return std::nullopt;
  IsoSearch srch{X, Y, {}, {}, {}, {}};
  srch.nd_x.resize(X.cap + 1);
  srch.nd_y.resize(X.cap + 1);
  srch.map_nd.resize(X.cap + 1);
  srch.used.resize(X.cap + 1);
  for (int k = 0; k <= X.cap; ++k) {
    srch.nd_x[k] = nondegenerate_cells(X, k);
    srch.nd_y[k] = nondegenerate_cells(Y, k);
    if (srch.nd_x[k].size() != srch.nd_y[k].size()) return std::nullopt;
    srch.map_nd[k].assign(X.size(k), -1);
    srch.used[k].assign(srch.nd_y[k].size(), false);
  }
  if (!srch.assign_dim(0, 0)) return std::nullopt;
  std::vector<std::vector<int>> full(X.cap + 1);
  for (int k = 0; k <= X.cap; ++k) {
    full[k].resize(X.size(k));
    for (int i = 0; i < X.size(k); ++i) full[k][i] = srch.image(k, i);
  }
  // Verify the family before returning it.
  SSetMap m;
  m.source = std::make_shared<const TruncatedSSet>(X);
  m.target = std::make_shared<const TruncatedSSet>(Y);
  m.assign = full;
  if (!validate_ssetmap(m).ok())
    throw std::logic_error("sset_iso: constructed family fails verification");
  for (int k = 0; k <= X.cap; ++k) {
    std::vector<bool> seen(Y.size(k), false);
    for (int i = 0; i < X.size(k); ++i) {
      if (full[k][i] < 0 || seen[full[k][i]])
        throw std::logic_error("sset_iso: family not bijective");
      seen[full[k][i]] = true;
    }
  }
  return full;
}

// ------------------------------------------------------------------- markings

MarkedSSet mark_sharp(SSetPtr X) {
  MarkedSSet M;
  M.base = std::move(X);
  for (int i = 0; i < M.base->size(1); ++i) M.marked.push_back(i);
  return M;
}

MarkedSSet mark_natural(SSetPtr X) {
  if (X->cap < 2) throw InputError("mark_natural: cap must be at least 2");
  HornReport hr = horn_check(*X, HornMode::Inner, 2);
  if (!hr.ok())
    throw InputError(
        "mark_natural: complex is not inner-fillable up to dimension 2");
  const TruncatedSSet& B = *X;
  MarkedSSet M;
  M.base = X;
  for (int e = 0; e < B.size(1); ++e) {
    int src = B.d(1, 1, e), tgt = B.d(1, 0, e);
    bool left = false, right = false;
    for (int t = 0; t < B.size(2) && !(left && right); ++t) {
      // g.e ~ id_src: triangle with d_2 = e, d_1 degenerate at src.
      if (!left && B.d(2, 2, t) == e && B.d(2, 1, t) == B.s(0, 0, src))
        left = true;
      // e.g' ~ id_tgt: triangle with d_0 = e, d_1 degenerate at tgt.
      if (!right && B.d(2, 0, t) == e && B.d(2, 1, t) == B.s(0, 0, tgt))
        right = true;
    }
    if (left && right) M.marked.push_back(e);
  }
  return M;
}

MarkedSSet opposite_marked(const MarkedSSet& M) {
  MarkedSSet N;
  N.base = share(opposite_sset(*M.base));
  N.marked = M.marked;  // edges of the opposite are the same cells
  return N;
}

// ----------------------------------------------------------------------- maps

SSetMap identity_map(SSetPtr X) {
  SSetMap m;
  m.source = X;
  m.target = X;
  m.assign.resize(X->cap + 1);
  for (int k = 0; k <= X->cap; ++k) {
    m.assign[k].resize(X->size(k));
    for (int i = 0; i < X->size(k); ++i) m.assign[k][i] = i;
  }
  return m;
}

SSetMap compose(const SSetMap& g, const SSetMap& f) {
  if (!data_equal(*f.target, *g.source))
    throw InputError("compose: middle objects differ");
  SSetMap h;
  h.source = f.source;
  h.target = g.target;
  int top = std::min(f.source->cap, g.target->cap);
  h.assign.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    h.assign[k].resize(f.source->size(k));
    for (int i = 0; i < f.source->size(k); ++i)
      h.assign[k][i] = g.at(k, f.at(k, i));
  }
  return h;
}

bool data_equal(const TruncatedSSet& X, const TruncatedSSet& Y) {
  if (&X == &Y) return true;
  if (X.cap != Y.cap) return false;
  for (int k = 0; k <= X.cap; ++k) {
    if (X.size(k) != Y.size(k)) return false;
    for (int i = 0; i < X.size(k); ++i)
      if (Y.find(k, X.id(k, i)) < 0) return false;
  }
  auto xy = [&](int k, int i) { return Y.find(k, X.id(k, i)); };
  for (int k = 1; k <= X.cap; ++k)
    for (int i = 0; i <= k; ++i)
      for (int c = 0; c < X.size(k); ++c)
        if (xy(k - 1, X.d(k, i, c)) != Y.d(k, i, xy(k, c))) return false;
  for (int k = 0; k < X.cap; ++k)
    for (int i = 0; i <= k; ++i)
      for (int c = 0; c < X.size(k); ++c)
        if (xy(k + 1, X.s(k, i, c)) != Y.s(k, i, xy(k, c))) return false;
  return true;
}

// ---------------------------------------------------------------- subcomplexes

namespace {

TruncatedSSet restrict_to(const TruncatedSSet& X,
                          const std::vector<std::vector<bool>>& keep) {
  TruncatedSSet S;
  S.cap = X.cap;
  S.cells.resize(X.cap + 1);
  S.face.resize(X.cap + 1);
  S.degen.resize(X.cap + 1);
  std::vector<std::vector<int>> newidx(X.cap + 1);
  for (int k = 0; k <= X.cap; ++k) {
    newidx[k].assign(X.size(k), -1);
    for (int i = 0; i < X.size(k); ++i)
      if (keep[k][i]) {
        newidx[k][i] = static_cast<int>(S.cells[k].size());
        S.cells[k].push_back(X.id(k, i));
      }
  }
  for (int k = 1; k <= X.cap; ++k) {
    S.face[k].assign(k + 1, {});
    for (int i = 0; i <= k; ++i)
      for (int c = 0; c < X.size(k); ++c)
        if (keep[k][c]) {
          int img = newidx[k - 1][X.d(k, i, c)];
          if (img < 0)
            throw std::logic_error("restrict_to: not closed under faces");
          S.face[k][i].push_back(img);
        }
  }
  for (int k = 0; k < X.cap; ++k) {
    S.degen[k].assign(k + 1, {});
    for (int i = 0; i <= k; ++i)
      for (int c = 0; c < X.size(k); ++c)
        if (keep[k][c]) {
          int img = newidx[k + 1][X.s(k, i, c)];
          if (img < 0)
            throw std::logic_error(
                "restrict_to: not closed under degeneracies");
          S.degen[k][i].push_back(img);
        }
  }
  S.rebuild_index();
  return S;
}

}  // namespace

TruncatedSSet span_subcomplex(const TruncatedSSet& X,
                              const std::vector<std::pair<int, int>>& seeds) {
  std::vector<std::vector<bool>> keep(X.cap + 1);
  for (int k = 0; k <= X.cap; ++k) keep[k].assign(X.size(k), false);
  std::vector<std::pair<int, int>> todo = seeds;
  while (!todo.empty()) {
    auto [k, i] = todo.back();
    todo.pop_back();
    if (keep[k][i]) continue;
    keep[k][i] = true;
    if (k > 0)
      for (int q = 0; q <= k; ++q) todo.push_back({k - 1, X.d(k, q, i)});
    if (k < X.cap)
      for (int q = 0; q <= k; ++q) todo.push_back({k + 1, X.s(k, q, i)});
  }
  // Degeneracies of kept cells must be kept; iterate to a fixed point.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k < X.cap; ++k)
      for (int i = 0; i < X.size(k); ++i)
        if (keep[k][i])
          for (int q = 0; q <= k; ++q)
            if (!keep[k + 1][X.s(k, q, i)]) {
              keep[k + 1][X.s(k, q, i)] = true;
              changed = true;
            }
  }
  return restrict_to(X, keep);
}

TruncatedSSet delete_cells_closed(const TruncatedSSet& X,
                                  const std::vector<std::pair<int, int>>& del) {
  std::vector<std::vector<bool>> dead(X.cap + 1);
  for (int k = 0; k <= X.cap; ++k) dead[k].assign(X.size(k), false);
  for (auto [k, i] : del) dead[k][i] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 1; k <= X.cap; ++k)
      for (int i = 0; i < X.size(k); ++i)
        if (!dead[k][i])
          for (int q = 0; q <= k; ++q)
            if (dead[k - 1][X.d(k, q, i)]) {
              dead[k][i] = true;
              changed = true;
              break;
            }
  }
  std::vector<std::vector<bool>> keep(X.cap + 1);
  for (int k = 0; k <= X.cap; ++k) {
    keep[k].assign(X.size(k), true);
    for (int i = 0; i < X.size(k); ++i) keep[k][i] = !dead[k][i];
  }
  return restrict_to(X, keep);
}

TruncatedSSet subcomplex_where(const TruncatedSSet& X,
                               const std::function<bool(int, int)>& keep) {
  std::vector<std::vector<bool>> flags(X.cap + 1);
  for (int k = 0; k <= X.cap; ++k) {
    flags[k].assign(X.size(k), false);
    for (int i = 0; i < X.size(k); ++i) flags[k][i] = keep(k, i);
  }
  return restrict_to(X, flags);
}

TruncatedSSet simplex_horn(int n, int k, int cap) {
  if (n < 1 || k < 0 || k > n) throw InputError("simplex_horn: bad (n,k)");
  TruncatedSSet full = standard_simplex(n, std::max(cap, n));
  std::vector<std::pair<int, int>> seeds;
  // Seed with every codimension-1 face except the k-th.
  std::vector<int> top(n + 1);
  for (int i = 0; i <= n; ++i) top[i] = i;
  int top_idx = full.find(n, monotone_id(top));
  for (int i = 0; i <= n; ++i)
    if (i != k) seeds.push_back({n - 1, full.d(n, i, top_idx)});
  TruncatedSSet horn = span_subcomplex(full, seeds);
  if (horn.cap == cap) return horn;
  // Retruncate to the requested cap.
  TruncatedSSet out;
  out.cap = cap;
  out.cells.assign(horn.cells.begin(), horn.cells.begin() + cap + 1);
  out.face.assign(horn.face.begin(), horn.face.begin() + cap + 1);
  out.degen.assign(horn.degen.begin(), horn.degen.begin() + cap + 1);
  out.degen[cap].clear();
  out.rebuild_index();
  return out;
}

}  // namespace simpcat
