#include "tricirc/connectivity.hpp"

#include <algorithm>
#include <string>

namespace tricirc {

namespace {

// Components of G - banned, as sorted vertex lists (sorted by minimum).
std::vector<std::vector<int>> components_without(const Embedding& g,
                                                 const std::vector<char>& banned) {
  const int n = g.vertex_count();
  std::vector<char> seen(banned.begin(), banned.end());
  std::vector<std::vector<int>> comps;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    stack.assign(1, s);
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u : g.neighbors(v))
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool disconnects(const Embedding& g, const std::vector<char>& banned) {
  const int n = g.vertex_count();
  int start = -1, alive = 0;
  for (int v = 0; v < n; ++v)
    if (!banned[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive <= 1) return false;
  std::vector<char> seen(banned.begin(), banned.end());
  std::vector<int> stack{start};
  seen[start] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v))
      if (!seen[u]) {
        seen[u] = 1;
        ++cnt;
        stack.push_back(u);
      }
  }
  return cnt != alive;
}

CutSet make_cut(const Embedding& g, std::array<int, 3> s) {
  std::sort(s.begin(), s.end());
  std::vector<char> banned(g.vertex_count(), 0);
  for (int v : s) banned[v] = 1;
  CutSet cut;
  cut.vertices = s;
  cut.components = components_without(g, banned);
  int big = 0;
  for (const auto& c : cut.components)
    if (c.size() >= 2) ++big;
  cut.trivial = big <= 1;
  return cut;
}

}  // namespace

bool connectivity_at_least(const Embedding& g, int k) {
  if (k < 1 || k > 5) throw Error("BadArgument", "k must be in 1..5, got " + std::to_string(k));
  const int n = g.vertex_count();
  if (n <= k) return false;
  std::vector<char> banned(n, 0);
  // sizes 0..k-1; the embedding is connected by construction, so size 0
  // never disconnects, but the loop keeps the contract self-contained.
  std::vector<int> pick;
  auto rec = [&](auto&& self, int start, int left) -> bool {
    if (left == 0) return disconnects(g, banned);
    for (int v = start; v < n; ++v) {
      banned[v] = 1;
      if (self(self, v + 1, left - 1)) return true;
      banned[v] = 0;
    }
    return false;
  };
  for (int size = 0; size < k; ++size)
    if (rec(rec, 0, size)) return false;
  return true;
}

std::vector<CutSet> three_cuts(const Embedding& g) {
  if (!connectivity_at_least(g, 3))
    throw NotThreeConnected("input is not 3-connected");
  const int n = g.vertex_count();
  std::vector<CutSet> cuts;
  std::vector<char> banned(n, 0);
  for (int a = 0; a < n; ++a) {
    banned[a] = 1;
    for (int b = a + 1; b < n; ++b) {
      banned[b] = 1;
      for (int c = b + 1; c < n; ++c) {
        banned[c] = 1;
        if (disconnects(g, banned)) {
          CutSet cut = make_cut(g, {a, b, c});
          if (cut.components.size() != 2)
            throw Error("Internal",
                        "3-cut of a 3-connected planar graph split into " +
                            std::to_string(cut.components.size()) + " components");
          cuts.push_back(std::move(cut));
        }
        banned[c] = 0;
      }
      banned[b] = 0;
    }
    banned[a] = 0;
  }
  return cuts;
}

std::vector<CutSet> separating_triangles(const Triangulation& t) {
  const Embedding& g = t.emb();
  const int n = g.vertex_count();
  std::vector<CutSet> cuts;
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) {
      if (v < u) continue;
      for (int w : g.neighbors(u)) {
        if (w < v || !g.adjacent(v, w)) continue;
        if (g.is_face({u, v, w})) continue;
        cuts.push_back(make_cut(g, {u, v, w}));
      }
    }
  }
  return cuts;
}

bool is_essentially_4_connected(const Embedding& g) {
  auto cuts = three_cuts(g);
  bool all_trivial = true;
  for (const CutSet& cut : cuts) {
    // Cross-check the degree-3-neighborhood characterization, valid for
    // 3-connected planar inputs.
    bool is_neighborhood = false;
    for (const auto& comp : cut.components) {
      if (comp.size() != 1) continue;
      int x = comp[0];
      if (g.degree(x) != 3) continue;
      std::array<int, 3> nb{g.neighbors(x)[0], g.neighbors(x)[1], g.neighbors(x)[2]};
      std::sort(nb.begin(), nb.end());
      if (nb == cut.vertices) is_neighborhood = true;
    }
    if (cut.trivial != is_neighborhood)
      throw Error("Internal",
                  "trivial-cut and degree-3-neighborhood tests disagree on cut {" +
                      std::to_string(cut.vertices[0]) + "," + std::to_string(cut.vertices[1]) +
                      "," + std::to_string(cut.vertices[2]) + "}");
    if (!cut.trivial) all_trivial = false;
  }
  return all_trivial;
}

bool is_three_connected(const Triangulation& t) {
  auto& cache = t.conn_cache().three;
  int c = cache.load();
  if (c < 0) {
    c = connectivity_at_least(t.emb(), 3) ? 1 : 0;
    cache.store(c);
  }
  return c == 1;
}

bool is_four_connected(const Triangulation& t) {
  auto& cache = t.conn_cache().four;
  int c = cache.load();
  if (c < 0) {
    c = connectivity_at_least(t.emb(), 4) ? 1 : 0;
    cache.store(c);
  }
  return c == 1;
}

bool is_essentially_4_connected(const Triangulation& t) {
  auto& cache = t.conn_cache().essentially_four;
  int c = cache.load();
  if (c < 0) {
    if (!is_three_connected(t)) throw NotThreeConnected("triangulation is not 3-connected");
    // For a triangulation with n >= 5 the 3-cuts are exactly the
    // separating triangles.
    bool ok = true;
    if (t.vertex_count() >= 5) {
      for (const CutSet& cut : separating_triangles(t))
        if (!cut.trivial) {
          ok = false;
          break;
        }
    } else {
      ok = is_essentially_4_connected(t.emb());
    }
    c = ok ? 1 : 0;
    cache.store(c);
  }
  return c == 1;
}

}  // namespace tricirc
