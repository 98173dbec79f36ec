#include "tricirc/generators.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "tricirc/connectivity.hpp"

namespace tricirc {

int Rng::uniform(int lo, int hi) {
  std::uint64_t width = static_cast<std::uint64_t>(hi - lo) + 1;
  std::uint64_t mask = width - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  for (;;) {
    std::uint64_t x = gen_() & mask;
    if (x < width) return lo + static_cast<int>(x);
  }
}

Triangulation double_wheel(int r) {
  if (r < 4) throw TooSmall("double wheel needs cycle length >= 4, got " + std::to_string(r));
  const int a = r, b = r + 1;
  std::vector<std::vector<int>> rot(r + 2);
  for (int i = 0; i < r; ++i) {
    int next = (i + 1) % r, prev = (i + r - 1) % r;
    rot[i] = {next, a, prev, b};
  }
  for (int i = 0; i < r; ++i) rot[a].push_back(i);
  for (int i = r - 1; i >= 0; --i) rot[b].push_back(i);
  return Triangulation(Embedding::from_rotation(r + 2, std::move(rot)));
}

Triangulation stack_vertex(const Triangulation& t, std::array<int, 3> face) {
  const Embedding& e = t.emb();
  int fid = e.face_with_vertices(face);
  if (fid < 0)
    throw NotAFace("{" + std::to_string(face[0]) + "," + std::to_string(face[1]) + "," +
                   std::to_string(face[2]) + "} is not a face");
  const Face& f = e.faces()[fid];  // (a,b,c) in trace order
  const int n = e.vertex_count(), x = n;

  std::vector<std::vector<int>> rot = e.rotation();
  rot.emplace_back(f.begin(), f.end());
  // At each face vertex v the face-predecessor p sits right after the
  // face-successor in rot[v]; the new vertex goes between them.
  for (int i = 0; i < 3; ++i) {
    int p = f[(i + 2) % 3], v = f[i];
    int at = e.rot_index(v, p);
    rot[v].insert(rot[v].begin() + at, x);
  }
  return Triangulation(Embedding::from_rotation(n + 1, std::move(rot)));
}

Triangulation extremal_expand(const Triangulation& g4) {
  if (g4.vertex_count() < 6)
    throw TooSmall("extremal expansion needs n' >= 6, got " + std::to_string(g4.vertex_count()));
  if (!is_four_connected(g4)) throw NotFourConnected("base graph is not 4-connected");
  std::vector<std::array<int, 3>> faces;
  faces.reserve(g4.faces().size());
  for (const Face& f : g4.faces()) faces.push_back({f[0], f[1], f[2]});
  Triangulation cur = g4;
  // Stacked faces are pairwise distinct faces of the base, so each is
  // still a face when its turn comes.
  for (const auto& f : faces) cur = stack_vertex(cur, f);
  return cur;
}

bool flip_edge(const Triangulation& t, int u, int v, Triangulation* out) {
  const Embedding& e = t.emb();
  if (!e.adjacent(u, v)) throw Error("BadArgument", "flip of a non-edge");
  auto pred = [&](int at, int of) {
    int i = e.rot_index(at, of);
    int d = e.degree(at);
    return e.neighbors(at)[(i - 1 + d) % d];
  };
  int a = pred(v, u);  // face (u,v,a)
  int b = pred(u, v);  // face (v,u,b)
  if (a == b || e.adjacent(a, b)) return false;

  std::vector<std::vector<int>> rot = e.rotation();
  auto erase_from = [&](int at, int x) {
    auto& l = rot[at];
    l.erase(std::find(l.begin(), l.end(), x));
  };
  auto insert_after = [&](int at, int x, int after) {
    auto& l = rot[at];
    auto it = std::find(l.begin(), l.end(), after);
    l.insert(it + 1, x);
  };
  erase_from(u, v);
  erase_from(v, u);
  insert_after(a, b, u);  // rot[a]: ... u, b, v ...
  insert_after(b, a, v);  // rot[b]: ... v, a, u ...
  *out = Triangulation(Embedding::from_rotation(e.vertex_count(), std::move(rot)));
  return true;
}

namespace {

bool has_separating_triangle(const Triangulation& t) {
  const Embedding& g = t.emb();
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u)) {
      if (v < u) continue;
      for (int w : g.neighbors(u))
        if (w > v && g.adjacent(v, w) && !g.is_face({u, v, w})) return true;
    }
  return false;
}

std::vector<std::pair<int, int>> edge_list(const Embedding& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) edges.emplace_back(u, v);
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

Triangulation random_4connected_triangulation(int n, std::uint64_t seed,
                                              const GeneratorConfig& cfg) {
  if (n < 6) throw TooSmall("need n >= 6, got " + std::to_string(n));
  Rng rng(seed);
  Triangulation cur = double_wheel(n - 2);
  const int flips = cfg.flips_per_vertex * n;
  for (int i = 0; i < flips; ++i) {
    auto edges = edge_list(cur.emb());
    auto [u, v] = edges[rng.uniform(0, static_cast<int>(edges.size()) - 1)];
    Triangulation next = cur;
    if (!flip_edge(cur, u, v, &next)) continue;
    if (has_separating_triangle(next)) continue;
    cur = std::move(next);
  }
  return cur;
}

Triangulation random_essentially_4connected_triangulation(
    int n, std::uint64_t seed, const GeneratorConfig& cfg) {
  if (n < 6) throw TooSmall("need n >= 6, got " + std::to_string(n));
  Rng rng(seed);
  // n = n' + s with a 4-connected base on n' >= 6 vertices and s stacked
  // vertices, one per face, s <= 2n' - 4.
  std::vector<int> bases;
  for (int np = 6; np <= n; ++np)
    if (n - np <= 2 * np - 4) bases.push_back(np);
  if (bases.empty()) throw TooSmall("no valid base size for n = " + std::to_string(n));

  for (int attempt = 0; attempt < cfg.retry_budget; ++attempt) {
    int np = bases[rng.uniform(0, static_cast<int>(bases.size()) - 1)];
    int s = n - np;
    Triangulation base = random_4connected_triangulation(np, rng.next(), cfg);

    std::vector<int> face_ids(base.faces().size());
    for (int i = 0; i < static_cast<int>(face_ids.size()); ++i) face_ids[i] = i;
    for (int i = 0; i < s; ++i) {  // partial Fisher-Yates
      int j = rng.uniform(i, static_cast<int>(face_ids.size()) - 1);
      std::swap(face_ids[i], face_ids[j]);
    }
    std::vector<std::array<int, 3>> picked;
    for (int i = 0; i < s; ++i) {
      const Face& f = base.faces()[face_ids[i]];
      picked.push_back({f[0], f[1], f[2]});
    }
    Triangulation cur = base;
    for (const auto& f : picked) cur = stack_vertex(cur, f);
    if (is_essentially_4_connected(cur)) return cur;
  }
  throw Unsatisfiable("no essentially 4-connected instance on n = " + std::to_string(n) +
                      " vertices within " + std::to_string(cfg.retry_budget) + " attempts");
}

}  // namespace tricirc
