#include "tricirc/cycles.hpp"

#include <algorithm>
#include <string>

namespace tricirc {

namespace {

using Clock = std::chrono::steady_clock;

std::string vee(int v) { return std::to_string(v); }

// Depth-first path extension over cycles anchored at their minimum
// vertex, with a reachability bound. Anchors ascend, neighbors ascend,
// and only strict improvements are kept, so witnesses are deterministic.
//
// Good mode adds: vertices below the anchor must be permanently outside
// (degree 3, independent); unvisited vertices that become unreachable are
// permanently outside too and are checked the same way; a closing path
// is accepted only if the full outside set is independent with all
// degrees 3.
struct CycleSearch {
  const Embedding& g;
  int n;
  bool good_mode;
  Clock::time_point deadline;

  std::vector<std::vector<int>> adj;  // sorted ascending
  std::vector<int> path;
  std::vector<char> on_path;
  int anchor = 0;

  int best_len = 0;
  std::vector<int> best;

  int want = 0;  // enumeration: exact target length (0 = optimize)
  std::vector<std::vector<int>>* sink = nullptr;

  std::uint64_t nodes = 0;
  bool timed_out = false;

  std::vector<int> reach_mark;
  std::vector<int> bfs_stack;
  int epoch = 0;

  CycleSearch(const Embedding& graph, bool good, Clock::time_point dl)
      : g(graph), n(graph.vertex_count()), good_mode(good), deadline(dl) {
    adj.resize(n);
    for (int v = 0; v < n; ++v) {
      adj[v] = g.neighbors(v);
      std::sort(adj[v].begin(), adj[v].end());
    }
    on_path.assign(n, 0);
    reach_mark.assign(n, 0);
  }

  void run() {
    if (Clock::now() > deadline) {
      timed_out = true;
      return;
    }
    for (anchor = 0; anchor < n; ++anchor) {
      if (good_mode && anchor > 0) {
        // One more vertex joins the permanently-outside prefix.
        int x = anchor - 1;
        if (g.degree(x) != 3) break;
        bool low_neighbor = false;
        for (int u : adj[x])
          if (u < x) low_neighbor = true;
        if (low_neighbor) break;
      }
      path.assign(1, anchor);
      on_path[anchor] = 1;
      dfs();
      on_path[anchor] = 0;
      if (timed_out) return;
    }
  }

  bool budget_ok() {
    if ((++nodes & 0xFFFu) == 0 && Clock::now() > deadline) timed_out = true;
    return !timed_out;
  }

  bool outside_good() const {
    for (int v = 0; v < n; ++v) {
      if (on_path[v]) continue;
      if (g.degree(v) != 3) return false;
      for (int w : adj[v])
        if (!on_path[w]) return false;
    }
    return true;
  }

  void dfs() {
    if (!budget_ok()) return;
    const int u = path.back();
    const int len = static_cast<int>(path.size());

    if (len >= 3 && g.adjacent(u, anchor) && path[1] < u) {
      if (want > 0) {
        if (len == want && (!good_mode || outside_good())) sink->push_back(path);
      } else if (len > best_len && (!good_mode || outside_good())) {
        best_len = len;
        best = path;
      }
    }
    if (want > 0 && len >= want) return;

    // Vertices still reachable from u through unvisited ids > anchor.
    ++epoch;
    int reach_cnt = 0;
    bool can_return = false;
    bfs_stack.assign(1, u);
    while (!bfs_stack.empty()) {
      int v = bfs_stack.back();
      bfs_stack.pop_back();
      for (int w : adj[v]) {
        if (w <= anchor || on_path[w] || reach_mark[w] == epoch) continue;
        reach_mark[w] = epoch;
        ++reach_cnt;
        if (g.adjacent(w, anchor)) can_return = true;
        bfs_stack.push_back(w);
      }
    }

    const int bound = len + reach_cnt;
    if (want > 0) {
      if (bound < want) return;
    } else if (bound <= best_len) {
      return;
    }
    if (!can_return) return;

    if (good_mode) {
      // Unreachable unvisited vertices are outside for good; check now.
      for (int v = anchor + 1; v < n; ++v) {
        if (on_path[v] || reach_mark[v] == epoch) continue;
        if (g.degree(v) != 3) return;
        for (int w : adj[v])
          if (w != anchor && !on_path[w] && (w < anchor || reach_mark[w] != epoch)) return;
      }
    }

    for (int w : adj[u]) {
      if (w <= anchor || on_path[w]) continue;
      path.push_back(w);
      on_path[w] = 1;
      dfs();
      path.pop_back();
      on_path[w] = 0;
      if (timed_out) return;
    }
  }
};

void check_cycle_shape(const Embedding& g, const std::vector<int>& cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 3) throw NotACycle("cycle needs at least 3 vertices, got " + vee(k));
  std::vector<char> seen(g.vertex_count(), 0);
  for (int v : cycle) {
    if (v < 0 || v >= g.vertex_count()) throw NotACycle("vertex " + vee(v) + " out of range");
    if (seen[v]) throw NotACycle("vertex " + vee(v) + " repeats");
    seen[v] = 1;
  }
  for (int i = 0; i < k; ++i) {
    int x = cycle[i], y = cycle[(i + 1) % k];
    if (!g.adjacent(x, y)) throw NotACycle("consecutive vertices " + vee(x) + "," + vee(y) + " are not adjacent");
  }
}

std::vector<int> outside_of(const Embedding& g, const std::vector<int>& cycle) {
  std::vector<char> on(g.vertex_count(), 0);
  for (int v : cycle) on[v] = 1;
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!on[v]) out.push_back(v);
  return out;
}

}  // namespace

LongestCycle circumference(const Embedding& g, const SearchLimits& lim) {
  if (g.edge_count() < g.vertex_count())
    throw Acyclic("connected graph with m < n is a tree");
  CycleSearch s(g, /*good=*/false, Clock::now() + lim.budget);
  s.run();
  if (s.timed_out) throw Timeout("circumference search exceeded its time budget");
  return {s.best_len, std::move(s.best)};
}

bool is_hamiltonian(const Embedding& g, const SearchLimits& lim) {
  if (g.edge_count() < g.vertex_count()) return false;
  return circumference(g, lim).length == g.vertex_count();
}

bool is_good_cycle(const Embedding& g, const std::vector<int>& cycle) {
  check_cycle_shape(g, cycle);
  for (int v : outside_of(g, cycle)) {
    if (g.degree(v) != 3) return false;
    std::vector<char> on(g.vertex_count(), 0);
    for (int c : cycle) on[c] = 1;
    for (int w : g.neighbors(v))
      if (!on[w]) return false;
  }
  return true;
}

GoodCycle make_good_cycle(const Embedding& g, std::vector<int> verts) {
  if (!is_good_cycle(g, verts))
    throw Error("NotGoodCycle", "cycle is not outer independent with degree-3 outside");
  GoodCycle c{std::move(verts), {}};
  c.outside = outside_of(g, c.verts);
  return c;
}

std::vector<ExtendableEdge> extendable_edges(const Embedding& g, const GoodCycle& c) {
  std::vector<char> outside(g.vertex_count(), 0);
  for (int v : c.outside) outside[v] = 1;
  std::vector<ExtendableEdge> out;
  const int k = c.length();
  for (int i = 0; i < k; ++i) {
    int x = c.verts[i], y = c.verts[(i + 1) % k];
    int z_best = -1;
    for (int z : g.neighbors(x))
      if (outside[z] && g.adjacent(z, y) && (z_best < 0 || z < z_best)) z_best = z;
    if (z_best >= 0) out.push_back({x, y, z_best});
  }
  return out;
}

GoodCycle extend(const Embedding& g, const GoodCycle& c, const ExtendableEdge& e) {
  const int k = c.length();
  int at = -1;
  for (int i = 0; i < k; ++i) {
    if (c.verts[i] == e.x && c.verts[(i + 1) % k] == e.y) at = i;
    if (c.verts[i] == e.y && c.verts[(i + 1) % k] == e.x) at = i;
  }
  bool z_outside = std::binary_search(c.outside.begin(), c.outside.end(), e.z);
  if (at < 0 || !z_outside || !g.adjacent(e.x, e.z) || !g.adjacent(e.z, e.y))
    throw NotExtendable("edge " + vee(e.x) + "-" + vee(e.y) + " with witness " + vee(e.z) +
                        " is not extendable on this cycle");
  std::vector<int> verts = c.verts;
  verts.insert(verts.begin() + at + 1, e.z);
  return make_good_cycle(g, std::move(verts));
}

GoodCycle longest_good_cycle(const Embedding& g, const SearchLimits& lim) {
  CycleSearch s(g, /*good=*/true, Clock::now() + lim.budget);
  s.run();
  if (s.timed_out) throw Timeout("good-cycle search exceeded its time budget");
  if (s.best_len == 0)
    throw NoGoodCycle("graph on " + vee(g.vertex_count()) +
                      " vertices has no good cycle; for an essentially 4-connected "
                      "planar graph on n >= 11 vertices that refutes a proven guarantee");
  return make_good_cycle(g, std::move(s.best));
}

std::vector<GoodCycle> all_longest_good_cycles(const Embedding& g, const SearchLimits& lim) {
  Clock::time_point dl = Clock::now() + lim.budget;
  CycleSearch probe(g, /*good=*/true, dl);
  probe.run();
  if (probe.timed_out) throw Timeout("good-cycle search exceeded its time budget");
  if (probe.best_len == 0) return {};

  CycleSearch enumer(g, /*good=*/true, dl);
  std::vector<std::vector<int>> raw;
  enumer.want = probe.best_len;
  enumer.sink = &raw;
  enumer.run();
  if (enumer.timed_out) throw Timeout("good-cycle enumeration exceeded its time budget");
  std::vector<GoodCycle> out;
  out.reserve(raw.size());
  for (auto& verts : raw) out.push_back(make_good_cycle(g, std::move(verts)));
  return out;
}

GoodCycle reroute(const Embedding& g, const GoodCycle& c, const RerouteContext& ctx) {
  const int k = c.length();
  const int p = static_cast<int>(ctx.arc.size());
  const int r = p - 2;
  if (r < 2) throw ConfigMismatch("arc of " + vee(p) + " vertices is too short");

  std::vector<int> pos(g.vertex_count(), -1);
  for (int i = 0; i < k; ++i) pos[c.verts[i]] = i;
  for (int v : ctx.arc)
    if (v < 0 || v >= g.vertex_count() || pos[v] < 0)
      throw ConfigMismatch("arc vertex " + vee(v) + " is not on the cycle");

  // The arc must be contiguous on the cycle, forward or backward.
  int dir = 0;
  {
    int step = pos[ctx.arc[1]] - pos[ctx.arc[0]];
    if ((step + k) % k == 1) dir = 1;
    else if ((step + k) % k == k - 1) dir = -1;
    else throw ConfigMismatch("arc is not contiguous on the cycle");
    for (int i = 0; i + 1 < p; ++i) {
      int want_pos = (pos[ctx.arc[0]] + dir * (i + 1) % k + k) % k;
      if (pos[ctx.arc[i + 1]] != want_pos)
        throw ConfigMismatch("arc is not contiguous on the cycle");
    }
  }

  const auto& a = ctx.arc;
  std::vector<int> repl;
  if (ctx.kind == RerouteContext::Kind::rim_at_apex) {
    // (v0, v1, ..., v_{r+1}) -> (v0, v2, ..., v_r, v1, v_{r+1})
    repl.push_back(a[0]);
    for (int i = 2; i <= p - 2; ++i) repl.push_back(a[i]);
    repl.push_back(a[1]);
    repl.push_back(a[p - 1]);
  } else {
    // a[t+1] = v_t for t = -1..r
    if (ctx.s < 3 || ctx.s > r)
      throw ConfigMismatch("break index s=" + vee(ctx.s) + " out of range 3.." + vee(r));
    if (ctx.s == r) {
      // (v_{-1}, v2, ..., v_{r-1}, v1, v0, v_r)
      repl.push_back(a[0]);
      for (int t = 2; t <= r - 1; ++t) repl.push_back(a[t + 1]);
      repl.push_back(a[2]);
      repl.push_back(a[1]);
      repl.push_back(a[r + 1]);
    } else {
      // (v_{-1}, v2, v1, v3, ..., v_{r-1}, v0, v_r)
      repl.push_back(a[0]);
      repl.push_back(a[3]);
      repl.push_back(a[2]);
      for (int t = 3; t <= r - 1; ++t) repl.push_back(a[t + 1]);
      repl.push_back(a[1]);
      repl.push_back(a[r + 1]);
    }
  }

  for (int i = 0; i + 1 < static_cast<int>(repl.size()); ++i)
    if (!g.adjacent(repl[i], repl[i + 1]))
      throw ConfigMismatch("required edge " + vee(repl[i]) + "-" + vee(repl[i + 1]) +
                           " is absent");

  // Replacement keeps the arc endpoints, so splice it onto the rest of
  // the cycle walked in arc direction.
  std::vector<int> verts = repl;
  int at = pos[a[p - 1]];
  for (int step = 1; step < k - p + 1; ++step)
    verts.push_back(c.verts[((at + dir * step) % k + k) % k]);
  return make_good_cycle(g, std::move(verts));
}

}  // namespace tricirc
