#include "tricirc/discharging.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace tricirc {

namespace {

std::string vee(int v) { return std::to_string(v); }

std::string face_str(const SidePartition& sp, int f) {
  const Face& fc = sp.h.faces()[f];
  return "face " + vee(f) + " [" + vee(fc[0]) + "," + vee(fc[1]) + "," + vee(fc[2]) + "]";
}

}  // namespace

int SidePartition::edge_index(int x, int y) const {
  const int kk = k();
  int px = pos[x], py = pos[y];
  if (px < 0 || py < 0) return -1;
  if ((px + 1) % kk == py) return px;
  if ((py + 1) % kk == px) return py;
  return -1;
}

std::vector<int> SidePartition::face_cycle_edges(int face) const {
  const Face& f = h.faces()[face];
  std::vector<int> out;
  for (int i = 0; i < 3; ++i) {
    int t = edge_index(f[i], f[(i + 1) % 3]);
    if (t >= 0) out.push_back(t);
  }
  return out;
}

int SidePartition::across_chord(int face, int x, int y) const {
  int fa = h.emb().face_left_of(x, y);
  int fb = h.emb().face_left_of(y, x);
  if (fa == face) return fb;
  if (fb == face) return fa;
  throw Error("BadArgument", "edge " + vee(x) + "-" + vee(y) + " is not on " + face_str(*this, face));
}

SidePartition build_side_partition(const Triangulation& g, const GoodCycle& c) {
  if (!is_good_cycle(g.emb(), c.verts))
    throw Error("BadArgument", "cycle handed to build_side_partition is not good");

  VertexDeletion del = delete_independent_deg3(g, c.outside);
  SidePartition sp{std::move(del.graph),
                   std::move(del.old_to_new),
                   std::move(del.new_to_old),
                   {},
                   {},
                   {},
                   {},
                   {},
                   {},
                   {}};
  sp.face_empty.assign(del.face_nonempty.size(), false);
  for (size_t i = 0; i < del.face_nonempty.size(); ++i)
    sp.face_empty[i] = !del.face_nonempty[i];

  const Embedding& h = sp.h.emb();
  const int k = c.length();
  sp.cycle.reserve(k);
  for (int v : c.verts) sp.cycle.push_back(sp.old_to_new[v]);
  sp.pos.assign(h.vertex_count(), -1);
  for (int t = 0; t < k; ++t) sp.pos[sp.cycle[t]] = t;

  // Side assignment: flood the face adjacency across chords from the two
  // faces of the cycle edge (c0, c1); chords never cross C, so each side
  // of the sphere is reached from exactly one seed.
  const int nf = static_cast<int>(h.faces().size());
  sp.face_side.assign(nf, -1);
  int seed0 = h.face_left_of(sp.cycle[0], sp.cycle[1]);
  int seed1 = h.face_left_of(sp.cycle[1], sp.cycle[0]);
  if (seed0 == seed1) throw ChordConflict("both sides of a cycle edge are the same face");
  for (int side = 0; side < 2; ++side) {
    std::vector<int> stack{side == 0 ? seed0 : seed1};
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      if (sp.face_side[f] == side) continue;
      if (sp.face_side[f] != -1)
        throw ChordConflict(face_str(sp, f) + " reachable from both sides of the cycle");
      sp.face_side[f] = side;
      const Face& fc = h.faces()[f];
      for (int i = 0; i < 3; ++i) {
        int x = fc[i], y = fc[(i + 1) % 3];
        if (sp.edge_index(x, y) >= 0) continue;  // crossing C switches sides
        stack.push_back(sp.across_chord(f, x, y));
      }
    }
  }
  for (int f = 0; f < nf; ++f)
    if (sp.face_side[f] < 0)
      throw ChordConflict(face_str(sp, f) + " not reached from either side of the cycle");

  // j-classes; a 3-face would mean C itself bounds a face.
  sp.face_j.assign(nf, 0);
  for (int f = 0; f < nf; ++f) {
    sp.face_j[f] = static_cast<int>(sp.face_cycle_edges(f).size());
    if (sp.face_j[f] == 3) throw ThreeFaceFound(face_str(sp, f) + " has all three edges on the cycle");
  }

  // Cross-validation: interleaving chords must land on opposite sides.
  {
    std::vector<std::array<int, 2>> chords;  // cycle positions, ascending
    for (int u = 0; u < h.vertex_count(); ++u)
      for (int v : h.neighbors(u))
        if (u < v && sp.edge_index(u, v) < 0) {
          int a = sp.pos[u], b = sp.pos[v];
          chords.push_back({std::min(a, b), std::max(a, b)});
        }
    auto side_of = [&](const std::array<int, 2>& ch) {
      int x = sp.cycle[ch[0]], y = sp.cycle[ch[1]];
      int fa = h.face_left_of(x, y), fb = h.face_left_of(y, x);
      if (sp.face_side[fa] != sp.face_side[fb])
        throw ChordConflict("chord " + vee(x) + "-" + vee(y) + " borders faces on both sides");
      return sp.face_side[fa];
    };
    for (size_t i = 0; i < chords.size(); ++i)
      for (size_t j = i + 1; j < chords.size(); ++j) {
        auto [a, b] = chords[i];
        auto [p, q] = chords[j];
        bool p_in = a < p && p < b, q_in = a < q && q < b;
        if (p_in == q_in) continue;  // nested or disjoint
        if (p == a || p == b || q == a || q == b) continue;
        if (side_of(chords[i]) == side_of(chords[j]))
          throw ChordConflict("interleaving chords at positions (" + vee(a) + "," + vee(b) +
                              ") and (" + vee(p) + "," + vee(q) + ") share a side");
      }
  }

  // Per-side weak duals; each side carries k-2 triangles and its dual is
  // a tree of maximum degree 3 whose leaves are the 2-faces.
  for (int side = 0; side < 2; ++side) {
    WeakDual& d = sp.dual[side];
    d.node_of_face.assign(nf, -1);
    for (int f = 0; f < nf; ++f)
      if (sp.face_side[f] == side) {
        d.node_of_face[f] = static_cast<int>(d.face_ids.size());
        d.face_ids.push_back(f);
      }
    if (d.size() != k - 2)
      throw Error("Internal", "side " + vee(side) + " has " + vee(d.size()) +
                                  " triangles, expected k-2 = " + vee(k - 2));
    d.adj.assign(d.size(), {});
    int dual_edges = 0;
    for (int f : d.face_ids) {
      const Face& fc = sp.h.faces()[f];
      for (int i = 0; i < 3; ++i) {
        int x = fc[i], y = fc[(i + 1) % 3];
        if (sp.edge_index(x, y) >= 0) continue;
        int other = sp.across_chord(f, x, y);
        d.adj[d.node_of_face[f]].push_back(d.node_of_face[other]);
        ++dual_edges;
      }
    }
    dual_edges /= 2;
    if (dual_edges != d.size() - 1)
      throw Error("Internal", "weak dual of side " + vee(side) + " is not a tree");
    for (int node = 0; node < d.size(); ++node) {
      if (d.degree(node) > 3)
        throw Error("Internal", "weak dual degree exceeds 3 at " + face_str(sp, d.face_ids[node]));
      int j = sp.face_j[d.face_ids[node]];
      if (d.degree(node) != 3 - j)
        throw Error("Internal", face_str(sp, d.face_ids[node]) + " is a " + vee(j) +
                                    "-face with dual degree " + vee(d.degree(node)));
    }
  }

  // Cycle edge -> incident face per side.
  sp.edge_face.assign(k, {-1, -1});
  for (int t = 0; t < k; ++t) {
    int x = sp.cycle[t], y = sp.cycle[(t + 1) % k];
    int fa = h.face_left_of(x, y), fb = h.face_left_of(y, x);
    sp.edge_face[t][sp.face_side[fa]] = fa;
    sp.edge_face[t][sp.face_side[fb]] = fb;
    if (sp.edge_face[t][0] < 0 || sp.edge_face[t][1] < 0)
      throw Error("Internal", "cycle edge " + vee(t) + " does not touch both sides");
  }
  return sp;
}

const WeakDual& weak_dual(const SidePartition& sp, int side) { return sp.dual[side]; }

Classification classify(const SidePartition& sp) {
  Classification cls;
  const int nf = static_cast<int>(sp.h.faces().size());
  for (int f = 0; f < nf; ++f) {
    int side = sp.face_side[f], j = sp.face_j[f];
    ++cls.f_all[side][j];
    if (sp.face_empty[f]) ++cls.f_empty[side][j];
    if (j >= 1 && !sp.face_empty[f])
      throw Claim1Violation(face_str(sp, f) + " is a non-empty " + vee(j) + "-face");
  }
  const int k = sp.k();
  cls.edge_class.assign(k, {0, 0});
  for (int t = 0; t < k; ++t)
    for (int side = 0; side < 2; ++side)
      cls.edge_class[t][side] = sp.face_j[sp.edge_face[t][side]];
  // Every j-face owns j private cycle edges, so 2 f2 + f1 = k per side.
  for (int side = 0; side < 2; ++side)
    if (2 * cls.f_all[side][2] + cls.f_all[side][1] != k)
      throw Error("Internal", "side " + vee(side) + ": 2 f2 + f1 != k");
  return cls;
}

std::vector<Branch> branches(const SidePartition& sp, int side) {
  const WeakDual& d = sp.dual[side];
  bool has_zero = false;
  for (int f : d.face_ids)
    if (sp.face_j[f] == 0) has_zero = true;
  if (!has_zero)
    throw NoZeroFace("side " + vee(side) + " has no 0-face; branches are undefined");

  std::vector<Branch> out;
  std::vector<int> owner(sp.h.faces().size(), -1);  // 1-face -> branch index
  for (int leaf = 0; leaf < d.size(); ++leaf) {
    int f = d.face_ids[leaf];
    if (sp.face_j[f] != 2) continue;
    Branch b;
    b.side = side;
    b.faces.push_back(f);
    int prev = -1, cur = leaf;
    while (d.degree(cur) < 3) {
      int next = -1;
      for (int nb : d.adj[cur])
        if (nb != prev) next = nb;
      if (next < 0)
        throw Error("Internal", "branch walk from " + face_str(sp, f) +
                                    " ran into a second leaf; the side has a 0-face");
      prev = cur;
      cur = next;
      b.faces.push_back(d.face_ids[cur]);
    }
    // interior nodes are 1-faces, the end a 0-face
    for (int i = 1; i + 1 < b.r(); ++i) {
      int mid = b.faces[i];
      if (sp.face_j[mid] != 1)
        throw Error("Internal", face_str(sp, mid) + " inside a branch is not a 1-face");
      if (owner[mid] != -1)
        throw Claim4Violation(face_str(sp, mid) + " lies in two branches");
      owner[mid] = static_cast<int>(out.size());
    }
    if (sp.face_j[b.faces.back()] != 0)
      throw Error("Internal", "branch from " + face_str(sp, f) + " does not end at a 0-face");

    // Rim: the cycle edges incident with branch faces, as one path.
    const int k = sp.k();
    std::vector<char> on_rim(k, 0);
    int r = b.r(), cnt = 0;
    for (int bf : b.faces)
      for (int t : sp.face_cycle_edges(bf)) {
        if (on_rim[t])
          throw RimNotPath("cycle edge " + vee(t) + " incident with two faces of one branch");
        on_rim[t] = 1;
        ++cnt;
      }
    if (cnt != r)
      throw RimNotPath("branch of " + face_str(sp, f) + " touches " + vee(cnt) +
                       " cycle edges, expected r = " + vee(r));
    if (cnt >= k)
      throw RimNotPath("rim of " + face_str(sp, f) + " covers the whole cycle");
    // contiguous arc: exactly one t with on_rim[t] && !on_rim[t-1]
    int starts = 0, first = -1;
    for (int t = 0; t < k; ++t)
      if (on_rim[t] && !on_rim[(t + k - 1) % k]) {
        ++starts;
        first = t;
      }
    if (starts != 1)
      throw RimNotPath("rim of " + face_str(sp, f) + " splits into " + vee(starts) + " arcs");
    for (int i = 0; i <= r; ++i) b.rim.push_back(sp.cycle_vertex(first + i));

    // The 2-face owns two consecutive rim edges; locate them.
    auto own = sp.face_cycle_edges(f);
    int t1 = own[0], t2 = own[1];
    if ((t1 + 1) % k != t2 && (t2 + 1) % k != t1)
      throw Error("Internal", face_str(sp, f) + " has non-consecutive cycle edges");
    int lo = ((t1 + 1) % k == t2) ? t1 : t2;
    b.apex_offset = (lo - first + k) % k;
    if (b.apex_offset > r - 2)
      throw RimNotPath("2-face edges fall outside the rim of " + face_str(sp, f));
    out.push_back(std::move(b));
  }
  return out;
}

namespace {

void add_transfer(WeightLedger& led, std::set<std::string>* dedupe, const std::string& rule,
                  const std::string& src, const std::string& dst, int amount,
                  const std::string& via = "") {
  if (dedupe) {
    std::string key = rule + "|" + src + "|" + dst + "|" + via;
    if (!dedupe->insert(key).second)
      throw RuleAmbiguity("transfer " + key + " emitted twice");
  }
  led.transfers.push_back({rule, src, dst, amount, via});
}

}  // namespace

WeightLedger redistribute_first(const SidePartition& sp, const Classification& cls) {
  const int nf = static_cast<int>(sp.h.faces().size());
  const int k = sp.k();
  WeightLedger led;
  led.w1.assign(nf, 0);
  led.w2.assign(nf, 0);
  led.points.assign(nf, 0);

  for (int t = 0; t < k; ++t) {
    int fa = sp.edge_face[t][0], fb = sp.edge_face[t][1];
    int ja = sp.face_j[fa], jb = sp.face_j[fb];
    std::string src = "edge:" + vee(t);
    int wa, wb;
    if (ja == 1 && jb == 1) {
      wa = wb = 3;  // R1
    } else if (ja == 2 && jb == 2) {
      wa = wb = 3;  // R3
    } else if ((ja == 1 && jb == 2) || (ja == 2 && jb == 1)) {
      wa = ja == 1 ? 4 : 2;  // R2
      wb = 6 - wa;
    } else {
      throw Error("Internal", "cycle edge " + vee(t) + " touches a " + vee(std::min(ja, jb)) + "-face");
    }
    const char* rule = (ja == 1 && jb == 1) ? "R1" : (ja == 2 && jb == 2) ? "R3" : "R2";
    led.w1[fa] += wa;
    led.w1[fb] += wb;
    add_transfer(led, nullptr, rule, src, "face:" + vee(fa), wa);
    add_transfer(led, nullptr, rule, src, "face:" + vee(fb), wb);
  }

  long long total = 0;
  for (int f = 0; f < nf; ++f) {
    total += led.w1[f];
    if (led.w1[f] > 0 && !sp.face_empty[f])
      throw Error("Internal", face_str(sp, f) + " is non-empty but received first-round weight");
  }
  if (total != 6LL * k)
    throw Error("Internal", "sum w1 = " + std::to_string(total) + " sixths, expected " + vee(6 * k));

  // The w1 table, re-derived from each face's own edge classes.
  for (int f = 0; f < nf; ++f) {
    if (!sp.face_empty[f]) continue;
    auto own = sp.face_cycle_edges(f);
    int expect = 0;
    for (int t : own) {
      int other = cls.edge_class[t][0] + cls.edge_class[t][1] - sp.face_j[f];
      if (sp.face_j[f] == 2)
        expect += other == 2 ? 3 : 2;
      else if (sp.face_j[f] == 1)
        expect += other == 1 ? 3 : 4;
    }
    if (expect != led.w1[f])
      throw Error("Internal", face_str(sp, f) + " got w1 = " + vee(led.w1[f]) +
                                  " sixths, table says " + vee(expect));
  }
  return led;
}

void redistribute_second(const SidePartition& sp, const Classification& cls,
                         const std::array<std::vector<Branch>, 2>& br, WeightLedger& led) {
  const int nf = static_cast<int>(sp.h.faces().size());
  const int k = sp.k();
  std::array<std::vector<int>, 2> branch_of;  // 2-face id -> branch index per side
  for (int side = 0; side < 2; ++side) {
    branch_of[side].assign(nf, -1);
    for (size_t i = 0; i < br[side].size(); ++i)
      branch_of[side][br[side][i].faces.front()] = static_cast<int>(i);
  }

  std::set<std::string> dedupe;
  const size_t first_round = led.transfers.size();
  std::vector<int> outgoing(nf, 0);

  for (int phi = 0; phi < nf; ++phi) {
    if (sp.face_j[phi] != 2 || led.w1[phi] <= 4) continue;
    const int side = sp.face_side[phi];
    if (branch_of[side][phi] < 0)
      throw Error("Internal", "no branch recorded for overweight " + face_str(sp, phi));
    const Branch& b = br[side][branch_of[side][phi]];
    const int r = b.r();
    const int phir = b.faces.back();
    const std::string src = "face:" + vee(phi);

    // R4 / R6: down the branch to its 0-face.
    if (sp.face_empty[phir]) {
      if (r <= 3)
        add_transfer(led, &dedupe, "R4", src, "face:" + vee(phir), led.w1[phi] - 4);
      else
        add_transfer(led, &dedupe, "R6", src, "face:" + vee(phir), 1);
    }
    // R5: to 1-faces of the branch sitting on a (1,1)-edge.
    for (int i = 1; i + 1 < r; ++i) {
      int mid = b.faces[i];
      auto own = sp.face_cycle_edges(mid);
      if (own.size() != 1) throw Error("Internal", face_str(sp, mid) + " is not a 1-face");
      int t = own[0];
      if (cls.edge_class[t][0] == 1 && cls.edge_class[t][1] == 1)
        add_transfer(led, &dedupe, "R5", src, "face:" + vee(mid), 1);
    }
    // R7: across each cycle edge of phi to the far side.
    for (int t : sp.face_cycle_edges(phi)) {
      int alpha = sp.edge_face[t][1 - side];
      if (sp.face_j[alpha] != 2) continue;
      auto alpha_edges = sp.face_cycle_edges(alpha);
      int t2 = alpha_edges[0] == t ? alpha_edges[1] : alpha_edges[0];
      bool has_12 = (cls.edge_class[t2][0] + cls.edge_class[t2][1]) == 3;
      if (!has_12) continue;
      // alpha is a leaf; its one dual neighbor sits across its chord
      const Face& fc = sp.h.faces()[alpha];
      int alpha2 = -1;
      for (int i = 0; i < 3; ++i) {
        int x = fc[i], y = fc[(i + 1) % 3];
        if (sp.edge_index(x, y) < 0) alpha2 = sp.across_chord(alpha, x, y);
      }
      if (sp.face_j[alpha2] == 0 && sp.face_empty[alpha2])
        add_transfer(led, &dedupe, "R7", src, "face:" + vee(alpha2), 1, "face:" + vee(alpha));
    }
    // R8: to the 0-face behind a far-side 2-face touching phi in one vertex.
    {
      const Face& pf = sp.h.faces()[phi];
      for (int beta : sp.dual[1 - side].face_ids) {
        if (sp.face_j[beta] != 2) continue;
        const Face& bf = sp.h.faces()[beta];
        int common = 0;
        for (int x : pf)
          for (int y : bf)
            if (x == y) ++common;
        if (common != 1) continue;
        auto bedges = sp.face_cycle_edges(beta);
        bool both_12 = true;
        for (int t : bedges)
          if (cls.edge_class[t][0] + cls.edge_class[t][1] != 3) both_12 = false;
        if (!both_12) continue;
        const Face& fc = sp.h.faces()[beta];
        int beta2 = -1;
        for (int i = 0; i < 3; ++i) {
          int x = fc[i], y = fc[(i + 1) % 3];
          if (sp.edge_index(x, y) < 0) beta2 = sp.across_chord(beta, x, y);
        }
        if (sp.face_j[beta2] == 0 && sp.face_empty[beta2])
          add_transfer(led, &dedupe, "R8", src, "face:" + vee(beta2), 1, "face:" + vee(beta));
      }
    }
  }

  // Replay the log from w1.
  led.w2 = led.w1;
  for (size_t i = first_round; i < led.transfers.size(); ++i) {
    const Transfer& tr = led.transfers[i];
    int src_f = std::stoi(tr.src.substr(5));
    int dst_f = std::stoi(tr.dst.substr(5));
    led.w2[src_f] -= tr.amount_sixths;
    led.w2[dst_f] += tr.amount_sixths;
    outgoing[src_f] += tr.amount_sixths;
    if (!sp.face_empty[dst_f])
      throw Error("Internal", "second redistribution sent weight to non-empty " + face_str(sp, dst_f));
  }

  long long total = 0;
  for (int f = 0; f < nf; ++f) total += led.w2[f];
  if (total != 6LL * k)
    throw Error("Internal", "sum w2 = " + std::to_string(total) + " sixths, expected " + vee(6 * k));
  for (int f = 0; f < nf; ++f)
    if (sp.face_j[f] == 2 && led.w1[f] > 4 && outgoing[f] < led.w1[f] - 4)
      throw Error("Internal", face_str(sp, f) + " shipped " + vee(outgoing[f]) +
                                  " sixths, less than its excess " + vee(led.w1[f] - 4));
}

void distribute_points(const SidePartition& sp, const Classification& cls, int side_i,
                       const std::vector<Branch>& other_branches, WeightLedger& led) {
  const int other = 1 - side_i;
  const int nf = static_cast<int>(sp.h.faces().size());
  led.points.assign(nf, 0);

  std::vector<int> branch_of(nf, -1);
  std::vector<char> in_branch(nf, 0);  // 1-faces of the other side in some branch
  for (size_t i = 0; i < other_branches.size(); ++i) {
    branch_of[other_branches[i].faces.front()] = static_cast<int>(i);
    for (int j = 1; j + 1 < other_branches[i].r(); ++j)
      in_branch[other_branches[i].faces[j]] = 1;
  }
  auto end_of = [&](int two_face) {
    int bi = branch_of[two_face];
    if (bi < 0) throw Error("Internal", "no branch for " + face_str(sp, two_face));
    return other_branches[bi].faces.back();
  };
  auto in_branch_of = [&](int one_face, int two_face) {
    const Branch& b = other_branches[branch_of[two_face]];
    for (int i = 1; i + 1 < b.r(); ++i)
      if (b.faces[i] == one_face) return true;
    return false;
  };

  // The light side is a path (two 2-face leaves) or a subdivided 3-star
  // around one empty 0-face (three 2-face leaves).
  std::vector<int> alphas;
  int zeroes = 0;
  for (int f : sp.dual[side_i].face_ids) {
    if (sp.face_j[f] == 2) alphas.push_back(f);
    if (sp.face_j[f] == 0) ++zeroes;
  }
  if (!((zeroes == 0 && alphas.size() == 2) || (zeroes == 1 && alphas.size() == 3)))
    throw Error("Internal", "light side " + vee(side_i) + " has " + vee(zeroes) +
                                " 0-faces and " + vee((int)alphas.size()) + " 2-faces");

  for (int alpha : alphas) {
    auto ts = sp.face_cycle_edges(alpha);
    int phi = sp.edge_face[ts[0]][other];
    int psi = sp.edge_face[ts[1]][other];
    int jphi = sp.face_j[phi], jpsi = sp.face_j[psi];
    if (jphi == 1 && jpsi == 2) {
      std::swap(phi, psi);
      std::swap(jphi, jpsi);
    }
    if (jphi == 2 && jpsi == 2) {  // P1
      led.points[end_of(phi)] += 1;
      led.points[end_of(psi)] += 1;
    } else if (jphi == 1 && jpsi == 1) {  // P2
      led.points[phi] += 1;
      led.points[psi] += 1;
    } else if (jphi == 2 && jpsi == 1) {
      if (in_branch_of(psi, phi)) {  // P4
        led.points[psi] += 1;
      } else {  // P3
        led.points[end_of(phi)] += 1;
        led.points[psi] += 1;
      }
    } else {
      throw Error("Internal", face_str(sp, alpha) + " faces a 0-face across a cycle edge");
    }
  }

  // The claims are the counting inequalities. The per-face bounds from
  // their proofs (a 1-face carries at most 1 point, a 0-face at most 2)
  // are surfaced as notes, not failures: the 0-face bound is not actually
  // an invariant of rules P1-P4. When a 2-face of the far side touches
  // 2-faces of the light side across both of its cycle edges, each sends
  // a point down the same branch, and P1 can add two at once when the two
  // branch ends coincide; a 0-face ending two branches then collects 3.
  // The inequality absorbs this (the far side has to be large enough to
  // host the configuration).
  long long total = 0;
  for (int f = 0; f < nf; ++f) {
    if (led.points[f] == 0) continue;
    total += led.points[f];
    if (sp.face_side[f] != other || sp.face_j[f] == 2)
      throw Error("Internal", face_str(sp, f) + " received points outside rules P1-P4");
    if (sp.face_j[f] == 1 && led.points[f] > 1)
      led.notes.push_back("1-" + face_str(sp, f) + " carries " + vee(led.points[f]) + " points");
    if (sp.face_j[f] == 0) {
      if (led.points[f] > 2)
        led.notes.push_back("0-" + face_str(sp, f) + " carries " + vee(led.points[f]) +
                            " points");
      if (!sp.face_empty[f])
        led.notes.push_back("non-empty 0-" + face_str(sp, f) + " carries points");
    }
  }
  long long lhs = cls.f_empty[other][1] + 2LL * cls.f_empty[other][0];
  if (lhs < total)
    throw Claim5Violation("f1 + 2 f0 = " + std::to_string(lhs) + " < total points " +
                          std::to_string(total));
  if (lhs < 4)
    throw Claim6Violation("f1 + 2 f0 = " + std::to_string(lhs) + " < 4 on side " + vee(other));
}

}  // namespace tricirc
