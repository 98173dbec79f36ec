#include <algorithm>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "tricirc/connectivity.hpp"
#include "tricirc/discharging.hpp"

namespace tricirc {

namespace {

std::string vee(int v) { return std::to_string(v); }

using Claims = std::map<std::string, ClaimStatus>;

void set_claim(Claims& claims, const std::string& name, bool ok) {
  auto it = claims.find(name);
  if (it == claims.end() || it->second == ClaimStatus::not_applicable)
    claims[name] = ok ? ClaimStatus::pass : ClaimStatus::fail;
  else if (!ok)
    it->second = ClaimStatus::fail;
  // pass never overrides an earlier fail
}

struct CycleVerifier {
  const Triangulation& g;
  const GoodCycle& c;
  VerificationReport& rep;

  SidePartition sp;
  Classification cls;
  std::array<std::vector<Branch>, 2> br;
  std::array<bool, 2> br_ok{false, false};
  std::array<int, 2> zeroes{0, 0}, nonempty_zeroes{0, 0};

  CycleVerifier(const Triangulation& graph, const GoodCycle& cycle, VerificationReport& report)
      : g(graph), c(cycle), rep(report), sp(build_side_partition(graph, cycle)) {}

  void witness(const std::string& key, const std::string& text) {
    if (!rep.witnesses.count(key)) rep.witnesses[key] = text;
    rep.flag = "potential-counterexample-or-bug";
  }

  void run() {
    const int n = g.vertex_count();
    const int k = sp.k();

    if (k < 7) witness("k_ge_7", "longest good cycle has length " + vee(k) + " < 7");

    try {
      cls = classify(sp);
      set_claim(rep.claims, "claim1", true);
    } catch (const Claim1Violation& e) {
      set_claim(rep.claims, "claim1", false);
      witness("claim1", e.what());
      return;  // the redistribution reasoning is void without Claim 1
    }
    rep.f_empty = cls.f_empty;

    int ef = 0, nef = 0;
    for (size_t f = 0; f < sp.face_empty.size(); ++f) {
      if (sp.face_empty[f]) ++ef;
      else ++nef;
      if (sp.face_j[f] == 0) {
        ++zeroes[sp.face_side[f]];
        if (!sp.face_empty[f]) ++nonempty_zeroes[sp.face_side[f]];
      }
    }
    rep.empty_faces = ef;
    rep.nonempty_faces = nef;
    if (nef != n - k)
      witness("outside_bookkeeping",
              "non-empty face count " + vee(nef) + " != n - k = " + vee(n - k));

    for (int side = 0; side < 2; ++side) {
      if (zeroes[side] == 0) continue;  // branches undefined on this side
      try {
        br[side] = branches(sp, side);
        br_ok[side] = true;
        set_claim(rep.claims, "claim2", true);
        set_claim(rep.claims, "claim4", true);
      } catch (const RimNotPath& e) {
        set_claim(rep.claims, "claim2", false);
        witness("claim2", e.what());
      } catch (const Claim4Violation& e) {
        set_claim(rep.claims, "claim4", false);
        witness("claim4", e.what());
      }
    }

    check_claim3();

    // Case dispatch: a side is "heavy" when it has two 0-faces or a
    // non-empty one; Case 1 needs both sides heavy.
    auto heavy = [&](int side) {
      return zeroes[side] >= 2 || nonempty_zeroes[side] >= 1;
    };

    WeightLedger led;
    bool first_ok = false;
    try {
      led = redistribute_first(sp, cls);
      first_ok = true;
      set_claim(rep.claims, "conservation_w1", true);
    } catch (const Error& e) {
      set_claim(rep.claims, "conservation_w1", false);
      witness("conservation_w1", e.what());
    }

    if (heavy(0) && heavy(1)) {
      rep.case_id = "1";
      // In Case 1 an empty 0-face can end at most two branches; a third
      // bare path into it would make it its side's only 0-face.
      if (br_ok[0] && br_ok[1]) {
        std::vector<int> ends(sp.face_empty.size(), 0);
        for (int side = 0; side < 2; ++side)
          for (const Branch& b : br[side]) ++ends[b.faces.back()];
        for (size_t f = 0; f < ends.size(); ++f)
          if (sp.face_empty[f] && ends[f] > 2)
            witness("empty_zero_face_branches",
                    "empty 0-face " + vee((int)f) + " ends " + vee(ends[f]) + " branches");
      }
      if (first_ok && br_ok[0] && br_ok[1]) {
        try {
          redistribute_second(sp, cls, br, led);
          set_claim(rep.claims, "conservation_w2", true);
          bool below = true;
          for (size_t f = 0; f < sp.face_empty.size(); ++f)
            if (sp.face_empty[f] && led.w2[f] > 4) {
              below = false;
              witness("per_face_w2_max",
                      "face " + vee((int)f) + " ends with w2 = " + vee(led.w2[f]) + "/6 > 2/3");
            }
          set_claim(rep.claims, "per_face_w2_max", below);
        } catch (const Error& e) {
          set_claim(rep.claims, "conservation_w2", false);
          witness("conservation_w2", e.what());
        }
      }
      bool identity = (2 * n - 4 == ef + 3 * (n - k)) && (2 * ef >= 3 * k);
      set_claim(rep.claims, "case1_identity", identity);
      if (!identity)
        witness("case1_identity", "2n-4 = " + vee(2 * n - 4) + ", ef + 3(n-k) = " +
                                      vee(ef + 3 * (n - k)) + ", 2ef = " + vee(2 * ef) +
                                      " vs 3k = " + vee(3 * k));
    } else {
      bool any_full = false, any_shortcut = false;
      for (int side = 0; side < 2; ++side) {
        if (heavy(side)) continue;
        if (rep.side_i < 0) rep.side_i = side + 1;  // 1-based, matching H_1/H_2
        verify_case2(side, led, any_full, any_shortcut);
      }
      rep.case_id = any_full ? "2" : "2-shortcut";
    }
    rep.transfers = led.transfers;
  }

  void verify_case2(int side_i, WeightLedger& led, bool& any_full, bool& any_shortcut) {
    const int n = g.vertex_count();
    const int k = sp.k();
    const int other = 1 - side_i;

    // Light side must not hide any removed vertex behind a non-empty face.
    for (int f : sp.dual[side_i].face_ids)
      if (!sp.face_empty[f])
        witness("case2_light_side",
                "light side " + vee(side_i) + " contains non-empty face " + vee(f));

    if (zeroes[other] < 2) {
      // All but at most one face of the far side is empty too, so at most
      // one vertex lies outside the cycle.
      any_shortcut = true;
      bool ok = (n <= k + 1) && (3 * k >= 2 * n + 8);
      set_claim(rep.claims, "case2_chain", ok);
      if (!ok)
        witness("case2_shortcut", "n = " + vee(n) + ", k = " + vee(k) +
                                      " violate n <= k+1 or 3k >= 2n+8");
      return;
    }

    any_full = true;
    if (!br_ok[other]) {
      set_claim(rep.claims, "case2_chain", false);
      witness("case2_branches", "branches unavailable on side " + vee(other));
      return;
    }
    try {
      distribute_points(sp, cls, side_i, br[other], led);
      set_claim(rep.claims, "claim5", true);
      set_claim(rep.claims, "claim6", true);
      for (const std::string& note : led.notes)
        rep.witnesses.emplace("points_note_" + std::to_string(rep.witnesses.size()), note);
    } catch (const Claim5Violation& e) {
      set_claim(rep.claims, "claim5", false);
      witness("claim5", e.what());
      return;
    } catch (const Claim6Violation& e) {
      set_claim(rep.claims, "claim6", false);
      witness("claim6", e.what());
      return;
    }

    const int f0 = cls.f_empty[other][0], f1 = cls.f_empty[other][1], f2 = cls.f_empty[other][2];
    int nonempty_other = 0;
    for (int f : sp.dual[other].face_ids)
      if (!sp.face_empty[f]) ++nonempty_other;

    bool chain = true;
    chain = chain && (2 * f2 + f1 == k);
    chain = chain && (nonempty_other == (k - 2) - f2 - f1 - f0);
    chain = chain && (2 * nonempty_other == k - 4 - (f1 + 2 * f0));
    chain = chain && (2 * nonempty_other <= k - 8);
    chain = chain && (n <= k + nonempty_other);
    chain = chain && (3 * k >= 2 * n + 8);
    set_claim(rep.claims, "case2_chain", chain);
    if (!chain)
      witness("case2_chain", "side " + vee(other) + ": f0 = " + vee(f0) + ", f1 = " + vee(f1) +
                                 ", f2 = " + vee(f2) + ", non-empty = " + vee(nonempty_other) +
                                 ", k = " + vee(k) + ", n = " + vee(n));
  }

  // Wherever a branch matches one of the two executable rerouting
  // configurations, the reroute must produce a same-length good cycle
  // through the designated edge of the branch's end face, and that face
  // must be empty.
  void check_claim3() {
    int applied = 0;
    bool all_ok = true;
    for (int side = 0; side < 2; ++side) {
      if (!br_ok[side]) continue;
      for (const Branch& b : br[side]) {
        for (int dir = 0; dir < 2; ++dir) {
          std::vector<int> rim = b.rim;
          if (dir == 1) std::reverse(rim.begin(), rim.end());
          int a_off = dir == 0 ? b.apex_offset : b.r() - 2 - b.apex_offset;
          int step = cycle_step(rim);
          int res = 0;
          if (a_off == 0) {
            res = try_apex(b, rim, step);
            rep.reroutes_at_apex += res > 0 ? 1 : 0;
          } else if (a_off == 1) {
            res = try_shifted(b, rim, step);
            rep.reroutes_shifted += res > 0 ? 1 : 0;
          }
          if (res < 0) all_ok = false;
          else applied += res;
        }
      }
    }
    if (applied == 0 && all_ok) {
      if (!rep.claims.count("claim3")) rep.claims["claim3"] = ClaimStatus::not_applicable;
    } else {
      set_claim(rep.claims, "claim3", all_ok);
    }
  }

  // +1 / -1: the direction the rim walks around the cycle.
  int cycle_step(const std::vector<int>& rim) const {
    int k = sp.k();
    return (sp.pos[rim[1]] - sp.pos[rim[0]] + k) % k == 1 ? 1 : -1;
  }

  int before_rim(const std::vector<int>& rim, int step) const {
    int k = sp.k();
    return sp.cycle[((sp.pos[rim[0]] - step) % k + k) % k];
  }

  bool chord_on_side(int x, int y, int side) const {
    if (!sp.h.emb().adjacent(x, y)) return false;
    if (sp.edge_index(x, y) >= 0) return false;
    return sp.face_side[sp.h.emb().face_left_of(x, y)] == side;
  }

  std::vector<int> to_g_ids(const std::vector<int>& h_ids) const {
    std::vector<int> out;
    out.reserve(h_ids.size());
    for (int v : h_ids) out.push_back(sp.new_to_old[v]);
    return out;
  }

  bool reroute_and_check(const RerouteContext& ctx, int des_a, int des_b, int phir,
                         const char* label) {
    try {
      GoodCycle moved = reroute(g.emb(), c, ctx);
      if (moved.length() != c.length()) {
        witness(std::string("claim3_") + label, "rerouted cycle changed length");
        return false;
      }
      bool found = false;
      for (int i = 0; i < moved.length(); ++i) {
        int x = moved.verts[i], y = moved.verts[(i + 1) % moved.length()];
        if ((x == des_a && y == des_b) || (x == des_b && y == des_a)) found = true;
      }
      if (!found) {
        witness(std::string("claim3_") + label,
                "designated edge " + vee(des_a) + "-" + vee(des_b) + " missing from reroute");
        return false;
      }
      if (!sp.face_empty[phir]) {
        witness(std::string("claim3_") + label, "end face " + vee(phir) + " is not empty");
        return false;
      }
      return true;
    } catch (const ConfigMismatch& e) {
      witness(std::string("claim3_") + label, e.what());
      return false;
    }
  }

  // Configuration with the rim starting at the 2-face: rim = (v1,...,v_{r+1})
  // and the chord v0-v2 on the far side. Returns 1 applied+passed, 0 when
  // the hypothesis is absent, -1 on failure.
  int try_apex(const Branch& b, const std::vector<int>& rim, int step) {
    int v0 = before_rim(rim, step);
    if (std::find(rim.begin(), rim.end(), v0) != rim.end()) return 0;
    if (!chord_on_side(v0, rim[1], 1 - b.side)) return 0;
    RerouteContext ctx;
    ctx.kind = RerouteContext::Kind::rim_at_apex;
    ctx.arc = to_g_ids(rim);
    ctx.arc.insert(ctx.arc.begin(), sp.new_to_old[v0]);
    return reroute_and_check(ctx, sp.new_to_old[rim[0]], sp.new_to_old[rim[b.r()]],
                             b.faces.back(), "apex")
               ? 1
               : -1;
  }

  // Configuration with one rim edge before the 2-face: rim = (v0,...,v_r)
  // with chords v0-v2 and w-v2 (w just before v0) on the far side.
  // Returns 1 when applied and passed, 0 when the hypothesis is absent,
  // -1 on failure.
  int try_shifted(const Branch& b, const std::vector<int>& rim, int step) {
    const int r = b.r();
    int w = before_rim(rim, step);
    if (std::find(rim.begin(), rim.end(), w) != rim.end()) return 0;
    if (!chord_on_side(rim[0], rim[2], 1 - b.side)) return 0;
    if (!chord_on_side(w, rim[2], 1 - b.side)) return 0;

    // v0v1 belongs to one branch 1-face [v0, v1, v_s]; find s.
    int t = sp.edge_index(rim[0], rim[1]);
    int owner = sp.edge_face[t][b.side];
    bool in_branch = false;
    for (int i = 1; i + 1 < r; ++i)
      if (b.faces[i] == owner) in_branch = true;
    if (!in_branch) {
      witness("claim3_shifted", "face across " + vee(rim[0]) + "-" + vee(rim[1]) +
                                    " is outside its own branch");
      return -1;
    }
    int third = -1;
    for (int x : sp.h.faces()[owner])
      if (x != rim[0] && x != rim[1]) third = x;
    int s = -1;
    for (int i = 0; i <= r; ++i)
      if (rim[i] == third) s = i;
    if (s < 3) {
      witness("claim3_shifted", "break face [" + vee(rim[0]) + "," + vee(rim[1]) + "," +
                                    vee(third) + "] has no valid break index");
      return -1;
    }
    RerouteContext ctx;
    ctx.kind = RerouteContext::Kind::rim_shifted;
    ctx.arc = to_g_ids(rim);
    ctx.arc.insert(ctx.arc.begin(), sp.new_to_old[w]);
    ctx.s = s;
    return reroute_and_check(ctx, sp.new_to_old[rim[0]], sp.new_to_old[rim[r]],
                             b.faces.back(), "shifted")
               ? 1
               : -1;
  }
};

}  // namespace

VerificationReport verify_bound(const Triangulation& g, const VerifyOptions& opt) {
  const int n = g.vertex_count();
  VerificationReport rep;
  rep.n = n;
  rep.bound = (2 * n + 10) / 3;  // ceil(2(n+4)/3)
  for (const char* name :
       {"claim1", "claim2", "claim3", "claim4", "claim5", "claim6", "conservation_w1",
        "conservation_w2", "per_face_w2_max", "case1_identity", "case2_chain", "k_ge_bound",
        "circ_ge_k"})
    rep.claims[name] = ClaimStatus::not_applicable;

  if (n < 8) throw PreconditionFailed("verify_bound needs n >= 8, got " + vee(n));
  if (!is_essentially_4_connected(g))
    throw PreconditionFailed("input triangulation is not essentially 4-connected");

  LongestCycle lc = circumference(g.emb(), opt.limits);
  rep.circ = lc.length;

  if (n <= 10) {
    rep.case_id = "hamiltonian-small-n";
    rep.k = lc.length;
    rep.cycles_verified = 0;
    set_claim(rep.claims, "k_ge_bound", 3 * rep.k >= 2 * n + 8);
    set_claim(rep.claims, "circ_ge_k", rep.circ >= rep.k);
    if (rep.k < n) {
      rep.witnesses["hamiltonian"] = "graph on " + vee(n) + " vertices has circumference " +
                                     vee(rep.k) + " and is not Hamiltonian";
      rep.flag = "potential-counterexample-or-bug";
    }
    return rep;
  }

  std::vector<GoodCycle> cycles;
  try {
    if (opt.all_longest_good) {
      cycles = all_longest_good_cycles(g.emb(), opt.limits);
      if (cycles.empty()) throw NoGoodCycle("no good cycle found");
    } else {
      cycles.push_back(longest_good_cycle(g.emb(), opt.limits));
    }
  } catch (const NoGoodCycle& e) {
    rep.case_id = "error:no-good-cycle";
    rep.witnesses["good_cycle_exists"] = e.what();
    rep.flag = "potential-counterexample-or-bug";
    set_claim(rep.claims, "k_ge_bound", false);
    return rep;
  }

  rep.k = cycles.front().length();
  for (const GoodCycle& c : cycles) {
    try {
      CycleVerifier v(g, c, rep);
      v.run();
    } catch (const Timeout&) {
      throw;
    } catch (const Error& e) {
      rep.witnesses["pipeline"] = e.code() + ": " + e.what();
      rep.flag = "potential-counterexample-or-bug";
    }
    ++rep.cycles_verified;
  }
  set_claim(rep.claims, "k_ge_bound", 3 * rep.k >= 2 * n + 8);
  set_claim(rep.claims, "circ_ge_k", rep.circ >= rep.k);
  if (!rep.all_pass() && rep.flag.empty()) rep.flag = "potential-counterexample-or-bug";
  return rep;
}

namespace {

const char* status_str(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    default: return "not-applicable";
  }
}

}  // namespace

std::string report_to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["bound"] = r.bound;
  j["circ"] = r.circ;
  j["case"] = r.case_id;
  j["side_i"] = r.side_i;
  j["f_counts"] = {
      {"H1", {{"f0", r.f_empty[0][0]}, {"f1", r.f_empty[0][1]}, {"f2", r.f_empty[0][2]}}},
      {"H2", {{"f0", r.f_empty[1][0]}, {"f1", r.f_empty[1][1]}, {"f2", r.f_empty[1][2]}}}};
  j["empty_faces"] = r.empty_faces;
  j["nonempty_faces"] = r.nonempty_faces;
  nlohmann::json claims = nlohmann::json::object();
  for (const auto& [name, st] : r.claims) claims[name] = status_str(st);
  j["claims"] = claims;
  nlohmann::json transfers = nlohmann::json::array();
  for (const Transfer& t : r.transfers) {
    nlohmann::json tr{{"rule", t.rule}, {"src", t.src}, {"dst", t.dst},
                      {"amount_sixths", t.amount_sixths}};
    if (!t.via.empty()) tr["via"] = t.via;
    transfers.push_back(tr);
  }
  j["transfers"] = transfers;
  j["witnesses"] = r.witnesses;
  j["cycles_verified"] = r.cycles_verified;
  j["reroutes"] = {{"at_apex", r.reroutes_at_apex}, {"shifted", r.reroutes_shifted}};
  if (!r.flag.empty()) j["flag"] = r.flag;
  return j.dump(2);
}

std::string report_summary(const VerificationReport& r) {
  std::ostringstream out;
  out << "n=" << r.n << " k=" << r.k << " bound=" << r.bound << " circ=" << r.circ
      << " case=" << r.case_id;
  if (r.side_i >= 0) out << " side_i=" << r.side_i;
  out << '\n';
  for (const auto& [name, st] : r.claims)
    out << "  " << name << ": " << status_str(st) << '\n';
  if (!r.flag.empty()) out << "  FLAG: " << r.flag << '\n';
  for (const auto& [key, text] : r.witnesses) out << "  witness " << key << ": " << text << '\n';
  return out.str();
}

}  // namespace tricirc
