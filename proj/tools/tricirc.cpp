// tricirc: generate, check, and verify planar triangulations against the
// circumference bound 2/3 (n + 4) for essentially 4-connected maximal
// planar graphs.
//
// Exit codes: 0 success / all checks pass; 1 runtime failure or a failed
// claim; 2 bad arguments; 3 timeout (batch: timeouts but no failures).

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tricirc/connectivity.hpp"
#include "tricirc/cycles.hpp"
#include "tricirc/discharging.hpp"
#include "tricirc/embedding.hpp"
#include "tricirc/generators.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace tricirc;

namespace {

int fail(const std::string& code, const std::string& msg, int exit_code = 1) {
  json j{{"error", code}, {"message", msg}};
  std::cerr << j.dump() << '\n';
  return exit_code;
}

Triangulation generate(const std::string& family, int n, std::uint64_t seed,
                       const std::string& base_path) {
  if (family == "doublewheel") return double_wheel(n - 2);
  if (family == "random4c") return random_4connected_triangulation(n, seed);
  if (family == "randome4c") return random_essentially_4connected_triangulation(n, seed);
  if (family == "extremal") {
    if (!base_path.empty())
      return extremal_expand(Triangulation(read_rot_file(base_path)));
    return extremal_expand(random_4connected_triangulation(n, seed));
  }
  throw Error("BadArgument", "unknown family '" + family + "'");
}

int cmd_gen(const std::string& family, int n, std::uint64_t seed, const std::string& base,
            const std::string& out) {
  Triangulation t = generate(family, n, seed, base);
  write_rot_file(out, t.emb());
  std::cout << "wrote " << out << " (n=" << t.vertex_count() << ", m=" << t.edge_count()
            << ")\n";
  return 0;
}

int cmd_check(const std::string& in) {
  Embedding e = read_rot_file(in);
  std::cout << "n=" << e.vertex_count() << " m=" << e.edge_count()
            << " faces=" << e.faces().size() << '\n';
  bool maximal = is_maximal_planar(e);
  std::cout << "maximal planar: " << (maximal ? "yes" : "no") << '\n';
  int conn = 0;
  for (int k = 1; k <= 5; ++k)
    if (connectivity_at_least(e, k)) conn = k;
  std::cout << "connectivity: " << (conn == 5 ? ">=5" : std::to_string(conn)) << '\n';
  if (conn < 3) {
    std::cout << "essentially 4-connected: no (not 3-connected)\n";
    return 0;
  }
  if (maximal) {
    Triangulation t(std::move(e));
    auto cuts = separating_triangles(t);
    bool e4c = is_essentially_4_connected(t);
    std::cout << "separating triangles: " << cuts.size() << '\n';
    std::cout << (e4c ? "essentially 4-connected: yes" : "NOT essentially 4-connected") << '\n';
    if (!e4c)
      for (const CutSet& c : cuts)
        if (!c.trivial) {
          std::cout << "witness cut: {" << c.vertices[0] << "," << c.vertices[1] << ","
                    << c.vertices[2] << "}\n";
          break;
        }
  } else {
    bool e4c = is_essentially_4_connected(e);
    std::cout << (e4c ? "essentially 4-connected: yes" : "NOT essentially 4-connected") << '\n';
    if (!e4c)
      for (const CutSet& c : three_cuts(e))
        if (!c.trivial) {
          std::cout << "witness cut: {" << c.vertices[0] << "," << c.vertices[1] << ","
                    << c.vertices[2] << "}\n";
          break;
        }
  }
  return 0;
}

int cmd_circ(const std::string& in, bool good, int budget_secs) {
  Embedding e = read_rot_file(in);
  SearchLimits lim{std::chrono::seconds(budget_secs)};
  if (good) {
    GoodCycle c = longest_good_cycle(e, lim);
    std::cout << "length=" << c.length() << '\n' << "cycle=";
    for (int v : c.verts) std::cout << ' ' << v;
    std::cout << '\n' << "outside=";
    for (int v : c.outside) std::cout << ' ' << v;
    std::cout << '\n';
  } else {
    LongestCycle c = circumference(e, lim);
    std::cout << "length=" << c.length << '\n' << "cycle=";
    for (int v : c.cycle) std::cout << ' ' << v;
    std::cout << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& in, bool all_longest, int budget_secs,
               const std::string& json_path) {
  Triangulation t(read_rot_file(in));
  VerifyOptions opt;
  opt.limits.budget = std::chrono::seconds(budget_secs);
  opt.all_longest_good = all_longest;
  VerificationReport rep = verify_bound(t, opt);
  std::cout << report_summary(rep);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    out << report_to_json(rep) << '\n';
  }
  return rep.all_pass() ? 0 : 1;
}

struct BatchRow {
  std::string id;
  int n = 0;
  std::uint64_t seed = 0;
  std::string status;  // "ok" | "timeout" | "error:<code>"
  VerificationReport rep;
  long long runtime_ms = 0;
};

int cmd_batch(const std::string& corpus, const std::string& out_csv, int jobs, int budget_secs,
              const std::string& family, int n_min, int n_max, int seeds) {
  fs::create_directories(corpus);
  fs::path manifest_path = fs::path(corpus) / "manifest.json";

  json manifest;
  if (fs::exists(manifest_path)) {
    std::ifstream in(manifest_path);
    in >> manifest;
  } else {
    if (family.empty())
      throw Error("BadArgument",
                  "no manifest in '" + corpus + "'; pass --family/--n-min/--n-max/--seeds to generate one");
    manifest = json{{"version", 1}, {"instances", json::array()}};
    for (int n = n_min; n <= n_max; ++n)
      for (int s = 0; s < seeds; ++s) {
        Triangulation t = generate(family, n, s, "");
        std::string id = family + "-n" + std::to_string(n) + "-s" + std::to_string(s);
        std::string file = id + ".rot";
        write_rot_file((fs::path(corpus) / file).string(), t.emb());
        manifest["instances"].push_back(json{{"id", id},
                                             {"file", file},
                                             {"family", family},
                                             {"n", t.vertex_count()},
                                             {"seed", s}});
      }
    std::ofstream out(manifest_path);
    out << manifest.dump(2) << '\n';
  }

  const auto& instances = manifest.at("instances");
  std::vector<BatchRow> rows(instances.size());
  std::atomic<size_t> next{0};

  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= instances.size()) return;
      const auto& inst = instances[i];
      BatchRow& row = rows[i];
      row.id = inst.at("id");
      row.seed = inst.value("seed", 0);
      auto start = std::chrono::steady_clock::now();
      try {
        Triangulation t(read_rot_file((fs::path(corpus) / inst.at("file").get<std::string>()).string()));
        row.n = t.vertex_count();
        VerifyOptions opt;
        opt.limits.budget = std::chrono::seconds(budget_secs);
        row.rep = verify_bound(t, opt);
        row.status = "ok";
      } catch (const Timeout&) {
        row.status = "timeout";
      } catch (const Error& e) {
        row.status = "error:" + e.code();
      }
      row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::ostream* out = &std::cout;
  std::ofstream file_out;
  if (!out_csv.empty()) {
    file_out.open(out_csv);
    out = &file_out;
  }
  *out << "# tricirc-batch-v1\n";
  *out << "n,k,bound,case,all_claims_pass,circ,runtime_ms,seed\n";
  bool any_fail = false, any_timeout = false;
  for (const BatchRow& row : rows) {
    if (row.status == "ok") {
      bool pass = row.rep.all_pass();
      any_fail = any_fail || !pass;
      *out << row.rep.n << ',' << row.rep.k << ',' << row.rep.bound << ',' << row.rep.case_id
           << ',' << (pass ? "true" : "false") << ',' << row.rep.circ << ',' << row.runtime_ms
           << ',' << row.seed << '\n';
    } else {
      if (row.status == "timeout") any_timeout = true;
      else any_fail = true;
      *out << row.n << ",-1,-1," << row.status << ",false,-1," << row.runtime_ms << ','
           << row.seed << '\n';
    }
  }
  if (any_fail) return 1;
  if (any_timeout) return 3;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar triangulation circumference toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  int jobs = 1, budget_secs = 60;
  std::uint64_t seed = 0;
  app.add_option("--jobs", jobs, "parallel workers (batch)");
  app.add_option("--budget-secs", budget_secs, "per-search time budget in seconds");
  app.add_option("--seed", seed, "generator seed");

  auto* gen = app.add_subcommand("gen", "generate a triangulation in rot format");
  std::string family, base, out_file = "out.rot", in_file;
  int n = 0;
  gen->add_option("--family", family, "doublewheel|random4c|randome4c|extremal")->required();
  gen->add_option("--n", n, "vertex count (base size n' for extremal)");
  gen->add_option("--base", base, "base graph file for --family extremal");
  gen->add_option("-o,--out", out_file, "output file")->required();

  auto* check = app.add_subcommand("check", "structural report for a rot file");
  check->add_option("-i,--in", in_file, "input rot file")->required();

  auto* circ = app.add_subcommand("circ", "exact circumference / longest good cycle");
  bool good = false;
  circ->add_option("-i,--in", in_file, "input rot file")->required();
  circ->add_flag("--good", good, "search longest good cycle instead");

  auto* verify = app.add_subcommand("verify", "verify the bound machinery on one instance");
  bool all_longest = false;
  std::string json_path;
  verify->add_option("-i,--in", in_file, "input rot file")->required();
  verify->add_flag("--all-longest-good", all_longest, "verify every longest good cycle");
  verify->add_option("--json", json_path, "write the JSON report here");

  auto* batch = app.add_subcommand("batch", "verify a corpus and emit CSV");
  std::string corpus, out_csv;
  int n_min = 0, n_max = -1, seeds_per_n = 1;
  batch->add_option("--corpus", corpus, "corpus directory (manifest.json inside)")->required();
  batch->add_option("-o,--out", out_csv, "CSV output (default: stdout)");
  batch->add_option("--family", family, "generate corpus: family");
  batch->add_option("--n-min", n_min, "generate corpus: smallest size");
  batch->add_option("--n-max", n_max, "generate corpus: largest size");
  batch->add_option("--seeds", seeds_per_n, "generate corpus: seeds per size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(family, n, seed, base, out_file);
    if (check->parsed()) return cmd_check(in_file);
    if (circ->parsed()) return cmd_circ(in_file, good, budget_secs);
    if (verify->parsed()) return cmd_verify(in_file, all_longest, budget_secs, json_path);
    if (batch->parsed())
      return cmd_batch(corpus, out_csv, jobs, budget_secs, family, n_min, n_max, seeds_per_n);
  } catch (const Timeout& e) {
    return fail(e.code(), e.what(), 3);
  } catch (const Error& e) {
    return fail(e.code(), e.what(), 1);
  } catch (const std::exception& e) {
    return fail("Unexpected", e.what(), 1);
  }
  return 2;
}
