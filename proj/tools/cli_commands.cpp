#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "cli.hpp"
#include "crossfam/claims.hpp"
#include "crossfam/document.hpp"
#include "crossfam/oracles.hpp"
#include "crossfam/svg.hpp"

namespace crossfam::cli {

using json = nlohmann::ordered_json;

namespace {

const std::vector<std::string> kConstructions = {
    "elbow",       "elbow-hard", "triangle-grid",          "ham-odd",   "ham-even",           "blades",
    "villanger",   "convex-cycles", "intersecting-triangles", "three-ray", "convex-intersecting",
};

const std::vector<std::string> kOracles = {"ham-max",          "min-avoiding", "longest-matching", "max-crossing",
                                           "max-intersecting", "two-path",     "antichain"};

struct Caps {
  std::size_t cycle_points = 10;
  std::size_t graphs = 512;
  std::size_t bipartite = 8;
  std::size_t general_matching = 12;
  std::size_t antichain = 12;
  std::size_t two_path = 12;
  std::size_t triangles = 4096;
  std::size_t villanger = 8;
  long precision = 4096;

  void add_to(CLI::App* app) {
    app->add_option("--cap-cycle-points", cycle_points, "Largest n for Hamiltonian cycle enumeration");
    app->add_option("--cap-graphs", graphs, "Largest graph count for clique search");
    app->add_option("--cap-bipartite", bipartite, "Largest side for bipartite matching enumeration");
    app->add_option("--cap-general-matching", general_matching, "Largest n for general matching enumeration");
    app->add_option("--cap-antichain", antichain, "Largest n for the antichain oracle");
    app->add_option("--cap-two-path", two_path, "Largest triangle count for 2-path removal search");
    app->add_option("--cap-triangles", triangles, "Largest triangle count for generators");
    app->add_option("--cap-villanger", villanger, "Largest m for the Villanger generator");
    app->add_option("--cap-precision", precision, "Precision ceiling in bits for interval comparisons")
        ->check(CLI::Range(128L, 1L << 20));
  }

  OracleLimits oracle() const {
    OracleLimits l;
    l.max_cycle_points = cycle_points;
    l.max_graphs = graphs;
    l.max_bipartite_matching_side = bipartite;
    l.max_general_matching_points = general_matching;
    l.max_antichain_n = antichain;
    l.max_two_path_triangles = two_path;
    l.precision.ceiling = precision;
    return l;
  }

  ConstructionLimits construction() const {
    ConstructionLimits l;
    l.grid_max_triangles = triangles;
    l.transversal_max_triangles = triangles;
    l.villanger_max_m = villanger;
    l.claim_max_two_path_triangles = two_path;
    l.claim_max_cycle_points = cycle_points;
    l.claim_max_clique_graphs = graphs;
    l.precision.ceiling = precision;
    return l;
  }
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

int require(const std::optional<int>& v, const char* flag, const std::string& construction) {
  if (!v) throw UsageError(construction + " needs " + flag);
  return *v;
}

int exit_code_for(const Error& e, int fallback) {
  switch (e.code()) {
    case ErrorCode::ResourceLimit: return kResourceLimit;
    case ErrorCode::SchemaViolation: return kUsage;
    default: return fallback;
  }
}

struct GenerateArgs {
  std::string construction;
  std::optional<int> m, n, k;
  std::uint64_t seed = 1;
  std::string margin = "1/1000";
  std::string from_file;
  std::string out;
};

Instance build(const GenerateArgs& a, const Caps& caps) {
  const ConstructionLimits limits = caps.construction();
  const std::string& c = a.construction;
  auto points_or_random = [&](GeneralPosition mode, Instance* note) {
    if (!a.from_file.empty()) return points_from_json(read_file(a.from_file));
    int n = require(a.n, "--n (or --from-file)", c);
    if (n < 1) throw UsageError("--n must be positive");
    note->parameters.emplace_back("seed", std::to_string(a.seed));
    return random_points(static_cast<std::size_t>(n), a.seed, mode);
  };
  Instance note;
  Instance inst;
  if (c == "elbow") {
    PointSet ps = points_or_random(GeneralPosition::Orthogonal, &note);
    inst = elbow_family(ps);
  } else if (c == "elbow-hard") {
    inst = elbow_hard_pointset(require(a.m, "--m", c));
  } else if (c == "triangle-grid") {
    inst = crossing_triangles_grid(require(a.m, "--m", c), limits);
  } else if (c == "ham-odd") {
    inst = ham_cycle_max_odd(require(a.m, "--m", c));
  } else if (c == "ham-even") {
    inst = ham_cycle_max_even(require(a.m, "--m", c));
  } else if (c == "blades") {
    inst = blades_pointset(require(a.m, "--m", c), limits);
  } else if (c == "villanger") {
    VillangerOptions opt;
    opt.margin = parse_rational(a.margin);
    opt.limits = limits;
    inst = villanger_pointset(require(a.m, "--m", c), opt);
  } else if (c == "convex-cycles") {
    int k = a.k.value_or(4);
    inst = convex_cycles_family(radial_separated_sets(k, require(a.m, "--m (part size)", c)), k, limits);
  } else if (c == "intersecting-triangles") {
    PointSet ps = points_or_random(GeneralPosition::Strict, &note);
    inst = intersecting_triangles(ps);
  } else if (c == "three-ray") {
    inst = three_ray_pointset(require(a.n, "--n", c), limits);
  } else if (c == "convex-intersecting") {
    PointSet ps = a.from_file.empty() ? convex_groups(require(a.n, "--n", c))
                                      : points_from_json(read_file(a.from_file));
    inst = convex_intersecting_family(ps);
  } else {
    throw UsageError("unknown construction '" + c + "'");
  }
  for (auto& p : note.parameters) inst.parameters.push_back(p);
  return inst;
}

int cmd_generate(const GenerateArgs& a, const Caps& caps, std::ostream& out, std::ostream& err) {
  try {
    Instance inst = build(a, caps);
    write_output(to_json(inst), a.out, out);
    return kPass;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    int code = exit_code_for(e, kConstructionFailed);
    if (e.code() == ErrorCode::InvalidSize) code = kUsage;
    err << (code == kConstructionFailed ? "construction failed" : "error") << " [" << to_string(e.code())
        << "]: " << e.what() << "\n";
    return code;
  }
}

json check_json(const ClaimCheck& c) {
  json j;
  j["description"] = c.claim.description;
  j["verifier"] = c.claim.verifier;
  j["relation"] = to_string(c.claim.relation);
  j["claimed"] = c.claim.value;
  j["computed"] = c.computed;
  j["passed"] = c.passed;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

int cmd_verify(const std::string& file, bool as_json, const Caps& caps, std::ostream& out, std::ostream& err) {
  Instance inst;
  try {
    inst = from_json(read_file(file));
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "schema violation: " << e.what() << "\n";
    return kUsage;
  }
  std::vector<ClaimCheck> checks;
  const OracleLimits limits = caps.oracle();
  for (const Claim& claim : inst.claims) {
    try {
      checks.push_back(check_claim(inst, claim, limits));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ResourceLimit || e.code() == ErrorCode::SchemaViolation) {
        err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
        return exit_code_for(e, kClaimFailed);
      }
      ClaimCheck failed;
      failed.claim = claim;
      failed.detail = std::string(to_string(e.code())) + ": " + e.what();
      checks.push_back(failed);
    }
  }
  bool all = std::all_of(checks.begin(), checks.end(), [](const ClaimCheck& c) { return c.passed; });
  if (as_json) {
    json report;
    report["name"] = inst.name;
    json arr = json::array();
    for (const ClaimCheck& c : checks) arr.push_back(check_json(c));
    report["claims"] = arr;
    report["passed"] = all;
    out << report.dump(2) << "\n";
  } else {
    out << "instance: " << inst.name << "\n";
    out << std::left << std::setw(34) << "verifier" << std::setw(5) << "rel" << std::right << std::setw(10)
        << "claimed" << std::setw(10) << "computed" << "  result\n";
    for (const ClaimCheck& c : checks) {
      out << std::left << std::setw(34) << c.claim.verifier << std::setw(5) << to_string(c.claim.relation)
          << std::right << std::setw(10) << c.claim.value << std::setw(10) << c.computed << "  "
          << (c.passed ? "PASS" : "FAIL");
      if (!c.detail.empty()) out << "  (" << c.detail << ")";
      out << "\n";
    }
    out << (all ? "all claims pass" : "some claims fail") << "\n";
  }
  return all ? kPass : kClaimFailed;
}

struct OracleArgs {
  std::string name;
  std::string file;
  std::optional<int> n;
  std::size_t family = 0;
  std::string mode = "bipartite";
  bool timing = true;
};

json cycle_json(const HamiltonianCycle& c) { return json(c.order); }

int cmd_oracle(const OracleArgs& a, const Caps& caps, std::ostream& out, std::ostream& err) {
  const OracleLimits limits = caps.oracle();
  json report;
  report["oracle"] = a.name;
  auto start = std::chrono::steady_clock::now();
  try {
    std::int64_t value = 0;
    std::string verifier;
    std::vector<Claim> claims;
    if (a.name == "antichain") {
      int n = require(a.n, "--n", a.name);
      value = max_antichain_3d(n, limits);
      report["n"] = n;
      report["value"] = value;
      report["bound"] = antichain_bound(n);
      report["agrees"] = value == antichain_bound(n);
    } else {
      if (a.file.empty()) throw UsageError(a.name + " needs --file");
      Instance inst = from_json(read_file(a.file));
      report["instance"] = inst.name;
      if (a.name == "ham-max") {
        CycleSearchResult r = enumerate_hamiltonian_max_crossings(inst.points, limits);
        value = static_cast<std::int64_t>(r.value);
        report["value"] = value;
        report["witness"] = cycle_json(r.witness);
        report["cycles"] = r.cycles;
        verifier = "max_cycle_crossings";
      } else if (a.name == "min-avoiding") {
        CycleSearchResult r = min_avoiding_pairs(inst.points, limits);
        value = static_cast<std::int64_t>(r.value);
        report["value"] = value;
        report["witness"] = cycle_json(r.witness);
        report["cycles"] = r.cycles;
        verifier = "min_avoiding_pairs";
      } else if (a.name == "longest-matching") {
        if (a.mode != "bipartite" && a.mode != "general") throw UsageError("--mode must be bipartite or general");
        MatchingMode mode = a.mode == "bipartite" ? MatchingMode::BipartiteAB : MatchingMode::General;
        MatchingResult r = longest_perfect_matching_bruteforce(inst.points, mode, limits);
        value = static_cast<std::int64_t>(r.crossings);
        json pairs = json::array();
        for (auto [i, j] : r.pairs) {
          if (inst.points.labels.empty())
            pairs.push_back(json::array({i, j}));
          else
            pairs.push_back(json::array({inst.points.labels[i], inst.points.labels[j]}));
        }
        report["witness"] = pairs;
        char len[64];
        std::snprintf(len, sizeof len, "%.12g", r.length);
        report["length"] = len;
        report["crossings"] = r.crossings;
        report["crossing_free"] = r.crossing_free;
        report["candidates"] = r.candidates;
        report["precision_bits"] = r.precision_used;
        verifier = "longest_matching_crossings";
      } else if (a.name == "max-crossing" || a.name == "max-intersecting") {
        if (a.family >= inst.families.size()) throw UsageError("--family out of range");
        Disjointness mode = a.name == "max-crossing" ? Disjointness::Vertex : Disjointness::Edge;
        CliqueResult r = max_crossing_subfamily(inst.families[a.family].members, mode, limits);
        value = static_cast<std::int64_t>(r.size);
        report["value"] = value;
        report["witness"] = r.witness;
        verifier = a.name == "max-crossing" ? "max_crossing_subfamily" : "max_intersecting_subfamily";
      } else if (a.name == "two-path") {
        if (a.family >= inst.families.size()) throw UsageError("--family out of range");
        TwoPathResult r = best_2path_removal(inst.families[a.family], limits);
        value = static_cast<std::int64_t>(r.value);
        report["value"] = value;
        report["removal"] = r.removal;
        report["witness"] = r.witness;
        verifier = "best_2path_removal";
      } else {
        throw UsageError("unknown oracle '" + a.name + "'");
      }
      json agreement = json::array();
      bool all = true;
      for (const Claim& c : inst.claims) {
        if (c.verifier != verifier) continue;
        if ((verifier == "max_crossing_subfamily" || verifier == "max_intersecting_subfamily" ||
             verifier == "best_2path_removal") &&
            c.family != a.family)
          continue;
        bool ok = relation_holds(value, c.relation, c.value);
        all = all && ok;
        agreement.push_back(json{{"description", c.description},
                                 {"relation", to_string(c.relation)},
                                 {"claimed", c.value},
                                 {"agrees", ok}});
      }
      report["claims"] = agreement;
      report["agrees"] = all;
    }
    if (a.timing) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
      report["wall_time_ms"] = ms.count();
    }
    out << report.dump(2) << "\n";
    return report["agrees"].get<bool>() ? kPass : kClaimFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::SharedVertex:
      case ErrorCode::KindMismatch:
      case ErrorCode::InvalidSize:
      case ErrorCode::IndexOutOfRange: return kUsage;
      default: return exit_code_for(e, kClaimFailed);
    }
  }
}

int cmd_render(const std::string& file, const std::string& path, const RenderOptions& opt, std::ostream& out,
               std::ostream& err) {
  try {
    Instance inst = from_json(read_file(file));
    write_output(render_svg(inst, opt), path, out);
    return kPass;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e, kUsage);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crossing families of geometric graphs: generators, verifiers and oracles", "crossfam"};
  app.require_subcommand(1);
  Caps caps;

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "Emit an instance document");
  generate->add_option("construction", gen.construction, "Construction name")
      ->required()
      ->check(CLI::IsMember(kConstructions));
  generate->add_option("--m", gen.m, "Size parameter m");
  generate->add_option("--n", gen.n, "Point count or size parameter n");
  generate->add_option("--k", gen.k, "Number of parts (convex-cycles)");
  generate->add_option("--seed", gen.seed, "Seed for random point sets");
  generate->add_option("--margin", gen.margin, "Certified slack margin (rational)");
  generate->add_option("--from-file", gen.from_file, "Read the point set from a JSON file");
  generate->add_option("--out", gen.out, "Output file (default: standard output)");
  caps.add_to(generate);

  std::string verify_file;
  bool verify_json = false;
  CLI::App* verify = app.add_subcommand("verify", "Re-check every claim of a document");
  verify->add_option("--file", verify_file, "Instance document")->required();
  verify->add_flag("--json", verify_json, "Machine-readable report");
  caps.add_to(verify);

  OracleArgs orc;
  bool no_timing = false;
  CLI::App* oracle = app.add_subcommand("oracle", "Run a brute-force oracle");
  oracle->add_option("name", orc.name, "Oracle name")->required()->check(CLI::IsMember(kOracles));
  oracle->add_option("--file", orc.file, "Instance document");
  oracle->add_option("--n", orc.n, "Size for the antichain oracle");
  oracle->add_option("--family", orc.family, "Family index");
  oracle->add_option("--mode", orc.mode, "Matching mode: bipartite or general");
  oracle->add_flag("--no-timing", no_timing, "Omit wall time from the report");
  caps.add_to(oracle);

  std::string render_file, render_out;
  RenderOptions ropt;
  bool no_crossings = false, no_labels = false;
  CLI::App* render = app.add_subcommand("render", "Draw a document as SVG");
  render->add_option("--file", render_file, "Instance document")->required();
  render->add_option("--out", render_out, "Output file (default: standard output)");
  render->add_option("--width", ropt.width_px, "Width in pixels")->check(CLI::PositiveNumber);
  render->add_flag("--no-crossings", no_crossings, "Do not mark crossings");
  render->add_flag("--no-labels", no_labels, "Do not draw point labels");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kPass : kUsage;
  }

  if (generate->parsed()) return cmd_generate(gen, caps, out, err);
  if (verify->parsed()) return cmd_verify(verify_file, verify_json, caps, out, err);
  if (oracle->parsed()) {
    orc.timing = !no_timing;
    return cmd_oracle(orc, caps, out, err);
  }
  ropt.mark_crossings = !no_crossings;
  ropt.show_labels = !no_labels;
  return cmd_render(render_file, render_out, ropt, out, err);
}

}  // namespace crossfam::cli
