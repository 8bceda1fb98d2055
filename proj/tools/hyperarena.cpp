// Command-line front end: gen, compete, classify, verify, export.
//
// Exit codes: 0 ok, 1 validation error, 2 check failure, 3 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hyperarena/hyperarena.hpp"
#include "hyperarena/io.hpp"

namespace ha = hyperarena;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitCheckFailed = 2;
constexpr int kExitBudget = 3;

// Largest (i,j) bound accepted; beyond it the graphs collapse to C_{1,2} anyway.
constexpr int kMaxStepBound = 3;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw ha::Error(ha::ErrorCode::Format, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

// k = 2 inputs are read as ordinary tournaments.
ha::Hypertournament load_instance(const ha::Json& j) {
  const bool tournament = j.is_object() && j.contains("k") && j.at("k").is_number_integer() && j.at("k").get<int>() == 2;
  return ha::instance_from_json(j, {.tournament_mode = tournament});
}

ha::SimpleGraph load_graph(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] != '{') return ha::graph_from_dot(text);
  return ha::graph_from_json(ha::parse_json(text));
}

std::uint64_t budget_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("HYPERARENA_BUDGET");
  if (!env || !*env) return fallback;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  throw ha::Error(ha::ErrorCode::BadBound, std::string("HYPERARENA_BUDGET=") + env);
}

ha::VertexId parse_label(const std::string& s, int n) {
  std::size_t used = 0;
  int label = 0;
  try {
    label = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || used == 0) throw ha::Error(ha::ErrorCode::Format, "bad vertex label '" + s + "'");
  if (label < 1 || label > n) throw ha::Error(ha::ErrorCode::VertexOutOfRange, "label " + s);
  return ha::VertexId::from_label(label);
}

struct GenArgs {
  std::string kind;
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  bool figure_variant = false;
};

int run_gen(const GenArgs& a) {
  const auto o = a.figure_variant ? ha::ReplacedArcOrientation::Figure : ha::ReplacedArcOrientation::Text;
  ha::Hypertournament t = [&] {
    if (a.kind == "transitive") return ha::transitive(a.n, a.k);
    if (a.kind == "t1") return ha::t1(a.n, a.k, o);
    if (a.kind == "t2") return ha::t2(a.n, a.k, o);
    if (a.kind == "t3") return ha::t3(a.n, a.k);
    return ha::random_hypertournament(a.n, a.k, a.seed);
  }();
  std::cout << ha::instance_to_json(t).dump() << "\n";
  return kExitOk;
}

struct CompeteArgs {
  std::string input;
  int i = 1;
  int j = 2;
  bool fast = false;
  std::string witness;
  bool dot = false;
};

int run_compete(const CompeteArgs& a) {
  if (a.fast && (a.i != 1 || a.j != 2)) throw ha::Error(ha::ErrorCode::BadBound, "--fast only computes (i,j) = (1,2)");
  const auto t = load_instance(ha::parse_json(read_input(a.input)));
  if (!a.witness.empty()) {
    const auto comma = a.witness.find(',');
    if (comma == std::string::npos) throw ha::Error(ha::ErrorCode::Format, "--witness expects x,y");
    const auto x = parse_label(a.witness.substr(0, comma), t.n());
    const auto y = parse_label(a.witness.substr(comma + 1), t.n());
    std::cout << ha::witness_to_json(t, x, y, a.i, a.j, ha::competition_witness(t, x, y, a.i, a.j)).dump() << "\n";
    return kExitOk;
  }
  const auto g = a.fast ? ha::competition_graph_12_fast(t) : ha::competition_graph(t, a.i, a.j);
  if (a.dot)
    std::cout << ha::graph_to_dot(g);
  else
    std::cout << ha::graph_to_json(g).dump() << "\n";
  return kExitOk;
}

struct ClassifyArgs {
  std::string input;
  bool json = false;
};

int run_classify(const ClassifyArgs& a) {
  const auto shape = ha::classify_shape(load_graph(read_input(a.input)));
  if (!a.json) {
    std::cout << ha::shape_to_string(shape) << "\n";
    return kExitOk;
  }
  ha::Json j;
  j["tag"] = std::string(ha::to_string(shape.tag));
  ha::Json missing = ha::Json::array();
  for (const auto& e : shape.missing_edges) missing.push_back(ha::Json::array({e.u.label(), e.v.label()}));
  j["missing_edges"] = std::move(missing);
  j["isolated_vertex"] = shape.isolated_vertex ? ha::Json(shape.isolated_vertex->label()) : ha::Json(nullptr);
  std::cout << j.dump() << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string source = "all";
  int n = 0;
  int k = 0;
  std::string seeds = "0..99999";
  std::vector<std::string> checks;
  unsigned jobs = 1;
  std::uint64_t resume = 0;
  std::uint64_t end = UINT64_MAX;
  std::string input;
  std::string ground_truth = "definition";
  std::uint64_t budget = 0;
  std::size_t max_failures = 64;
  bool timing = false;
};

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots != std::string::npos) {
      std::size_t u1 = 0, u2 = 0;
      const std::string lo = s.substr(0, dots), hi = s.substr(dots + 2);
      const auto a = std::stoull(lo, &u1), b = std::stoull(hi, &u2);
      if (u1 == lo.size() && u2 == hi.size() && a <= b && b < UINT64_MAX) return {a, b + 1};
    }
  } catch (const std::exception&) {
  }
  throw ha::Error(ha::ErrorCode::Format, "--seeds expects A..B with A <= B, got '" + s + "'");
}

// A file source holds one instance object, an array of them, or one object per line.
std::vector<ha::Hypertournament> load_instances(const std::string& text) {
  std::vector<ha::Hypertournament> out;
  auto take = [&](const ha::Json& j) {
    if (j.is_array()) {
      for (const auto& e : j) out.push_back(load_instance(e));
    } else {
      out.push_back(load_instance(j));
    }
  };
  try {
    take(ha::Json::parse(text));
    return out;
  } catch (const nlohmann::json::parse_error&) {
  }
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);)
    if (line.find_first_not_of(" \t\r") != std::string::npos) take(ha::parse_json(line));
  return out;
}

int run_verify(const VerifyArgs& a) {
  ha::SweepOptions opt;
  opt.jobs = a.jobs;
  opt.max_failures_kept = a.max_failures;
  opt.budget = a.budget ? a.budget : budget_from_env(ha::kDefaultEnumerationBudget);
  opt.ground_truth = a.ground_truth == "lemma" ? ha::GraphBuilder::Lemma : ha::GraphBuilder::Definition;
  if (!a.checks.empty()) {
    opt.checks.clear();
    for (const auto& name : a.checks) {
      auto c = ha::check_from_string(name);
      if (!c) throw ha::Error(ha::ErrorCode::Format, "unknown check '" + name + "'");
      opt.checks.push_back(*c);
    }
  }

  ha::SweepSource src;
  if (a.source == "all") {
    src = ha::SweepSource::all(a.n, a.k, a.resume, a.end);
  } else if (a.source == "random") {
    auto [lo, hi] = parse_seed_range(a.seeds);
    src = ha::SweepSource::random(a.n, a.k, std::max(lo, a.resume), hi);
  } else {
    src.kind = ha::SweepSource::Kind::Instances;
    src.instances = load_instances(read_input(a.input));
    src.begin = a.resume;
    src.end = a.end;
  }

  const auto report = ha::sweep(src, opt);
  std::cout << ha::report_to_json(report, a.timing).dump(2) << "\n";
  std::cerr << ha::report_table(report);
  return report.passed() ? kExitOk : kExitCheckFailed;
}

struct ExportArgs {
  std::string input;
  bool dot = false;
  bool json = false;
};

int run_export(const ExportArgs& a) {
  const auto g = load_graph(read_input(a.input));
  if (a.json)
    std::cout << ha::graph_to_json(g).dump() << "\n";
  else
    std::cout << ha::graph_to_dot(g);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-hypertournament competition graphs"};
  app.require_subcommand(0, 1);
  app.set_version_flag("--version", "hyperarena format " + std::string(ha::kFormatVersion));

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "emit an instance as JSON");
  gen_cmd->add_option("--kind", gen.kind)->required()->check(CLI::IsMember({"transitive", "t1", "t2", "t3", "random"}));
  gen_cmd->add_option("--n", gen.n)->required();
  gen_cmd->add_option("--k", gen.k)->required();
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_flag("--figure-variant", gen.figure_variant, "t1/t2: keep v1 before v2 in the replaced arcs");

  CompeteArgs compete;
  auto* compete_cmd = app.add_subcommand("compete", "compute C_{i,j} of an instance");
  compete_cmd->add_option("input", compete.input, "instance JSON (default stdin)");
  compete_cmd->add_option("--i", compete.i)->check(CLI::Range(1, kMaxStepBound));
  compete_cmd->add_option("--j", compete.j)->check(CLI::Range(1, kMaxStepBound));
  compete_cmd->add_flag("--fast", compete.fast, "missing-edge characterization, (1,2) only");
  compete_cmd->add_option("--witness", compete.witness, "print the witness pair for x,y");
  compete_cmd->add_flag("--dot", compete.dot, "emit Graphviz DOT");

  ClassifyArgs classify;
  auto* classify_cmd = app.add_subcommand("classify", "name the shape of a graph");
  classify_cmd->add_option("input", classify.input, "graph JSON or DOT (default stdin)");
  classify_cmd->add_flag("--json", classify.json);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "sweep instances through the checks");
  verify_cmd->add_option("--source", verify.source)->check(CLI::IsMember({"all", "random", "file"}));
  verify_cmd->add_option("--n", verify.n);
  verify_cmd->add_option("--k", verify.k);
  verify_cmd->add_option("--seeds", verify.seeds, "inclusive seed range A..B");
  verify_cmd->add_option("--checks", verify.checks)->delimiter(',');
  verify_cmd->add_option("--jobs", verify.jobs)->check(CLI::Range(1u, 1024u));
  verify_cmd->add_option("--resume", verify.resume, "first enumeration index or seed");
  verify_cmd->add_option("--end", verify.end, "one past the last enumeration index");
  verify_cmd->add_option("--input", verify.input, "instance file for --source file (default stdin)");
  verify_cmd->add_option("--ground-truth", verify.ground_truth)->check(CLI::IsMember({"definition", "lemma"}));
  verify_cmd->add_option("--budget", verify.budget, "enumeration budget (overrides HYPERARENA_BUDGET)");
  verify_cmd->add_option("--max-failures", verify.max_failures);
  verify_cmd->add_flag("--timing", verify.timing, "include elapsed_seconds in the JSON");

  ExportArgs exp;
  auto* export_cmd = app.add_subcommand("export", "convert a graph between JSON and DOT");
  export_cmd->add_option("input", exp.input);
  auto* dot_flag = export_cmd->add_flag("--dot", exp.dot);
  auto* json_flag = export_cmd->add_flag("--json", exp.json);
  dot_flag->excludes(json_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*compete_cmd) return run_compete(compete);
    if (*classify_cmd) return run_classify(classify);
    if (*verify_cmd) {
      if (verify.source != "file" && (verify.n == 0 || verify.k == 0))
        throw ha::Error(ha::ErrorCode::Format, "--n and --k are required for --source " + verify.source);
      return run_verify(verify);
    }
    if (*export_cmd) return run_export(exp);
    std::cerr << app.help();
    return kExitValidation;
  } catch (const ha::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ha::ErrorCode::BudgetExceeded ? kExitBudget : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
