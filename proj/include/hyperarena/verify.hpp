#pragma once

#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "hyperarena/competition.hpp"
#include "hyperarena/constructions.hpp"
#include "hyperarena/graph.hpp"
#include "hyperarena/hypertournament.hpp"
#include "hyperarena/paths.hpp"

namespace hyperarena {

enum class Check {
  MissingEdgeLemma,  // lemma-based and definition-based C_{1,2} agree pair by pair
  ComplementLemmas,  // complement has no 2K_2, no K_3, no K_{1,3} outside the sink shape
  ShapeTheorems,     // C_{1,2} lies in the palette; strong instances avoid the sink shape
  IjCollapse,        // C_{i,j} = C_{1,2} for i >= 1, j >= 2
  C11Subgraph,       // C_{1,1} is a subgraph of C_{1,2}
  SinkShape,         // a sink forces K_{n-1} + K_1 with the sink isolated
  StrongOracle,      // shipped strongness equals exhaustive distinct-arc path strongness
};

inline constexpr std::array<Check, 7> kAllChecks = {Check::MissingEdgeLemma, Check::ComplementLemmas, Check::ShapeTheorems,
                                                    Check::IjCollapse,       Check::C11Subgraph,      Check::SinkShape,
                                                    Check::StrongOracle};

constexpr std::string_view to_string(Check c) {
  switch (c) {
    case Check::MissingEdgeLemma: return "missing-edge-lemma";
    case Check::ComplementLemmas: return "complement-lemmas";
    case Check::ShapeTheorems: return "shape-theorems";
    case Check::IjCollapse: return "ij-collapse";
    case Check::C11Subgraph: return "c11-subgraph";
    case Check::SinkShape: return "sink-shape";
    case Check::StrongOracle: return "strong-oracle";
  }
  return "unknown";
}

inline std::optional<Check> check_from_string(std::string_view s) {
  for (Check c : kAllChecks)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

// Which builder supplies the C_{1,2} that shape/complement/sink checks inspect.
enum class GraphBuilder { Definition, Lemma };

inline constexpr std::array<std::pair<int, int>, 3> kDefaultCollapsePairs = {{{2, 2}, {1, 3}, {3, 2}}};

struct CheckResult {
  bool passed = true;
  std::string detail;

  static CheckResult ok() { return {}; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

namespace detail {

inline std::string pair_name(VertexId x, VertexId y) {
  return "v" + std::to_string(x.label()) + "v" + std::to_string(y.label());
}

inline void require_theorem_scope(const Hypertournament& t) {
  if (t.k() < 3 || t.k() > t.n() - 1)
    throw Error(ErrorCode::ArityOutOfRange, "theorem checks need 3 <= k <= n-1, got k=" + std::to_string(t.k()));
}

}  // namespace detail

// Per-instance cache of the derived objects the checks share.
class InstanceAnalysis {
 public:
  explicit InstanceAnalysis(const Hypertournament& t, GraphBuilder ground_truth = GraphBuilder::Definition)
      : t_(t), ground_truth_(ground_truth) {}

  const Hypertournament& instance() const { return t_; }

  const SimpleGraph& c12_definition() { return graph(1, 2); }
  const SimpleGraph& c12_lemma() {
    if (!c12_lemma_) c12_lemma_ = competition_graph_12_fast(t_);
    return *c12_lemma_;
  }
  const SimpleGraph& c12() { return ground_truth_ == GraphBuilder::Definition ? c12_definition() : c12_lemma(); }

  const SimpleGraph& graph(int i, int j) {
    auto it = graphs_.find({i, j});
    if (it == graphs_.end()) it = graphs_.emplace(std::pair{i, j}, competition_graph(t_, i, j)).first;
    return it->second;
  }

  const ShapeClass& shape() {
    if (!shape_) shape_ = classify_shape(c12());
    return *shape_;
  }

  bool strong() {
    if (!strong_) strong_ = is_strong(t_);
    return *strong_;
  }

  std::optional<VertexId> sink() const {
    for (int i = 0; i < t_.n(); ++i) {
      const VertexId v(static_cast<std::uint32_t>(i));
      if (t_.out_neighbourhood(v).empty()) return v;
    }
    return std::nullopt;
  }

 private:
  const Hypertournament& t_;
  GraphBuilder ground_truth_;
  std::map<std::pair<int, int>, SimpleGraph> graphs_;
  std::optional<SimpleGraph> c12_lemma_;
  std::optional<ShapeClass> shape_;
  std::optional<bool> strong_;
};

// Re-derives the defining predicate of a reported missing-edge case.
inline bool missing_case_holds(const Hypertournament& t, VertexId x, VertexId y, const MissingEdgeCase& c) {
  const VertexSet nx = t.out_neighbourhood(x), ny = t.out_neighbourhood(y);
  switch (c.tag) {
    case MissingCase::SinkX: return nx.empty();
    case MissingCase::SinkY: return ny.empty();
    case MissingCase::SoleOutY: return nx == VertexSet::single(y);
    case MissingCase::SoleOutX: return ny == VertexSet::single(x);
    case MissingCase::StarArc: {
      if (!c.witness_arc) return false;
      const ArcId a = *c.witness_arc;
      return t.arcs_star(x, y) == ArcSet(t.arc_count(), {a}) &&
             t.out_neighbourhood_excluding_arc(x, a).subset_of(VertexSet::single(y)) &&
             t.out_neighbourhood_excluding_arc(y, a).subset_of(VertexSet::single(x));
    }
    case MissingCase::NotMissing: return true;
  }
  return false;
}

inline CheckResult check_missing_edge_lemma(InstanceAnalysis& a) {
  const auto& t = a.instance();
  detail::require_theorem_scope(t);
  const SimpleGraph& def = a.c12_definition();
  for (int i = 0; i < t.n(); ++i)
    for (int j = i + 1; j < t.n(); ++j) {
      const VertexId x(static_cast<std::uint32_t>(i)), y(static_cast<std::uint32_t>(j));
      const MissingEdgeCase c = missing_edge_case_12(t, x, y);
      const bool lemma_edge = c.tag == MissingCase::NotMissing;
      if (lemma_edge != def.has_edge(x, y))
        return CheckResult::fail("pair " + detail::pair_name(x, y) + ": lemma case " + std::string(to_string(c.tag)) +
                                 ", definition says " + (def.has_edge(x, y) ? "edge" : "no edge"));
      if (!missing_case_holds(t, x, y, c))
        return CheckResult::fail("pair " + detail::pair_name(x, y) + ": case " + std::string(to_string(c.tag)) + " does not hold");
    }
  return CheckResult::ok();
}

inline CheckResult check_complement_lemmas(InstanceAnalysis& a) {
  detail::require_theorem_scope(a.instance());
  const SimpleGraph comp = complement(a.c12());
  if (auto p = has_disjoint_edge_pair(comp))
    return CheckResult::fail("complement has disjoint edges " + detail::pair_name(p->first.u, p->first.v) + ", " +
                             detail::pair_name(p->second.u, p->second.v));
  if (auto tri = has_triangle(comp))
    return CheckResult::fail("complement has triangle v" + std::to_string((*tri)[0].label()) + "v" +
                             std::to_string((*tri)[1].label()) + "v" + std::to_string((*tri)[2].label()));
  if (auto claw = has_claw(comp); claw && a.shape().tag != ShapeTag::CliquePlusIsolated)
    return CheckResult::fail("complement has claw centred at v" + std::to_string(claw->center.label()) + " but shape is " +
                             std::string(to_string(a.shape().tag)));
  return CheckResult::ok();
}

inline CheckResult check_shape_theorems(InstanceAnalysis& a) {
  detail::require_theorem_scope(a.instance());
  const ShapeTag tag = a.shape().tag;
  const bool in_palette = tag == ShapeTag::Complete || tag == ShapeTag::CompleteMinusP2 || tag == ShapeTag::CompleteMinusP3 ||
                          tag == ShapeTag::CliquePlusIsolated;
  if (!in_palette) return CheckResult::fail("C12 shape " + std::string(to_string(tag)) + " outside the palette");
  if (a.strong() && tag == ShapeTag::CliquePlusIsolated) return CheckResult::fail("strong instance with shape CliquePlusIsolated");
  return CheckResult::ok();
}

inline CheckResult check_ij_collapse(InstanceAnalysis& a, std::span<const std::pair<int, int>> pairs) {
  detail::require_theorem_scope(a.instance());
  const SimpleGraph& base = a.c12_definition();
  for (auto [i, j] : pairs) {
    if (i < 1 || j < 2) continue;
    if (a.graph(i, j) != base)
      return CheckResult::fail("C" + std::to_string(i) + "," + std::to_string(j) + " differs from C1,2");
  }
  return CheckResult::ok();
}

inline CheckResult check_c11_subgraph(InstanceAnalysis& a) {
  if (!a.graph(1, 1).subgraph_of(a.c12_definition())) return CheckResult::fail("C1,1 has an edge outside C1,2");
  return CheckResult::ok();
}

inline CheckResult check_sink_shape(InstanceAnalysis& a) {
  detail::require_theorem_scope(a.instance());
  auto s = a.sink();
  if (!s) return CheckResult::ok();
  const ShapeClass& shape = a.shape();
  if (shape.tag != ShapeTag::CliquePlusIsolated || shape.isolated_vertex != s)
    return CheckResult::fail("sink v" + std::to_string(s->label()) + " but shape is " + std::string(to_string(shape.tag)));
  return CheckResult::ok();
}

inline CheckResult check_strong_oracle(InstanceAnalysis& a) {
  const bool shipped = a.strong();
  const bool exhaustive = is_strong_exhaustive(a.instance());
  if (shipped != exhaustive)
    return CheckResult::fail(std::string("is_strong says ") + (shipped ? "strong" : "not strong") + ", path search says " +
                             (exhaustive ? "strong" : "not strong"));
  return CheckResult::ok();
}

inline CheckResult run_check(InstanceAnalysis& a, Check c) {
  switch (c) {
    case Check::MissingEdgeLemma: return check_missing_edge_lemma(a);
    case Check::ComplementLemmas: return check_complement_lemmas(a);
    case Check::ShapeTheorems: return check_shape_theorems(a);
    case Check::IjCollapse: return check_ij_collapse(a, kDefaultCollapsePairs);
    case Check::C11Subgraph: return check_c11_subgraph(a);
    case Check::SinkShape: return check_sink_shape(a);
    case Check::StrongOracle: return check_strong_oracle(a);
  }
  return CheckResult::fail("unknown check");
}

inline CheckResult check_missing_edge_lemma(const Hypertournament& t) {
  InstanceAnalysis a(t);
  return check_missing_edge_lemma(a);
}
inline CheckResult check_complement_lemmas(const Hypertournament& t) {
  InstanceAnalysis a(t);
  return check_complement_lemmas(a);
}
inline CheckResult check_shape_theorems(const Hypertournament& t) {
  InstanceAnalysis a(t);
  return check_shape_theorems(a);
}
inline CheckResult check_ij_collapse(const Hypertournament& t, std::span<const std::pair<int, int>> pairs) {
  InstanceAnalysis a(t);
  return check_ij_collapse(a, pairs);
}
inline CheckResult check_sink_shape(const Hypertournament& t) {
  InstanceAnalysis a(t);
  return check_sink_shape(a);
}

// A caller-supplied check run alongside the built-in ones.
struct NamedCheck {
  std::string name;
  std::function<CheckResult(InstanceAnalysis&)> run;
};

struct SweepSource {
  enum class Kind { Enumeration, RandomSeeds, Instances };

  Kind kind = Kind::Enumeration;
  int n = 0;
  int k = 0;
  std::uint64_t begin = 0;  // enumeration index or seed
  std::uint64_t end = UINT64_MAX;
  std::vector<Hypertournament> instances;

  static SweepSource all(int n, int k, std::uint64_t begin = 0, std::uint64_t end = UINT64_MAX) {
    return {Kind::Enumeration, n, k, begin, end, {}};
  }
  static SweepSource random(int n, int k, std::uint64_t seed_begin, std::uint64_t seed_end) {
    return {Kind::RandomSeeds, n, k, seed_begin, seed_end, {}};
  }
  static SweepSource list(std::vector<Hypertournament> ts) { return {Kind::Instances, 0, 0, 0, ts.size(), std::move(ts)}; }
};

struct SweepOptions {
  std::vector<Check> checks{kAllChecks.begin(), kAllChecks.end()};
  std::vector<NamedCheck> extra_checks;
  unsigned jobs = 1;
  GraphBuilder ground_truth = GraphBuilder::Definition;
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::size_t max_failures_kept = 64;
  std::uint64_t chunk_size = 2048;
};

struct Failure {
  std::uint64_t index;  // enumeration index, seed, or list position
  Hypertournament instance;
  std::string check;
  std::string detail;
};

struct VerificationReport {
  std::string source;
  int n = 0;
  int k = 0;
  std::uint64_t first_index = 0;
  std::uint64_t end_index = 0;
  std::uint64_t instance_count = 0;
  std::uint64_t strong_count = 0;
  std::uint64_t dominance_strong_count = 0;  // strongly connected dominance digraph; >= strong_count
  std::map<ShapeTag, std::uint64_t> shape_histogram;
  std::map<MissingCase, std::uint64_t> missing_case_histogram;
  std::vector<std::string> checks_run;
  std::uint64_t failure_count = 0;
  std::vector<Failure> failures;  // the earliest max_failures_kept, in index order
  double elapsed_seconds = 0.0;

  bool passed() const { return failure_count == 0; }

  // Appends `later`, which must cover the indices following this report's.
  void merge(const VerificationReport& later, std::size_t max_failures_kept) {
    instance_count += later.instance_count;
    strong_count += later.strong_count;
    dominance_strong_count += later.dominance_strong_count;
    for (auto [tag, c] : later.shape_histogram) shape_histogram[tag] += c;
    for (auto [tag, c] : later.missing_case_histogram) missing_case_histogram[tag] += c;
    failure_count += later.failure_count;
    for (const auto& f : later.failures)
      if (failures.size() < max_failures_kept) failures.push_back(f);
  }
};

namespace detail {

inline void analyse_into(VerificationReport& r, std::uint64_t index, const Hypertournament& t, const SweepOptions& opt) {
  InstanceAnalysis a(t, opt.ground_truth);
  ++r.instance_count;
  ++r.shape_histogram[a.shape().tag];
  if (a.strong()) ++r.strong_count;
  if (is_dominance_strong(t)) ++r.dominance_strong_count;
  for (int i = 0; i < t.n(); ++i)
    for (int j = i + 1; j < t.n(); ++j) {
      auto c = missing_edge_case_12(t, VertexId(static_cast<std::uint32_t>(i)), VertexId(static_cast<std::uint32_t>(j)));
      if (c.tag != MissingCase::NotMissing) ++r.missing_case_histogram[c.tag];
    }
  auto record = [&](std::string_view name, const CheckResult& res) {
    if (res.passed) return;
    ++r.failure_count;
    if (r.failures.size() < opt.max_failures_kept) r.failures.push_back({index, t, std::string(name), res.detail});
  };
  for (Check c : opt.checks) record(to_string(c), run_check(a, c));
  for (const auto& nc : opt.extra_checks) record(nc.name, nc.run(a));
}

}  // namespace detail

// Runs the selected checks over every instance of `source`. The report is identical
// for any `jobs` value apart from elapsed_seconds.
inline VerificationReport sweep(const SweepSource& source, const SweepOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  std::optional<Enumeration> enumeration;
  std::uint64_t end = source.end;
  switch (source.kind) {
    case SweepSource::Kind::Enumeration:
      if (source.k < 3) throw Error(ErrorCode::ArityOutOfRange, "sweeps need 3 <= k <= n-1");
      enumeration.emplace(source.n, source.k, opt.budget);
      end = std::min(end, enumeration->size());
      report.source = "all";
      break;
    case SweepSource::Kind::RandomSeeds:
      if (source.k < 3) throw Error(ErrorCode::ArityOutOfRange, "sweeps need 3 <= k <= n-1");
      detail::check_generator_arity(source.n, source.k, 3);
      report.source = "random";
      break;
    case SweepSource::Kind::Instances:
      end = std::min<std::uint64_t>(end, source.instances.size());
      report.source = "file";
      break;
  }
  report.n = source.n;
  report.k = source.k;
  if (source.kind == SweepSource::Kind::Instances && !source.instances.empty()) {
    report.n = source.instances.front().n();
    report.k = source.instances.front().k();
  }
  const std::uint64_t begin = std::min(source.begin, end);
  report.first_index = begin;
  report.end_index = end;
  for (Check c : opt.checks) report.checks_run.emplace_back(to_string(c));
  for (const auto& nc : opt.extra_checks) report.checks_run.push_back(nc.name);

  const std::uint64_t chunk = std::max<std::uint64_t>(1, opt.chunk_size);
  const std::uint64_t chunks = (end - begin + chunk - 1) / chunk;
  std::vector<VerificationReport> partial(static_cast<std::size_t>(chunks));
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto work = [&] {
    try {
      for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
        VerificationReport& part = partial[static_cast<std::size_t>(c)];
        const std::uint64_t lo = begin + c * chunk;
        const std::uint64_t hi = std::min(end, lo + chunk);
        switch (source.kind) {
          case SweepSource::Kind::Enumeration:
            enumeration->for_each(lo, hi, [&](std::uint64_t idx, const Hypertournament& t) { detail::analyse_into(part, idx, t, opt); });
            break;
          case SweepSource::Kind::RandomSeeds:
            for (std::uint64_t s = lo; s < hi; ++s) detail::analyse_into(part, s, random_hypertournament(source.n, source.k, s), opt);
            break;
          case SweepSource::Kind::Instances:
            for (std::uint64_t s = lo; s < hi; ++s) detail::analyse_into(part, s, source.instances[static_cast<std::size_t>(s)], opt);
            break;
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next.store(chunks);
    }
  };

  const unsigned jobs = std::max(1u, opt.jobs);
  std::vector<std::thread> workers;
  for (unsigned w = 1; w < jobs; ++w) workers.emplace_back(work);
  work();
  for (auto& th : workers) th.join();
  if (error) std::rethrow_exception(error);

  for (const auto& p : partial) report.merge(p, opt.max_failures_kept);
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace hyperarena
