#include <gtest/gtest.h>

#include "hyperarena/hyperarena.hpp"
#include "hyperarena/io.hpp"
#include "test_util.hpp"

using namespace hyperarena;
using namespace hyperarena::testing;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::SameVertex;
}

}  // namespace

TEST(InstanceJson, RoundTrip) {
  auto t = t3(5, 3);
  auto j = instance_to_json(t);
  EXPECT_EQ(j.dump(), R"({"n":5,"k":3,"arcs":[[3,1,2],[4,1,2],[3,4,1],[4,2,3],[5,1,2],[3,5,1],[5,2,3],[4,5,1],[4,5,2],[3,4,5]]})");
  EXPECT_EQ(instance_from_json(parse_json(j.dump())), t);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto r = random_hypertournament(7, 4, seed);
    EXPECT_EQ(instance_from_json(parse_json(instance_to_json(r).dump(2))), r);
  }
  auto tour = instance_from_json(parse_json(instance_to_json(transitive(4, 2)).dump()), {.tournament_mode = true});
  EXPECT_TRUE(tour.tournament_mode());
}

TEST(InstanceJson, Errors) {
  EXPECT_EQ(code_of([] { parse_json("{\"n\":"); }), ErrorCode::Format);
  EXPECT_EQ(code_of([] { instance_from_json(parse_json(R"({"k":3,"arcs":[]})")); }), ErrorCode::Format);
  EXPECT_EQ(code_of([] { instance_from_json(parse_json(R"({"n":4,"k":3,"arcs":[["a",2,3]]})")); }), ErrorCode::Format);
  EXPECT_EQ(code_of([] { instance_from_json(parse_json(R"({"n":4,"k":3,"arcs":[[0,2,3]]})")); }), ErrorCode::VertexOutOfRange);
  EXPECT_EQ(code_of([] { instance_from_json(parse_json(R"({"n":4,"k":3,"arcs":3})")); }), ErrorCode::Format);
  auto printed = instance_to_json(t3(5, 3));
  printed["arcs"] = Json::array();
  for (const auto& a : sink_fixture_defective()) {
    Json arc = Json::array();
    for (VertexId u : a) arc.push_back(u.label());
    printed["arcs"].push_back(arc);
  }
  EXPECT_EQ(code_of([&] { instance_from_json(printed); }), ErrorCode::DuplicateSubset);
}

TEST(GraphIo, JsonAndDot) {
  auto g = graph_from_edges(5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}});
  EXPECT_EQ(graph_to_json(g).dump(), R"({"n":5,"edges":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]})");
  EXPECT_EQ(graph_from_json(graph_to_json(g)), g);
  const std::string dot = graph_to_dot(g);
  EXPECT_EQ(dot.substr(0, 8), "graph {\n");
  EXPECT_NE(dot.find("  v5;\n"), std::string::npos);
  EXPECT_NE(dot.find("  v1 -- v2;\n"), std::string::npos);
  EXPECT_EQ(graph_from_dot(dot), g);
  EXPECT_EQ(code_of([] { graph_from_dot("digraph"); }), ErrorCode::Format);
  EXPECT_EQ(code_of([] { graph_from_json(parse_json(R"({"n":3,"edges":[[1]]})")); }), ErrorCode::Format);
}

TEST(Text, ShapeStrings) {
  EXPECT_EQ(shape_to_string(classify_shape(competition_graph_12_fast(t3(5, 3)))), "CompleteMinusP3 missing [1-2, 2-3]");
  EXPECT_EQ(shape_to_string(classify_shape(competition_graph_12_fast(t2(5, 3)))), "Complete");
  EXPECT_EQ(shape_to_string(classify_shape(competition_graph_12_fast(transitive(5, 3)))),
            "CliquePlusIsolated isolated 5 missing [1-5, 2-5, 3-5, 4-5]");
}

TEST(WitnessJson, Fields) {
  auto t = t3(5, 3);
  auto w = competition_witness(t, v(1), v(3), 1, 2);
  ASSERT_TRUE(w);
  auto j = witness_to_json(t, v(1), v(3), 1, 2, w);
  EXPECT_TRUE(j["competes"].get<bool>());
  EXPECT_EQ(j["x"], 1);
  EXPECT_EQ(j["target"], w->target.label());
  EXPECT_EQ(j["P"]["vertices"].front(), 1);
  EXPECT_EQ(j["Q"]["vertices"].front(), 3);
  EXPECT_EQ(j["P"]["arcs"].size(), w->from_x.length());
  auto none = witness_to_json(t, v(1), v(2), 1, 2, std::nullopt);
  EXPECT_FALSE(none["competes"].get<bool>());
  EXPECT_FALSE(none.contains("P"));
}

TEST(ReportJson, Stable) {
  SweepOptions opt;
  opt.checks = {Check::SinkShape};
  auto r = sweep(SweepSource::all(4, 3, 0, 100), opt);
  auto j = report_to_json(r);
  EXPECT_EQ(j["format_version"], "1");
  EXPECT_FALSE(j.contains("elapsed_seconds"));
  EXPECT_TRUE(report_to_json(r, true).contains("elapsed_seconds"));
  EXPECT_EQ(j["instance_count"], 100);
  EXPECT_EQ(j["shape_histogram"].size(), kAllShapeTags.size());
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_NE(report_table(r).find("instances 100"), std::string::npos);
}
