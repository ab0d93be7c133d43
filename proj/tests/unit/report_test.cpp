#include <gtest/gtest.h>

#include "grassmann/error.hpp"
#include "grassmann/report.hpp"
#include "test_support.hpp"

namespace grassmann {
namespace {

using testing::field_of_order;

TEST(GraphJson, RoundTripPreservesAdjacency) {
  for (auto [q, n, m] : {std::tuple{2, 4, 2}, std::tuple{3, 4, 2}, std::tuple{4, 3, 1}, std::tuple{9, 2, 1}}) {
    const GrassmannGraph g = build_graph(field_of_order(static_cast<std::uint64_t>(q)), n, m);
    const Json doc = graph_to_json(g);
    const GrassmannGraph back = graph_from_json(Json::parse(doc.dump()));
    EXPECT_EQ(back.size(), g.size());
    EXPECT_EQ(back.vertices(), g.vertices());
    EXPECT_EQ(back.adjacency(), g.adjacency());
  }
}

TEST(GraphJson, Shape) {
  const GrassmannGraph g = build_graph(field_of_order(2), 4, 2);
  const Json doc = graph_to_json(g);
  EXPECT_EQ(doc["params"]["vertex_count"], 35);
  EXPECT_EQ(doc["params"]["field"]["modulus"], Json::array({0, 1}));
  EXPECT_EQ(doc["vertices"].size(), 35u);
  EXPECT_EQ(doc["vertices"][0]["matrix"], Json::array({"1000", "0100"}));
  EXPECT_EQ(doc["edges"].size(), 35u * 18 / 2);
  EXPECT_EQ(graph_to_json(g).dump(), doc.dump());
}

TEST(GraphJson, MalformedInputIsInvalid) {
  const GrassmannGraph g = build_graph(field_of_order(2), 3, 1);
  Json doc = graph_to_json(g);
  doc["vertices"][0]["matrix"] = Json::array({"1x0"});
  try {
    graph_from_json(doc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidInput);
  }
  EXPECT_THROW(graph_from_json(Json::object()), Error);
  Json unsorted = graph_to_json(g);
  std::swap(unsorted["vertices"][0], unsorted["vertices"][1]);
  EXPECT_THROW(graph_from_json(unsorted), Error);
}

TEST(Dot, Triangle) {
  const GrassmannGraph g = build_graph(field_of_order(2), 2, 1);
  const std::string dot = graph_to_dot(g);
  EXPECT_EQ(dot,
            "graph J_2_2_1 {\n"
            "  v0 [tooltip=\"10\"];\n"
            "  v1 [tooltip=\"11\"];\n"
            "  v2 [tooltip=\"01\"];\n"
            "  v0 -- v1;\n"
            "  v0 -- v2;\n"
            "  v1 -- v2;\n"
            "}\n");
}

TEST(QbinomJson, Examples) {
  const Json a = qbinom_to_json(4, 2, std::nullopt);
  EXPECT_EQ(a["exponents"], (Json{{"3", 1}, {"4", 1}}));
  EXPECT_EQ(a["h"]["f"]["text"], "q^2 + 1");
  EXPECT_EQ(a["h"]["applicable"], false);

  const Json b = qbinom_to_json(5, 2, 2);
  EXPECT_EQ(b["value"], "155");
  EXPECT_EQ(b["h_value"]["text"], "31/3");

  const Json c = qbinom_to_json(8, 3, std::nullopt);
  EXPECT_EQ(c["h"]["applicable"], true);
  EXPECT_EQ(c["h"]["exponents"]["3"], -1);
  EXPECT_EQ(c["h"]["remainder_nonzero"], true);

  EXPECT_FALSE(qbinom_to_json(3, 1, std::nullopt).contains("h"));
  EXPECT_THROW(qbinom_to_json(4, 2, 10), Error);
}

TEST(CorenessJson, DeterministicAcrossRuns) {
  const std::string first = coreness_to_json(core_test(4, 2, 2)).dump();
  const std::string second = coreness_to_json(core_test(4, 2, 2)).dump();
  EXPECT_EQ(first, second);
  const Json doc = Json::parse(first);
  EXPECT_EQ(doc["verdict"], "not-core");
  EXPECT_EQ(doc["chi"], 7);
  EXPECT_EQ(doc["alpha"], 5);
  EXPECT_EQ(doc["witness"]["kind"], "colouring");
  EXPECT_EQ(doc["witness"]["image"].size(), 7u);
  EXPECT_EQ(doc["witness"]["map"].size(), 35u);
}

}  // namespace
}  // namespace grassmann
