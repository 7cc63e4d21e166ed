#include <gtest/gtest.h>

#include <filesystem>

#include "reeb/error.hpp"
#include "reeb/json_io.hpp"
#include "test_util.hpp"

using namespace reeb;
using io::Json;

namespace {

const std::filesystem::path kData = REEB_DATA_DIR;

Json load(const std::string& relative) { return io::read_file((kData / relative).string()); }

}  // namespace

TEST(JsonIo, SchemaExamples) {
  const auto m = io::model_from_json(io::parse(R"({"angles":[{"r":"1/3","sign":"-"}],"h":2,"offset":1,"order":1,"multiplicity":1})"));
  EXPECT_EQ(m, test::model({{"1/3", '-'}}, 2, 1));

  const auto cert = io::certificate_from_json(io::parse(R"({"d":16,"k":[6],"ell0":2,"divisor":2,"direction":"plus"})"));
  EXPECT_EQ(io::to_json(cert).dump(), R"({"d":16,"k":[6],"ell0":2,"divisor":2,"direction":"plus"})");

  const auto f = io::facet_from_json(io::parse(R"({"vertices":[[0]], "eta":[1], "reeb":["1/2","1"], "signs":["+"]})"));
  EXPECT_EQ(f.facet.reeb[0], make_rational(1, 2));
  EXPECT_EQ(f.signs, std::vector<Perturbation>{Perturbation::plus});

  const auto b = io::betti_from_json(io::parse(R"({"ranks": {"0":1, "2":1}})"));
  EXPECT_EQ(b, (BettiTable{{0, 1}, {2, 1}}));
}

TEST(JsonIo, RanksPrintInNumericOrder) {
  GradedRanks r({-12, 12});
  for (std::int64_t d : {10, -11, 2, -3}) r.set(d, 1);
  r.mark_unknown(-1);
  EXPECT_EQ(io::to_json(r).dump(), R"({"ranks":{"-11":1,"-3":1,"2":1,"10":1},"unknown":[-1],"window":"-12:12"})");
  EXPECT_EQ(io::ranks_from_json(io::to_json(r)), r);
}

TEST(JsonIo, RanksWithoutWindowSpanListedDegrees) {
  const auto r = io::ranks_from_json(io::parse(R"({"ranks":{"3":1,"7":2},"unknown":[9]})"));
  EXPECT_EQ(r.window(), (Window{3, 9}));
  EXPECT_FALSE(r.at(9).has_value());
}

TEST(JsonIo, ParseErrors) {
  EXPECT_THROW(io::parse("{not json"), Error);
  EXPECT_THROW(io::model_from_json(io::parse(R"({"angles":[]})")), Error);
  EXPECT_THROW(io::betti_from_json(io::parse(R"({"ranks":{"x":1}})")), Error);
  EXPECT_THROW(io::model_from_json(io::parse(R"({"angles":[{"r":"1/0"}],"h":1,"offset":0})")), Error);
  EXPECT_THROW(io::read_file("/nonexistent/file.json"), Error);
}

TEST(JsonIo, CorpusRoundTrips) {
  for (const char* file : {"refutation/models.json", "index_jump/models.json"}) {
    const Json j = load(file);
    EXPECT_EQ(io::to_json(io::models_from_json(j)), j) << file;
  }
  for (const char* file : {"sphere/s3_facets.json", "toric/s3_single_facet.json"}) {
    const Json j = load(file);
    Json printed = Json::array();
    for (const auto& f : io::facets_from_json(j)) printed.push_back(io::to_json(f));
    EXPECT_EQ(printed, j) << file;
  }
  EXPECT_EQ(io::to_json(io::certificate_from_json(load("index_jump/certificate.json"))), load("index_jump/certificate.json"));
  for (const char* file : {"sphere/cp1_betti.json", "sphere/cp2_betti.json", "sphere/ball4_rel_betti.json",
                           "morse/m_lacunary.json", "morse/m_mixed.json"}) {
    EXPECT_EQ(io::to_json(io::betti_from_json(load(file))), load(file)) << file;
  }
  for (const char* file : {"sphere/ball_ranks_n1.json", "sphere/cp1_prequant.json", "loop_space/d2_h1.json",
                           "loop_space/d8_h3.json", "loop_space/d7_h1.json"}) {
    EXPECT_EQ(io::to_json(io::ranks_from_json(load(file))), load(file)) << file;
  }
  for (const char* file : {"brieskorn/p9_n2.json", "brieskorn/p17_n2.json"}) {
    Json j = load(file);
    const auto K = j.at("K");
    Json printed = io::to_json(io::ranks_from_json(j));
    printed["K"] = K;
    EXPECT_EQ(printed, j) << file;
  }
  for (const char* file : {"sphere/ball_certificate.json", "brieskorn/p9_n2_certificate.json",
                           "brieskorn/p17_n2_certificate.json"}) {
    EXPECT_EQ(io::to_json(io::hypothesis_from_json(load(file))), load(file)) << file;
  }
  EXPECT_EQ(io::to_json(io::trace_from_json(load("refutation/trace.json"))), load("refutation/trace.json"));
  EXPECT_EQ(io::to_json(io::components_from_json(load("morse/components.json"))), load("morse/components.json"));
}

TEST(JsonIo, CorpusTraceReplays) {
  const auto models = io::models_from_json(load("refutation/models.json"));
  const auto trace = io::trace_from_json(load("refutation/trace.json"));
  EXPECT_TRUE(recheck_trace(models, trace).passed);
}
