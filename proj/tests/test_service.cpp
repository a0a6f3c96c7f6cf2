#include <doctest.h>

#include "helpers.hpp"
#include "sgi/errors.hpp"
#include "sgi/service.hpp"

using namespace sgi;
using sgi::testing::load_structure;
using sgi::testing::read_file;
using sgi::testing::structure_path;

namespace {

const std::filesystem::path kExamples = SGI_DATA_DIR "/structures";

AnalysisRequest parent_request(std::vector<std::string> edits = {}) {
  AnalysisRequest req;
  req.spec = load_structure("parent.json");
  for (const auto& e : edits) req.edits.push_back(DesignEdit::parse(e));
  return req;
}

}  // namespace

TEST_CASE("pipeline verdicts for the parent and its design variants") {
  const AnalysisResult su = run_analysis(parent_request());
  CHECK(su.verdict == Verdict::SU);
  CHECK(su.errors.empty());
  CHECK(su.document["status"]["state"] == "ok");
  CHECK(su.document["jacobian"]["matches_generic_dimension"] == true);
  CHECK(su.document["structure"]["compartmental_check"]["passed"] == true);

  CHECK(run_analysis(parent_request({"C[1][1]=1"})).verdict == Verdict::SGI);
  const AnalysisResult sli = run_analysis(parent_request({"C[1][1]=1", "C[2][2]=1", "C[3][3]=0"}));
  CHECK(sli.verdict == Verdict::SLI);
  CHECK(sli.document["solution"]["generic"]["count"] == 2);
}

TEST_CASE("result document layout") {
  const Json doc = run_analysis(parent_request()).document;
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"request", "structure", "transfer_matrix", "invariants",
                                         "equations", "parameters", "solution", "jacobian",
                                         "diagram", "classification", "status", "timings"});
  CHECK(doc["timings"].is_null());
  CHECK(doc["transfer_matrix"]["canonical"] == true);
  CHECK(doc["transfer_matrix"]["entries"].size() == 3);
  CHECK(doc["invariants"].size() == 12);
  CHECK(doc["request"]["seeds"] == Json::array({1, 2, 3}));
  CHECK(render_text(doc).ends_with("verdict: SU\n"));
}

TEST_CASE("identical requests give byte-identical documents") {
  const AnalysisRequest req = parent_request({"C[3][3]=1"});
  CHECK(run_analysis(req).document.dump() == run_analysis(req).document.dump());
}

TEST_CASE("timings are reported only on request") {
  AnalysisRequest req = parent_request();
  req.include_timings = true;
  const Json doc = run_analysis(req).document;
  REQUIRE(doc["timings"].is_object());
  CHECK(doc["timings"].contains("generic_solve"));
}

TEST_CASE("zero gains leave no invariants and every parameter free") {
  const AnalysisResult r = run_analysis(parent_request({"C[1][1]=0", "C[2][2]=0", "C[3][3]=0"}));
  CHECK(r.errors.empty());
  CHECK(r.document["invariants"].empty());
  CHECK(r.verdict == Verdict::SU);
  for (const Json& p : r.document["classification"]["parameters"]) CHECK(p["status"] == "free");
}

TEST_CASE("a constant output leaves every parameter free") {
  StructureSpec spec = load_structure("one_compartment.json");
  spec.C = {{Poly{1}}};
  spec.x0 = {Poly{0}};
  spec.parameters.erase(std::remove_if(spec.parameters.begin(), spec.parameters.end(),
                                       [](const Symbol& s) { return s != Symbol{"k01"}; }),
                        spec.parameters.end());
  AnalysisRequest req;
  req.spec = spec;
  const AnalysisResult r = run_analysis(req);
  CHECK(r.errors.empty());
  CHECK(r.verdict == Verdict::SU);
  CHECK(r.document["classification"]["parameters"][0]["status"] == "free");
  CHECK(r.document["jacobian"]["nullity"] == 1);
}

TEST_CASE("a structure without parameters is trivially SGI") {
  AnalysisRequest req;
  req.spec = load_structure("one_compartment.json");
  req.spec.A = {{Poly{-1}}};
  req.spec.C = {{Poly{1}}};
  req.spec.x0 = {Poly{1}};
  req.spec.outflow = {Poly{1}};
  req.spec.parameters.clear();
  const AnalysisResult r = run_analysis(req);
  CHECK(r.errors.empty());
  CHECK(r.verdict == Verdict::SGI);
}

TEST_CASE("stage failures keep earlier results") {
  AnalysisRequest req = parent_request();
  req.spec.constants = {Symbol{"K01"}};
  const AnalysisResult r = run_analysis(req);
  REQUIRE_FALSE(r.errors.empty());
  CHECK(r.errors.front().stage == "naming");
  CHECK(r.input_error());
  CHECK(r.verdict == Verdict::Unknown);
  CHECK(r.document["invariants"].size() == 12);
  CHECK(r.document["solution"]["failed_stage"] == "naming");
  CHECK(r.document["status"]["state"] == "input_error");
  CHECK(render_text(r.document).ends_with("verdict: unknown\n"));
}

TEST_CASE("an exhausted time budget gives an unknown verdict") {
  AnalysisRequest req = parent_request();
  req.timeout = std::chrono::duration<double>(1e-9);
  const AnalysisResult r = run_analysis(req);
  CHECK(r.timed_out);
  CHECK(r.verdict == Verdict::Unknown);
  CHECK(r.document["status"]["state"] == "timeout");
  CHECK(r.document["status"]["timed_out"] == true);
}

TEST_CASE("request parsing") {
  const Json spec = Json::parse(read_file(structure_path("parent.json")));
  SUBCASE("inline document and text agree") {
    const AnalysisRequest a = parse_request({{"spec", spec}});
    const AnalysisRequest b = parse_request({{"spec", spec.dump()}});
    CHECK(a.spec == b.spec);
    CHECK(a.canonical_form);
    CHECK(a.naming == NamingMode::Caps);
  }
  SUBCASE("example reference with options") {
    const AnalysisRequest r = parse_request({{"example", "parent"},
                                             {"edits", {"C[1][1]=1"}},
                                             {"canonical_form", false},
                                             {"naming_mode", "underscore"},
                                             {"layout_hint", "TB"},
                                             {"seeds", {4, 5, 6}},
                                             {"positivity_filter", true}},
                                            kExamples);
    CHECK(r.spec == load_structure("parent.json"));
    CHECK(r.edits.size() == 1);
    CHECK_FALSE(r.canonical_form);
    CHECK(r.naming == NamingMode::Underscore);
    CHECK(r.layout_hint == "TB");
    CHECK(r.seeds == std::vector<std::uint64_t>{4, 5, 6});
    CHECK(r.positivity_filter);
  }
  SUBCASE("malformed requests") {
    CHECK_THROWS_AS(parse_request(Json::array()), InvalidInput);
    CHECK_THROWS_AS(parse_request(Json::object()), InvalidInput);
    CHECK_THROWS_AS(parse_request({{"spec", spec}, {"example", "parent"}}, kExamples),
                    InvalidInput);
    CHECK_THROWS_AS(parse_request({{"spec", spec}, {"colour", "red"}}), InvalidInput);
    CHECK_THROWS_AS(parse_request({{"spec", spec}, {"seeds", {-1}}}), InvalidInput);
    CHECK_THROWS_AS(parse_request({{"spec", spec}, {"seeds", "1"}}), InvalidInput);
    CHECK_THROWS_AS(parse_request({{"spec", spec}, {"canonical_form", "yes"}}), InvalidInput);
    CHECK_THROWS_AS(parse_request({{"spec", spec}, {"naming_mode", "greek"}}), InvalidInput);
    CHECK_THROWS_AS(parse_request({{"spec", spec}, {"layout_hint", "up"}}), InvalidInput);
    CHECK_THROWS_AS(parse_request({{"spec", spec}, {"edits", {"C[9][9]=1"}}}), InvalidInput);
    CHECK_THROWS_AS(parse_request({{"example", "../parent"}}, kExamples), InvalidInput);
    CHECK_THROWS_AS(parse_request({{"example", "nope"}}, kExamples), InvalidInput);
    Json bad = spec;
    bad["A"] = Json::array({Json::array({"k01"})});
    CHECK_THROWS_AS(parse_request({{"spec", bad}}), InvalidInput);
  }
}

TEST_CASE("bundled examples are listed by name") {
  const auto examples = list_examples(kExamples);
  std::vector<std::string> names;
  for (const auto& [name, path] : examples) names.push_back(name);
  CHECK(std::find(names.begin(), names.end(), "parent") != names.end());
  CHECK(std::is_sorted(names.begin(), names.end()));
}
