#include <string>
#include <vector>

#include <doctest.h>

#include "k3orb/documents.hpp"
#include "k3orb/errors.hpp"
#include "k3orb/lattice.hpp"

using namespace k3orb;
using nlohmann::ordered_json;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

}  // namespace

TEST_CASE("closed-form table document") {
  OutputDocument doc = make_table_document(TableMode::Closed);
  CHECK(doc.exit_code == 0);

  const ordered_json& j = doc.json;
  CHECK(j["schema_version"] == "1.0");
  CHECK(j["command"] == "table");
  CHECK(j["warnings"].empty());

  const ordered_json& payload = j["payload"];
  CHECK(payload["mode"] == "closed");
  const ordered_json& groups = payload["groups"];
  REQUIRE(groups.size() == 10);

  const ordered_json& g1 = groups[0];
  CHECK(g1["m"] == 1);
  REQUIRE(g1["pairs"].size() == 1);
  const ordered_json& row = g1["pairs"][0];
  CHECK(row["m"] == 1);
  CHECK(row["a"] == 1);
  CHECK(row["shape"] == "generic");
  CHECK(row["n"] == 9);
  CHECK(row["k"] == 5);
  CHECK(row["g"] == 0);
  CHECK(row["chi_fixed"] == 21);
  CHECK(g1["closed_form"] ==
        ordered_json({{"chi_product", 48},
                      {"chi_z", 47},
                      {"chi_x0", 89},
                      {"chi_x", 219}}));
  CHECK(!g1.contains("first_principles"));
  CHECK(!g1.contains("mismatch"));

  // The degenerate locus carries no genus entry.
  const ordered_json& g7 = groups[6];
  REQUIRE(g7["pairs"].size() == 4);
  const ordered_json& special = g7["pairs"][3];
  CHECK(special["a"] == 7);
  CHECK(special["shape"] == "three-isolated-points");
  CHECK(special["n"] == 3);
  CHECK(!special.contains("g"));

  CHECK(groups[9]["m"] == 10);
  CHECK(groups[9]["closed_form"]["chi_x"] == 30);

  std::size_t total_pairs = 0;
  for (const auto& g : groups) total_pairs += g["pairs"].size();
  CHECK(total_pairs == 24);

  auto lines = lines_of(doc.text);
  CHECK(lines[0] == "euler characteristics by m (closed-form)");
  CHECK(lines[2].starts_with(" m  pairs"));
  CHECK(lines[3].starts_with(" 1  (1,1)"));
  CHECK(lines[3].ends_with("219"));
  CHECK(lines[12].starts_with("10  (10,0) (10,2)"));
  CHECK(lines[12].ends_with("30"));
  CHECK(doc.text.find("[9,5,0]") != std::string::npos);
  CHECK(doc.text.find("[3 pts]") != std::string::npos);
}

TEST_CASE("dual-mode table flags the per-stage disagreement") {
  OutputDocument doc = make_table_document(TableMode::Both);

  const ordered_json& payload = doc.json["payload"];
  CHECK(payload["mode"] == "both");
  for (const auto& g : payload["groups"]) {
    CHECK(g.contains("closed_form"));
    CHECK(g.contains("first_principles"));
    CHECK(g["mismatch"] == ordered_json({{"product", false},
                                         {"z", true},
                                         {"x0", true},
                                         {"x", true}}));
  }
  CHECK(payload["groups"][0]["first_principles"] ==
        ordered_json({{"chi_product", 48},
                      {"chi_z", 44},
                      {"chi_x0", 86},
                      {"chi_x", 210}}));

  REQUIRE(doc.json["warnings"].size() == 1);
  CHECK(doc.json["warnings"][0]["code"] == "chi-mode-mismatch");

  CHECK(doc.text.find("closed Z/X0/X") != std::string::npos);
  CHECK(doc.text.find("47/89/219") != std::string::npos);
  CHECK(doc.text.find("44/86/210") != std::string::npos);
  CHECK(doc.text.find("Z,X0,X") != std::string::npos);
  CHECK(doc.text.find("warning: ") != std::string::npos);
}

TEST_CASE("first-principles table document") {
  OutputDocument doc = make_table_document(TableMode::FirstPrinciples);

  const ordered_json& payload = doc.json["payload"];
  CHECK(payload["mode"] == "first");
  CHECK(!payload["groups"][0].contains("closed_form"));
  CHECK(payload["groups"][0]["first_principles"]["chi_x"] == 210);
  REQUIRE(doc.json["warnings"].size() == 1);

  auto lines = lines_of(doc.text);
  CHECK(lines[0] == "euler characteristics by m (first-principles)");
  CHECK(lines[3].ends_with("210"));
}

TEST_CASE("pair document for (2, 2)") {
  OutputDocument doc = make_pair_document({2, 2});
  CHECK(doc.exit_code == 0);
  CHECK(doc.json["command"] == "pair");

  const ordered_json& payload = doc.json["payload"];
  CHECK(payload["pair"] == ordered_json({{"m", 2}, {"a", 2}}));
  CHECK(payload["fixed_locus"] == ordered_json({{"shape", "generic"},
                                                {"n", 8},
                                                {"k", 4},
                                                {"g", 0},
                                                {"chi", 18}}));

  const ordered_json& zero = payload["singularities"]["at_zero"];
  CHECK(zero["points"] == ordered_json({{"type", "1/3(2,2,2)"},
                                        {"weights", {2, 2, 2}},
                                        {"gorenstein", true},
                                        {"count", 8}}));
  CHECK(zero["curves"] == ordered_json({{"type", "1/3(2,1,0)"},
                                        {"weights", {2, 1, 0}},
                                        {"gorenstein", true},
                                        {"rational_curves", 4},
                                        {"genus", 0},
                                        {"total_curves", 5}}));
  const ordered_json& inf = payload["singularities"]["at_infinity"];
  CHECK(inf["points"]["type"] == "1/3(2,2,1)");
  CHECK(inf["points"]["gorenstein"] == false);
  CHECK(inf["curves"]["type"] == "1/3(2,2,0)");
  CHECK(inf["curves"]["gorenstein"] == false);

  CHECK(payload["euler"]["closed_form"]["chi_x"] == 198);
  CHECK(payload["euler"]["first_principles"] ==
        ordered_json({{"chi_product", 48},
                      {"chi_z", 40},
                      {"chi_x0", 76},
                      {"chi_x", 180}}));
  CHECK(payload["euler"]["mismatch"]["z"] == true);
  CHECK(payload["euler"]["mismatch"]["product"] == false);

  REQUIRE(payload["notes"].size() == 4);
  CHECK(payload["notes"][0]["code"] == "cover-blowup-assumed-euler-neutral");
  CHECK(payload["notes"][1]["code"] == "chi-z-mismatch");
  CHECK(payload["notes"][2]["code"] == "chi-x0-mismatch");
  CHECK(payload["notes"][3]["code"] == "chi-x-mismatch");
  CHECK(doc.json["warnings"] == payload["notes"]);

  CHECK(doc.text.find("construction report for (m, a) = (2, 2)") !=
        std::string::npos);
  CHECK(doc.text.find("8 isolated points, 4 rational curves, 1 curve of "
                      "genus 0") != std::string::npos);
  CHECK(doc.text.find("8 points of type 1/3(2,2,2) [Gorenstein]") !=
        std::string::npos);
  CHECK(doc.text.find("5 curves (4 rational + 1 of genus 0) of type "
                      "1/3(2,2,0) [not Gorenstein]") != std::string::npos);
  CHECK(doc.text.find("MISMATCH") != std::string::npos);
  CHECK(doc.text.find("[cover-blowup-assumed-euler-neutral]") !=
        std::string::npos);
}

TEST_CASE("pair document for the three-point locus") {
  OutputDocument doc = make_pair_document({7, 7});

  const ordered_json& payload = doc.json["payload"];
  CHECK(payload["fixed_locus"]["shape"] == "three-isolated-points");
  CHECK(payload["fixed_locus"]["n"] == 3);
  CHECK(!payload["fixed_locus"].contains("g"));
  CHECK(payload["fixed_locus"]["chi"] == 3);

  const ordered_json& zero = payload["singularities"]["at_zero"];
  CHECK(zero["points"]["count"] == 3);
  CHECK(!zero.contains("curves"));
  CHECK(!payload["singularities"]["at_infinity"].contains("curves"));

  CHECK(payload["euler"]["closed_form"]["chi_x"] == 93);
  CHECK(doc.text.find("fixed locus: 3 isolated points; chi = 3") !=
        std::string::npos);
}

TEST_CASE("pair document with an empty point stratum") {
  OutputDocument doc = make_pair_document({10, 0});

  const ordered_json& payload = doc.json["payload"];
  const ordered_json& zero = payload["singularities"]["at_zero"];
  CHECK(!zero.contains("points"));
  CHECK(zero["curves"]["rational_curves"] == 1);
  CHECK(zero["curves"]["genus"] == 5);
  CHECK(zero["curves"]["total_curves"] == 2);
  CHECK(payload["euler"]["first_principles"]["chi_x"] == -60);

  CHECK(doc.text.find("2 curves (1 rational + 1 of genus 5)") !=
        std::string::npos);
}

TEST_CASE("inadmissible pair reporting") {
  CHECK_THROWS_AS((void)make_pair_document({4, 0}), InadmissiblePairError);

  CHECK(inadmissible_pair_message({4, 0}) ==
        "invariant pair (4, 0) is not admissible; nearest admissible: "
        "(2,0) (3,1) (4,2) (5,1) (6,0)");
  CHECK(inadmissible_pair_message({3, 2}) ==
        "invariant pair (3, 2) is not admissible: m + a must be even; "
        "nearest admissible: (2,2) (3,1) (3,3) (4,2)");
}

TEST_CASE("lattice document for the full K3 lattice") {
  OutputDocument doc = make_lattice_document(k3_lattice());
  CHECK(doc.json["command"] == "lattice");

  const ordered_json& payload = doc.json["payload"];
  CHECK(payload["rank"] == 22);
  CHECK(payload["determinant"] == "-1");
  CHECK(payload["inertia"] == ordered_json({{"positive", 3},
                                            {"negative", 19},
                                            {"null", 0}}));
  CHECK(payload["degenerate"] == false);
  CHECK(payload["discriminant_group"] ==
        ordered_json({{"invariant_factors", ordered_json::array()},
                      {"order", "1"},
                      {"trivial", true},
                      {"three_elementary", true}}));

  // Reading the whole lattice as a fixed lattice lands on the excluded
  // pair (0, 0); the reading is still emitted, flagged inadmissible.
  CHECK(payload["reading"]["m"] == 0);
  CHECK(payload["reading"]["a"] == 0);
  CHECK(payload["reading"]["admissible"] == false);
  REQUIRE(doc.json["warnings"].size() == 1);
  CHECK(doc.json["warnings"][0]["code"] == "inadmissible-pair");

  CHECK(doc.text.find("rank: 22") != std::string::npos);
  CHECK(doc.text.find("determinant: -1") != std::string::npos);
  CHECK(doc.text.find("inertia: (3, 19, 0)") != std::string::npos);
  CHECK(doc.text.find("discriminant group: trivial") != std::string::npos);
}

TEST_CASE("lattice document for a fixed lattice H(3)") {
  OutputDocument doc = make_lattice_document(rescale(hyperbolic_plane(), 3));

  const ordered_json& payload = doc.json["payload"];
  CHECK(payload["rank"] == 2);
  CHECK(payload["determinant"] == "-9");
  CHECK(payload["inertia"]["positive"] == 1);
  CHECK(payload["discriminant_group"]["invariant_factors"] ==
        ordered_json({"3", "3"}));
  CHECK(payload["discriminant_group"]["order"] == "9");
  CHECK(payload["discriminant_group"]["three_elementary"] == true);
  CHECK(payload["reading"]["m"] == 10);
  CHECK(payload["reading"]["a"] == 2);
  CHECK(payload["reading"]["admissible"] == true);
  CHECK(doc.json["warnings"].empty());

  CHECK(doc.text.find("reading: (m, a) = (10, 2) -- admissible") !=
        std::string::npos);
  CHECK(doc.text.find("invariant factors [3, 3], order 9") !=
        std::string::npos);
}

TEST_CASE("degenerate lattice document omits group and reading") {
  OutputDocument doc = make_lattice_document(GramLattice(IntMatrix::Zero(2, 2)));

  const ordered_json& payload = doc.json["payload"];
  CHECK(payload["determinant"] == "0");
  CHECK(payload["degenerate"] == true);
  CHECK(payload["inertia"]["null"] == 2);
  CHECK(!payload.contains("discriminant_group"));
  CHECK(!payload.contains("reading"));
  REQUIRE(doc.json["warnings"].size() == 1);
  CHECK(doc.json["warnings"][0]["code"] == "degenerate-lattice");
  CHECK(doc.exit_code == 0);
}

TEST_CASE("lattice document warnings for rank and torsion") {
  IntMatrix g = IntMatrix::Zero(3, 3);
  g(0, 0) = g(1, 1) = g(2, 2) = 2;
  OutputDocument doc = make_lattice_document(GramLattice(g));

  const ordered_json& payload = doc.json["payload"];
  CHECK(payload["discriminant_group"]["invariant_factors"] ==
        ordered_json({"2", "2", "2"}));
  CHECK(payload["discriminant_group"]["order"] == "8");
  CHECK(payload["discriminant_group"]["three_elementary"] == false);
  CHECK(!payload.contains("reading"));

  REQUIRE(doc.json["warnings"].size() == 2);
  CHECK(doc.json["warnings"][0]["code"] == "not-three-elementary");
  CHECK(doc.json["warnings"][1]["code"] == "reading-omitted");
  CHECK(doc.text.find("reading: omitted") != std::string::npos);
}

TEST_CASE("verify document runs every suite") {
  OutputDocument doc = make_verify_document(false);
  CHECK(doc.exit_code == 0);
  CHECK(doc.json["command"] == "verify");

  const ordered_json& payload = doc.json["payload"];
  CHECK(payload["strict"] == false);
  CHECK(payload["exit_code"] == 0);

  const ordered_json& suites = payload["suites"];
  REQUIRE(suites.size() == 5);
  const char* expected_names[] = {
      "table-reproduction", "classification-identities",
      "lattice-invariants", "gorenstein-exhaustive",
      "mode-chain-identities"};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(suites[i]["name"] == expected_names[i]);
    CHECK(suites[i]["passed"] == true);
    CHECK(suites[i]["checks"].get<int>() > 0);
    CHECK(suites[i]["failures"].empty());
  }

  REQUIRE(payload["findings"].size() == 1);
  CHECK(payload["findings"][0]["code"] == "chi-mode-mismatch");
  CHECK(payload["findings"][0]["expected"] == true);
  CHECK(payload["findings"][0]["message"].get<std::string>().find("24/24") !=
        std::string::npos);

  CHECK(doc.text.find("result: PASS") != std::string::npos);
  CHECK(doc.text.find("(expected)") != std::string::npos);
}

TEST_CASE("strict verification promotes the expected finding") {
  OutputDocument doc = make_verify_document(true);
  CHECK(doc.exit_code == 1);
  CHECK(doc.json["payload"]["exit_code"] == 1);
  CHECK(doc.json["payload"]["strict"] == true);
  for (const auto& s : doc.json["payload"]["suites"])
    CHECK(s["passed"] == true);
  CHECK(doc.text.find("result: FAIL (strict:") != std::string::npos);
}

TEST_CASE("json rendering is stable and round-trips") {
  for (const OutputDocument& doc :
       {make_table_document(TableMode::Both), make_pair_document({5, 3}),
        make_lattice_document(k3_lattice()), make_verify_document(false)}) {
    std::string rendered = render_json(doc);
    CHECK(rendered.ends_with("\n"));
    CHECK(ordered_json::parse(rendered) == doc.json);
  }

  CHECK(render_json(make_table_document(TableMode::Both)) ==
        render_json(make_table_document(TableMode::Both)));
  CHECK(render_json(make_pair_document({7, 7})) ==
        render_json(make_pair_document({7, 7})));
  CHECK(make_verify_document(false).text == make_verify_document(false).text);
}
