#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fixtures.hpp"
#include "reldom/cli.hpp"
#include "reldom/exprs.hpp"
#include "reldom/fixtures_text.hpp"
#include "reldom/formats.hpp"
#include "reldom/tilting.hpp"

using namespace reldom;

namespace {

std::string fixture_path(const std::string& name) {
    return std::string(RELDOM_FIXTURE_DIR) + "/" + name;
}

struct CliRun {
    int code;
    std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE_BEGIN("formats");

TEST_CASE("square fixture parses to 4 vertices, 4 arrows, 1 relation") {
    auto pres = parse_algebra_file(read_text_file(fixture_path("sq.alg")), "sq");
    CHECK(pres.quiver.vertices.size() == 4);
    CHECK(pres.quiver.arrows.size() == 4);
    CHECK(pres.relations.size() == 1);
    CHECK(pres.field_spec == "QQ");
    FieldQQ f;
    CHECK(build_bound_quiver_algebra(f, pres)->dim == 9);
}

TEST_CASE("an empty quiver with one vertex gives the one-dimensional algebra") {
    auto pres = parse_algebra_file("vertex 1\n", "pt");
    FieldQQ f;
    CHECK(build_bound_quiver_algebra(f, pres)->dim == 1);
}

TEST_CASE("each bad input gets its own diagnostic") {
    CHECK_THROWS_WITH_AS((void)parse_algebra_file("vertex 1\narrow a: 1 -> 2\n", "x"),
                         doctest::Contains("unknown vertex"), presentation_error);
    CHECK_THROWS_WITH_AS((void)parse_algebra_file("vertex 1 1\n", "x"),
                         doctest::Contains("duplicate vertex"), presentation_error);
    CHECK_THROWS_WITH_AS(
        (void)parse_algebra_file("vertex 1 2\narrow a: 1 -> 2\narrow a: 1 -> 2\n", "x"),
        doctest::Contains("duplicate arrow"), presentation_error);
    CHECK_THROWS_WITH_AS((void)parse_algebra_file("field GF x\nvertex 1\n", "x"),
                         doctest::Contains("bad field spec"), presentation_error);
    // relation of length 1 is rejected with an admissibility diagnostic
    CHECK_THROWS_WITH_AS(
        (void)parse_algebra_file("vertex 1 2\narrow a: 1 -> 2\nrelation 1*a\n", "x"),
        doctest::Contains("admissibility"), presentation_error);
    // non-uniform relation: endpoints differ
    CHECK_THROWS_WITH_AS(
        (void)parse_algebra_file("vertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 2 -> "
                                 "2\nrelation 1*b*a - 1*c*a\n",
                                 "x"),
        doctest::Contains("non-uniform"), presentation_error);
}

TEST_CASE("line numbers are carried in diagnostics") {
    try {
        (void)parse_algebra_file("vertex 1\n\narrow a: 1 -> 9\n", "x");
        FAIL("expected a diagnostic");
    } catch (const presentation_error& e) {
        REQUIRE(e.diagnostics.size() == 1);
        CHECK(e.diagnostics[0].line == 3);
    }
}

TEST_CASE("module files parse and validate against the algebra") {
    auto mods = parse_module_file(read_text_file(fixture_path("sq.mod")));
    REQUIRE(mods.size() == 1);
    CHECK(mods[0].name == "Q");
    CHECK(mods[0].over == "sq");
    FieldQQ f;
    auto pres = parse_algebra_file(read_text_file(fixture_path("sq.alg")), "sq");
    AlgPtr<FieldQQ> sq = build_bound_quiver_algebra(f, pres);
    auto m = module_from_parsed(sq, mods[0]);
    CHECK(module_satisfies_relations(m, pres));
    auto q = eval_module_expr(sq, "I2+I3+I4");
    CHECK(find_iso(m, q).has_value());
}

TEST_CASE("bundled fixture files and the embedded copies are byte-identical") {
    for (const auto& [name, text] : fixture_text::algebra_files())
        CHECK(read_text_file(fixture_path(name + ".alg")) == text);
    CHECK(read_text_file(fixture_path("sq.mod")) == std::string(fixture_text::sq_mod));
}

TEST_CASE("module expressions cover the named vocabulary") {
    FieldQQ f;
    AlgPtr<FieldQQ> sq =
        build_bound_quiver_algebra(f, parse_algebra_file(read_text_file(fixture_path("sq.alg")), "sq"));
    CHECK(eval_module_expr(sq, "A")->total_dim() == 9);
    CHECK(eval_module_expr(sq, "DA")->total_dim() == 9);
    CHECK(eval_module_expr(sq, "P1")->dims() == std::vector<int>{1, 1, 1, 1});
    CHECK(eval_module_expr(sq, "I4/S4")->dims() == std::vector<int>{1, 1, 1, 0});
    CHECK(eval_module_expr(sq, "radP1")->dims() == std::vector<int>{0, 1, 1, 1});
    CHECK(eval_module_expr(sq, "S1+S2")->total_dim() == 2);
    CHECK_THROWS_AS((void)eval_module_expr(sq, "X9"), input_error);
    CHECK_THROWS_AS((void)eval_module_expr(sq, "P9"), input_error);
}

TEST_CASE("cli: analyze, domdim and pair match the worked examples") {
    auto a = cli({"analyze", fixture_path("ss.alg")});
    CHECK(a.code == 0);
    CHECK(a.out.find("gldim 0") != std::string::npos);

    auto d = cli({"domdim", fixture_path("sq.alg"), "--module", "P4", "--wrt", "Q"});
    CHECK(d.code == 0);
    CHECK(d.out.find("= 2") != std::string::npos);

    auto p = cli({"pair", fixture_path("sq.alg"), "--wrt", "Q"});
    CHECK(p.code == 0);
    CHECK(p.out.find("relative Auslander pair for n in [2, 2]") != std::string::npos);
}

TEST_CASE("cli exit codes: input errors and undetermined caps") {
    auto missing = cli({"analyze", fixture_path("nope.alg")});
    CHECK(missing.code == 2);

    auto badfield = cli({"pair", fixture_path("sq.alg"), "--wrt", "Q", "--field", "GF:6"});
    CHECK(badfield.code == 2);

    auto badexpr = cli({"pair", fixture_path("sq.alg"), "--wrt", "Z9"});
    CHECK(badexpr.code == 2);

    // a tiny cap cannot certify the infinite value: undetermined, and the
    // reported dimension is the literal lower bound
    auto und = cli({"domdim", fixture_path("loops.alg"), "--module", "S1", "--wrt", "I1", "--cap",
                    "2", "--format", "json"});
    CHECK(und.code == 3);
    auto ju = nlohmann::json::parse(und.out);
    CHECK(ju["report"]["relative_dominant_dimension"] == ">=2");
}

TEST_CASE("cli json output is deterministic and schema-tagged") {
    std::vector<std::string> args{"pair", fixture_path("sq.alg"), "--wrt", "Q", "--format",
                                  "json"};
    auto r1 = cli(args);
    auto r2 = cli(args);
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);  // byte-identical
    auto j = nlohmann::json::parse(r1.out);
    CHECK(j["schema"] == 1);
    CHECK(j["report"]["faithful_dimension"] == 2);
    CHECK(j["report"]["classification"] == "relative Auslander pair");
}

TEST_CASE("cli: GF(7), GF(2) and QQ agree on the square pair report") {
    auto qq = cli({"pair", fixture_path("sq.alg"), "--wrt", "Q", "--format", "json"});
    auto gf = cli({"pair", fixture_path("sq.alg"), "--wrt", "Q", "--format", "json", "--field",
                   "GF:7"});
    auto g2 = cli({"pair", fixture_path("sq.alg"), "--wrt", "Q", "--format", "json", "--field",
                   "GF:2"});
    REQUIRE(qq.code == 0);
    REQUIRE(gf.code == 0);
    REQUIRE(g2.code == 0);
    auto jq = nlohmann::json::parse(qq.out);
    auto jg = nlohmann::json::parse(gf.out);
    auto j2 = nlohmann::json::parse(g2.out);
    CHECK(jq["report"] == jg["report"]);
    CHECK(jq["report"] == j2["report"]);
    CHECK(jg["field"] == "GF:7");
}

TEST_CASE("cli: a large prime modulus near the 2^31 bound works") {
    auto r = cli({"analyze", fixture_path("sq.alg"), "--field", "GF:2147483647", "--format",
                  "json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["report"]["gldim"] == 2);
    // a modulus of 2^31 or larger is rejected
    auto big = cli({"analyze", fixture_path("sq.alg"), "--field", "GF:2147483659"});
    CHECK(big.code == 2);
}

TEST_CASE("cli: codominant flag and tilt precondition") {
    auto co = cli({"domdim", fixture_path("sq.alg"), "--module", "DA", "--wrt", "Q", "--co",
                   "--format", "json"});
    CHECK(co.code == 0);
    auto jc = nlohmann::json::parse(co.out);
    CHECK(jc["report"]["relative_codominant_dimension"] == 2);

    // faithful dimension 2 < 2d for d = 2: precondition error carrying the value
    auto bad = cli({"tilt", fixture_path("sq.alg"), "--wrt", "Q", "--d", "2"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("2 < 4") != std::string::npos);
}

TEST_CASE("warm cache equals cold cache and corrupt entries are ignored") {
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "reldom_cache_test";
    fs::remove_all(dir);
    std::vector<std::string> args{"analyze",       fixture_path("sq.alg"), "--format", "json",
                                  "--cache-dir", dir.string()};
    auto cold = cli(args);
    REQUIRE(cold.code == 0);
    bool have_files = false;
    for (auto& e : fs::directory_iterator(dir)) have_files = have_files || e.path().extension() == ".json";
    CHECK(have_files);
    auto warm = cli(args);
    CHECK(warm.out == cold.out);
    // corrupt every cache entry; results must still be identical (recompute)
    for (auto& e : fs::directory_iterator(dir)) {
        std::ofstream f(e.path(), std::ios::trunc);
        f << "{\"kind\": \"garbage\"}";
    }
    auto again = cli(args);
    CHECK(again.out == cold.out);
    fs::remove_all(dir);
}

TEST_CASE("reproduce catches a corrupted fixture") {
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "reldom_fixture_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    for (const auto& [name, text] : fixture_text::algebra_files()) {
        std::ofstream f(dir / (name + ".alg"));
        f << text;
    }
    {
        std::ofstream f(dir / "sq.mod");
        f << fixture_text::sq_mod;
    }
    // drop the relation from the square fixture: its dimension changes
    {
        std::string text = fixture_text::sq_alg;
        auto at = text.find("relation");
        text = text.substr(0, at);
        std::ofstream f(dir / "sq.alg", std::ios::trunc);
        f << text;
    }
    auto r = cli({"reproduce", "--fixtures", dir.string()});
    CHECK(r.code == 1);
    CHECK(r.out.find("[FAIL] criterion 1: algebra dimension 9") != std::string::npos);
    fs::remove_all(dir);
}

TEST_SUITE_END();
