#include <catch2/catch_amalgamated.hpp>

#include <catena/catena.hpp>
#include <catena/cli.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace catena;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("betti subcommand prints one line for numerical input", "[cli]") {
    auto r = run_cli({"betti", "--gens", "31,47,57"});
    CHECK(r.code == 0);
    CHECK(r.out == "171 517 527\n");
    CHECK(r.err.empty());
}

TEST_CASE("catenary subcommand values", "[cli]") {
    auto whole = run_cli({"catenary", "--gens", "31,47,57"});
    CHECK(whole.code == 0);
    CHECK(whole.out == "17\n");

    auto elem = run_cli({"catenary", "--gens", "31,47,57", "--element", "564"});
    CHECK(elem.code == 0);
    CHECK(elem.out == "14\n");

    auto eq = run_cli({"catenary-eq", "--gens", "11,19,32"});
    CHECK(eq.code == 0);
    CHECK(eq.out == "21\n");

    auto hom = run_cli({"catenary-hom", "--gens", "10,11,14,19"});
    CHECK(hom.code == 0);
    CHECK(hom.out == "5\n");

    auto mon = run_cli({"catenary-mon", "--gens", "11,19,23", "--bound", "600"});
    CHECK(mon.code == 0);
    CHECK(mon.out == "9  # bounded-scan to degree 600\n");
}

TEST_CASE("catenary JSON carries a verifiable witness", "[cli]") {
    auto r = run_cli({"catenary", "--gens", "31,47,57", "--element", "564", "--json", "--witness"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["variant"] == "ordinary");
    CHECK(j["value"] == 14);
    REQUIRE(j.contains("witness"));
    auto chain = j["witness"]["chain"];
    REQUIRE(chain.size() >= 2);
    auto s = AffineSemigroup::create({{31}, {47}, {57}});
    for (const auto& step : chain) {
        IntVector u = step.get<IntVector>();
        CHECK(row_times_matrix(u, s.generators()) == IntVector{564});
    }
}

TEST_CASE("factorizations subcommand round trips", "[cli]") {
    auto plain = run_cli({"factorizations", "--gens", "31,47,57", "--element", "171"});
    CHECK(plain.code == 0);
    CHECK(plain.out == "0 0 3\n4 1 0\n");

    auto js = run_cli({"factorizations", "--gens", "31,47,57", "--element", "171", "--json"});
    REQUIRE(js.code == 0);
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["element"] == nlohmann::json::array({171}));
    CHECK(j["lengths"] == nlohmann::json::array({3, 5}));
    auto s = AffineSemigroup::create({{31}, {47}, {57}});
    auto fiber = factorizations(s, {171});
    REQUIRE(j["factorizations"].size() == fiber.size());
    for (std::size_t i = 0; i < fiber.size(); ++i) {
        IntVector u = j["factorizations"][i].get<IntVector>();
        CHECK(u == fiber[i].exponents);
        CHECK(row_times_matrix(u, s.generators()) == IntVector{171});
    }
}

TEST_CASE("distance subcommand", "[cli]") {
    auto r = run_cli({"distance", "--u", "0 12 0", "--v", "9 0 5"});
    CHECK(r.code == 0);
    CHECK(r.out == "14\n");

    auto js = run_cli({"distance", "--u", "13,1,2", "--v", "9,0,5", "--json"});
    REQUIRE(js.code == 0);
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["distance"] == 5);
}

TEST_CASE("nabla subcommand text, dot and json", "[cli]") {
    auto plain = run_cli({"nabla", "--gens", "31,47,57", "--element", "564"});
    CHECK(plain.code == 0);
    CHECK(plain.out == "vertices 3\nedges 2\ncomponents 1\n");

    auto betti = run_cli({"nabla", "--gens", "31,47,57", "--element", "171"});
    CHECK(betti.out == "vertices 2\nedges 0\ncomponents 2\n");

    auto dot = run_cli({"nabla", "--gens", "31,47,57", "--element", "564", "--dot", "--show-missing"});
    REQUIRE(dot.code == 0);
    CHECK(dot.out.find("x^13 y z^2") != std::string::npos);
    CHECK(dot.out.find("label=\"5\"") != std::string::npos);
    CHECK(dot.out.find("label=\"15\"") != std::string::npos);
    CHECK(dot.out.find("dashed") != std::string::npos);
    CHECK(dot.out.find("label=\"14\"") != std::string::npos);

    auto js = run_cli({"nabla", "--gens", "31,47,57", "--element", "564", "--json", "--show-missing"});
    REQUIRE(js.code == 0);
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["component_count"] == 1);
    CHECK(j["is_betti"] == false);
    REQUIRE(j["missing"].size() == 1);
    CHECK(j["missing"][0]["weight"] == 14);
}

TEST_CASE("presentation subcommand", "[cli]") {
    auto r = run_cli({"presentation", "--gens", "2,3"});
    CHECK(r.code == 0);
    CHECK(r.out == "x^3 - y^2\nmax total degree: 3\n");
}

TEST_CASE("omega and tame subcommands", "[cli]") {
    auto om = run_cli({"omega", "--gens", "1 0; 1 3; 1 5; 1 7"});
    CHECK(om.code == 0);
    CHECK(om.out == "7\n");

    auto tm = run_cli({"tame", "--gens", "1 0; 1 3; 1 5; 1 7"});
    CHECK(tm.code == 0);
    CHECK(tm.out == "7\n");

    auto el = run_cli({"tame", "--gens", "2,3", "--element", "6"});
    CHECK(el.code == 0);
    CHECK(el.out == "3\n");

    auto bad = run_cli({"omega", "--gens", "2,3,5"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("catena: ") == 0);

    auto fixed = run_cli({"omega", "--gens", "2,3,5", "--minimize"});
    CHECK(fixed.code == 0);
    CHECK(fixed.out == "3\n");

    auto js = run_cli({"omega", "--gens", "2,3", "--json"});
    REQUIRE(js.code == 0);
    CHECK(nlohmann::json::parse(js.out)["omega"] == 3);
}

TEST_CASE("half-factorial subcommand output shape", "[cli]") {
    auto yes = run_cli({"half-factorial", "--gens", "1 0; 1 3; 1 5; 1 7"});
    CHECK(yes.code == 0);
    CHECK(yes.out == "yes\nomega: 1 0\n");

    auto no = run_cli({"half-factorial", "--gens", "2,3"});
    CHECK(no.code == 0);
    CHECK(no.out == "no\n");
}

TEST_CASE("lift subcommand prints generator rows", "[cli]") {
    auto eq = run_cli({"lift", "--gens", "31,47,57", "--kind", "eq"});
    CHECK(eq.code == 0);
    CHECK(eq.out == "1 31; 1 47; 1 57\n");

    auto hom = run_cli({"lift", "--gens", "31,47,57", "--kind", "hom"});
    CHECK(hom.code == 0);
    CHECK(hom.out == "1 0; 1 31; 1 47; 1 57\n");
}

TEST_CASE("report is deterministic and internally consistent", "[cli]") {
    auto a = run_cli({"report", "--gens", "10,11,14,19", "--bound", "80"});
    auto b = run_cli({"report", "--gens", "10,11,14,19", "--bound", "80"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out); // byte identical across runs

    auto j = nlohmann::json::parse(a.out);
    CHECK(j["tool"] == "catena");
    CHECK(j["semigroup"]["minimal_generating"] == true);
    CHECK(j["invariants"]["catenary"] == 4);
    CHECK(j["invariants"]["catenary_hom"] == 5);
    CHECK(j["invariants"]["max_total_degree"] == 4);
    CHECK(j["invariants"]["omega"].is_number_integer());
    CHECK(j["invariants"]["tame"]["value"].is_number_integer());
    for (const auto& e : j["invariants"]["betti"]) {
        CHECK(e["components"].get<int>() >= 2);
        CHECK(e["catenary"].get<int>() >= 2);
    }
}

TEST_CASE("report on a non-minimal system nulls omega unless minimized", "[cli]") {
    auto r = run_cli({"report", "--gens", "2,3,5"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["invariants"]["omega"].is_null());
    CHECK(j["invariants"]["tame"].is_null());

    auto m = run_cli({"report", "--gens", "2,3,5", "--minimize"});
    REQUIRE(m.code == 0);
    auto k = nlohmann::json::parse(m.out);
    CHECK(k["invariants"]["omega"] == 3);
    CHECK(k["semigroup"]["generators"] == nlohmann::json::parse("[[2],[3]]"));
}

TEST_CASE("file input", "[cli]") {
    auto dir = std::filesystem::temp_directory_path();
    auto path = dir / "catena_cli_test_gens.json";
    {
        std::ofstream f(path);
        f << R"({"generators": [[31],[47],[57]]})";
    }
    auto r = run_cli({"betti", "--file", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "171 517 527\n");

    auto both = run_cli({"betti", "--file", path.string(), "--gens", "2,3"});
    CHECK(both.code == 2);

    {
        std::ofstream f(path);
        f << "not json";
    }
    auto bad = run_cli({"betti", "--file", path.string()});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("bad JSON") != std::string::npos);

    std::filesystem::remove(path);
    auto missing = run_cli({"betti", "--file", path.string()});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("cannot open") != std::string::npos);
}

TEST_CASE("input validation exit codes", "[cli]") {
    auto zero = run_cli({"betti", "--gens", "0,5"});
    CHECK(zero.code == 2);
    CHECK(zero.err.find("catena: ") == 0);

    auto dim = run_cli({"catenary", "--gens", "31,47,57", "--element", "1 2"});
    CHECK(dim.code == 2);

    auto notmember = run_cli({"factorizations", "--gens", "31,47,57", "--element", "171"});
    CHECK(notmember.code == 0); // members pass

    auto junk = run_cli({"betti", "--gens", "31,abc"});
    CHECK(junk.code == 2);
    CHECK(junk.err.find("not an integer") != std::string::npos);

    auto none = run_cli({"betti"});
    CHECK(none.code == 2);
    CHECK(none.err.find("no generators") != std::string::npos);
}

TEST_CASE("argument parser errors stay on stderr", "[cli]") {
    auto missing = run_cli({"distance", "--u", "1 2"});
    CHECK(missing.code != 0);
    CHECK(!missing.err.empty());

    auto unknown = run_cli({"frobnicate"});
    CHECK(unknown.code != 0);

    auto badkind = run_cli({"lift", "--gens", "2,3", "--kind", "weird"});
    CHECK(badkind.code != 0);
}

TEST_CASE("version flag", "[cli]") {
    auto r = run_cli({"--version"});
    CHECK(r.code == 0);
    CHECK(r.out == "catena 0.1.0\n");
}

TEST_CASE("budget environment variable", "[cli]") {
    ::setenv("CATENA_BUDGET", "2", 1);
    auto starved = run_cli({"catenary", "--gens", "31,47,57"});
    ::unsetenv("CATENA_BUDGET");
    CHECK(starved.code == 3);
    CHECK(starved.err.find("catena: ") == 0);

    ::setenv("CATENA_BUDGET", "-4", 1);
    auto bad = run_cli({"catenary", "--gens", "31,47,57"});
    ::unsetenv("CATENA_BUDGET");
    CHECK(bad.code == 2);

    ::setenv("CATENA_BUDGET", "100000000", 1);
    auto roomy = run_cli({"catenary", "--gens", "31,47,57"});
    ::unsetenv("CATENA_BUDGET");
    CHECK(roomy.code == 0);
    CHECK(roomy.out == "17\n");
}
