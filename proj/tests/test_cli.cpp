#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = sgps::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> lines(const std::string& text) {
    std::vector<nlohmann::json> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(nlohmann::json::parse(line));
    return out;
}

std::string temp_file(const std::string& name, const std::string& content) {
    const std::string path = "sgps_cli_test_" + name + ".txt";
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("invariants in JSON") {
    const auto r = run({"invariants", "--gens", "5,7,9", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["frobenius"] == 13);
    CHECK(j["genus"] == 8);
    CHECK(j["multiplicity"] == 5);
    CHECK(j["type"] == 2);
    CHECK(j["semigroup"]["minimal_generators"] == nlohmann::json::array({5, 7, 9}));
    // the flag may also precede the subcommand
    CHECK(run({"--json", "invariants", "--gens", "5,7,9"}).out == r.out);
}

TEST_CASE("text output") {
    const auto r = run({"invariants", "--gens", "5,7,9"});
    CHECK(r.code == 0);
    CHECK(r.out.find("semigroup: <5,7,9>") != std::string::npos);
    CHECK(r.out.find("frobenius: 13") != std::string::npos);
}

TEST_CASE("counting censuses") {
    const auto r = run({"enumerate", "frobenius", "21", "--count"});
    CHECK(r.code == 0);
    CHECK(r.out == "1828\n");
}

TEST_CASE("--count equals the length of the full listing") {
    const std::vector<std::vector<std::string>> cases = {
        {"enumerate", "frobenius", "9"},
        {"enumerate", "genus", "6"},
        {"enumerate", "pf", "13,19,25"},
        {"enumerate", "irreducible", "15"},
        {"enumerate", "family", "21", "--family", "free"},
        {"enumerate", "variety", "11", "--variety", "arf"},
        {"enumerate", "over", "--gens", "5,7,9"},
    };
    for (auto args : cases) {
        auto full = args;
        full.push_back("--json");
        const auto listing = nlohmann::json::parse(run(full).out);
        args.push_back("--count");
        const auto counted = run(args);
        CHECK(counted.code == 0);
        CHECK(std::stoul(counted.out) == listing["semigroups"].size());
        CHECK(listing["count"] == listing["semigroups"].size());
    }
}

TEST_CASE("domain errors exit 1 with a message") {
    const auto r = run({"invariants", "--gens", "6,10"});
    CHECK(r.code == 1);
    CHECK(r.err.find("generators not coprime") != std::string::npos);
    CHECK(run({"construct", "--gens", "5,7,9", "--remove", "10"}).code == 1);
    CHECK(run({"enumerate", "frobenius", "0"}).code == 1);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"invariants"}).code == 2);
    CHECK(run({"invariants", "--gens", "5,x"}).code == 2);
    CHECK(run({"invariants", "--gens", "5,7", "--gaps", "1"}).code == 2);
    CHECK(run({"enumerate", "frobenius"}).code == 2);
    CHECK(run({"enumerate", "spirals", "3"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("every semigroup source") {
    const std::vector<std::vector<std::string>> sources = {
        {"--gens", "5,7,9"},
        {"--gaps", "1,2,3,4,6,8,11,13"},
        {"--fundamental-gaps", "6,8,11,13"},
        {"--small-elements", "0,5,7,9,10,12,14"},
        {"--apery", "0,16,7,18,9"},
        {"--subadditive", "16,7,18,9,0"},
    };
    for (auto args : sources) {
        args.insert(args.begin(), "invariants");
        args.push_back("--json");
        const auto r = run(args);
        REQUIRE(r.code == 0);
        CHECK(nlohmann::json::parse(r.out)["semigroup"]["minimal_generators"] == nlohmann::json::array({5, 7, 9}));
    }
    const auto i = nlohmann::json::parse(run({"invariants", "--interval", "71/5,153/8", "--json"}).out);
    CHECK(i["semigroup"]["minimal_generators"] == nlohmann::json::array({15, 16, 17, 18, 19, 29, 43}));
    const auto q = nlohmann::json::parse(run({"invariants", "--inequality", "765,10863,197", "--json"}).out);
    CHECK(q["semigroup"] == i["semigroup"]);
}

TEST_CASE("JSON records round-trip") {
    for (const auto& sub : {"invariants", "descriptors", "presentation", "decompose", "profile"}) {
        const auto first = run({sub, "--gens", "6,9,10,14", "--json"});
        REQUIRE(first.code == 0);
        const auto j = nlohmann::json::parse(first.out);
        std::string gens;
        for (const auto& g : j["semigroup"]["minimal_generators"]) gens += (gens.empty() ? "" : ",") + g.dump();
        CHECK(run({sub, "--gens", gens, "--json"}).out == first.out);
    }
}

TEST_CASE("ideal operations accept negative generators") {
    auto r = run({"ideal", "--gens", "3,4,5", "--ideal=-1,2", "--json"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["ideal"]["generators"] == nlohmann::json::array({-1}));
    r = run({"ideal", "--gens", "3,4,5", "--ideal", "5", "--other", "4", "--op", "intersection", "--json"});
    CHECK(nlohmann::json::parse(r.out)["result"]["generators"] == nlohmann::json::array({8, 9, 10}));
    CHECK(run({"ideal", "--gens", "3,4,5", "--op", "sum", "--ideal", "5"}).code == 2);
}

TEST_CASE("factorizations, profile and polynomial") {
    auto j = nlohmann::json::parse(run({"factorize", "--list", "10,11,13,15", "--element", "100", "--json"}).out);
    CHECK(j["denumerant"] == 16);
    CHECK(j["catenary"] == 3);
    CHECK(j["tame"] == 5);
    CHECK(j["elasticity"] == "10/7");
    j = nlohmann::json::parse(run({"profile", "--gens", "5,7,9", "--json"}).out);
    CHECK(j["elasticity"] == "9/5");
    CHECK(j["catenary_degree"] == 5);
    j = nlohmann::json::parse(run({"polynomial", "--coeffs", "1,-1,1", "--json"}).out);
    CHECK(j["graeffe"] == nlohmann::json::array({1, 1, 1}));
    CHECK(j["cyclotomic"] == true);
    CHECK(run({"polynomial", "--coeffs", "1,2"}).code == 1);
}

TEST_CASE("random is reproducible") {
    const auto a = run({"random", "--max-gens", "5", "--bound", "60", "--seed", "11"});
    CHECK(a.code == 0);
    CHECK(a.out == run({"random", "--max-gens", "5", "--bound", "60", "--seed", "11"}).out);
}

TEST_CASE("batch mode") {
    auto path = temp_file("two", "5,7,9\n2,3\n");
    auto r = run({"batch", path});
    CHECK(r.code == 0);
    auto recs = lines(r.out);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0]["frobenius"] == 13);
    CHECK(recs[1]["frobenius"] == 1);
    std::remove(path.c_str());

    path = temp_file("empty", "");
    r = run({"batch", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::remove(path.c_str());

    path = temp_file("bad", "6,10\n\n5,7,9\nabc\n");
    r = run({"batch", path});
    CHECK(r.code == 0);
    recs = lines(r.out);
    REQUIRE(recs.size() == 3);
    CHECK(recs[0]["error"] == "NotCoprime");
    CHECK(recs[1]["frobenius"] == 13);
    CHECK(recs[2].contains("error"));
    std::remove(path.c_str());

    CHECK(run({"batch", "/nonexistent/sgps/file"}).code == 1);
}

} // TEST_SUITE
