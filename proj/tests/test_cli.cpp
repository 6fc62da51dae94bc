#include <catch_amalgamated.hpp>

#include <sstream>

#include "coxmono/cli.hpp"

using coxmono::cli::run;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("zeta command prints the canonical rational function") {
    Result r = invoke({"zeta", "A2"});
    CHECK(r.code == 0);
    CHECK(r.out == "(1-T^6)/((1-T^2)(1-T^3))\n");
    Result b2 = invoke({"zeta", "B2"});
    CHECK(b2.out == "(1-T^4)/(1-T^2)\n");
}

TEST_CASE("chambers and degrees commands") {
    Result r = invoke({"chambers", "B2"});
    CHECK(r.code == 0);
    CHECK(r.out == "8\n");
    Result d = invoke({"degrees", "B3"});
    CHECK(d.code == 0);
    CHECK(d.out.find("degrees: 2 4 6") != std::string::npos);
    CHECK(d.out.find("order: 48") != std::string::npos);
    Result m = invoke({"molien", "B2"});
    CHECK(m.out.find("degrees: 2 4") != std::string::npos);
}

TEST_CASE("class command variants") {
    Result m = invoke({"class", "A2"});
    CHECK(m.code == 0);
    CHECK(m.out.find("class:") != std::string::npos);
    CHECK(m.out.find("zeta:") != std::string::npos);
    Result g = invoke({"class", "B2", "--at", "inf", "--which", "globalB"});
    CHECK(g.code == 0);
    CHECK(g.out.find("[0/1] + [1/2]") != std::string::npos);  // V_2
}

TEST_CASE("check commands pass on valid diagrams") {
    for (const char* id : {"deg", "conn", "compl", "otherform"}) {
        Result r = invoke({"check", "A2", "--identity", id});
        INFO(id << ": " << r.out << r.err);
        CHECK(r.code == 0);
        CHECK(r.out.find("pass: true") != std::string::npos);
    }
    Result ab = invoke({"check", "B2", "--identity", "ab2", "--chi", "1/5"});
    CHECK(ab.code == 0);
}

TEST_CASE("verify finite command") {
    Result r = invoke({"verify-finite", "A1", "-p", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("4/4 characters pass") != std::string::npos);
    Result j = invoke({"verify-finite", "A1", "-p", "5", "--json"});
    json p = json::parse(j.out);
    CHECK(p.at("schema") == "1");
    CHECK(p.at("pass") == true);
    CHECK(p.at("entries").size() == 4);
}

TEST_CASE("charsum and numeric commands") {
    Result c = invoke({"charsum", "A1", "-p", "5", "--chi", "0"});
    CHECK(c.code == 0);
    CHECK(c.out.find("pass: true") != std::string::npos);
    Result i = invoke({"integral", "A1", "-s", "1"});
    CHECK(i.code == 0);
    Result k = invoke({"kappa", "B2"});
    CHECK(k.out == "1/64\n");
    Result mx = invoke({"max", "B2", "--restarts", "10", "--seed", "7"});
    CHECK(mx.code == 0);
    CHECK(mx.out.find("closed_form: 0.0625") != std::string::npos);
}

TEST_CASE("subgraphs command enumerates connected pieces") {
    Result r = invoke({"subgraphs", "A2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("count: 3") != std::string::npos);
    CHECK(r.out.find("-> A1") != std::string::npos);
    CHECK(r.out.find("-> A2") != std::string::npos);
}

TEST_CASE("json output round trips to the text rendering") {
    std::vector<std::vector<std::string>> cases = {
        {"zeta", "A2"},
        {"zeta", "B3"},
        {"class", "B2", "--which", "qN"},
        {"degrees", "F4"},
        {"chambers", "A3"},
        {"euler", "A2"},
        {"kappa", "A1"},
        {"subgraphs", "B2"},
        {"check", "A2", "--identity", "conn"},
        {"verify-finite", "A1", "-p", "5"},
    };
    for (auto args : cases) {
        Result text = invoke(args);
        auto jargs = args;
        jargs.push_back("--format");
        jargs.push_back("json");
        Result js = invoke(jargs);
        INFO(args[0] << " " << args[1]);
        REQUIRE(js.code == text.code);
        json payload = json::parse(js.out);
        CHECK(coxmono::cli::text_render(payload) == text.out);
    }
}

TEST_CASE("usage errors exit with code two") {
    CHECK(invoke({"zeta"}).code == 2);
    CHECK(invoke({"frobnicate", "A2"}).code == 2);
    CHECK(invoke({"zeta", "Z9"}).code == 2);
    CHECK(invoke({"verify-finite", "A2", "-p", "3"}).code == 2);   // p divides |G|
    CHECK(invoke({"verify-finite", "A1", "-p", "9"}).code == 2);   // not prime
    CHECK(invoke({"integral", "A3", "-s", "1"}).code == 2);        // unsupported rank
    CHECK(invoke({"check", "A2", "--identity", "bogus"}).code == 2);
    CHECK(invoke({}).code == 2);
}

TEST_CASE("help is not an error") {
    CHECK(invoke({"--help"}).code == 0);
}
