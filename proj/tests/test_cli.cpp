#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "tyk/json_io.hpp"
#include "tyk/lowrank.hpp"
#include "tyk/reflection.hpp"
#include "tyk/weights.hpp"

using namespace tyk;
using Json = io::Json;

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(TYK_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), p)) > 0) out.append(buf, n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const Json& j) {
    std::string path = std::string("cli_") + name + ".json";
    std::ofstream f(path);
    f << j.dump();
    return path;
}

} // namespace

TEST_CASE("verify command") {
    RunResult triv = run("verify --pair so6/so4+so2 --solution trivial");
    CHECK(triv.code == 0);
    CHECK(Json::parse(triv.out).at("all_hold").get<bool>());

    RunResult km = run("verify --pair '{\"family\":\"DIa\",\"N\":6,\"q\":2}' --solution kmatrix");
    CHECK(km.code == 0);

    // a corrupted matrix file is a usage error
    std::ofstream bad("cli_bad_matrix.json");
    bad << "{\"entries\": [[0, 0,";
    bad.close();
    CHECK(run("verify --pair so5/so4 --matrix cli_bad_matrix.json").code == 2);
}

TEST_CASE("classify command and exit codes") {
    SymmetricPair bi = SymmetricPair::build(Family::BI, 5, 1);
    std::string wfile = write_temp("triv51", io::weight_json(trivial_weight(bi)));
    RunResult fin = run("classify " + wfile);
    CHECK(fin.code == 0);
    Json vr = Json::parse(fin.out);
    CHECK(vr.at("verdict") == "FiniteDim");
    CHECK(vr.at("tuple").at("alpha") == "5/4");

    Json badtuple{{"pair", "so5/so4"}, {"alpha", "7/4"}, {"polys", Json::array({1, 1})}};
    std::string tfile = write_temp("bad51", badtuple);
    CHECK(run("classify " + tfile).code == 1);

    Json cii{{"pair", {{"family", "CII"}, {"N", 8}, {"q", 2}}}, {"alpha", "2"},
             {"polys", Json::array({1, 1, 1, 1})}};
    CHECK(run("classify " + write_temp("cii", cii)).code == 3);

    CHECK(run("classify 'not json at all'").code == 2);
}

TEST_CASE("classify batches preserve order") {
    SymmetricPair bi = SymmetricPair::build(Family::BI, 5, 1);
    Json batch = Json::array();
    batch.push_back(io::weight_json(trivial_weight(bi)));
    batch.push_back(Json{{"pair", "so5/so4"}, {"alpha", "7/4"}, {"polys", Json::array({1, 1})}});
    std::string bfile = write_temp("batch", batch);
    RunResult r = run("classify " + bfile + " --jobs 2");
    Json out = Json::parse(r.out);
    REQUIRE(out.is_array());
    CHECK(out.at(0).at("verdict") == "FiniteDim");
    CHECK(out.at(1).at("verdict") == "NotFiniteDim");
    CHECK(r.code == 1);
}

TEST_CASE("transform commands") {
    Json t{{"pair", "so5/so4"}, {"alpha", "3/4"}, {"polys", Json::array({1, 1})}};
    RunResult tw = run("twist " + write_temp("twist", t));
    CHECK(tw.code == 0);
    Json twisted = Json::parse(tw.out);
    CHECK(twisted.at("alpha") == "7/4");
    CHECK(twisted.at("polys").at(1).at("roots").size() == 2);

    SymmetricPair bi7 = SymmetricPair::build(Family::BI, 7, 1);
    std::string wfile = write_temp("triv71", io::weight_json(trivial_weight(bi7)));
    RunResult assoc = run("associate " + wfile);
    CHECK(assoc.code == 0);
    CHECK(Json::parse(assoc.out).at("alpha") == "7/4");

    Json t7 = Json::parse(assoc.out);
    RunResult rr = run("restrict " + write_temp("t7", t7) + " --m 1");
    CHECK(rr.code == 0);
    CHECK(Json::parse(rr.out).at("alpha") == "5/4");

    RunResult ev = run("evaluate --pair so3 --mu 0");
    CHECK(ev.code == 0);
    Json evj = Json::parse(ev.out);
    CHECK(evj.at("tuple").at("alpha") == "3/4");
    CHECK(evj.at("checks").at(0).at("holds").get<bool>());

    // synthesize round trip through files
    RunResult sy = run("synthesize " + write_temp("t7b", t7));
    CHECK(sy.code == 0);
    std::string wfile2 = write_temp("synth71", Json::parse(sy.out));
    CHECK(Json::parse(run("associate " + wfile2).out) == t7);
}

TEST_CASE("serialization round trips") {
    SymmetricPair sp = SymmetricPair::from_id("so5/so3+so2");
    // matrices round trip through the entry format and verify from a file
    MatN S = trivial_solution(sp);
    MatN back = io::matn_from(sp, io::matn_json(S));
    CHECK((S - back).is_zero());
    std::string mfile = write_temp("gmat", io::matn_json(S));
    CHECK(run("verify --pair so5/so3+so2 --matrix " + mfile).code == 0);

    // weights round trip; polynomials parse from both forms
    HighestWeight w = kmatrix_weight(sp, Rational(1, 2));
    CHECK(io::weight_from(io::weight_json(w)) == w);
    UniPoly p = io::unipoly_from(Json{{"roots", Json::array({Json::array({"1/2", 2})})},
                                      {"monic", true}});
    CHECK(p == UniPoly::from_roots({{Rational(1, 2), 2}}));
}

TEST_CASE("deterministic output bytes") {
    for (const std::string& cmd :
         {std::string("verify --pair so5/so4 --solution trivial"),
          std::string("evaluate --pair so4 --mu 1 --mu2 1/2 --pretty")}) {
        RunResult a = run(cmd), b = run(cmd);
        CHECK(a.out == b.out);
        CHECK(a.code == b.code);
    }
}

TEST_CASE("degree cap from the environment") {
    Json huge{{"pair", "so5/so4"},
              {"alpha", "3/4"},
              {"polys", Json::array(
                            {1, Json{{"roots", Json::array({Json::array({"1", 200})})},
                                     {"center", "2"}}})}};
    std::string f = write_temp("huge", huge);
    // degree 200 exceeds the default cap of 128
    CHECK(run("classify " + f).code == 2);
    // with a raised cap the input parses
    std::string cmd = "TYK_MAX_DEGREE=512 " + std::string(TYK_CLI_PATH) + " classify " + f +
                      " >/dev/null 2>/dev/null";
    int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 0);
}
