#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "quadric/cli.hpp"

using namespace quadric;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    args.push_back("--json");
    const Run r = run_cli(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

} // namespace

TEST_CASE("chern subcommands") {
    const json tw = run_json({"chern", "twist", "-r", "3", "-c", "1,2,2", "-k", "1"});
    CHECK(tw["result"]["c1"] == 4);
    CHECK(tw["result"]["c2"] == 12);
    CHECK(tw["result"]["c3"] == 8);

    const json du = run_json({"chern", "dual", "-r", "2", "-c", "1,1,0"});
    CHECK(du["result"]["c1"] == -1);
    CHECK(du["result"]["c2"] == 1);

    const json wh = run_json({"chern", "whitney", "--sub", "1,-1,0,0", "--ambient-rank", "5"});
    CHECK(wh["result"]["rank"] == 4);
    CHECK(wh["result"]["c1"] == 1);
    CHECK(wh["result"]["c2"] == 2);
    CHECK(wh["result"]["c3"] == 2);

    const json te = run_json({"chern", "tensor", "-r", "2", "-c", "-1,3,0", "-R", "1", "-C", "2,0,0"});
    CHECK(te["result"]["rank"] == 2);
    CHECK(te["result"]["c1"] == 3);

    const Run text = run_cli({"chern", "twist", "-r", "3", "-c", "1,2,2", "-k", "1"});
    CHECK(text.out == "(3; 4, 12, 8)   c(E) = 1 + 4h + 12l + 8p\n");
}

TEST_CASE("chi") {
    const json both = run_json({"chi", "-r", "1", "-c", "2,0,0"});
    CHECK(both["result"]["formula"]["num"] == 14);
    CHECK(both["result"]["formula"]["den"] == 1);
    CHECK(both["result"]["hrr"]["num"] == 14);

    const json sigma = run_json({"chi", "-r", "2", "-c", "1,1,0"});
    CHECK(sigma["result"]["formula"]["num"] == 4);

    const json triv = run_json({"chi", "-r", "1", "-c", "0,0,0", "--method", "formula"});
    CHECK(triv["result"]["formula"]["num"] == 1);
    CHECK(!triv["result"].contains("hrr"));

    // non-integral chi is reported, not rejected
    const json odd = run_json({"chi", "-r", "1", "-c", "1,1,1"});
    CHECK(odd["status"] == "flagged");
    CHECK(odd["result"]["formula"]["den"] != 1);
    CHECK(!odd["citations"].empty());
}

TEST_CASE("coh") {
    const json phi1 = run_json({"coh", "phi", "1"});
    CHECK(phi1["result"]["table"]["h0"] == 24);
    const json adual = run_json({"coh", "Adual", "0"});
    CHECK(adual["result"]["table"]["h1"] == 1);
    const json sm1 = run_json({"coh", "spinor", "-1"});
    CHECK(sm1["result"]["table"]["h0"] == 0);
    CHECK(sm1["result"]["table"]["h3"] == 0);
    const json pair = run_json({"coh", "pair:AdualA_same", "0"});
    CHECK(pair["result"]["table"]["h1"] == 4);

    const Run bad = run_cli({"coh", "pair:AdualA_same", "3"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("catalogued at twist") != std::string::npos);

    const Run unknown = run_cli({"coh", "pair:Nope", "0"});
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("catalogue holds") != std::string::npos);
}

TEST_CASE("classify") {
    const json c1 = run_json({"classify", "--c1", "1"});
    CHECK(c1["result"]["entries"].size() == 4); // 3 rank-3 rows + Phi

    const json indec = run_json({"classify", "--c1", "2", "--indecomposable"});
    int flagged = 0;
    for (const auto& e : indec["result"]["entries"])
        if (e.contains("flagged"))
            ++flagged;
    CHECK(flagged == 1);
    CHECK(indec["status"] == "flagged");

    const json zero = run_json({"classify", "--c1", "0"});
    CHECK(zero["result"]["entries"].size() == 1);

    const json r3 = run_json({"classify", "--c1", "2", "--rank3-only"});
    CHECK(r3["result"]["entries"].size() == 9);

    const Run bad = run_cli({"classify", "--c1", "4"});
    CHECK(bad.code == 1);
}

TEST_CASE("delpezzo and trisecant") {
    const json dp = run_json({"delpezzo", "6", "2"});
    REQUIRE(dp["result"]["classes"].size() == 2);
    CHECK(dp["result"]["classes"][0]["a"] == 4);
    CHECK(dp["result"]["classes"][1]["a"] == 5);

    const json tri = run_json({"trisecant", "6", "1"});
    CHECK(tri["result"]["count"] == 2);
    const json tri0 = run_json({"trisecant", "4", "0"});
    CHECK(tri0["result"]["count"] == 0);

    const json neg = run_json({"trisecant", "9", "9"});
    CHECK(neg["status"] == "flagged");
    CHECK(neg["result"]["infinitely_many"] == true);
    CHECK(!neg["citations"].empty());
}

TEST_CASE("verify-paper") {
    const Run full = run_cli({"verify-paper"});
    CHECK(full.code == 0); // flagged discrepancies are not failures
    CHECK(full.out.find("FAIL") == std::string::npos);
    CHECK(full.out.find("FLAG") != std::string::npos);

    const json rep = run_json({"verify-paper"});
    CHECK(rep["result"]["failed"] == 0);
    // the three understood discrepancies: the published c3 twist line, the
    // rank-3 (2,4,4) row, and the section counts of Phi
    CHECK(rep["result"]["flagged"] == 3);
    CHECK(rep["status"] == "flagged");

    const json s3 = run_json({"verify-paper", "--section", "3"});
    CHECK(s3["result"]["flagged"] == 0);
    CHECK(s3["result"]["failed"] == 0);
}

TEST_CASE("deterministic output") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"classify", "--c1", "2"},
             {"verify-paper"},
             {"coh", "phi", "0", "--json"},
             {"delpezzo", "5", "1", "--json"}}) {
        const Run a = run_cli(args), b = run_cli(args);
        CHECK(a.out == b.out);
        CHECK(a.code == b.code);
    }
}

TEST_CASE("json round trip") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"chern", "twist", "-r", "3", "-c", "1,2,2", "-k", "1"},
             {"classify", "--c1", "2", "--indecomposable"},
             {"verify-paper", "--section", "2"}}) {
        const json j = run_json(args);
        CHECK(json::parse(j.dump()) == j);
        for (const auto& c : j["citations"]) {
            CHECK(c.contains("ref"));
            CHECK(c.contains("quote"));
            CHECK(c.contains("status"));
        }
    }
}

TEST_CASE("usage errors") {
    CHECK(run_cli({"chern", "twist", "-r", "3", "-c", "1,2"}).code == 2);
    CHECK(run_cli({"nonsense"}).code == 2);
    CHECK(run_cli({"chi", "-r", "x", "-c", "0,0,0"}).code == 2);
    CHECK(run_cli({"trisecant", "5"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
}
