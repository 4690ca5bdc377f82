#include "mpp/cli.hpp"
#include "mpp/document.hpp"
#include "mpp/ehrhart.hpp"
#include "mpp/error.hpp"
#include "mpp/marked_polytopes.hpp"
#include "support.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace mpp;
using namespace testing;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name)
{
    return std::string(MPP_TEST_DATA_DIR) + "/" + name;
}

bool has(const std::string& text, const std::string& needle)
{
    return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("ehrhart on P_3 matches")
{
    auto r = run({"ehrhart", data("p3.json")});
    CHECK(r.code == 0);
    CHECK(has(r.out, "formula: 1, 3, 3, 1"));
    CHECK(has(r.out, "count: 1, 3, 3, 1"));
    CHECK(has(r.out, "MATCH"));
    CHECK(run({"ehrhart", "--builtin", "pm:3,1"}).out == r.out);
    auto chain = run({"ehrhart", data("p3.json"), "--family", "chain"});
    CHECK(chain.code == 0);
    CHECK(has(chain.out, "note:"));
    CHECK(has(chain.out, "MATCH"));
}

TEST_CASE("two-level on two chains sharing x1")
{
    auto r = run({"two-level", data("two_chains.json"), "--family", "chain"});
    CHECK(r.code == 0);
    CHECK(has(r.out, "direct: true"));
    CHECK(has(r.out, "scaling: (1, 1)"));
    CHECK(has(r.out, "criterion: true"));
    CHECK(has(r.out, "AGREE"));
    auto trap = run({"two-level", data("trapezoid.json"), "--method", "direct"});
    CHECK(trap.code == 0);
    CHECK(has(trap.out, "direct: false"));
    CHECK(has(trap.out, "witness: "));
}

TEST_CASE("validate reports violations")
{
    auto good = run({"validate", data("segment.json")});
    CHECK(good.code == 0);
    CHECK(has(good.out, "strict: true"));
    CHECK(has(good.out, "regular: true"));
    auto fig = run({"validate", data("two_chains.json")});
    CHECK(fig.code == 1);
    CHECK(has(fig.out, "regular: false"));
    auto flat = run({"validate", data("nonstrict.json")});
    CHECK(flat.code == 1);
    CHECK(has(flat.out, "strict: false"));
    CHECK(has(flat.out, "violation: "));
}

TEST_CASE("input and usage errors exit with 2")
{
    CHECK(run({"validate", data("malformed.json")}).code == 2);
    CHECK(run({"validate", data("unknown_field.json")}).code == 2);
    CHECK(run({"validate", data("cycle.json")}).code == 2);
    CHECK(run({"validate", data("no_such_file.json")}).code == 2);
    CHECK(run({"validate"}).code == 2);
    CHECK(run({"validate", data("segment.json"), "--builtin", "two-chains"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"polytope", data("segment.json"), "--emit", "faces"}).code == 2);
    CHECK(run({"corpus", "--max-unmarked", "40"}).code == 2);
    auto missing = run({"polytope", data("p3.json"), "--family", "chain-order"});
    CHECK(missing.code == 2);
    CHECK(has(missing.err, "partition"));
    CHECK(run({"help"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("domain errors exit with 1")
{
    // Equal marks on a chain: the formula precondition fails.
    auto r = run({"ehrhart", data("nonstrict.json"), "--method", "formula"});
    CHECK(r.code == 1);
    CHECK(has(r.err, "error: "));
    CHECK(run({"two-level", data("nonstrict.json"), "--method", "criterion"}).code == 1);
}

TEST_CASE("chain-order family uses the document partition")
{
    auto r = run({"ehrhart", data("trapezoid.json"), "--family", "chain-order", "--method", "count"});
    CHECK(r.code == 0);
    auto order = run({"ehrhart", data("trapezoid.json"), "--method", "count"});
    CHECK(r.out == order.out);
    auto tl = run({"two-level", data("trapezoid.json"), "--family", "chain-order"});
    CHECK(tl.code == 0);
    CHECK(has(tl.out, "AGREE"));
}

TEST_CASE("corpus is deterministic")
{
    auto a = run({"corpus", "--seed", "5", "--trials", "20", "--max-unmarked", "4"});
    auto b = run({"corpus", "--seed", "5", "--trials", "20", "--max-unmarked", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(has(a.out, "PASS"));
    auto empty = run({"corpus", "--trials", "0"});
    CHECK(empty.code == 0);
    CHECK(has(empty.out, "0/0"));
}

TEST_CASE("json output")
{
    auto r = run({"--json", "ehrhart", data("p3.json")});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "ehrhart");
    CHECK(j["input"]["name"] == "P_3 with c = 1");
    CHECK(j["result"]["formula"] == nlohmann::json::array({"1/1", "3/1", "3/1", "1/1"}));
    CHECK(j["result"]["match"] == true);
    // The flag is accepted after the subcommand too.
    auto late = run({"polytope", data("segment.json"), "--json"});
    REQUIRE(late.code == 0);
    auto h = nlohmann::json::parse(late.out);
    CHECK(h["result"]["coordinates"] == nlohmann::json::array({"x"}));
    CHECK(h["result"]["rows"].size() == 2);
    auto corpus = nlohmann::json::parse(run({"--json", "corpus", "--trials", "3"}).out);
    CHECK(corpus["result"]["pass"] == true);
}

TEST_CASE("polytope text round trips through parse_hrep")
{
    for (const auto& spec : {"pm:4,1", "two-chains", "diamond:0,3"}) {
        MarkedPoset mp = to_marked_poset(builtin_document(spec));
        for (const HRepresentation& h : {build_order_hrep(mp), build_chain_hrep(mp)}) {
            HRepresentation back = parse_hrep(format_hrep(h));
            CHECK(back.coordinates() == h.coordinates());
            CHECK(enumerate_vertices(back) == enumerate_vertices(h));
        }
    }
    auto r = run({"polytope", "--builtin", "pm:3,1"});
    CHECK(r.code == 0);
    CHECK(enumerate_vertices(parse_hrep(r.out)) == enumerate_vertices(build_order_hrep(pm_family(3, 1))));
    auto v = run({"polytope", "--builtin", "two-chains", "--family", "chain", "--emit", "vertices"});
    CHECK(v.code == 0);
    CHECK(std::count(v.out.begin(), v.out.end(), '\n') == 4);
    auto f = run({"polytope", "--builtin", "two-chains", "--family", "chain", "--emit", "facets"});
    CHECK(parse_hrep(f.out).inequalities().size() == 4);
    CHECK_THROWS_AS(parse_hrep("coords: x\n1 2 <= 3\n"), Error);
}

TEST_CASE("documents round trip through json")
{
    PosetDocument doc = read_document(data("trapezoid.json"));
    PosetDocument back = parse_document(to_json(doc).dump());
    CHECK(back.elements == doc.elements);
    CHECK(back.covers == doc.covers);
    CHECK(back.marked == doc.marked);
    CHECK(back.partition == doc.partition);
    PosetDocument half = parse_document(
        R"({"name": "h", "elements": ["a", "b", "x"], "covers": [["a", "x"], ["x", "b"]], "marked": {"a": 0, "b": "1/2"}})");
    CHECK(half.marked.at("b") == q(1, 2));
    MarkedPoset mp = to_marked_poset(make_document(two_chains(), "fig"));
    CHECK(build_chain_hrep(mp).inequalities().size() == build_chain_hrep(two_chains()).inequalities().size());
}
