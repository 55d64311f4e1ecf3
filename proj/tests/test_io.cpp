#include "doctest.h"

#include <cstdio>
#include <string>

#include <json.hpp>

#include "construction.hpp"
#include "error.hpp"
#include "io.hpp"
#include "oracle.hpp"

using namespace tricolor;
using json = nlohmann::json;

namespace {

TripleSet sample_set() {
    TripleSet s;
    s.n = 2;
    s.add(Triple{BitVec::from_string("10"), BitVec::from_string("01"),
                 BitVec::from_string("11")});
    s.add(Triple{BitVec::from_string("00"), BitVec::from_string("00"),
                 BitVec::from_string("00")});
    return s;
}

} // namespace

TEST_CASE("tripleset serialization is exact and round trips") {
    std::string text = tripleset_to_jsonl(sample_set());
    CHECK(text ==
          "{\"type\":\"tcsfs\",\"n\":2,\"count\":2}\n"
          "{\"a\":\"10\",\"b\":\"01\",\"c\":\"11\"}\n"
          "{\"a\":\"00\",\"b\":\"00\",\"c\":\"00\"}\n");
    TripleSet back = tripleset_from_jsonl(text);
    CHECK(back.n == 2);
    REQUIRE(back.size() == 2);
    CHECK(back.triples[0] == sample_set().triples[0]);
    CHECK(back.triples[1] == sample_set().triples[1]);

    TripleSet empty;
    empty.n = 5;
    TripleSet back_empty = tripleset_from_jsonl(tripleset_to_jsonl(empty));
    CHECK(back_empty.n == 5);
    CHECK(back_empty.size() == 0);
}

TEST_CASE("tripleset reader tolerates blank lines and validates structure") {
    CHECK(tripleset_from_jsonl("\n  \n{\"type\":\"tcsfs\",\"n\":1,\"count\":0}\n\n").n == 1);

    // Truncated JSON.
    CHECK_THROWS_AS(tripleset_from_jsonl("{\"type\":\"tcsfs\",\"n\":1"), Error);
    // Wrong type tag.
    CHECK_THROWS_AS(tripleset_from_jsonl("{\"type\":\"sets\",\"n\":1,\"count\":0}\n"), Error);
    // Count too small / too large.
    CHECK_THROWS_AS(tripleset_from_jsonl("{\"type\":\"tcsfs\",\"n\":1,\"count\":2}\n"
                                         "{\"a\":\"0\",\"b\":\"0\",\"c\":\"0\"}\n"),
                    Error);
    CHECK_THROWS_AS(tripleset_from_jsonl("{\"type\":\"tcsfs\",\"n\":1,\"count\":0}\n"
                                         "{\"a\":\"0\",\"b\":\"0\",\"c\":\"0\"}\n"),
                    Error);
    // Bit string of the wrong length, or with bad characters.
    CHECK_THROWS_AS(tripleset_from_jsonl("{\"type\":\"tcsfs\",\"n\":2,\"count\":1}\n"
                                         "{\"a\":\"0\",\"b\":\"00\",\"c\":\"00\"}\n"),
                    Error);
    CHECK_THROWS_AS(tripleset_from_jsonl("{\"type\":\"tcsfs\",\"n\":2,\"count\":1}\n"
                                         "{\"a\":\"0x\",\"b\":\"00\",\"c\":\"00\"}\n"),
                    Error);
    // Missing field and bad n.
    CHECK_THROWS_AS(tripleset_from_jsonl("{\"type\":\"tcsfs\",\"n\":1,\"count\":1}\n"
                                         "{\"a\":\"0\",\"b\":\"0\"}\n"),
                    Error);
    CHECK_THROWS_AS(tripleset_from_jsonl("{\"type\":\"tcsfs\",\"n\":0,\"count\":0}\n"), Error);
    CHECK_THROWS_AS(tripleset_from_jsonl(""), Error);
    try {
        tripleset_from_jsonl("");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::parse);
    }
}

TEST_CASE("pair sequences read from either header type, c optional") {
    PairSeq p = pairseq_from_jsonl(tripleset_to_jsonl(sample_set()));
    CHECK(p.n == 2);
    REQUIRE(p.size() == 2);
    CHECK(p.pairs[0].first == BitVec::from_string("10"));
    CHECK(p.pairs[0].second == BitVec::from_string("01"));

    PairSeq q = pairseq_from_jsonl("{\"type\":\"pms\",\"n\":1,\"count\":1}\n"
                                   "{\"a\":\"1\",\"b\":\"0\"}\n");
    CHECK(q.size() == 1);

    // The tcsfs reader refuses a pms header.
    CHECK_THROWS_AS(tripleset_from_jsonl("{\"type\":\"pms\",\"n\":1,\"count\":0}\n"), Error);
}

TEST_CASE("apfree serialization round trips and validates") {
    ApFreeSet b;
    b.m = 81;
    b.elements = {0, 1, 3};
    std::string text = apfree_to_json(b);
    CHECK(text == "{\"M\":81,\"elements\":[0,1,3]}\n");
    ApFreeSet back = apfree_from_json(text);
    CHECK(back.m == 81);
    CHECK(back.elements == b.elements);

    CHECK_THROWS_AS(apfree_from_json("{\"M\":81}"), Error);
    CHECK_THROWS_AS(apfree_from_json("{\"M\":0,\"elements\":[]}"), Error);
    CHECK_THROWS_AS(apfree_from_json("{\"M\":9,\"elements\":[3,1]}"), Error);
    CHECK_THROWS_AS(apfree_from_json("{\"M\":9,\"elements\":[1,1]}"), Error);
    CHECK_THROWS_AS(apfree_from_json("{\"M\":9,\"elements\":[9]}"), Error);
    CHECK_THROWS_AS(apfree_from_json("{\"M\":9,\"elements\":[-1]}"), Error);
    CHECK_THROWS_AS(apfree_from_json("not json"), Error);
}

TEST_CASE("verdict serialization") {
    CHECK(verdict_to_json(std::nullopt) == "{\"valid\":true}\n");
    Violation v;
    v.kind = ViolationKind::cross_zero;
    v.i = 1;
    v.j = 1;
    v.k = 2;
    CHECK(verdict_to_json(v) ==
          "{\"valid\":false,\"kind\":\"cross-zero\",\"i\":1,\"j\":1,\"k\":2}\n");
}

TEST_CASE("bound report serialization carries decimal strings") {
    json j = json::parse(bound_report_to_json(bound_report(9, 2)));
    CHECK(j["n"] == 9);
    CHECK(j["p"] == 2);
    CHECK(j["d"] == 3);
    CHECK(j["dim_L"] == "130");
    CHECK(j["ub_theorem"] == "390");
    CHECK(j["ub_abstract"] == "504");
    CHECK(j["lb_formula"].is_number_float());

    json j3 = json::parse(bound_report_to_json(bound_report(2, 3)));
    CHECK(j3["ub_theorem"] == "9");
    CHECK_FALSE(j3.contains("ub_abstract"));

    // Values past 64 bits stay exact.
    json big = json::parse(bound_report_to_json(bound_report(200, 2)));
    CHECK(big["dim_L"].get<std::string>().size() > 19);
}

TEST_CASE("oracle result serialization") {
    json j = json::parse(oracle_result_to_json(max_tcsfs_exact(1)));
    CHECK(j["n"] == 1);
    CHECK(j["max_size"] == 1);
    CHECK(j["proven"] == true);
    CHECK(j["nodes_explored"].is_number_unsigned());
    CHECK(j["witness"]["n"] == 1);
    CHECK(j["witness"]["count"] == 1);
    REQUIRE(j["witness"]["triples"].size() == 1);
    CHECK(j["witness"]["triples"][0]["a"] == "0");
}

TEST_CASE("stats serialization: structure, determinism, no thread field") {
    ConstructionParams p;
    p.n = 3;
    p.trials = 4;
    p.seed = 1;
    ConstructionResult r = run_trials(p);
    std::string text = stats_to_json(r);
    CHECK(text == stats_to_json(r));

    json j = json::parse(text);
    CHECK(j["params"]["n"] == 3);
    CHECK(j["params"]["n_prime"] == 3);
    CHECK(j["params"]["M"] == 9);
    CHECK(j["params"]["b_method"] == "greedy");
    CHECK(j["params"]["b_size"] == 4);
    CHECK(j["params"]["seed"] == 1);
    CHECK(j["params"]["trials"] == 4);
    CHECK_FALSE(j["params"].contains("threads"));
    REQUIRE(j["trials"].size() == 4);
    CHECK(j["trials"][0]["t"] == 1);
    CHECK(j["trials"][3]["t"] == 4);
    for (const auto& row : j["trials"]) {
        CHECK(row.contains("Y"));
        CHECK(row.contains("Y0"));
        CHECK(row.contains("Y1"));
        CHECK(row.contains("Y2"));
        CHECK(row.contains("Z"));
    }
    CHECK(j["predicted_EY"] == "8/27");  // 6*4/81 reduced
}

TEST_CASE("summary serialization exposes means, errors, and exact predictions") {
    ConstructionParams p;
    p.n = 9;
    p.trials = 50;
    p.seed = 2;
    ConstructionResult r = run_trials(p);
    json j = json::parse(construction_summary_to_json(r));
    CHECK(j["n"] == 9);
    CHECK(j["M"] == 81);
    CHECK(j["b_size"] == 16);
    CHECK(j["best_size"].get<std::size_t>() == r.best.size());
    CHECK(j["predicted_EY"] == "8960/2187");  // 1680*16/6561 reduced
    CHECK(j["predicted_EY_value"].get<double>() == doctest::Approx(4.0969364426));
    CHECK(j["collision_factor"] == "19/81");
    CHECK(j["mean_Y"].is_number());
    CHECK(j["se_Y"].is_number());
    CHECK(j["mean_Z"].is_number());

    // Degenerate dimension still serializes.
    ConstructionParams tiny;
    tiny.n = 1;
    tiny.trials = 2;
    ConstructionResult rt = run_trials(tiny);
    json jt = json::parse(construction_summary_to_json(rt));
    CHECK(jt["n_prime"] == 0);
    CHECK(jt["mean_Z"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("file helpers report io errors") {
    CHECK_THROWS_AS(read_file("/nonexistent/path/file.json"), Error);
    try {
        read_file("/nonexistent/path/file.json");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::io);
    }
    std::string path = "io_test_roundtrip.tmp";
    write_file(path, "payload");
    CHECK(read_file(path) == "payload");
    std::remove(path.c_str());
}
