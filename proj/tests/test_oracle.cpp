#include "doctest.h"

#include <cstdint>
#include <vector>

#include "bounds.hpp"
#include "error.hpp"
#include "oracle.hpp"
#include "oracles.hpp"
#include "verify.hpp"

using namespace tricolor;

TEST_CASE("candidate triples enumeration") {
    std::vector<Triple> c0 = all_candidate_triples(0);
    CHECK(c0.size() == 1);

    std::vector<Triple> c1 = all_candidate_triples(1);
    REQUIRE(c1.size() == 4);
    CHECK(c1[0].a.to_string() == "0");
    CHECK(c1[0].b.to_string() == "0");
    CHECK(c1[0].c.to_string() == "0");
    CHECK(c1[1].b.to_string() == "1");
    CHECK(c1[1].c.to_string() == "1");
    CHECK(c1[3].a.to_string() == "1");
    CHECK(c1[3].b.to_string() == "1");
    CHECK(c1[3].c.to_string() == "0");

    CHECK(all_candidate_triples(2).size() == 16);
    for (const Triple& t : all_candidate_triples(3)) CHECK(t.c == xor_add(t.a, t.b));
    CHECK_THROWS_AS(all_candidate_triples(9), Error);
}

TEST_CASE("exact maximum at n = 0 and n = 1") {
    OracleResult o0 = max_tcsfs_exact(0);
    CHECK(o0.max_size == 1);
    CHECK(o0.proven);
    CHECK_FALSE(verify_tcsfs(o0.witness));

    OracleResult o1 = max_tcsfs_exact(1);
    CHECK(o1.max_size == 1);
    CHECK(o1.proven);
    CHECK(o1.nodes_explored > 0);
    CHECK(o1.witness.size() == 1);
    CHECK_FALSE(verify_tcsfs(o1.witness));
    CHECK(Int(static_cast<long>(o1.max_size)) <= ub_pms(1, 2));

    // Every pair of distinct candidates at n = 1 violates the definition.
    std::vector<Triple> c1 = all_candidate_triples(1);
    for (std::size_t i = 0; i < c1.size(); ++i)
        for (std::size_t j = i + 1; j < c1.size(); ++j) {
            TripleSet s;
            s.n = 1;
            s.add(c1[i]);
            s.add(c1[j]);
            CHECK_FALSE(testref::naive_valid_tcsfs(s));
        }
}

TEST_CASE("exact maximum at n = 2 matches full subset enumeration") {
    OracleResult o2 = max_tcsfs_exact(2);
    CHECK(o2.proven);
    CHECK(o2.max_size == testref::max_tcsfs_bruteforce(2));
    CHECK(o2.witness.size() == o2.max_size);
    CHECK_FALSE(verify_tcsfs(o2.witness));
    CHECK(testref::naive_valid_tcsfs(o2.witness));
    CHECK(Int(static_cast<long>(o2.max_size)) <= ub_pms(2, 2));
    CHECK(max_tcsfs_exact(1).max_size == testref::max_tcsfs_bruteforce(1));
}

TEST_CASE("monotone in n and bounded") {
    std::size_t prev = 0;
    for (int n = 0; n <= 2; ++n) {
        OracleResult o = max_tcsfs_exact(n);
        CHECK(o.max_size >= prev);
        prev = o.max_size;
        if (n >= 1) CHECK(Int(static_cast<long>(o.max_size)) <= ub_pms(n, 2));
    }
}

TEST_CASE("node budget stops the search honestly") {
    OracleResult full = max_tcsfs_exact(2, 0);
    OracleResult cut = max_tcsfs_exact(2, 5);
    CHECK_FALSE(cut.proven);
    CHECK(cut.nodes_explored <= 5);
    CHECK(cut.max_size <= full.max_size);
    CHECK_FALSE(verify_tcsfs(cut.witness));

    // A budget larger than the full tree changes nothing.
    OracleResult wide = max_tcsfs_exact(2, full.nodes_explored + 1000);
    CHECK(wide.proven);
    CHECK(wide.max_size == full.max_size);
}

TEST_CASE("n = 3 runs under a budget and stays within bounds") {
    OracleResult o3 = max_tcsfs_exact(3, 2'000'000);
    CHECK(o3.max_size >= max_tcsfs_exact(2).max_size);
    CHECK(Int(static_cast<long>(o3.max_size)) <= ub_pms(3, 2));
    CHECK_FALSE(verify_tcsfs(o3.witness));
    CHECK(testref::naive_valid_tcsfs(o3.witness));
}

TEST_CASE("dimension limit enforced") {
    CHECK_THROWS_AS(max_tcsfs_exact(4), Error);
    try {
        max_tcsfs_exact(4);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::limit);
    }
    CHECK_THROWS_AS(max_tcsfs_exact(-1), Error);
}
