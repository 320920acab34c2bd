#include "edds/crosscheck.hpp"

#include "doctest.h"

using namespace edds;

TEST_CASE("target names round trip") {
    for (Target t : kAllTargets) CHECK(parse_target(target_name(t)) == t);
    CHECK(!parse_target("l").has_value());
}

TEST_CASE("build_target applies the complement after the transform") {
    const Graph c4 = gen_family(Family::cycle, 4);
    CHECK(build_target(c4, Target::m).graph == middle(c4).graph);
    CHECK(build_target(c4, Target::m_bar).graph == complement(middle(c4).graph));
    CHECK(build_target(c4, Target::s_bar).tags == subdivision(c4).tags);
    CHECK(build_target(c4, Target::mu).graph.order() == 9);
}

TEST_CASE("cross_check_one on known cases") {
    const auto rec = cross_check_one(gen_family(Family::cycle, 4), Target::m_bar);
    CHECK(rec.graph6 == "Cl");
    CHECK(rec.decider_exists);
    CHECK(rec.oracle_exists);
    CHECK(rec.witness_valid == true);
    CHECK(rec.size_law_ok == true);
    CHECK(rec.pass());

    const auto mu = cross_check_one(gen_family(Family::path, 5), Target::mu);
    CHECK(!mu.decider_exists);
    CHECK(!mu.oracle_exists);
    CHECK(!mu.witness_valid.has_value());
    CHECK(mu.pass());

    const auto s = cross_check_one(gen_family(Family::path, 3), Target::s);
    CHECK(s.decider_exists);
    CHECK(s.witness_valid == true);
    CHECK(s.size_law_ok == true); // 4n/3 and the originals bound
}

TEST_CASE("exhaustive corpus sizes") {
    CHECK(exhaustive_corpus(0).size() == 1);
    CHECK(exhaustive_corpus(3).size() == 1 + 1 + 2 + 8);
    CHECK(exhaustive_corpus(4).size() == 76);
}

TEST_CASE("full sweep passes at n <= 3 and totals are consistent") {
    const auto corpus = exhaustive_corpus(3);
    CrossCheckOptions options;
    const auto report = run_crosscheck(corpus, options);
    CHECK(report.records.size() == corpus.size() * 6);
    CHECK(report.all_pass());
    CHECK(report.pass_count() == report.records.size());
    for (Target t : kAllTargets)
        CHECK(report.pass_count(t) + report.fail_count(t) == corpus.size());
}

TEST_CASE("records are identical regardless of worker count") {
    const auto corpus = exhaustive_corpus(3);
    CrossCheckOptions serial;
    serial.jobs = 1;
    CrossCheckOptions parallel;
    parallel.jobs = 4;
    const auto a = run_crosscheck(corpus, serial);
    const auto b = run_crosscheck(corpus, parallel);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].graph6 == b.records[i].graph6);
        CHECK(a.records[i].target == b.records[i].target);
        CHECK(a.records[i].decider_exists == b.records[i].decider_exists);
        CHECK(a.records[i].oracle_exists == b.records[i].oracle_exists);
        CHECK(a.records[i].witness_valid == b.records[i].witness_valid);
        CHECK(a.records[i].size_law_ok == b.records[i].size_law_ok);
    }
}

TEST_CASE("solver bound propagates out of the sweep") {
    CrossCheckOptions options;
    options.solver_bound = 4;
    CHECK_THROWS_AS(run_crosscheck({gen_family(Family::cycle, 4)}, options),
                    BoundExceeded);
}
