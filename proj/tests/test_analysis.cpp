#include "doctest.h"
#include "tdgen/analysis.hpp"
#include "tdgen/congestion.hpp"
#include "tdgen/io.hpp"
#include "tdgen/scenarios.hpp"

using namespace tdgen;

TEST_CASE("analyze: full circle saturates every indicator") {
    CircleParams params;
    params.n = 10;
    const ComplexityReport r = analyze(gen_circle(params));
    CHECK(r.n == 10);
    CHECK(r.n_conflicts == 45);
    CHECK(r.density == 1.0);
    REQUIRE(r.mean_min_separation.has_value());
    CHECK(*r.mean_min_separation < 1e-9);
    REQUIRE(r.mean_duration.has_value());
    CHECK(*r.mean_duration > 0.0);
    CHECK(!r.requested_conflicts.has_value());
}

TEST_CASE("analyze: conflict-free instance leaves the means absent") {
    Instance inst;
    inst.safety_distance = 5.0;
    inst.aircraft = {{0, {0, 0, 0}, {400, 0, 0}}, {1, {0, 50, 0}, {400, 0, 0}}};
    const ComplexityReport r = analyze(inst);
    CHECK(r.n_conflicts == 0);
    CHECK(r.density == 0.0);
    CHECK(!r.mean_min_separation.has_value());
    CHECK(!r.mean_duration.has_value());
}

TEST_CASE("analyze: relative difference against the requested congestion") {
    PseudoRandomParams params;
    params.n = 10;
    params.congestion.n_c = 3;
    params.box = {150.0, 150.0, 150.0, 10.0};
    params.seed = 21;
    const Instance inst = gen_pseudorandom(params);
    const ComplexityReport r = analyze(inst);
    REQUIRE(r.requested_conflicts.has_value());
    REQUIRE(r.relative_difference.has_value());
    const double expected =
        std::abs(static_cast<double>(*r.requested_conflicts - r.n_conflicts)) /
        static_cast<double>(*r.requested_conflicts);
    CHECK(*r.relative_difference == expected);
}

TEST_CASE("analyze: unbounded conflicts are flagged and excluded from the mean duration") {
    Instance inst;
    inst.safety_distance = 5.0;
    inst.aircraft = {{0, {0, 0, 0}, {400, 0, 0}},
                     {1, {0, 3, 0}, {400, 0, 0}},      // co-moving, 3 NM apart: unbounded
                     {2, {100, 0, 0}, {-400, 0, 0}}};  // head-on with 0: bounded
    const ComplexityReport r = analyze(inst);
    CHECK(r.unbounded_conflicts == 1);
    REQUIRE(r.mean_duration.has_value());
    // the mean covers only the bounded conflicts
    double bounded_sum = 0.0;
    int bounded = 0;
    for (const PairConflict& c : r.conflicts) {
        if (!c.unbounded) {
            bounded_sum += c.duration_min;
            ++bounded;
        }
    }
    CHECK(*r.mean_duration == bounded_sum / bounded);
    const std::string text = format_report(r);
    CHECK(text.find("unbounded") != std::string::npos);
}

TEST_CASE("analyze is stable across a serialization round trip") {
    PseudoRandomParams params;
    params.n = 14;
    params.congestion.n_c = 6;
    params.box = {160.0, 160.0, 160.0, 10.0};
    params.dimension = Dimension::ThreeD;
    params.seed = 3456;
    const Instance inst = gen_pseudorandom(params);
    const Instance reread = parse_instance(render_instance(inst));
    CHECK(format_report(analyze(inst)) == format_report(analyze(reread)));
}

TEST_CASE("analyze: density reaches 1 only when every pair conflicts") {
    CircleParams params;
    params.n = 6;
    const ComplexityReport full = analyze(gen_circle(params));
    CHECK(full.density == 1.0);

    RandomParams sparse;
    sparse.n = 10;
    sparse.box = {2000.0, 2000.0, 2000.0, 0.0};
    sparse.seed = 5;
    const ComplexityReport partial = analyze(gen_random(sparse));
    if (partial.n_conflicts < 45) CHECK(partial.density < 1.0);
}
