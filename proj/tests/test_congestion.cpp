#include <cmath>

#include "doctest.h"
#include "tdgen/analysis.hpp"
#include "tdgen/congestion.hpp"
#include "tdgen/errors.hpp"
#include "tdgen/io.hpp"
#include "tdgen/util.hpp"

using namespace tdgen;

TEST_CASE("resolve: defaults fill the whole triple") {
    const auto r = resolve_congestion_params(10, {});
    CHECK(r.p_c == 0.5);
    CHECK(r.max_c == 9);
    // E(n_c) = 10 * 0.5 * 5 * 0.5 = 12.5, ties round to even
    CHECK(r.n_c == 12);
}

TEST_CASE("resolve: p_c from n_c and max_c") {
    CongestionSpec spec;
    spec.n_c = 19;
    spec.max_c = 19;
    const auto r = resolve_congestion_params(20, spec);
    CHECK(r.p_c == 0.19);
    CHECK(r.n_c == 19);
    CHECK(r.max_c == 19);
    CHECK(r.warnings.empty());
}

TEST_CASE("resolve: n_c from p_c and max_c") {
    CongestionSpec spec;
    spec.p_c = 0.5;
    spec.max_c = 9;
    const auto r = resolve_congestion_params(10, spec);
    CHECK(r.n_c == 12);
}

TEST_CASE("resolve: max_c from n_c and p_c") {
    CongestionSpec spec;
    spec.n_c = 19;
    spec.p_c = 0.19;
    const auto r = resolve_congestion_params(20, spec);
    // 4*19/(20*0.19) - 1 = 19
    CHECK(r.max_c == 19);
}

TEST_CASE("resolve: single given value pairs with a default") {
    CongestionSpec only_nc;
    only_nc.n_c = 12;
    const auto a = resolve_congestion_params(10, only_nc);
    CHECK(a.max_c == 9);
    CHECK(a.n_c == 12);
    CHECK(a.p_c == doctest::Approx(4.0 * 12 / (10.0 * 10.0)));

    CongestionSpec only_pc;
    only_pc.p_c = 1.0;
    const auto b = resolve_congestion_params(10, only_pc);
    CHECK(b.max_c == 9);
    CHECK(b.n_c == 25);  // 10 * 1 * 10 / 4

    CongestionSpec only_mc;
    only_mc.max_c = 4;
    const auto c = resolve_congestion_params(10, only_mc);
    CHECK(c.p_c == 0.5);
    CHECK(c.n_c == round_half_even(10 * 0.5 * 5.0 / 4.0));
}

TEST_CASE("resolve: infeasible triple is an error") {
    CongestionSpec spec;
    spec.n_c = 30;
    spec.max_c = 3;
    CHECK_THROWS_AS(resolve_congestion_params(10, spec), InfeasibleCongestion);
}

TEST_CASE("resolve: range errors") {
    CongestionSpec bad_pc;
    bad_pc.p_c = 1.5;
    CHECK_THROWS_AS(resolve_congestion_params(10, bad_pc), InvalidParameter);
    bad_pc.p_c = -0.1;
    CHECK_THROWS_AS(resolve_congestion_params(10, bad_pc), InvalidParameter);

    CongestionSpec bad_mc;
    bad_mc.max_c = 0;
    CHECK_THROWS_AS(resolve_congestion_params(10, bad_mc), InvalidParameter);
    bad_mc.max_c = 10;
    CHECK_THROWS_AS(resolve_congestion_params(10, bad_mc), InvalidParameter);

    CongestionSpec bad_nc;
    bad_nc.n_c = -1;
    CHECK_THROWS_AS(resolve_congestion_params(10, bad_nc), InvalidParameter);

    CHECK_THROWS_AS(resolve_congestion_params(1, {}), InvalidParameter);

    CongestionSpec contradictory;
    contradictory.p_c = 0.0;
    contradictory.n_c = 3;
    CHECK_THROWS_AS(resolve_congestion_params(10, contradictory), InvalidParameter);
}

TEST_CASE("resolve: feasible but tight max_c draws the advisory warning") {
    // fully specified: feasible (2*19 <= 20*2) yet below 4*n_c/n - 1 = 2.8
    CongestionSpec spec;
    spec.n_c = 19;
    spec.max_c = 2;
    spec.p_c = 1.0;
    const auto r = resolve_congestion_params(20, spec);
    REQUIRE(r.warnings.size() == 1);
    CHECK(r.warnings.front().find("recommended") != std::string::npos);

    // with p_c derived instead, the same tightness also clamps p_c to 1
    CongestionSpec derived;
    derived.n_c = 19;
    derived.max_c = 2;
    const auto d = resolve_congestion_params(20, derived);
    CHECK(d.p_c == 1.0);
    CHECK(d.warnings.size() == 2);
}

TEST_CASE("round_half_even matches its contract") {
    CHECK(round_half_even(12.5) == 12);
    CHECK(round_half_even(9.5) == 10);
    CHECK(round_half_even(2.25) == 2);
    CHECK(round_half_even(0.8) == 1);
    CHECK(round_half_even(4.5) == 4);
    CHECK(round_half_even(-2.5) == -2);
}

TEST_CASE("placement: all borders keep every aircraft inside a margin band") {
    SectorBox box{200.0, 160.0, 100.0, 12.0};
    const auto slots = place_initial_positions(40, box, BorderConfig::AllBorders, Dimension::TwoD,
                                               {400.0, 500.0}, 7);
    REQUIRE(slots.size() == 40);
    for (const PlacementSlot& s : slots) {
        const bool near_border = s.p_hat.x <= 12.0 || s.p_hat.x >= 200.0 - 12.0 ||
                                 s.p_hat.y <= 12.0 || s.p_hat.y >= 160.0 - 12.0;
        CHECK(near_border);
        CHECK(s.p_hat.x >= 0.0);
        CHECK(s.p_hat.x <= 200.0);
        CHECK(s.p_hat.y >= 0.0);
        CHECK(s.p_hat.y <= 160.0);
        CHECK(s.p_hat.z == 0.0);
        CHECK(s.phi.min_deg == 90.0);
        CHECK(s.phi.max_deg == 90.0);
        // the heading range must aim into the box: check both endpoints and
        // the middle of the range against the border the position implies
        for (double frac : {0.0, 0.5, 1.0}) {
            const double theta = s.theta.min_deg + frac * (s.theta.max_deg - s.theta.min_deg);
            const double vx = cos_deg(theta);
            const double vy = sin_deg(theta);
            if (s.p_hat.x <= 12.0 && s.theta.min_deg == -90.0) CHECK(vx >= -1e-12);
            if (s.p_hat.y <= 12.0 && s.theta.min_deg == 0.0) CHECK(vy >= -1e-12);
            if (s.p_hat.y >= 148.0 && s.theta.min_deg == 180.0) CHECK(vy <= 1e-12);
            if (s.p_hat.x >= 188.0 && s.theta.min_deg == 90.0) CHECK(vx <= 1e-12);
        }
    }
}

TEST_CASE("placement: west-top uses only those two faces") {
    SectorBox box{100.0, 100.0, 100.0, 10.0};
    const auto slots = place_initial_positions(60, box, BorderConfig::WestTop, Dimension::ThreeD,
                                               {400.0, 500.0}, 3);
    int west = 0, top = 0;
    for (const PlacementSlot& s : slots) {
        const bool near_west = s.p_hat.x <= 10.0;
        const bool near_top = s.p_hat.z >= 90.0;
        CHECK((near_west || near_top));
        if (near_west && s.theta.min_deg == -90.0) ++west;
        if (near_top && s.phi.min_deg == 90.0) ++top;
    }
    CHECK(west + top == 60);
    CHECK(west > 0);
    CHECK(top > 0);
}

TEST_CASE("placement: zero margin degenerates to the exact border") {
    SectorBox box{100.0, 100.0, 100.0, 0.0};
    const auto slots = place_initial_positions(30, box, BorderConfig::WestEast, Dimension::TwoD,
                                               {400.0, 500.0}, 11);
    for (const PlacementSlot& s : slots) CHECK((s.p_hat.x == 0.0 || s.p_hat.x == 100.0));
}

TEST_CASE("placement: 3D-only configurations are rejected in 2D") {
    SectorBox box{100.0, 100.0, 100.0, 10.0};
    CHECK_THROWS_AS(place_initial_positions(5, box, BorderConfig::WestTop, Dimension::TwoD,
                                            {400.0, 500.0}, 1),
                    InvalidParameter);
    CHECK_THROWS_AS(place_initial_positions(5, box, BorderConfig::TopBottom, Dimension::TwoD,
                                            {400.0, 500.0}, 1),
                    InvalidParameter);
    SectorBox bad{100.0, 100.0, 100.0, 60.0};
    CHECK_THROWS_AS(place_initial_positions(5, bad, BorderConfig::AllBorders, Dimension::TwoD,
                                            {400.0, 500.0}, 1),
                    InvalidParameter);
}

TEST_CASE("border config names round-trip") {
    for (BorderConfig c : {BorderConfig::AllBorders, BorderConfig::NorthSouth,
                           BorderConfig::WestEast, BorderConfig::WestNorth, BorderConfig::NorthTop,
                           BorderConfig::WestTop, BorderConfig::TopBottom})
        CHECK(border_config_from_string(to_string(c)) == c);
    CHECK_THROWS_AS(border_config_from_string("diagonal"), InvalidParameter);
}

TEST_CASE("count_conf: explored subsets and the handshake identity") {
    Instance inst;
    inst.safety_distance = 5.0;
    // three-aircraft head-on knot: 1 and 2 both meet 0 near the origin
    inst.aircraft = {{0, {0, 0, 0}, {480, 0, 0}},
                     {1, {20, 0, 0}, {-480, 0, 0}},
                     {2, {20, 1, 0}, {-480, 0, 0}}};
    CHECK(count_conf(0, {}, inst) == 0);
    CHECK(count_conf(0, {1, 2}, inst) == 2);
    CHECK(count_conf(1, {0}, inst) == 1);
    CHECK(count_conf(0, {0, 1, 2}, inst) == 2);  // self excluded

    int handshake = 0;
    for (int i = 0; i < 3; ++i) handshake += count_conf(i, {0, 1, 2}, inst);
    CHECK(handshake == 2 * static_cast<int>(detect_conflicts(inst).size()));

    CHECK_THROWS_AS(count_conf(9, {0}, inst), UnknownId);
    CHECK_THROWS_AS(count_conf(0, {9}, inst), UnknownId);
}

TEST_CASE("pseudo-random: two aircraft with one requested conflict") {
    int hits = 0;
    for (int seed = 0; seed < 100; ++seed) {
        PseudoRandomParams params;
        params.n = 2;
        params.congestion.n_c = 1;
        params.congestion.max_c = 1;
        params.max_trials = 1000;
        params.box = {100.0, 100.0, 100.0, 10.0};
        params.seed = static_cast<std::uint64_t>(seed);
        const Instance inst = gen_pseudorandom(params);
        if (*inst.metadata.achieved_conflicts == 1) ++hits;
    }
    CHECK(hits >= 95);
}

TEST_CASE("pseudo-random: zero congestion gives a conflict-free instance") {
    PseudoRandomParams params;
    params.n = 12;
    params.congestion.n_c = 0;
    params.box = {300.0, 300.0, 300.0, 15.0};
    params.seed = 9;
    const Instance inst = gen_pseudorandom(params);
    CHECK(*inst.metadata.achieved_conflicts == 0);
    CHECK(detect_conflicts(inst).empty());
    CHECK(!inst.metadata.escalated);
}

TEST_CASE("pseudo-random: achieved count in metadata matches a recount") {
    for (std::uint64_t seed : {1ULL, 22ULL, 333ULL}) {
        PseudoRandomParams params;
        params.n = 15;
        params.congestion.n_c = 5;
        params.congestion.max_c = 3;
        params.box = {150.0, 150.0, 150.0, 10.0};
        params.dimension = Dimension::ThreeD;
        params.seed = seed;
        const Instance inst = gen_pseudorandom(params);
        CHECK(*inst.metadata.achieved_conflicts ==
              static_cast<long long>(detect_conflicts(inst).size()));
        CHECK(*inst.metadata.requested_conflicts == 5);
        check_instance(inst);
    }
}

TEST_CASE("pseudo-random: hits small targets exactly in a roomy sector") {
    PseudoRandomParams params;
    params.n = 10;
    params.congestion.n_c = 2;  // den 0.05 of 45 pairs
    params.congestion.max_c = 3;
    params.box = {150.0, 150.0, 150.0, 10.0};
    params.seed = 4711;
    const Instance inst = gen_pseudorandom(params);
    CHECK(*inst.metadata.achieved_conflicts == 2);
}

TEST_CASE("pseudo-random: 2D instances have exactly zero vertical speed") {
    PseudoRandomParams params;
    params.n = 8;
    params.box = {200.0, 200.0, 200.0, 10.0};
    params.seed = 2;
    const Instance inst = gen_pseudorandom(params);
    for (const Aircraft& a : inst.aircraft) {
        CHECK(a.v_hat.z == 0.0);
        CHECK(a.p_hat.z == 0.0);
        const double speed = a.v_hat.norm();
        CHECK(speed >= 400.0 - 1e-9);
        CHECK(speed <= 500.0 + 1e-9);
    }
}

TEST_CASE("pseudo-random: determinism and seed sensitivity") {
    PseudoRandomParams params;
    params.n = 12;
    params.congestion.n_c = 4;
    params.box = {180.0, 180.0, 180.0, 10.0};
    params.seed = 77;
    const std::string a = render_instance(gen_pseudorandom(params));
    const std::string b = render_instance(gen_pseudorandom(params));
    CHECK(a == b);
    params.seed = 78;
    CHECK(render_instance(gen_pseudorandom(params)) != a);
}

TEST_CASE("random: single aircraft cannot conflict") {
    RandomParams params;
    params.n = 1;
    params.seed = 5;
    const Instance inst = gen_random(params);
    CHECK(analyze(inst).n_conflicts == 0);
}

TEST_CASE("random: determinism and seed sensitivity") {
    RandomParams params;
    params.n = 20;
    params.dimension = Dimension::ThreeD;
    params.seed = 100;
    const std::string a = render_instance(gen_random(params));
    CHECK(render_instance(gen_random(params)) == a);
    params.seed = 101;
    CHECK(render_instance(gen_random(params)) != a);
}

TEST_CASE("random: tighter boxes breed more conflicts") {
    double small_mean = 0.0, large_mean = 0.0;
    for (int seed = 0; seed < 50; ++seed) {
        RandomParams params;
        params.n = 50;
        params.seed = static_cast<std::uint64_t>(seed);
        params.box = {100.0, 100.0, 100.0, 0.0};
        small_mean += static_cast<double>(detect_conflicts(gen_random(params)).size());
        params.box = {1000.0, 1000.0, 1000.0, 0.0};
        large_mean += static_cast<double>(detect_conflicts(gen_random(params)).size());
    }
    CHECK(small_mean / 50.0 > large_mean / 50.0);
}
