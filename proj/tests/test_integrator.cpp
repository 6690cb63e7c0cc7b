#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bfam/integrator.hpp"

using namespace bfam;

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

Field cosine(const Grid& g, double offset, double amp) {
    Field f(g);
    for (int j = 0; j < g.n; ++j) f[j] = offset + amp * std::cos(two_pi * g.node(j));
    return f;
}
} // namespace

TEST_CASE("step config validation") {
    StepConfig cfg;
    cfg.dt = 0.0;
    CHECK_THROWS_AS(cfg.validate(), config_error);
    cfg.dt = 0.2;
    CHECK_THROWS_AS(cfg.validate(), config_error);
    cfg = StepConfig{};
    cfg.cfl_limit = 1.5;
    CHECK_THROWS_AS(cfg.validate(), config_error);
    cfg = StepConfig{};
    cfg.t_end = -1.0;
    CHECK_THROWS_AS(cfg.validate(), config_error);
}

TEST_CASE("constants evolve to constants") {
    const Grid g(64);
    const Equation eq(g, Parameters(2, 1, 1));
    Field u(g);
    for (auto& x : u.v) x = 0.4;
    StepConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 1.0;
    const EvolveResult res = evolve(eq, State(0.0, u), cfg);
    CHECK_FALSE(res.breakdown);
    CHECK(max_abs(res.final.u - u) < 1e-13);
}

TEST_CASE("zero data stays zero") {
    const Grid g(64);
    const Equation eq(g, Parameters(3, 1, 2));
    StepConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 0.1;
    const EvolveResult res = evolve(eq, State(0.0, Field(g)), cfg);
    CHECK(max_abs(res.final.u) == 0.0);
}

TEST_CASE("RK4 self-convergence order is at least 3.8") {
    const Grid g(128);
    const Equation eq(g, Parameters(2, 1, 1));
    const Field u0 = cosine(g, 0.2, 0.1);
    auto final_u = [&](double dt) {
        StepConfig cfg;
        cfg.dt = dt;
        cfg.t_end = 0.5;
        cfg.cfl_limit = 1.0;
        return evolve(eq, State(0.0, u0), cfg).final.u;
    };
    const Field a = final_u(1e-2), b = final_u(5e-3), c = final_u(2.5e-3);
    const double e1 = max_abs(a - b), e2 = max_abs(b - c);
    CHECK(std::log2(e1 / e2) >= 3.8);
}

TEST_CASE("u-form and m-form runs agree") {
    const Grid g(128);
    const Equation eq(g, Parameters(2, 1, 1));
    const Field u0 = cosine(g, 0.2, 0.1);
    StepConfig cfg;
    cfg.dt = 2e-4;
    cfg.t_end = 0.2;
    const EvolveResult a = evolve(eq, State(0.0, u0), cfg);
    cfg.formulation = Formulation::momentum_m;
    const EvolveResult b = evolve(eq, State(0.0, u0), cfg);
    CHECK(max_abs(a.final.u - b.final.u) < 1e-8);
}

TEST_CASE("evolve is deterministic") {
    const Grid g(64);
    const Equation eq(g, Parameters(2, 1, 1));
    const Field u0 = cosine(g, 0.2, 0.1);
    StepConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 0.2;
    const EvolveResult a = evolve(eq, State(0.0, u0), cfg);
    const EvolveResult b = evolve(eq, State(0.0, u0), cfg);
    REQUIRE(a.frames.size() == b.frames.size());
    for (size_t i = 0; i < a.frames.size(); ++i)
        for (int j = 0; j < g.n; ++j) CHECK(a.frames[i].u[j] == b.frames[i].u[j]);
}

TEST_CASE("runaway guard turns into a breakdown finding, not an exception") {
    const Grid g(128);
    const Equation eq(g, Parameters(2, 1, 1));
    // steep sign-changing momentum, tight guard: must trip in finite time
    Field u0(g);
    for (int j = 0; j < g.n; ++j) u0[j] = 0.2 + 0.15 * std::cos(two_pi * g.node(j));
    StepConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 2.0;
    cfg.max_value_guard = 0.45; // below the initial sup_u + sup_ux head-room
    const EvolveResult res = evolve(eq, State(0.0, u0), cfg);
    CHECK(res.breakdown);
    CHECK(res.breakdown_time >= 0.0);
    CHECK(res.breakdown_step >= 0);
    CHECK(!res.frames.empty());
}

TEST_CASE("CFL violation at start is a breakdown with the offending time") {
    const Grid g(256);
    const Equation eq(g, Parameters(2, 1, 1));
    Field u0(g);
    for (auto& x : u0.v) x = 5.0; // speed 5 makes dt = 1e-2 far too large
    StepConfig cfg;
    cfg.dt = 1e-2;
    cfg.t_end = 1.0;
    CHECK_THROWS_AS(step(eq, State(0.0, u0), cfg), breakdown_error);
}

TEST_CASE("non-finite input is rejected") {
    const Grid g(64);
    const Equation eq(g, Parameters(2, 1, 1));
    Field u0(g);
    u0[0] = std::nan("");
    StepConfig cfg;
    CHECK_THROWS_AS(evolve(eq, State(0.0, u0), cfg), numeric_error);
}

TEST_CASE("frames are stored at the configured stride") {
    const Grid g(64);
    const Equation eq(g, Parameters(2, 1, 1));
    const Field u0 = cosine(g, 0.2, 0.05);
    StepConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 0.1;
    ObserveConfig obs;
    obs.frame_stride = 25;
    int called = 0;
    obs.on_frame = [&](const State&) { ++called; };
    const EvolveResult res = evolve(eq, State(0.0, u0), cfg, obs);
    CHECK(res.frames.size() == 5); // t = 0, 0.025, 0.05, 0.075, 0.1
    CHECK(called == 5);
    CHECK(res.frames.back().t == doctest::Approx(0.1));
}
