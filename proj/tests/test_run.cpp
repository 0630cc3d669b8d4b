#include <doctest.h>

#include <string>

#include "zenobath/errors.hpp"
#include "zenobath/run.hpp"

using namespace zenobath;

namespace {
RunConfig small_zeno() {
    RunConfig c;
    c.task = Task::Zeno;
    c.tau_points = 12;
    c.tau_min = 0.1;
    c.tau_max = 5.0;
    return c;
}
} // namespace

TEST_CASE("eta envelope carries solver diagnostics") {
    RunConfig c;
    c.task = Task::Eta;
    const ResultEnvelope e = run_task(c);
    CHECK(e.scalars.size() == 5);
    CHECK(e.scalars[0].first == "eta");
    CHECK(std::stod(e.scalars[0].second) == doctest::Approx(0.98336).epsilon(1e-4));
    CHECK(e.table.rows.empty());
}

TEST_CASE("zeno CSV has the documented columns and is deterministic") {
    const RunConfig c = small_zeno();
    const ResultEnvelope a = run_task(c);
    const ResultEnvelope b = run_task(c);
    CHECK(a.table.columns ==
          std::vector<std::string>{"tau", "gamma", "gamma_rwa", "gamma0", "ratio", "ratio_rwa",
                                   "regime"});
    CHECK(to_csv(a) == to_csv(b));
    CHECK(a.table.rows.size() == 12);
}

TEST_CASE("parallel grid equals serial grid row for row") {
    RunConfig c = small_zeno();
    c.tau_points = 6;
    c.grid.alpha = {0.0, 0.01, 0.02};
    c.jobs = 1;
    const auto serial = run(c);
    c.jobs = 8;
    const auto parallel = run(c);
    REQUIRE(serial.size() == 3);
    REQUIRE(parallel.size() == 3);
    for (std::size_t i = 0; i < serial.size(); ++i)
        CHECK(to_csv(serial[i]) == to_csv(parallel[i]));
}

TEST_CASE("alpha = 0 grid cell degrades gracefully") {
    RunConfig c = small_zeno();
    c.tau_points = 4;
    c.grid.alpha = {0.0};
    const auto out = run(c);
    REQUIRE(out.size() == 1);
    CHECK(out[0].error.empty());
    // gamma column is identically zero, regime neutral.
    for (const auto& row : out[0].table.rows) {
        CHECK(row[1] == "0");
        CHECK(row.back() == "Neutral");
    }
}

TEST_CASE("1x1 grid equals a single run") {
    RunConfig c = small_zeno();
    c.tau_points = 5;
    RunConfig g = c;
    g.grid.alpha = {c.bath_alpha};
    g.grid.lambda = {c.bath_lambda};
    const auto single = run_task(c);
    const auto grid = run(g);
    REQUIRE(grid.size() == 1);
    CHECK(single.table.rows == grid[0].table.rows);
}

TEST_CASE("preset expansion produces one envelope per case") {
    RunConfig c;
    c.task = Task::Reproduce;
    c.preset = "fig2a";
    c.t_max = 2.0;
    c.t_step = 0.5;
    const auto out = run(c);
    REQUIRE(out.size() == 2);
    CHECK(out[0].label == "fig2a_lorentzian");
    CHECK(out[1].label == "fig2a_ohmic");
    CHECK(out[0].table.columns == std::vector<std::string>{"t", "sigma_x"});

    RunConfig bad;
    bad.task = Task::Reproduce;
    CHECK_THROWS_AS(run(bad), ConfigError);
}

TEST_CASE("config preset without reproduce also expands") {
    RunConfig c;
    c.task = Task::Eta;  // ignored: preset fixes the tasks
    c.preset = "fig3";
    c.tau_points = 4;
    const auto out = run(c);
    REQUIRE(out.size() == 2);
    CHECK(out[0].table.columns.size() == 7);
}

TEST_CASE("lambda warning is forwarded to the envelope") {
    RunConfig c;
    c.task = Task::Eta;
    c.bath_lambda = 1.2;
    const ResultEnvelope e = run_task(c);
    REQUIRE(e.warnings.size() == 1);
    CHECK(e.warnings[0].find("lambda") != std::string::npos);
}

TEST_CASE("json envelope carries config echo and payload") {
    RunConfig c;
    c.task = Task::Eta;
    const ResultEnvelope e = run_task(c);
    const std::string j = to_json(e);
    CHECK(j.find("\"config\"") != std::string::npos);
    CHECK(j.find("\"bath.alpha\"") != std::string::npos);
    CHECK(j.find("\"payload\"") != std::string::npos);
    CHECK(j.find("\"eta\"") != std::string::npos);
}
