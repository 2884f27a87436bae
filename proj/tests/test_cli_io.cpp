#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "reinsim/config.hpp"
#include "reinsim/csv.hpp"
#include "reinsim/errors.hpp"
#include "reinsim/experiments.hpp"
#include "reinsim/svg.hpp"

using namespace reinsim;

namespace {

std::string write_temp(const std::string& text) {
    const std::string path = "reinsim_test_config.tmp";
    std::ofstream out(path);
    out << text;
    return path;
}

CsvTable small_table() {
    CsvTable t;
    t.comment = "c=1,T=5";
    t.header = {"t", "a", "b"};
    t.rows = {{0.0, 1.0, 2.0}, {1.0, 1.5, 1.0}, {2.0, 0.5, 3.0}};
    return t;
}

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size())) {
        ++n;
    }
    return n;
}

} // namespace

TEST_CASE("empty path yields benchmark defaults") {
    const ExperimentConfig cfg = load_config("");
    CHECK(cfg.c == 1.0);
    CHECK(cfg.T == 5.0);
    CHECK(cfg.eta == 0.5);
    CHECK(cfg.theta == 0.1);
    CHECK(cfg.r == 0.05);
    CHECK(cfg.n_steps == 500);
    CHECK(cfg.n_paths == 5000);
    CHECK(cfg.seed == 1);
}

TEST_CASE("file values and overrides are applied in order") {
    const std::string path = write_temp("# a comment\n"
                                        "market.eta = 0.7\n"
                                        "\n"
                                        "grid.N = 100\n");
    const ExperimentConfig cfg = load_config(path, {"market.eta=0.9", "theta=0.2"});
    std::remove(path.c_str());
    CHECK(cfg.eta == 0.9);   // override wins over the file
    CHECK(cfg.theta == 0.2); // short alias accepted
    CHECK(cfg.n_steps == 100);
}

TEST_CASE("invalid configs raise ConfigError naming the key") {
    const std::string path = write_temp("grid.N = 0\n");
    CHECK_THROWS_WITH_AS(load_config(path), doctest::Contains("grid.N"), ConfigError);
    std::remove(path.c_str());

    const std::string bad_key = write_temp("marget.eta = 0.5\n");
    CHECK_THROWS_WITH_AS(load_config(bad_key), doctest::Contains("marget.eta"), ConfigError);
    std::remove(bad_key.c_str());

    const std::string bad_value = write_temp("market.eta = fast\n");
    CHECK_THROWS_AS(load_config(bad_value), ConfigError);
    std::remove(bad_value.c_str());

    CHECK_THROWS_AS(load_config("", {"no_equals_sign"}), ConfigError);
    CHECK_THROWS_AS(load_config("no_such_file.cfg"), ConfigError);
}

TEST_CASE("benchmark defaults carry the expected validator warning") {
    const ExperimentConfig cfg = load_config("");
    bool found = false;
    for (const auto& w : cfg.warnings) {
        if (w.find("riskless profit") != std::string::npos) found = true;
    }
    CHECK(found);
}

TEST_CASE("resolved view is ordered and complete") {
    const ExperimentConfig cfg = load_config("");
    const auto kv = cfg.resolved();
    REQUIRE(kv.size() >= 13);
    CHECK(kv.front().first == "market.c");
    for (std::size_t i = 1; i < kv.size(); ++i) CHECK(kv[i - 1].first != kv[i].first);
}

TEST_CASE("CSV serialization: comment line, header, %.10g fields") {
    const CsvTable t = small_table();
    const std::string s = t.to_string();
    CHECK(s.rfind("# c=1,T=5\n", 0) == 0);
    CHECK(s.find("t,a,b\n") != std::string::npos);
    CHECK(s.find("0,1,2\n") != std::string::npos);
    CHECK(s.find("1,1.5,1\n") != std::string::npos);
    CHECK(t.to_string() == t.to_string()); // deterministic
    CHECK(t.column_index("b") == 2);
    CHECK(t.column_index("missing") == -1);
}

TEST_CASE("ragged rows are rejected") {
    CsvTable t = small_table();
    t.rows.push_back({1.0, 2.0});
    CHECK_THROWS(t.to_string());
}

TEST_CASE("SVG output is structurally sound and deterministic") {
    const CsvTable t = small_table();
    const std::string svg = render_svg(t, "t", {"a", "b"});
    const bool starts_like_svg = svg.rfind("<svg", 0) == 0 || svg.rfind("<?xml", 0) == 0;
    CHECK(starts_like_svg);
    CHECK(count_occurrences(svg, "<polyline") >= 2); // one series polyline per column
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(render_svg(t, "t", {"a", "b"}) == svg); // byte-identical on repeat
    CHECK_THROWS(render_svg(t, "t", {"missing"}));
    CsvTable single = t;
    single.rows.resize(1);
    CHECK_THROWS(render_svg(single, "t", {"a"}));
}

TEST_CASE("experiment tables have the documented shapes") {
    ExperimentConfig cfg = load_config("");
    cfg.n_steps = 20;
    cfg.n_paths = 50;

    const CsvTable dyn = run_dynamic_strategies(cfg);
    const std::vector<std::string> dyn_cols{"t", "alpha_evp", "alpha_vp_mean", "alpha_vp_q05",
                                            "alpha_vp_q95"};
    CHECK(dyn.header == dyn_cols);
    CHECK(dyn.rows.size() == static_cast<std::size_t>(cfg.n_steps) + 1);
    for (const auto& row : dyn.rows) {
        CHECK(row[3] <= row[2]); // q05 <= mean
        CHECK(row[2] <= row[4]); // mean <= q95
    }

    const CsvTable sweep = run_sweep(cfg, "theta", {0.05, 0.1, 0.2});
    const std::vector<std::string> sweep_cols{"value", "alpha0_evp", "alpha0_vp_at_y0"};
    CHECK(sweep.header == sweep_cols);
    REQUIRE(sweep.rows.size() == 3);
    CHECK(sweep.rows[0][1] < sweep.rows[2][1]); // retention grows with the loading

    CHECK_THROWS_AS(run_sweep(cfg, "gamma", {0.1}), ConfigError);
    CHECK_THROWS_AS(run_sweep(cfg, "eta", {0.0}), ConfigError);

    const CsvTable surf = run_value_surface(cfg, {0.0, 1.0}, {0.5, 1.0, 1.5});
    const std::vector<std::string> surf_cols{"x", "y", "v_estimate", "std_error"};
    CHECK(surf.header == surf_cols);
    CHECK(surf.rows.size() == 6);

    const CsvTable scen = run_scenario(cfg);
    const std::vector<std::string> scen_cols{"t", "y", "alpha_evp", "alpha_vp", "x_evp", "x_vp"};
    CHECK(scen.header == scen_cols);
    CHECK(scen.rows.size() == static_cast<std::size_t>(cfg.n_steps) + 1);
}

TEST_CASE("experiments are reproducible for a fixed seed") {
    ExperimentConfig cfg = load_config("");
    cfg.n_steps = 20;
    cfg.n_paths = 30;
    cfg.seed = 123;
    CHECK(run_scenario(cfg).to_string() == run_scenario(cfg).to_string());
    cfg.seed = 124;
    const std::string other = run_scenario(cfg).to_string();
    ExperimentConfig base = cfg;
    base.seed = 123;
    CHECK(other != run_scenario(base).to_string());
}
