#include "burnoff/enumeration.hpp"
#include "burnoff/errors.hpp"
#include "burnoff/markov.hpp"
#include "burnoff/stats.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

using namespace burnoff;
using testing::shared;

TEST_CASE("splitmix64 frozen stream") {
    /* reference values for seed 1234567 from the published algorithm */
    SplitMix64 rng(1234567);
    CHECK(rng.next() == 6457827717110365317ULL);
    CHECK(rng.next() == 3203168211198807973ULL);
    CHECK(rng.next() == 9817491932198370423ULL);

    /* bounded draws stay in range and hit every residue eventually */
    SplitMix64 r2(42);
    std::vector<int> seen(5, 0);
    for (int i = 0; i < 1000; ++i) ++seen[r2.bounded(5)];
    for (int count : seen) CHECK(count > 150);
}

TEST_CASE("chain initialization and stepping") {
    const auto g = shared(families::k3_pendant());
    ChainState state = chain_init(g, 7);
    CHECK(state.current == Configuration::all_critical(g));
    CHECK(state.steps_taken == 0);

    const GameResult first = chain_step(state);
    CHECK(state.steps_taken == 1);
    CHECK(is_legal(state.current));
    CHECK(first.final_config == state.current);

    /* custom starts must be legal */
    CHECK_THROWS_AS(chain_init(g, 7, Configuration::zeros(g)), precondition_error);
    CHECK_THROWS_AS(chain_init(shared(Graph(3, {{0, 1}})), 7), input_error);

    ChainState replay = chain_init(g, 7);
    const GameResult again = chain_step(replay);
    CHECK(again.length == first.length);
    CHECK(again.final_config == first.final_config);
}

TEST_CASE("legality is preserved along long runs") {
    const auto g = shared(families::cycle(5));
    ChainState state = chain_init(g, 99);
    for (int i = 0; i < 2000; ++i) chain_step(state);
    CHECK(is_legal(state.current));
    CHECK(state.steps_taken == 2000);
}

TEST_CASE("simulation report is deterministic and self consistent") {
    const auto g = shared(families::k3_pendant());
    const SimulationReport a = run_simulation(g, 2000, 5, 0.1);
    const SimulationReport b = run_simulation(g, 2000, 5, 0.1);
    CHECK(report_json(a) == report_json(b));
    CHECK(report_csv(a) == report_csv(b));

    std::uint64_t games = 0;
    for (auto count : a.length_histogram) games += count;
    CHECK(games == 2000);
    REQUIRE(a.analytic.has_value());
    CHECK(a.analytic->counts == std::vector<BigInt>{82, 35, 16, 15, 12});
    REQUIRE(a.chi_square.has_value());

    const SimulationReport c = run_simulation(g, 2000, 6, 0.1);
    CHECK(report_json(c) != report_json(a)); // other seed, other games

    CHECK_THROWS_AS(run_simulation(g, 0, 5, 0.1), precondition_error);
}

TEST_CASE("analytic reference is skipped above the size limit") {
    const auto g = shared(families::path(3));
    const SimulationReport r = run_simulation(g, 50, 1, 0.1, 1, /*analytic_limit=*/2);
    CHECK_FALSE(r.analytic.has_value());
    CHECK_FALSE(r.chi_square.has_value());
    CHECK(report_json(r).find("\"analytic\": null") != std::string::npos);
}

TEST_CASE("empirical length frequencies approach the exact distribution") {
    const auto g = shared(families::k3_pendant());
    const LengthDistribution exact = distribution_analytic(*g);
    const auto total_variation = [&](const SimulationReport& r) {
        double tv = 0.0;
        for (std::size_t l = 0; l < r.length_histogram.size(); ++l) {
            const double simulated = static_cast<double>(r.length_histogram[l]) /
                                     static_cast<double>(r.games_played);
            tv += std::abs(simulated -
                           exact.probability(static_cast<int>(l)).get_d());
        }
        return tv / 2;
    };
    const double coarse = total_variation(run_simulation(g, 1000, 3, 0.1));
    const double fine = total_variation(run_simulation(g, 100000, 3, 0.1));
    CHECK(fine < coarse);
    CHECK(fine < 0.01);
}

TEST_CASE("visitation uniformity on the two-vertex path") {
    const auto g = shared(families::path(2));
    const SimulationReport r = visitation_uniformity(g, 30000, 1, 0.05);
    REQUIRE(r.visitation.has_value());
    CHECK(r.visitation->size() == 3); // all of R visited
    std::uint64_t visits = 0;
    for (const auto& [chips, count] : *r.visitation) visits += count;
    CHECK(visits == 30000);
    REQUIRE(r.max_visit_deviation.has_value());
    CHECK(*r.max_visit_deviation < 0.02);
    REQUIRE(r.state_count.has_value());
    CHECK(*r.state_count == 3);
    REQUIRE(r.chi_square.has_value());
    CHECK(r.chi_square->degrees_of_freedom == 2);
    CHECK_FALSE(r.chi_square->reject);
}

TEST_CASE("visitation with no steps gives an empty report") {
    const auto g = shared(families::path(2));
    const SimulationReport r = visitation_uniformity(g, 0, 1, 0.05);
    CHECK(r.visitation->empty());
    CHECK_FALSE(r.max_visit_deviation.has_value());
    CHECK_FALSE(r.chi_square.has_value());
}

TEST_CASE("visitation scale guard") {
    CHECK_THROWS_AS(visitation_uniformity(shared(families::complete(9)), 10, 1, 0.05),
                    scale_error);
}

TEST_CASE("chi square frozen cases") {
    SUBCASE("perfect fit") {
        const auto r = chi_square_test({10, 10}, {10.0, 10.0}, 0.1);
        CHECK(r.statistic == doctest::Approx(0.0));
        CHECK(r.bins == 2);
        CHECK(r.degrees_of_freedom == 1);
        CHECK(r.critical_value == doctest::Approx(2.705543).epsilon(1e-5));
        CHECK_FALSE(r.reject);
    }
    SUBCASE("small expectation merges into nearest neighbor") {
        const auto r = chi_square_test({98, 5, 97}, {100.0, 4.0, 96.0}, 0.1);
        CHECK(r.bins == 2);
        /* cell 1 joins cell 0 (left on distance tie): (103-104)^2/104 +
         * (97-96)^2/96 */
        CHECK(r.statistic == doctest::Approx(1.0 / 104 + 1.0 / 96).epsilon(1e-12));
        CHECK_FALSE(r.reject);
    }
    SUBCASE("zero expectation cells drop when unobserved") {
        const auto r = chi_square_test({0, 55, 45}, {0.0, 50.0, 50.0}, 0.1);
        CHECK(r.bins == 2);
        CHECK(r.statistic == doctest::Approx(1.0));
        CHECK_FALSE(r.reject);
    }
    SUBCASE("observed impossible outcome rejects") {
        const auto r = chi_square_test({1, 99}, {0.0, 100.0}, 0.1);
        CHECK(r.reject);
        CHECK(std::isinf(r.statistic));
    }
    SUBCASE("single cell accepts trivially") {
        const auto r = chi_square_test({100}, {100.0}, 0.1);
        CHECK(r.statistic == 0.0);
        CHECK(r.degrees_of_freedom == 0);
        CHECK_FALSE(r.reject);
    }
    SUBCASE("cascading merges leave expectations at five or more") {
        const auto r =
            chi_square_test({2, 3, 2, 93}, {2.0, 2.0, 2.0, 94.0}, 0.1);
        CHECK(r.bins == 2);
        CHECK(r.statistic == doctest::Approx(1.0 / 6 + 1.0 / 94).epsilon(1e-12));
    }
    SUBCASE("bad arguments") {
        CHECK_THROWS_AS(chi_square_test({1}, {1.0, 2.0}, 0.1), precondition_error);
        CHECK_THROWS_AS(chi_square_test({1, 2}, {1.0, 2.0}, 0.0), precondition_error);
        CHECK_THROWS_AS(chi_square_test({1, 2}, {1.0, 2.0}, 1.0), precondition_error);
        CHECK_THROWS_AS(chi_square_test({1, 2}, {-1.0, 2.0}, 0.1), precondition_error);
    }
}

TEST_CASE("simulated lengths pass the goodness of fit test on a known graph") {
    const auto g = shared(families::k3_pendant());
    int accepted = 0;
    for (std::uint64_t seed : {1, 2, 3}) {
        const SimulationReport r = run_simulation(g, 10000, seed, 0.1);
        REQUIRE(r.chi_square.has_value());
        /* k3_pendant expectations are 512.5 at the smallest, so no merging */
        CHECK(r.chi_square->bins == 5);
        CHECK(r.chi_square->degrees_of_freedom == 4);
        if (!r.chi_square->reject) ++accepted;
    }
    CHECK(accepted >= 2);
}
