#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgj/qgje.hpp"
#include "test_util.hpp"

#include <cmath>

using namespace qgj;
using namespace qgj::testutil;

TEST_CASE("paper cost summation") {
    const double sqrt2 = std::sqrt(2.0);
    CHECK(paper_cost_total(1) == doctest::Approx(2.0 + sqrt2).epsilon(1e-12));
    // n=2 term: 2 + 2 + 2 + 2 = 8
    CHECK(paper_cost_total(2) == doctest::Approx(10.0 + sqrt2).epsilon(1e-12));

    // independent summation for N=10: polynomial 2*285 + 110, geometric sum
    double geometric = 0.0;
    for (int n = 1; n <= 10; ++n)
        geometric += std::pow(sqrt2, n);
    CHECK(paper_cost_total(10) == doctest::Approx(680.0 + geometric).epsilon(1e-12));
    CHECK_THROWS_AS(paper_cost_total(0), std::invalid_argument);
}

TEST_CASE("closed form equals the summation") {
    for (int n = 1; n <= 60; ++n)
        CHECK(std::abs(paper_cost_total(n) - closed_form_cost(n)) < 1e-9 * closed_form_cost(n));
    CHECK(closed_form_cost(1) == doctest::Approx(paper_cost_total(1)).epsilon(1e-12));
}

TEST_CASE("printed closed form disagrees with its own summation") {
    // the polynomial part of the printed theorem drifts from the proof's sum
    CHECK(std::abs(printed_closed_form_cost(10) - paper_cost_total(10)) > 1.0);
}

TEST_CASE("asymptotic ratio") {
    const double ratio = closed_form_cost(60) / std::pow(2.0, 30.0);
    CHECK(ratio > 3.41);
    CHECK(ratio < 3.42);
    // the limit constant
    const double sqrt2 = std::sqrt(2.0);
    CHECK(sqrt2 / (sqrt2 - 1.0) == doctest::Approx(3.414213562).epsilon(1e-8));
}

TEST_CASE("sum of squares") {
    CHECK(sum_of_squares(0) == 0);
    CHECK(sum_of_squares(3) == 14);
    std::uint64_t loop = 0;
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        loop += n * n;
        CHECK(sum_of_squares(n) == loop);
    }
}

TEST_CASE("grover pivot") {
    SUBCASE("finds the single nonzero") {
        std::vector<Rational> column{Rational(0), Rational(0), Rational(5), Rational(0)};
        CostLedger ledger;
        std::mt19937_64 rng(3);
        const auto found = grover_pivot(column, 0, ledger, rng);
        REQUIRE(found.has_value());
        CHECK(*found == 2);
        CHECK(ledger.grover_iterations > 0);
        CHECK(ledger.oracle_queries > 0);
        CHECK(ledger.measurements > 0);
    }
    SUBCASE("all-zero column yields none") {
        std::vector<Rational> column(6);
        CostLedger ledger;
        std::mt19937_64 rng(4);
        CHECK_FALSE(grover_pivot(column, 0, ledger, rng).has_value());
    }
    SUBCASE("start offset restricts the window") {
        std::vector<Rational> column{Rational(7), Rational(0), Rational(0)};
        CostLedger ledger;
        std::mt19937_64 rng(5);
        CHECK_FALSE(grover_pivot(column, 1, ledger, rng).has_value());
        CHECK_FALSE(grover_pivot(column, 3, ledger, rng).has_value());
        CHECK_THROWS_AS(grover_pivot(column, 4, ledger, rng), std::out_of_range);
    }
    SUBCASE("dense column returns some verified nonzero") {
        std::vector<Rational> column{Rational(3), Rational(1), Rational(4), Rational(1),
                                     Rational(5), Rational(9), Rational(2), Rational(6)};
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            CostLedger ledger;
            std::mt19937_64 rng(seed);
            const auto found = grover_pivot(column, 0, ledger, rng);
            REQUIRE(found.has_value());
            CHECK_FALSE(column[*found].is_zero());
        }
    }
}

TEST_CASE("qgje matches the classical strategy") {
    SUBCASE("identity system") {
        Matrix a(3, 3);
        for (int i = 0; i < 3; ++i)
            a.at(i, i) = Rational(1);
        const AugmentedSystem sys(a, {Rational(1), Rational(2), Rational(3)});
        const QgjeReport report = qgje_rref(sys, 7);
        CHECK(report.rref_result.rank == 3);
        CHECK(report.rref_result.reduced == sys.augmented());
        CHECK(report.ledger.multiplications == 0);
        CHECK(report.ledger.additions == 0);
    }
    SUBCASE("random systems, entry-for-entry equality") {
        std::mt19937_64 rng(53);
        for (int trial = 0; trial < 40; ++trial) {
            const AugmentedSystem sys = random_system(rng);
            ClassicalScanStrategy scan;
            CostLedger classical;
            const RrefResult expect = rref(sys, scan, classical);
            const QgjeReport report = qgje_rref(sys, rng());
            CHECK(report.rref_result.reduced == expect.reduced);
            CHECK(report.rref_result.rank == expect.rank);
            CHECK(report.rref_result.pivot_columns == expect.pivot_columns);
        }
    }
}

TEST_CASE("report formulas and ledger completeness") {
    std::mt19937_64 rng(59);
    const AugmentedSystem sys(random_matrix(rng, 4, 4),
                              {Rational(1), Rational(2), Rational(3), Rational(4)});
    const QgjeReport report = qgje_rref(sys, 11);
    CHECK(report.formula_dimension == 4);
    CHECK(report.paper_total == doctest::Approx(paper_cost_total(4)));
    CHECK(report.closed_form_total == doctest::Approx(closed_form_cost(4)));
    CHECK(report.ratio_to_2_half_n ==
          doctest::Approx(closed_form_cost(4) / std::pow(2.0, 2.0)));

    // replaying the log charges exactly the run's arithmetic counters
    CostLedger replayed;
    replay_log(sys.augmented(), report.rref_result.row_op_log, replayed);
    CHECK(replayed.multiplications == report.ledger.multiplications);
    CHECK(replayed.additions == report.ledger.additions);
}

TEST_CASE("cost report table") {
    const auto rows = cost_report(12, false, 0);
    REQUIRE(rows.size() == 12);
    for (const CostRow& row : rows) {
        CHECK(std::abs(row.paper_total - row.closed_form) < 1e-9 * row.closed_form);
        CHECK_FALSE(row.simulated_mean.has_value());
        CHECK(row.floored_closed_form <= row.closed_form);
        CHECK(row.closed_form - row.floored_closed_form < 1.0);
    }
    // ratio column decreasing toward the geometric constant past its hump
    for (std::size_t i = 9; i + 1 < rows.size(); ++i)
        CHECK(rows[i + 1].ratio_to_2_half_n < rows[i].ratio_to_2_half_n);

    const auto sim = cost_report(3, true, 42);
    for (const CostRow& row : sim) {
        REQUIRE(row.simulated_mean.has_value());
        CHECK(*row.simulated_mean > 0.0);
    }
    // identical seed reproduces identical simulated means
    const auto sim2 = cost_report(3, true, 42);
    for (std::size_t i = 0; i < sim.size(); ++i)
        CHECK(*sim[i].simulated_mean == *sim2[i].simulated_mean);
}
