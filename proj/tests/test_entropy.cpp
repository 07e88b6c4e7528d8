#include <cmath>

#include "doctest.h"
#include "sdw/catalog.hpp"
#include "sdw/entropy.hpp"

using namespace sdw;

TEST_CASE("full shift rows are exactly ln 2") {
    auto full = catalog_system("full-binary");
    EntropyTable t = entropy_estimate(full, 8, EntropyMode::Global1d);
    for (const auto& row : t.rows) CHECK(row.estimate == std::log(2.0));

    auto full3 = catalog_system("full-ternary");
    EntropyTable t3 = entropy_estimate(full3, 5, EntropyMode::Local);
    for (const auto& row : t3.rows) CHECK(row.estimate == std::log(3.0));
}

TEST_CASE("golden mean table converges onto the spectral value") {
    auto golden = catalog_system("golden-mean");
    EntropyTable t = entropy_estimate(golden, 14, EntropyMode::Global1d);

    // n = 10 row: window 21 cells, count F_23 = 28657
    const auto& r10 = t.rows[9];
    CHECK(r10.window_cells == 21);
    CHECK(r10.count == BigUint(28657));
    CHECK(r10.estimate == doctest::Approx(0.4886).epsilon(1e-3));

    double exact = *entropy_exact_1d(golden);
    double phi = std::log((1.0 + std::sqrt(5.0)) / 2.0);
    CHECK(exact == doctest::Approx(phi).epsilon(1e-9));

    // antitone rows, every row above the limit
    for (std::size_t i = 1; i < t.rows.size(); ++i)
        CHECK(t.rows[i].estimate <= t.rows[i - 1].estimate);
    for (const auto& row : t.rows) CHECK(row.estimate >= exact);
}

TEST_CASE("exact entropies of catalog systems") {
    CHECK(*entropy_exact_1d(catalog_system("full-binary")) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(*entropy_exact_1d(catalog_system("aa-ab-sft")) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(*entropy_exact_1d(catalog_system("zeros")) ==
          doctest::Approx(0.0).epsilon(1e-12));
    // at-most-one-one has zero entropy: counts grow linearly
    CHECK(*entropy_exact_1d(catalog_system("at-most-one-one")) ==
          doctest::Approx(0.0).epsilon(1e-9));

    // empty subshift: forbid both symbols
    Alphabet b = Alphabet::binary();
    SftSpec empty = sft_from_forbidden(
        1, b, {Pattern::word({0}), Pattern::word({1})});
    CHECK_FALSE(entropy_exact_1d(SubshiftHandle::from_sft(empty, "empty")).has_value());
}

TEST_CASE("ledrappier table follows the rank formula") {
    auto led = catalog_system("ledrappier");
    EntropyTable t = entropy_estimate(led, 16, EntropyMode::Local);
    for (const auto& row : t.rows) {
        double formula = (2.0 * row.n - 1.0) * std::log(2.0) /
                         (static_cast<double>(row.n) * row.n);
        CHECK(row.estimate == doctest::Approx(formula).epsilon(1e-12));
    }
    CHECK(t.rows[7].estimate == doctest::Approx(0.1624).epsilon(1e-3));
    CHECK(t.rows[15].estimate == doctest::Approx(0.0840).epsilon(1e-3));
    CHECK(t.rows[15].estimate < 0.09);
}

TEST_CASE("every finite row dominates the spectral limit across the catalog") {
    for (const char* id : {"full-binary", "full-ternary", "golden-mean", "even",
                           "at-most-one-one", "aa-ab-sft", "zeros", "constant-3"}) {
        auto s = catalog_system(id);
        double exact = *entropy_exact_1d(s);
        EntropyTable t = entropy_estimate(s, 8, EntropyMode::Global1d);
        for (const auto& row : t.rows) CHECK(row.estimate >= exact - 1e-9);
    }
}

TEST_CASE("strict monotonicity probes") {
    auto full = catalog_system("full-binary");
    auto golden = catalog_system("golden-mean");
    auto zeros = catalog_system("zeros");

    MonotonicityReport r1 = strict_monotonicity_probe(full, golden, 10);
    CHECK(r1.containment_ok);
    CHECK(r1.all_gaps_positive);

    MonotonicityReport r2 = strict_monotonicity_probe(golden, zeros, 10);
    CHECK(r2.all_gaps_positive);
    for (std::size_t i = 0; i < r2.gaps.size(); ++i)
        CHECK(r2.gaps[i] == doctest::Approx(r2.sigma.rows[i].estimate));

    // identical systems are rejected: containment is not strict
    CHECK_THROWS_AS(strict_monotonicity_probe(full, catalog_system("full-binary"), 4),
                    std::invalid_argument);
    // non-subsystems are rejected
    CHECK_THROWS_AS(strict_monotonicity_probe(golden, full, 4), std::invalid_argument);
}

TEST_CASE("factor entropy checks") {
    FactorEntropyReport ge = factor_entropy_check(catalog_code("golden-even"), 10);
    CHECK(ge.rows_ok);
    REQUIRE(ge.source_exact.has_value());
    REQUIRE(ge.image_exact.has_value());
    CHECK(*ge.source_exact == doctest::Approx(*ge.image_exact).epsilon(1e-6));
    CHECK(ge.inequality_ok);

    FactorEntropyReport c0 = factor_entropy_check(catalog_code("constant0-full"), 6);
    CHECK(c0.rows_ok);
    CHECK(*c0.image_exact == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(*c0.source_exact == doctest::Approx(std::log(2.0)).epsilon(1e-12));

    for (const char* id : {"shift-golden", "identity:golden-mean"}) {
        FactorEntropyReport ig = factor_entropy_check(catalog_code(id), 8);
        CHECK(ig.rows_ok);
        CHECK(*ig.source_exact == doctest::Approx(*ig.image_exact).epsilon(1e-9));
    }

    // the counting inequality holds row-wise across the catalog codes
    for (const char* id : {"xor-full", "majority3-full", "golden-even"}) {
        FactorEntropyReport r = factor_entropy_check(catalog_code(id), 8);
        CHECK(r.rows_ok);
        CHECK(r.inequality_ok);
    }
}

TEST_CASE("entropy tables flag budget exhaustion and stay partial") {
    auto golden = catalog_system("golden-mean");
    Budget tiny;
    tiny.max_nodes = 64;
    EntropyTable t = entropy_estimate(golden, 12, EntropyMode::Local, tiny);
    CHECK(t.rows.size() < 12);
    CHECK(t.note.find("budget exhausted") != std::string::npos);
}

TEST_CASE("toroidal mode lower-bound probe") {
    auto led = catalog_system("ledrappier");
    EntropyTable t = entropy_estimate(led, 4, EntropyMode::Toroidal);
    EntropyTable local = entropy_estimate(led, 4, EntropyMode::Local);
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        CHECK(!(local.rows[i].count < t.rows[i].count));
}
