#include <cmath>

#include <doctest.h>

#include "helpers.hpp"
#include "tpjc/pg_series.hpp"
#include "tpjc/specfun.hpp"

using namespace tpjc;

TEST_SUITE("specfun") {

TEST_CASE("laguerre low orders match the explicit polynomials") {
    CHECK(laguerre(0, 0.37) == 1.0);
    CHECK(std::abs(laguerre(1, 0.04) - 0.96) <= 1e-15);
    CHECK(std::abs(laguerre(2, 1.0) - (-0.5)) <= 1e-14);
    // L_3(x) = 1 - 3x + 3x^2/2 - x^3/6
    const double x = 0.7;
    const double l3 = 1.0 - 3.0 * x + 1.5 * x * x - x * x * x / 6.0;
    CHECK(std::abs(laguerre(3, x) - l3) <= 1e-14);
}

TEST_CASE("laguerre rejects bad arguments") {
    CHECK_THROWS_AS(laguerre(-1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(laguerre(2, -0.1), std::domain_error);
    CHECK_THROWS_AS(laguerre(2, std::nan("")), std::domain_error);
    CHECK_THROWS_AS(laguerre(2, std::numeric_limits<double>::infinity()),
                    std::domain_error);
}

TEST_CASE("coupling_f closed forms") {
    CHECK(coupling_f(17, 0.0) == 1.0);
    CHECK(std::abs(coupling_f(0, 0.2) - std::exp(-0.02)) <= 1e-15);
    CHECK(std::abs(coupling_f(1, 0.2) - std::exp(-0.02) * 0.96) <= 1e-15);
    CHECK_THROWS_AS(coupling_f(-1, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(coupling_f(3, -0.2), std::domain_error);
}

TEST_CASE("f_series_oracle closed forms and equivalence") {
    CHECK(std::abs(f_series_oracle(0, 0.5) - std::exp(-0.125)) <= 1e-15);
    CHECK(f_series_oracle(2, 0.0) == 1.0);
    CHECK(std::abs(f_series_oracle(5, 0.3) - coupling_f(5, 0.3)) <= 1e-12);
}

TEST_CASE("recurrence and series agree over the working range") {
    for (double eta : {0.05, 0.1, 0.2, 0.5, 1.0}) {
        for (int m = 0; m <= 60; ++m) {
            CHECK(std::abs(coupling_f(m, eta) - f_series_oracle(m, eta)) <= 1e-10);
        }
    }
}

TEST_CASE("coupling profile is bounded by one") {
    for (double eta : {0.05, 0.1, 0.2, 0.5, 1.0, 2.0}) {
        for (int m = 0; m <= 60; ++m) {
            CHECK(std::abs(coupling_f(m, eta)) <= 1.0 + 1e-15);
        }
    }
}

TEST_CASE("ground-level coupling decreases with eta") {
    double prev = coupling_f(0, 0.0);
    for (double eta = 0.1; eta <= 3.0; eta += 0.1) {
        const double cur = coupling_f(0, eta);
        CHECK(cur <= prev);
        prev = cur;
    }
}

TEST_CASE("coherent_weight closed forms") {
    CHECK(coherent_weight(0, 0.0) == Complex(1.0, 0.0));
    CHECK(coherent_weight(3, 0.0) == Complex(0.0, 0.0));

    // |<4|alpha=2>|^2 is the Poisson(4) mass at k=4.
    const double mass = std::norm(coherent_weight(4, 2.0));
    CHECK(std::abs(mass - 256.0 * std::exp(-4.0) / 24.0) <= 1e-14);

    // <1|i> = i e^{-1/2}: the phase must survive.
    const Complex w = coherent_weight(1, Complex(0.0, 1.0));
    CHECK(std::abs(w.imag() - std::exp(-0.5)) <= 1e-14);
    CHECK(std::abs(w.real()) <= 1e-14);

    CHECK_THROWS_AS(coherent_weight(-1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(coherent_weight(1, Complex(std::nan(""), 0.0)),
                    std::domain_error);
}

TEST_CASE("coherent_weight stays finite far out in the tail") {
    const Complex w = coherent_weight(3000, Complex(30.0, 0.0));
    CHECK(std::isfinite(w.real()));
    CHECK(std::isfinite(w.imag()));
    CHECK(std::norm(w) < 1e-100);

    // Large-amplitude completeness: the log-space evaluation must not lose
    // the bulk of the distribution to overflow or cancellation.
    double mass = 0.0;
    for (int k = 0; k <= 1200; ++k) {
        mass += std::norm(coherent_weight(k, 30.0));
    }
    CHECK(std::abs(mass - 1.0) <= 1e-10);
}

TEST_CASE("truncated coherent mass meets the truncation rule") {
    // The dimension picked by the dynamics-side rule must capture 1 - eps.
    Preparation prep;
    prep.motion = ModePrep::coherent_state(2.0);
    prep.field = ModePrep::fock_state(0);
    const double eps = 1e-10;
    const FockCutoffs cutoffs = truncation_bounds(prep, eps);
    double mass = 0.0;
    for (int k = 0; k < cutoffs.m_max; ++k) {
        mass += std::norm(coherent_weight(k, 2.0));
    }
    CHECK(mass >= 1.0 - eps);
}

TEST_CASE("CouplingProfile memoizes the recurrence") {
    const CouplingProfile profile(0.2, 60);
    CHECK(profile.eta() == 0.2);
    CHECK(profile.m_max() == 60);
    for (int m = 0; m <= 60; ++m) {
        CHECK(std::abs(profile(m) - coupling_f(m, 0.2)) <= 1e-14);
    }
    CHECK_THROWS_AS(profile(61), std::out_of_range);
    CHECK_THROWS_AS(profile(-1), std::out_of_range);
    CHECK_THROWS_AS(CouplingProfile(-0.1, 5), std::domain_error);
}

} // TEST_SUITE
