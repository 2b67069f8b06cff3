#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include <Eigen/Dense>

#include "helpers.hpp"
#include "tpjc/pg_series.hpp"
#include "tpjc/specfun.hpp"

using namespace tpjc;
using tpjc::testing::base_params;
using tpjc::testing::linspace;

namespace {

// Independent brute-force oracle for eta = 0: with a flat standing wave the
// motion factors out, so each motional weight multiplies the same field x
// {e, g} evolution. The field-sector matrix in flip-rate units is
//   <n, e|:  (n+1)/r on the diagonal, sqrt((n+1)(n+2)) to |n+2, g>
//   <n, g|:  n * r   on the diagonal
// built directly from that mechanical reading rather than via the library.
std::vector<double> brute_force_pg_eta0(Complex alpha_field, double r,
                                        std::span<const double> tau,
                                        int n_dim) {
    const int dim = 2 * n_dim;  // |n, e> at 2n, |n, g> at 2n+1
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int n = 0; n < n_dim; ++n) {
        h(2 * n, 2 * n) = (n + 1.0) / r;
        h(2 * n + 1, 2 * n + 1) = n * r;
        if (n + 2 < n_dim) {
            const double flip = std::sqrt((n + 1.0) * (n + 2.0));
            h(2 * n, 2 * (n + 2) + 1) = flip;
            h(2 * (n + 2) + 1, 2 * n) = flip;
        }
    }

    // Raw truncated weights on |n, e>, deliberately not renormalized. The
    // top two field levels are reserved as two-photon headroom and start
    // empty, mirroring how the series builder truncates the preparation.
    Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(dim);
    for (int n = 0; n < n_dim - 2; ++n) {
        psi0[2 * n] = coherent_weight(n, alpha_field);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    const Eigen::MatrixXd v = solver.eigenvectors();
    const Eigen::VectorXd ev = solver.eigenvalues();
    const Eigen::VectorXcd c0 = v.transpose().cast<Complex>() * psi0;

    std::vector<double> pg(tau.size());
    for (size_t i = 0; i < tau.size(); ++i) {
        Eigen::VectorXcd phases(dim);
        for (int k = 0; k < dim; ++k) {
            phases[k] = std::polar(1.0, -ev[k] * tau[i]);
        }
        const Eigen::VectorXcd psi = v.cast<Complex>() * phases.cwiseProduct(c0);
        double p = 0.0;
        for (int n = 0; n < n_dim; ++n) {
            p += std::norm(psi[2 * n + 1]);
        }
        pg[i] = p;
    }
    return pg;
}

} // namespace

TEST_SUITE("pg_series") {

TEST_CASE("truncation bounds capture Fock preparations exactly") {
    Preparation prep;
    prep.motion = ModePrep::fock_state(3);
    prep.field = ModePrep::fock_state(0);
    const FockCutoffs c = truncation_bounds(prep, 1e-10);
    CHECK(c.m_max == 4);
    CHECK(c.n_max == 3);  // floor: |0>, |1>, |2>

    Preparation ground; // both modes in |0>
    const FockCutoffs c0 = truncation_bounds(ground, 1e-10);
    CHECK(c0.m_max == 1);
    CHECK(c0.n_max == 3);

    Preparation excited_field;
    excited_field.field = ModePrep::fock_state(4);
    const FockCutoffs cf = truncation_bounds(excited_field, 1e-10);
    CHECK(cf.n_max == 7);  // two-photon headroom above |4>
}

TEST_CASE("truncation bounds solve the Poisson tail condition") {
    Preparation prep;
    prep.motion = ModePrep::coherent_state(2.0);
    const double eps = 1e-10;
    const FockCutoffs c = truncation_bounds(prep, eps);
    CHECK(c.m_max == 23);

    // Independent check of the defining property: the tail above m_max is
    // below eps and the tail above m_max - 1 is not.
    auto poisson_tail = [](double lam, int from) {
        double tail = 0.0;
        for (int k = from + 200; k >= from; --k) {
            tail += std::exp(-lam + k * std::log(lam) - std::lgamma(k + 1.0));
        }
        return tail;
    };
    CHECK(poisson_tail(4.0, c.m_max) < eps);
    CHECK(poisson_tail(4.0, c.m_max - 1) >= eps);

    Preparation field_prep;
    field_prep.field = ModePrep::coherent_state(2.0);
    const FockCutoffs cfield = truncation_bounds(field_prep, eps);
    CHECK(cfield.n_max == 25);  // same dimension plus two-photon headroom
    CHECK(cfield.m_max == 1);

    CHECK_THROWS_AS(truncation_bounds(prep, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(truncation_bounds(prep, -1e-3), std::invalid_argument);
    CHECK_THROWS_AS(truncation_bounds(prep, 1.5), std::invalid_argument);
}

TEST_CASE("vacuum block reproduces the 8/9 flopping law") {
    SystemParams p = base_params();
    Preparation prep; // |0, 0, e>
    const std::vector<double> tau = linspace(0.0, 25.0, 2000);
    const PgSeries series = pg_series(p, prep, tau, 1e-13);

    REQUIRE(series.values.size() == tau.size());
    CHECK(series.values.front() == 0.0);
    CHECK(series.truncation_deficit == 0.0);
    CHECK_FALSE(series.truncation_warning);
    for (size_t i = 0; i < tau.size(); ++i) {
        const double s = std::sin(1.5 * tau[i]);
        CHECK(std::abs(series.values[i] - (8.0 / 9.0) * s * s) <= 1e-12);
    }
}

TEST_CASE("coherent-coherent series matches an independent propagator at eta = 0") {
    SystemParams p = base_params();
    Preparation prep;
    prep.motion = ModePrep::coherent_state(2.0);
    prep.field = ModePrep::coherent_state(2.0);
    const std::vector<double> tau = linspace(0.0, 25.0, 400);
    const double eps = 1e-8;
    const PgSeries series = pg_series(p, prep, tau, eps);

    // At eta = 0 the motional weights just multiply to the kept mass.
    const FockCutoffs c = truncation_bounds(prep, eps);
    double motion_mass = 0.0;
    for (int m = 0; m < c.m_max; ++m) {
        motion_mass += std::norm(coherent_weight(m, 2.0));
    }
    const std::vector<double> oracle =
        brute_force_pg_eta0(2.0, 1.0, tau, c.n_max);
    for (size_t i = 0; i < tau.size(); ++i) {
        CHECK(std::abs(series.values[i] - motion_mass * oracle[i]) <= 1e-8);
    }
    CHECK(series.truncation_deficit > 0.0);
    CHECK(series.truncation_deficit < eps);
}

TEST_CASE("asymmetric couplings match the independent propagator too") {
    SystemParams p = base_params();
    p.g1 = 2.0;
    p.g2 = 1.0;
    Preparation prep;
    prep.field = ModePrep::coherent_state(1.5);
    const std::vector<double> tau = linspace(0.0, 10.0, 200);
    const PgSeries series = pg_series(p, prep, tau, 1e-10);
    CHECK(series.model_tag == "effective-general-r");

    const FockCutoffs c = truncation_bounds(prep, 1e-10);
    const std::vector<double> oracle =
        brute_force_pg_eta0(1.5, 2.0, tau, c.n_max);
    for (size_t i = 0; i < tau.size(); ++i) {
        CHECK(std::abs(series.values[i] - oracle[i]) <= 1e-8);
    }
}

TEST_CASE("Fock motion rescales time by the squared coupling") {
    SystemParams p = base_params();
    Preparation ref;
    ref.field = ModePrep::coherent_state(2.0);
    const std::vector<double> tau = linspace(0.0, 25.0, 600);

    for (int fock_m : {0, 1, 3, 7}) {
        for (double eta : {0.1, 0.3}) {
            SystemParams moving = p;
            moving.eta = eta;
            Preparation prep = ref;
            prep.motion = ModePrep::fock_state(fock_m);

            const PgSeries series = pg_series(moving, prep, tau, 1e-10);

            const double f2 = coupling_f(fock_m, eta) * coupling_f(fock_m, eta);
            std::vector<double> scaled(tau.size());
            for (size_t i = 0; i < tau.size(); ++i) scaled[i] = f2 * tau[i];
            Preparation still = prep;
            const PgSeries flat = pg_series(p, still, scaled, 1e-10);

            for (size_t i = 0; i < tau.size(); ++i) {
                CHECK(std::abs(series.values[i] - flat.values[i]) <= 1e-12);
            }
        }
    }
}

TEST_CASE("coherent phases do not move the populations") {
    SystemParams p = base_params();
    p.eta = 0.2;
    const std::vector<double> tau = linspace(0.0, 12.0, 150);

    Preparation plain;
    plain.motion = ModePrep::coherent_state(1.2);
    plain.field = ModePrep::coherent_state(2.0);
    Preparation rotated;
    rotated.motion = ModePrep::coherent_state(1.2 * std::polar(1.0, 0.7));
    rotated.field = ModePrep::coherent_state(2.0 * std::polar(1.0, -1.9));

    const PgSeries a = pg_series(p, plain, tau, 1e-10);
    const PgSeries b = pg_series(p, rotated, tau, 1e-10);
    for (size_t i = 0; i < tau.size(); ++i) {
        CHECK(std::abs(a.values[i] - b.values[i]) <= 1e-13);
    }
}

TEST_CASE("spot values are frozen against drift") {
    const std::vector<double> tau = linspace(0.0, 25.0, 2000);
    // tau[400] = 5.002501250625312..., tau[960] = 12.00600300150075...

    SystemParams p = base_params();
    Preparation cc;
    cc.motion = ModePrep::coherent_state(2.0);
    cc.field = ModePrep::coherent_state(2.0);

    const PgSeries flat = pg_series(p, cc, tau, 1e-13);
    CHECK(std::abs(flat.values[400] - 0.492691500291688) <= 1e-10);
    CHECK(std::abs(flat.values[960] - 0.463637602716945) <= 1e-10);

    SystemParams moving = p;
    moving.eta = 0.2;
    const PgSeries warm = pg_series(moving, cc, tau, 1e-13);
    CHECK(std::abs(warm.values[400] - 0.49997392240993) <= 1e-10);
    CHECK(std::abs(warm.values[960] - 0.431970471576223) <= 1e-10);

    SystemParams skew = moving;
    skew.g1 = 2.0;
    skew.g2 = 1.0;
    Preparation mixed;
    mixed.motion = ModePrep::coherent_state(2.0);
    mixed.field = ModePrep::fock_state(1);
    const PgSeries asym = pg_series(skew, mixed, tau, 1e-13);
    CHECK(std::abs(asym.values[400] - 0.244898918155022) <= 1e-10);
    CHECK(asym.model_tag == "effective-general-r");
}

TEST_CASE("degenerate configurations are handled explicitly") {
    const std::vector<double> tau = linspace(0.0, 5.0, 50);
    Preparation prep;

    SystemParams off = base_params();
    off.g1 = 0.0;
    const PgSeries silent = pg_series(off, prep, tau);
    for (double v : silent.values) CHECK(v == 0.0);
    CHECK(silent.model_tag == "effective-closed-form");

    SystemParams resonant = base_params();
    resonant.delta = 0.0;
    CHECK_THROWS_AS(pg_series(resonant, prep, tau), std::domain_error);

    Preparation wrong_level;
    wrong_level.level = Level::g;
    CHECK_THROWS_AS(pg_series(base_params(), wrong_level, tau),
                    std::invalid_argument);
}

TEST_CASE("model tag records which solver ran") {
    const std::vector<double> tau = linspace(0.0, 2.0, 20);
    Preparation prep;
    const PgSeries closed = pg_series(base_params(), prep, tau);
    CHECK(closed.model_tag == "effective-closed-form");

    SystemParams skew = base_params();
    skew.g1 = 1.5;
    const PgSeries general = pg_series(skew, prep, tau);
    CHECK(general.model_tag == "effective-general-r");
}

} // TEST_SUITE
