#include "chiralww/dynamics.hpp"
#include "chiralww/error.hpp"
#include "support/test_models.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace chiralww;
using std::numbers::pi;

namespace {

Mat2 mat(Complex a, Complex b, Complex c, Complex d) {
    Mat2 m;
    m << a, b, c, d;
    return m;
}

}  // namespace

TEST_CASE("time_grid") {
    const auto g = time_grid(2.0, 5);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == 0.0);
    CHECK(g[1] == 0.5);
    CHECK(g.back() == 2.0);
    CHECK(time_grid(1.0, 0).empty());
}

TEST_CASE("hs_probabilities") {
    const auto quarter = hs_probabilities(1.0, 0.0, pi / 4);
    CHECK(quarter.p_l == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(quarter.p_r == doctest::Approx(0.5).epsilon(1e-15));

    const auto start = hs_probabilities(0.3, -1.2, 0.0);
    CHECK(start.p_l == 1.0);
    CHECK(start.p_r == 0.0);

    // Delta = 5, sin^2(pi/2) = 1.
    const auto pv = hs_probabilities(3.0, 4.0, pi / 10);
    CHECK(std::abs(pv.p_r - 0.36) < 1e-15);
    CHECK(std::abs(pv.p_l - 0.64) < 1e-15);

    // Cross-check against the independent propagator of m 1 + delta sigma_x + eps sigma_z.
    for (double t : {0.1, 0.7, 2.3, 9.9}) {
        const Vec2 phi = testing::expm_evolve(mat(4.0 + 0.5, 3.0, 3.0, -4.0 + 0.5), Vec2(1, 0), t);
        const auto p = hs_probabilities(3.0, 4.0, t);
        CHECK(std::abs(p.p_l - std::norm(phi(0))) < 1e-12);
        CHECK(std::abs(p.p_r - std::norm(phi(1))) < 1e-12);
        CHECK(std::abs(p.p_l + p.p_r - 1.0) < 1e-15);
    }
}

TEST_CASE("hs_optical_activity") {
    CHECK(hs_optical_activity(0.4, 0.9, 2.5, 0.0) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(std::abs(hs_optical_activity(1.0, 0.0, 1.0, pi / 4)) < 1e-15);

    // epsilon == delta: the minimum (eps^2 - delta^2)/(eps^2 + delta^2) is 0.
    const double split = std::sqrt(0.5);
    CHECK(std::abs(hs_optical_activity(0.5, 0.5, 1.0, pi / (2 * split))) < 1e-15);

    for (double t = 0.0; t < 3.0; t += 0.37) {
        const auto p = hs_probabilities(0.8, 0.3, t);
        CHECK(hs_optical_activity(0.8, 0.3, 1.7, t) == doctest::Approx(1.7 * (p.p_l - p.p_r)).epsilon(1e-13));
    }
}

TEST_CASE("evolve_effective") {
    const Vec2 phi0 = Vec2(Complex(0.6, 0.0), Complex(0.0, 0.8));
    SUBCASE("zero generator is the identity") {
        CHECK((evolve_effective(EffectiveGenerator{Mat2::Zero()}, phi0, 3.0) - phi0).norm() == 0.0);
    }
    SUBCASE("hermitian generators are unitary and match the Pade exponential") {
        std::mt19937_64 rng(4);
        for (int i = 0; i < 100; ++i) {
            const Mat2 w = testing::random_hermitian2(rng);
            const double t = 0.13 * i;
            const Vec2 phi = evolve_effective(EffectiveGenerator{w}, phi0, t);
            CHECK(std::abs(phi.norm() - 1.0) < 1e-12);
            CHECK((phi - testing::expm_evolve(w, phi0, t)).norm() < 1e-11);
        }
    }
    SUBCASE("dissipative generators lose norm monotonically") {
        std::mt19937_64 rng(6);
        for (int trial = 0; trial < 20; ++trial) {
            const Mat2 m = testing::random_hermitian2(rng);
            const Complex c = testing::random_complex(rng, 0.3);
            Mat2 gamma;  // rank one, positive semidefinite
            gamma << std::norm(c), c, std::conj(c), 1.0;
            gamma *= 0.2;
            const EffectiveGenerator w{m - Complex(0, 1) * gamma};
            double previous = 1.0;
            for (double t = 0.05; t < 6.0; t += 0.05) {
                const Vec2 phi = evolve_effective(w, Vec2(1, 0), t);
                CHECK(phi.norm() <= previous + 1e-14);
                CHECK((phi - testing::expm_evolve(w.matrix, Vec2(1, 0), t)).norm() < 1e-11);
                previous = phi.norm();
            }
        }
    }
    SUBCASE("defective generator stays finite") {
        // K^2 = 0: the closed form takes its small-argument branch.
        const EffectiveGenerator w{mat(Complex(0, -0.5), 1.0, 0.0, Complex(0, -0.5))};
        for (double t : {0.0, 0.5, 4.0}) {
            const Vec2 phi = evolve_effective(w, phi0, t);
            CHECK((phi - testing::expm_evolve(w.matrix, phi0, t)).norm() < 1e-13);
        }
    }
}

TEST_CASE("multistate_probabilities") {
    SUBCASE("pure tunneling") {
        const Mat2 m = mat(0.0, 1.0, 1.0, 0.0);
        for (double t : {0.0, 0.4, 1.9}) {
            const auto p = multistate_probabilities(MassMatrix{m}, t);
            CHECK(p.p_l == doctest::Approx(std::cos(t) * std::cos(t)).epsilon(1e-14));
            CHECK(p.p_r == doctest::Approx(std::sin(t) * std::sin(t)).epsilon(1e-14));
        }
    }
    SUBCASE("no mixing") {
        for (double t : {0.0, 1.0, 100.0}) {
            const auto p = multistate_probabilities(MassMatrix{mat(0.3, 0.0, 0.0, -0.2)}, t);
            CHECK(p.p_l == doctest::Approx(1.0).epsilon(1e-15));
            CHECK(p.p_r == doctest::Approx(0.0).epsilon(1e-15));
        }
    }
    SUBCASE("reduction example against the matrix exponential") {
        const Mat2 m = mat(-0.025, 0.1, 0.1, 0.0);
        const auto p = multistate_probabilities(MassMatrix{m}, 5.0);
        const Vec2 phi = testing::expm_evolve(m, Vec2(1, 0), 5.0);
        CHECK(std::abs(p.p_l - std::norm(phi(0))) < 1e-10);
        CHECK(std::abs(p.p_r - std::norm(phi(1))) < 1e-10);
        CHECK(splitting(MassMatrix{m}, Invariance::T) ==
              doctest::Approx(0.5 * std::sqrt(0.025 * 0.025 + 0.04)).epsilon(1e-15));
    }
    SUBCASE("closed forms agree with evolve_effective on random T matrices") {
        std::mt19937_64 rng(12);
        for (int i = 0; i < 100; ++i) {
            const Mat2 m = testing::random_t2(rng);
            const double t = 0.31 * i;
            const auto closed = multistate_probabilities(MassMatrix{m}, t, Invariance::T);
            const auto general = multistate_probabilities(MassMatrix{m}, t, Invariance::General);
            CHECK(std::abs(closed.p_l - general.p_l) < 1e-10);
            CHECK(std::abs(closed.p_r - general.p_r) < 1e-10);
        }
    }
    SUBCASE("complex M12 in T mode") {
        try {
            multistate_probabilities(MassMatrix{mat(0.0, Complex(0, 1), Complex(0, -1), 0.0)}, 1.0);
            FAIL("expected NotTSymmetric");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotTSymmetric);
        }
    }
}

TEST_CASE("optical_activity") {
    SUBCASE("empty tower T mode equals the two-state closed form") {
        for (double t = 0.0; t < 4.0; t += 0.1) {
            const Mat2 m = mat(0.2 + 0.35, 0.6, 0.6, 0.2 - 0.35);
            CHECK(std::abs(optical_activity(MassMatrix{m}, 2.0, t, Invariance::T) -
                           hs_optical_activity(0.6, 0.35, 2.0, t)) < 1e-12);
            const Mat2 sym = mat(0.2, 0.6, 0.6, 0.2);
            CHECK(std::abs(optical_activity(MassMatrix{sym}, 2.0, t, Invariance::CPT) -
                           2.0 * std::cos(2 * 0.6 * t)) < 1e-12);
        }
    }
    SUBCASE("CPT half period") {
        const Mat2 m = mat(1.0, Complex(0.3, 0.4), Complex(0.3, -0.4), 1.0);
        CHECK(optical_activity(MassMatrix{m}, 3.0, pi, Invariance::CPT) ==
              doctest::Approx(-3.0).epsilon(1e-14));
    }
    SUBCASE("T mode at t = 0") {
        CHECK(optical_activity(MassMatrix{mat(1.0, 1.0, 1.0, -1.0)}, 1.5, 0.0, Invariance::T) ==
              doctest::Approx(1.5).epsilon(1e-15));
    }
    SUBCASE("every mode equals theta_max (p_l - p_r)") {
        std::mt19937_64 rng(17);
        for (int i = 0; i < 50; ++i) {
            const double t = 0.2 * i;
            const Mat2 c = testing::random_cpt2(rng);
            const Vec2 pc = testing::expm_evolve(c, Vec2(1, 0), t);
            CHECK(optical_activity(MassMatrix{c}, 1.0, t, Invariance::CPT) ==
                  doctest::Approx(std::norm(pc(0)) - std::norm(pc(1))).epsilon(1e-10));
            const Mat2 g = testing::random_hermitian2(rng);
            const Vec2 pg = testing::expm_evolve(g, Vec2(1, 0), t);
            CHECK(std::abs(optical_activity(MassMatrix{g}, 1.0, t, Invariance::General) -
                           (std::norm(pg(0)) - std::norm(pg(1)))) < 1e-10);
        }
    }
}

TEST_CASE("time_average_theta") {
    CHECK(time_average_theta(MassMatrix{mat(0.5, Complex(0.1, 0.2), Complex(0.1, -0.2), 0.5)},
                             Invariance::CPT) == 0.0);
    CHECK(time_average_theta(MassMatrix{mat(0.5, 0.0, 0.0, -0.5)}, Invariance::T) == 1.0);
    CHECK(time_average_theta(MassMatrix{mat(0.7, 0.35, 0.35, 0.0)}, Invariance::T) ==
          doctest::Approx(0.5).epsilon(1e-15));

    // Uniform-grid average over 200 periods.
    std::mt19937_64 rng(23);
    for (int i = 0; i < 10; ++i) {
        const Mat2 m = testing::random_t2(rng);
        const auto period = oscillation_period(MassMatrix{m}, Invariance::T);
        const auto grid = time_grid(200.0 * period.tau, 20001);
        double sum = 0.0;
        for (double t : grid) sum += optical_activity(MassMatrix{m}, 1.0, t, Invariance::T);
        CHECK(std::abs(sum / grid.size() - time_average_theta(MassMatrix{m}, Invariance::T)) < 1e-3);
    }
}

TEST_CASE("racemization_series invariants") {
    std::mt19937_64 rng(29);
    const auto grid = time_grid(20.0, 101);
    for (Invariance mode : {Invariance::T, Invariance::General}) {
        for (int i = 0; i < 20; ++i) {
            const Mat2 m = mode == Invariance::T ? testing::random_t2(rng) : testing::random_hermitian2(rng);
            const Reduction r{MassMatrix{m}, DecayMatrix{Mat2::Zero()}, EffectiveGenerator{m}};
            for (const auto& s : racemization_series(r, mode, grid).samples) {
                CHECK(s.p_l >= 0.0);
                CHECK(s.p_l <= 1.0 + 1e-12);
                CHECK(s.p_r <= 1.0 + 1e-12);
                CHECK(std::abs(s.p_l + s.p_r - 1.0) < 1e-10);
                CHECK(s.theta_ratio == s.p_l - s.p_r);
            }
        }
    }

    SUBCASE("decay drains the doublet") {
        Mat2 gamma = Mat2::Zero();
        gamma(0, 0) = 0.05;
        const Mat2 m = mat(0.0, 0.3, 0.3, 0.0);
        const Reduction r{MassMatrix{m}, DecayMatrix{gamma}, EffectiveGenerator{m - Complex(0, 1) * gamma}};
        const auto series = racemization_series(r, Invariance::T, grid);
        CHECK(series.samples.back().p_l + series.samples.back().p_r < 0.9);
    }
}

TEST_CASE("kaon_transition_probability") {
    SUBCASE("zero decay is sin^2(dm t / 2)") {
        const KaonParams k{1.0, 3.0, 0.0, 0.0, KaonEnvelope::Standard};
        CHECK(kaon_transition_probability(k, pi / 2) == doctest::Approx(1.0).epsilon(1e-15));
        for (double t = 0.0; t < 5.0; t += 0.1)
            CHECK(kaon_transition_probability(k, t) ==
                  doctest::Approx(std::pow(std::sin(t), 2)).epsilon(1e-12));
    }
    SUBCASE("t = 0 vanishes in both conventions") {
        for (auto env : {KaonEnvelope::Standard, KaonEnvelope::Full})
            CHECK(kaon_transition_probability({0.2, 0.9, 0.4, 1.3, env}, 0.0) == 0.0);
    }
    SUBCASE("full envelope with equal widths") {
        const double g = 0.3;
        const double dm = 1.7;
        const KaonParams k{0.0, dm, g, g, KaonEnvelope::Full};
        for (double t = 0.0; t < 6.0; t += 0.25) {
            const double expected = 0.25 * (2 * std::exp(-g * t) - 2 * std::exp(-2 * g * t) * std::cos(dm * t));
            CHECK(std::abs(kaon_transition_probability(k, t) - expected) < 1e-15);
        }
    }
    SUBCASE("standard envelope is |<Kbar|psi(t)>|^2 for complex eigenvalues") {
        // Amplitude 1/2 (e^{-i l1 t} - e^{-i l2 t}) with l = m - i g / 2.
        const KaonParams k{0.5, 1.4, 0.2, 0.9, KaonEnvelope::Standard};
        for (double t = 0.0; t < 8.0; t += 0.5) {
            const Complex l1(k.m1, -k.gamma1 / 2), l2(k.m2, -k.gamma2 / 2);
            const Complex amp = 0.5 * (std::exp(Complex(0, -1) * l1 * t) - std::exp(Complex(0, -1) * l2 * t));
            CHECK(std::abs(kaon_transition_probability(k, t) - std::norm(amp)) < 1e-14);
        }
    }
    SUBCASE("negative widths are rejected") {
        CHECK_THROWS_AS(kaon_transition_probability({0, 1, -0.1, 0, KaonEnvelope::Standard}, 1.0), Error);
    }
}
