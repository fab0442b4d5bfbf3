#include <doctest.h>

#include <cmath>

#include "boolprob/certify.hpp"
#include "boolprob/errors.hpp"
#include "boolprob/functionals.hpp"
#include "helpers.hpp"

using namespace boolprob;
using test::measure_B;
using test::two_atom;

namespace {
const double kLn2 = std::log(2.0);
}

TEST_CASE("entropy") {
    CHECK(entropy(AtomicMeasure::rademacher()).value() == 0.0);
    CHECK(entropy(measure_B()).value() == doctest::Approx(-kLn2 / 6).epsilon(1e-14));
    CHECK(entropy(AtomicMeasure({{0.0, 0.5}, {1.0, 0.5}})).is_neg_inf());
}

TEST_CASE("entropy scaling: Gamma(a mu) = Gamma(mu) + log|a|") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const AtomicMeasure mu = random_symmetric_measure(seed, 3, 0.1, 3.0);
        const double g = entropy(mu).value();
        for (double lambda : {0.5, 2.0, -3.0})
            CHECK(entropy(dilate(mu, lambda)).value() ==
                  doctest::Approx(g + std::log(std::abs(lambda))).epsilon(1e-10).scale(1.0));
    }
}

TEST_CASE("fisher closed forms") {
    CHECK(fisher(AtomicMeasure::rademacher()).value() == doctest::Approx(1.0).epsilon(1e-15));
    for (double a : {0.5, 1.3, 4.0})
        CHECK(fisher(two_atom(a)).value() == doctest::Approx(1.0 / (a * a)).epsilon(1e-14));
    // 17/18 + (16/27) log 2, by direct evaluation of the double sum over
    // the squared atoms {2 @ 1/3, 1/2 @ 2/3}.
    CHECK(fisher(measure_B()).value() ==
          doctest::Approx(17.0 / 18 + 16.0 / 27 * kLn2).epsilon(1e-14));
    CHECK(fisher(AtomicMeasure({{-1.0, 0.25}, {0.0, 0.5}, {1.0, 0.25}})).is_pos_inf());
    CHECK_THROWS_AS(fisher(AtomicMeasure::dirac(1.0)), SymmetryError);
}

TEST_CASE("fisher scaling: Psi(a mu) = Psi(mu)/a^2") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const AtomicMeasure mu = random_symmetric_measure(seed + 5, 4, 0.1, 3.0);
        const double psi = fisher(mu).value();
        for (double lambda : {0.5, 2.0, -3.0})
            CHECK(fisher(dilate(mu, lambda)).value() ==
                  doctest::Approx(psi / (lambda * lambda)).epsilon(1e-10));
    }
}

TEST_CASE("fisher sandwich: lower bound <= Psi <= m_{-2}") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const AtomicMeasure mu = random_symmetric_measure(seed, 1 + static_cast<int>(seed % 6),
                                                          0.1, 3.0);
        const double lo = fisher_lower_bound(mu).value();
        const double psi = fisher(mu).value();
        const double hi = nm_fisher(mu).value();
        CHECK(lo <= psi + 1e-12);
        CHECK(psi <= hi + 1e-12);
    }
}

TEST_CASE("fisher_asymmetric") {
    // Symmetric reduction: agrees with fisher.
    CHECK(fisher_asymmetric(AtomicMeasure::rademacher()) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fisher_asymmetric(measure_B()) ==
          doctest::Approx(fisher(measure_B()).value()).epsilon(1e-13));
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const AtomicMeasure mu = random_symmetric_measure(seed * 3, 3, 0.2, 3.0);
        CHECK(fisher_asymmetric(mu) == doctest::Approx(fisher(mu).value()).epsilon(1e-12));
    }

    // Pinned regression for the genuinely non-symmetric case
    // (1/2 at 2, 1/2 at 1/2): 17/8 + (85/24) log 2.
    const AtomicMeasure skew({{2.0, 0.5}, {0.5, 0.5}});
    const double pinned = 17.0 / 8 + 85.0 / 24 * kLn2;
    CHECK(pinned == doctest::Approx(4.5798962644831397).epsilon(1e-15));
    CHECK(fisher_asymmetric(skew) == doctest::Approx(pinned).epsilon(1e-14));

    CHECK_THROWS_AS(fisher_asymmetric(AtomicMeasure({{0.0, 0.5}, {1.0, 0.5}})), DomainError);
}

TEST_CASE("nm_fisher") {
    CHECK(nm_fisher(AtomicMeasure::rademacher()).value() == 1.0);
    CHECK(nm_fisher(measure_B()).value() == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(nm_fisher(AtomicMeasure::dirac(0.0)).is_pos_inf());
}

TEST_CASE("nm quantities scale like the microstates ones") {
    const AtomicMeasure mu = random_symmetric_measure(42, 4, 0.2, 2.0);
    const double psi_star = nm_fisher(mu).value();
    for (double lambda : {0.5, 2.0, -3.0}) {
        const AtomicMeasure d = dilate(mu, lambda);
        CHECK(nm_fisher(d).value() ==
              doctest::Approx(psi_star / (lambda * lambda)).epsilon(1e-10));
        // Gamma* = -log(Psi*)/2 inherits the additive log scaling.
        CHECK(-0.5 * std::log(nm_fisher(d).value()) ==
              doctest::Approx(-0.5 * std::log(psi_star) + std::log(std::abs(lambda)))
                  .epsilon(1e-10));
    }
}

TEST_CASE("relative_report at the equilibrium measure") {
    const FunctionalReport rep = relative_report(AtomicMeasure::rademacher());
    CHECK(rep.gamma.value() == 0.0);
    CHECK(rep.gamma_rel.value() == doctest::Approx(0.0));
    CHECK(rep.gamma_star.value() == doctest::Approx(0.0));
    CHECK(rep.gamma_star_rel.value() == doctest::Approx(0.0));
    CHECK(rep.psi->value() == doctest::Approx(1.0));
    CHECK(rep.psi_rel->value() == doctest::Approx(0.0));
    CHECK(rep.psi_star.value() == doctest::Approx(1.0));
    CHECK(rep.psi_star_rel.value() == doctest::Approx(0.0));
    CHECK(rep.d_star.value() == doctest::Approx(0.0));
    CHECK(rep.w2_to_b_sym.value() == doctest::Approx(0.0));
}

TEST_CASE("relative_report closed forms at the two-atom law +-2") {
    const FunctionalReport rep = relative_report(two_atom(2.0));
    CHECK(rep.gamma_rel.value() == doctest::Approx(1.5 - kLn2).epsilon(1e-14));
    CHECK(rep.psi_star_rel.value() == doctest::Approx(2.25).epsilon(1e-14));
    CHECK(rep.d_star.value() == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(rep.w2_to_b_sym.value() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rep.psi->value() == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("relative_report pinned values for measure B") {
    const FunctionalReport rep = relative_report(measure_B());
    CHECK(rep.gamma_rel.value() == doctest::Approx(kLn2 / 6).epsilon(1e-12));
    CHECK(rep.psi_rel->value() ==
          doctest::Approx(17.0 / 18 + 16.0 / 27 * kLn2 - 1.0).epsilon(1e-12));
    CHECK(rep.psi_star_rel.value() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rep.gamma_star_rel.value() == doctest::Approx(0.5 * std::log(1.5)).epsilon(1e-12));
    CHECK(rep.d_star.value() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(rep.w2_to_b_sym.value() ==
          doctest::Approx(std::sqrt(2.0 - 4.0 / 3 * std::sqrt(2.0))).epsilon(1e-12));
}

TEST_CASE("relative_report invariant identities hold on random measures") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        const AtomicMeasure mu = random_symmetric_measure(seed, 1 + static_cast<int>(seed % 5),
                                                          0.1, 3.0);
        const FunctionalReport rep = relative_report(mu);
        const double m2 = rep.m2.value();
        CHECK(rep.gamma_rel.value() ==
              doctest::Approx(0.5 * m2 - rep.gamma.value() - 0.5).epsilon(1e-13));
        CHECK(rep.psi_star_rel.value() ==
              doctest::Approx(rep.psi_star.value() + m2 - 2.0).epsilon(1e-13));
        CHECK(rep.gamma_star.value() ==
              doctest::Approx(-0.5 * std::log(rep.psi_star.value())).epsilon(1e-13));
        CHECK(rep.d_star.value() * rep.d_star.value() ==
              doctest::Approx(rep.m4.value() - 2.0 * m2 + 1.0).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("report of a law with an atom at zero") {
    const FunctionalReport rep =
        relative_report(AtomicMeasure({{-1.0, 0.25}, {0.0, 0.5}, {1.0, 0.25}}));
    CHECK(rep.gamma.is_neg_inf());
    CHECK(rep.gamma_rel.is_pos_inf());
    CHECK(rep.gamma_star.is_neg_inf());
    CHECK(rep.gamma_star_rel.is_pos_inf());
    CHECK(rep.psi->is_pos_inf());
    CHECK(rep.psi_rel->is_pos_inf());
    CHECK(rep.psi_star.is_pos_inf());
    CHECK(rep.psi_star_rel.is_pos_inf());
    CHECK(rep.d_star.is_finite());
    CHECK(rep.w2_to_b_sym.is_finite());
}

TEST_CASE("report on a non-symmetric law skips the microstates Fisher fields") {
    const AtomicMeasure mu = test::random_measure(17, 4);
    const FunctionalReport rep = relative_report(mu);
    CHECK_FALSE(rep.psi.has_value());
    CHECK_FALSE(rep.psi_rel.has_value());
    CHECK(rep.gamma.is_finite());
}

TEST_CASE("every report field is symmetrization-invariant") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        AtomicMeasure mu = test::random_measure(seed + 3, 4, 0.2, 3.0); // positive support
        const FunctionalReport r1 = relative_report(mu);
        const FunctionalReport r2 = relative_report(symmetrize(mu));
        CHECK(r1.gamma.value() == doctest::Approx(r2.gamma.value()).epsilon(1e-13));
        CHECK(r1.gamma_rel.value() == doctest::Approx(r2.gamma_rel.value()).epsilon(1e-13));
        CHECK(r1.gamma_star.value() == doctest::Approx(r2.gamma_star.value()).epsilon(1e-13));
        CHECK(r1.gamma_star_rel.value() ==
              doctest::Approx(r2.gamma_star_rel.value()).epsilon(1e-13));
        CHECK(r1.psi_star.value() == doctest::Approx(r2.psi_star.value()).epsilon(1e-13));
        CHECK(r1.psi_star_rel.value() == doctest::Approx(r2.psi_star_rel.value()).epsilon(1e-13));
        CHECK(r1.d_star.value() == doctest::Approx(r2.d_star.value()).epsilon(1e-13));
        CHECK(r1.m2.value() == doctest::Approx(r2.m2.value()).epsilon(1e-13));
        CHECK(r1.m4.value() == doctest::Approx(r2.m4.value()).epsilon(1e-13));
        CHECK(r1.w2_to_b_sym.value() == doctest::Approx(r2.w2_to_b_sym.value()).epsilon(1e-13));
    }
}

TEST_CASE("Jensen chain: Gamma* <= Gamma and Psi <= Psi*") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const AtomicMeasure mu = random_symmetric_measure(seed, 1 + static_cast<int>(seed % 6),
                                                          0.1, 3.0);
        const FunctionalReport rep = relative_report(mu);
        CHECK(rep.gamma_star.value() <= rep.gamma.value() + 1e-12);
        CHECK(rep.psi->value() <= rep.psi_star.value() + 1e-12);
    }
}

TEST_CASE("Fisher-entropy product is at least one") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const AtomicMeasure mu = random_symmetric_measure(seed + 9, 4, 0.1, 3.0);
        CHECK(std::exp(2.0 * entropy(mu).value()) * fisher(mu).value() >= 1.0 - 1e-12);
    }
}

TEST_CASE("wasserstein closed cases") {
    const AtomicMeasure b = AtomicMeasure::rademacher();
    CHECK(wasserstein(b, b, 1) == doctest::Approx(0.0));
    CHECK(wasserstein(two_atom(2.0), b, 2) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(wasserstein(AtomicMeasure::dirac(0.0), b, 1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(wasserstein(b, b, 3), InputError);
}

TEST_CASE("wasserstein metric properties and W1 <= W2") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        const AtomicMeasure x = test::random_measure(seed, 3);
        const AtomicMeasure y = test::random_measure(seed + 40, 4);
        const AtomicMeasure z = test::random_measure(seed + 80, 2);
        for (int p : {1, 2}) {
            CHECK(wasserstein(x, x, p) <= 1e-12);
            CHECK(wasserstein(x, y, p) ==
                  doctest::Approx(wasserstein(y, x, p)).epsilon(1e-12).scale(1.0));
            CHECK(wasserstein(x, z, p) <=
                  wasserstein(x, y, p) + wasserstein(y, z, p) + 1e-10);
        }
        CHECK(wasserstein(x, y, 1) <= wasserstein(x, y, 2) + 1e-10);
    }
}

TEST_CASE("closed-form W2 to b agrees with the quantile algorithm to 1e-12") {
    const AtomicMeasure b = AtomicMeasure::rademacher();
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const AtomicMeasure mu = random_symmetric_measure(seed, 1 + static_cast<int>(seed % 6),
                                                          0.05, 3.0);
        CHECK(w2_to_rademacher(mu) ==
              doctest::Approx(wasserstein(mu, b, 2)).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("quantile W1 matches the CDF-area oracle") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        const AtomicMeasure x = test::random_measure(seed * 7, 4);
        const AtomicMeasure y = test::random_measure(seed * 7 + 3, 5);
        CHECK(wasserstein(x, y, 1) ==
              doctest::Approx(test::w1_cdf_area(x, y)).epsilon(1e-11).scale(1.0));
    }
}

TEST_CASE("fourth-moment bound: W1 to b is at most sqrt(m4 - 1) for centered laws") {
    // Holds without any symmetry assumption, only m1 = 0 and m2 = 1.
    const AtomicMeasure b = AtomicMeasure::rademacher();
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        const AtomicMeasure raw = test::random_measure(rng(), 2 + static_cast<int>(rng() % 5));
        const double m1 = moment(raw, 1).value();
        std::vector<Atom> centered = raw.atoms();
        for (Atom& a : centered) a.x -= m1;
        AtomicMeasure mu(std::move(centered));
        mu = dilate(mu, 1.0 / std::sqrt(moment(mu, 2).value()));
        const double m4 = moment(mu, 4).value();
        CHECK(wasserstein(mu, b, 1) <= std::sqrt(m4 - 1.0) + 1e-10);
        // And the sharper Stein form through the discrepancy.
        CHECK(wasserstein(mu, b, 1) <= relative_report(mu).d_star.value() + 1e-10);
    }
}

TEST_CASE("nm_fisher_heatflow") {
    for (double t : {0.0, 0.5, 2.0}) CHECK(nm_fisher_heatflow(1.0, t) == doctest::Approx(1.0 / (1.0 + t)));
    CHECK(nm_fisher_heatflow(1.5, 2.0) == doctest::Approx(0.375));
    CHECK(nm_fisher_heatflow(0.77, 0.0) == doctest::Approx(0.77));
    CHECK_THROWS_AS(nm_fisher_heatflow(0.0, 1.0), InputError);
    CHECK_THROWS_AS(nm_fisher_heatflow(1.0, -1.0), InputError);
}
