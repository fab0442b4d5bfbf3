// Acceptance suite: runs every quantitative gate of the library at its
// stated tolerance and prints one pass/fail line per criterion. Exit code
// is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "boolprob/certify.hpp"
#include "boolprob/errors.hpp"
#include "boolprob/experiments.hpp"
#include "boolprob/functionals.hpp"
#include "boolprob/transform.hpp"

using namespace boolprob;

namespace {

int failures = 0;

struct Criterion {
    int id;
    std::string label;
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
    void require_le(double value, double bound, const std::string& what) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), " = %.6e > %.6e", value, bound);
        require(value <= bound, what + buf);
    }
};

void run_criterion(int id, const std::string& label,
                   const std::function<void(Criterion&)>& body) {
    Criterion c{id, label};
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  criterion %2d: %s (%.2fs)%s%s\n", c.ok ? "PASS" : "FAIL", id, label.c_str(),
                secs, c.ok ? "" : " -- ", c.detail.c_str());
    std::fflush(stdout);
    if (!c.ok) ++failures;
}

AtomicMeasure measure_B() {
    const double s2 = std::sqrt(2.0);
    return AtomicMeasure({{-s2, 1.0 / 6}, {-1 / s2, 1.0 / 3}, {1 / s2, 1.0 / 3}, {s2, 1.0 / 6}});
}

// Fuzz corpus entry i: pairs cycling 1..6, radii in [0.1, 3].
AtomicMeasure fuzz_measure(int i) {
    return random_symmetric_measure(10'000 + static_cast<std::uint64_t>(i), 1 + i % 6, 0.1, 3.0);
}

AtomicMeasure normalize_m2(const AtomicMeasure& mu) {
    return dilate(mu, 1.0 / std::sqrt(moment(mu, 2).value()));
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main() {
    const AtomicMeasure b = AtomicMeasure::rademacher();
    const AtomicMeasure B = measure_B();

    run_criterion(1, "Rademacher fixed point: clt_measure(b, n) = b for n <= 100", [&](Criterion& c) {
        const auto start = std::chrono::steady_clock::now();
        for (int n = 1; n <= 100; ++n) {
            const AtomicMeasure mu_n = clt_measure(b, n);
            c.require(mu_n.size() == 2, "atom count at n = " + std::to_string(n));
            if (mu_n.size() != 2) return;
            c.require_le(std::abs(mu_n.atoms()[0].x + 1.0), 1e-10, "location drift");
            c.require_le(std::abs(mu_n.atoms()[1].x - 1.0), 1e-10, "location drift");
            c.require_le(std::abs(mu_n.atoms()[0].w - 0.5), 1e-10, "weight drift");
        }
        c.require_le(seconds_since(start), 1.0, "runtime (s)");
    });

    run_criterion(2, "Berry-Esseen identity and transport bounds for n <= 100", [&](Criterion& c) {
        std::vector<AtomicMeasure> corpus{B};
        for (int i = 0; i < 50; ++i) corpus.push_back(normalize_m2(fuzz_measure(i)));
        for (const AtomicMeasure& mu : corpus) {
            const double r4 = boolean_cumulants(mu).r4;
            for (int n = 1; n <= 100; ++n) {
                const AtomicMeasure mu_n = clt_measure(mu, n);
                const double d_star = relative_report(mu_n).d_star.value();
                c.require_le(std::abs(n * d_star * d_star - r4), 1e-8, "identity residual");
                c.require_le(wasserstein(mu_n, b, 2) - d_star, 1e-10, "W2 bound slack");
                c.require_le(wasserstein(mu_n, b, 1) - d_star, 1e-10, "W1 bound slack");
                if (!c.ok) return;
            }
        }
    });

    run_criterion(3, "non-microstates Stam equality over 200 random pairs", [&](Criterion& c) {
        for (int i = 0; i < 200; ++i) {
            const AtomicMeasure mu =
                random_symmetric_measure(20'000 + static_cast<std::uint64_t>(i), 1 + i % 6, 0.1, 3.0);
            const AtomicMeasure nu = random_symmetric_measure(
                30'000 + static_cast<std::uint64_t>(i), 1 + (i + 2) % 6, 0.1, 3.0);
            const double inv_conv = 1.0 / nm_fisher(boolean_convolve(mu, nu)).value();
            const double residual =
                std::abs(inv_conv - 1.0 / nm_fisher(mu).value() - 1.0 / nm_fisher(nu).value());
            c.require_le(residual, 1e-8 * std::max(1.0, inv_conv),
                         "Stam residual at pair " + std::to_string(i));
            if (!c.ok) return;
        }
    });

    run_criterion(4, "constancy of Psi* and Gamma* along the CLT, n <= 50", [&](Criterion& c) {
        for (int i = 0; i < 20; ++i) {
            const AtomicMeasure mu = normalize_m2(fuzz_measure(i));
            const double psi_star = nm_fisher(mu).value();
            const double gamma_star = -0.5 * std::log(psi_star);
            for (int n = 1; n <= 50; ++n) {
                const AtomicMeasure mu_n = clt_measure(mu, n);
                const double ps = nm_fisher(mu_n).value();
                c.require_le(std::abs(ps - psi_star), 1e-8 * std::max(1.0, psi_star),
                             "Psi* drift at n = " + std::to_string(n));
                c.require_le(std::abs(-0.5 * std::log(ps) - gamma_star),
                             1e-8 * std::max(1.0, std::abs(gamma_star)), "Gamma* drift");
                if (!c.ok) return;
            }
        }
    });

    run_criterion(5, "inequality fuzz: 1000 single measures, 200 pairs x 5 thetas", [&](Criterion& c) {
        const auto start = std::chrono::steady_clock::now();
        for (int i = 0; i < 1000; ++i) {
            for (const InequalitySlack& s : certify_single(fuzz_measure(i), 1e-9)) {
                c.require(s.status != SlackStatus::Violated,
                          s.name + " violated at measure " + std::to_string(i) +
                              " slack = " + s.slack.to_string());
                if (!c.ok) return;
            }
        }
        for (int i = 0; i < 200; ++i) {
            const AtomicMeasure mu =
                random_symmetric_measure(40'000 + static_cast<std::uint64_t>(i), 1 + i % 6, 0.1, 3.0);
            const AtomicMeasure nu = random_symmetric_measure(
                50'000 + static_cast<std::uint64_t>(i), 1 + (i + 3) % 6, 0.1, 3.0);
            for (const double theta : {0.0, 0.3, 0.5, 0.7, 1.0}) {
                for (const InequalitySlack& s : certify_pair(mu, nu, theta, 1e-9)) {
                    c.require(s.status != SlackStatus::Violated,
                              s.name + " violated at pair " + std::to_string(i) +
                                  " theta = " + std::to_string(theta));
                    if (!c.ok) return;
                }
            }
        }
        c.require_le(seconds_since(start), 120.0, "runtime (s)");
    });

    run_criterion(6, "de Bruijn residuals: micro <= 1e-6, nm <= 1e-12", [&](Criterion& c) {
        const auto start = std::chrono::steady_clock::now();
        for (int i = 0; i < 20; ++i) {
            const AtomicMeasure mu = fuzz_measure(i);
            for (const double t : {0.5, 1.0, 2.0}) {
                const DeBruijnResidual res = de_bruijn_residual(mu, t, 1e-8);
                c.require_le(res.micro, 1e-6,
                             "micro residual at measure " + std::to_string(i) +
                                 " t = " + std::to_string(t));
                c.require_le(res.nm, 1e-12, "nm residual");
                if (!c.ok) return;
            }
        }
        c.require_le(seconds_since(start), 60.0, "runtime (s)");
    });

    run_criterion(7, "monotonicity of Psi and Gamma, n <= 50, equality on two atoms", [&](Criterion& c) {
        for (int i = 0; i < 50; ++i) {
            const AtomicMeasure mu = normalize_m2(fuzz_measure(i));
            const MonotonicityReport rep = monotonicity_scan(mu, 50, {});
            c.require(rep.psi_monotone, "Psi not monotone at measure " + std::to_string(i));
            c.require(rep.gamma_monotone, "Gamma not monotone at measure " + std::to_string(i));
            if (rep.equality_detected)
                c.require(rep.equality_is_rademacher_type && mu.size() == 2,
                          "spurious equality at measure " + std::to_string(i));
            else
                c.require(mu.size() > 2,
                          "missed equality on two-atom measure " + std::to_string(i));
            if (!c.ok) return;
        }
    });

    run_criterion(8, "entropic rates for B up to n = 1024", [&](Criterion& c) {
        std::vector<int> ns;
        for (int n = 1; n <= 1024; n *= 2) ns.push_back(n);
        const auto rows = entropic_rate_scan(B, ns);
        for (const RateRow& row : rows) {
            c.require(row.entropic_hsi_slack >= -1e-12,
                      "HSI rate bound violated at n = " + std::to_string(row.n));
            c.require(row.fisher_rate_slack >= -1e-8,
                      "Fisher rate bound violated at n = " + std::to_string(row.n));
        }
    });

    run_criterion(9, "pinned functional values for measure B within 1e-6", [&](Criterion& c) {
        const FunctionalReport rep = relative_report(B);
        const double ln2 = std::log(2.0);
        const double psi_B = 17.0 / 18 + 16.0 / 27 * ln2;
        const auto pin = [&c](const char* name, double got, double want) {
            c.require_le(std::abs(got - want), 1e-6, std::string(name) + " drift");
        };
        pin("gamma", rep.gamma.value(), -ln2 / 6);
        pin("psi", rep.psi->value(), psi_B);
        pin("psi_star", rep.psi_star.value(), 1.5);
        pin("gamma_star", rep.gamma_star.value(), -0.5 * std::log(1.5));
        pin("gamma_rel", rep.gamma_rel.value(), ln2 / 6);
        pin("psi_rel", rep.psi_rel->value(), psi_B - 1.0);
        pin("psi_star_rel", rep.psi_star_rel.value(), 0.5);
        pin("d_star", rep.d_star.value(), std::sqrt(0.5));
        pin("w2", rep.w2_to_b_sym.value(), std::sqrt(2.0 - 4.0 / 3 * std::sqrt(2.0)));
    });

    run_criterion(10, "oracle equivalence: power vs chained convolve, t-family vs CLT", [&](Criterion& c) {
        const AtomicMeasure inputs[] = {
            B,
            symmetrize(AtomicMeasure({{0.0, 0.4}, {1.0, 0.35}, {2.2, 0.25}})),
            AtomicMeasure({{-1.2, 0.3}, {0.4, 0.45}, {2.0, 0.25}}),
        };
        int input_index = 0;
        for (const AtomicMeasure& mu : inputs) {
            AtomicMeasure chained = mu;
            for (int n = 2; n <= 8; ++n) {
                chained = boolean_convolve(chained, mu);
                const AtomicMeasure powered = boolean_power(mu, n);
                const std::string where =
                    " (input " + std::to_string(input_index) + ", n = " + std::to_string(n) + ")";
                c.require(powered.size() == chained.size(), "atom count mismatch" + where);
                if (!c.ok) return;
                for (std::size_t k = 0; k < powered.size(); ++k) {
                    c.require_le(std::abs(powered.atoms()[k].x - chained.atoms()[k].x), 1e-8,
                                 "power location drift" + where);
                    c.require_le(std::abs(powered.atoms()[k].w - chained.atoms()[k].w), 1e-8,
                                 "power weight drift" + where);
                }
            }
            ++input_index;
        }
        for (int i = 0; i < 5; ++i) {
            const AtomicMeasure mu = normalize_m2(fuzz_measure(i));
            for (int n = 1; n <= 8; ++n) {
                const AtomicMeasure family = continuous_sq_power(mu, n);
                const AtomicMeasure direct = square_pushforward(clt_measure(mu, n));
                c.require(family.size() == direct.size(), "t-family atom count");
                if (!c.ok) return;
                for (std::size_t k = 0; k < family.size(); ++k) {
                    c.require_le(std::abs(family.atoms()[k].x - direct.atoms()[k].x), 1e-8,
                                 "t-family location drift");
                    c.require_le(std::abs(family.atoms()[k].w - direct.atoms()[k].w), 1e-8,
                                 "t-family weight drift");
                }
            }
        }
    });

    run_criterion(11, "discrete lemma fuzz: 1000 vectors, slack >= -1e-12", [&](Criterion& c) {
        std::mt19937_64 rng(999);
        const auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
        c.require_le(std::abs(lemma_discrete_slack(std::vector<double>(7, 1.0))), 1e-12,
                     "all-ones slack");
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 10);
            std::vector<double> x(static_cast<std::size_t>(n));
            for (double& v : x) v = 0.1 + 5.0 * uniform();
            const double slack = lemma_discrete_slack(x);
            if (slack < -1e-12 && c.ok) {
                std::string vec;
                for (double v : x) vec += (vec.empty() ? "" : ", ") + std::to_string(v);
                c.require(false, "slack " + std::to_string(slack) + " at (" + vec +
                                     "); the bound admits counterexamples for n >= 3, "
                                     "e.g. (1.2, 1.2, 25/36)");
            }
            double spread = 0.0, log_mean = 0.0;
            for (double v : x) log_mean += std::log(v);
            log_mean /= n;
            for (double v : x) spread = std::max(spread, std::abs(std::log(v) - log_mean));
            if (spread > 0.1)
                c.require(slack > 1e-11, "equality away from the all-ones vector at trial " +
                                             std::to_string(trial));
            if (!c.ok) return;
        }
    });

    run_criterion(12, "exponential decay of relative entropies along the OU flow", [&](Criterion& c) {
        for (int i = 0; i < 50; ++i) {
            const AtomicMeasure mu = fuzz_measure(i);
            for (const DecayRow& row : exp_decay_scan(mu, {0.1, 0.5, 1.0, 2.0})) {
                c.require(row.gamma_slack >= -1e-9,
                          "Gamma decay violated at measure " + std::to_string(i) +
                              " t = " + std::to_string(row.t));
                c.require(row.gamma_star_slack >= -1e-9,
                          "Gamma* decay violated at measure " + std::to_string(i));
                if (!c.ok) return;
            }
        }
    });

    if (failures == 0)
        std::printf("all 12 acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures;
}
