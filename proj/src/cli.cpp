#include "boolprob/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "boolprob/errors.hpp"
#include "boolprob/io.hpp"
#include "boolprob/parallel.hpp"
#include "boolprob/transform.hpp"

namespace boolprob {

namespace {

struct CliConfig {
    double tol = 1e-9;
    double quad_tol = 1e-8;
    double merge_tol = 1e-9;
    std::string format = "json";
    std::string output_path;
    int jobs = 1;
};

void write_result(const CliConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.output_path.empty()) {
        out << text;
        if (text.empty() || text.back() != '\n') out << "\n";
        return;
    }
    std::ofstream file(cfg.output_path);
    if (!file) throw InputError("cannot open output file: " + cfg.output_path);
    file << text;
    if (text.empty() || text.back() != '\n') file << "\n";
}

bool any_violated(const std::vector<InequalitySlack>& slacks) {
    for (const auto& s : slacks)
        if (s.status == SlackStatus::Violated) return true;
    return false;
}

std::string report_row_fields(double t, const FunctionalReport& rep, int digits, bool json);

std::string flow_output(const std::vector<std::pair<double, AtomicMeasure>>& steps,
                        const CliConfig& cfg) {
    if (cfg.format == "json") {
        std::string out = "[";
        for (std::size_t i = 0; i < steps.size(); ++i) {
            if (i) out += ",";
            out += "{\"t\":" + format_double(steps[i].first, 17) +
                   ",\"measure\":" + measure_to_json(steps[i].second) +
                   ",\"report\":" + report_to_json(relative_report(steps[i].second)) + "}";
        }
        return out + "]";
    }
    std::string out =
        "t,gamma,gamma_rel,psi,psi_rel,gamma_star,gamma_star_rel,psi_star,psi_star_rel,"
        "d_star,w2_to_b_sym\n";
    for (const auto& [t, m] : steps) out += report_row_fields(t, relative_report(m), 12, false) + "\n";
    return out;
}

std::string report_row_fields(double t, const FunctionalReport& rep, int digits, bool json) {
    const auto f = [&](const ExtendedReal& v) { return format_extended(v, digits, json); };
    const auto opt = [&](const std::optional<ExtendedReal>& v) {
        return v ? format_extended(*v, digits, json) : std::string(json ? "null" : "");
    };
    std::string out = format_double(t, digits);
    out += "," + f(rep.gamma) + "," + f(rep.gamma_rel) + "," + opt(rep.psi) + "," +
           opt(rep.psi_rel) + "," + f(rep.gamma_star) + "," + f(rep.gamma_star_rel) + "," +
           f(rep.psi_star) + "," + f(rep.psi_star_rel) + "," + f(rep.d_star) + "," +
           f(rep.w2_to_b_sym);
    return out;
}

std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw InputError("invalid --n-list entry: " + item);
        }
    }
    if (out.empty()) throw InputError("--n-list must not be empty");
    return out;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Boolean probability calculus: convolution, entropy and Fisher functionals, "
                 "inequality certification and CLT experiments for atomic laws"};
    app.require_subcommand(1);

    CliConfig cfg;
    app.add_option("--tol", cfg.tol, "slack tolerance")->check(CLI::PositiveNumber);
    app.add_option("--quad-tol", cfg.quad_tol, "quadrature tolerance")->check(CLI::PositiveNumber);
    app.add_option("--merge-tol", cfg.merge_tol, "atom merge tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", cfg.output_path, "write results to a file instead of stdout");
    app.fallthrough();

    std::string measure_path, other_path, kind, n_list_text;
    int n = 1, n_max = 10, grid = 0, count = 100, pairs = 3;
    double t = 1.0, theta = 0.5, radius_min = 0.1, radius_max = 3.0;
    std::uint64_t seed = 1;

    CLI::App* info = app.add_subcommand("info", "all functionals of a measure");
    info->add_option("measure", measure_path)->required();

    CLI::App* convolve = app.add_subcommand("convolve", "Boolean convolution of two measures");
    convolve->add_option("a", measure_path)->required();
    convolve->add_option("b", other_path)->required();

    CLI::App* power = app.add_subcommand("power", "n-fold Boolean convolution power");
    power->add_option("measure", measure_path)->required();
    power->add_option("--n", n, "power index")->required()->check(CLI::PositiveNumber);

    CLI::App* clt = app.add_subcommand("clt", "CLT table with Berry-Esseen slacks");
    clt->add_option("measure", measure_path)->required();
    clt->add_option("--n-max", n_max)->required()->check(CLI::PositiveNumber);
    clt->add_option("--jobs", cfg.jobs)->check(CLI::PositiveNumber);

    CLI::App* flow = app.add_subcommand("flow", "heat or Ornstein-Uhlenbeck flow");
    flow->add_option("measure", measure_path)->required();
    flow->add_option("--kind", kind)->required()->check(CLI::IsMember({"heat", "ou"}));
    flow->add_option("--t", t)->required()->check(CLI::NonNegativeNumber);
    flow->add_option("--grid", grid, "emit this many equal steps up to t")
        ->check(CLI::PositiveNumber);

    CLI::App* certify = app.add_subcommand("certify", "certify the functional inequalities");
    certify->add_option("measure", measure_path)->required();
    certify->add_option("--pair", other_path, "second measure for the two-variable inequalities");
    certify->add_option("--theta", theta)->check(CLI::Range(0.0, 1.0));

    CLI::App* debruijn = app.add_subcommand("debruijn", "de Bruijn identity residuals");
    debruijn->add_option("measure", measure_path)->required();
    debruijn->add_option("--t", t)->required()->check(CLI::PositiveNumber);

    CLI::App* rates = app.add_subcommand("rates", "entropic and Fisher CLT rates");
    rates->add_option("measure", measure_path)->required();
    rates->add_option("--n-list", n_list_text)->required();

    CLI::App* fuzz = app.add_subcommand("fuzz", "randomized certification, the CI gate");
    fuzz->add_option("--seed", seed);
    fuzz->add_option("--count", count)->check(CLI::PositiveNumber);
    fuzz->add_option("--pairs", pairs)->check(CLI::Range(1, 6));
    fuzz->add_option("--jobs", cfg.jobs)->check(CLI::PositiveNumber);
    fuzz->add_option("--radius-min", radius_min)->check(CLI::PositiveNumber);
    fuzz->add_option("--radius-max", radius_max)->check(CLI::PositiveNumber);

    std::vector<const char*> argv;
    argv.push_back("boolprob");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        const auto load = [&](const std::string& path) {
            return load_measure_file(path, cfg.merge_tol);
        };

        if (info->parsed()) {
            const AtomicMeasure mu = load(measure_path);
            const FunctionalReport rep = relative_report(mu);
            if (cfg.format == "json") {
                write_result(cfg, out, report_to_json(rep));
            } else {
                const auto f = [&](const ExtendedReal& v) { return format_extended(v, 12, false); };
                const auto opt = [&](const std::optional<ExtendedReal>& v) {
                    return v ? format_extended(*v, 12, false) : std::string();
                };
                write_result(cfg, out,
                             "m2,m4,m_neg2,gamma,gamma_rel,gamma_star,gamma_star_rel,psi,psi_rel,"
                             "psi_star,psi_star_rel,d_star,w2_to_b_sym\n" +
                                 f(rep.m2) + "," + f(rep.m4) + "," + f(rep.m_neg2) + "," +
                                 f(rep.gamma) + "," + f(rep.gamma_rel) + "," + f(rep.gamma_star) +
                                 "," + f(rep.gamma_star_rel) + "," + opt(rep.psi) + "," +
                                 opt(rep.psi_rel) + "," + f(rep.psi_star) + "," +
                                 f(rep.psi_star_rel) + "," + f(rep.d_star) + "," +
                                 f(rep.w2_to_b_sym) + "\n");
            }
            return 0;
        }
        if (convolve->parsed()) {
            write_result(cfg, out,
                         measure_to_json(boolean_convolve(load(measure_path), load(other_path))));
            return 0;
        }
        if (power->parsed()) {
            write_result(cfg, out, measure_to_json(boolean_power(load(measure_path), n)));
            return 0;
        }
        if (clt->parsed()) {
            const std::vector<CltRow> rows = clt_table(load(measure_path), n_max, cfg.jobs);
            write_result(cfg, out, cfg.format == "json" ? clt_rows_to_json(rows)
                                                        : clt_rows_to_csv(rows));
            for (const CltRow& row : rows)
                if (row.failed) return 3;
            return 0;
        }
        if (flow->parsed()) {
            const AtomicMeasure mu = load(measure_path);
            const auto advance = [&](double s) {
                return kind == "heat" ? heat_flow(mu, s) : ou_flow(mu, s);
            };
            std::vector<std::pair<double, AtomicMeasure>> steps;
            if (grid <= 0) {
                steps.emplace_back(t, advance(t));
            } else {
                for (int i = 0; i <= grid; ++i) {
                    const double s = t * i / grid;
                    steps.emplace_back(s, advance(s));
                }
            }
            write_result(cfg, out, flow_output(steps, cfg));
            return 0;
        }
        if (certify->parsed()) {
            const AtomicMeasure mu = load(measure_path);
            const std::vector<InequalitySlack> slacks =
                other_path.empty() ? certify_single(mu, cfg.tol)
                                   : certify_pair(mu, load(other_path), theta, cfg.tol);
            write_result(cfg, out, cfg.format == "json" ? slacks_to_json(slacks)
                                                        : slacks_to_csv(slacks));
            return any_violated(slacks) ? 1 : 0;
        }
        if (debruijn->parsed()) {
            const DeBruijnResidual res = de_bruijn_residual(load(measure_path), t, cfg.quad_tol);
            if (cfg.format == "json")
                write_result(cfg, out,
                             "{\"t\":" + format_double(t, 17) +
                                 ",\"micro_residual\":" + format_double(res.micro, 17) +
                                 ",\"nm_residual\":" + format_double(res.nm, 17) + "}");
            else
                write_result(cfg, out,
                             "t,micro_residual,nm_residual\n" + format_double(t, 12) + "," +
                                 format_double(res.micro, 12) + "," + format_double(res.nm, 12) +
                                 "\n");
            return 0;
        }
        if (rates->parsed()) {
            const std::vector<RateRow> rows =
                entropic_rate_scan(load(measure_path), parse_n_list(n_list_text));
            write_result(cfg, out, cfg.format == "json" ? rate_rows_to_json(rows)
                                                        : rate_rows_to_csv(rows));
            return 0;
        }
        if (fuzz->parsed()) {
            if (radius_max < radius_min) throw InputError("--radius-max must be >= --radius-min");
            struct Finding {
                int index;
                std::string name;
                ExtendedReal slack;
            };
            std::vector<std::vector<Finding>> findings(static_cast<std::size_t>(count));
            std::vector<std::string> failures(static_cast<std::size_t>(count));
            parallel_for(cfg.jobs, count, [&](int i) {
                try {
                    const AtomicMeasure mu = random_symmetric_measure(
                        seed + static_cast<std::uint64_t>(i), pairs, radius_min, radius_max);
                    for (const InequalitySlack& s : certify_single(mu, cfg.tol))
                        if (s.status == SlackStatus::Violated)
                            findings[static_cast<std::size_t>(i)].push_back({i, s.name, s.slack});
                } catch (const Error& e) {
                    failures[static_cast<std::size_t>(i)] = e.what();
                }
            });
            std::string result = "{\"count\":" + std::to_string(count) + ",\"violations\":[";
            bool violated = false, first = true;
            for (const auto& per_measure : findings) {
                for (const Finding& f : per_measure) {
                    if (!first) result += ",";
                    first = false;
                    violated = true;
                    result += "{\"measure_index\":" + std::to_string(f.index) + ",\"name\":\"" +
                              f.name + "\",\"slack\":" + format_extended(f.slack, 17, true) + "}";
                }
            }
            result += "]";
            bool failed = false;
            result += ",\"failures\":[";
            first = true;
            for (std::size_t i = 0; i < failures.size(); ++i) {
                if (failures[i].empty()) continue;
                if (!first) result += ",";
                first = false;
                failed = true;
                result += "{\"measure_index\":" + std::to_string(i) + "}";
            }
            result += "]}";
            write_result(cfg, out, result);
            if (failed) return 3;
            return violated ? 1 : 0;
        }
        err << "no subcommand given\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.is_input_error() ? 2 : 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace boolprob
