#include "boolprob/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "boolprob/errors.hpp"

namespace boolprob {

namespace {

constexpr int kJsonDigits = 17;
constexpr int kCsvDigits = 12;

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string optional_extended(const std::optional<ExtendedReal>& v, int digits) {
    return v ? format_extended(*v, digits, true) : "null";
}

const char* status_json(SlackStatus s) {
    switch (s) {
        case SlackStatus::Satisfied: return "true";
        case SlackStatus::Violated: return "false";
        default: return "\"indeterminate\"";
    }
}

const char* status_csv(SlackStatus s) {
    switch (s) {
        case SlackStatus::Satisfied: return "true";
        case SlackStatus::Violated: return "false";
        default: return "indeterminate";
    }
}

} // namespace

std::string format_double(double v, int significant_digits) {
    if (v == 0.0) v = 0.0; // drop the sign of negative zero
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, v);
    return buf;
}

std::string format_extended(const ExtendedReal& v, int significant_digits, bool json) {
    if (v.is_pos_inf()) return json ? "\"inf\"" : "inf";
    if (v.is_neg_inf()) return json ? "\"-inf\"" : "-inf";
    return format_double(v.value(), significant_digits);
}

AtomicMeasure parse_measure(const std::string& text, double merge_tol) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("atoms") || !doc["atoms"].is_array())
        throw InputError("measure document must be an object with an \"atoms\" array");

    std::vector<Atom> atoms;
    for (const auto& entry : doc["atoms"]) {
        if (!entry.is_object() || !entry.contains("x") || !entry.contains("w") ||
            !entry["x"].is_number() || !entry["w"].is_number())
            throw InputError("each atom must be an object {\"x\": number, \"w\": number}");
        atoms.push_back({entry["x"].get<double>(), entry["w"].get<double>()});
    }
    AtomicMeasure mu(std::move(atoms), merge_tol);
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw InputError("\"name\" must be a string");
        mu.set_name(doc["name"].get<std::string>());
    }
    return mu;
}

AtomicMeasure load_measure_file(const std::string& path, double merge_tol) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open measure file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_measure(buffer.str(), merge_tol);
}

std::string measure_to_json(const AtomicMeasure& mu) {
    std::string out = "{";
    if (!mu.name().empty()) out += "\"name\":\"" + json_escape(mu.name()) + "\",";
    out += "\"atoms\":[";
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (i) out += ",";
        out += "{\"x\":" + format_double(mu.atoms()[i].x, kJsonDigits) +
               ",\"w\":" + format_double(mu.atoms()[i].w, kJsonDigits) + "}";
    }
    out += "]}";
    return out;
}

std::string report_to_json(const FunctionalReport& rep) {
    const auto f = [](const ExtendedReal& v) { return format_extended(v, kJsonDigits, true); };
    std::string out = "{";
    out += "\"m2\":" + f(rep.m2);
    out += ",\"m4\":" + f(rep.m4);
    out += ",\"m_neg2\":" + f(rep.m_neg2);
    out += ",\"gamma\":" + f(rep.gamma);
    out += ",\"gamma_rel\":" + f(rep.gamma_rel);
    out += ",\"gamma_star\":" + f(rep.gamma_star);
    out += ",\"gamma_star_rel\":" + f(rep.gamma_star_rel);
    out += ",\"psi\":" + optional_extended(rep.psi, kJsonDigits);
    out += ",\"psi_rel\":" + optional_extended(rep.psi_rel, kJsonDigits);
    out += ",\"psi_star\":" + f(rep.psi_star);
    out += ",\"psi_star_rel\":" + f(rep.psi_star_rel);
    out += ",\"d_star\":" + f(rep.d_star);
    out += ",\"w2_to_b_sym\":" + f(rep.w2_to_b_sym);
    out += "}";
    return out;
}

std::string slacks_to_json(const std::vector<InequalitySlack>& slacks) {
    std::string out = "[";
    for (std::size_t i = 0; i < slacks.size(); ++i) {
        const InequalitySlack& s = slacks[i];
        if (i) out += ",";
        out += "{\"name\":\"" + json_escape(s.name) + "\"";
        out += ",\"lhs\":" + format_extended(s.lhs, kJsonDigits, true);
        out += ",\"rhs\":" + format_extended(s.rhs, kJsonDigits, true);
        out += ",\"slack\":" + format_extended(s.slack, kJsonDigits, true);
        out += std::string(",\"satisfied\":") + status_json(s.status) + "}";
    }
    out += "]";
    return out;
}

std::string slacks_to_csv(const std::vector<InequalitySlack>& slacks) {
    std::string out = "name,lhs,rhs,slack,satisfied\n";
    for (const InequalitySlack& s : slacks) {
        out += s.name + "," + format_extended(s.lhs, kCsvDigits, false) + "," +
               format_extended(s.rhs, kCsvDigits, false) + "," +
               format_extended(s.slack, kCsvDigits, false) + "," + status_csv(s.status) + "\n";
    }
    return out;
}

namespace {

std::string clt_row_fields(const CltRow& row, int digits, bool json) {
    const auto f = [&](const ExtendedReal& v) { return format_extended(v, digits, json); };
    const auto d = [&](double v) { return format_double(v, digits); };
    std::ostringstream out;
    if (json) {
        out << "{\"n\":" << row.n << ",\"failed\":" << (row.failed ? "true" : "false");
        if (row.failed) {
            out << ",\"failure\":\"" << json_escape(row.failure) << "\"}";
            return out.str();
        }
        out << ",\"gamma\":" << f(row.report.gamma) << ",\"gamma_rel\":" << f(row.report.gamma_rel)
            << ",\"psi\":" << optional_extended(row.report.psi, digits)
            << ",\"psi_rel\":" << optional_extended(row.report.psi_rel, digits)
            << ",\"gamma_star\":" << f(row.report.gamma_star)
            << ",\"psi_star\":" << f(row.report.psi_star)
            << ",\"d_star\":" << f(row.report.d_star) << ",\"w1\":" << d(row.w1)
            << ",\"w2\":" << d(row.w2)
            << ",\"d_star_identity_residual\":" << d(row.d_star_identity_residual)
            << ",\"w1_bound_slack\":" << d(row.w1_bound_slack)
            << ",\"w2_bound_slack\":" << d(row.w2_bound_slack) << "}";
        return out.str();
    }
    out << row.n << ",";
    if (row.failed) {
        out << ",,,,,,,,,,,true";
        return out.str();
    }
    const auto opt = [&](const std::optional<ExtendedReal>& v) {
        return v ? format_extended(*v, digits, false) : std::string();
    };
    out << f(row.report.gamma) << "," << f(row.report.gamma_rel) << "," << opt(row.report.psi)
        << "," << opt(row.report.psi_rel) << "," << f(row.report.gamma_star) << ","
        << f(row.report.psi_star) << "," << f(row.report.d_star) << "," << d(row.w1) << ","
        << d(row.w2) << "," << d(row.d_star_identity_residual) << "," << d(row.w1_bound_slack)
        << "," << d(row.w2_bound_slack) << ",false";
    return out.str();
}

} // namespace

std::string clt_rows_to_json(const std::vector<CltRow>& rows) {
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ",";
        out += clt_row_fields(rows[i], kJsonDigits, true);
    }
    out += "]";
    return out;
}

std::string clt_rows_to_csv(const std::vector<CltRow>& rows) {
    std::string out =
        "n,gamma,gamma_rel,psi,psi_rel,gamma_star,psi_star,d_star,w1,w2,"
        "d_star_identity_residual,w1_bound_slack,w2_bound_slack,failed\n";
    for (const CltRow& row : rows) out += clt_row_fields(row, kCsvDigits, false) + "\n";
    return out;
}

std::string rate_rows_to_json(const std::vector<RateRow>& rows) {
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const RateRow& r = rows[i];
        if (i) out += ",";
        const auto d = [](double v) { return format_double(v, kJsonDigits); };
        out += "{\"n\":" + std::to_string(r.n) + ",\"gamma_rel\":" + d(r.gamma_rel) +
               ",\"psi_rel\":" + d(r.psi_rel) + ",\"entropic_hsi_slack\":" +
               d(r.entropic_hsi_slack) + ",\"fisher_rate_slack\":" + d(r.fisher_rate_slack) +
               ",\"psi_star_residual\":" + d(r.psi_star_residual) +
               ",\"gamma_star_residual\":" + d(r.gamma_star_residual) + "}";
    }
    out += "]";
    return out;
}

std::string rate_rows_to_csv(const std::vector<RateRow>& rows) {
    std::string out =
        "n,gamma_rel,psi_rel,entropic_hsi_slack,fisher_rate_slack,psi_star_residual,"
        "gamma_star_residual\n";
    for (const RateRow& r : rows) {
        const auto d = [](double v) { return format_double(v, kCsvDigits); };
        out += std::to_string(r.n) + "," + d(r.gamma_rel) + "," + d(r.psi_rel) + "," +
               d(r.entropic_hsi_slack) + "," + d(r.fisher_rate_slack) + "," +
               d(r.psi_star_residual) + "," + d(r.gamma_star_residual) + "\n";
    }
    return out;
}

std::string decay_rows_to_json(const std::vector<DecayRow>& rows) {
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const DecayRow& r = rows[i];
        if (i) out += ",";
        const auto slack = [](double v, bool inf) {
            return inf ? std::string("\"inf\"") : format_double(v, kJsonDigits);
        };
        out += "{\"t\":" + format_double(r.t, kJsonDigits) +
               ",\"gamma_slack\":" + slack(r.gamma_slack, r.gamma_slack_infinite) +
               ",\"gamma_star_slack\":" + slack(r.gamma_star_slack, r.gamma_star_slack_infinite) +
               "}";
    }
    out += "]";
    return out;
}

std::string decay_rows_to_csv(const std::vector<DecayRow>& rows) {
    std::string out = "t,gamma_slack,gamma_star_slack\n";
    for (const DecayRow& r : rows) {
        const auto slack = [](double v, bool inf) {
            return inf ? std::string("inf") : format_double(v, kCsvDigits);
        };
        out += format_double(r.t, kCsvDigits) + "," + slack(r.gamma_slack, r.gamma_slack_infinite) +
               "," + slack(r.gamma_star_slack, r.gamma_star_slack_infinite) + "\n";
    }
    return out;
}

} // namespace boolprob
