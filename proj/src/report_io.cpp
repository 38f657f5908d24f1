#include "burgess/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "burgess/errors.hpp"

namespace burgess {

OutputFormat parse_output_format(std::string_view name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "tsv") return OutputFormat::Tsv;
    throw UsageError("--format: expected json, csv or tsv, got '" + std::string(name) + "'");
}

std::string_view to_string(OutputFormat format) {
    switch (format) {
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Tsv: return "tsv";
    }
    return "json";
}

Json complex_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json params_json(const IdentityCase& k) {
    Json j = Json::object();
    switch (k.tag) {
        case IdentityTag::Factorization:
        case IdentityTag::PsiEval:
            j = {{"p", k.p}, {"M", k.M}, {"c", k.c}, {"m", k.m}, {"n", k.n}, {"l", k.l}, {"r", k.r}, {"chi", k.chi}};
            break;
        case IdentityTag::CpEval:
            j = {{"p", k.p}, {"M", k.M}, {"c", k.c}, {"m", k.m}, {"n", k.n}, {"l", k.l}, {"r", k.r}, {"sign", k.sign}};
            break;
        case IdentityTag::Reciprocity:
            j = {{"c", k.c}, {"r", k.r}, {"M", k.M}, {"n", k.n}, {"l", k.l}};
            break;
        case IdentityTag::CGaussTwist:
            j = {{"M", k.M}, {"c", k.c}, {"n", k.n}, {"l", k.l}, {"r", k.r}, {"chi", k.chi}};
            break;
        case IdentityTag::CdaggerBsum:
        case IdentityTag::DiagonalDegen:
            j = {{"M", k.M},   {"l1", k.l1}, {"l2", k.l2}, {"c1", k.c1},   {"c2", k.c2},
                 {"r1", k.r1}, {"r2", k.r2}, {"n", k.n},   {"chi", k.chi}, {"F", k.F()}};
            break;
    }
    return j;
}

Json to_json(const VerificationReport& rep) {
    return {{"tag", std::string(to_string(rep.tag))},
            {"params", params_json(rep.params)},
            {"lhs", complex_json(rep.lhs)},
            {"rhs", complex_json(rep.rhs)},
            {"abs_err", rep.abs_err},
            {"rel_err", rep.rel_err},
            {"pass", rep.pass}};
}

Json to_json(const CentralValueRecord& rec) {
    return {{"M", rec.M},
            {"chi", rec.chi},
            {"L", complex_json(rec.value)},
            {"abs", std::abs(rec.value)},
            {"method", std::string(to_string(rec.method))}};
}

Json to_json(const WeilScanSummary& s) {
    return {{"M", s.M},
            {"trials", s.records.size()},
            {"ratio_max", s.ratio_max},
            {"ratio_median", s.ratio_median},
            {"degenerate_count", s.degenerate_count},
            {"pass", s.ratio_max <= 4.0}};
}

Json to_json(const OffdiagTailReport& rep) {
    return {{"x1", rep.x1}, {"head", rep.head}, {"tail", rep.tail}, {"bound", rep.bound}};
}

Json to_json(const LinearFit& fit) {
    Json j;
    j["slope"] = fit.slope ? Json(*fit.slope) : Json(nullptr);
    j["intercept"] = fit.intercept;
    j["residual_rms"] = fit.residual_rms;
    j["points"] = fit.points;
    return j;
}

namespace {

Json distance(const LinearFit& fit, double target) {
    return fit.slope ? Json(*fit.slope - target) : Json(nullptr);
}

}  // namespace

Json to_json(const BurgessScanReport& rep) {
    Json primes = Json::array();
    for (const auto& ps : rep.primes) {
        Json chars = Json::array();
        for (const auto& cs : ps.characters) {
            Json points = Json::array();
            for (const auto& pt : cs.points) points.push_back({{"N", pt.N}, {"value", pt.value}});
            chars.push_back(
                {{"chi", cs.chi}, {"B", cs.B}, {"argmax_N", cs.argmax_N}, {"abs_L", cs.abs_L}, {"grid", points}});
        }
        primes.push_back({{"M", ps.M},
                          {"B_max", ps.B_max},
                          {"Lambda", ps.Lambda},
                          {"Lambda_characters", ps.Lambda_characters},
                          {"characters", chars}});
    }
    return {{"kind", std::string(to_string(rep.kind))},
            {"seed", rep.seed},
            {"chars_per_M", rep.chars_per_M},
            {"per_octave", rep.per_octave},
            {"primes", primes},
            {"S_fit", to_json(rep.S_fit)},
            {"L_fit", to_json(rep.L_fit)},
            {"reference", {{"burgess_S", BurgessScanReport::kBurgessS},
                           {"burgess_L", BurgessScanReport::kBurgessL},
                           {"convexity_L", BurgessScanReport::kConvexityL},
                           {"convexity_S", BurgessScanReport::kConvexityS}}},
            {"S_distance_to_burgess", distance(rep.S_fit, BurgessScanReport::kBurgessS)},
            {"L_distance_to_burgess", distance(rep.L_fit, BurgessScanReport::kBurgessL)},
            {"S_gate", rep.S_gate()},
            {"L_gate", rep.L_gate()}};
}

namespace {

void flatten_into(const Json& value, const std::string& prefix, Json& out) {
    if (value.is_object()) {
        for (const auto& [key, v] : value.items()) flatten_into(v, prefix.empty() ? key : prefix + "." + key, out);
    } else if (value.is_array()) {
        for (std::size_t i = 0; i < value.size(); ++i) flatten_into(value[i], prefix + "." + std::to_string(i), out);
    } else {
        out[prefix] = value;
    }
}

std::string cell(const Json& v, char sep) {
    if (v.is_null()) return "";
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (sep == ',' && s.find_first_of(",\"\n") != std::string::npos) {
            std::string q = "\"";
            for (char ch : s) {
                if (ch == '"') q += '"';
                q += ch;
            }
            return q + "\"";
        }
        return s;
    }
    return v.dump();
}

}  // namespace

Json flatten(const Json& record) {
    Json out = Json::object();
    flatten_into(record, "", out);
    return out;
}

void write_records(std::ostream& out, const std::vector<Json>& records, OutputFormat format) {
    if (format == OutputFormat::Json) {
        for (const auto& r : records) out << r.dump() << '\n';
        return;
    }
    const char sep = format == OutputFormat::Csv ? ',' : '\t';
    std::vector<Json> flat;
    std::vector<std::string> columns;
    for (const auto& r : records) {
        flat.push_back(flatten(r));
        for (const auto& [key, v] : flat.back().items()) {
            if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
        }
    }
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? std::string(1, sep) : "") << columns[i];
    out << '\n';
    for (const auto& f : flat) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) out << sep;
            if (f.contains(columns[i])) out << cell(f[columns[i]], sep);
        }
        out << '\n';
    }
}

void write_burgess_report(std::ostream& out, const BurgessScanReport& rep, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json:
            out << to_json(rep).dump(2) << '\n';
            return;
        case OutputFormat::Csv: {
            std::vector<Json> rows;
            for (const auto& ps : rep.primes) {
                for (const auto& cs : ps.characters) {
                    for (const auto& pt : cs.points) {
                        rows.push_back({{"M", ps.M}, {"chi", cs.chi}, {"N", pt.N}, {"value", pt.value}});
                    }
                }
            }
            write_records(out, rows, OutputFormat::Csv);
            return;
        }
        case OutputFormat::Tsv: {
            const Json logs = [&] {
                Json j = Json::array();
                for (const auto& ps : rep.primes) {
                    j.push_back(Json::array({std::log(static_cast<double>(ps.M)), std::log(ps.B_max), std::log(ps.Lambda)}));
                }
                return j;
            }();
            out << "# log_M\tlog_B_max\n";
            for (const auto& row : logs) out << row[0].dump() << '\t' << row[1].dump() << '\n';
            out << "\n\n# log_M\tlog_Lambda\n";
            for (const auto& row : logs) out << row[0].dump() << '\t' << row[2].dump() << '\n';
            return;
        }
    }
}

}  // namespace burgess
