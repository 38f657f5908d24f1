#include "burgess/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "burgess/coeffs.hpp"
#include "burgess/errors.hpp"
#include "burgess/expsums.hpp"
#include "burgess/lscan.hpp"
#include "burgess/reductions.hpp"

namespace burgess {

namespace {

u64 parse_seed(const std::string& text) {
    try {
        std::size_t used = 0;
        const u64 v = std::stoull(text, &used, 0);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError("--seed: expected an unsigned 64-bit integer, got '" + text + "'");
    }
}

std::vector<i64> parse_list(const std::string& text, const std::string& flag) {
    std::vector<i64> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(flag + ": expected comma-separated integers, got '" + text + "'");
        }
    }
    return out;
}

QuadPoly parse_quadratic(const std::string& text, const std::string& flag) {
    const auto v = parse_list(text, flag);
    if (v.empty() || v.size() > 3) throw UsageError(flag + ": expected up to three coefficients c0,c1,c2");
    QuadPoly q;
    q.c0 = v[0];
    if (v.size() > 1) q.c1 = v[1];
    if (v.size() > 2) q.c2 = v[2];
    return q;
}

// "quadratic", "all" or an index.
std::vector<i64> character_indices(const std::string& spec, i64 q, bool allow_all) {
    if (spec == "quadratic") return {(q - 1) / 2};
    if (spec == "all") {
        if (!allow_all) throw UsageError("--chi: 'all' is not accepted here");
        std::vector<i64> v;
        for (i64 k = 1; k <= q - 2; ++k) v.push_back(k);
        return v;
    }
    const auto v = parse_list(spec, "--chi");
    if (v.size() != 1) throw UsageError("--chi: expected quadratic, all or one index");
    if (v[0] < 0 || v[0] > q - 2) throw UsageError("--chi: index must lie in [0, q-2]");
    return v;
}

void require_odd_prime(i64 q, const std::string& flag) {
    if (q < 3 || !is_prime(q)) throw UsageError(flag + ": " + std::to_string(q) + " is not an odd prime");
}

std::string upper_tag(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    return s;
}

std::optional<std::filesystem::path> tau_cache_path() {
    if (const char* env = std::getenv("BURGESS_TAU_CACHE"); env && *env) return std::filesystem::path(env);
    return std::nullopt;
}

int run_gauss(const RunConfig& cfg, std::ostream& out) {
    require_odd_prime(cfg.q, "--q");
    const auto group = MultiplicativeGroupTable::build(cfg.q);
    std::vector<Json> rows;
    for (i64 k : character_indices(cfg.chi, cfg.q, true)) {
        const DirichletCharacter chi(group, k);
        const auto g = gauss_sum(chi);
        rows.push_back({{"q", cfg.q},
                        {"chi", k},
                        {"g", complex_json(g.value)},
                        {"abs", g.magnitude()},
                        {"deviation", std::abs(g.magnitude() - std::sqrt(static_cast<double>(cfg.q)))}});
    }
    write_records(out, rows, cfg.format);
    return 0;
}

int run_kloosterman(const RunConfig& cfg, std::ostream& out) {
    if (cfg.c < 1) throw UsageError("--c: modulus must be >= 1");
    KloostermanQuery query{cfg.a, cfg.b, cfg.c, std::nullopt};
    Json row = {{"a", cfg.a}, {"b", cfg.b}, {"c", cfg.c}};
    if (cfg.psi_mod) {
        require_odd_prime(*cfg.psi_mod, "--psi-mod");
        if (cfg.psi < 0 || cfg.psi > *cfg.psi_mod - 2) throw UsageError("--psi: index must lie in [0, p-2]");
        query.twist = build_character(*cfg.psi_mod, cfg.psi);
        row["psi_mod"] = *cfg.psi_mod;
        row["psi"] = cfg.psi;
    }
    const cplx s = kloosterman(query);
    row["S"] = complex_json(s);
    row["abs"] = std::abs(s);
    row["weil_bound"] = 2.0 * std::sqrt(static_cast<double>(cfg.c));
    write_records(out, {row}, cfg.format);
    return 0;
}

int run_charsum(const RunConfig& cfg, std::ostream& out) {
    require_odd_prime(cfg.M, "--M");
    const std::string chi_spec = cfg.chi == "all" ? "quadratic" : cfg.chi;
    const auto indices = character_indices(chi_spec, cfg.M, false);
    const QuadPoly q1 = parse_quadratic(cfg.q1, "--q1");
    const QuadPoly q2 = parse_quadratic(cfg.q2, "--q2");
    const RationalCharSumSpec spec(build_character(cfg.M, indices[0]), q1, q2, cfg.exclude);
    const cplx s = rational_char_sum(spec);
    write_records(out,
                  {{{"M", cfg.M},
                    {"chi", indices[0]},
                    {"Q1", {q1.c0, q1.c1, q1.c2}},
                    {"Q2", {q2.c0, q2.c1, q2.c2}},
                    {"excluded", spec.excluded()},
                    {"sum", complex_json(s)},
                    {"abs", std::abs(s)},
                    {"ratio", std::abs(s) / std::sqrt(static_cast<double>(cfg.M))},
                    {"degenerate", spec.degenerate()}}},
                  cfg.format);
    return 0;
}

int run_tau(const RunConfig& cfg, std::ostream& out) {
    if (cfg.n_max < 1 || cfg.n_max > 1'000'000) throw UsageError("--n-max: must lie in [1, 10^6]");
    IntWidth width = IntWidth::Auto;
    if (cfg.width == "128") {
        width = IntWidth::Int128;
    } else if (cfg.width == "256") {
        width = IntWidth::Int256;
    } else if (cfg.width != "auto") {
        throw UsageError("--width: expected auto, 128 or 256");
    }
    const TauTable table = width == IntWidth::Auto ? load_or_compute_tau(cfg.n_max, tau_cache_path())
                                                   : compute_tau(cfg.n_max, width);
    std::vector<Json> rows;
    for (i64 n = 1; n <= cfg.n_max; ++n) {
        rows.push_back({{"n", n}, {"tau", int128_to_string(table[n])}, {"normalized", table.normalized(n)}});
    }
    write_records(out, rows, cfg.format);
    return 0;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
    if (cfg.tuples < 1) throw UsageError("--tuples: must be >= 1");
    std::vector<VerificationReport> reports;
    if (cfg.suite == "all") {
        reports = run_all_suites(cfg.tuples, cfg.seed, cfg.threads);
    } else {
        IdentityTag tag;
        try {
            tag = parse_identity_tag(upper_tag(cfg.suite));
        } catch (const UsageError&) {
            throw UsageError("--suite: unknown suite '" + cfg.suite + "'");
        }
        reports = run_suite(tag, cfg.tuples, cfg.seed, cfg.threads);
    }
    std::vector<Json> rows;
    bool ok = true;
    for (const auto& r : reports) {
        rows.push_back(to_json(r));
        ok = ok && r.pass;
    }
    write_records(out, rows, cfg.format);
    return ok ? 0 : 1;
}

int run_scan_weil(const RunConfig& cfg, std::ostream& out) {
    if (cfg.trials < 1) throw UsageError("--trials: must be >= 1");
    std::vector<i64> Ms;
    for (i64 M = std::max<i64>(cfg.M_min, 3); M <= cfg.M_max; ++M) {
        if (is_prime(M)) Ms.push_back(M);
    }
    if (Ms.empty()) {
        throw UsageError("--M-max: no primes in [" + std::to_string(cfg.M_min) + ", " + std::to_string(cfg.M_max) +
                         "]");
    }
    const auto summaries = weil_scan(Ms, cfg.trials, cfg.seed, cfg.threads);
    std::vector<Json> rows;
    bool ok = true;
    for (const auto& s : summaries) {
        rows.push_back(to_json(s));
        ok = ok && s.ratio_max <= 4.0;
    }
    write_records(out, rows, cfg.format);
    return ok ? 0 : 1;
}

int run_scan_burgess(const RunConfig& cfg, std::ostream& out) {
    if (cfg.primes < 1) throw UsageError("--primes: must be >= 1");
    if (cfg.M_lo < 3 || cfg.M_hi < cfg.M_lo) throw UsageError("--M-lo/--M-hi: need 3 <= lo <= hi");
    if (cfg.chars < 1) throw UsageError("--chars: must be >= 1");
    if (cfg.per_octave < 1) throw UsageError("--per-octave: must be >= 1");
    BurgessScanOptions opts;
    opts.chars_per_M = cfg.chars;
    opts.kind = parse_coefficient_kind(cfg.coeff);
    opts.seed = cfg.seed;
    opts.threads = cfg.threads;
    opts.per_octave = cfg.per_octave;
    const auto primes = log_spaced_primes(std::max<i64>(cfg.M_lo, 3), cfg.M_hi, cfg.primes);
    if (primes.empty()) throw UsageError("--M-lo/--M-hi: no primes in range");
    std::optional<TauTable> tau;
    if (opts.kind == CoefficientKind::TauNormalized) {
        const i64 size = static_cast<i64>(std::ceil(2.0 * dyadic_grid(primes.back(), cfg.per_octave).back() + 2.0));
        tau = load_or_compute_tau(size, tau_cache_path());
    }
    const auto rep = burgess_scan(primes, opts, tau);
    write_burgess_report(out, rep, cfg.format);
    return rep.L_gate() && rep.S_gate() ? 0 : 1;
}

int run_lvalue(const RunConfig& cfg, std::ostream& out) {
    require_odd_prime(cfg.M, "--M");
    if (cfg.method != "hurwitz" && cfg.method != "smoothed" && cfg.method != "both") {
        throw UsageError("--method: expected hurwitz, smoothed or both");
    }
    const auto group = MultiplicativeGroupTable::build(cfg.M);
    const auto table = hurwitz_half_table(cfg.M);
    std::vector<Json> rows;
    bool ok = true;
    for (i64 k : character_indices(cfg.chi, cfg.M, true)) {
        const DirichletCharacter chi(group, k);
        std::optional<CentralValueRecord> h, s;
        if (cfg.method != "smoothed") {
            h = CentralValueRecord{cfg.M, k, central_value_from_table(chi, table), CentralValueMethod::HurwitzOracle};
            rows.push_back(to_json(*h));
        }
        if (cfg.method != "hurwitz") {
            s = central_value_smoothed(chi, cfg.delta);
            rows.push_back(to_json(*s));
        }
        if (h && s) ok = ok && std::abs(h->value - s->value) <= 1e-6;
    }
    write_records(out, rows, cfg.format);
    return ok ? 0 : 1;
}

int run_offdiag_tail(const RunConfig& cfg, std::ostream& out) {
    if (cfg.M < 1 || cfg.L < 1 || cfg.c_max < 1) throw UsageError("--M/--L/--c-max: must be positive");
    if (!(cfg.p_scale > 0)) throw UsageError("--p-scale: must be positive");
    const i64 N = cfg.N.value_or(cfg.M);
    if (N < 1) throw UsageError("--N: must be positive");
    const double p_base = cfg.p.value_or(2.0 * std::ceil(static_cast<double>(cfg.L) * N / cfg.M));
    const double p = p_base * cfg.p_scale;
    if (cfg.k < 3 || cfg.k % 4 != 3) throw UsageError("--k: must satisfy k >= 3 and k = 3 mod 4");
    const auto rep = offdiag_tail_report(p, cfg.M, cfg.L, N, cfg.c_max, cfg.k);
    Json row = {{"p", p}, {"M", cfg.M}, {"L", cfg.L}, {"N", N}, {"c_max", cfg.c_max}, {"k", cfg.k}};
    const Json tail = to_json(rep);
    for (const auto& [key, v] : tail.items()) row[key] = v;
    row["negligible"] = rep.bound < 1e-12;
    write_records(out, {row}, cfg.format);
    return 0;
}

}  // namespace

RunConfig parse_command_line(int argc, const char* const* argv) {
    RunConfig cfg;
    CLI::App app{"Character sums, Kloosterman sums and central L-value experiments", "burgess"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string seed_text, format_text = "json", out_path;
    app.add_option("--seed", seed_text, "RNG seed (decimal or 0x-hex)");
    app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--format", format_text, "json | csv | tsv");
    app.add_option("--out", out_path, "Output file (default stdout)");

    auto* gauss = app.add_subcommand("gauss", "Gauss sums of characters mod a prime");
    gauss->add_option("--q", cfg.q, "Prime modulus")->required();
    gauss->add_option("--chi", cfg.chi, "Character: index, quadratic or all");

    auto* kl = app.add_subcommand("kloosterman", "Kloosterman sum S(a, b; c)");
    kl->add_option("--a", cfg.a)->required();
    kl->add_option("--b", cfg.b)->required();
    kl->add_option("--c", cfg.c)->required();
    i64 psi_mod = 0;
    auto* psi_opt = kl->add_option("--psi-mod", psi_mod, "Prime modulus of the twisting character");
    kl->add_option("--psi", cfg.psi, "Index of the twisting character");

    auto* cs = app.add_subcommand("charsum", "Complete sum of chi(Q1(x)/Q2(x)) over F_M");
    cs->add_option("--M", cfg.M)->required();
    cs->add_option("--chi", cfg.chi, "Character: index or quadratic");
    cs->add_option("--q1", cfg.q1, "Numerator coefficients c0,c1,c2");
    cs->add_option("--q2", cfg.q2, "Denominator coefficients c0,c1,c2");
    std::string exclude_text;
    cs->add_option("--exclude", exclude_text, "Extra excluded points x1,x2,...");

    auto* tau = app.add_subcommand("tau", "Ramanujan tau(n)");
    tau->add_option("--n-max", cfg.n_max);
    tau->add_option("--width", cfg.width, "auto | 128 | 256");

    auto* verify = app.add_subcommand("verify", "Run the identity verification suites");
    verify->add_option("--tuples", cfg.tuples, "Random tuples per suite");
    verify->add_option("--suite", cfg.suite, "all or one suite name");

    auto* sw = app.add_subcommand("scan-weil", "Empirical Weil-bound scan of rational character sums");
    sw->add_option("--M-min", cfg.M_min);
    sw->add_option("--M-max", cfg.M_max);
    sw->add_option("--trials", cfg.trials);

    auto* sb = app.add_subcommand("scan-burgess", "Exponent scan of S(N) and L(1/2, chi)");
    sb->add_option("--primes", cfg.primes, "Number of log-spaced primes");
    sb->add_option("--M-lo", cfg.M_lo);
    sb->add_option("--M-hi", cfg.M_hi);
    sb->add_option("--chars", cfg.chars, "Characters per prime");
    sb->add_option("--coeff", cfg.coeff, "divisor | tau");
    sb->add_option("--per-octave", cfg.per_octave, "Dyadic grid points per doubling of N");

    auto* lv = app.add_subcommand("lvalue", "Central value L(1/2, chi)");
    lv->add_option("--M", cfg.M)->required();
    lv->add_option("--chi", cfg.chi, "Character: index, quadratic or all")->default_str("quadratic");
    lv->add_option("--method", cfg.method, "hurwitz | smoothed | both");
    lv->add_option("--delta", cfg.delta, "Smoothing length exponent");

    auto* od = app.add_subcommand("offdiag-tail", "Bessel-tail bound of the off-diagonal");
    i64 N = 0;
    double p = 0;
    od->add_option("--M", cfg.M)->default_val(10007);
    od->add_option("--L", cfg.L);
    auto* N_opt = od->add_option("--N", N);
    auto* p_opt = od->add_option("--p", p);
    od->add_option("--p-scale", cfg.p_scale);
    od->add_option("--c-max", cfg.c_max);
    od->add_option("--k", cfg.k);

    bool lvalue_chi_given = false;
    try {
        app.parse(argc, argv);
        lvalue_chi_given = lv->count("--chi") > 0;
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (!seed_text.empty()) cfg.seed = parse_seed(seed_text);
    cfg.format = parse_output_format(format_text);
    if (!out_path.empty()) cfg.out = out_path;
    if (psi_opt->count() > 0) cfg.psi_mod = psi_mod;
    if (N_opt->count() > 0) cfg.N = N;
    if (p_opt->count() > 0) {
        if (!(p > 0)) throw UsageError("--p: must be positive");
        cfg.p = p;
    }
    if (!exclude_text.empty()) cfg.exclude = parse_list(exclude_text, "--exclude");
    if (cfg.subcommand == "lvalue" && !lvalue_chi_given) cfg.chi = "quadratic";
    return cfg;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
    if (cfg.threads < 1) throw UsageError("--threads: must be >= 1");
    const std::string& s = cfg.subcommand;
    if (s == "gauss") return run_gauss(cfg, out);
    if (s == "kloosterman") return run_kloosterman(cfg, out);
    if (s == "charsum") return run_charsum(cfg, out);
    if (s == "tau") return run_tau(cfg, out);
    if (s == "verify") return run_verify(cfg, out);
    if (s == "scan-weil") return run_scan_weil(cfg, out);
    if (s == "scan-burgess") return run_scan_burgess(cfg, out);
    if (s == "lvalue") return run_lvalue(cfg, out);
    if (s == "offdiag-tail") return run_offdiag_tail(cfg, out);
    throw UsageError("unknown subcommand '" + s + "'");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    try {
        cfg = parse_command_line(argc, argv);
    } catch (const HelpRequested& h) {
        out << h.text;
        return 0;
    } catch (const Error& e) {
        err << "burgess: " << e.what() << '\n';
        return 2;
    }

    std::ostringstream buffer;
    int status = 0;
    try {
        status = dispatch(cfg, buffer);
    } catch (const Error& e) {
        err << "burgess: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "burgess: " << e.what() << '\n';
        return 2;
    }

    if (cfg.out) {
        std::ofstream file(*cfg.out, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "burgess: --out: cannot open '" << *cfg.out << "'\n";
            return 2;
        }
        file << buffer.str();
    } else {
        out << buffer.str();
    }
    return status;
}

}  // namespace burgess
