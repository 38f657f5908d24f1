#include "burgess/lscan.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "burgess/errors.hpp"
#include "burgess/hurwitz.hpp"
#include "burgess/parallel.hpp"
#include "burgess/summation.hpp"

namespace burgess {

namespace {

void require_primitive(const DirichletCharacter& chi) {
    if (!chi.is_primitive()) {
        throw NotPrimitive("character " + std::to_string(chi.index()) + " mod " + std::to_string(chi.modulus()) +
                           " is principal");
    }
}

}  // namespace

cplx twisted_sum(const TwistedSumSpec& spec, const CoefficientStream& coeffs) {
    require_primitive(spec.chi);
    const i64 M = spec.chi.modulus();
    if (spec.N > 4.0 * std::pow(static_cast<double>(M), 1.1)) {
        throw std::invalid_argument("twisted_sum: N exceeds 4 M^1.1");
    }
    if (coeffs.kind() != spec.kind) throw std::invalid_argument("twisted_sum: coefficient kind mismatch");
    const double lo = spec.N * spec.window.support_lo();
    const double hi = spec.N * spec.window.support_hi();
    const i64 first = static_cast<i64>(std::floor(lo)) + 1;
    const i64 last = static_cast<i64>(std::ceil(hi)) - 1;
    if (last < first || last < 1) return {0.0, 0.0};
    if (coeffs.max_index() < last) {
        throw TableTooSmall("twisted_sum: coefficients end at " + std::to_string(coeffs.max_index()) +
                            ", need " + std::to_string(last));
    }
    const auto& roots = spec.chi.group().roots();
    ComplexSum acc;
    for (i64 n = std::max<i64>(first, 1); n <= last; ++n) {
        const auto t = spec.chi.angle(n);
        if (!t) continue;
        const double w = spec.window(static_cast<double>(n) / spec.N);
        if (w == 0.0) continue;
        acc += (coeffs(n) * w) * roots.at_reduced(*t);
    }
    return acc.value();
}

std::string_view to_string(CentralValueMethod method) {
    return method == CentralValueMethod::HurwitzOracle ? "hurwitz-oracle" : "smoothed-sum";
}

std::vector<cplx> hurwitz_half_table(i64 M) {
    std::vector<cplx> t(static_cast<std::size_t>(M), 0.0);
    const double Md = static_cast<double>(M);
    for (i64 a = 1; a < M; ++a) t[static_cast<std::size_t>(a)] = hurwitz_zeta(0.5, static_cast<double>(a) / Md);
    return t;
}

cplx central_value_from_table(const DirichletCharacter& chi, const std::vector<cplx>& table) {
    require_primitive(chi);
    const i64 M = chi.modulus();
    ComplexSum acc;
    for (i64 a = 1; a < M; ++a) acc += chi(a) * table[static_cast<std::size_t>(a)];
    return acc.value() / std::sqrt(static_cast<double>(M));
}

CentralValueRecord central_value_oracle(const DirichletCharacter& chi) {
    require_primitive(chi);
    return {chi.modulus(), chi.index(), central_value_from_table(chi, hurwitz_half_table(chi.modulus())),
            CentralValueMethod::HurwitzOracle};
}

CentralValueRecord central_value_smoothed(const DirichletCharacter& chi, double delta) {
    require_primitive(chi);
    const i64 M = chi.modulus();
    const double X = std::max(std::pow(static_cast<double>(M), 1.0 + delta), 1024.0);
    const SmoothWindow edge = SmoothWindow::plateau();
    const i64 n_max = static_cast<i64>(std::ceil(3.0 * X));
    std::vector<CompensatedSum> bucket(static_cast<std::size_t>(M));
    for (i64 n = 1; n <= n_max; ++n) {
        const double u = static_cast<double>(n) / X;
        const double w = u <= 2.0 ? 1.0 : edge(u);
        if (w == 0.0) continue;
        bucket[static_cast<std::size_t>(n % M)] += w / std::sqrt(static_cast<double>(n));
    }
    ComplexSum acc;
    for (i64 a = 1; a < M; ++a) acc += chi(a) * bucket[static_cast<std::size_t>(a)].value();
    return {M, chi.index(), acc.value(), CentralValueMethod::SmoothedSum};
}

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("fit_line: size mismatch");
    LinearFit fit;
    fit.points = x.size();
    if (x.empty()) return fit;
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx <= 0) {
        fit.intercept = my;
        return fit;
    }
    fit.slope = sxy / sxx;
    fit.intercept = my - *fit.slope * mx;
    double ss = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (fit.intercept + *fit.slope * x[i]);
        ss += r * r;
    }
    fit.residual_rms = std::sqrt(ss / n);
    return fit;
}

std::vector<double> dyadic_grid(i64 M, int per_octave) {
    if (per_octave < 1) throw std::invalid_argument("dyadic_grid: per_octave must be >= 1");
    const double Md = static_cast<double>(M);
    const double lo = std::sqrt(Md);
    const double hi = 4.0 * std::pow(Md, 1.05);
    std::vector<double> grid;
    for (int j = 0;; ++j) {
        const double N = lo * std::exp2(static_cast<double>(j) / per_octave);
        if (N > hi) break;
        grid.push_back(N);
    }
    return grid;
}

std::vector<i64> log_spaced_primes(i64 lo, i64 hi, int count) {
    if (lo < 2 || hi < lo || count < 1) throw std::invalid_argument("log_spaced_primes: bad range");
    std::set<i64> out;
    for (int i = 0; i < count; ++i) {
        const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        const double x = static_cast<double>(lo) * std::pow(static_cast<double>(hi) / lo, t);
        i64 q = next_prime(static_cast<i64>(std::llround(x)));
        if (q > hi) {
            q = static_cast<i64>(std::llround(x));
            while (q >= lo && !is_prime(q)) --q;
            if (q < lo) continue;
        }
        out.insert(q);
    }
    return {out.begin(), out.end()};
}

std::vector<i64> sample_characters(i64 M, int count, u64 seed) {
    if (M < 3) throw std::invalid_argument("sample_characters: M must be an odd prime");
    if (count < 1) throw std::invalid_argument("sample_characters: count must be >= 1");
    const i64 quad = (M - 1) / 2;
    std::vector<i64> out{quad};
    const i64 available = M - 2;  // nonprincipal indices 1..M-2
    auto rng = stream_rng(seed, static_cast<u64>(M));
    while (static_cast<i64>(out.size()) < std::min<i64>(count, available)) {
        const i64 k = uniform_int(rng, 1, M - 2);
        if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
    }
    return out;
}

namespace {

PrimeScan scan_prime(i64 M, const BurgessScanOptions& opts, const CoefficientStream& coeffs) {
    const auto group = MultiplicativeGroupTable::build(M);
    const auto grid = dyadic_grid(M, opts.per_octave);
    const auto table = hurwitz_half_table(M);
    PrimeScan ps;
    ps.M = M;
    for (i64 k : sample_characters(M, opts.chars_per_M, opts.seed)) {
        const DirichletCharacter chi(group, k);
        CharacterScan cs;
        cs.chi = k;
        for (double N : grid) {
            const cplx S = twisted_sum(TwistedSumSpec{chi, N, opts.kind, SmoothWindow::bump()}, coeffs);
            const double v = std::abs(S) / std::sqrt(N);
            cs.points.push_back({N, v});
            if (v > cs.B) {
                cs.B = v;
                cs.argmax_N = N;
            }
        }
        cs.abs_L = std::abs(central_value_from_table(chi, table));
        ps.B_max = std::max(ps.B_max, cs.B);
        ps.characters.push_back(std::move(cs));
    }
    if (M <= opts.full_lambda_limit) {
        for (i64 k = 1; k <= M - 2; ++k) {
            ps.Lambda = std::max(ps.Lambda, std::abs(central_value_from_table(DirichletCharacter(group, k), table)));
        }
        ps.Lambda_characters = M - 2;
    } else {
        for (const auto& cs : ps.characters) ps.Lambda = std::max(ps.Lambda, cs.abs_L);
        ps.Lambda_characters = static_cast<i64>(ps.characters.size());
    }
    return ps;
}

}  // namespace

BurgessScanReport burgess_scan(const std::vector<i64>& primes, const BurgessScanOptions& opts,
                               const std::optional<TauTable>& tau) {
    if (primes.empty()) throw std::invalid_argument("burgess_scan: no primes");
    if (!std::is_sorted(primes.begin(), primes.end())) throw std::invalid_argument("burgess_scan: primes must ascend");
    for (i64 M : primes) {
        if (M < 3 || !is_prime(M)) throw NotPrime("burgess_scan: " + std::to_string(M) + " is not an odd prime");
    }
    if (opts.chars_per_M < 1) throw std::invalid_argument("burgess_scan: chars_per_M must be >= 1");

    const double top = 2.0 * dyadic_grid(primes.back(), opts.per_octave).back() + 2.0;
    const i64 table_size = static_cast<i64>(std::ceil(top));
    std::optional<CoefficientStream> coeffs;
    if (opts.kind == CoefficientKind::Divisor) {
        coeffs = divisor_table(table_size);
    } else if (tau && tau->max_index() >= table_size) {
        coeffs = tau->stream();
    } else {
        coeffs = compute_tau(table_size).stream();
    }

    BurgessScanReport rep;
    rep.kind = opts.kind;
    rep.seed = opts.seed;
    rep.chars_per_M = opts.chars_per_M;
    rep.per_octave = opts.per_octave;
    rep.primes.resize(primes.size());
    parallel_for(primes.size(), opts.threads,
                 [&](std::size_t i) { rep.primes[i] = scan_prime(primes[i], opts, *coeffs); });

    std::vector<double> x, yS, yL;
    for (const auto& ps : rep.primes) {
        x.push_back(std::log(static_cast<double>(ps.M)));
        yS.push_back(std::log(ps.B_max));
        yL.push_back(std::log(ps.Lambda));
    }
    rep.S_fit = fit_line(x, yS);
    rep.L_fit = fit_line(x, yL);
    return rep;
}

}  // namespace burgess
