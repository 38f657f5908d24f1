#include "burgess/expsums.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "burgess/errors.hpp"
#include "burgess/parallel.hpp"
#include "burgess/summation.hpp"

namespace burgess {

cplx kloosterman(const KloostermanQuery& query) {
    const i64 c = query.c;
    if (c < 1) throw std::invalid_argument("kloosterman: modulus must be >= 1");
    if (query.twist && c % query.twist->modulus() != 0) {
        throw TwistModulusMismatch("kloosterman: twist modulus " + std::to_string(query.twist->modulus()) +
                                   " does not divide " + std::to_string(c));
    }
    const RootsOfUnity roots(c);
    const i64 a = mod(query.a, c);
    const i64 b = mod(query.b, c);
    ComplexSum acc;
    for (i64 alpha = 0; alpha < c; ++alpha) {
        if (gcd(alpha, c) != 1) continue;
        const i64 alpha_inv = inv_mod(alpha, c);
        const i64 phase = (mul_mod(alpha, a, c) + mul_mod(alpha_inv, b, c)) % c;
        cplx term = roots.at_reduced(phase);
        if (query.twist) term *= (*query.twist)(alpha);
        acc += term;
    }
    return acc.value();
}

cplx kloosterman(i64 a, i64 b, i64 c) { return kloosterman(KloostermanQuery{a, b, c, std::nullopt}); }

i64 QuadPoly::eval(i64 x, i64 m) const {
    const i64 xr = mod(x, m);
    i64 v = mod(c2, m);
    v = (mul_mod(v, xr, m) + mod(c1, m)) % m;
    v = (mul_mod(v, xr, m) + mod(c0, m)) % m;
    return v;
}

bool QuadPoly::is_zero_mod(i64 m) const { return mod(c0, m) == 0 && mod(c1, m) == 0 && mod(c2, m) == 0; }

namespace {

struct Factorisation {
    bool zero = false;
    std::vector<RationalPlace> places;  // exponent = multiplicity
};

void add_place(std::vector<RationalPlace>& places, RationalPlace p) {
    for (auto& q : places) {
        if (q.degree == p.degree && q.b == p.b && q.c == p.c) {
            q.exponent += p.exponent;
            return;
        }
    }
    places.push_back(p);
}

Factorisation factor(const QuadPoly& poly, i64 M) {
    Factorisation f;
    const i64 c0 = mod(poly.c0, M), c1 = mod(poly.c1, M), c2 = mod(poly.c2, M);
    if (c2 == 0 && c1 == 0) {
        f.zero = (c0 == 0);
        return f;
    }
    if (c2 == 0) {
        const i64 root = mul_mod(M - c0, inv_mod(c1, M), M);
        add_place(f.places, {root, 0, 1, 1});
        return f;
    }
    const i64 lead_inv = inv_mod(c2, M);
    const i64 b = mul_mod(c1, lead_inv, M);
    const i64 c = mul_mod(c0, lead_inv, M);
    if (M == 2) {
        std::vector<i64> roots;
        for (i64 x = 0; x < 2; ++x) {
            if ((x * x + b * x + c) % 2 == 0) roots.push_back(x);
        }
        if (roots.empty()) {
            add_place(f.places, {b, c, 2, 1});
        } else if (roots.size() == 2) {
            add_place(f.places, {0, 0, 1, 1});
            add_place(f.places, {1, 0, 1, 1});
        } else {
            add_place(f.places, {roots[0], 0, 1, 2});
        }
        return f;
    }
    const i64 disc = mod(mul_mod(b, b, M) - mul_mod(4, c, M), M);
    const i64 half = inv_mod(2, M);
    if (disc == 0) {
        add_place(f.places, {mul_mod(M - b, half, M), 0, 1, 2});
        return f;
    }
    const auto s = sqrt_mod(disc, M);
    if (!s) {
        add_place(f.places, {b, c, 2, 1});
        return f;
    }
    add_place(f.places, {mul_mod(mod(-b + *s, M), half, M), 0, 1, 1});
    add_place(f.places, {mul_mod(mod(-b - *s, M), half, M), 0, 1, 1});
    return f;
}

}  // namespace

RationalCharSumSpec::RationalCharSumSpec(DirichletCharacter chi, QuadPoly numerator, QuadPoly denominator,
                                         std::vector<i64> extra_excluded)
    : chi_(std::move(chi)), num_(numerator), den_(denominator) {
    const i64 M = chi_.modulus();
    if (den_.is_zero_mod(M)) {
        throw DenominatorZeroEverywhere("rational_char_sum: Q2 vanishes identically mod " + std::to_string(M));
    }
    const Factorisation fn = factor(num_, M);
    const Factorisation fd = factor(den_, M);

    for (const auto& p : fd.places) {
        if (p.degree == 1) excluded_.push_back(p.b);
    }
    for (i64 x : extra_excluded) excluded_.push_back(mod(x, M));
    std::sort(excluded_.begin(), excluded_.end());
    excluded_.erase(std::unique(excluded_.begin(), excluded_.end()), excluded_.end());
    if (excluded_.size() > 4) throw std::invalid_argument("rational_char_sum: more than four excluded points");

    for (auto p : fn.places) add_place(places_, p);
    for (auto p : fd.places) {
        p.exponent = -p.exponent;
        add_place(places_, p);
    }
    std::erase_if(places_, [](const RationalPlace& p) { return p.exponent == 0; });

    const i64 order = chi_.order();
    degenerate_ = fn.zero || std::all_of(places_.begin(), places_.end(),
                                         [order](const RationalPlace& p) { return p.exponent % order == 0; });
}

std::string RationalCharSumSpec::summary() const {
    std::ostringstream os;
    os << "M=" << modulus() << " chi=" << chi_.index() << " Q1=[" << num_.c0 << "," << num_.c1 << ","
       << num_.c2 << "] Q2=[" << den_.c0 << "," << den_.c1 << "," << den_.c2 << "] excl={";
    for (std::size_t i = 0; i < excluded_.size(); ++i) os << (i ? "," : "") << excluded_[i];
    os << "}";
    return os.str();
}

cplx rational_char_sum(const RationalCharSumSpec& spec) {
    const i64 M = spec.modulus();
    const auto& chi = spec.chi();
    const auto& roots = chi.group().roots();
    const i64 n = chi.group().group_order();
    const auto& excl = spec.excluded();
    ComplexSum acc;
    for (i64 x = 0; x < M; ++x) {
        if (std::binary_search(excl.begin(), excl.end(), x)) continue;
        const i64 v1 = spec.numerator().eval(x, M);
        if (v1 == 0) continue;
        const i64 v2 = spec.denominator().eval(x, M);
        acc += roots.at_reduced(mod(*chi.angle(v1) - *chi.angle(v2), n));
    }
    return acc.value();
}

WeilScanRecord weil_record(const RationalCharSumSpec& spec) {
    const double s = std::abs(rational_char_sum(spec));
    return {spec.modulus(), spec.summary(), s, s / std::sqrt(static_cast<double>(spec.modulus())),
            spec.degenerate()};
}

namespace {

WeilScanSummary scan_one(i64 M, int trials, u64 seed) {
    if (!is_prime(M)) throw NotPrime("weil_scan: " + std::to_string(M) + " is not prime");
    if (M < 3) throw std::invalid_argument("weil_scan: M must be an odd prime");
    const auto group = MultiplicativeGroupTable::build(M);
    auto rng = stream_rng(seed, static_cast<u64>(M));

    WeilScanSummary out;
    out.M = M;
    const i64 max_attempts = 1000 * static_cast<i64>(trials) + 1000;
    i64 attempts = 0;
    while (static_cast<int>(out.records.size()) < trials) {
        if (++attempts > max_attempts) throw std::runtime_error("weil_scan: too many degenerate draws");
        const DirichletCharacter chi(group, uniform_int(rng, 1, M - 2));
        const QuadPoly q1{uniform_int(rng, 0, M - 1), uniform_int(rng, 0, M - 1), uniform_int(rng, 0, M - 1)};
        const QuadPoly q2{uniform_int(rng, 0, M - 1), uniform_int(rng, 0, M - 1), uniform_int(rng, 0, M - 1)};
        if (q2.is_zero_mod(M)) continue;
        const RationalCharSumSpec spec(chi, q1, q2);
        if (spec.degenerate()) {
            ++out.degenerate_count;
            continue;
        }
        out.records.push_back(weil_record(spec));
    }

    std::vector<double> ratios;
    for (const auto& r : out.records) ratios.push_back(r.ratio);
    std::sort(ratios.begin(), ratios.end());
    out.ratio_max = ratios.back();
    const std::size_t mid = ratios.size() / 2;
    out.ratio_median = ratios.size() % 2 ? ratios[mid] : 0.5 * (ratios[mid - 1] + ratios[mid]);
    return out;
}

}  // namespace

std::vector<WeilScanSummary> weil_scan(std::span<const i64> Ms, int trials_per_M, u64 seed, int threads) {
    if (trials_per_M < 1) throw std::invalid_argument("weil_scan: trials must be >= 1");
    std::vector<WeilScanSummary> out(Ms.size());
    parallel_for(Ms.size(), threads, [&](std::size_t i) { out[i] = scan_one(Ms[i], trials_per_M, seed); });
    return out;
}

}  // namespace burgess
