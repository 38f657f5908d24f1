#include "burgess/coeffs.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "burgess/errors.hpp"

namespace burgess {

std::string_view to_string(CoefficientKind kind) {
    return kind == CoefficientKind::Divisor ? "divisor" : "tau-normalized";
}

CoefficientKind parse_coefficient_kind(std::string_view name) {
    if (name == "divisor") return CoefficientKind::Divisor;
    if (name == "tau" || name == "tau-normalized") return CoefficientKind::TauNormalized;
    throw UsageError("unknown coefficient kind '" + std::string(name) + "'");
}

CoefficientStream::CoefficientStream(CoefficientKind kind, std::vector<double> values)
    : kind_(kind), values_(std::move(values)) {
    if (values_.size() < 2) throw std::invalid_argument("CoefficientStream: needs at least lambda(1)");
}

std::vector<i64> divisor_counts(i64 N) {
    if (N < 1) throw std::invalid_argument("divisor_table: N must be >= 1");
    std::vector<i64> d(static_cast<std::size_t>(N + 1), 0);
    for (i64 k = 1; k <= N; ++k) {
        for (i64 m = k; m <= N; m += k) ++d[static_cast<std::size_t>(m)];
    }
    return d;
}

CoefficientStream divisor_table(i64 N) {
    const auto d = divisor_counts(N);
    return CoefficientStream(CoefficientKind::Divisor, std::vector<double>(d.begin(), d.end()));
}

double TauTable::normalized(i64 n) const {
    const long double t = static_cast<long double>((*this)[n]);
    return static_cast<double>(t / std::pow(static_cast<long double>(n), 5.5L));
}

CoefficientStream TauTable::stream() const {
    std::vector<double> v(tau_.size(), 0.0);
    for (i64 n = 1; n <= max_index(); ++n) v[static_cast<std::size_t>(n)] = normalized(n);
    return CoefficientStream(CoefficientKind::TauNormalized, std::move(v));
}

namespace {

using boost::multiprecision::int256_t;

struct PentagonalTerm {
    i64 exponent;
    int sign;
};

// prod (1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2}, k over all integers.
std::vector<PentagonalTerm> pentagonal_series(i64 max_exponent) {
    std::vector<PentagonalTerm> terms;
    for (i64 k = 1;; ++k) {
        const i64 e1 = k * (3 * k - 1) / 2;
        const i64 e2 = k * (3 * k + 1) / 2;
        if (e1 > max_exponent) break;
        const int s = (k % 2) ? -1 : 1;
        terms.push_back({e1, s});
        if (e2 <= max_exponent) terms.push_back({e2, s});
    }
    return terms;
}

struct CheckedInt128 {
    static Int128 mul(Int128 a, Int128 b) {
        Int128 r;
        if (__builtin_mul_overflow(a, b, &r)) throw TauOverflow("tau: 128-bit accumulator overflow");
        return r;
    }
    static Int128 add(Int128 a, Int128 b) {
        Int128 r;
        if (__builtin_add_overflow(a, b, &r)) throw TauOverflow("tau: 128-bit accumulator overflow");
        return r;
    }
};

// Coefficients b_n of P^k from P B' = k P' B:
//   n b_n = sum_{j >= 1} p_j ((k + 1) j - n) b_{n-j}.
// P is sparse (O(sqrt N) terms), so the whole expansion costs O(N^{3/2}).
std::vector<Int128> power_series_128(const std::vector<PentagonalTerm>& p, int power, i64 count) {
    std::vector<Int128> b(static_cast<std::size_t>(count), 0);
    b[0] = 1;
    for (i64 n = 1; n < count; ++n) {
        Int128 acc = 0;
        for (const auto& t : p) {
            if (t.exponent > n) break;
            const Int128 w = static_cast<Int128>(t.sign) * ((power + 1) * t.exponent - n);
            acc = CheckedInt128::add(acc, CheckedInt128::mul(w, b[static_cast<std::size_t>(n - t.exponent)]));
        }
        if (acc % n != 0) throw std::logic_error("tau: inexact division in power recurrence");
        b[static_cast<std::size_t>(n)] = acc / n;
    }
    return b;
}

std::vector<Int128> power_series_256(const std::vector<PentagonalTerm>& p, int power, i64 count) {
    std::vector<int256_t> b(static_cast<std::size_t>(count), 0);
    std::vector<Int128> out(static_cast<std::size_t>(count), 0);
    const int256_t limit = int256_t(1) << 126;
    b[0] = 1;
    out[0] = 1;
    for (i64 n = 1; n < count; ++n) {
        int256_t acc = 0;
        for (const auto& t : p) {
            if (t.exponent > n) break;
            acc += int256_t(t.sign * ((power + 1) * t.exponent - n)) * b[static_cast<std::size_t>(n - t.exponent)];
        }
        if (acc % n != 0) throw std::logic_error("tau: inexact division in power recurrence");
        b[static_cast<std::size_t>(n)] = acc / n;
        const int256_t& v = b[static_cast<std::size_t>(n)];
        if (v >= limit || v <= -limit) throw TauOverflow("tau: value exceeds 128-bit storage");
        // Split into two 64-bit halves to move the value into __int128.
        const bool neg = v < 0;
        const int256_t mag = neg ? int256_t(-v) : v;
        const auto lo = static_cast<unsigned long long>(mag & int256_t(0xFFFFFFFFFFFFFFFFULL));
        const auto hi = static_cast<unsigned long long>(mag >> 64);
        const Int128 m = (static_cast<Int128>(hi) << 64) | static_cast<Int128>(lo);
        out[static_cast<std::size_t>(n)] = neg ? -m : m;
    }
    return out;
}

}  // namespace

TauTable compute_tau(i64 N, IntWidth width) {
    if (N < 1) throw std::invalid_argument("tau_table: N must be >= 1");
    const auto p = pentagonal_series(N);
    std::vector<Int128> b;
    switch (width) {
        case IntWidth::Int128:
            b = power_series_128(p, 24, N);
            break;
        case IntWidth::Int256:
            b = power_series_256(p, 24, N);
            break;
        case IntWidth::Auto:
            try {
                b = power_series_128(p, 24, N);
            } catch (const TauOverflow&) {
                b = power_series_256(p, 24, N);
            }
            break;
    }
    // Delta = q * P^24, so tau(n) is the coefficient of q^{n-1} in P^24.
    std::vector<Int128> tau(static_cast<std::size_t>(N + 1), 0);
    for (i64 n = 1; n <= N; ++n) tau[static_cast<std::size_t>(n)] = b[static_cast<std::size_t>(n - 1)];
    return TauTable(std::move(tau));
}

CoefficientStream tau_table(i64 N, i64 cap) {
    if (N > cap) throw std::invalid_argument("tau_table: N exceeds the configured cap");
    return compute_tau(N).stream();
}

namespace {

constexpr std::array<char, 8> kMagic = {'T', 'A', 'U', 'C', 'A', 'C', 'H', 'E'};

}  // namespace

void write_tau_cache(const std::filesystem::path& path, const TauTable& table) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write tau cache " + path.string());
    out.write(kMagic.data(), kMagic.size());
    constexpr Int128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr Int128 hi = std::numeric_limits<std::int64_t>::max();
    for (i64 n = 1; n <= table.max_index(); ++n) {
        const Int128 v = table[n];
        if (v < lo || v > hi) break;
        auto u = static_cast<std::uint64_t>(static_cast<std::int64_t>(v));
        std::array<char, 8> bytes{};
        for (auto& byte : bytes) {
            byte = static_cast<char>(u & 0xFF);
            u >>= 8;
        }
        out.write(bytes.data(), bytes.size());
    }
}

std::optional<TauTable> read_tau_cache(const std::filesystem::path& path, i64 N) {
    std::error_code ec;
    const auto size = std::filesystem::file_size(path, ec);
    if (ec || size < 8 || (size - 8) % 8 != 0) return std::nullopt;
    const i64 count = static_cast<i64>((size - 8) / 8);
    if (count < N) return std::nullopt;

    std::ifstream in(path, std::ios::binary);
    std::array<char, 8> magic{};
    if (!in.read(magic.data(), magic.size()) || magic != kMagic) return std::nullopt;
    std::vector<Int128> tau(static_cast<std::size_t>(N + 1), 0);
    for (i64 n = 1; n <= N; ++n) {
        std::array<unsigned char, 8> bytes{};
        if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) return std::nullopt;
        std::uint64_t u = 0;
        for (int i = 7; i >= 0; --i) u = (u << 8) | bytes[static_cast<std::size_t>(i)];
        tau[static_cast<std::size_t>(n)] = static_cast<std::int64_t>(u);
    }
    return TauTable(std::move(tau));
}

TauTable load_or_compute_tau(i64 N, const std::optional<std::filesystem::path>& cache) {
    if (cache) {
        if (auto hit = read_tau_cache(*cache, N)) return std::move(*hit);
    }
    TauTable table = compute_tau(N);
    if (cache) {
        try {
            write_tau_cache(*cache, table);
        } catch (const std::runtime_error&) {
            // Unwritable cache location: keep the computed table.
        }
    }
    return table;
}

std::string int128_to_string(Int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

AmplifierSet select_amplifier_primes(i64 L, const CoefficientStream& stream, double eps) {
    if (L < 2) throw std::invalid_argument("select_amplifier_primes: L must be >= 2");
    if (stream.max_index() < 2 * L) {
        throw TableTooSmall("select_amplifier_primes: coefficient table ends below 2L");
    }
    AmplifierSet out;
    out.L = L;
    out.threshold = std::pow(static_cast<double>(L), 1.0 - eps);
    for (i64 l : primes_in_range(L, 2 * L)) {
        if (stream(l) != 0.0) out.primes.push_back(l);
    }
    std::stable_sort(out.primes.begin(), out.primes.end(),
                     [&](i64 a, i64 b) { return std::abs(stream(a)) > std::abs(stream(b)); });
    for (i64 l : out.primes) out.weight_total += stream(l) * stream(l);
    if (out.weight_total < out.threshold) {
        throw ThresholdUnreachable("select_amplifier_primes: L* = " + std::to_string(out.weight_total) +
                                   " below L^{1-eps} = " + std::to_string(out.threshold));
    }
    return out;
}

}  // namespace burgess
