#pragma once

// Arithmetic weights lambda(n): the divisor function d(n) and the
// Hecke-normalised Ramanujan tau(n) / n^{11/2}, plus the amplifier prime set.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "burgess/arith.hpp"

namespace burgess {

enum class CoefficientKind { Divisor, TauNormalized };

std::string_view to_string(CoefficientKind kind);
CoefficientKind parse_coefficient_kind(std::string_view name);

/// lambda(1..N) cached as doubles; index 0 holds 0.
class CoefficientStream {
public:
    CoefficientStream(CoefficientKind kind, std::vector<double> values);

    CoefficientKind kind() const { return kind_; }
    i64 max_index() const { return static_cast<i64>(values_.size()) - 1; }
    double operator()(i64 n) const { return values_.at(static_cast<std::size_t>(n)); }
    const std::vector<double>& values() const { return values_; }

private:
    CoefficientKind kind_;
    std::vector<double> values_;
};

/// d(n) for n <= N by a divisor sieve.
std::vector<i64> divisor_counts(i64 N);
CoefficientStream divisor_table(i64 N);

using Int128 = __int128;

/// Integer width used by the tau recurrence's accumulator.
enum class IntWidth { Int128, Int256, Auto };

/// Exact tau(1..N) from the eta-product q-expansion.
class TauTable {
public:
    explicit TauTable(std::vector<Int128> values) : tau_(std::move(values)) {}

    i64 max_index() const { return static_cast<i64>(tau_.size()) - 1; }
    Int128 operator[](i64 n) const { return tau_.at(static_cast<std::size_t>(n)); }
    /// tau(n) / n^{11/2}.
    double normalized(i64 n) const;
    CoefficientStream stream() const;
    const std::vector<Int128>& values() const { return tau_; }

private:
    std::vector<Int128> tau_;  // index 0 unused
};

/// Expands Delta = q prod (1 - q^n)^24 from Euler's pentagonal series. Throws
/// TauOverflow when the chosen width is exceeded (Auto retries at 256 bits).
TauTable compute_tau(i64 N, IntWidth width = IntWidth::Auto);

/// Convenience: tau(n) / n^{11/2} for n <= N. Default cap N <= 10^6.
CoefficientStream tau_table(i64 N, i64 cap = 1'000'000);

/// On-disk cache: 8-byte magic "TAUCACHE" followed by little-endian int64
/// tau(1), tau(2), ...  Only the prefix of values representable in int64 is
/// stored.
void write_tau_cache(const std::filesystem::path& path, const TauTable& table);
/// Returns the cached table if it covers n <= N; nullopt when absent, short or
/// malformed.
std::optional<TauTable> read_tau_cache(const std::filesystem::path& path, i64 N);
/// Reads the cache when it covers N, otherwise computes and rewrites it.
TauTable load_or_compute_tau(i64 N, const std::optional<std::filesystem::path>& cache);

std::string int128_to_string(Int128 v);

struct AmplifierSet {
    i64 L = 0;
    std::vector<i64> primes;  // ordered by decreasing |lambda|, ties by value
    double weight_total = 0;  // L* = sum |lambda(l)|^2
    double threshold = 0;     // L^{1 - eps}
};

/// Primes l in [L, 2L] with lambda(l) != 0, by decreasing |lambda(l)|. Throws
/// ThresholdUnreachable when L* < L^{1 - eps} and TableTooSmall when the
/// stream does not reach 2L.
AmplifierSet select_amplifier_primes(i64 L, const CoefficientStream& stream, double eps = 0.1);

}  // namespace burgess
