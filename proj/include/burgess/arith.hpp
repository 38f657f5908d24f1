#pragma once

// Exact modular arithmetic, the multiplicative group of F_q, Dirichlet
// characters to prime moduli and their Gauss sums.
//
// Character values are kept as exact angles: chi(a) = e(t / (q - 1)) with t an
// integer, so products of character values are computed by integer addition
// mod q - 1 and only turned into complex numbers when a sum is accumulated.
// Moduli are limited to 2^31 so that every product of two residues fits in
// 64 bits.

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace burgess {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using cplx = std::complex<double>;

inline constexpr i64 kMaxModulus = i64{1} << 31;
inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Canonical representative of a mod m in [0, m).
constexpr i64 mod(i64 a, i64 m) {
    const i64 r = a % m;
    return r < 0 ? r + m : r;
}

i64 gcd(i64 a, i64 b);
i64 mul_mod(i64 a, i64 b, i64 m);
i64 pow_mod(i64 base, i64 exp, i64 m);

/// Inverse of a modulo m. Throws NonInvertible when gcd(a, m) > 1.
i64 inv_mod(i64 a, i64 m);

bool is_prime(i64 n);
std::vector<i64> primes_up_to(i64 n);
std::vector<i64> primes_in_range(i64 lo, i64 hi);
i64 next_prime(i64 n);  // smallest prime >= n
std::vector<i64> prime_factors(i64 n);  // distinct, ascending

/// Smallest primitive root of the prime p.
i64 primitive_root(i64 p);

/// Square root of a modulo the prime p (Tonelli-Shanks), or nullopt when a is a
/// non-residue.
std::optional<i64> sqrt_mod(i64 a, i64 p);

/// e(x) = exp(2 pi i x).
cplx expo(double x);
/// e(num / den) with the fraction reduced mod 1 in integers first.
cplx expo(i64 num, i64 den);

class ResidueRing {
public:
    explicit ResidueRing(i64 modulus);

    i64 modulus() const { return m_; }
    i64 reduce(i64 a) const { return burgess::mod(a, m_); }
    i64 add(i64 a, i64 b) const { return reduce(reduce(a) + reduce(b)); }
    i64 sub(i64 a, i64 b) const { return reduce(reduce(a) - reduce(b)); }
    i64 mul(i64 a, i64 b) const { return mul_mod(reduce(a), reduce(b), m_); }
    i64 neg(i64 a) const { return reduce(-reduce(a)); }
    i64 pow(i64 a, i64 e) const { return pow_mod(reduce(a), e, m_); }
    i64 inverse(i64 a) const { return inv_mod(a, m_); }
    bool is_unit(i64 a) const { return gcd(reduce(a), m_) == 1; }

private:
    i64 m_;
};

/// Table of e(k / n) for k in [0, n).
class RootsOfUnity {
public:
    explicit RootsOfUnity(i64 n);

    i64 order() const { return static_cast<i64>(table_.size()); }
    const cplx& operator()(i64 k) const { return table_[static_cast<std::size_t>(burgess::mod(k, order()))]; }
    /// Unchecked lookup; k must already lie in [0, n).
    const cplx& at_reduced(i64 k) const { return table_[static_cast<std::size_t>(k)]; }

private:
    std::vector<cplx> table_;
};

/// Discrete-log table of F_q^x relative to its smallest primitive root.
class MultiplicativeGroupTable {
public:
    /// Throws NotPrime when q is composite.
    static std::shared_ptr<const MultiplicativeGroupTable> build(i64 q);

    i64 prime() const { return q_; }
    i64 generator() const { return g_; }
    i64 group_order() const { return q_ - 1; }
    /// dlog(a) in [0, q - 2]; a must be a unit mod q.
    i64 dlog(i64 a) const { return dlog_[static_cast<std::size_t>(burgess::mod(a, q_))]; }
    /// g^j mod q.
    i64 power(i64 j) const { return pow_[static_cast<std::size_t>(burgess::mod(j, q_ - 1))]; }
    /// e(t / (q - 1)).
    const RootsOfUnity& roots() const { return roots_; }

    explicit MultiplicativeGroupTable(i64 q);

private:
    i64 q_;
    i64 g_;
    std::vector<std::int32_t> dlog_;
    std::vector<std::int32_t> pow_;
    RootsOfUnity roots_;
};

/// chi(g^j) = e(j k / (q - 1)) for the prime modulus q and index k.
class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const MultiplicativeGroupTable> group, i64 index);

    i64 modulus() const { return group_->prime(); }
    i64 index() const { return k_; }
    /// Order of chi in the character group.
    i64 order() const;
    bool is_principal() const { return k_ == 0; }
    bool is_primitive() const { return k_ != 0; }
    /// chi(-1) as +1 or -1.
    int parity() const;

    /// Exact angle t with chi(a) = e(t / (q - 1)), or nullopt when q | a.
    std::optional<i64> angle(i64 a) const;
    cplx operator()(i64 a) const;

    DirichletCharacter conj() const;
    const MultiplicativeGroupTable& group() const { return *group_; }
    const std::shared_ptr<const MultiplicativeGroupTable>& group_ptr() const { return group_; }

    friend bool operator==(const DirichletCharacter& x, const DirichletCharacter& y) {
        return x.modulus() == y.modulus() && x.k_ == y.k_;
    }

private:
    std::shared_ptr<const MultiplicativeGroupTable> group_;
    i64 k_;
};

/// Throws NotPrime for composite q and std::out_of_range for k outside [0, q - 2].
DirichletCharacter build_character(i64 q, i64 k);
/// The Legendre symbol mod an odd prime q.
DirichletCharacter quadratic_character(i64 q);

struct GaussSumValue {
    cplx value;

    double magnitude() const { return std::abs(value); }
    /// g / |g|; the sign of the Gauss sum.
    cplx sign() const { return value / std::abs(value); }
};

/// g_chi = sum_{a mod q} chi(a) e(a / q), accumulated term by term.
GaussSumValue gauss_sum(const DirichletCharacter& chi);

}  // namespace burgess
