#include "burgess/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "burgess/errors.hpp"
#include "burgess/summation.hpp"

namespace burgess {

i64 gcd(i64 a, i64 b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        const i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 mul_mod(i64 a, i64 b, i64 m) {
    const __int128 r = static_cast<__int128>(a) * b % m;
    return static_cast<i64>(r < 0 ? r + m : r);
}

i64 pow_mod(i64 base, i64 exp, i64 m) {
    if (m == 1) return 0;
    i64 result = 1;
    base = mod(base, m);
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

i64 inv_mod(i64 a, i64 m) {
    if (m <= 0) throw std::invalid_argument("inv_mod: modulus must be positive");
    if (m == 1) return 0;
    i64 old_r = mod(a, m), r = m;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        const i64 q = old_r / r;
        i64 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) {
        throw NonInvertible("inv_mod: gcd(" + std::to_string(a) + ", " + std::to_string(m) +
                            ") = " + std::to_string(old_r));
    }
    return mod(old_s, m);
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    i64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        i64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<i64> primes_up_to(i64 n) {
    std::vector<i64> out;
    if (n < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(n + 1), false);
    for (i64 i = 2; i <= n; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (i64 j = i * i; j <= n; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

std::vector<i64> primes_in_range(i64 lo, i64 hi) {
    std::vector<i64> out;
    for (i64 p : primes_up_to(hi)) {
        if (p >= lo) out.push_back(p);
    }
    return out;
}

i64 next_prime(i64 n) {
    if (n <= 2) return 2;
    while (!is_prime(n)) ++n;
    return n;
}

std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> out;
    n = n < 0 ? -n : n;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

i64 primitive_root(i64 p) {
    if (!is_prime(p)) throw NotPrime("primitive_root: " + std::to_string(p) + " is not prime");
    if (p == 2) return 1;
    const auto factors = prime_factors(p - 1);
    for (i64 g = 2; g < p; ++g) {
        bool ok = true;
        for (i64 f : factors) {
            if (pow_mod(g, (p - 1) / f, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: none found");
}

std::optional<i64> sqrt_mod(i64 a, i64 p) {
    a = mod(a, p);
    if (p == 2 || a == 0) return a;
    if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;
    if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);

    i64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    i64 z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;

    i64 m = s;
    i64 c = pow_mod(z, q, p);
    i64 t = pow_mod(a, q, p);
    i64 r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        i64 i = 0;
        i64 tt = t;
        while (tt != 1) {
            tt = mul_mod(tt, tt, p);
            ++i;
        }
        i64 b = c;
        for (i64 j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    return r;
}

cplx expo(double x) {
    const double frac = x - std::round(x);
    return std::polar(1.0, kTwoPi * frac);
}

cplx expo(i64 num, i64 den) {
    if (den <= 0) throw std::invalid_argument("expo: denominator must be positive");
    i64 k = mod(num, den);
    // Fold into [-den/2, den/2] so the angle passed to sin/cos is small.
    if (2 * k > den) k -= den;
    return std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(den));
}

ResidueRing::ResidueRing(i64 modulus) : m_(modulus) {
    if (modulus <= 0 || modulus > kMaxModulus) {
        throw std::invalid_argument("ResidueRing: modulus must lie in [1, 2^31]");
    }
}

RootsOfUnity::RootsOfUnity(i64 n) {
    if (n <= 0) throw std::invalid_argument("RootsOfUnity: order must be positive");
    table_.resize(static_cast<std::size_t>(n));
    // Fill the lower half and mirror, so e(-k/n) is the exact conjugate of e(k/n).
    for (i64 k = 0; 2 * k <= n; ++k) {
        const cplx z = expo(k, n);
        table_[static_cast<std::size_t>(k)] = z;
        if (k != 0) table_[static_cast<std::size_t>(n - k)] = std::conj(z);
    }
}

MultiplicativeGroupTable::MultiplicativeGroupTable(i64 q)
    : q_(q), g_(primitive_root(q)), roots_(q - 1) {
    if (q > (i64{1} << 28)) throw std::length_error("MultiplicativeGroupTable: modulus too large for a table");
    dlog_.assign(static_cast<std::size_t>(q), 0);
    pow_.assign(static_cast<std::size_t>(q - 1), 0);
    i64 x = 1;
    for (i64 j = 0; j < q - 1; ++j) {
        pow_[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(x);
        dlog_[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(j);
        x = mul_mod(x, g_, q);
    }
}

std::shared_ptr<const MultiplicativeGroupTable> MultiplicativeGroupTable::build(i64 q) {
    if (!is_prime(q)) throw NotPrime("modulus " + std::to_string(q) + " is not prime");
    return std::make_shared<const MultiplicativeGroupTable>(q);
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const MultiplicativeGroupTable> group, i64 index)
    : group_(std::move(group)), k_(index) {
    if (!group_) throw std::invalid_argument("DirichletCharacter: null group table");
    // q = 2 has the single index 0.
    if (k_ < 0 || k_ > std::max<i64>(group_->prime() - 2, 0)) {
        throw std::out_of_range("character index " + std::to_string(k_) + " outside [0, q-2]");
    }
}

i64 DirichletCharacter::order() const {
    const i64 n = group_->group_order();
    return n / gcd(k_, n);
}

int DirichletCharacter::parity() const {
    const auto t = angle(-1);
    return (t && *t == 0) ? 1 : -1;
}

std::optional<i64> DirichletCharacter::angle(i64 a) const {
    const i64 q = group_->prime();
    const i64 r = mod(a, q);
    if (r == 0) return std::nullopt;
    return mul_mod(k_, group_->dlog(r), group_->group_order());
}

cplx DirichletCharacter::operator()(i64 a) const {
    const auto t = angle(a);
    if (!t) return {0.0, 0.0};
    return group_->roots().at_reduced(*t);
}

DirichletCharacter DirichletCharacter::conj() const {
    const i64 n = group_->group_order();
    return DirichletCharacter(group_, mod(-k_, n));
}

DirichletCharacter build_character(i64 q, i64 k) {
    return DirichletCharacter(MultiplicativeGroupTable::build(q), k);
}

DirichletCharacter quadratic_character(i64 q) {
    if (q == 2) throw std::invalid_argument("quadratic_character: modulus must be an odd prime");
    return build_character(q, (q - 1) / 2);
}

GaussSumValue gauss_sum(const DirichletCharacter& chi) {
    const i64 q = chi.modulus();
    const RootsOfUnity additive(q);
    ComplexSum acc;
    for (i64 a = 1; a < q; ++a) acc += chi(a) * additive.at_reduced(a);
    return {acc.value()};
}

}  // namespace burgess
