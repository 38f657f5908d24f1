#include "burgess/hurwitz.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "burgess/errors.hpp"
#include "burgess/summation.hpp"

namespace burgess {

namespace {

// B_{2j} / (2j)! for j = 1..12.
constexpr std::array<double, 12> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
    854513.0 / 138.0 / 1.1240007277776077e21,
    -236364091.0 / 2730.0 / 6.204484017332394e23,
};

}  // namespace

std::complex<double> hurwitz_zeta(std::complex<double> s, double alpha, const HurwitzOptions& opts) {
    if (s == std::complex<double>(1.0, 0.0)) throw PoleAtOne("hurwitz_zeta: pole at s = 1");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("hurwitz_zeta: alpha must lie in (0, 1]");
    if (opts.shift < 1 || opts.corrections < 0 || opts.corrections > 12) {
        throw std::invalid_argument("hurwitz_zeta: shift >= 1 and corrections in [0, 12] required");
    }
    ComplexSum acc;
    for (int n = 0; n < opts.shift; ++n) acc += std::exp(-s * std::log(n + alpha));

    const double a = opts.shift + alpha;
    const double log_a = std::log(a);
    const std::complex<double> a_pow = std::exp(-s * log_a);  // a^{-s}
    acc += a * a_pow / (s - 1.0);
    acc += 0.5 * a_pow;

    // sum_j B_{2j}/(2j)! s(s+1)...(s+2j-2) a^{-s-2j+1}
    std::complex<double> rising = s;      // (s)_{2j-1}
    std::complex<double> power = a_pow / a;  // a^{-s-2j+1}
    for (int j = 1; j <= opts.corrections; ++j) {
        acc += kBernoulliOverFactorial[static_cast<std::size_t>(j - 1)] * rising * power;
        rising *= (s + (2.0 * j - 1)) * (s + 2.0 * j);
        power /= a * a;
    }
    return acc.value();
}

}  // namespace burgess
