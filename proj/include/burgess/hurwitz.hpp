#pragma once

#include <complex>

namespace burgess {

struct HurwitzOptions {
    int shift = 30;       // terms summed directly before the Euler-Maclaurin tail
    int corrections = 8;  // Bernoulli correction terms, at most 12
};

/// zeta(s, alpha) = sum_{n >= 0} (n + alpha)^{-s} for alpha in (0, 1], by
/// Euler-Maclaurin summation. Throws PoleAtOne at s = 1.
std::complex<double> hurwitz_zeta(std::complex<double> s, double alpha, const HurwitzOptions& opts = {});

}  // namespace burgess
