#include "burgess/bessel.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "burgess/summation.hpp"

namespace burgess {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

double series(int nu, double x) {
    const double h = 0.5 * x;
    const double h2 = h * h;
    double term = 1.0;
    for (int i = 1; i <= nu; ++i) term *= h / i;
    CompensatedSum sum;
    for (int m = 0; m < 500; ++m) {
        sum += term;
        term *= -h2 / ((m + 1.0) * (m + 1.0 + nu));
        if (std::abs(term) < 1e-18 * std::abs(sum.value()) && m > h) break;
    }
    return sum.value();
}

// Backward recurrence from well above max(nu, x), normalised by
// J_0 + 2 sum_m J_{2m} = 1.
double miller(int nu, double x) {
    int start = static_cast<int>(std::max<double>(nu, x) + 40 + 10 * std::cbrt(x));
    start += start % 2;
    double next = 0.0, cur = 1e-300, result = 0.0, norm = 0.0;
    for (int k = start; k > 0; --k) {
        const double prev = (2.0 * k / x) * cur - next;
        next = cur;
        cur = prev;  // J_{k-1}, unnormalised
        if (k - 1 == nu) result = cur;
        if ((k - 1) % 2 == 0) norm += (k - 1 == 0 ? 1.0 : 2.0) * cur;
        if (std::abs(cur) > 1e250) {
            next *= 1e-250;
            cur *= 1e-250;
            result *= 1e-250;
            norm *= 1e-250;
        }
    }
    return result / norm;
}

double hankel(int nu, double x) {
    const double mu = 4.0 * nu * nu;
    CompensatedSum P, Q;
    double term = 1.0;
    for (int k = 0; k < 30; ++k) {
        // term = a_k(nu) / x^k with a_k = prod_{j=1..k} (mu - (2j-1)^2) / (j 8).
        if (k % 2 == 0) {
            P += (k % 4 == 0 ? 1.0 : -1.0) * term;
        } else {
            Q += (k % 4 == 1 ? 1.0 : -1.0) * term;
        }
        const double f = (mu - (2.0 * k + 1) * (2.0 * k + 1)) / ((k + 1) * 8.0 * x);
        if (std::abs(term * f) > std::abs(term) && k > 2) break;
        term *= f;
        if (std::abs(term) < 1e-17) break;
    }
    const double chi = x - (0.5 * nu + 0.25) * kPi;
    return std::sqrt(2.0 / (kPi * x)) * (P.value() * std::cos(chi) - Q.value() * std::sin(chi));
}

}  // namespace

BesselOrder::BesselOrder(int k) : k_(k) {
    if (k < 3 || k % 4 != 3) throw std::invalid_argument("BesselOrder: k must satisfy k >= 3 and k = 3 mod 4");
}

double bessel_j(int nu, double x) {
    if (nu < 0) return (nu % 2 ? -1.0 : 1.0) * bessel_j(-nu, x);
    if (x < 0) return (nu % 2 ? -1.0 : 1.0) * bessel_j(nu, -x);
    if (x == 0) return nu == 0 ? 1.0 : 0.0;
    if (x <= nu + 1.0) return series(nu, x);
    if (x > 1000.0 && x > 2.0 * nu * nu) return hankel(nu, x);
    return miller(nu, x);
}

double bessel_j(const BesselOrder& order, double x) { return bessel_j(order.order(), x); }

double bessel_leading_term(int nu, double x) {
    double t = 1.0;
    for (int i = 1; i <= nu; ++i) t *= 0.5 * x / i;
    return t;
}

}  // namespace burgess
