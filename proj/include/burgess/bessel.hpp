#pragma once

namespace burgess {

/// Weight k of the Petersson kernel; the Bessel order is k - 1.
class BesselOrder {
public:
    /// Throws std::invalid_argument unless k >= 3 and k = 3 (mod 4).
    explicit BesselOrder(int k = 11);

    int k() const { return k_; }
    int order() const { return k_ - 1; }

private:
    int k_;
};

/// J_nu(x) for integer nu and real x. Ascending series for x <= nu + 1,
/// Miller backward recurrence up to x = 1000, Hankel asymptotics beyond.
double bessel_j(int nu, double x);
double bessel_j(const BesselOrder& order, double x);

/// (x/2)^nu / nu!, the leading series term (an upper bound for |J_nu(x)|
/// when x <= 1).
double bessel_leading_term(int nu, double x);

}  // namespace burgess
