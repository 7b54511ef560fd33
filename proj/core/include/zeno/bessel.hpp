#pragma once

#include <vector>

namespace zeno {

/**
 Bessel function of the first kind J_n(x) for integer order.

 Evaluated by Miller's downward recurrence normalized with
 J_0 + 2 sum_k J_2k = 1, which is stable for every x. Negative orders and
 arguments follow J_{-n} = (-1)^n J_n and J_n(-x) = (-1)^n J_n(x).
 Absolute error is below 1e-12 for |x| <= 50.
 */
double bessel_j(int n, double x);

/// J_0(x) .. J_nmax(x) from a single recurrence sweep.
std::vector<double> bessel_j_sequence(int nmax, double x);

/// Derivative J_n'(x) = (J_{n-1}(x) - J_{n+1}(x)) / 2.
double bessel_j_derivative(int n, double x);

/**
 k-th positive zero of J_n (k >= 1, n >= 0), located by a sign-change scan
 and refined by safeguarded Newton/bisection to 1e-12.
 */
double bessel_zero(int n, int k);

} // namespace zeno
