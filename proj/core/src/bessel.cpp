#include "zeno/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "zeno/errors.hpp"

namespace zeno {

namespace {

constexpr double kRescaleAbove = 1e250;

// Miller recurrence for x > 0; returns J_0..J_nmax.
std::vector<double> miller(int nmax, double x) {
    const double top = std::max(static_cast<double>(nmax), x);
    int start = static_cast<int>(top + 30.0 + std::sqrt(60.0 * top));
    start += start % 2; // even, so the normalization sum ends on J_0

    std::vector<double> out(static_cast<std::size_t>(nmax) + 1, 0.0);
    double next = 0.0; // J_{m+1}
    double cur = 1e-300; // J_m, arbitrary seed
    double norm = 0.0;
    for (int m = start; m >= 1; --m) {
        const double prev = (2.0 * m / x) * cur - next; // J_{m-1}
        next = cur;
        cur = prev;
        if (m - 1 <= nmax) out[static_cast<std::size_t>(m - 1)] = cur;
        if ((m - 1) % 2 == 0 && m - 1 > 0) norm += 2.0 * cur;
        if (std::abs(cur) > kRescaleAbove) {
            cur /= kRescaleAbove;
            next /= kRescaleAbove;
            norm /= kRescaleAbove;
            for (auto& v : out) v /= kRescaleAbove;
        }
    }
    norm += cur; // J_0
    for (auto& v : out) v /= norm;
    return out;
}

} // namespace

std::vector<double> bessel_j_sequence(int nmax, double x) {
    if (nmax < 0) throw DomainError("bessel_j_sequence: nmax must be >= 0");
    if (x == 0.0) {
        std::vector<double> out(static_cast<std::size_t>(nmax) + 1, 0.0);
        out[0] = 1.0;
        return out;
    }
    if (!std::isfinite(x)) throw DomainError("bessel_j_sequence: non-finite argument");
    const bool flip = x < 0.0;
    auto out = miller(nmax, std::abs(x));
    if (flip) {
        for (int n = 1; n <= nmax; n += 2) out[static_cast<std::size_t>(n)] = -out[static_cast<std::size_t>(n)];
    }
    return out;
}

double bessel_j(int n, double x) {
    const int an = std::abs(n);
    const double v = bessel_j_sequence(an, x)[static_cast<std::size_t>(an)];
    return (n < 0 && an % 2 == 1) ? -v : v;
}

double bessel_j_derivative(int n, double x) {
    return 0.5 * (bessel_j(n - 1, x) - bessel_j(n + 1, x));
}

double bessel_zero(int n, int k) {
    if (n < 0) throw DomainError("bessel_zero: order must be >= 0");
    if (k < 1) throw DomainError("bessel_zero: k must be >= 1");

    // Consecutive zeros are more than 3 apart, so a 0.5 step cannot skip one.
    constexpr double step = 0.5;
    double a = (n == 0) ? 0.5 : static_cast<double>(n);
    double fa = bessel_j(n, a);
    int found = 0;
    for (int iter = 0; iter < 1000000; ++iter) {
        const double b = a + step;
        const double fb = bessel_j(n, b);
        if (fa == 0.0 || std::signbit(fa) != std::signbit(fb)) {
            if (++found == k) {
                if (fa == 0.0) return a;
                double lo = a, hi = b, flo = fa;
                double x = 0.5 * (lo + hi);
                for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
                    const double fx = bessel_j(n, x);
                    if (fx == 0.0) return x;
                    if (std::signbit(fx) == std::signbit(flo)) {
                        lo = x;
                        flo = fx;
                    } else {
                        hi = x;
                    }
                    const double d = bessel_j_derivative(n, x);
                    double xn = (d != 0.0) ? x - fx / d : 0.5 * (lo + hi);
                    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
                    if (std::abs(xn - x) < 1e-15 * std::max(1.0, x)) return xn;
                    x = xn;
                }
                return x;
            }
        }
        a = b;
        fa = fb;
    }
    throw ConvergenceError("bessel_zero: scan did not reach zero #" + std::to_string(k));
}

} // namespace zeno
