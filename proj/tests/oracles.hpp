#pragma once

// Test-side oracles, independent of the implementation paths they check:
// dense-grid suprema, finite differences, bisection on monotone functions,
// two-sample Kolmogorov-Smirnov, and the Erlang-mixture tail series.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "tempsub/extreal.hpp"

namespace oracles {

/// Brute-force sup_y { x*y - f(y) } over a uniform grid of n points.
inline double grid_conjugate(const std::function<tempsub::ExtReal(double)>& f, double x,
                             double y_lo, double y_hi, long n) {
    double best = -std::numeric_limits<double>::infinity();
    for (long i = 0; i <= n; ++i) {
        const double y = y_lo + (y_hi - y_lo) * static_cast<double>(i) / static_cast<double>(n);
        const tempsub::ExtReal v = f(y);
        if (v.is_infinite()) continue;
        best = std::max(best, x * y - v.value());
    }
    return best;
}

/// Central finite difference of order 1 or 2.
inline double finite_difference(const std::function<double(double)>& f, double y, int order,
                                double h) {
    if (order == 1) return (f(y + h) - f(y - h)) / (2.0 * h);
    return (f(y + h) - 2.0 * f(y) + f(y - h)) / (h * h);
}

/// One-sided forward difference.
inline double forward_difference(const std::function<double(double)>& f, double y, double h) {
    return (f(y + h) - f(y)) / h;
}

/// Bisection for f(y) = target on [lo, hi], f increasing.
inline double bisect_increasing(const std::function<double(double)>& f, double target, double lo,
                                double hi) {
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) break;
        (f(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Asymptotic Kolmogorov distribution Q(z) = 2 sum (-1)^{k-1} exp(-2 k^2 z^2).
inline double kolmogorov_q(double z) {
    if (z < 0.2) return 1.0;
    double sum = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = 2.0 * std::exp(-2.0 * k * k * z * z);
        sum += (k % 2 == 1) ? term : -term;
        if (term < 1e-12) break;
    }
    return std::min(1.0, std::max(0.0, sum));
}

/// Two-sample KS p-value (asymptotic).
inline double ks_two_sample_p(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const std::size_t n = a.size(), m = b.size();
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < n && j < m) {
        const double x = std::min(a[i], b[j]);
        while (i < n && a[i] <= x) ++i;
        while (j < m && b[j] <= x) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / n - static_cast<double>(j) / m));
    }
    const double ne = static_cast<double>(n) * m / static_cast<double>(n + m);
    return kolmogorov_q(std::sqrt(ne) * d);
}

/// P(Gamma(k, 1) >= x) for integer k: the Erlang tail sum e^{-x} sum_{j<k} x^j/j!.
inline double erlang_tail(long long k, double x) {
    if (k <= 0) return 0.0;
    double term = std::exp(-x);
    double sum = term;
    for (long long j = 1; j < k; ++j) {
        term *= x / static_cast<double>(j);
        sum += term;
    }
    return std::min(1.0, sum);
}

/// Exact P(S >= a) for S = sum of N Gamma(shape, 1) jumps, N ~ Poisson(m):
/// sum_k Poisson(m; k) P(Gamma(k * shape) >= a). Requires integer shape.
inline double compound_poisson_gamma_tail(double m, long long shape, double a) {
    double pois = std::exp(-m);
    double total = 0.0;
    for (long long k = 1; k <= 4000; ++k) {
        pois *= m / static_cast<double>(k);
        if (pois == 0.0) break;
        total += pois * erlang_tail(k * shape, a);
        if (k > 2 * m + 50 && pois < 1e-18) break;
    }
    return total;
}

/// Sample mean and (unbiased) variance.
struct Moments {
    double mean = 0.0;
    double var = 0.0;
    double m4 = 0.0;  // fourth central moment
    std::size_t n = 0;
};

inline Moments moments(const std::vector<double>& xs) {
    Moments mo;
    mo.n = xs.size();
    double sum = 0.0, comp = 0.0;
    for (double x : xs) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    mo.mean = sum / static_cast<double>(mo.n);
    double ss = 0.0, s4 = 0.0;
    for (double x : xs) {
        const double d = x - mo.mean;
        ss += d * d;
        s4 += d * d * d * d;
    }
    mo.var = ss / static_cast<double>(mo.n - 1);
    mo.m4 = s4 / static_cast<double>(mo.n);
    return mo;
}

/// Standard error of the sample variance via the empirical fourth moment.
inline double variance_se(const Moments& mo) {
    return std::sqrt(std::max(0.0, mo.m4 - mo.var * mo.var) / static_cast<double>(mo.n));
}

}  // namespace oracles
