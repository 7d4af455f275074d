#pragma once

// Small statistical kernel shared across the estimators: moments, mid-ranks,
// order-statistic quantiles, the normal CDF/quantile pair, rank correlation,
// and an autocorrelation-based effective sample size for MCMC output.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace cdd {

inline double mean(std::span<const double> x) {
    if (x.empty()) throw std::invalid_argument("mean of empty sequence");
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

// Population variance (divisor n), two-pass.
inline double population_variance(std::span<const double> x) {
    const double m = mean(x);
    double s = 0.0;
    for (double v : x) {
        const double d = v - m;
        s += d * d;
    }
    return s / static_cast<double>(x.size());
}

// Mid-ranks (1-based); tied values share the average of their positions.
inline std::vector<double> mid_ranks(std::span<const double> x) {
    const std::size_t n = x.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
        const double r = 0.5 * static_cast<double>(i + j) + 1.0;  // average position
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
        i = j + 1;
    }
    return ranks;
}

// Quantile of a sorted sequence with linear interpolation between order
// statistics (the common "type 7" rule). Written as a convex combination so
// that quantile(-x, p) == -quantile(x, 1-p) holds bit-exactly.
inline double quantile_sorted(std::span<const double> sorted, double p) {
    if (sorted.empty()) throw std::invalid_argument("quantile of empty sequence");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("quantile level outside [0,1]");
    const std::size_t n = sorted.size();
    const double h = p * static_cast<double>(n - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= n) return sorted[n - 1];
    const double g = h - static_cast<double>(lo);
    return (1.0 - g) * sorted[lo] + g * sorted[lo + 1];
}

struct Interval {
    double lower = 0.0;
    double upper = 0.0;
    double level = 0.0;
};

// Equal-tailed interval from a sample: lower at (1-level)/2, upper mirrored
// through the order statistics so negating the sample mirrors the interval
// exactly. Sorts its argument.
inline Interval equal_tail_interval(std::vector<double> draws, double level) {
    if (draws.empty()) throw std::invalid_argument("interval of empty sequence");
    if (!(level > 0.0 && level < 1.0)) throw std::invalid_argument("level outside (0,1)");
    std::sort(draws.begin(), draws.end());
    const std::size_t n = draws.size();
    const double p = 0.5 * (1.0 - level);
    const double h = p * static_cast<double>(n - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    const double g = h - static_cast<double>(lo);
    const double lower = (1.0 - g) * draws[lo] + g * draws[std::min(lo + 1, n - 1)];
    const std::size_t hi = n - 1 - lo;
    const double upper = (1.0 - g) * draws[hi] + g * draws[hi == 0 ? 0 : hi - 1];
    return {lower, upper, level};
}

// Standard normal CDF.
inline double norm_cdf(double x) {
    return 0.5 * std::erfc(-x * 0.70710678118654752440084436210485);
}

// Standard normal quantile, Wichura's PPND16 rational approximations
// (relative error below 1e-15 on (0,1)).
inline double norm_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("norm_quantile needs p in (0,1)");
    const double q = p - 0.5;
    if (std::fabs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                     6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
                   1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
                 1.3314166789178437745e+2) * r + 3.3871328727963666080e+0) /
               (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                     3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
                   5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
                 4.2313330701600911252e+1) * r + 1.0);
    }
    double r = (q < 0.0) ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double value;
    if (r <= 5.0) {
        r -= 1.6;
        value = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                      2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
                    3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
                  4.63033784615654529590e+0) * r + 1.42343711074968357734e+0) /
                (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                      1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                    6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
                  2.05319162663775882187e+0) * r + 1.0);
    } else {
        r -= 5.0;
        value = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                      1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                    2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
                  5.46378491116411436990e+0) * r + 6.65790464350110377720e+0) /
                (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                      1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                    1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
                  5.99832206555887937690e-1) * r + 1.0);
    }
    return (q < 0.0) ? -value : value;
}

// Spearman rank correlation (Pearson correlation of mid-ranks).
inline double sample_spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("sample_spearman needs two sequences of equal length >= 2");
    const std::vector<double> rx = mid_ranks(x);
    const std::vector<double> ry = mid_ranks(y);
    const double mx = mean(rx);
    const double my = mean(ry);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        const double dx = rx[i] - mx;
        const double dy = ry[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

// Effective sample size via Geyer's initial positive sequence: autocovariance
// pairs are summed until a pair turns non-positive.
inline double effective_sample_size(std::span<const double> chain) {
    const std::size_t n = chain.size();
    if (n < 4) return static_cast<double>(n);
    const double m = mean(chain);
    std::vector<double> centered(n);
    for (std::size_t i = 0; i < n; ++i) centered[i] = chain[i] - m;
    auto autocov = [&](std::size_t lag) {
        double s = 0.0;
        for (std::size_t i = 0; i + lag < n; ++i) s += centered[i] * centered[i + lag];
        return s / static_cast<double>(n);
    };
    const double c0 = autocov(0);
    if (c0 <= 0.0) return static_cast<double>(n);
    double tau = -1.0;  // -rho_0 + 2 * sum of positive pairs
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        const double pair = (autocov(k) + autocov(k + 1)) / c0;
        if (pair <= 0.0) break;
        tau += 2.0 * pair;
    }
    tau = std::max(tau, 1.0 / static_cast<double>(n));
    return std::min(static_cast<double>(n), static_cast<double>(n) / tau);
}

}  // namespace cdd
