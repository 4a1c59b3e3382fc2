#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace morreylab {

struct MeanSE {
    double mean = 0;
    double se = 0; // standard error of the mean
    std::size_t n = 0;
};

// Serial fold in index order: deterministic regardless of how the samples
// were produced.
inline MeanSE mean_se(std::span<const double> xs) {
    MeanSE r;
    r.n = xs.size();
    if (r.n == 0) return r;
    double s = 0;
    for (double x : xs) s += x;
    r.mean = s / static_cast<double>(r.n);
    if (r.n < 2) return r;
    double q = 0;
    for (double x : xs) {
        const double d = x - r.mean;
        q += d * d;
    }
    const double var = q / static_cast<double>(r.n - 1);
    r.se = std::sqrt(var / static_cast<double>(r.n));
    return r;
}

struct LinearFit {
    double slope = 0;
    double intercept = 0;
    double r_squared = 0; // coefficient of determination
    std::size_t n = 0;
};

inline LinearFit ols_fit(std::span<const double> x, std::span<const double> y) {
    LinearFit f;
    f.n = std::min(x.size(), y.size());
    if (f.n < 2) return f;
    const double n = static_cast<double>(f.n);
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < f.n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < f.n; ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0) return f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r_squared = (syy == 0) ? 1.0 : (sxy * sxy) / (sxx * syy);
    return f;
}

// Two-sample Kolmogorov-Smirnov distance. Inputs need not be sorted.
inline double ks_distance(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) return 1.0;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    std::size_t ia = 0, ib = 0;
    double d = 0;
    while (ia < a.size() && ib < b.size()) {
        if (a[ia] <= b[ib])
            ++ia;
        else
            ++ib;
        const double fa = static_cast<double>(ia) / na;
        const double fb = static_cast<double>(ib) / nb;
        d = std::max(d, std::fabs(fa - fb));
    }
    return d;
}

// Empirical quantile (linear interpolation), p in [0,1].
inline double quantile(std::vector<double> xs, double p) {
    if (xs.empty()) return 0;
    std::sort(xs.begin(), xs.end());
    const double pos = p * static_cast<double>(xs.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= xs.size()) return xs.back();
    const double frac = pos - static_cast<double>(lo);
    return xs[lo] * (1 - frac) + xs[lo + 1] * frac;
}

} // namespace morreylab
