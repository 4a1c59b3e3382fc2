#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <numbers>
#include <vector>

#include "morreylab/core.hpp"
#include "morreylab/rng.hpp"

// Deterministic quadrature building blocks: Halton points with a
// Cranley-Patterson rotation derived from the integration region (so the
// same ball always gets the same nodes, and distinct balls get decorrelated
// ones), Fibonacci sphere nodes, and Gauss-Legendre rules.

namespace morreylab {

inline double halton(std::uint64_t index, int base) {
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= base;
        r += f * static_cast<double>(index % static_cast<std::uint64_t>(base));
        index /= static_cast<std::uint64_t>(base);
    }
    return r;
}

inline std::uint64_t hash_bytes(const void* data, std::size_t n, std::uint64_t h = 0xcbf29ce484222325ull) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint64_t hash_double(double x, std::uint64_t h = 0xcbf29ce484222325ull) {
    std::uint64_t bits;
    std::memcpy(&bits, &x, sizeof bits);
    return hash_bytes(&bits, sizeof bits, h);
}

inline std::uint64_t ball_hash(const Ball& b, std::uint64_t salt = 0) {
    std::uint64_t h = hash_double(b.radius);
    for (int i = 0; i < kDim; ++i) h = hash_double(b.center[i], h);
    return h ^ detail::splitmix64(salt);
}

// n quasi-uniform points inside the unit ball: Halton (2,3,5) with a
// per-region rotation, mapped volume-uniformly (r = u^{1/3}).
inline std::vector<Vec3> unit_ball_nodes(int n, std::uint64_t seed) {
    std::vector<Vec3> pts;
    pts.reserve(static_cast<std::size_t>(n));
    const double o0 = static_cast<double>(detail::splitmix64(seed ^ 1) >> 11) * 0x1.0p-53;
    const double o1 = static_cast<double>(detail::splitmix64(seed ^ 2) >> 11) * 0x1.0p-53;
    const double o2 = static_cast<double>(detail::splitmix64(seed ^ 3) >> 11) * 0x1.0p-53;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t k = static_cast<std::uint64_t>(i) + 1;
        double u0 = halton(k, 2) + o0;
        double u1 = halton(k, 3) + o1;
        double u2 = halton(k, 5) + o2;
        u0 -= std::floor(u0);
        u1 -= std::floor(u1);
        u2 -= std::floor(u2);
        const double r = std::cbrt(u0);
        const double c = 2 * u1 - 1; // cos(theta)
        const double s = std::sqrt(std::max(0.0, 1 - c * c));
        const double phi = 2 * std::numbers::pi * u2;
        pts.push_back(vec3(r * s * std::cos(phi), r * s * std::sin(phi), r * c));
    }
    return pts;
}

// Quasi-uniform directions on S^2 (Fibonacci lattice). Each node carries an
// equal-weight share 4*pi/n of the sphere.
inline std::vector<Vec3> fibonacci_sphere(int n) {
    std::vector<Vec3> pts;
    pts.reserve(static_cast<std::size_t>(n));
    const double ga = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < n; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / n;
        const double r = std::sqrt(std::max(0.0, 1 - z * z));
        const double phi = ga * i;
        pts.push_back(vec3(r * std::cos(phi), r * std::sin(phi), z));
    }
    return pts;
}

struct Quadrature1D {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights; // sum to 2
};

// Nodes by Newton iteration on the Legendre polynomial.
inline Quadrature1D gauss_legendre(int n) {
    Quadrature1D q;
    q.nodes.resize(static_cast<std::size_t>(n));
    q.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = 0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) * x * p1 - j * p2) / (j + 1);
            }
            pp = n * (x * p0 - p1) / (x * x - 1);
            const double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        q.nodes[static_cast<std::size_t>(i)] = x;
        q.weights[static_cast<std::size_t>(i)] = 2.0 / ((1 - x * x) * pp * pp);
    }
    return q;
}

// Integral of fn over [a, b] with a Gauss-Legendre rule.
template <typename Fn>
double integrate_gl(Fn&& fn, double a, double b, const Quadrature1D& q) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0;
    for (std::size_t i = 0; i < q.nodes.size(); ++i)
        s += q.weights[i] * fn(mid + half * q.nodes[i]);
    return s * half;
}

// Distance from an interior point `from` to the boundary of `ball` in
// direction `dir` (|dir| = 1).
inline double ray_exit_distance(const Ball& ball, const Vec3& from, const Vec3& dir) {
    const Vec3 d = from - ball.center;
    const double b = dot(d, dir);
    const double disc = b * b + ball.radius * ball.radius - dot(d, d);
    return -b + std::sqrt(std::max(0.0, disc));
}

inline double ball_volume(double radius) {
    return 4.0 / 3.0 * std::numbers::pi * radius * radius * radius;
}

} // namespace morreylab
