#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>

// Small fixed-size vector/matrix arithmetic for the d = 3, d1 = 12 setting.
// Everything is value-semantic and allocation-free so the simulation loops
// stay flat.

namespace morreylab {

inline constexpr int kDim = 3;       // spatial dimension d
inline constexpr int kNoiseDim = 12; // driving noise dimension d1

inline constexpr double kInf = std::numeric_limits<double>::infinity();

template <int N>
struct Vec {
    std::array<double, N> v{};

    double& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return v[static_cast<std::size_t>(i)]; }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < N; ++i) v[i] += o.v[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < N; ++i) v[i] -= o.v[i];
        return *this;
    }
    Vec& operator*=(double c) {
        for (int i = 0; i < N; ++i) v[i] *= c;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(double c, Vec a) { return a *= c; }
    friend Vec operator*(Vec a, double c) { return a *= c; }
    friend Vec operator-(Vec a) { return a *= -1.0; }

    friend double dot(const Vec& a, const Vec& b) {
        double s = 0;
        for (int i = 0; i < N; ++i) s += a.v[i] * b.v[i];
        return s;
    }
    friend double norm2(const Vec& a) { return dot(a, a); }
    friend double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

    bool finite() const {
        for (int i = 0; i < N; ++i)
            if (!std::isfinite(v[i])) return false;
        return true;
    }
};

using Vec3 = Vec<kDim>;

inline Vec3 vec3(double x, double y, double z) { return Vec3{{x, y, z}}; }

template <int N>
Vec<N> unit_vec(int k) {
    Vec<N> e{};
    e[k] = 1.0;
    return e;
}

// Row-major R x C matrix.
template <int R, int C>
struct Mat {
    std::array<double, static_cast<std::size_t>(R) * C> m{};

    double& operator()(int r, int c) { return m[static_cast<std::size_t>(r) * C + c]; }
    double operator()(int r, int c) const { return m[static_cast<std::size_t>(r) * C + c]; }

    Mat& operator+=(const Mat& o) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] += o.m[i];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] -= o.m[i];
        return *this;
    }
    Mat& operator*=(double c) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] *= c;
        return *this;
    }
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(double c, Mat a) { return a *= c; }

    // |c|^2 = tr(c c*), the Frobenius/Hilbert-Schmidt norm squared.
    friend double norm2(const Mat& a) {
        double s = 0;
        for (std::size_t i = 0; i < a.m.size(); ++i) s += a.m[i] * a.m[i];
        return s;
    }
    friend double norm(const Mat& a) { return std::sqrt(norm2(a)); }

    Vec<R> apply(const Vec<C>& x) const {
        Vec<R> y{};
        for (int r = 0; r < R; ++r) {
            double s = 0;
            for (int c = 0; c < C; ++c) s += (*this)(r, c) * x[c];
            y[r] = s;
        }
        return y;
    }

    bool finite() const {
        for (std::size_t i = 0; i < m.size(); ++i)
            if (!std::isfinite(m[i])) return false;
        return true;
    }
};

using Mat3 = Mat<kDim, kDim>;
using SigmaMat = Mat<kDim, kNoiseDim>;

inline Mat3 identity3(double c = 1.0) {
    Mat3 a{};
    for (int i = 0; i < kDim; ++i) a(i, i) = c;
    return a;
}

// a = sigma sigma^T.
template <int R, int C>
Mat<R, R> gram(const Mat<R, C>& s) {
    Mat<R, R> a{};
    for (int i = 0; i < R; ++i)
        for (int j = i; j < R; ++j) {
            double acc = 0;
            for (int k = 0; k < C; ++k) acc += s(i, k) * s(j, k);
            a(i, j) = acc;
            a(j, i) = acc;
        }
    return a;
}

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations. Adequate for
// the small coefficient matrices handled here.
template <int N>
std::array<double, N> symmetric_eigenvalues(Mat<N, N> a) {
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0;
        for (int p = 0; p < N; ++p)
            for (int q = p + 1; q < N; ++q) off += a(p, q) * a(p, q);
        if (off < 1e-30) break;
        for (int p = 0; p < N; ++p)
            for (int q = p + 1; q < N; ++q) {
                if (std::fabs(a(p, q)) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (int k = 0; k < N; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < N; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::array<double, N> ev{};
    for (int i = 0; i < N; ++i) ev[static_cast<std::size_t>(i)] = a(i, i);
    return ev;
}

// Magnitude of a field value, uniform over scalar/vector/matrix fields:
// |c|^2 = tr(c c*) per the notation section.
inline double magnitude(double x) { return std::fabs(x); }
template <int N>
double magnitude(const Vec<N>& x) {
    return norm(x);
}
template <int R, int C>
double magnitude(const Mat<R, C>& x) {
    return norm(x);
}

struct Ball {
    Vec3 center{};
    double radius = 0; // > 0

    bool contains(const Vec3& x) const { return norm(x - center) < radius; }
};

} // namespace morreylab
