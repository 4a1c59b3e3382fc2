#pragma once

#include <cstdint>
#include <cmath>
#include <numbers>

// Counter-based random numbers (Philox 4x32-10, Salmon et al. 2011).
//
// Streams are keyed by (master_seed, stream_id, tag) and indexed by a block
// counter, so any path of any batch can be generated independently of
// scheduling. All derived quantities (uniform doubles, normal pairs) are
// produced by fixed formulas; nothing is implementation-defined, which is
// what makes batches bit-reproducible across worker counts and platforms.

namespace morreylab {

struct PhiloxBlock {
    std::uint32_t x[4];
};

namespace detail {

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    lo = static_cast<std::uint32_t>(p);
    hi = static_cast<std::uint32_t>(p >> 32);
}

// splitmix64: used only to decorrelate user-provided seeds into philox keys.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

} // namespace detail

inline PhiloxBlock philox4x32(std::uint32_t c0, std::uint32_t c1, std::uint32_t c2,
                              std::uint32_t c3, std::uint32_t k0, std::uint32_t k1) {
    constexpr std::uint32_t kWeylA = 0x9E3779B9u, kWeylB = 0xBB67AE85u;
    constexpr std::uint32_t kMulA = 0xD2511F53u, kMulB = 0xCD9E8D57u;
    for (int round = 0; round < 10; ++round) {
        std::uint32_t lo0, hi0, lo1, hi1;
        detail::mulhilo(kMulA, c0, lo0, hi0);
        detail::mulhilo(kMulB, c2, lo1, hi1);
        const std::uint32_t n0 = hi1 ^ c1 ^ k0;
        const std::uint32_t n1 = lo1;
        const std::uint32_t n2 = hi0 ^ c3 ^ k1;
        const std::uint32_t n3 = lo0;
        c0 = n0; c1 = n1; c2 = n2; c3 = n3;
        k0 += kWeylA;
        k1 += kWeylB;
    }
    return PhiloxBlock{{c0, c1, c2, c3}};
}

// One logical stream = one (seed, stream, tag) triple; `next_*` advances the
// block counter. Copyable; copies continue independently from the same point.
class RandomStream {
public:
    RandomStream(std::uint64_t master_seed, std::uint64_t stream_id, std::uint32_t tag = 0) {
        const std::uint64_t k = detail::splitmix64(master_seed);
        key0_ = static_cast<std::uint32_t>(k);
        key1_ = static_cast<std::uint32_t>(k >> 32);
        stream_lo_ = static_cast<std::uint32_t>(stream_id);
        stream_hi_ = static_cast<std::uint32_t>(stream_id >> 32) ^ tag;
        counter_ = 0;
    }

    PhiloxBlock next_block() {
        const std::uint32_t c0 = static_cast<std::uint32_t>(counter_);
        const std::uint32_t c1 = static_cast<std::uint32_t>(counter_ >> 32);
        ++counter_;
        return philox4x32(c0, c1, stream_lo_, stream_hi_, key0_, key1_);
    }

    // Two uniforms in (0, 1], 53-bit resolution, from one block.
    void next_uniform2(double& u0, double& u1) {
        const PhiloxBlock b = next_block();
        const std::uint64_t a = (static_cast<std::uint64_t>(b.x[0]) << 32) | b.x[1];
        const std::uint64_t c = (static_cast<std::uint64_t>(b.x[2]) << 32) | b.x[3];
        u0 = static_cast<double>((a >> 11) + 1) * 0x1.0p-53;
        u1 = static_cast<double>((c >> 11) + 1) * 0x1.0p-53;
    }

    double next_uniform() {
        if (have_spare_u_) {
            have_spare_u_ = false;
            return spare_u_;
        }
        double u0, u1;
        next_uniform2(u0, u1);
        spare_u_ = u1;
        have_spare_u_ = true;
        return u0;
    }

    // Standard normal pair by Box-Muller; u in (0,1] keeps the log finite.
    void next_normal2(double& z0, double& z1) {
        double u0, u1;
        next_uniform2(u0, u1);
        const double r = std::sqrt(-2.0 * std::log(u0));
        const double a = 2.0 * std::numbers::pi * u1;
        z0 = r * std::cos(a);
        z1 = r * std::sin(a);
    }

    double next_normal() {
        if (have_spare_n_) {
            have_spare_n_ = false;
            return spare_n_;
        }
        double z0, z1;
        next_normal2(z0, z1);
        spare_n_ = z1;
        have_spare_n_ = true;
        return z0;
    }

    // Fill n standard normals.
    void fill_normals(double* out, int n) {
        int i = 0;
        for (; i + 1 < n; i += 2) next_normal2(out[i], out[i + 1]);
        if (i < n) out[i] = next_normal();
    }

private:
    std::uint32_t key0_, key1_, stream_lo_, stream_hi_;
    std::uint64_t counter_;
    double spare_u_ = 0, spare_n_ = 0;
    bool have_spare_u_ = false, have_spare_n_ = false;
};

// Per-path seed derivation: a pure function of (master_seed, path index),
// independent of which worker generates the path.
inline RandomStream path_stream(std::uint64_t master_seed, std::uint64_t path_index,
                                std::uint32_t tag = 0) {
    return RandomStream(master_seed, path_index, tag);
}

} // namespace morreylab
