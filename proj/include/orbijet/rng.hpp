#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace orbijet {

// Deterministic random stream. mt19937_64 output is pinned by the
// standard, and all variate recipes below are spelled out here, so a
// given seed produces the same values on every platform. Substreams are
// derived from the base seed, never from consumed state, which keeps
// chunked/parallel sampling reproducible.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1) from the top 53 bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Box-Muller pair, one value cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01(), u2 = uniform01();
        while (u1 == 0.0) u1 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * M_PI * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    double exponential() {
        double u = uniform01();
        while (u == 0.0) u = uniform01();
        return -std::log(u);
    }

    // Gamma(shape, 1) for integer shape: sum of exponentials.
    double gamma_int(int shape) {
        double g = 0.0;
        for (int i = 0; i < shape; ++i) g += exponential();
        return g;
    }

    RandomStream substream(std::uint64_t index) const {
        return RandomStream(splitmix64(seed_ + 0x9E3779B97F4A7C15ULL * (index + 1)));
    }

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Point of the unit sphere of C^r under the unitary-invariant measure:
// 2r independent standard normals, normalized.
inline Eigen::VectorXcd sample_unit_sphere(int r, RandomStream& rs) {
    Eigen::VectorXcd u(r);
    double norm2;
    do {
        norm2 = 0.0;
        for (int i = 0; i < r; ++i) {
            const double a = rs.normal(), b = rs.normal();
            u[i] = std::complex<double>(a, b);
            norm2 += a * a + b * b;
        }
    } while (norm2 == 0.0);
    return u / std::sqrt(norm2);
}

// Point of the (k-1)-simplex under the measure with density proportional
// to (x_1...x_k)^{r-1}: k independent Gamma(r,1) variates, normalized.
inline Eigen::VectorXd sample_simplex(int k, int r, RandomStream& rs) {
    Eigen::VectorXd x(k);
    for (int i = 0; i < k; ++i) x[i] = rs.gamma_int(r);
    return x / x.sum();
}

}  // namespace orbijet
