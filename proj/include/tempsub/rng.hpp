#pragma once

#include <cmath>
#include <cstdint>

namespace tempsub {

/// Seeded, stream-addressable PRNG (xoshiro256++ seeded through splitmix64).
///
/// Identical (seed, stream_id) pairs reproduce identical draw sequences
/// across runs and thread counts; parallel Monte Carlo assigns one stream
/// per replica. All variate transforms are implemented here rather than
/// taken from <random>, whose algorithms are implementation-defined.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id) : seed_(seed), stream_(stream_id) {
        std::uint64_t w = seed ^ (0x9E3779B97F4A7C15ull * (stream_id + 0x632BE59BD9B4E019ull));
        for (auto& s : state_) s = splitmix64(w);
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    [[nodiscard]] std::uint64_t seed() const { return seed_; }
    [[nodiscard]] std::uint64_t stream() const { return stream_; }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform strictly inside (0, 1).
    double uniform_pos() {
        return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
    }

    /// Exp(1), strictly positive.
    double exponential() { return -std::log(uniform_pos()); }

    /// Standard normal (Box-Muller, one variate per pair of uniforms).
    double normal() {
        const double r = std::sqrt(2.0 * exponential());
        return r * std::cos(6.283185307179586476925286766559 * uniform());
    }

    /// Gamma(shape, scale), Marsaglia-Tsang; shape 0 yields 0.
    double gamma(double shape, double scale) {
        if (shape == 0.0) return 0.0;
        if (shape < 1.0) {
            const double boost = std::pow(uniform_pos(), 1.0 / shape);
            return gamma(shape + 1.0, scale) * boost;
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        while (true) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform_pos();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v * scale;
        }
    }

    /// Poisson(mu): Knuth's product method for small mu, Hörmann's
    /// transformed rejection (PTRS) for large mu.
    long long poisson(double mu) {
        if (!(mu > 0.0)) return 0;
        if (mu < 10.0) {
            const double limit = std::exp(-mu);
            long long k = 0;
            double prod = uniform();
            while (prod > limit) {
                ++k;
                prod *= uniform();
            }
            return k;
        }
        const double b = 0.931 + 2.53 * std::sqrt(mu);
        const double a = -0.059 + 0.02483 * b;
        const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
        const double vr = 0.9277 - 3.6224 / (b - 2.0);
        const double log_mu = std::log(mu);
        while (true) {
            const double u = uniform() - 0.5;
            const double v = uniform();
            const double us = 0.5 - std::fabs(u);
            const double kf = std::floor((2.0 * a / us + b) * u + mu + 0.43);
            if (us >= 0.07 && v <= vr) return static_cast<long long>(kf);
            if (kf < 0.0 || (us < 0.013 && v > us)) continue;
            const long long k = static_cast<long long>(kf);
            if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
                k * log_mu - mu - std::lgamma(static_cast<double>(k) + 1.0)) {
                return k;
            }
        }
    }

    /// One-sided stable variate with E[exp(-s X)] = exp(-s^gamma), gamma in (0,1).
    /// Kanter's representation: X = A(U)^{1/gamma} * E^{-(1-gamma)/gamma} with
    /// A(u) = sin(gamma u)^gamma sin((1-gamma) u)^{1-gamma} / sin(u), U ~ U(0, pi).
    double one_sided_stable(double gamma) {
        const double u = 3.14159265358979323846 * uniform_pos();
        const double e = exponential();
        double lx = std::log(std::sin(gamma * u)) +
                    ((1.0 - gamma) / gamma) * std::log(std::sin((1.0 - gamma) * u)) -
                    (1.0 / gamma) * std::log(std::sin(u)) -
                    ((1.0 - gamma) / gamma) * std::log(e);
        if (lx > 700.0) lx = 700.0;  // tail draw beyond double range; clamp
        return std::exp(lx);
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static std::uint64_t splitmix64(std::uint64_t& w) {
        std::uint64_t z = (w += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t state_[4];
};

}  // namespace tempsub
