#include "lazyclock/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace lazyclock {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

inline std::uint64_t splitmix64(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix2(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a ^ rotl(b + 0x9E3779B97F4A7C15ULL, 31);
    std::uint64_t z = splitmix64(s);
    return z ^ splitmix64(s);
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
    std::uint64_t s = mix2(seed, stream_id);
    for (auto& word : state_) word = splitmix64(s);
    // splitmix64 output is never all-zero over four words in practice, but
    // xoshiro requires a nonzero state.
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
}

RngStream RngStream::substream(std::uint64_t child_id) const {
    return RngStream(seed_, mix2(stream_id_ + 0x632BE59BD9B4E019ULL, child_id));
}

std::uint64_t RngStream::next_u64() {
    // xoshiro256++
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

double RngStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_pos() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::normal() {
    // Box-Muller, cosine branch only: two words per variate, no state
    // beyond the stream itself.
    const double u1 = uniform_pos();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double RngStream::exponential(double rate) {
    if (!(rate > 0.0)) throw std::domain_error("exponential: rate must be > 0");
    return -std::log(uniform_pos()) / rate;
}

double RngStream::gamma(double shape, double rate) {
    if (!(shape > 0.0) || !(rate > 0.0))
        throw std::domain_error("gamma: shape and rate must be > 0");
    if (shape < 1.0) {
        // boost to shape+1 and thin (Marsaglia-Tsang section 6)
        const double u = uniform_pos();
        return gamma(shape + 1.0, rate) * std::pow(u, 1.0 / shape);
    }
    // Marsaglia-Tsang squeeze
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform_pos();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v / rate;
    }
}

long long RngStream::poisson(double mean) {
    if (!(mean >= 0.0)) throw std::domain_error("poisson: mean must be >= 0");
    if (mean == 0.0) return 0;
    if (mean < 30.0) {
        // inversion by sequential multiplication
        const double limit = std::exp(-mean);
        long long k = 0;
        double p = uniform();
        while (p > limit) {
            p *= uniform();
            ++k;
        }
        return k;
    }
    // Hormann's PTRS transformed rejection, valid for mean >= 10.
    const double b = 0.931 + 2.53 * std::sqrt(mean);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    const double log_mean = std::log(mean);
    for (;;) {
        double u = uniform() - 0.5;
        double v = uniform();
        const double us = 0.5 - std::abs(u);
        const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= v_r) return static_cast<long long>(k);
        if (k < 0.0 || (us < 0.013 && v > us)) continue;
        if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
            k * log_mean - mean - std::lgamma(k + 1.0))
            return static_cast<long long>(k);
    }
}

double RngStream::chi_squared(double dof) {
    if (!(dof > 0.0)) throw std::domain_error("chi_squared: dof must be > 0");
    return gamma(0.5 * dof, 0.5);
}

double RngStream::noncentral_chi_squared(double dof, double noncentrality) {
    if (!(dof > 0.0) || !(noncentrality >= 0.0))
        throw std::domain_error("noncentral_chi_squared: need dof > 0, noncentrality >= 0");
    // Poisson mixture of central chi-squared draws: exact for any dof.
    const long long j = poisson(0.5 * noncentrality);
    return chi_squared(dof + 2.0 * static_cast<double>(j));
}

double RngStream::beta(double alpha, double beta_param) {
    if (!(alpha > 0.0) || !(beta_param > 0.0))
        throw std::domain_error("beta: parameters must be > 0");
    const double x = gamma(alpha, 1.0);
    const double y = gamma(beta_param, 1.0);
    return x / (x + y);
}

double draw(DrawKind kind, double p1, double p2, RngStream& rng) {
    switch (kind) {
        case DrawKind::uniform: return rng.uniform();
        case DrawKind::normal: return rng.normal();
        case DrawKind::exponential: return rng.exponential(p1);
        case DrawKind::gamma: return rng.gamma(p1, p2);
        case DrawKind::poisson: return static_cast<double>(rng.poisson(p1));
        case DrawKind::noncentral_chi_squared: return rng.noncentral_chi_squared(p1, p2);
    }
    throw std::invalid_argument("draw: unknown kind");
}

}  // namespace lazyclock
