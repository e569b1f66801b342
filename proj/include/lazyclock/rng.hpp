#pragma once

#include <array>
#include <cstdint>

namespace lazyclock {

// Seedable, splittable random stream. The core generator is xoshiro256++
// seeded through splitmix64 from a (seed, stream_id) hash, so the sequence
// is identical across platforms and distinct stream ids behave as
// independent generators. All variate algorithms are implemented here (no
// std::*_distribution), which keeps output bit-reproducible.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    // Derive a stream that behaves independently of this one. Children with
    // distinct ids are mutually independent; derivation does not advance
    // this stream.
    RngStream substream(std::uint64_t child_id) const;

    std::uint64_t next_u64();

    double uniform();      // [0, 1)
    double uniform_pos();  // (0, 1)
    double normal();       // standard normal
    double exponential(double rate);
    double gamma(double shape, double rate);
    long long poisson(double mean);
    double chi_squared(double dof);
    double noncentral_chi_squared(double dof, double noncentrality);
    double beta(double alpha, double beta_param);

private:
    std::array<std::uint64_t, 4> state_{};
    std::uint64_t seed_ = 0;
    std::uint64_t stream_id_ = 0;
};

// Generic draw dispatch matching the distribution kinds used by the
// validation harness. Parameter meaning per kind:
//   uniform                 -- (ignored, ignored)
//   normal                  -- (ignored, ignored)
//   exponential             -- (rate, ignored)
//   gamma                   -- (shape, rate)
//   poisson                 -- (mean, ignored)
//   noncentral_chi_squared  -- (dof, noncentrality)
enum class DrawKind {
    uniform,
    normal,
    exponential,
    gamma,
    poisson,
    noncentral_chi_squared,
};

double draw(DrawKind kind, double p1, double p2, RngStream& rng);

}  // namespace lazyclock
