#pragma once

#include <cstdint>
#include <random>

namespace hdsnr {

/// Seedable random stream with cheap, collision-resistant substream derivation.
///
/// The generator is a std::mt19937_64 engine whose 64-bit seed is produced by
/// the SplitMix64 finalizer, so every stream is identified by a single 64-bit
/// value.  Substream k of a stream with identity s is the stream with
/// identity splitmix64(s + (k+1)*GAMMA); derivation depends only on the
/// stream identity, never on how many variates have been drawn.  This gives a
/// deterministic seed tree: the same (master seed, substream path) yields the
/// same draws on every platform and under any parallel schedule.
///
/// Normal variates use inversion (normal_quantile of a 53-bit uniform), which
/// is fully specified, unlike std::normal_distribution.
class StreamRng {
public:
    explicit StreamRng(std::uint64_t seed);

    /// Substream k of this stream.  Independent of draw position.
    StreamRng child(std::uint64_t k) const;

    /// Next raw 64-bit engine output.
    std::uint64_t next_u64();

    /// Uniform on the open interval (0,1), 53-bit resolution.
    double uniform();

    /// Uniform on (lo, hi).
    double uniform(double lo, double hi);

    /// Standard normal variate by inversion.
    double normal();

    /// Uniform integer in {0, ..., bound-1} via rejection (unbiased).
    std::uint64_t below(std::uint64_t bound);

    std::uint64_t identity() const { return identity_; }

private:
    std::uint64_t identity_;
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer (Stafford mix13): maps a 64-bit value to a
/// well-distributed 64-bit value.
std::uint64_t splitmix64_mix(std::uint64_t z);

}  // namespace hdsnr
