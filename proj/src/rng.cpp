#include "hdsnr/rng.hpp"

#include "hdsnr/normal.hpp"

namespace hdsnr {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
}

std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

StreamRng::StreamRng(std::uint64_t seed)
    : identity_(seed), engine_(splitmix64_mix(seed + kGamma)) {}

StreamRng StreamRng::child(std::uint64_t k) const {
    return StreamRng(splitmix64_mix(identity_ + (k + 1) * kGamma));
}

std::uint64_t StreamRng::next_u64() { return engine_(); }

double StreamRng::uniform() {
    // 53-bit mantissa, offset by half an ulp so the result is never 0 or 1.
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double StreamRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double StreamRng::normal() { return normal_quantile(uniform()); }

std::uint64_t StreamRng::below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x > limit);
    return x % bound;
}

}  // namespace hdsnr
