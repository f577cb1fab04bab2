#pragma once

#include <cstdint>

namespace walkres {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen over std::mt19937_64 because
// the stream for a given seed is trivially documented (three xor-shift-multiply
// lines) and splitting gives every walk its own reproducible substream.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Derive an independent generator; advances this one by one step.
    SplitMix64 split() { return SplitMix64(next() ^ 0x6a09e667f3bcc909ULL); }

    // Unbiased integer in [0, bound) by rejection on the top of the range.
    std::uint64_t uniform_below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

  private:
    std::uint64_t state_;
};

}  // namespace walkres
