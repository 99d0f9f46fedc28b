#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace isofdp {

/// Random stream shared by every seeded component.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The standard distributions are not (their algorithms are
/// implementation-defined), so all draws go through the helpers below,
/// which only consume raw 64-bit engine outputs. Same seed, same numbers,
/// on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound), bound > 0. Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound);

    /// Fisher-Yates shuffle driven by below().
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Sub-seed for counter `index` under `master`:
///   splitmix64(master + (index + 1) * 0x9E3779B97F4A7C15).
/// Each (master, index) pair names one independent stream, so any single
/// trial can be regenerated without running the others.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace isofdp
