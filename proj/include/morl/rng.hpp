#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace morl {

/// SplitMix64 (Steele, Lea, Flood 2014). One 64-bit word of state, so streams
/// are cheap to derive and the output sequence is identical on every platform.
///
/// Derived quantities:
///   uniform()  = (next() >> 11) * 2^-53, in [0, 1)
///   normal()   = Box-Muller cosine branch, sqrt(-2 ln(1 - u1)) * cos(2 pi u2);
///                each call consumes exactly two words
///   index(n)   = high 64 bits of next() * n (multiply-shift, bias < n / 2^64)
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed = 0) noexcept : state_(seed) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept { return next(); }

    std::uint64_t next() noexcept;
    double uniform() noexcept;
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
    double normal() noexcept;
    std::size_t index(std::size_t n) noexcept;

    std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t state_;
};

/// SplitMix64 finalizer applied to a single word.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Derives an independent stream seed from a parent seed and a key path, e.g.
/// derive_seed(master, {algorithm_id, run}). Order of keys matters.
std::uint64_t derive_seed(std::uint64_t parent, std::initializer_list<std::uint64_t> keys) noexcept;

/// FNV-1a of a string, for keying streams by names.
std::uint64_t hash_name(const char* name) noexcept;

} // namespace morl
