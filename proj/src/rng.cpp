#include "morl/rng.hpp"

#include <cmath>
#include <numbers>

namespace morl {

namespace {
constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::next() noexcept
{
    state_ += golden_gamma;
    return mix64(state_);
}

double Rng::uniform() noexcept
{
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Rng::normal() noexcept
{
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::size_t Rng::index(std::size_t n) noexcept
{
    const auto wide = static_cast<unsigned __int128>(next()) * static_cast<unsigned __int128>(n);
    return static_cast<std::size_t>(wide >> 64);
}

std::uint64_t derive_seed(std::uint64_t parent, std::initializer_list<std::uint64_t> keys) noexcept
{
    std::uint64_t h = mix64(parent + golden_gamma);
    for (auto k : keys)
        h = mix64(h ^ mix64(k + golden_gamma));
    return h;
}

std::uint64_t hash_name(const char* name) noexcept
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (; *name; ++name) {
        h ^= static_cast<unsigned char>(*name);
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace morl
