// Deterministic randomness. Every suite derives its streams from one master
// seed through a documented split: derive_seed(master, tag) hashes the tag
// (FNV-1a) and mixes it with the master through splitmix64. All sampling is
// hand-rolled on top of std::mt19937_64 (whose sequence the standard pins),
// so identical seeds give identical results everywhere.

#pragma once

#include "cptkit/complex_matrix.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace cptkit {

constexpr std::uint64_t fnv1a(std::string_view s)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

constexpr std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::string_view tag)
{
    return splitmix64(master ^ splitmix64(fnv1a(tag)));
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index)
{
    return splitmix64(master ^ splitmix64(index * 0x9e3779b97f4a7c15ull + 1));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform()
    {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Unbiased integer in [0, n).
    std::uint64_t below(std::uint64_t n)
    {
        const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Standard normal, Box-Muller with a cached spare.
    double normal()
    {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    cplx gaussian_complex()
    {
        const double re = normal();
        const double im = normal();
        return cplx(re * 0.70710678118654752440, im * 0.70710678118654752440);
    }

    cplx unit_phase()
    {
        const double a = uniform(0.0, 6.283185307179586476925286766559);
        return cplx(std::cos(a), std::sin(a));
    }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Test/fixture helpers built on Rng.
StateVector random_state(std::size_t dim, Rng& rng);
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);
ComplexMatrix random_density(std::size_t dim, Rng& rng);

} // namespace cptkit
