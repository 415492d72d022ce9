// rng.hpp -- seeded randomness whose output is identical on every platform.
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace mmkit {

// std::mt19937_64 is pinned by the standard, the distribution classes are
// not. Drawing bounded values by hand keeps seeded runs byte-identical
// across compilers.
struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    // uniform draw from [0, n)
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("rng: empty range");
        std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
        std::uint64_t v;
        do v = engine(); while (v >= limit);
        return v % n;
    }

    int below_int(int n) { return (int)below((std::uint64_t)n); }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t k = v.size(); k > 1; k--)
            std::swap(v[k - 1], v[below(k)]);
    }
};

} // namespace mmkit
