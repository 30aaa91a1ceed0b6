#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <random>
#include <vector>

namespace monocirc {

/// Uniform point in {lo..hi}^k. Reproducible for a given engine state.
inline std::vector<mpz_class> random_point(std::mt19937_64& rng, std::size_t k, unsigned lo, unsigned hi) {
    std::uniform_int_distribution<unsigned> dist(lo, hi);
    std::vector<mpz_class> p;
    p.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        p.emplace_back(dist(rng));
    }
    return p;
}

} // namespace monocirc
