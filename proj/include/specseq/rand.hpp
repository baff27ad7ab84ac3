#pragma once

#include <cstdint>
#include <random>

#include "specseq/subspace.hpp"

namespace specseq {

// Seeded generator for test corpora. mt19937_64 is bit-exact across
// platforms and all draws go through next(), so every consumer is
// deterministic in its seed.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    // uniform-enough draw in [0, bound); bound tiny versus 2^64
    uint64_t next(uint64_t bound) { return bound <= 1 ? 0 : eng_() % bound; }

private:
    std::mt19937_64 eng_;
};

Vec random_vector(Rng& rng, uint32_t p, size_t n);
Mat random_matrix(Rng& rng, uint32_t p, size_t rows, size_t cols);
Mat random_invertible(Rng& rng, uint32_t p, size_t n);
Subspace random_subspace(Rng& rng, uint32_t p, size_t ambient);
Subspace random_subspace_of(Rng& rng, const Subspace& s);
// s plus a few random vectors
Subspace random_superspace(Rng& rng, const Subspace& s);

}  // namespace specseq
