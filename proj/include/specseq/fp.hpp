#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace specseq {

bool is_prime(uint32_t n);

// Arithmetic context for the prime field F_p. Scalars are canonical
// residues in [0, p) stored as uint32_t; products go through uint64_t,
// so any prime below 2^31 is safe.
class Fp {
public:
    explicit Fp(uint32_t p) : p_(p) {
        if (!is_prime(p))
            throw std::invalid_argument("Fp: modulus " + std::to_string(p) + " is not prime");
    }

    uint32_t prime() const { return p_; }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
    }
    uint32_t inv(uint32_t a) const;

    // Canonical residue of an arbitrary signed integer.
    uint32_t reduce(long long x) const {
        long long r = x % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<uint32_t>(r);
    }

    bool operator==(const Fp&) const = default;

private:
    uint32_t p_;
};

}  // namespace specseq
