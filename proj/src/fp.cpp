#include "specseq/fp.hpp"

#include <utility>

namespace specseq {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint32_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

uint32_t Fp::inv(uint32_t a) const {
    if (a == 0) throw std::invalid_argument("Fp::inv: zero is not invertible");
    // extended Euclid on (p, a)
    int64_t t = 0, next_t = 1;
    int64_t r = p_, next_r = a;
    while (next_r != 0) {
        int64_t q = r / next_r;
        t = std::exchange(next_t, t - q * next_t);
        r = std::exchange(next_r, r - q * next_r);
    }
    if (t < 0) t += p_;
    return static_cast<uint32_t>(t);
}

}  // namespace specseq
