#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specseq/complex.hpp"

namespace specseq::suite {

struct FamilyResult {
    std::string name;
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;  // first few, for diagnostics

    FamilyResult() = default;
    explicit FamilyResult(std::string n) : name(std::move(n)) {}

    bool ok() const { return failed == 0; }
    void tally(bool good, const std::string& what) {
        if (good) {
            ++passed;
        } else {
            ++failed;
            if (failures.size() < 8) failures.push_back(what);
        }
    }
};

// Randomized subspace-lattice identities. Each trial draws fresh subspaces
// (and maps, where needed) over one of the given primes with ambient
// dimension up to max_ambient.

// a <= c implies a + (b & c) = (a + b) & c
FamilyResult modular_law(int trials, const std::vector<uint32_t>& primes, size_t max_ambient,
                         uint64_t seed);
// along a chain c_1 <= ... <= c_k and a <= b: the join of a + c_i & b is
// attained at c_k, the meet at c_1
FamilyResult chain_limits(int trials, const std::vector<uint32_t>& primes, size_t max_ambient,
                          uint64_t seed);
// the four butterfly subquotients have one dimension and the connecting
// maps are invertible
FamilyResult butterfly_isomorphisms(int trials, const std::vector<uint32_t>& primes,
                                    size_t max_ambient, uint64_t seed);
// f(b & d) = b' & d' forces the induced wing-to-wing map onto. That
// equality is the whole hypothesis: b is not assumed to be the preimage
// of b', even though textbook arguments sometimes lean on that.
FamilyResult surjectivity_criterion(int trials, const std::vector<uint32_t>& primes,
                                    size_t max_ambient, uint64_t seed);
// a + c = f^{-1}(a' + c') forces the induced map one-to-one
FamilyResult injectivity_criterion(int trials, const std::vector<uint32_t>& primes,
                                   size_t max_ambient, uint64_t seed);
// pulled-back numerator pair plus pushed-forward denominator pair forces
// an isomorphism
FamilyResult pullback_pushforward_iso(int trials, const std::vector<uint32_t>& primes,
                                      size_t max_ambient, uint64_t seed);
// induced(g o f) = induced(g) * induced(f) on composable subquotient data
FamilyResult induced_composition(int trials, const std::vector<uint32_t>& primes,
                                 size_t max_ambient, uint64_t seed);
// canonical outputs do not depend on how the input spans are presented,
// and dim u + dim v = dim(u + v) + dim(u & v)
FamilyResult lattice_canonicality(int trials, const std::vector<uint32_t>& primes,
                                  size_t max_ambient, uint64_t seed);

// Element-enumeration cross-checks (oracle), capped ambient dimensions.
FamilyResult lattice_oracle_equivalence(int trials, const std::vector<uint32_t>& primes,
                                        size_t max_ambient, uint64_t seed);
// page dimensions of random complexes against brute coset counts
FamilyResult complex_oracle_equivalence(int trials, uint64_t seed, uint32_t prime,
                                        size_t max_total_dim, int max_filt_range);

// Everything checkable on one valid instance: the inclusion sandwich,
// d^r o d^r = 0, page turning at every stage up to stabilization, the
// boundary-induced isomorphism, agreement of the differential with its
// three-step composite, Euler characteristic constancy, stability at the
// limit page, page-0/page-1 identities, and the convergence verdict.
std::vector<std::string> spectral_instance_failures(const FilteredComplex& fc);

FamilyResult spectral_invariants(int trials, const std::vector<uint32_t>& primes,
                                 size_t max_total_dim, int max_filt_range, uint64_t seed);

}  // namespace specseq::suite
