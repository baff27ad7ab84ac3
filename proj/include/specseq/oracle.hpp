#pragma once

#include <cstdint>

#include "specseq/complex.hpp"
#include "specseq/subspace.hpp"

namespace specseq::oracle {

// Brute-force reference semantics for desk-scale cross-checking. Subspaces
// become explicit element sets and every operation is evaluated
// set-theoretically, independent of the echelon-form code paths. Test-only;
// not part of the library's stability guarantees.

inline constexpr uint64_t default_cap = 729;  // 3^6 elements

// A subgroup of F_p^n as an explicit sorted element set. Construction
// verifies closure under addition and scalars, membership of zero, and
// that the cardinality is a power of p.
class ElementSet {
public:
    ElementSet(uint32_t p, size_t ambient, std::vector<Vec> elements);

    uint32_t prime() const { return p_; }
    size_t ambient() const { return ambient_; }
    size_t size() const { return elems_.size(); }
    size_t dim() const;  // log_p of the cardinality
    const std::vector<Vec>& elements() const { return elems_; }
    bool contains(const Vec& v) const;
    bool subset_of(const ElementSet& other) const;

    bool operator==(const ElementSet&) const = default;

private:
    uint32_t p_;
    size_t ambient_;
    std::vector<Vec> elems_;  // sorted lexicographically
};

ElementSet enumerate(const Subspace& s, uint64_t cap = default_cap);
ElementSet full_space(uint32_t p, size_t ambient, uint64_t cap = default_cap);

ElementSet set_sum(const ElementSet& a, const ElementSet& b);
ElementSet set_intersect(const ElementSet& a, const ElementSet& b);
ElementSet set_pushforward(const Mat& f, const ElementSet& u);
// Evaluates f on every vector of the domain, so the domain must fit the cap.
ElementSet set_preimage(const Mat& f, const ElementSet& w, uint64_t cap = default_cap);

// log_p(|z| / |b|); b must be a subset of z.
size_t quotient_dim(const ElementSet& z, const ElementSet& b);

// Coset count of the page entry at (p, q, r), built from element sets of
// the filtration alone (r may be stage_infinity).
size_t page_dim(const FilteredComplex& fc, int p, int q, int r, uint64_t cap = default_cap);

}  // namespace specseq::oracle
