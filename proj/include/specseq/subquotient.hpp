#pragma once

#include "specseq/subspace.hpp"

namespace specseq {

// A quotient z/b of nested subspaces of a common ambient space, carrying
// a chosen coset basis. The coset basis extends b's echelon basis to a
// basis of z by greedily taking rows of z's echelon basis, so it is a
// deterministic function of (z, b) and induced-map matrices are
// reproducible across runs.
class Subquotient {
public:
    Subquotient(Subspace z, Subspace b);

    uint32_t prime() const { return z_.prime(); }
    size_t ambient() const { return z_.ambient(); }
    size_t dim() const { return coset_basis_.rows(); }

    const Subspace& numerator() const { return z_; }
    const Subspace& denominator() const { return b_; }
    const Mat& coset_basis() const { return coset_basis_; }

    // Coordinates of the class [v] in the coset basis; v must lie in the
    // numerator. Linear in v, and zero exactly on the denominator.
    Vec reduce(const Vec& v) const;
    // Representative of the class with the given coordinates.
    Vec lift(const Vec& coords) const;

    bool operator==(const Subquotient&) const = default;

private:
    Subspace z_, b_;
    Mat coset_basis_;  // dim x ambient
    Mat coords_;       // dim x ambient; reduce(v) = coords_ * v on z
};

// Matrix of the map induced by f on coset bases. Requires f(source.z)
// inside target.z and f(source.b) inside target.b; violations are
// reported with the offending generator.
Mat induced_map(const Mat& f, const Subquotient& source, const Subquotient& target);

// The four subquotients of the Zassenhaus configuration a <= b, c <= d,
// with the connecting maps induced by the identity of the ambient space.
// All three maps are isomorphisms (butterfly lemma, extended form).
struct Butterfly {
    Subquotient q1;  // (a + d&b) / (a + c&b)
    Subquotient q2;  // (b&d) / ((b&c) + (a&d))
    Subquotient q3;  // ((a+d) & (b+c)) / (a+c)
    Subquotient q4;  // (c + b&d) / (c + a&d)
    Mat q2_to_q1;
    Mat q2_to_q3;
    Mat q2_to_q4;
};

Butterfly butterfly(const Subspace& a, const Subspace& b, const Subspace& c, const Subspace& d);

}  // namespace specseq
