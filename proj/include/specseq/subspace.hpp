#pragma once

#include <vector>

#include "specseq/matrix.hpp"

namespace specseq {

// Linear subspace of F_p^n kept in canonical form: the stored basis is
// the reduced row echelon basis with strictly increasing pivot columns.
// Two Subspaces are equal as sets iff they compare equal structurally,
// which is what operator== does.
class Subspace {
public:
    static Subspace span(uint32_t p, size_t ambient, const std::vector<Vec>& rows);
    static Subspace span(const Mat& rows);
    static Subspace zero(uint32_t p, size_t ambient);
    static Subspace full(uint32_t p, size_t ambient);

    uint32_t prime() const { return basis_.prime(); }
    size_t ambient() const { return basis_.cols(); }
    size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient(); }

    const Mat& basis() const { return basis_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    // Residual of v after eliminating the pivot coordinates against the
    // basis; zero exactly when v lies in the subspace.
    Vec reduce_vector(Vec v) const;
    bool contains_vector(const Vec& v) const;

    bool operator==(const Subspace&) const = default;

private:
    Subspace(Mat basis, std::vector<size_t> pivots)
        : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    Mat basis_;
    std::vector<size_t> pivots_;
};

Subspace sum(const Subspace& u, const Subspace& v);
// Computed as the kernel of the stacked system [U^T | -V^T].
Subspace intersect(const Subspace& u, const Subspace& v);
// True iff v is contained in u.
bool contains(const Subspace& u, const Subspace& v);

Subspace kernel(const Mat& f);
Subspace image(const Mat& f);
Subspace pushforward(const Mat& f, const Subspace& u);
Subspace preimage(const Mat& f, const Subspace& w);

}  // namespace specseq
