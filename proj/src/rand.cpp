#include "specseq/rand.hpp"

namespace specseq {

Vec random_vector(Rng& rng, uint32_t p, size_t n) {
    Vec v(n);
    for (size_t i = 0; i < n; ++i) v[i] = static_cast<uint32_t>(rng.next(p));
    return v;
}

Mat random_matrix(Rng& rng, uint32_t p, size_t rows, size_t cols) {
    Mat m(p, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m(i, j) = static_cast<uint32_t>(rng.next(p));
    return m;
}

Mat random_invertible(Rng& rng, uint32_t p, size_t n) {
    for (;;) {
        Mat m = random_matrix(rng, p, n, n);
        if (rank(m) == n) return m;
    }
}

Subspace random_subspace(Rng& rng, uint32_t p, size_t ambient) {
    size_t k = rng.next(ambient + 1);
    std::vector<Vec> rows;
    for (size_t i = 0; i < k; ++i) rows.push_back(random_vector(rng, p, ambient));
    return Subspace::span(p, ambient, rows);
}

Subspace random_subspace_of(Rng& rng, const Subspace& s) {
    size_t k = rng.next(s.dim() + 1);
    std::vector<Vec> rows;
    const Fp& f = s.basis().field();
    for (size_t i = 0; i < k; ++i) {
        Vec v(s.ambient(), 0);
        for (size_t r = 0; r < s.dim(); ++r) {
            uint32_t c = static_cast<uint32_t>(rng.next(s.prime()));
            if (c == 0) continue;
            for (size_t j = 0; j < s.ambient(); ++j)
                v[j] = f.add(v[j], f.mul(c, s.basis()(r, j)));
        }
        rows.push_back(std::move(v));
    }
    return Subspace::span(s.prime(), s.ambient(), rows);
}

Subspace random_superspace(Rng& rng, const Subspace& s) {
    size_t extra = rng.next(s.ambient() - s.dim() + 1);
    std::vector<Vec> rows;
    for (size_t i = 0; i < s.dim(); ++i) rows.push_back(s.basis().row(i));
    for (size_t i = 0; i < extra; ++i) rows.push_back(random_vector(rng, s.prime(), s.ambient()));
    return Subspace::span(s.prime(), s.ambient(), rows);
}

}  // namespace specseq
