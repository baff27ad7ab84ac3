#include "specseq/subspace.hpp"

#include <stdexcept>

namespace specseq {

namespace {

void require_same_ambient(const Subspace& u, const Subspace& v, const char* who) {
    if (u.prime() != v.prime())
        throw std::invalid_argument(std::string(who) + ": modulus mismatch");
    if (u.ambient() != v.ambient())
        throw std::invalid_argument(std::string(who) + ": ambient dimension mismatch");
}

}  // namespace

Subspace Subspace::span(const Mat& rows) {
    RrefResult r = rref(rows);
    Mat basis(rows.field(), r.rank, rows.cols());
    for (size_t i = 0; i < r.rank; ++i)
        for (size_t j = 0; j < rows.cols(); ++j) basis(i, j) = r.reduced(i, j);
    return Subspace(std::move(basis), std::move(r.pivots));
}

Subspace Subspace::span(uint32_t p, size_t ambient, const std::vector<Vec>& rows) {
    return span(Mat::from_rows(p, ambient, rows));
}

Subspace Subspace::zero(uint32_t p, size_t ambient) { return span(Mat(p, 0, ambient)); }

Subspace Subspace::full(uint32_t p, size_t ambient) { return span(Mat::identity(p, ambient)); }

Vec Subspace::reduce_vector(Vec v) const {
    if (v.size() != ambient())
        throw std::invalid_argument("Subspace::reduce_vector: vector length mismatch");
    const Fp& f = basis_.field();
    for (size_t i = 0; i < pivots_.size(); ++i) {
        uint32_t c = v[pivots_[i]];
        if (c == 0) continue;
        for (size_t j = 0; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(c, basis_(i, j)));
    }
    return v;
}

bool Subspace::contains_vector(const Vec& v) const {
    Vec r = reduce_vector(v);
    for (uint32_t x : r)
        if (x != 0) return false;
    return true;
}

Subspace sum(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v, "sum");
    Mat stacked(u.basis().field(), u.dim() + v.dim(), u.ambient());
    for (size_t i = 0; i < u.dim(); ++i) stacked.set_row(i, u.basis().row(i));
    for (size_t i = 0; i < v.dim(); ++i) stacked.set_row(u.dim() + i, v.basis().row(i));
    return Subspace::span(stacked);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v, "intersect");
    const Fp& f = u.basis().field();
    const size_t n = u.ambient(), k = u.dim(), m = v.dim();
    // columns of [U^T | -V^T]; a kernel vector (a, b) has U^T a = V^T b,
    // and that common value runs over the intersection
    Mat sys(f, n, k + m);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j) sys(j, i) = u.basis()(i, j);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) sys(j, k + i) = f.neg(v.basis()(i, j));
    Mat null = kernel_basis(sys);
    std::vector<Vec> rows;
    for (size_t r = 0; r < null.rows(); ++r) {
        Vec w(n, 0);
        for (size_t i = 0; i < k; ++i) {
            uint32_t c = null(r, i);
            if (c == 0) continue;
            for (size_t j = 0; j < n; ++j) w[j] = f.add(w[j], f.mul(c, u.basis()(i, j)));
        }
        rows.push_back(std::move(w));
    }
    return Subspace::span(u.prime(), n, rows);
}

bool contains(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v, "contains");
    for (size_t i = 0; i < v.dim(); ++i)
        if (!u.contains_vector(v.basis().row(i))) return false;
    return true;
}

Subspace kernel(const Mat& f) { return Subspace::span(kernel_basis(f)); }

Subspace image(const Mat& f) { return Subspace::span(f.transpose()); }

Subspace pushforward(const Mat& f, const Subspace& u) {
    if (f.prime() != u.prime()) throw std::invalid_argument("pushforward: modulus mismatch");
    if (u.ambient() != f.cols())
        throw std::invalid_argument("pushforward: ambient dimension mismatch");
    std::vector<Vec> rows;
    for (size_t i = 0; i < u.dim(); ++i) rows.push_back(f.apply(u.basis().row(i)));
    return Subspace::span(f.prime(), f.rows(), rows);
}

Subspace preimage(const Mat& f, const Subspace& w) {
    if (f.prime() != w.prime()) throw std::invalid_argument("preimage: modulus mismatch");
    if (w.ambient() != f.rows())
        throw std::invalid_argument("preimage: ambient dimension mismatch");
    const Fp& field = f.field();
    const size_t m = f.rows();
    // q x = residual of x against w's echelon basis, which is zero exactly
    // on w; the preimage is then the kernel of q composed with f
    Mat q = Mat::identity(f.prime(), m);
    for (size_t i = 0; i < w.dim(); ++i) {
        size_t c = w.pivots()[i];
        for (size_t a = 0; a < m; ++a) q(a, c) = field.sub(q(a, c), w.basis()(i, a));
    }
    return kernel(q * f);
}

}  // namespace specseq
