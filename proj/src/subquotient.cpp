#include "specseq/subquotient.hpp"

#include <stdexcept>
#include <string>

namespace specseq {

Subquotient::Subquotient(Subspace z, Subspace b)
    : z_(std::move(z)),
      b_(std::move(b)),
      coset_basis_(z_.prime(), 0, z_.ambient()),
      coords_(z_.prime(), 0, z_.ambient()) {
    if (z_.prime() != b_.prime() || z_.ambient() != b_.ambient())
        throw std::invalid_argument("Subquotient: numerator/denominator ambient mismatch");
    if (!contains(z_, b_))
        throw std::invalid_argument("Subquotient: denominator is not contained in numerator");

    const size_t n = z_.ambient();
    const uint32_t p = z_.prime();

    // greedy extension of b's basis to a basis of z along z's echelon rows
    std::vector<Vec> coset_rows;
    Subspace acc = b_;
    for (size_t i = 0; i < z_.dim(); ++i) {
        Vec row = z_.basis().row(i);
        if (acc.contains_vector(row)) continue;
        coset_rows.push_back(row);
        acc = sum(acc, Subspace::span(p, n, {row}));
    }
    coset_basis_ = Mat::from_rows(p, n, coset_rows);

    // complete to a basis of the ambient space with standard basis vectors
    std::vector<Vec> all_rows;
    for (size_t i = 0; i < b_.dim(); ++i) all_rows.push_back(b_.basis().row(i));
    for (const Vec& r : coset_rows) all_rows.push_back(r);
    Subspace acc2 = z_;
    for (size_t j = 0; j < n && acc2.dim() < n; ++j) {
        Vec e(n, 0);
        e[j] = 1;
        if (acc2.contains_vector(e)) continue;
        all_rows.push_back(e);
        acc2 = sum(acc2, Subspace::span(p, n, {e}));
    }

    // coordinates in this full basis are (X^T)^{-1} v; keep the rows that
    // pick out the coset block, so reduce is a single matrix apply
    Mat x = Mat::from_rows(p, n, all_rows);
    std::optional<Mat> y = inverse(x.transpose());
    if (!y) throw std::logic_error("Subquotient: completed basis is singular");
    Mat coords(p, coset_basis_.rows(), n);
    for (size_t i = 0; i < coset_basis_.rows(); ++i) coords.set_row(i, y->row(b_.dim() + i));
    coords_ = std::move(coords);
}

Vec Subquotient::reduce(const Vec& v) const {
    if (!z_.contains_vector(v))
        throw std::invalid_argument("Subquotient::reduce: vector " + to_string(v) +
                                    " lies outside the numerator");
    return coords_.apply(v);
}

Vec Subquotient::lift(const Vec& coords) const {
    if (coords.size() != dim())
        throw std::invalid_argument("Subquotient::lift: coordinate length mismatch");
    const Fp& f = coset_basis_.field();
    Vec v(ambient(), 0);
    for (size_t i = 0; i < dim(); ++i) {
        if (coords[i] == 0) continue;
        for (size_t j = 0; j < ambient(); ++j)
            v[j] = f.add(v[j], f.mul(coords[i], coset_basis_(i, j)));
    }
    return v;
}

Mat induced_map(const Mat& f, const Subquotient& source, const Subquotient& target) {
    if (f.prime() != source.prime() || f.prime() != target.prime())
        throw std::invalid_argument("induced_map: modulus mismatch");
    if (f.cols() != source.ambient() || f.rows() != target.ambient())
        throw std::invalid_argument("induced_map: ambient dimension mismatch");

    for (size_t i = 0; i < source.numerator().dim(); ++i) {
        Vec v = source.numerator().basis().row(i);
        if (!target.numerator().contains_vector(f.apply(v)))
            throw std::invalid_argument(
                "induced_map: image of numerator generator " + std::to_string(i) + " = " +
                to_string(v) + " lies outside the target numerator");
    }
    for (size_t i = 0; i < source.denominator().dim(); ++i) {
        Vec v = source.denominator().basis().row(i);
        if (!target.denominator().contains_vector(f.apply(v)))
            throw std::invalid_argument(
                "induced_map: image of denominator generator " + std::to_string(i) + " = " +
                to_string(v) + " lies outside the target denominator");
    }

    Mat out(f.prime(), target.dim(), source.dim());
    for (size_t j = 0; j < source.dim(); ++j)
        out.set_col(j, target.reduce(f.apply(source.coset_basis().row(j))));
    return out;
}

Butterfly butterfly(const Subspace& a, const Subspace& b, const Subspace& c, const Subspace& d) {
    if (a.prime() != b.prime() || a.prime() != c.prime() || a.prime() != d.prime() ||
        a.ambient() != b.ambient() || a.ambient() != c.ambient() || a.ambient() != d.ambient())
        throw std::invalid_argument("butterfly: operands live in different ambient spaces");
    if (!contains(b, a)) throw std::invalid_argument("butterfly: a is not contained in b");
    if (!contains(d, c)) throw std::invalid_argument("butterfly: c is not contained in d");

    Subquotient q1(sum(a, intersect(d, b)), sum(a, intersect(c, b)));
    Subquotient q2(intersect(b, d), sum(intersect(b, c), intersect(a, d)));
    Subquotient q3(intersect(sum(a, d), sum(b, c)), sum(a, c));
    Subquotient q4(sum(c, intersect(b, d)), sum(c, intersect(a, d)));

    Mat id = Mat::identity(a.prime(), a.ambient());
    Mat m21 = induced_map(id, q2, q1);
    Mat m23 = induced_map(id, q2, q3);
    Mat m24 = induced_map(id, q2, q4);
    return Butterfly{std::move(q1), std::move(q2), std::move(q3), std::move(q4),
                     std::move(m21), std::move(m23), std::move(m24)};
}

}  // namespace specseq
