#include "specseq/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace specseq::oracle {

namespace {

uint64_t checked_pow(uint32_t p, size_t e, uint64_t cap) {
    uint64_t v = 1;
    for (size_t i = 0; i < e; ++i) {
        v *= p;
        if (v > cap)
            throw std::invalid_argument("oracle: enumeration cap exceeded (" + std::to_string(p) +
                                        "^" + std::to_string(e) + " elements)");
    }
    return v;
}

Vec vec_add(const Fp& f, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
    return r;
}

}  // namespace

ElementSet::ElementSet(uint32_t p, size_t ambient, std::vector<Vec> elements)
    : p_(p), ambient_(ambient), elems_(std::move(elements)) {
    Fp f(p);
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    for (const Vec& v : elems_) {
        if (v.size() != ambient_) throw std::invalid_argument("ElementSet: element length mismatch");
        for (uint32_t x : v)
            if (x >= p_) throw std::invalid_argument("ElementSet: element not reduced mod p");
    }
    if (!contains(Vec(ambient_, 0))) throw std::invalid_argument("ElementSet: zero is missing");
    for (const Vec& a : elems_) {
        for (uint32_t c = 2; c < p_; ++c) {
            Vec s(ambient_);
            for (size_t i = 0; i < ambient_; ++i) s[i] = f.mul(c, a[i]);
            if (!contains(s)) throw std::invalid_argument("ElementSet: not closed under scalars");
        }
        for (const Vec& b : elems_)
            if (!contains(vec_add(f, a, b)))
                throw std::invalid_argument("ElementSet: not closed under addition");
    }
    size_t card = elems_.size();
    while (card % p_ == 0) card /= p_;
    if (card != 1) throw std::invalid_argument("ElementSet: cardinality is not a power of p");
}

size_t ElementSet::dim() const {
    size_t card = elems_.size(), d = 0;
    while (card > 1) {
        card /= p_;
        ++d;
    }
    return d;
}

bool ElementSet::contains(const Vec& v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

bool ElementSet::subset_of(const ElementSet& other) const {
    for (const Vec& v : elems_)
        if (!other.contains(v)) return false;
    return true;
}

ElementSet enumerate(const Subspace& s, uint64_t cap) {
    checked_pow(s.prime(), s.ambient(), cap);
    const Fp f(s.prime());
    std::vector<Vec> elems;
    const size_t k = s.dim();
    Vec coeff(k, 0);
    for (;;) {
        Vec v(s.ambient(), 0);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < s.ambient(); ++j)
                v[j] = f.add(v[j], f.mul(coeff[i], s.basis()(i, j)));
        elems.push_back(std::move(v));
        size_t pos = 0;
        while (pos < k && coeff[pos] == s.prime() - 1) coeff[pos++] = 0;
        if (pos == k) break;
        ++coeff[pos];
    }
    return ElementSet(s.prime(), s.ambient(), std::move(elems));
}

ElementSet full_space(uint32_t p, size_t ambient, uint64_t cap) {
    return enumerate(Subspace::full(p, ambient), cap);
}

ElementSet set_sum(const ElementSet& a, const ElementSet& b) {
    if (a.prime() != b.prime() || a.ambient() != b.ambient())
        throw std::invalid_argument("set_sum: operand mismatch");
    Fp f(a.prime());
    std::vector<Vec> out;
    for (const Vec& x : a.elements())
        for (const Vec& y : b.elements()) out.push_back(vec_add(f, x, y));
    return ElementSet(a.prime(), a.ambient(), std::move(out));
}

ElementSet set_intersect(const ElementSet& a, const ElementSet& b) {
    if (a.prime() != b.prime() || a.ambient() != b.ambient())
        throw std::invalid_argument("set_intersect: operand mismatch");
    std::vector<Vec> out;
    for (const Vec& x : a.elements())
        if (b.contains(x)) out.push_back(x);
    return ElementSet(a.prime(), a.ambient(), std::move(out));
}

ElementSet set_pushforward(const Mat& f, const ElementSet& u) {
    if (f.cols() != u.ambient()) throw std::invalid_argument("set_pushforward: ambient mismatch");
    std::vector<Vec> out;
    for (const Vec& x : u.elements()) out.push_back(f.apply(x));
    return ElementSet(u.prime(), f.rows(), std::move(out));
}

ElementSet set_preimage(const Mat& f, const ElementSet& w, uint64_t cap) {
    if (f.rows() != w.ambient()) throw std::invalid_argument("set_preimage: ambient mismatch");
    ElementSet domain = full_space(f.prime(), f.cols(), cap);
    std::vector<Vec> out;
    for (const Vec& x : domain.elements())
        if (w.contains(f.apply(x))) out.push_back(x);
    return ElementSet(f.prime(), f.cols(), std::move(out));
}

size_t quotient_dim(const ElementSet& z, const ElementSet& b) {
    if (!b.subset_of(z)) throw std::invalid_argument("quotient_dim: denominator not inside numerator");
    return z.dim() - b.dim();
}

size_t page_dim(const FilteredComplex& fc, int p, int q, int r, uint64_t cap) {
    const int n = p + q;
    const uint32_t pr = fc.prime();
    auto filt_set = [&](int deg, int idx) { return enumerate(fc.filtration(deg, idx), cap); };

    // d^{-1}(F_j C_{n-1}) and d(F_j C_{n+1}) from raw element membership
    auto k_set = [&](int idx) { return set_preimage(fc.boundary(n), filt_set(n - 1, idx), cap); };
    auto i_set = [&](int idx) { return set_pushforward(fc.boundary(n + 1), filt_set(n + 1, idx)); };

    const int k_idx = (r == stage_infinity) ? filt_neg_inf : p - r;
    const int i_idx = (r == stage_infinity) ? filt_pos_inf : p + r - 1;
    ElementSet z = set_sum(filt_set(n, p - 1), set_intersect(k_set(k_idx), filt_set(n, p)));
    ElementSet b = set_sum(filt_set(n, p - 1), set_intersect(i_set(i_idx), filt_set(n, p)));
    return quotient_dim(z, b);
}

}  // namespace specseq::oracle
