#include "specseq/pages.hpp"

#include <sstream>
#include <stdexcept>

namespace specseq {

namespace {

std::string pos_str(int p, int q, int r) {
    std::ostringstream os;
    os << "(p=" << p << ", q=" << q << ", r=";
    if (r == stage_infinity)
        os << "inf";
    else
        os << r;
    os << ")";
    return os.str();
}

}  // namespace

Subspace z_group(const FilteredComplex& fc, int p, int q, int r) {
    const int n = p + q;
    const int k_idx = (r == stage_infinity) ? filt_neg_inf : p - r;
    return sum(fc.filtration(n, p - 1), intersect(k_filt(fc, k_idx, n), fc.filtration(n, p)));
}

Subspace b_group(const FilteredComplex& fc, int p, int q, int r) {
    const int n = p + q;
    const int i_idx = (r == stage_infinity) ? filt_pos_inf : p + r - 1;
    return sum(fc.filtration(n, p - 1), intersect(i_filt(fc, i_idx, n), fc.filtration(n, p)));
}

PageEntry page_entry(const FilteredComplex& fc, int p, int q, int r) {
    return PageEntry{p, q, r, Subquotient(z_group(fc, p, q, r), b_group(fc, p, q, r))};
}

PageEntry infinity_entry(const FilteredComplex& fc, int p, int q) {
    return page_entry(fc, p, q, stage_infinity);
}

int stabilization_index(const FilteredComplex& fc) {
    return (fc.max_filtration() - fc.min_filtration()) + 1;
}

Mat differential(const FilteredComplex& fc, int p, int q, int r) {
    if (r < 0 || r == stage_infinity)
        throw std::invalid_argument("differential: stage must be finite and nonnegative");
    const int n = p + q;
    PageEntry source = page_entry(fc, p, q, r);
    PageEntry target = page_entry(fc, p - r, q + r - 1, r);
    Mat d = fc.boundary(n);
    Mat out(fc.prime(), target.entry.dim(), source.entry.dim());
    if (source.entry.dim() == 0) return out;

    const Subspace a = fc.filtration(n, p - 1);
    const Subspace k = intersect(k_filt(fc, p - r, n), fc.filtration(n, p));
    // columns of the split system: basis of a, then basis of k
    Mat sys(fc.prime(), fc.dim(n), a.dim() + k.dim());
    for (size_t i = 0; i < a.dim(); ++i) sys.set_col(i, a.basis().row(i));
    for (size_t i = 0; i < k.dim(); ++i) sys.set_col(a.dim() + i, k.basis().row(i));

    for (size_t j = 0; j < source.entry.dim(); ++j) {
        Vec x = source.entry.coset_basis().row(j);
        std::optional<Vec> gamma = solve(sys, x);
        if (!gamma)
            throw std::logic_error("differential: representative is not split by Z^r at " +
                                   pos_str(p, q, r));
        Vec k_part(fc.dim(n), 0);
        const Fp& f = d.field();
        for (size_t i = 0; i < k.dim(); ++i) {
            uint32_t c = (*gamma)[a.dim() + i];
            if (c == 0) continue;
            for (size_t t = 0; t < k_part.size(); ++t)
                k_part[t] = f.add(k_part[t], f.mul(c, k.basis()(i, t)));
        }
        out.set_col(j, target.entry.reduce(d.apply(k_part)));
    }
    return out;
}

std::vector<std::pair<int, int>> support(const FilteredComplex& fc) {
    std::vector<std::pair<int, int>> out;
    for (int p = fc.min_filtration() - 1; p <= fc.max_filtration() + 1; ++p)
        for (int n = fc.min_degree(); n <= fc.max_degree(); ++n) out.push_back({p, n - p});
    return out;
}

Page page(const FilteredComplex& fc, int r) {
    Page pg;
    pg.r = r;
    for (auto [p, q] : support(fc)) {
        pg.entries.emplace(std::pair{p, q}, page_entry(fc, p, q, r));
        if (r != stage_infinity) pg.differentials.emplace(std::pair{p, q}, differential(fc, p, q, r));
    }
    return pg;
}

CheckResult turn_page_check(const FilteredComplex& fc, int r) {
    CheckResult res;
    for (auto [p, q] : support(fc)) {
        PageEntry cur = page_entry(fc, p, q, r);
        PageEntry next = page_entry(fc, p, q, r + 1);
        Mat out = differential(fc, p, q, r);
        Mat in = differential(fc, p + r, q - r + 1, r);

        const size_t dim_z1 = z_group(fc, p, q, r + 1).dim();
        const size_t dim_b0 = b_group(fc, p, q, r).dim();
        const size_t dim_b1 = b_group(fc, p, q, r + 1).dim();

        Subspace ker_out = kernel(out);
        if (ker_out.dim() != dim_z1 - dim_b0)
            res.fail("kernel of the outgoing differential at " + pos_str(p, q, r) + " has dim " +
                     std::to_string(ker_out.dim()) + ", expected " + std::to_string(dim_z1 - dim_b0));
        Subspace im_in = image(in);
        if (im_in.dim() != dim_b1 - dim_b0)
            res.fail("image of the incoming differential at " + pos_str(p, q, r) + " has dim " +
                     std::to_string(im_in.dim()) + ", expected " + std::to_string(dim_b1 - dim_b0));
        if (!contains(ker_out, im_in)) {
            res.fail("d^r image is not contained in d^r kernel at " + pos_str(p, q, r));
            continue;
        }

        // homology of (E^r, d^r) in coset coordinates, sent to E^{r+1} by
        // lifting representatives
        Subquotient homology_at_r(ker_out, im_in);
        if (homology_at_r.dim() != next.entry.dim()) {
            res.fail("homology of the page at " + pos_str(p, q, r) + " has dim " +
                     std::to_string(homology_at_r.dim()) + ", expected " +
                     std::to_string(next.entry.dim()));
            continue;
        }
        Mat witness(fc.prime(), next.entry.dim(), homology_at_r.dim());
        bool lift_ok = true;
        for (size_t j = 0; j < homology_at_r.dim(); ++j) {
            Vec rep = cur.entry.lift(homology_at_r.coset_basis().row(j));
            if (!next.entry.numerator().contains_vector(rep)) {
                res.fail("cycle representative at " + pos_str(p, q, r) +
                         " does not lie in the next numerator");
                lift_ok = false;
                break;
            }
            witness.set_col(j, next.entry.reduce(rep));
        }
        if (lift_ok && !inverse(witness))
            res.fail("homology-to-next-page witness at " + pos_str(p, q, r) + " is singular");
    }
    return res;
}

BoundaryIso boundary_induced_iso(const FilteredComplex& fc, int p, int q, int r) {
    if (r < 0 || r == stage_infinity)
        throw std::invalid_argument("boundary_induced_iso: stage must be finite");
    const int n = p + q;
    // Zassenhaus configuration whose first wing is Z^r/Z^{r+1}
    const Subspace a = fc.filtration(n, p - 1);
    const Subspace b = fc.filtration(n, p);
    const Subspace c = k_filt(fc, p - r - 1, n);
    const Subspace d = k_filt(fc, p - r, n);
    Butterfly bf = butterfly(a, b, c, d);

    Subquotient target(b_group(fc, p - r, q + r - 1, r + 1), b_group(fc, p - r, q + r - 1, r));
    // the boundary map carries the second wing onto the target quotient
    Mat down = induced_map(fc.boundary(n), bf.q4, target);

    std::optional<Mat> to_mid = inverse(bf.q2_to_q1);
    bool invertible = to_mid.has_value();
    Mat map = invertible ? down * bf.q2_to_q4 * *to_mid
                         : Mat(fc.prime(), target.dim(), bf.q1.dim());
    if (invertible) invertible = inverse(map).has_value();
    return BoundaryIso{std::move(bf.q1), std::move(target), std::move(map), invertible};
}

Subquotient homology(const FilteredComplex& fc, int n) {
    return Subquotient(kernel(fc.boundary(n)), image(fc.boundary(n + 1)));
}

Subspace homology_filtration(const FilteredComplex& fc, int p, int n) {
    return sum(image(fc.boundary(n + 1)), intersect(fc.filtration(n, p), kernel(fc.boundary(n))));
}

ConvergenceReport convergence_report(const FilteredComplex& fc) {
    ConvergenceReport rep;
    std::map<int, size_t> einf_total;
    for (auto [p, q] : support(fc)) {
        const int n = p + q;
        PageEntry einf = infinity_entry(fc, p, q);
        Subquotient graded(homology_filtration(fc, p, n), homology_filtration(fc, p - 1, n));

        // butterfly with wings the limit entry and the graded piece
        Butterfly bf = butterfly(fc.filtration(n, p - 1), fc.filtration(n, p),
                                 image(fc.boundary(n + 1)), kernel(fc.boundary(n)));
        std::optional<Mat> from_q1 = inverse(bf.q2_to_q1);
        bool ok = from_q1.has_value() && bf.q1 == einf.entry && bf.q4 == graded;
        Mat witness = ok ? bf.q2_to_q4 * *from_q1
                         : Mat(fc.prime(), graded.dim(), einf.entry.dim());
        if (ok) ok = inverse(witness).has_value();
        ok = ok && einf.entry.dim() == graded.dim();
        if (!ok) rep.verdict = false;
        einf_total[n] += einf.entry.dim();
        rep.pairs.push_back(
            {p, q, einf.entry.dim(), graded.dim(), std::move(witness), ok});
    }
    for (int n = fc.min_degree(); n <= fc.max_degree(); ++n) {
        Subquotient h = homology(fc, n);
        HomologyLine line{n, h.dim(), {}};
        const size_t dim_im = image(fc.boundary(n + 1)).dim();
        for (int p = fc.min_filtration() - 1; p <= fc.max_filtration(); ++p)
            line.filtration_dims.push_back(homology_filtration(fc, p, n).dim() - dim_im);
        if (einf_total[n] != h.dim()) rep.verdict = false;
        rep.homology.push_back(std::move(line));
    }
    return rep;
}

}  // namespace specseq
