#include <doctest.h>

#include "specseq/oracle.hpp"
#include "specseq/pages.hpp"
#include "specseq/rand.hpp"
#include "specseq/suite.hpp"

using namespace specseq;

namespace {

FilteredComplex two_stage() {
    std::map<int, Mat> bnd;
    bnd.emplace(1, Mat::from_rows(2, 2, {{1, 0}, {0, 0}}));
    std::vector<std::vector<Subspace>> filt;
    filt.push_back({Subspace::span(2, 2, {{1, 0}}), Subspace::full(2, 2)});
    filt.push_back({Subspace::span(2, 2, {{0, 1}}), Subspace::full(2, 2)});
    return FilteredComplex(2, 0, {2, 2}, bnd, 0, std::move(filt));
}

// nested random filtration over a complex with zero differentials
FilteredComplex zero_differential_complex(uint64_t seed) {
    Rng rng(seed);
    std::vector<size_t> dims{3, 2, 2};
    std::vector<std::vector<Subspace>> filt;
    for (size_t d : dims) {
        Subspace cur = Subspace::zero(3, d);
        std::vector<Subspace> steps;
        for (int s = 0; s < 2; ++s) {
            cur = sum(cur, random_subspace(rng, 3, d));
            steps.push_back(cur);
        }
        steps.push_back(Subspace::full(3, d));
        filt.push_back(std::move(steps));
    }
    return FilteredComplex(3, 0, dims, {}, -1, std::move(filt));
}

}  // namespace

TEST_CASE("page-0 groups are the filtration layers") {
    FilteredComplex fc = two_stage();
    for (auto [p, q] : support(fc)) {
        CHECK(z_group(fc, p, q, 0) == fc.filtration(p + q, p));
        CHECK(b_group(fc, p, q, 0) == fc.filtration(p + q, p - 1));
    }
}

TEST_CASE("zero differentials freeze every page at the associated graded") {
    FilteredComplex fc = zero_differential_complex(17);
    REQUIRE(fc.validate().ok());
    for (auto [p, q] : support(fc))
        for (int r = 0; r <= stabilization_index(fc) + 1; ++r) {
            CHECK(z_group(fc, p, q, r) == fc.filtration(p + q, p));
            CHECK(b_group(fc, p, q, r) == fc.filtration(p + q, p - 1));
            CHECK(differential(fc, p, q, r).is_zero());
        }
    CHECK(suite::spectral_instance_failures(fc).empty());
}

TEST_CASE("worked two-stage example: groups, pages, differentials") {
    FilteredComplex fc = two_stage();
    REQUIRE(fc.validate().ok());

    CHECK(z_group(fc, 1, 0, 1).is_full());
    CHECK(b_group(fc, 1, 0, 1) == Subspace::span(2, 2, {{0, 1}}));
    CHECK(page_entry(fc, 1, 0, 1).entry.dim() == 1);

    auto dims_at = [&](int r) {
        return std::vector<size_t>{
            page_entry(fc, 0, 1, r).entry.dim(), page_entry(fc, 1, 0, r).entry.dim(),
            page_entry(fc, 0, 0, r).entry.dim(), page_entry(fc, 1, -1, r).entry.dim()};
    };
    CHECK(dims_at(0) == std::vector<size_t>{1, 1, 1, 1});
    CHECK(dims_at(1) == std::vector<size_t>{1, 1, 1, 1});
    CHECK(dims_at(2) == std::vector<size_t>{1, 0, 0, 1});

    // the one nonzero differential is 1x1 invertible at r = 1
    Mat d = differential(fc, 1, 0, 1);
    CHECK(d == Mat::from_rows(2, 1, {{1}}));
    CHECK(differential(fc, 1, 0, 0).is_zero());
    CHECK(differential(fc, 1, 0, 2).is_zero());

    Page pg1 = page(fc, 1);
    size_t nonzero = 0;
    for (const auto& [pos, m] : pg1.differentials) nonzero += rank(m);
    CHECK(nonzero == 1);

    CHECK(stabilization_index(fc) == 2);

    // limit page dims via the closed form, against the oracle
    for (auto [p, q] : support(fc)) {
        CHECK(infinity_entry(fc, p, q).entry.dim() ==
              oracle::page_dim(fc, p, q, stage_infinity));
        for (int r = 0; r <= 3; ++r)
            CHECK(page_entry(fc, p, q, r).entry.dim() == oracle::page_dim(fc, p, q, r));
    }
    CHECK(infinity_entry(fc, 0, 1).entry.dim() == 1);
    CHECK(infinity_entry(fc, 1, 0).entry.dim() == 0);
    CHECK(infinity_entry(fc, 0, 0).entry.dim() == 0);
    CHECK(infinity_entry(fc, 1, -1).entry.dim() == 1);

    // page 1 -> page 2 drops the total dimension by twice the rank of d^1
    CHECK(turn_page_check(fc, 0).ok);
    CHECK(turn_page_check(fc, 1).ok);
    CHECK(turn_page_check(fc, 2).ok);

    CHECK(homology(fc, 1).dim() == 1);
    CHECK(homology(fc, 0).dim() == 1);
    CHECK(homology_filtration(fc, fc.max_filtration(), 1) == kernel(fc.boundary(1)));
    CHECK(homology_filtration(fc, fc.min_filtration() - 1, 0) == image(fc.boundary(1)));

    ConvergenceReport rep = convergence_report(fc);
    CHECK(rep.verdict);
    for (const ConvergencePair& pr : rep.pairs) {
        CHECK(pr.dim_infinity == pr.dim_graded);
        if (pr.p == 0 && pr.q == 1) CHECK(pr.dim_infinity == 1);
        if (pr.p == 1 && pr.q == -1) CHECK(pr.dim_infinity == 1);
    }
}

TEST_CASE("trivial filtration: page 1 is homology and the 0-differential is d") {
    ChainData cd{2, 0, {2, 2}, {{1, Mat::from_rows(2, 2, {{1, 0}, {0, 0}})}}};
    FilteredComplex fc = make_trivial_filtration(cd);
    REQUIRE(fc.validate().ok());
    CHECK(stabilization_index(fc) == 1);
    for (int q = 0; q <= 1; ++q) {
        PageEntry e1 = page_entry(fc, 0, q, 1);
        Subquotient h = homology(fc, q);
        CHECK(e1.entry == h);  // same numerator, denominator and coset basis
        CHECK(infinity_entry(fc, 0, q).entry == h);
        // single filtration step: coset bases are standard, d^0 is d itself
        CHECK(differential(fc, 0, q, 0) == fc.boundary(q));
    }
}

TEST_CASE("entries vanish off the support rectangle") {
    FilteredComplex fc = two_stage();
    CHECK(page_entry(fc, -1, 1, 1).entry.dim() == 0);
    CHECK(page_entry(fc, 2, 0, 1).entry.dim() == 0);
    CHECK(page_entry(fc, -3, 3, 0).entry.dim() == 0);
    CHECK(page_entry(fc, 5, -5, 0).entry.dim() == 0);
    CHECK(page_entry(fc, 0, 7, 1).entry.ambient() == 0);
}

TEST_CASE("boundary-induced isomorphism between consecutive-stage quotients") {
    FilteredComplex fc = two_stage();
    for (auto [p, q] : support(fc))
        for (int r = 0; r <= 3; ++r) {
            BoundaryIso iso = boundary_induced_iso(fc, p, q, r);
            REQUIRE(iso.invertible);
            REQUIRE(iso.source.dim() == iso.target.dim());
        }
    // the only interesting instance here: Z^1/Z^2 at (1,0) has dimension 1
    BoundaryIso iso = boundary_induced_iso(fc, 1, 0, 1);
    CHECK(iso.source.dim() == 1);
}

TEST_CASE("exact total complex has a vanishing limit page") {
    Bicomplex bc;
    bc.prime = 2;
    bc.i_min = 0;
    bc.j_min = 0;
    bc.dims = {{1, 1}, {1, 1}};
    Mat one = Mat::identity(2, 1);
    bc.horizontal[{1, 0}] = one;
    bc.horizontal[{1, 1}] = one;
    bc.vertical[{0, 1}] = one;
    bc.vertical[{1, 1}] = one;
    FilteredComplex fc = make_total_of_bicomplex(bc);
    REQUIRE(fc.validate().ok());

    // page 1 is the column-wise homology, which is zero for identity columns
    for (auto [p, q] : support(fc)) {
        CHECK(page_entry(fc, p, q, 1).entry.dim() == 0);
        CHECK(infinity_entry(fc, p, q).entry.dim() == 0);
    }
    CHECK(convergence_report(fc).verdict);
    CHECK(suite::spectral_instance_failures(fc).empty());
}

TEST_CASE("column filtration of a bicomplex: page 1 is the column homology") {
    // horizontal maps are identities, vertical maps are zero; each column
    // has zero vertical differential, so page 1 keeps all four cells and
    // the two page-1 arrows are the rank-1 horizontal identities
    Bicomplex bc;
    bc.prime = 2;
    bc.i_min = 0;
    bc.j_min = 0;
    bc.dims = {{1, 1}, {1, 1}};
    Mat one = Mat::identity(2, 1);
    bc.horizontal[{1, 0}] = one;
    bc.horizontal[{1, 1}] = one;
    FilteredComplex fc = make_total_of_bicomplex(bc);
    REQUIRE(fc.validate().ok());

    for (auto [p, q] : {std::pair{0, 0}, {0, 1}, {1, 0}, {1, 1}})
        CHECK(page_entry(fc, p, q, 1).entry.dim() == 1);
    CHECK(rank(differential(fc, 1, 0, 1)) == 1);
    CHECK(rank(differential(fc, 1, 1, 1)) == 1);
    for (auto [p, q] : support(fc)) CHECK(infinity_entry(fc, p, q).entry.dim() == 0);
    CHECK(suite::spectral_instance_failures(fc).empty());
}

TEST_CASE("full instance suite on the worked example") {
    auto fails = suite::spectral_instance_failures(two_stage());
    if (!fails.empty()) FAIL(fails.front());
}
