#include "specseq/suite.hpp"

#include <sstream>

#include "specseq/oracle.hpp"
#include "specseq/pages.hpp"
#include "specseq/rand.hpp"

namespace specseq::suite {

namespace {

uint32_t pick_prime(const std::vector<uint32_t>& primes, Rng& rng) {
    return primes[rng.next(primes.size())];
}

size_t pick_ambient(size_t max_ambient, Rng& rng) { return 1 + rng.next(max_ambient); }

std::string case_tag(int trial, uint32_t p, size_t n) {
    std::ostringstream os;
    os << "trial " << trial << " (p=" << p << ", ambient=" << n << ")";
    return os.str();
}

bool is_invertible(const Mat& m) { return inverse(m).has_value(); }

}  // namespace

FamilyResult modular_law(int trials, const std::vector<uint32_t>& primes, size_t max_ambient,
                         uint64_t seed) {
    FamilyResult res{"modular law"};
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        uint32_t p = pick_prime(primes, rng);
        size_t n = pick_ambient(max_ambient, rng);
        Subspace c = random_subspace(rng, p, n);
        Subspace a = random_subspace_of(rng, c);
        Subspace b = random_subspace(rng, p, n);
        bool good = sum(a, intersect(b, c)) == intersect(sum(a, b), c);
        res.tally(good, case_tag(t, p, n));
    }
    return res;
}

FamilyResult chain_limits(int trials, const std::vector<uint32_t>& primes, size_t max_ambient,
                          uint64_t seed) {
    FamilyResult res{"chain limits"};
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        uint32_t p = pick_prime(primes, rng);
        size_t n = pick_ambient(max_ambient, rng);
        Subspace b = random_subspace(rng, p, n);
        Subspace a = random_subspace_of(rng, b);
        size_t len = 1 + rng.next(5);
        std::vector<Subspace> chain;
        Subspace cur = random_subspace(rng, p, n);
        chain.push_back(cur);
        for (size_t i = 1; i < len; ++i) {
            cur = random_superspace(rng, cur);
            chain.push_back(cur);
        }
        Subspace join = Subspace::zero(p, n);
        Subspace meet = Subspace::full(p, n);
        for (const Subspace& c : chain) {
            Subspace term = sum(a, intersect(c, b));
            join = sum(join, term);
            meet = intersect(meet, term);
        }
        bool good = join == sum(a, intersect(chain.back(), b)) &&
                    meet == sum(a, intersect(chain.front(), b));
        res.tally(good, case_tag(t, p, n));
    }
    return res;
}

FamilyResult butterfly_isomorphisms(int trials, const std::vector<uint32_t>& primes,
                                    size_t max_ambient, uint64_t seed) {
    FamilyResult res{"butterfly isomorphisms"};
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        uint32_t p = pick_prime(primes, rng);
        size_t n = pick_ambient(max_ambient, rng);
        Subspace b = random_subspace(rng, p, n);
        Subspace a = random_subspace_of(rng, b);
        Subspace d = random_subspace(rng, p, n);
        Subspace c = random_subspace_of(rng, d);
        Butterfly bf = butterfly(a, b, c, d);
        bool good = bf.q1.dim() == bf.q2.dim() && bf.q2.dim() == bf.q3.dim() &&
                    bf.q3.dim() == bf.q4.dim() && is_invertible(bf.q2_to_q1) &&
                    is_invertible(bf.q2_to_q3) && is_invertible(bf.q2_to_q4);
        res.tally(good, case_tag(t, p, n));
    }
    return res;
}

FamilyResult surjectivity_criterion(int trials, const std::vector<uint32_t>& primes,
                                    size_t max_ambient, uint64_t seed) {
    FamilyResult res{"surjectivity criterion"};
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        uint32_t p = pick_prime(primes, rng);
        size_t n = pick_ambient(max_ambient, rng);
        size_t m = pick_ambient(max_ambient, rng);
        Mat f = random_matrix(rng, p, m, n);
        // push random subspaces forward, pull back: then f(B & D) = B' & D'
        Subspace bp = pushforward(f, random_subspace(rng, p, n));
        Subspace dp = pushforward(f, random_subspace(rng, p, n));
        Subspace b = preimage(f, bp);
        Subspace d = preimage(f, dp);
        Subspace a = random_subspace_of(rng, b);
        Subspace c = random_subspace_of(rng, d);
        Subspace ap = sum(pushforward(f, a), random_subspace_of(rng, bp));
        Subspace cp = sum(pushforward(f, c), random_subspace_of(rng, dp));
        if (!(pushforward(f, intersect(b, d)) == intersect(bp, dp))) {
            res.tally(false, case_tag(t, p, n) + " hypothesis construction failed");
            continue;
        }
        Subquotient src(sum(a, intersect(d, b)), sum(a, intersect(c, b)));
        Subquotient tgt(sum(ap, intersect(dp, bp)), sum(ap, intersect(cp, bp)));
        Mat induced = induced_map(f, src, tgt);
        bool good = rank(induced) == tgt.dim();
        res.tally(good, case_tag(t, p, n));
    }
    return res;
}

FamilyResult injectivity_criterion(int trials, const std::vector<uint32_t>& primes,
                                   size_t max_ambient, uint64_t seed) {
    FamilyResult res{"injectivity criterion"};
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        uint32_t p = pick_prime(primes, rng);
        size_t n = pick_ambient(max_ambient, rng);
        size_t m = pick_ambient(max_ambient, rng);
        Mat f = random_matrix(rng, p, m, n);
        // ker f folded into a, numerators pushed forward: then
        // a + c = f^{-1}(a' + c')
        Subspace a = sum(kernel(f), random_subspace(rng, p, n));
        Subspace c = random_subspace(rng, p, n);
        Subspace ap = pushforward(f, a);
        Subspace cp = pushforward(f, c);
        Subspace b = random_superspace(rng, a);
        Subspace d = random_superspace(rng, c);
        Subspace bp = random_superspace(rng, sum(pushforward(f, b), ap));
        Subspace dp = random_superspace(rng, sum(pushforward(f, d), cp));
        if (!(sum(a, c) == preimage(f, sum(ap, cp)))) {
            res.tally(false, case_tag(t, p, n) + " hypothesis construction failed");
            continue;
        }
        Subquotient src(sum(a, intersect(d, b)), sum(a, intersect(c, b)));
        Subquotient tgt(sum(ap, intersect(dp, bp)), sum(ap, intersect(cp, bp)));
        Mat induced = induced_map(f, src, tgt);
        bool good = kernel(induced).dim() == 0;
        res.tally(good, case_tag(t, p, n));
    }
    return res;
}

FamilyResult pullback_pushforward_iso(int trials, const std::vector<uint32_t>& primes,
                                      size_t max_ambient, uint64_t seed) {
    FamilyResult res{"pullback/pushforward isomorphism"};
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        uint32_t p = pick_prime(primes, rng);
        size_t n = pick_ambient(max_ambient, rng);
        size_t m = pick_ambient(max_ambient, rng);
        Mat f = random_matrix(rng, p, m, n);
        Subspace bp = random_subspace(rng, p, m);
        Subspace ap = random_subspace_of(rng, bp);
        Subspace d = random_subspace(rng, p, n);
        Subspace c = random_subspace_of(rng, d);
        Subspace a = preimage(f, ap);
        Subspace b = preimage(f, bp);
        Subspace cp = pushforward(f, c);
        Subspace dp = pushforward(f, d);
        Subquotient src(sum(a, intersect(d, b)), sum(a, intersect(c, b)));
        Subquotient tgt(sum(ap, intersect(dp, bp)), sum(ap, intersect(cp, bp)));
        Mat induced = induced_map(f, src, tgt);
        bool good = src.dim() == tgt.dim() && is_invertible(induced);
        res.tally(good, case_tag(t, p, n));
    }
    return res;
}

FamilyResult induced_composition(int trials, const std::vector<uint32_t>& primes,
                                 size_t max_ambient, uint64_t seed) {
    FamilyResult res{"induced-map composition"};
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        uint32_t p = pick_prime(primes, rng);
        size_t n0 = pick_ambient(max_ambient, rng);
        size_t n1 = pick_ambient(max_ambient, rng);
        size_t n2 = pick_ambient(max_ambient, rng);
        Mat f = random_matrix(rng, p, n1, n0);
        Mat g = random_matrix(rng, p, n2, n1);
        Subspace z0 = random_subspace(rng, p, n0);
        Subspace b0 = random_subspace_of(rng, z0);
        Subspace z1 = sum(pushforward(f, z0), random_subspace(rng, p, n1));
        Subspace b1 = sum(pushforward(f, b0), random_subspace_of(rng, z1));
        Subspace z2 = sum(pushforward(g, z1), random_subspace(rng, p, n2));
        Subspace b2 = sum(pushforward(g, b1), random_subspace_of(rng, z2));
        Subquotient s0(z0, b0), s1(z1, b1), s2(z2, b2);
        Mat composite = induced_map(g * f, s0, s2);
        Mat chained = induced_map(g, s1, s2) * induced_map(f, s0, s1);
        res.tally(composite == chained, case_tag(t, p, n0));
    }
    return res;
}

FamilyResult lattice_canonicality(int trials, const std::vector<uint32_t>& primes,
                                  size_t max_ambient, uint64_t seed) {
    FamilyResult res{"canonical form and dimension formula"};
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        uint32_t p = pick_prime(primes, rng);
        size_t n = pick_ambient(max_ambient, rng);
        Subspace u = random_subspace(rng, p, n);
        Subspace v = random_subspace(rng, p, n);
        // re-present u through a random invertible recombination of its rows
        Mat mix = random_invertible(rng, p, u.dim());
        Subspace u2 = Subspace::span(mix * u.basis());
        size_t m = pick_ambient(max_ambient, rng);
        Mat f = random_matrix(rng, p, m, n);
        Mat g = random_matrix(rng, p, n, m);
        bool good = u2 == u && sum(u2, v) == sum(u, v) && intersect(u2, v) == intersect(u, v) &&
                    pushforward(f, u2) == pushforward(f, u) &&
                    preimage(g, u2) == preimage(g, u) &&
                    u.dim() + v.dim() == sum(u, v).dim() + intersect(u, v).dim() &&
                    contains(sum(u, v), u) && contains(u, intersect(u, v));
        res.tally(good, case_tag(t, p, n));
    }
    return res;
}

FamilyResult lattice_oracle_equivalence(int trials, const std::vector<uint32_t>& primes,
                                        size_t max_ambient, uint64_t seed) {
    FamilyResult res{"lattice vs enumeration"};
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        uint32_t p = pick_prime(primes, rng);
        size_t n = pick_ambient(max_ambient, rng);
        size_t m = pick_ambient(max_ambient, rng);
        Subspace u = random_subspace(rng, p, n);
        Subspace v = random_subspace(rng, p, n);
        Mat f = random_matrix(rng, p, m, n);
        Subspace w = random_subspace(rng, p, m);
        using namespace specseq::oracle;
        ElementSet eu = enumerate(u), ev = enumerate(v);
        bool good = enumerate(sum(u, v)) == set_sum(eu, ev) &&
                    enumerate(intersect(u, v)) == set_intersect(eu, ev) &&
                    enumerate(pushforward(f, u)) == set_pushforward(f, eu) &&
                    enumerate(preimage(f, w)) == set_preimage(f, enumerate(w)) &&
                    enumerate(kernel(f)) == set_preimage(f, enumerate(Subspace::zero(p, m))) &&
                    enumerate(image(f)) == set_pushforward(f, full_space(p, n)) &&
                    contains(u, v) == ev.subset_of(eu);
        if (good && contains(u, v)) {
            Subquotient sq(u, v);
            good = sq.dim() == quotient_dim(eu, ev);
        }
        res.tally(good, case_tag(t, p, n));
    }
    return res;
}

FamilyResult complex_oracle_equivalence(int trials, uint64_t seed, uint32_t prime,
                                        size_t max_total_dim, int max_filt_range) {
    FamilyResult res{"page dims vs coset counts"};
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        FilteredComplex fc = make_random(prime, max_total_dim, max_filt_range, rng.next(1ull << 62));
        bool good = fc.validate().ok();
        const int r_stab = stabilization_index(fc);
        for (auto [p, q] : support(fc)) {
            if (!good) break;
            for (int r = 0; r <= r_stab + 1 && good; ++r)
                good = page_entry(fc, p, q, r).entry.dim() == oracle::page_dim(fc, p, q, r);
            if (good)
                good = infinity_entry(fc, p, q).entry.dim() ==
                       oracle::page_dim(fc, p, q, stage_infinity);
        }
        res.tally(good, "complex trial " + std::to_string(t));
    }
    return res;
}

std::vector<std::string> spectral_instance_failures(const FilteredComplex& fc) {
    std::vector<std::string> fails;
    auto expect = [&fails](bool cond, const std::string& what) {
        if (!cond) fails.push_back(what);
    };

    const int r_stab = stabilization_index(fc);
    const uint32_t p_mod = fc.prime();
    Fp field(p_mod);

    for (auto [p, q] : support(fc)) {
        const int n = p + q;
        std::ostringstream tag;
        tag << "(p=" << p << ",q=" << q << ")";

        // inclusion sandwich through every finite stage and the limit
        Subspace zinf = z_group(fc, p, q, stage_infinity);
        Subspace binf = b_group(fc, p, q, stage_infinity);
        for (int r = 0; r <= r_stab; ++r) {
            Subspace zr = z_group(fc, p, q, r), zr1 = z_group(fc, p, q, r + 1);
            Subspace br = b_group(fc, p, q, r), br1 = b_group(fc, p, q, r + 1);
            bool sandwich = contains(fc.filtration(n, p), zr) && contains(zr, zr1) &&
                            contains(zr1, zinf) && contains(zinf, binf) && contains(binf, br1) &&
                            contains(br1, br) && contains(br, fc.filtration(n, p - 1));
            expect(sandwich, "sandwich fails at " + tag.str() + " r=" + std::to_string(r));
        }

        // page 0 entries are the associated graded pieces
        expect(z_group(fc, p, q, 0) == fc.filtration(n, p) &&
                   b_group(fc, p, q, 0) == fc.filtration(n, p - 1),
               "page-0 groups differ from the filtration layers at " + tag.str());

        // d^0 agrees with the map induced on the associated graded
        {
            PageEntry e0 = page_entry(fc, p, q, 0);
            PageEntry t0 = page_entry(fc, p, q - 1, 0);
            Mat direct = differential(fc, p, q, 0);
            Mat graded = induced_map(fc.boundary(n), e0.entry, t0.entry);
            expect(direct == graded, "page-0 differential is not the graded boundary at " + tag.str());
        }

        for (int r = 0; r <= r_stab; ++r) {
            // d^r out of here composed with d^r arriving here vanishes
            Mat dd = differential(fc, p, q, r) * differential(fc, p + r, q - r + 1, r);
            expect(dd.is_zero(), "d o d nonzero at " + tag.str() + " r=" + std::to_string(r));

            // the boundary-induced isomorphism between consecutive-stage
            // quotients, and the differential reassembled through it
            BoundaryIso iso = boundary_induced_iso(fc, p, q, r);
            expect(iso.invertible && iso.source.dim() == iso.target.dim(),
                   "boundary-induced map is not an isomorphism at " + tag.str() +
                       " r=" + std::to_string(r));
            if (iso.invertible) {
                PageEntry src = page_entry(fc, p, q, r);
                PageEntry tgt = page_entry(fc, p - r, q + r - 1, r);
                Mat id_src = Mat::identity(p_mod, fc.dim(n));
                Mat id_tgt = Mat::identity(p_mod, fc.dim(n - 1));
                Mat proj = induced_map(id_src, src.entry, iso.source);
                Mat incl = induced_map(id_tgt, iso.target, tgt.entry);
                expect(incl * iso.map * proj == differential(fc, p, q, r),
                       "differential differs from its composite form at " + tag.str() +
                           " r=" + std::to_string(r));
            }
        }

        // stability beyond the stabilization index
        PageEntry einf = infinity_entry(fc, p, q);
        for (int r = r_stab; r <= r_stab + 3; ++r) {
            PageEntry er = page_entry(fc, p, q, r);
            expect(er.entry == einf.entry,
                   "page does not stabilize at " + tag.str() + " r=" + std::to_string(r));
            expect(differential(fc, p, q, r).is_zero(),
                   "differential survives past stabilization at " + tag.str());
        }
    }

    // page turning at every stage
    for (int r = 0; r <= r_stab; ++r) {
        CheckResult turn = turn_page_check(fc, r);
        for (const std::string& f : turn.failures) fails.push_back("turn: " + f);
    }

    // Euler characteristic is the same on every page
    long long chi_complex = 0;
    for (int n = fc.min_degree(); n <= fc.max_degree(); ++n)
        chi_complex += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(fc.dim(n));
    for (int r = 0; r <= r_stab + 1; ++r) {
        long long chi = 0;
        for (auto [p, q] : support(fc)) {
            long long sign = ((p + q) % 2 == 0) ? 1 : -1;
            chi += sign * static_cast<long long>(page_entry(fc, p, q, r).entry.dim());
        }
        expect(chi == chi_complex, "Euler characteristic drifts at r=" + std::to_string(r));
    }

    // degree-(p+q) homology of the graded columns is page 1
    for (auto [p, q] : support(fc)) {
        Mat out = differential(fc, p, q, 0);
        Mat in = differential(fc, p, q + 1, 0);
        size_t h = kernel(out).dim() - rank(in);
        expect(h == page_entry(fc, p, q, 1).entry.dim(),
               "graded-column homology differs from page 1 at (p=" + std::to_string(p) +
                   ",q=" + std::to_string(q) + ")");
    }

    ConvergenceReport rep = convergence_report(fc);
    expect(rep.verdict, "convergence verdict is false");
    return fails;
}

FamilyResult spectral_invariants(int trials, const std::vector<uint32_t>& primes,
                                 size_t max_total_dim, int max_filt_range, uint64_t seed) {
    FamilyResult res{"spectral invariants"};
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        uint32_t p = pick_prime(primes, rng);
        FilteredComplex fc = make_random(p, max_total_dim, max_filt_range, rng.next(1ull << 62));
        if (!fc.validate().ok()) {
            res.tally(false, "trial " + std::to_string(t) + ": generator produced an invalid complex");
            continue;
        }
        std::vector<std::string> fails = spectral_instance_failures(fc);
        res.tally(fails.empty(),
                  "trial " + std::to_string(t) + (fails.empty() ? "" : ": " + fails.front()));
    }
    return res;
}

}  // namespace specseq::suite
