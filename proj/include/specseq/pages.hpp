#pragma once

#include <map>
#include <utility>

#include "specseq/complex.hpp"
#include "specseq/subquotient.hpp"

namespace specseq {

// Z^r and B^r at position (p, q), as subspaces of C_{p+q}:
//   Z^r = F_{p-1}C + F_{p-r}K & F_p C
//   B^r = F_{p-1}C + F_{p+r-1}I & F_p C
// r may be stage_infinity, which evaluates the closed form with ker d and
// im d (the limits are attained at finite filtration indices, so no
// iteration is involved).
Subspace z_group(const FilteredComplex& fc, int p, int q, int r);
Subspace b_group(const FilteredComplex& fc, int p, int q, int r);

struct PageEntry {
    int p, q;
    int r;  // finite stage or stage_infinity
    Subquotient entry;
};

PageEntry page_entry(const FilteredComplex& fc, int p, int q, int r);
PageEntry infinity_entry(const FilteredComplex& fc, int p, int q);

// Smallest stage at which every page equals the limit page and all
// differentials vanish: (p_max - p_min) + 1.
int stabilization_index(const FilteredComplex& fc);

// Matrix of d^r: E^r_{p,q} -> E^r_{p-r,q+r-1} on the coset bases. Each
// coset representative x is split as x = a + k with a in F_{p-1}C and k in
// F_{p-r}K & F_p C; the column is the class of d(k). Any admissible split
// gives the same class.
Mat differential(const FilteredComplex& fc, int p, int q, int r);

struct Page {
    int r;
    // support rectangle: p in [p_min-1, p_max+1], p+q in [n_min, n_max]
    std::map<std::pair<int, int>, PageEntry> entries;
    std::map<std::pair<int, int>, Mat> differentials;
};

Page page(const FilteredComplex& fc, int r);

// (p, q) positions of the support rectangle, ordered.
std::vector<std::pair<int, int>> support(const FilteredComplex& fc);

struct CheckResult {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(std::string what) {
        ok = false;
        failures.push_back(std::move(what));
    }
};

// Verifies, at every support position, that ker d^r and im d^r have the
// dimensions of Z^{r+1}/B^r and B^{r+1}/B^r, and that the homology of
// (E^r, d^r) maps isomorphically onto E^{r+1} by representatives.
CheckResult turn_page_check(const FilteredComplex& fc, int r);

// The isomorphism Z^r/Z^{r+1} -> B^{r+1}/B^r at (p-r, q+r-1) induced by
// the boundary map: both sides are rewritten through the Zassenhaus middle
// term and the boundary is applied where it restricts to an isomorphism.
struct BoundaryIso {
    Subquotient source;  // Z^r/Z^{r+1} at (p,q)
    Subquotient target;  // B^{r+1}/B^r at (p-r,q+r-1)
    Mat map;
    bool invertible;
};

BoundaryIso boundary_induced_iso(const FilteredComplex& fc, int p, int q, int r);

// ker d_n / im d_{n+1} with the canonical coset basis.
Subquotient homology(const FilteredComplex& fc, int n);
// F_p H_n = im d + F_p C_n & ker d, as a subspace of C_n.
Subspace homology_filtration(const FilteredComplex& fc, int p, int n);

struct ConvergencePair {
    int p, q;
    size_t dim_infinity;
    size_t dim_graded;
    Mat witness;  // limit entry -> graded piece of homology
    bool invertible;
};

struct HomologyLine {
    int n;
    size_t dim;                          // dim H_n
    std::vector<size_t> filtration_dims; // dim of F_p H_n inside H_n, p = p_min-1 .. p_max
};

struct ConvergenceReport {
    std::vector<ConvergencePair> pairs;
    std::vector<HomologyLine> homology;
    bool verdict = true;
};

// Matches every limit entry against the corresponding graded piece of the
// homology filtration, with an explicit invertible witness through the
// butterfly middle term, and checks the dimension bookkeeping per degree.
ConvergenceReport convergence_report(const FilteredComplex& fc);

}  // namespace specseq
