#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "specseq/subspace.hpp"

namespace specseq {

// Filtration index sentinels. Any index at or below min_filtration()-1
// behaves as -infinity (the zero subspace) and any index at or above
// max_filtration() behaves as +infinity (the full space), so the limit
// cases are attained at finite indices.
inline constexpr int filt_neg_inf = std::numeric_limits<int>::min() / 4;
inline constexpr int filt_pos_inf = std::numeric_limits<int>::max() / 4;

// Distinguished page stage meaning "the limit page".
inline constexpr int stage_infinity = std::numeric_limits<int>::max();

struct Violation {
    std::string invariant;  // "complex", "nesting", "compatibility", "exhaustive"
    int n;
    int p;
    Vec witness;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

// A finite chain complex over F_p with a finite-range nested filtration.
// Degrees are homological (d_n lowers degree by one) and d_n is stored as
// a dim C_{n-1} x dim C_n matrix acting on column vectors. The object is
// immutable once built; validate() reports semantic violations as data.
class FilteredComplex {
public:
    FilteredComplex(uint32_t prime, int n_min, std::vector<size_t> dims,
                    const std::map<int, Mat>& boundaries,  // degree -> d_n, absent means zero
                    int p_min,
                    std::vector<std::vector<Subspace>> filtration);  // [n-n_min][p-p_min]

    uint32_t prime() const { return prime_; }
    int min_degree() const { return n_min_; }
    int max_degree() const { return n_min_ + static_cast<int>(dims_.size()) - 1; }
    int min_filtration() const { return p_min_; }
    int max_filtration() const { return p_min_ + static_cast<int>(filt_.front().size()) - 1; }

    size_t dim(int n) const;
    // d_n as a dim C_{n-1} x dim C_n matrix; degenerate shapes outside the
    // degree range.
    Mat boundary(int n) const;
    // F_p C_n, clamped to the zero subspace below p_min and the full space
    // above p_max.
    Subspace filtration(int n, int p) const;

    ValidationReport validate() const;

    bool operator==(const FilteredComplex&) const = default;

private:
    uint32_t prime_;
    int n_min_;
    std::vector<size_t> dims_;
    std::vector<Mat> boundaries_;  // indexed n - n_min, shape dim(n-1) x dim(n)
    int p_min_;
    std::vector<std::vector<Subspace>> filt_;
};

// F_p K_n = d^{-1}(F_p C_{n-1}) and F_p I_n = d(F_{p} C_{n+1}). The index
// may be filt_neg_inf / filt_pos_inf: the kernel and full space limits for
// K, the zero and image limits for I.
Subspace k_filt(const FilteredComplex& fc, int p, int n);
Subspace i_filt(const FilteredComplex& fc, int p, int n);

// A bare chain complex, the input to the filtration builders.
struct ChainData {
    uint32_t prime;
    int n_min;
    std::vector<size_t> dims;
    std::map<int, Mat> boundaries;
};

// Single-step filtration with p_min = p_max = 0.
FilteredComplex make_trivial_filtration(const ChainData& c);

// F_p C_n = span of the first breaks[n][p - p_min] standard basis vectors.
// Break counts must be nondecreasing in p and at most dim C_n.
FilteredComplex make_column_filtration(const ChainData& c, int p_min,
                                       const std::map<int, std::vector<size_t>>& breaks);

// A bicomplex with commuting squares. horizontal(i,j): C_{i,j} -> C_{i-1,j},
// vertical(i,j): C_{i,j} -> C_{i,j-1}; rows and columns are complexes.
struct Bicomplex {
    uint32_t prime;
    int i_min, j_min;
    std::vector<std::vector<size_t>> dims;  // [i-i_min][j-j_min]
    std::map<std::pair<int, int>, Mat> horizontal;
    std::map<std::pair<int, int>, Mat> vertical;
};

// Total complex with the column filtration F_p Tot_n = (+) over i <= p of
// C_{i,n-i}. The vertical family is sign-twisted by column parity so the
// total differential squares to zero.
FilteredComplex make_total_of_bicomplex(const Bicomplex& bc);

// Deterministic-in-seed random valid instance: a complex assembled from
// conjugated elementary pieces (so d compose to zero by construction) and
// a filtration accumulated from random subcomplexes.
FilteredComplex make_random(uint32_t p, size_t max_total_dim, int max_filt_range, uint64_t seed);

}  // namespace specseq
