#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "specseq/fp.hpp"

namespace specseq {

using Vec = std::vector<uint32_t>;

// Dense matrix over F_p acting on column coordinate vectors, so the shape
// is rows x cols = dim(codomain) x dim(domain). Either side may be zero;
// 0 x k and k x 0 matrices are ordinary values.
class Mat {
public:
    Mat() : Mat(2, 0, 0) {}  // empty matrix; convenient for containers
    Mat(uint32_t p, size_t rows, size_t cols)
        : field_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    Mat(Fp field, size_t rows, size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Mat identity(uint32_t p, size_t n);
    static Mat from_rows(uint32_t p, size_t cols, const std::vector<Vec>& rows);

    const Fp& field() const { return field_; }
    uint32_t prime() const { return field_.prime(); }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint32_t operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    uint32_t& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }

    Vec row(size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
    void set_row(size_t i, const Vec& v);
    void set_col(size_t j, const Vec& v);

    Vec apply(const Vec& v) const;         // matrix * column vector
    Mat operator*(const Mat& rhs) const;
    Mat transpose() const;
    bool is_zero() const;

    bool operator==(const Mat&) const = default;

private:
    Fp field_;
    size_t rows_, cols_;
    std::vector<uint32_t> a_;
};

struct RrefResult {
    Mat reduced;
    std::vector<size_t> pivots;  // pivot columns, strictly increasing
    size_t rank;
};

// Unique reduced row echelon form. Dispatches to a bit-packed elimination
// for p = 2; both paths produce the same result (RREF is unique).
RrefResult rref(const Mat& m);
size_t rank(const Mat& m);

// Rows spanning the null space {v : f v = 0}. Not normalized; callers
// canonicalize through Subspace.
Mat kernel_basis(const Mat& f);

// One solution of a x = b (free variables zero), or nullopt.
std::optional<Vec> solve(const Mat& a, const Vec& b);

std::optional<Mat> inverse(const Mat& m);

std::string to_string(const Vec& v);
std::string to_string(const Mat& m);

namespace detail {
RrefResult rref_generic(const Mat& m);
RrefResult rref_bitpacked_gf2(const Mat& m);
}  // namespace detail

}  // namespace specseq
