#include "specseq/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace specseq {

Mat Mat::identity(uint32_t p, size_t n) {
    Mat m(p, n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_rows(uint32_t p, size_t cols, const std::vector<Vec>& rows) {
    Mat m(p, rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("Mat::from_rows: row length mismatch");
        for (size_t j = 0; j < cols; ++j) {
            if (rows[i][j] >= p) throw std::invalid_argument("Mat::from_rows: entry not reduced mod p");
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

void Mat::set_row(size_t i, const Vec& v) {
    if (v.size() != cols_) throw std::invalid_argument("Mat::set_row: length mismatch");
    for (size_t j = 0; j < cols_; ++j) a_[i * cols_ + j] = v[j];
}

void Mat::set_col(size_t j, const Vec& v) {
    if (v.size() != rows_) throw std::invalid_argument("Mat::set_col: length mismatch");
    for (size_t i = 0; i < rows_; ++i) a_[i * cols_ + j] = v[i];
}

Vec Mat::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Mat::apply: vector length mismatch");
    Vec out(rows_, 0);
    for (size_t i = 0; i < rows_; ++i) {
        uint64_t acc = 0;
        for (size_t j = 0; j < cols_; ++j)
            acc += static_cast<uint64_t>(a_[i * cols_ + j]) * v[j];
        out[i] = static_cast<uint32_t>(acc % field_.prime());
    }
    return out;
}

Mat Mat::operator*(const Mat& rhs) const {
    if (field_ != rhs.field_) throw std::invalid_argument("Mat::operator*: modulus mismatch");
    if (cols_ != rhs.rows_) throw std::invalid_argument("Mat::operator*: shape mismatch");
    Mat out(field_, rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            uint32_t aik = a_[i * cols_ + k];
            if (aik == 0) continue;
            for (size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) = field_.add(out(i, j), field_.mul(aik, rhs(k, j)));
        }
    return out;
}

Mat Mat::transpose() const {
    Mat out(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out(j, i) = a_[i * cols_ + j];
    return out;
}

bool Mat::is_zero() const {
    for (uint32_t x : a_)
        if (x != 0) return false;
    return true;
}

namespace detail {

RrefResult rref_generic(const Mat& m) {
    Mat r = m;
    const Fp& f = r.field();
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        size_t sel = row;
        while (sel < r.rows() && r(sel, col) == 0) ++sel;
        if (sel == r.rows()) continue;
        if (sel != row)
            for (size_t j = 0; j < r.cols(); ++j) std::swap(r(row, j), r(sel, j));
        uint32_t scale = f.inv(r(row, col));
        if (scale != 1)
            for (size_t j = col; j < r.cols(); ++j) r(row, j) = f.mul(r(row, j), scale);
        for (size_t i = 0; i < r.rows(); ++i) {
            if (i == row || r(i, col) == 0) continue;
            uint32_t c = r(i, col);
            for (size_t j = col; j < r.cols(); ++j)
                r(i, j) = f.sub(r(i, j), f.mul(c, r(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), std::move(pivots), row};
}

RrefResult rref_bitpacked_gf2(const Mat& m) {
    const size_t rows = m.rows(), cols = m.cols();
    const size_t words = (cols + 63) / 64;
    std::vector<uint64_t> bits(rows * words, 0);
    auto word = [&](size_t i, size_t w) -> uint64_t& { return bits[i * words + w]; };
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (m(i, j)) word(i, j / 64) |= uint64_t(1) << (j % 64);

    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        const size_t w = col / 64;
        const uint64_t mask = uint64_t(1) << (col % 64);
        size_t sel = row;
        while (sel < rows && !(word(sel, w) & mask)) ++sel;
        if (sel == rows) continue;
        if (sel != row)
            for (size_t k = 0; k < words; ++k) std::swap(word(row, k), word(sel, k));
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || !(word(i, w) & mask)) continue;
            for (size_t k = 0; k < words; ++k) word(i, k) ^= word(row, k);
        }
        pivots.push_back(col);
        ++row;
    }

    Mat r(m.field(), rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            r(i, j) = (word(i, j / 64) >> (j % 64)) & 1;
    return {std::move(r), std::move(pivots), row};
}

}  // namespace detail

RrefResult rref(const Mat& m) {
    return m.prime() == 2 ? detail::rref_bitpacked_gf2(m) : detail::rref_generic(m);
}

size_t rank(const Mat& m) { return rref(m).rank; }

Mat kernel_basis(const Mat& f) {
    RrefResult r = rref(f);
    const Fp& field = f.field();
    std::vector<bool> is_pivot(f.cols(), false);
    for (size_t c : r.pivots) is_pivot[c] = true;
    std::vector<Vec> rows;
    for (size_t j = 0; j < f.cols(); ++j) {
        if (is_pivot[j]) continue;
        Vec v(f.cols(), 0);
        v[j] = 1;
        for (size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = field.neg(r.reduced(i, j));
        rows.push_back(std::move(v));
    }
    return Mat::from_rows(f.prime(), f.cols(), rows);
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    Mat aug(a.field(), a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;  // inconsistent
    Vec x(a.cols(), 0);
    for (size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.reduced(i, a.cols());
    return x;
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const size_t n = m.rows();
    Mat aug(m.field(), n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    RrefResult r = rref(aug);
    if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
    Mat inv(m.field(), n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
    return inv;
}

std::string to_string(const Vec& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

std::string to_string(const Mat& m) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < m.rows(); ++i) {
        if (i) os << "; ";
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m(i, j);
        }
    }
    os << ']';
    return os.str();
}

}  // namespace specseq
