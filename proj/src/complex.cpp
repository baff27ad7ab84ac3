#include "specseq/complex.hpp"

#include <sstream>
#include <stdexcept>

#include "specseq/rand.hpp"

namespace specseq {

std::string ValidationReport::to_string() const {
    if (violations.empty()) return "valid\n";
    std::ostringstream os;
    for (const Violation& v : violations) {
        os << v.invariant << " violation at (n=" << v.n;
        if (v.invariant != "complex") os << ", p=" << v.p;
        os << ") witness " << specseq::to_string(v.witness);
        if (!v.detail.empty()) os << ": " << v.detail;
        os << '\n';
    }
    return os.str();
}

FilteredComplex::FilteredComplex(uint32_t prime, int n_min, std::vector<size_t> dims,
                                 const std::map<int, Mat>& boundaries, int p_min,
                                 std::vector<std::vector<Subspace>> filtration)
    : prime_(prime), n_min_(n_min), dims_(std::move(dims)), p_min_(p_min), filt_(std::move(filtration)) {
    Fp field(prime);  // validates primality
    if (dims_.empty()) throw std::invalid_argument("FilteredComplex: empty degree range");
    if (filt_.size() != dims_.size())
        throw std::invalid_argument("FilteredComplex: filtration does not cover the degree range");
    const size_t steps = filt_.front().size();
    if (steps == 0) throw std::invalid_argument("FilteredComplex: empty filtration range");
    for (size_t i = 0; i < filt_.size(); ++i) {
        if (filt_[i].size() != steps)
            throw std::invalid_argument("FilteredComplex: ragged filtration range");
        for (const Subspace& s : filt_[i]) {
            if (s.prime() != prime_) throw std::invalid_argument("FilteredComplex: modulus mismatch");
            if (s.ambient() != dims_[i])
                throw std::invalid_argument("FilteredComplex: filtration ambient mismatch at degree " +
                                            std::to_string(n_min_ + static_cast<int>(i)));
        }
    }

    const int n_max = max_degree();
    for (const auto& [n, d] : boundaries) {
        if (n <= n_min_ || n > n_max)
            throw std::invalid_argument("FilteredComplex: boundary at degree " + std::to_string(n) +
                                        " outside the degree range");
        if (d.prime() != prime_) throw std::invalid_argument("FilteredComplex: boundary modulus mismatch");
        if (d.rows() != dims_[n - 1 - n_min_] || d.cols() != dims_[n - n_min_])
            throw std::invalid_argument("FilteredComplex: boundary shape mismatch at degree " +
                                        std::to_string(n));
    }
    for (int n = n_min_; n <= n_max; ++n) {
        auto it = boundaries.find(n);
        size_t target = (n == n_min_) ? 0 : dims_[n - 1 - n_min_];
        if (it != boundaries.end())
            boundaries_.push_back(it->second);
        else
            boundaries_.push_back(Mat(prime_, target, dims_[n - n_min_]));
    }
}

size_t FilteredComplex::dim(int n) const {
    if (n < n_min_ || n > max_degree()) return 0;
    return dims_[n - n_min_];
}

Mat FilteredComplex::boundary(int n) const {
    if (n >= n_min_ && n <= max_degree()) return boundaries_[n - n_min_];
    return Mat(prime_, dim(n - 1), dim(n));
}

Subspace FilteredComplex::filtration(int n, int p) const {
    if (n < n_min_ || n > max_degree()) return Subspace::zero(prime_, 0);
    if (p < p_min_) return Subspace::zero(prime_, dims_[n - n_min_]);
    if (p > max_filtration()) return Subspace::full(prime_, dims_[n - n_min_]);
    return filt_[n - n_min_][p - p_min_];
}

ValidationReport FilteredComplex::validate() const {
    ValidationReport report;
    const int n_max = max_degree();
    const int p_max = max_filtration();

    // d o d = 0
    for (int n = n_min_ + 1; n <= n_max; ++n) {
        Mat dd = boundary(n - 1) * boundary(n);
        for (size_t j = 0; j < dd.cols(); ++j) {
            bool bad = false;
            for (size_t i = 0; i < dd.rows(); ++i)
                if (dd(i, j) != 0) bad = true;
            if (!bad) continue;
            Vec e(dim(n), 0);
            e[j] = 1;
            report.violations.push_back(
                {"complex", n, 0, e, "d(d(basis vector)) is nonzero"});
        }
    }

    // nesting F_p <= F_{p+1}
    for (int n = n_min_; n <= n_max; ++n)
        for (int p = p_min_; p < p_max; ++p) {
            const Subspace& lo = filt_[n - n_min_][p - p_min_];
            const Subspace& hi = filt_[n - n_min_][p + 1 - p_min_];
            for (size_t i = 0; i < lo.dim(); ++i) {
                Vec v = lo.basis().row(i);
                if (!hi.contains_vector(v)) {
                    report.violations.push_back(
                        {"nesting", n, p, v, "filtration step is not contained in the next one"});
                    break;
                }
            }
        }

    // compatibility d(F_p C_n) <= F_p C_{n-1}
    for (int n = n_min_; n <= n_max; ++n) {
        Mat d = boundary(n);
        for (int p = p_min_; p <= p_max; ++p) {
            const Subspace& s = filt_[n - n_min_][p - p_min_];
            Subspace target = filtration(n - 1, p);
            for (size_t i = 0; i < s.dim(); ++i) {
                Vec v = s.basis().row(i);
                if (!target.contains_vector(d.apply(v))) {
                    report.violations.push_back(
                        {"compatibility", n, p, v, "boundary image leaves the filtration step"});
                    break;
                }
            }
        }
    }

    // exhaustive F_{p_max} = C_n
    for (int n = n_min_; n <= n_max; ++n) {
        const Subspace& top = filt_[n - n_min_][p_max - p_min_];
        if (top.dim() == dims_[n - n_min_]) continue;
        for (size_t j = 0; j < dims_[n - n_min_]; ++j) {
            Vec e(dims_[n - n_min_], 0);
            e[j] = 1;
            if (!top.contains_vector(e)) {
                report.violations.push_back(
                    {"exhaustive", n, p_max, e, "top filtration step is a proper subspace"});
                break;
            }
        }
    }
    return report;
}

Subspace k_filt(const FilteredComplex& fc, int p, int n) {
    return preimage(fc.boundary(n), fc.filtration(n - 1, p));
}

Subspace i_filt(const FilteredComplex& fc, int p, int n) {
    return pushforward(fc.boundary(n + 1), fc.filtration(n + 1, p));
}

FilteredComplex make_trivial_filtration(const ChainData& c) {
    std::vector<std::vector<Subspace>> filt;
    for (size_t d : c.dims) filt.push_back({Subspace::full(c.prime, d)});
    return FilteredComplex(c.prime, c.n_min, c.dims, c.boundaries, 0, std::move(filt));
}

FilteredComplex make_column_filtration(const ChainData& c, int p_min,
                                       const std::map<int, std::vector<size_t>>& breaks) {
    const int n_max = c.n_min + static_cast<int>(c.dims.size()) - 1;
    size_t steps = 0;
    for (const auto& [n, counts] : breaks) {
        if (n < c.n_min || n > n_max)
            throw std::invalid_argument("make_column_filtration: breaks at degree " +
                                        std::to_string(n) + " outside the degree range");
        if (steps == 0) steps = counts.size();
        if (counts.size() != steps || steps == 0)
            throw std::invalid_argument("make_column_filtration: ragged break sequences");
    }
    if (steps == 0) throw std::invalid_argument("make_column_filtration: no breaks given");

    std::vector<std::vector<Subspace>> filt;
    for (int n = c.n_min; n <= n_max; ++n) {
        auto it = breaks.find(n);
        if (it == breaks.end())
            throw std::invalid_argument("make_column_filtration: missing breaks for degree " +
                                        std::to_string(n));
        const std::vector<size_t>& counts = it->second;
        const size_t dn = c.dims[n - c.n_min];
        std::vector<Subspace> col;
        size_t prev = 0;
        for (size_t k : counts) {
            if (k < prev)
                throw std::invalid_argument("make_column_filtration: break counts not monotone at degree " +
                                            std::to_string(n));
            if (k > dn)
                throw std::invalid_argument("make_column_filtration: break count exceeds dimension at degree " +
                                            std::to_string(n));
            prev = k;
            std::vector<Vec> rows;
            for (size_t j = 0; j < k; ++j) {
                Vec e(dn, 0);
                e[j] = 1;
                rows.push_back(std::move(e));
            }
            col.push_back(Subspace::span(c.prime, dn, rows));
        }
        filt.push_back(std::move(col));
    }
    return FilteredComplex(c.prime, c.n_min, c.dims, c.boundaries, p_min, std::move(filt));
}

FilteredComplex make_total_of_bicomplex(const Bicomplex& bc) {
    Fp field(bc.prime);
    const int i_max = bc.i_min + static_cast<int>(bc.dims.size()) - 1;
    int j_count = bc.dims.empty() ? 0 : static_cast<int>(bc.dims.front().size());
    for (const auto& row : bc.dims)
        if (static_cast<int>(row.size()) != j_count)
            throw std::invalid_argument("make_total_of_bicomplex: ragged dimension grid");
    if (j_count == 0) throw std::invalid_argument("make_total_of_bicomplex: empty grid");
    const int j_max = bc.j_min + j_count - 1;

    auto cell_dim = [&](int i, int j) -> size_t {
        if (i < bc.i_min || i > i_max || j < bc.j_min || j > j_max) return 0;
        return bc.dims[i - bc.i_min][j - bc.j_min];
    };
    auto get_map = [&](const std::map<std::pair<int, int>, Mat>& maps, int i, int j,
                       size_t rows, size_t cols) -> Mat {
        auto it = maps.find({i, j});
        if (it == maps.end()) return Mat(bc.prime, rows, cols);
        if (it->second.rows() != rows || it->second.cols() != cols)
            throw std::invalid_argument("make_total_of_bicomplex: map shape mismatch at (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
        return it->second;
    };
    auto horiz = [&](int i, int j) { return get_map(bc.horizontal, i, j, cell_dim(i - 1, j), cell_dim(i, j)); };
    auto vert = [&](int i, int j) { return get_map(bc.vertical, i, j, cell_dim(i, j - 1), cell_dim(i, j)); };

    // rows and columns must be complexes and squares must commute, so that
    // the parity twist below anticommutes them
    for (int i = bc.i_min; i <= i_max; ++i)
        for (int j = bc.j_min; j <= j_max; ++j) {
            if (cell_dim(i, j) == 0) continue;
            if (!(horiz(i - 1, j) * horiz(i, j)).is_zero() ||
                !(vert(i, j - 1) * vert(i, j)).is_zero() ||
                !(horiz(i, j - 1) * vert(i, j) == vert(i - 1, j) * horiz(i, j)))
                throw std::invalid_argument(
                    "make_total_of_bicomplex: square at (" + std::to_string(i) + "," +
                    std::to_string(j) + ") fails to anticommute after the sign twist");
        }

    const int n_min = bc.i_min + bc.j_min;
    const int n_max = i_max + j_max;
    std::vector<size_t> dims;
    // block offset of C_{i,n-i} inside Tot_n, blocks ordered by i ascending
    std::map<std::pair<int, int>, size_t> offset;
    for (int n = n_min; n <= n_max; ++n) {
        size_t total = 0;
        for (int i = bc.i_min; i <= i_max; ++i) {
            offset[{n, i}] = total;
            total += cell_dim(i, n - i);
        }
        dims.push_back(total);
    }

    std::map<int, Mat> boundaries;
    for (int n = n_min + 1; n <= n_max; ++n) {
        Mat d(bc.prime, dims[n - 1 - n_min], dims[n - n_min]);
        for (int i = bc.i_min; i <= i_max; ++i) {
            int j = n - i;
            size_t sd = cell_dim(i, j);
            if (sd == 0) continue;
            size_t src = offset[{n, i}];
            Mat h = horiz(i, j);
            size_t hrows = cell_dim(i - 1, j);
            size_t hoff = hrows ? offset[{n - 1, i - 1}] : 0;
            for (size_t r = 0; r < hrows; ++r)
                for (size_t cidx = 0; cidx < sd; ++cidx) d(hoff + r, src + cidx) = h(r, cidx);
            Mat v = vert(i, j);
            size_t vrows = cell_dim(i, j - 1);
            size_t voff = vrows ? offset[{n - 1, i}] : 0;
            bool twist = ((i - bc.i_min) % 2) != 0;
            for (size_t r = 0; r < vrows; ++r)
                for (size_t cidx = 0; cidx < sd; ++cidx)
                    d(voff + r, src + cidx) = twist ? field.neg(v(r, cidx)) : v(r, cidx);
        }
        boundaries.emplace(n, std::move(d));
    }

    // column filtration by the first index
    std::map<int, std::vector<size_t>> breaks;
    for (int n = n_min; n <= n_max; ++n) {
        std::vector<size_t> counts;
        for (int pcol = bc.i_min; pcol <= i_max; ++pcol) {
            size_t k = 0;
            for (int i = bc.i_min; i <= pcol; ++i) k += cell_dim(i, n - i);
            counts.push_back(k);
        }
        breaks.emplace(n, std::move(counts));
    }
    ChainData cd{bc.prime, n_min, dims, boundaries};
    return make_column_filtration(cd, bc.i_min, breaks);
}

FilteredComplex make_random(uint32_t p, size_t max_total_dim, int max_filt_range, uint64_t seed) {
    if (max_total_dim < 2) max_total_dim = 2;
    if (max_filt_range < 1) max_filt_range = 1;
    Rng rng(seed);
    Fp field(p);

    const int n_degrees = 2 + static_cast<int>(rng.next(3));  // 2..4
    const size_t budget = 2 + rng.next(max_total_dim - 1);
    std::vector<size_t> dims(n_degrees, 0);
    for (size_t i = 0; i < budget; ++i) dims[rng.next(n_degrees)]++;

    // ranks of each boundary map; dim C_i = h_i + rk_i + rk_{i+1}
    std::vector<size_t> rk(n_degrees + 1, 0);
    for (int i = n_degrees - 1; i >= 1; --i) {
        size_t cap = std::min(dims[i] - rk[i + 1], dims[i - 1]);
        rk[i] = cap ? rng.next(cap + 1) : 0;
    }

    // block-diagonal model complex conjugated by random changes of basis
    std::vector<Mat> basis_change, basis_change_inv;
    for (int i = 0; i < n_degrees; ++i) {
        Mat m = random_invertible(rng, p, dims[i]);
        basis_change_inv.push_back(*inverse(m));
        basis_change.push_back(std::move(m));
    }
    std::map<int, Mat> boundaries;
    for (int i = 1; i < n_degrees; ++i) {
        Mat model(p, dims[i - 1], dims[i]);
        size_t h_src = dims[i] - rk[i] - rk[i + 1];
        size_t tgt_base = dims[i - 1] - rk[i];
        for (size_t t = 0; t < rk[i]; ++t) model(tgt_base + t, h_src + t) = 1;
        boundaries.emplace(i, basis_change[i - 1] * (model * basis_change_inv[i]));
    }
    ChainData cd{p, 0, dims, boundaries};

    // cumulative sums of random subcomplexes; the top step is the full space
    const int range = 1 + static_cast<int>(rng.next(max_filt_range));
    const int p_min = static_cast<int>(rng.next(3)) - 1;
    std::vector<std::vector<Subspace>> filt(n_degrees);
    std::vector<Subspace> cur;
    for (int i = 0; i < n_degrees; ++i) cur.push_back(Subspace::zero(p, dims[i]));
    for (int step = 0; step < range - 1; ++step) {
        std::vector<Subspace> seeds;
        for (int i = 0; i < n_degrees; ++i) {
            size_t cnt = rng.next(3);
            std::vector<Vec> rows;
            for (size_t s = 0; s < cnt; ++s) rows.push_back(random_vector(rng, p, dims[i]));
            seeds.push_back(Subspace::span(p, dims[i], rows));
        }
        for (int i = 0; i < n_degrees; ++i) {
            Subspace u = seeds[i];
            if (i + 1 < n_degrees) u = sum(u, pushforward(boundaries.count(i + 1) ? boundaries.at(i + 1) : Mat(p, dims[i], dims[i + 1]), seeds[i + 1]));
            cur[i] = sum(cur[i], u);
            filt[i].push_back(cur[i]);
        }
    }
    for (int i = 0; i < n_degrees; ++i) filt[i].push_back(Subspace::full(p, dims[i]));
    return FilteredComplex(p, 0, dims, boundaries, p_min, std::move(filt));
}

}  // namespace specseq
