#include "specseq/document.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace specseq {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void require_keys(const json& obj, const std::string& where,
                  std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) known = true;
        if (!known) throw DocumentError(where + ": unknown field \"" + it.key() + "\"");
    }
}

const json& require_field(const json& obj, const std::string& where, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw DocumentError(where + ": missing field \"" + key + "\"");
    return *it;
}

long long as_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw DocumentError(where + ": expected an integer");
    return v.get<long long>();
}

int parse_degree_key(const std::string& key, const std::string& where) {
    try {
        size_t pos = 0;
        int n = std::stoi(key, &pos);
        if (pos != key.size()) throw std::invalid_argument("");
        return n;
    } catch (...) {
        throw DocumentError(where + ": key \"" + key + "\" is not an integer");
    }
}

Mat parse_matrix(const json& v, const Fp& field, size_t rows, size_t cols, const std::string& where) {
    if (!v.is_array()) throw DocumentError(where + ": expected an array of rows");
    if (v.size() != rows)
        throw DocumentError(where + ": expected " + std::to_string(rows) + " rows, got " +
                            std::to_string(v.size()));
    Mat m(field, rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        const json& row = v[i];
        if (!row.is_array() || row.size() != cols)
            throw DocumentError(where + ": row " + std::to_string(i) + " must have " +
                                std::to_string(cols) + " entries");
        for (size_t j = 0; j < cols; ++j)
            m(i, j) = field.reduce(as_int(row[j], where));
    }
    return m;
}

std::vector<Vec> parse_rows(const json& v, const Fp& field, size_t cols, const std::string& where) {
    if (!v.is_array()) throw DocumentError(where + ": expected an array of basis rows");
    std::vector<Vec> rows;
    for (size_t i = 0; i < v.size(); ++i) {
        const json& row = v[i];
        if (!row.is_array() || row.size() != cols)
            throw DocumentError(where + ": row " + std::to_string(i) + " must have " +
                                std::to_string(cols) + " entries");
        Vec r(cols);
        for (size_t j = 0; j < cols; ++j) r[j] = field.reduce(as_int(row[j], where));
        rows.push_back(std::move(r));
    }
    return rows;
}

ordered_json matrix_to_json(const Mat& m) {
    ordered_json rows = ordered_json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string stage_label(int r) { return r == stage_infinity ? "inf" : std::to_string(r); }

}  // namespace

ComplexDocument parse_complex_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentError(std::string("parse error: ") + e.what());
    }
    if (!doc.is_object()) throw DocumentError("document: expected a JSON object");
    require_keys(doc, "document",
                 {"prime", "min_degree", "max_degree", "dims", "boundaries", "filtration"});

    long long prime_ll = as_int(require_field(doc, "document", "prime"), "prime");
    if (prime_ll < 2 || prime_ll > 0x7fffffff) throw DocumentError("prime: out of range");
    uint32_t prime = static_cast<uint32_t>(prime_ll);
    if (!is_prime(prime)) throw DocumentError("prime: " + std::to_string(prime) + " is not prime");
    Fp field(prime);

    int n_min = static_cast<int>(as_int(require_field(doc, "document", "min_degree"), "min_degree"));
    int n_max = static_cast<int>(as_int(require_field(doc, "document", "max_degree"), "max_degree"));
    if (n_max < n_min) throw DocumentError("max_degree: smaller than min_degree");

    const json& jdims = require_field(doc, "document", "dims");
    if (!jdims.is_array() || jdims.size() != static_cast<size_t>(n_max - n_min + 1))
        throw DocumentError("dims: expected one entry per degree");
    std::vector<size_t> dims;
    for (const json& d : jdims) {
        long long v = as_int(d, "dims");
        if (v < 0) throw DocumentError("dims: negative dimension");
        dims.push_back(static_cast<size_t>(v));
    }

    std::map<int, Mat> boundaries;
    const json& jbnd = require_field(doc, "document", "boundaries");
    if (!jbnd.is_object()) throw DocumentError("boundaries: expected an object keyed by degree");
    for (auto it = jbnd.begin(); it != jbnd.end(); ++it) {
        int n = parse_degree_key(it.key(), "boundaries");
        if (n <= n_min || n > n_max)
            throw DocumentError("boundaries: degree " + std::to_string(n) + " outside (min_degree, max_degree]");
        boundaries.emplace(n, parse_matrix(*it, field, dims[n - 1 - n_min], dims[n - n_min],
                                           "boundaries[" + it.key() + "]"));
    }

    const json& jf = require_field(doc, "document", "filtration");
    if (!jf.is_object()) throw DocumentError("filtration: expected an object");
    const json& jtype = require_field(jf, "filtration", "type");
    if (!jtype.is_string()) throw DocumentError("filtration.type: expected a string");
    std::string type = jtype.get<std::string>();

    ChainData cd{prime, n_min, dims, boundaries};
    if (type == "trivial") {
        require_keys(jf, "filtration", {"type"});
        return ComplexDocument{make_trivial_filtration(cd), ComplexDocument::FiltKind::trivial, {}};
    }
    if (type == "column") {
        require_keys(jf, "filtration", {"type", "p_min", "p_max", "breaks"});
        int p_min = static_cast<int>(as_int(require_field(jf, "filtration", "p_min"), "p_min"));
        int p_max = static_cast<int>(as_int(require_field(jf, "filtration", "p_max"), "p_max"));
        if (p_max < p_min) throw DocumentError("filtration: p_max smaller than p_min");
        const json& jb = require_field(jf, "filtration", "breaks");
        if (!jb.is_object()) throw DocumentError("breaks: expected an object keyed by degree");
        std::map<int, std::vector<size_t>> breaks;
        for (auto it = jb.begin(); it != jb.end(); ++it) {
            int n = parse_degree_key(it.key(), "breaks");
            if (!it->is_array() || it->size() != static_cast<size_t>(p_max - p_min + 1))
                throw DocumentError("breaks[" + it.key() + "]: expected one count per filtration index");
            std::vector<size_t> counts;
            for (const json& c : *it) {
                long long v = as_int(c, "breaks");
                if (v < 0) throw DocumentError("breaks: negative count");
                counts.push_back(static_cast<size_t>(v));
            }
            breaks.emplace(n, std::move(counts));
        }
        try {
            return ComplexDocument{make_column_filtration(cd, p_min, breaks),
                                   ComplexDocument::FiltKind::column, std::move(breaks)};
        } catch (const std::invalid_argument& e) {
            throw DocumentError(e.what());
        }
    }
    if (type == "explicit") {
        require_keys(jf, "filtration", {"type", "p_min", "p_max", "subspaces"});
        int p_min = static_cast<int>(as_int(require_field(jf, "filtration", "p_min"), "p_min"));
        int p_max = static_cast<int>(as_int(require_field(jf, "filtration", "p_max"), "p_max"));
        if (p_max < p_min) throw DocumentError("filtration: p_max smaller than p_min");
        const json& js = require_field(jf, "filtration", "subspaces");
        if (!js.is_object()) throw DocumentError("subspaces: expected an object keyed by degree");
        std::vector<std::vector<Subspace>> filt;
        for (int n = n_min; n <= n_max; ++n) {
            auto it = js.find(std::to_string(n));
            if (it == js.end())
                throw DocumentError("subspaces: missing degree " + std::to_string(n));
            if (!it->is_object())
                throw DocumentError("subspaces[" + std::to_string(n) + "]: expected an object keyed by p");
            std::vector<Subspace> col;
            for (int p = p_min; p <= p_max; ++p) {
                auto pit = it->find(std::to_string(p));
                if (pit == it->end())
                    throw DocumentError("subspaces[" + std::to_string(n) + "]: missing index " +
                                        std::to_string(p));
                col.push_back(Subspace::span(
                    prime, dims[n - n_min],
                    parse_rows(*pit, field, dims[n - n_min],
                               "subspaces[" + std::to_string(n) + "][" + std::to_string(p) + "]")));
            }
            for (auto pit = it->begin(); pit != it->end(); ++pit) {
                int p = parse_degree_key(pit.key(), "subspaces");
                if (p < p_min || p > p_max)
                    throw DocumentError("subspaces: index " + pit.key() + " outside [p_min, p_max]");
            }
            filt.push_back(std::move(col));
        }
        try {
            return ComplexDocument{
                FilteredComplex(prime, n_min, dims, boundaries, p_min, std::move(filt)),
                ComplexDocument::FiltKind::explicit_spaces,
                {}};
        } catch (const std::invalid_argument& e) {
            throw DocumentError(e.what());
        }
    }
    throw DocumentError("filtration.type: expected \"trivial\", \"column\" or \"explicit\"");
}

std::string serialize_complex_document(const ComplexDocument& doc) {
    const FilteredComplex& fc = doc.complex;
    ordered_json out;
    out["prime"] = fc.prime();
    out["min_degree"] = fc.min_degree();
    out["max_degree"] = fc.max_degree();
    ordered_json dims = ordered_json::array();
    for (int n = fc.min_degree(); n <= fc.max_degree(); ++n) dims.push_back(fc.dim(n));
    out["dims"] = std::move(dims);
    ordered_json bnd = ordered_json::object();
    for (int n = fc.min_degree() + 1; n <= fc.max_degree(); ++n)
        bnd[std::to_string(n)] = matrix_to_json(fc.boundary(n));
    out["boundaries"] = std::move(bnd);

    ordered_json jf = ordered_json::object();
    switch (doc.kind) {
        case ComplexDocument::FiltKind::trivial:
            jf["type"] = "trivial";
            break;
        case ComplexDocument::FiltKind::column: {
            jf["type"] = "column";
            jf["p_min"] = fc.min_filtration();
            jf["p_max"] = fc.max_filtration();
            ordered_json jb = ordered_json::object();
            for (const auto& [n, counts] : doc.breaks) jb[std::to_string(n)] = counts;
            jf["breaks"] = std::move(jb);
            break;
        }
        case ComplexDocument::FiltKind::explicit_spaces: {
            jf["type"] = "explicit";
            jf["p_min"] = fc.min_filtration();
            jf["p_max"] = fc.max_filtration();
            ordered_json js = ordered_json::object();
            for (int n = fc.min_degree(); n <= fc.max_degree(); ++n) {
                ordered_json per_p = ordered_json::object();
                for (int p = fc.min_filtration(); p <= fc.max_filtration(); ++p)
                    per_p[std::to_string(p)] = matrix_to_json(fc.filtration(n, p).basis());
                js[std::to_string(n)] = std::move(per_p);
            }
            jf["subspaces"] = std::move(js);
            break;
        }
    }
    out["filtration"] = std::move(jf);
    return out.dump(2) + "\n";
}

ordered_json page_to_json(const FilteredComplex& fc, const Page& pg) {
    ordered_json out;
    if (pg.r == stage_infinity)
        out["r"] = "inf";
    else
        out["r"] = pg.r;
    ordered_json entries = ordered_json::array();
    for (const auto& [pos, e] : pg.entries) {
        if (pos.first + pos.second < fc.min_degree() || pos.first + pos.second > fc.max_degree())
            continue;
        ordered_json je;
        je["p"] = pos.first;
        je["q"] = pos.second;
        je["dim"] = e.entry.dim();
        je["coset_basis"] = matrix_to_json(e.entry.coset_basis());
        entries.push_back(std::move(je));
    }
    out["entries"] = std::move(entries);
    ordered_json diffs = ordered_json::array();
    for (const auto& [pos, m] : pg.differentials) {
        const int n = pos.first + pos.second;
        if (n < fc.min_degree() || n > fc.max_degree()) continue;
        if (n - 1 < fc.min_degree() || n - 1 > fc.max_degree()) continue;
        ordered_json jd;
        jd["p"] = pos.first;
        jd["q"] = pos.second;
        jd["target_p"] = pos.first - pg.r;
        jd["target_q"] = pos.second + pg.r - 1;
        jd["matrix"] = matrix_to_json(m);
        diffs.push_back(std::move(jd));
    }
    out["differentials"] = std::move(diffs);
    return out;
}

ordered_json convergence_to_json(const FilteredComplex& fc, const ConvergenceReport& rep) {
    ordered_json out;
    ordered_json pairs = ordered_json::array();
    for (const ConvergencePair& pr : rep.pairs) {
        if (pr.p + pr.q < fc.min_degree() || pr.p + pr.q > fc.max_degree()) continue;
        ordered_json jp;
        jp["p"] = pr.p;
        jp["q"] = pr.q;
        jp["dim_limit"] = pr.dim_infinity;
        jp["dim_graded"] = pr.dim_graded;
        jp["invertible"] = pr.invertible;
        pairs.push_back(std::move(jp));
    }
    out["pairs"] = std::move(pairs);
    ordered_json hom = ordered_json::array();
    for (const HomologyLine& line : rep.homology) {
        ordered_json jh;
        jh["n"] = line.n;
        jh["dim"] = line.dim;
        jh["filtration_dims"] = line.filtration_dims;
        hom.push_back(std::move(jh));
    }
    out["homology"] = std::move(hom);
    out["verdict"] = rep.verdict;
    return out;
}

std::string render_page_text(const FilteredComplex& fc, const Page& pg) {
    std::ostringstream os;
    os << "page r=" << stage_label(pg.r) << "\n";
    const int p_lo = fc.min_filtration() - 1, p_hi = fc.max_filtration() + 1;
    const int q_lo = fc.min_degree() - p_hi, q_hi = fc.max_degree() - p_lo;

    size_t width = 5;
    for (int q = q_hi; q >= q_lo; --q) {
        os << "  q=" << std::setw(3) << q << " |";
        for (int p = p_lo; p <= p_hi; ++p) {
            const int n = p + q;
            std::string cell = ".";
            if (n >= fc.min_degree() && n <= fc.max_degree())
                cell = std::to_string(pg.entries.at({p, q}).entry.dim());
            os << std::setw(static_cast<int>(width)) << cell;
        }
        os << "\n";
    }
    os << "        +";
    for (int p = p_lo; p <= p_hi; ++p) os << std::string(width, '-');
    os << "\n         ";
    for (int p = p_lo; p <= p_hi; ++p) {
        std::string label = "p=" + std::to_string(p);
        os << std::setw(static_cast<int>(width)) << label;
    }
    os << "\n";

    bool any = false;
    for (const auto& [pos, m] : pg.differentials) {
        size_t rk = rank(m);
        if (rk == 0) continue;
        any = true;
        os << "  d (" << pos.first << "," << pos.second << ") -> (" << pos.first - pg.r << ","
           << pos.second + pg.r - 1 << ") rank " << rk << "\n";
    }
    if (!any && pg.r != stage_infinity) os << "  no nonzero differentials\n";
    return os.str();
}

std::string render_convergence_text(const FilteredComplex& fc, const ConvergenceReport& rep) {
    std::ostringstream os;
    for (const HomologyLine& line : rep.homology) {
        os << "H_" << line.n << ": dim " << line.dim << ", filtration dims";
        int p = fc.min_filtration() - 1;
        for (size_t d : line.filtration_dims) os << " p=" << p++ << ":" << d;
        os << "\n";
    }
    for (const ConvergencePair& pr : rep.pairs) {
        if (pr.dim_infinity == 0 && pr.dim_graded == 0) continue;
        os << "(p,q)=(" << pr.p << "," << pr.q << "): dim E_inf = " << pr.dim_infinity
           << ", dim gr H = " << pr.dim_graded << (pr.invertible ? ", witness invertible" : ", MISMATCH")
           << "\n";
    }
    os << "verdict: " << (rep.verdict ? "true" : "false") << "\n";
    return os.str();
}

}  // namespace specseq
