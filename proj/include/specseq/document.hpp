#pragma once

#include <json.hpp>
#include <map>
#include <stdexcept>
#include <string>

#include "specseq/complex.hpp"
#include "specseq/pages.hpp"

namespace specseq {

// Raised for anything that prevents a document from becoming a
// FilteredComplex: broken JSON (with position info), unknown fields,
// wrong types or shapes. Semantic violations are not errors; they come
// back from validate() as data.
class DocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A parsed complex document. The filtration keeps its authored kind so
// serialization round-trips: trivial and column documents stay in their
// compact form, explicit documents canonicalize their basis rows.
struct ComplexDocument {
    enum class FiltKind { trivial, column, explicit_spaces };

    FilteredComplex complex;
    FiltKind kind;
    std::map<int, std::vector<size_t>> breaks;  // column documents only
};

ComplexDocument parse_complex_document(const std::string& text);
std::string serialize_complex_document(const ComplexDocument& doc);

// Machine-readable page records: entries with coset bases, differentials
// with target positions, and optionally the convergence data on the limit
// page. Entries are ordered by (p, q).
nlohmann::ordered_json page_to_json(const FilteredComplex& fc, const Page& pg);
nlohmann::ordered_json convergence_to_json(const FilteredComplex& fc, const ConvergenceReport& rep);

// Text rendering: one dimension grid per page (p horizontal, q vertical,
// "." off the degree range) followed by the nonzero differentials with
// their ranks.
std::string render_page_text(const FilteredComplex& fc, const Page& pg);
std::string render_convergence_text(const FilteredComplex& fc, const ConvergenceReport& rep);

}  // namespace specseq
