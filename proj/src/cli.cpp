#include "specseq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "specseq/document.hpp"
#include "specseq/oracle.hpp"
#include "specseq/suite.hpp"

namespace specseq::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DocumentError("cannot read \"" + path + "\"");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Loads and parses; on parse failure prints the error and sets the code.
std::optional<ComplexDocument> load(const std::string& path, std::ostream& out, int& code) {
    try {
        return parse_complex_document(read_file(path));
    } catch (const DocumentError& e) {
        out << "error: " << e.what() << "\n";
        code = 1;
        return std::nullopt;
    }
}

void print_family(std::ostream& out, const suite::FamilyResult& r) {
    out << "  " << r.name << ": " << r.passed << "/" << (r.passed + r.failed) << " passed"
        << (r.ok() ? "" : "  FAIL") << "\n";
    for (const std::string& f : r.failures) out << "    " << f << "\n";
}

}  // namespace

int cmd_validate(const std::string& path, std::ostream& out) {
    int code = 0;
    auto doc = load(path, out, code);
    if (!doc) return code;
    ValidationReport report = doc->complex.validate();
    out << report.to_string();
    return report.ok() ? 0 : 2;
}

int cmd_pages(const std::string& path, const PagesOptions& opt, std::ostream& out) {
    int code = 0;
    auto doc = load(path, out, code);
    if (!doc) return code;
    ValidationReport report = doc->complex.validate();
    if (!report.ok()) {
        out << report.to_string();
        return 2;
    }
    const FilteredComplex& fc = doc->complex;
    const int r_stab = stabilization_index(fc);
    const int top = opt.max_r < 0 ? r_stab : std::min(opt.max_r, r_stab);

    if (opt.machine) {
        nlohmann::ordered_json pages = nlohmann::ordered_json::array();
        for (int r = 0; r <= top; ++r) pages.push_back(page_to_json(fc, page(fc, r)));
        nlohmann::ordered_json inf_page = page_to_json(fc, page(fc, stage_infinity));
        inf_page["convergence"] = convergence_to_json(fc, convergence_report(fc));
        pages.push_back(std::move(inf_page));
        out << pages.dump(2) << "\n";
    } else {
        for (int r = 0; r <= top; ++r) out << render_page_text(fc, page(fc, r)) << "\n";
        out << render_page_text(fc, page(fc, stage_infinity));
    }
    return 0;
}

int cmd_converge(const std::string& path, std::ostream& out) {
    int code = 0;
    auto doc = load(path, out, code);
    if (!doc) return code;
    ValidationReport report = doc->complex.validate();
    if (!report.ok()) {
        out << report.to_string();
        return 2;
    }
    ConvergenceReport rep = convergence_report(doc->complex);
    out << render_convergence_text(doc->complex, rep);
    return rep.verdict ? 0 : 2;
}

int cmd_check(const CheckOptions& opt, std::ostream& out) {
    std::vector<suite::FamilyResult> results;

    if (opt.random) {
        const std::vector<uint32_t> primes{opt.prime};
        const size_t ambient = std::min<size_t>(opt.max_dim, 6);
        const size_t oracle_ambient = std::min<size_t>(ambient, opt.prime == 2 ? 8 : 5);
        uint64_t s = opt.seed;
        results.push_back(suite::modular_law(opt.trials, primes, ambient, s + 1));
        results.push_back(suite::chain_limits(opt.trials, primes, ambient, s + 2));
        results.push_back(suite::butterfly_isomorphisms(opt.trials, primes, ambient, s + 3));
        results.push_back(suite::surjectivity_criterion(opt.trials, primes, ambient, s + 4));
        results.push_back(suite::injectivity_criterion(opt.trials, primes, ambient, s + 5));
        results.push_back(suite::pullback_pushforward_iso(opt.trials, primes, ambient, s + 6));
        results.push_back(suite::induced_composition(opt.trials, primes, ambient, s + 7));
        results.push_back(suite::lattice_canonicality(opt.trials, primes, ambient, s + 8));
        results.push_back(suite::lattice_oracle_equivalence(
            std::min(opt.trials, 200), primes, oracle_ambient, s + 9));
        const int complex_trials = std::max(1, opt.trials / 4);
        if (opt.prime == 2 && opt.max_dim <= 8)
            results.push_back(
                suite::complex_oracle_equivalence(complex_trials, s + 10, opt.prime, opt.max_dim, 3));
        results.push_back(
            suite::spectral_invariants(complex_trials, primes, opt.max_dim, 4, s + 11));
    } else {
        int code = 0;
        auto doc = load(opt.path, out, code);
        if (!doc) return code;
        ValidationReport report = doc->complex.validate();
        if (!report.ok()) {
            out << report.to_string();
            return 2;
        }
        suite::FamilyResult inst{"spectral invariants on the document"};
        std::vector<std::string> fails = suite::spectral_instance_failures(doc->complex);
        if (fails.empty()) {
            inst.passed = 1;
        } else {
            inst.failed = 1;
            fails.resize(std::min<size_t>(fails.size(), 8));
            inst.failures = std::move(fails);
        }
        results.push_back(std::move(inst));

        // oracle cross-check when the instance is small enough to enumerate
        bool enumerable = true;
        for (int n = doc->complex.min_degree(); n <= doc->complex.max_degree(); ++n) {
            uint64_t count = 1;
            for (size_t i = 0; i < doc->complex.dim(n) && enumerable; ++i) {
                count *= doc->complex.prime();
                if (count > oracle::default_cap) enumerable = false;
            }
        }
        if (enumerable) {
            suite::FamilyResult ora{"page dims vs coset counts"};
            bool good = true;
            const int r_stab = stabilization_index(doc->complex);
            for (auto [p, q] : support(doc->complex)) {
                for (int r = 0; r <= r_stab + 1 && good; ++r)
                    good = page_entry(doc->complex, p, q, r).entry.dim() ==
                           oracle::page_dim(doc->complex, p, q, r);
                if (good)
                    good = infinity_entry(doc->complex, p, q).entry.dim() ==
                           oracle::page_dim(doc->complex, p, q, stage_infinity);
                if (!good) break;
            }
            ora.tally(good, "oracle mismatch");
            results.push_back(std::move(ora));
        }
    }

    bool all_ok = true;
    for (const suite::FamilyResult& r : results) {
        print_family(out, r);
        all_ok = all_ok && r.ok();
    }
    out << (all_ok ? "all checks passed" : "CHECKS FAILED") << "\n";
    return all_ok ? 0 : 2;
}

}  // namespace specseq::cli
