// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Usage: acceptance [fixtures_dir [cli_binary]]
// With a cli_binary the CLI criterion also runs the real executable twice
// per fixture and compares bytes and exit codes.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "specseq/cli.hpp"
#include "specseq/document.hpp"
#include "specseq/oracle.hpp"
#include "specseq/pages.hpp"
#include "specseq/suite.hpp"

using namespace specseq;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    std::string name;
    bool ok = true;
    std::vector<std::string> notes;
    double seconds = 0;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (notes.size() < 6) notes.push_back(what);
        }
    }
    void merge(const suite::FamilyResult& r) {
        std::ostringstream os;
        os << r.name << "=" << r.passed << "/" << (r.passed + r.failed);
        notes.push_back(os.str());
        if (!r.ok()) {
            ok = false;
            for (const std::string& f : r.failures)
                if (notes.size() < 12) notes.push_back("  " + f);
        }
    }
};

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// ---- criterion 1: lattice identity suite -----------------------------------

Criterion lattice_identities() {
    Criterion c{"lattice-identities"};
    Timer t;
    const std::vector<uint32_t> primes{2, 3, 5};
    const int trials = 500;
    const size_t ambient = 6;
    c.merge(suite::modular_law(trials, primes, ambient, 101));
    c.merge(suite::chain_limits(trials, primes, ambient, 102));
    c.merge(suite::butterfly_isomorphisms(trials, primes, ambient, 103));
    c.merge(suite::surjectivity_criterion(trials, primes, ambient, 104));
    c.merge(suite::injectivity_criterion(trials, primes, ambient, 105));
    c.merge(suite::pullback_pushforward_iso(trials, primes, ambient, 106));
    c.seconds = t.elapsed();
    c.expect(c.seconds < 30.0, "runtime exceeded 30 s");
    return c;
}

// ---- criterion 2: oracle equivalence ----------------------------------------

Criterion oracle_equivalence() {
    Criterion c{"oracle-equivalence"};
    Timer t;
    c.merge(suite::lattice_oracle_equivalence(200, {2, 3}, 5, 201));
    c.merge(suite::complex_oracle_equivalence(50, 202, 2, 8, 3));
    c.seconds = t.elapsed();
    c.expect(c.seconds < 60.0, "runtime exceeded 60 s");
    return c;
}

// ---- criterion 3: spectral-sequence suite -----------------------------------

Criterion spectral_suite() {
    Criterion c{"spectral-suite"};
    Timer t;
    c.merge(suite::spectral_invariants(200, {2, 3}, 12, 4, 301));
    c.seconds = t.elapsed();
    c.expect(c.seconds < 120.0, "runtime exceeded 2 min");
    return c;
}

// ---- criterion 4: closed-form cases -----------------------------------------

FilteredComplex worked_example() {
    std::map<int, Mat> bnd;
    bnd.emplace(1, Mat::from_rows(2, 2, {{1, 0}, {0, 0}}));
    std::vector<std::vector<Subspace>> filt;
    filt.push_back({Subspace::span(2, 2, {{1, 0}}), Subspace::full(2, 2)});
    filt.push_back({Subspace::span(2, 2, {{0, 1}}), Subspace::full(2, 2)});
    return FilteredComplex(2, 0, {2, 2}, bnd, 0, std::move(filt));
}

Criterion closed_form_cases(const fs::path& fixtures) {
    Criterion c{"closed-form-cases"};
    Timer t;

    // trivial filtration: page 1 entries are homology, d^0 is d itself
    {
        ChainData cd{2, 0, {2, 2}, {{1, Mat::from_rows(2, 2, {{1, 0}, {0, 0}})}}};
        FilteredComplex fc = make_trivial_filtration(cd);
        bool good = fc.validate().ok() && stabilization_index(fc) == 1;
        for (int q = 0; q <= 1 && good; ++q)
            good = page_entry(fc, 0, q, 1).entry == homology(fc, q) &&
                   differential(fc, 0, q, 0) == fc.boundary(q);
        c.expect(good, "trivial filtration does not reduce to homology");
        c.notes.push_back("trivial-filtration ok");
    }

    // zero differentials: every page is the associated graded
    {
        std::vector<std::vector<Subspace>> filt;
        filt.push_back({Subspace::span(2, 2, {{1, 1}}), Subspace::full(2, 2)});
        filt.push_back({Subspace::zero(2, 1), Subspace::full(2, 1)});
        FilteredComplex fc(2, 0, {2, 1}, {}, 0, std::move(filt));
        bool good = fc.validate().ok();
        for (auto [p, q] : support(fc))
            for (int r = 0; r <= stabilization_index(fc) + 2 && good; ++r)
                good = z_group(fc, p, q, r) == fc.filtration(p + q, p) &&
                       b_group(fc, p, q, r) == fc.filtration(p + q, p - 1) &&
                       differential(fc, p, q, r).is_zero();
        c.expect(good, "zero-differential complex leaves the associated graded");
        c.notes.push_back("zero-differential ok");
    }

    // exact 2x2 bicomplex: the limit page vanishes everywhere
    {
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
        bool good = fc.validate().ok();
        for (auto [p, q] : support(fc)) {
            if (!good) break;
            good = infinity_entry(fc, p, q).entry.dim() == 0 &&
                   oracle::page_dim(fc, p, q, stage_infinity) == 0;
        }
        good = good && convergence_report(fc).verdict;
        // the builder output and the committed fixture agree
        ComplexDocument doc = parse_complex_document(slurp(fixtures / "total_2x2.json"));
        good = good && doc.complex == fc;
        c.expect(good, "exact bicomplex total has a nonvanishing limit page");
        c.notes.push_back("exact-bicomplex ok");
    }

    // worked two-stage fixture: frozen page dimension sequence, one nonzero
    // differential of rank 1 at r = 1; oracle confirms every frozen value
    {
        FilteredComplex fc = worked_example();
        ComplexDocument doc = parse_complex_document(slurp(fixtures / "two_stage.json"));
        bool good = fc.validate().ok() && doc.complex == fc;

        // frozen dims at the four populated cells (0,1), (1,0), (0,0), (1,-1)
        // for pages 0, 1, 2; page 2 equals the limit page
        const std::vector<std::pair<int, int>> cells{{0, 1}, {1, 0}, {0, 0}, {1, -1}};
        const std::vector<std::vector<size_t>> frozen{
            {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 0, 0, 1}};
        for (int r = 0; r < 3 && good; ++r)
            for (size_t i = 0; i < cells.size() && good; ++i) {
                auto [p, q] = cells[i];
                good = page_entry(fc, p, q, r).entry.dim() == frozen[r][i] &&
                       oracle::page_dim(fc, p, q, r) == frozen[r][i];
            }
        for (size_t i = 0; i < cells.size() && good; ++i) {
            auto [p, q] = cells[i];
            good = infinity_entry(fc, p, q).entry.dim() == frozen[2][i] &&
                   oracle::page_dim(fc, p, q, stage_infinity) == frozen[2][i];
        }
        // exactly one nonzero differential over all stages, rank 1 at r=1
        size_t nonzero = 0;
        for (int r = 0; r <= stabilization_index(fc) + 1 && good; ++r)
            for (auto [p, q] : support(fc)) {
                size_t rk = rank(differential(fc, p, q, r));
                if (rk) {
                    ++nonzero;
                    good = good && r == 1 && rk == 1 && p == 1 && q == 0;
                }
            }
        good = good && nonzero == 1;
        c.expect(good, "worked example deviates from the frozen page dimensions");
        c.notes.push_back("worked-example ok");
    }

    c.seconds = t.elapsed();
    return c;
}

// ---- criterion 5: CLI determinism -------------------------------------------

struct CliRun {
    int code;
    std::string out;
};

CliRun run_in_process(const std::string& cmd, const fs::path& file) {
    std::ostringstream os;
    int code = 1;
    if (cmd == "validate") code = cli::cmd_validate(file.string(), os);
    if (cmd == "pages") code = cli::cmd_pages(file.string(), {3, false}, os);
    if (cmd == "machine") code = cli::cmd_pages(file.string(), {3, true}, os);
    if (cmd == "converge") code = cli::cmd_converge(file.string(), os);
    return {code, os.str()};
}

CliRun run_binary(const std::string& binary, const std::string& args, const fs::path& tmp) {
    std::string cmd = binary + " " + args + " > " + tmp.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, slurp(tmp)};
}

Criterion cli_determinism(const fs::path& fixtures, const std::string& binary) {
    Criterion c{"cli-determinism"};
    Timer t;
    const std::vector<std::string> all = {"two_stage.json",   "total_2x2.json",
                                          "trivial_small.json", "bad_nesting.json",
                                          "bad_compat.json",  "malformed.json",
                                          "unknown_field.json"};

    for (const std::string& name : all) {
        for (const std::string& cmd : {"validate", "pages", "machine", "converge"}) {
            CliRun a = run_in_process(cmd, fixtures / name);
            CliRun b = run_in_process(cmd, fixtures / name);
            c.expect(a.out == b.out && a.code == b.code,
                     name + " " + cmd + ": two runs differ");
        }
    }
    c.notes.push_back("double-run identical on " + std::to_string(all.size()) + " fixtures");

    // documented exit codes on the three fixture classes
    c.expect(run_in_process("validate", fixtures / "two_stage.json").code == 0 &&
                 run_in_process("validate", fixtures / "total_2x2.json").code == 0 &&
                 run_in_process("validate", fixtures / "trivial_small.json").code == 0,
             "valid fixtures should exit 0");
    c.expect(run_in_process("validate", fixtures / "bad_nesting.json").code == 2 &&
                 run_in_process("validate", fixtures / "bad_compat.json").code == 2,
             "violating fixtures should exit 2");
    c.expect(run_in_process("validate", fixtures / "malformed.json").code == 1 &&
                 run_in_process("validate", fixtures / "unknown_field.json").code == 1,
             "malformed fixtures should exit 1");
    c.notes.push_back("exit codes 0/2/1 observed");

    // round trip: parse -> serialize -> parse is the identity on canonical form
    for (const std::string& name : {"two_stage.json", "total_2x2.json", "trivial_small.json"}) {
        ComplexDocument doc = parse_complex_document(slurp(fixtures / name));
        std::string once = serialize_complex_document(doc);
        ComplexDocument again = parse_complex_document(once);
        c.expect(doc.complex == again.complex && serialize_complex_document(again) == once,
                 name + ": round trip is not the identity");
    }
    c.notes.push_back("round-trip identity");

    if (!binary.empty()) {
        fs::path tmpdir = fs::temp_directory_path() / "specseq_acceptance";
        fs::create_directories(tmpdir);
        int checked = 0;
        for (const std::string& name : all) {
            const fs::path file = fixtures / name;
            for (const std::string& args :
                 {std::string("validate "), std::string("pages --max-r 3 "),
                  std::string("pages --format machine "), std::string("converge ")}) {
                CliRun a = run_binary(binary, args + file.string(), tmpdir / "a.txt");
                CliRun b = run_binary(binary, args + file.string(), tmpdir / "b.txt");
                c.expect(a.code == b.code && a.out == b.out,
                         name + " (" + args + "): binary runs differ");
                ++checked;
            }
        }
        CliRun v = run_binary(binary, "validate " + (fixtures / "two_stage.json").string(),
                              tmpdir / "a.txt");
        CliRun n = run_binary(binary, "validate " + (fixtures / "bad_nesting.json").string(),
                              tmpdir / "a.txt");
        CliRun m = run_binary(binary, "validate " + (fixtures / "malformed.json").string(),
                              tmpdir / "a.txt");
        c.expect(v.code == 0 && n.code == 2 && m.code == 1, "binary exit codes differ");
        c.notes.push_back("binary double-run identical on " + std::to_string(checked) + " invocations");
    }

    c.seconds = t.elapsed();
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    fs::path fixtures = argc > 1 ? fs::path(argv[1]) : fs::path("tests/fixtures");
    std::string binary = argc > 2 ? argv[2] : "";

    std::vector<Criterion> results;
    results.push_back(lattice_identities());
    results.push_back(oracle_equivalence());
    results.push_back(spectral_suite());
    results.push_back(closed_form_cases(fixtures));
    results.push_back(cli_determinism(fixtures, binary));

    int failures = 0;
    for (const Criterion& c : results) {
        std::ostringstream line;
        line << (c.ok ? "[PASS] " : "[FAIL] ") << c.name << " (";
        line.setf(std::ios::fixed);
        line.precision(1);
        line << c.seconds << "s)";
        if (!c.notes.empty()) {
            line << " ";
            for (size_t i = 0; i < c.notes.size(); ++i) line << (i ? "; " : "") << c.notes[i];
        }
        std::cout << line.str() << "\n";
        if (!c.ok) ++failures;
    }
    return failures;
}
