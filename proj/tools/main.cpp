#include <CLI11.hpp>
#include <iostream>

#include "specseq/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"spectral sequences of finite filtered chain complexes over a prime field"};
    app.require_subcommand(1);

    std::string path;
    auto* validate = app.add_subcommand("validate", "check a complex document against the invariants");
    validate->add_option("path", path, "complex document")->required();

    specseq::cli::PagesOptions pages_opt;
    std::string format = "text";
    auto* pages = app.add_subcommand("pages", "compute pages up to stabilization plus the limit page");
    pages->add_option("path", path, "complex document")->required();
    pages->add_option("--max-r", pages_opt.max_r, "largest finite stage to print");
    pages->add_option("--format", format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));

    auto* converge = app.add_subcommand("converge", "match the limit page against graded homology");
    converge->add_option("path", path, "complex document")->required();

    specseq::cli::CheckOptions check_opt;
    auto* check = app.add_subcommand("check", "run the invariant suite");
    check->add_option("path", check_opt.path, "complex document to check");
    check->add_flag("--random", check_opt.random, "run on randomized inputs instead of a document");
    check->add_option("--trials", check_opt.trials, "trials per invariant family");
    check->add_option("--seed", check_opt.seed, "seed for the randomized suite");
    check->add_option("--prime", check_opt.prime, "coefficient prime for randomized inputs");
    check->add_option("--max-dim", check_opt.max_dim, "total dimension bound for randomized inputs");

    CLI11_PARSE(app, argc, argv);

    if (validate->parsed()) return specseq::cli::cmd_validate(path, std::cout);
    if (pages->parsed()) {
        pages_opt.machine = (format == "machine");
        return specseq::cli::cmd_pages(path, pages_opt, std::cout);
    }
    if (converge->parsed()) return specseq::cli::cmd_converge(path, std::cout);
    if (check->parsed()) {
        if (!check_opt.random && check_opt.path.empty()) {
            std::cout << "error: check needs a document path or --random\n";
            return 1;
        }
        return specseq::cli::cmd_check(check_opt, std::cout);
    }
    return 1;
}
