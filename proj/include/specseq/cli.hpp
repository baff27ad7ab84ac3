#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace specseq::cli {

// Exit codes shared by all commands: 0 success (and true verdicts),
// 1 unreadable or malformed document, 2 semantic failure (validation
// violations, false verdicts, failed checks).

int cmd_validate(const std::string& path, std::ostream& out);

struct PagesOptions {
    int max_r = -1;  // negative means "up to the stabilization index"
    bool machine = false;
};
int cmd_pages(const std::string& path, const PagesOptions& opt, std::ostream& out);

int cmd_converge(const std::string& path, std::ostream& out);

struct CheckOptions {
    std::string path;  // empty with random = true
    bool random = false;
    int trials = 200;
    uint64_t seed = 0;
    uint32_t prime = 2;
    size_t max_dim = 10;
};
int cmd_check(const CheckOptions& opt, std::ostream& out);

}  // namespace specseq::cli
