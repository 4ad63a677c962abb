// Command implementations behind the command line tool. Each returns the
// process exit code: 0 success, 1 parse or usage error, 2 when the relation
// ideal cannot be certified admissible, 3 on resource limits.

#pragma once

#include <iosfwd>
#include <string>

#include "derdim/bounds.hpp"
#include "derdim/parse.hpp"

namespace derdim {

struct CliOptions {
    int cutoff = 64;
    int depth = 24;
    int max_degree = 30;
    u64 seed = 0;
    bool json = false;
    int subset_limit = 16;
    bool greedy = false;
    bool show_all = false;
};

int cmd_analyze(const std::string& path, const CliOptions& opt, std::ostream& out, std::ostream& err);
int cmd_bounds(const std::string& path, const std::string& simples, const CliOptions& opt,
               std::ostream& out, std::ostream& err);
int cmd_search(const std::string& path, const CliOptions& opt, std::ostream& out, std::ostream& err);
int cmd_resolve(const std::string& path, const std::string& module_token, const CliOptions& opt,
                std::ostream& out, std::ostream& err);
int cmd_syzygy_type(const std::string& path, const CliOptions& opt, std::ostream& out, std::ostream& err);

// "2,3,4" | "none" | "all" -> 0-based vertex list; throws std::invalid_argument.
std::vector<int> parse_simples_arg(const std::string& arg, int vertex_count);

}  // namespace derdim
