#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "latdet/lattice.hpp"

namespace latdet::cli {

enum class Format { report, csv, json };

/// Everything a command needs, filled from the command line (or directly by
/// tests). Fields a command does not use are ignored.
struct RunConfig {
    std::string command;     // detratio, spectrum, figure, lommel, convergence, zeromode
    std::string target;      // linear / rosen-morse, fig1 / fig2, eval

    double b = 1.0;
    double l = 0.0;
    double nu = 0.0;
    double z = 1.0;
    std::optional<int> p;    // vertex count (Lommel degree for `lommel eval`)
    int pmax = 1000;

    double range_min = 0.0;
    double range_max = 0.0;
    int steps = 0;

    std::string potential;   // spectrum / zeromode potential spec
    std::string bc = "dirichlet";
    std::string method = "closed";
    bool continuum = false;
    bool vectors = false;

    std::optional<Format> format;  // default depends on the command
    std::string out;               // empty: standard output
};

/// Bad flag values that CLI11 cannot catch on its own (ranges, specs).
/// Reported with exit status 2, like any other usage error.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// `free`, `linear:b=<r>`, `rosen-morse:l=<r>`, `raw:<v1>,<v2>,...` or a
/// path to a one-column CSV file. Builtins need `p`; tables must match it
/// when it is given.
PotentialTable resolve_potential(const std::string& spec, std::optional<int> p);

/// `dirichlet`, `neumann` or `robin:<alpha>,<beta>`.
BoundaryCondition parse_boundary(const std::string& spec);

/// Worker count for parameter sweeps: hardware concurrency, capped by
/// LATTICE_DET_THREADS when set. A value that is not a positive integer is a
/// usage error.
unsigned sweep_threads(std::size_t tasks);

/// Runs one command. Returns 0 on success, 1 on a numeric or I/O failure
/// (message on `err`), 2 on a usage error.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and calls execute(). Same exit statuses; --help and
/// --version print to `out` and return 0.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace latdet::cli
