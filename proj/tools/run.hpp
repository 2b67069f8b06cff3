#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "tpjc/params.hpp"
#include "tpjc/state.hpp"

namespace tpjc::cli {

// Fully resolved description of one dataset run. Values are layered:
// built-in defaults, then the --config key=value file, then explicit flags,
// with later layers winning.
struct RunConfig {
    std::string model = "effective";  // effective | carrier | full | compare

    double nu = 400.0;
    double omega_c = 1.0;
    double delta = 20.0;
    double g1 = 1.0;
    double g2 = 1.0;
    double eta = 0.0;

    bool motion_coherent = false;
    double alpha = 0.0;  // motion coherent amplitude when motion_coherent
    int fock_m = 0;      // motion Fock level otherwise
    bool field_coherent = false;
    double beta = 0.0;   // field coherent amplitude when field_coherent
    int fock_p = 0;      // field Fock level otherwise

    double tau_min = 0.0;
    double tau_max = 25.0;
    int tau_points = 2000;
    double eps = 1e-10;
    std::string output_path;  // empty: write to the stream given to run_cli

    // Throws std::invalid_argument with a user-facing diagnostic.
    void validate() const;

    SystemParams system() const;
    Preparation preparation() const;
    std::vector<double> tau_grid() const;
};

// Plain key=value file: '#' comments and blank lines are ignored and keys
// match the long option names without the leading dashes. Unknown keys or
// malformed lines throw std::invalid_argument.
std::map<std::string, std::string> read_config_file(const std::string& path);

// The whole command-line tool behind main(): parses argv, runs the requested
// verb, writes datasets (to --out / --out-dir, or to fallback_out when no
// output path is given) and diagnostics to err. Returns the process exit
// code: 0 success (possibly with warnings), 2 bad arguments, 3 numerical
// failure.
int run_cli(int argc, const char* const* argv, std::ostream& fallback_out,
            std::ostream& err);

} // namespace tpjc::cli
