#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

// Command implementations behind the CLI binary.  They live in the library so
// tests can invoke them directly; the binary only parses flags and maps
// errors to exit codes (2 malformed configuration, 3 bad input data,
// 1 unexpected axiom violation).

namespace riskgeom::cli {

struct ComputeConfig {
    std::string dist_path;          // .json ({"points", "weights"}) or .csv
    std::string family = "zonoid";  // zonoid | ech | halfspace
    double alpha = 1.0;             // real trim level
    int n = 0;                      // ech only: integer level (wins over alpha if > 0)
    std::string cone_path;          // optional cone json
    std::vector<std::string> extra_dirs;  // halfspace only, "x,y,..." per entry
    std::string out_path;           // report destination; empty = stream only
    std::string svg_path;           // optional 2D rendering (compact families)
    std::size_t grid_2d = 64;       // angular resolution of the 2D grid
};

int cmd_compute(const ComputeConfig& cfg, std::ostream& out);

struct AxiomsConfig {
    std::string suite = "all";  // risk | region | all
    std::string id;             // one measure/family; empty = every id in the suite
    std::uint64_t seed = 0x5eed;
    bool seed_set = false;      // explicit flag wins over RISKGEOM_SEED
    std::uint64_t risk_trials = 200;
    std::uint64_t region_trials = 100;
    std::string out_path;
};

// Exit code 1 when a check fails (an unexpected violation appeared or an
// expected one did not).
int cmd_axioms(const AxiomsConfig& cfg, std::ostream& out);

struct SvgConfig {
    std::string dist_path;
    std::string family = "zonoid";
    double alpha = 1.0;
    int n = 0;
    std::string cone_path;
    std::string out_path;
    std::size_t grid_2d = 64;
};

int cmd_svg(const SvgConfig& cfg);

// Environment override for the axiom suite seed.
std::uint64_t seed_from_env(std::uint64_t fallback);

}  // namespace riskgeom::cli
