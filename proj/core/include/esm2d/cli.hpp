#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "esm2d/elastic.hpp"
#include "esm2d/esm.hpp"
#include "esm2d/forward.hpp"

namespace esm2d::exit_code {
inline constexpr int ok = 0;
inline constexpr int selftest_failure = 1;
inline constexpr int forward_quality = 2;
inline constexpr int parse_error = 3;
inline constexpr int config_mismatch = 4;
}  // namespace esm2d::exit_code

namespace esm2d {

struct ForwardConfig {
    ShapeSpec shape;
    BoundaryCondition bc;
    Material material{};
    double incidence_theta = kPi / 3.0;
    double ap = 1.0, as = 1.0;
    int m = 52;
    double noise_level = 0.0;
    std::uint64_t seed = 1;
    MFSConfig mfs;                 // ignored for disk data (series kernel)
    bool use_mfs_for_disk = false;
    std::string out = "farfield.csv";
};

struct InvertConfig {
    std::string data;
    ESMParams params;
    SamplingGrid grid;
    std::string out_indicator = "indicator.csv";
    std::string out_json = "result.json";
    std::string out_pgm;           // empty = skip
};

struct MultilevelConfig {
    std::string data;
    ESMParams params;              // probe_radius ignored; levels start at r0
    SamplingGrid grid;
    double r0 = 2.4;
    double r_floor = 0.15;
    std::string out = "multilevel.json";
};

struct SelftestConfig {
    bool corrupt_dps = false;      // negative-control hook
};

int cmd_forward(const ForwardConfig& config);
int cmd_invert(const InvertConfig& config);
int cmd_multilevel(const MultilevelConfig& config);
int cmd_selftest(const SelftestConfig& config);

// full argv front end (argv[0] is the program name)
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, const char* const* argv);

}  // namespace esm2d
