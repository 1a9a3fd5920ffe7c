#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "esm2d/elastic.hpp"
#include "esm2d/esm.hpp"

namespace esm2d {

// metadata carried in '#' header rows and mirrored to a .meta.json sidecar
struct DatasetMeta {
    int m = 52;
    Material material{};
    double incidence_theta = kPi / 3.0;
    cd ap{1.0, 0.0}, as{1.0, 0.0};
    std::string shape;                       // empty if not solver-generated
    std::string bc;
    double sigma = 0.0;
    std::optional<double> residual;
    double noise_level = 0.0;
    std::uint64_t seed = 0;
};

void write_farfield_csv(const std::string& path, const ElasticFarField& ff,
                        const DatasetMeta& meta);

// throws ParseError with the offending 1-based line number
std::pair<ElasticFarField, DatasetMeta> read_farfield_csv(const std::string& path);

void write_indicator_csv(const std::string& path, const IndicatorField& field,
                         const ESMParams& params);

void write_result_json(const std::string& path, Vec2 z_star, double radius,
                       double min_raw_norm, const std::string& mode, double alpha);

void write_multilevel_json(const std::string& path, const MultilevelResult& result,
                           const std::string& mode, double alpha);

// 8-bit P5, dark = small indicator; rows scan y top-down, columns x left-right
void write_pgm(const std::string& path, const IndicatorField& field);

std::string mode_name(ProbeMode mode);
std::optional<ProbeMode> mode_from_name(const std::string& name);

}  // namespace esm2d
