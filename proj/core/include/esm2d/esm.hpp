#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "esm2d/disk.hpp"
#include "esm2d/elastic.hpp"

namespace esm2d {

struct SamplingGrid {
    double x_min = -5.0, x_max = 5.0;
    double y_min = -5.0, y_max = 5.0;
    double step = 0.1;

    int nx() const { return static_cast<int>(std::lround((x_max - x_min) / step)) + 1; }
    int ny() const { return static_cast<int>(std::lround((y_max - y_min) / step)) + 1; }
    int size() const { return nx() * ny(); }
    // row-major: x index outer, y index inner
    Vec2 point(int i) const {
        const int m = i / ny(), n = i % ny();
        return {x_min + step * m, y_min + step * n};
    }
};

enum class ProbeMode { ipp_p, ipp_s, ipf };

struct ESMParams {
    double alpha = 1e-5;          // spectral filter sigma/(sigma^2 + alpha^2)
    double probe_radius = 1.2;
    ProbeMode mode = ProbeMode::ipf;
    int m_directions = 52;

    void validate() const {
        if (!(alpha > 0.0) || !(probe_radius > 0.0) || m_directions < 4)
            throw ConfigError("esm params require alpha > 0, probe_radius > 0, m >= 4");
    }
};

struct IndicatorField {
    SamplingGrid grid;
    std::vector<double> values;       // normalized, max = 1
    std::vector<double> raw_norms;
    int argmin = 0;
};

// z-independent probe kernel with its SVD; the z dependence is applied as
// diagonal phase factors around this base
struct ProbeOperator {
    Material mat;
    double radius = 0.0;
    ProbeMode mode = ProbeMode::ipf;
    int m = 0;

    Eigen::MatrixXcd base;            // kernel samples, column-weighted for ipf
    Eigen::VectorXd row_k, col_k;     // translation wavenumbers per row / column
    Eigen::VectorXd scale;            // diagonal S; the SVD below is of S * base * S^-1
    Eigen::MatrixXcd u, v;
    Eigen::VectorXd sigma;

    int size() const { return static_cast<int>(base.rows()); }
    Eigen::VectorXd filter(double alpha) const;
};

ProbeOperator assemble_base_ipp(const Material& mat, double R, ProbeMode which, int m);
ProbeOperator assemble_base_ipf(const Material& mat, double R, int m);
ProbeOperator assemble_base(const Material& mat, const ESMParams& params);

// select the data column for the mode; applies the 1/(i kt) scale for ipp modes
Eigen::VectorXcd prepare_rhs(ProbeMode mode, const ElasticFarField& ff, const Material& mat);

// regularized solve at one sampling point; returns the density and its l2 norm
std::pair<Eigen::VectorXcd, double> solve_at_point(const ProbeOperator& op, Vec2 z,
                                                   const Eigen::VectorXcd& rhs, double alpha);

// density norms over the whole grid in one pass
Eigen::VectorXd norms_on_grid(const ProbeOperator& op, const SamplingGrid& grid,
                              const Eigen::VectorXcd& rhs, double alpha);

IndicatorField indicator_field(const ProbeOperator& op, const SamplingGrid& grid,
                               const Eigen::VectorXcd& rhs, double alpha);

struct Reconstruction {
    Vec2 z_star;
    DiskSpec disk;
    IndicatorField field;
};

Reconstruction esm_reconstruct(const Material& mat, const ESMParams& params,
                               const Eigen::VectorXcd& rhs, const SamplingGrid& grid);

struct LevelRecord {
    int level = 0;
    double radius = 0.0;
    Vec2 z;
};

struct MultilevelResult {
    Vec2 z_final;
    double r_final = 0.0;
    std::vector<LevelRecord> trace;
};

// halve the probe radius until the minimizer leaves the previous disk
// (return the previous level) or the radius floor is reached
MultilevelResult multilevel(const Material& mat, const ESMParams& params,
                            const Eigen::VectorXcd& rhs, const SamplingGrid& grid,
                            double r0 = 2.4, double r_floor = 0.15);

}  // namespace esm2d
