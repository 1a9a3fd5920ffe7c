#pragma once

#include <cstdint>
#include <vector>

#include "esm2d/elastic.hpp"

namespace esm2d {

enum class ShapeKind { disk, pear, peanut, kite };

struct ShapeSpec {
    ShapeKind kind = ShapeKind::disk;
    double radius = 1.0;          // disk only
    Vec2 offset{-2.0, 3.0};
};

struct BoundaryPoint {
    Vec2 x, tangent, normal;      // normal = (tau2, -tau1), outward
};

BoundaryPoint shape_eval(const ShapeSpec& shape, double theta);

enum class BCKind { dirichlet, neumann, impedance };

struct BoundaryCondition {
    BCKind kind = BCKind::dirichlet;
    double sigma = 0.0;           // impedance only

    void validate() const {
        if (sigma < 0.0) throw ConfigError("impedance sigma must be >= 0");
    }
};

struct MFSConfig {
    enum class SourceRule { radial, graded_normal };

    SourceRule rule = SourceRule::radial;
    int n_sources = 96;
    int n_collocation = 192;
    double retraction = 0.7;                     // radial rule
    double offset_near = 0.028;                  // graded rule: normal offsets
    double offset_far = 0.10;
    double bump_width = 0.45;
    std::vector<double> bump_centers;            // parameter angles of high curvature
    double rcond = 1e-12;
    double residual_limit = 1e-6;

    void validate() const {
        if (n_sources < 4 || n_collocation < 2 * n_sources)
            throw ConfigError("mfs config requires n_collocation >= 2 * n_sources");
    }
};

// per-shape defaults found by convergence study
MFSConfig default_mfs_config(ShapeKind kind);

struct MFSSolution {
    std::vector<Vec2> sources;
    std::vector<CVec2> strengths;
    double residual = 0.0;        // relative, on the validation grid
};

// displacement at x of a point force q at y
CVec2 kupradze_displacement(Vec2 y, CVec2 q, const Material& mat, Vec2 x);

// traction of the same field at x with outward normal nu
CVec2 kupradze_traction(Vec2 y, CVec2 q, const Material& mat, Vec2 x, Vec2 normal);

MFSSolution mfs_solve(const ShapeSpec& shape, const BoundaryCondition& bc, const PlaneWave& pw,
                      const Material& mat, const MFSConfig& config);

ElasticFarField mfs_farfield(const MFSSolution& sol, const Material& mat, int m);

// componentwise multiplicative perturbation (1 + level * eta), eta uniform on the unit disk;
// draws walk up in j over all of up, then all of us
ElasticFarField add_noise(const ElasticFarField& ff, double level, std::uint64_t seed);

}  // namespace esm2d
