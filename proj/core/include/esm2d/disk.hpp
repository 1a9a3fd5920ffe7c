#pragma once

#include <span>
#include <utility>
#include <vector>

#include "esm2d/elastic.hpp"

namespace esm2d {

struct DiskSpec {
    Vec2 center{0.0, 0.0};
    double radius = 1.0;
};

// far field of the origin-centered sound-soft disk,
// -e^{-i pi/4} sqrt(2/(pi k)) sum_n [J_n(kR)/H_n(kR)] e^{i n (theta_obs - theta_inc)}
cd soft_disk_farfield(double k, double R, double theta_obs, double theta_inc);

// move the disk to z: multiply by e^{i k z.(d - xhat)}
cd translate_acoustic(cd value, double k, Vec2 z, double theta_obs, double theta_inc);

struct RigidDiskCoeffs {
    int order = 0;            // coefficients stored for n = -order..order
    std::vector<cd> a, b;     // index n + order

    cd a_at(int n) const { return a[static_cast<std::size_t>(n + order)]; }
    cd b_at(int n) const { return b[static_cast<std::size_t>(n + order)]; }
};

RigidDiskCoeffs rigid_disk_coeffs(const Material& mat, double R, const PlaneWave& pw);

// (up, us) of the origin-centered rigid disk at one observation angle
std::pair<cd, cd> rigid_disk_farfield(const Material& mat, double R, const PlaneWave& pw,
                                      double theta_obs);

// same, sampled on a grid of observation angles
ElasticFarField rigid_disk_farfield_grid(const Material& mat, double R, const PlaneWave& pw,
                                         std::span<const double> theta_obs);

enum class IncidenceMode { compressional, shear };

// phases moving a unit-incidence far field from the origin to z
std::pair<cd, cd> translate_elastic(std::pair<cd, cd> ff, const Material& mat, Vec2 z,
                                    double theta_obs, double theta_inc, IncidenceMode mode);

}  // namespace esm2d
