#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "esm2d/errors.hpp"

namespace esm2d {

using cd = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

struct Vec2 {
    double x = 0.0, y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
    // rotate pi/2 anticlockwise
    Vec2 perp() const { return {-y, x}; }
};

struct CVec2 {
    cd x{0.0, 0.0}, y{0.0, 0.0};

    CVec2 operator+(const CVec2& o) const { return {x + o.x, y + o.y}; }
    CVec2 operator*(cd s) const { return {x * s, y * s}; }
    double norm() const { return std::sqrt(std::norm(x) + std::norm(y)); }
};

// grad[i][j] = d u_i / d x_j
using Grad2 = std::array<std::array<cd, 2>, 2>;

struct Material {
    double lambda = 2.0;
    double mu = 1.0;
    double omega = kPi;

    void validate() const {
        if (!(mu > 0.0) || !(2.0 * mu + lambda > 0.0) || !(omega > 0.0))
            throw ConfigError("material requires mu > 0, 2*mu + lambda > 0, omega > 0");
    }
    double kp() const { return omega / std::sqrt(2.0 * mu + lambda); }
    double ks() const { return omega / std::sqrt(mu); }
};

struct Wavenumbers {
    double kp = 0.0, ks = 0.0;
};

Wavenumbers wavenumbers(const Material& mat);

struct Direction {
    double theta = 0.0;

    Vec2 d() const { return {std::cos(theta), std::sin(theta)}; }
    Vec2 perp() const { return d().perp(); }
};

struct PlaneWave {
    Direction dir{kPi / 3.0};
    cd ap{1.0, 0.0};
    cd as{1.0, 0.0};
};

// sampled far field on the uniform direction grid theta_j = 2 pi j / m, j = 0..m-1
struct ElasticFarField {
    int m = 0;
    std::vector<cd> up, us;

    double theta(int j) const { return 2.0 * kPi * static_cast<double>(j) / m; }
};

struct AcousticFarField {
    int m = 0;
    std::vector<cd> values;
    double k = 0.0;
};

std::vector<double> direction_grid(int m);

CVec2 plane_wave_displacement(const PlaneWave& pw, const Material& mat, Vec2 x);
Grad2 plane_wave_gradient(const PlaneWave& pw, const Material& mat, Vec2 x);

// surface traction 2 mu (grad u) nu + lambda nu div u - mu nu_perp (d1 u2 - d2 u1)
CVec2 traction(const Material& mat, const Grad2& grad, Vec2 nu);

// multiply a far-field part by 1/(i kt)
std::vector<cd> ipp_rhs_scale(const std::vector<cd>& values, double kt);

// (omega/kp) sum gp conj(hp) w + (omega/ks) sum gs conj(hs) w, w = 2 pi / m
cd weighted_inner_product(const ElasticFarField& g, const ElasticFarField& h, const Material& mat);

CVec2 herglotz_eval(const ElasticFarField& g, const Material& mat, Vec2 x);

}  // namespace esm2d
