#include "esm2d/disk.hpp"

#include <cmath>

#include "esm2d/specfun.hpp"

namespace esm2d {

namespace {

constexpr int kMaxTerms = 120;
constexpr double kRelTail = 1e-14;
constexpr int kQuadPoints = 256;

// i^(-m) for m >= 0
cd ipow_neg(int m) {
    switch (m & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, -1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, 1.0};
    }
}

std::pair<cd, cd> sum_farfield(const RigidDiskCoeffs& co, const Material& mat,
                               double theta_obs) {
    const double kp = mat.kp(), ks = mat.ks();
    cd sp{0.0, 0.0}, ss{0.0, 0.0};
    for (int n = -co.order; n <= co.order; ++n) {
        const cd e{std::cos(n * theta_obs), std::sin(n * theta_obs)};
        const cd rot = ipow_neg(std::abs(n)) * e;
        sp += co.a_at(n) * rot;
        ss += co.b_at(n) * rot;
    }
    const cd quarter = std::polar(1.0, -kPi / 4.0);
    const cd up = cd{0.0, kp} * quarter * std::sqrt(2.0 / (kPi * kp)) * sp;
    const cd us = cd{0.0, -ks} * quarter * std::sqrt(2.0 / (kPi * ks)) * ss;
    return {up, us};
}

}  // namespace

cd soft_disk_farfield(double k, double R, double theta_obs, double theta_inc) {
    if (!(k > 0.0) || !(R > 0.0)) throw DomainError("soft disk requires k > 0 and R > 0");
    const double x = k * R;
    const double dth = theta_obs - theta_inc;

    cd sum = bessel_j(0, x) / hankel1(0, x);
    double scale = std::abs(sum);
    int streak = 0;
    for (int n = 1; n <= kMaxTerms; ++n) {
        const cd rn = bessel_j(n, x) / hankel1(n, x);
        sum += rn * (2.0 * std::cos(n * dth));
        scale = std::max(scale, std::abs(rn));
        if (std::abs(rn) <= kRelTail * std::max(scale, 1e-300)) {
            if (++streak == 3) {
                streak = -1;
                break;
            }
        } else {
            streak = 0;
        }
    }
    if (streak != -1) throw TruncationError("soft disk series did not converge");
    return -std::polar(1.0, -kPi / 4.0) * std::sqrt(2.0 / (kPi * k)) * sum;
}

cd translate_acoustic(cd value, double k, Vec2 z, double theta_obs, double theta_inc) {
    const Vec2 d{std::cos(theta_inc), std::sin(theta_inc)};
    const Vec2 xh{std::cos(theta_obs), std::sin(theta_obs)};
    return value * std::exp(cd{0.0, k * (z.dot(d) - z.dot(xh))});
}

RigidDiskCoeffs rigid_disk_coeffs(const Material& mat, double R, const PlaneWave& pw) {
    mat.validate();
    if (!(R > 0.0)) throw DomainError("rigid disk requires R > 0");
    const double kp = mat.kp(), ks = mat.ks();

    // boundary traces of the incident displacement in the normal/tangent frame
    std::vector<cd> fnu(kQuadPoints), ftau(kQuadPoints);
    for (int q = 0; q < kQuadPoints; ++q) {
        const double a = 2.0 * kPi * q / kQuadPoints;
        const Vec2 nu{std::cos(a), std::sin(a)};
        const Vec2 tau = nu.perp();
        const CVec2 u = plane_wave_displacement(pw, mat, nu * R);
        fnu[(std::size_t)q] = u.x * nu.x + u.y * nu.y;
        ftau[(std::size_t)q] = u.x * tau.x + u.y * tau.y;
    }
    auto fourier = [&](const std::vector<cd>& f, int n) {
        cd acc{0.0, 0.0};
        for (int q = 0; q < kQuadPoints; ++q) {
            const double a = -2.0 * kPi * n * q / kQuadPoints;
            acc += f[(std::size_t)q] * cd{std::cos(a), std::sin(a)};
        }
        return acc / (double)kQuadPoints;
    };

    std::vector<cd> at(2 * kMaxTerms + 1), bt(2 * kMaxTerms + 1);
    double scale = 0.0;
    int streak = 0, order = -1;
    for (int m = 0; m <= kMaxTerms; ++m) {
        const cd hp = hankel1(m, kp * R), hpd = hankel1_deriv(m, kp * R);
        const cd hs = hankel1(m, ks * R), hsd = hankel1_deriv(m, ks * R);
        const cd c = ((double)m * m / (R * R)) * hp * hs - kp * ks * hpd * hsd;
        if (std::abs(c) <= 1e-13) throw ResonanceError("rigid disk system is singular", m);

        double worst = 0.0;
        for (const int n : (m == 0) ? std::vector<int>{0} : std::vector<int>{m, -m}) {
            const cd pn = fourier(fnu, n);
            const cd qn = fourier(ftau, n);
            const cd in_r = cd{0.0, (double)n / R};
            const cd an = (ks * hsd * pn + in_r * hs * qn) / c;
            const cd bn = (in_r * hp * pn - kp * hpd * qn) / c;
            at[(std::size_t)(n + kMaxTerms)] = an;
            bt[(std::size_t)(n + kMaxTerms)] = bn;
            worst = std::max(worst, std::max(std::abs(an), std::abs(bn)));
        }
        scale = std::max(scale, worst);
        if (worst <= kRelTail * std::max(scale, 1e-300)) {
            if (++streak == 3) {
                order = m;
                break;
            }
        } else {
            streak = 0;
        }
    }
    if (order < 0) throw TruncationError("rigid disk series did not converge");

    RigidDiskCoeffs co;
    co.order = order;
    co.a.assign(at.begin() + (kMaxTerms - order), at.begin() + (kMaxTerms + order + 1));
    co.b.assign(bt.begin() + (kMaxTerms - order), bt.begin() + (kMaxTerms + order + 1));
    return co;
}

std::pair<cd, cd> rigid_disk_farfield(const Material& mat, double R, const PlaneWave& pw,
                                      double theta_obs) {
    const auto co = rigid_disk_coeffs(mat, R, pw);
    return sum_farfield(co, mat, theta_obs);
}

ElasticFarField rigid_disk_farfield_grid(const Material& mat, double R, const PlaneWave& pw,
                                         std::span<const double> theta_obs) {
    const auto co = rigid_disk_coeffs(mat, R, pw);
    ElasticFarField ff;
    ff.m = (int)theta_obs.size();
    ff.up.reserve(theta_obs.size());
    ff.us.reserve(theta_obs.size());
    for (const double th : theta_obs) {
        const auto [up, us] = sum_farfield(co, mat, th);
        ff.up.push_back(up);
        ff.us.push_back(us);
    }
    return ff;
}

std::pair<cd, cd> translate_elastic(std::pair<cd, cd> ff, const Material& mat, Vec2 z,
                                    double theta_obs, double theta_inc, IncidenceMode mode) {
    const double kp = mat.kp(), ks = mat.ks();
    const double kd = (mode == IncidenceMode::compressional) ? kp : ks;
    const Vec2 d{std::cos(theta_inc), std::sin(theta_inc)};
    const Vec2 xh{std::cos(theta_obs), std::sin(theta_obs)};
    const cd ph_in = std::exp(cd{0.0, kd * z.dot(d)});
    ff.first *= ph_in * std::exp(cd{0.0, -kp * z.dot(xh)});
    ff.second *= ph_in * std::exp(cd{0.0, -ks * z.dot(xh)});
    return ff;
}

}  // namespace esm2d
