#include "esm2d/forward.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "esm2d/specfun.hpp"

namespace esm2d {

namespace {

struct RawPoint {
    Vec2 pos, der;
    double orient = 1.0;
};

RawPoint shape_raw(const ShapeSpec& shape, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    RawPoint r;
    switch (shape.kind) {
        case ShapeKind::disk: {
            r.pos = {shape.radius * c, shape.radius * s};
            r.der = {-shape.radius * s, shape.radius * c};
            break;
        }
        case ShapeKind::pear: {
            const double rho = 1.0 + 0.15 * std::cos(3.0 * theta);
            const double drho = -0.45 * std::sin(3.0 * theta);
            r.pos = {rho * c, rho * s};
            r.der = {drho * c - rho * s, drho * s + rho * c};
            break;
        }
        case ShapeKind::peanut: {
            const double u = c * c + 0.25 * s * s;
            const double du = -0.75 * std::sin(2.0 * theta);
            const double rho = 1.5 * std::sqrt(u);
            const double drho = 1.5 * du / (2.0 * std::sqrt(u));
            r.pos = {rho * c, rho * s};
            r.der = {drho * c - rho * s, drho * s + rho * c};
            break;
        }
        case ShapeKind::kite: {
            r.pos = {1.5 * s, c + 0.65 * std::cos(2.0 * theta) - 0.65};
            r.der = {1.5 * c, -s - 1.3 * std::sin(2.0 * theta)};
            r.orient = -1.0;
            break;
        }
    }
    r.pos = r.pos + shape.offset;
    return r;
}

// shared Hankel factors of the fundamental solution at one point pair
struct KupCore {
    double r = 0.0;
    double rh[2] = {0.0, 0.0};
    cd g[2][2];
    cd dg[2][2][2];  // dg[i][j][k]: d u_i / d x_j for unit force e_k
};

KupCore kup_core(Vec2 y, const Material& mat, Vec2 x) {
    const Vec2 rv = x - y;
    const double r = rv.norm();
    if (!(r > 0.0)) throw DomainError("fundamental solution needs distinct points");
    const double kp = mat.kp(), ks = mat.ks();
    const double om2 = mat.omega * mat.omega;

    const cd h0s = hankel1(0, ks * r), h1s = hankel1(1, ks * r);
    const cd h0p = hankel1(0, kp * r), h1p = hankel1(1, kp * r);
    const cd phi1 = -ks * h1s + kp * h1p;
    const cd d1s = h0s - h1s / (ks * r), d1p = h0p - h1p / (kp * r);
    const cd phi2 = -ks * ks * d1s + kp * kp * d1p;
    const cd d2s = -h1s - h0s / (ks * r) + 2.0 * h1s / (ks * r * ks * r);
    const cd d2p = -h1p - h0p / (kp * r) + 2.0 * h1p / (kp * r * kp * r);
    const cd phi3 = -ks * ks * ks * d2s + kp * kp * kp * d2p;
    const cd a = phi2 - phi1 / r;
    const cd ap = phi3 - phi2 / r + phi1 / (r * r);
    const cd i4{0.0, 0.25};

    KupCore co;
    co.r = r;
    co.rh[0] = rv.x / r;
    co.rh[1] = rv.y / r;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) {
            const double del = (i == k) ? 1.0 : 0.0;
            co.g[i][k] = i4 * (h0s / mat.mu * del +
                               (phi1 / r * del + a * co.rh[i] * co.rh[k]) / om2);
            for (int j = 0; j < 2; ++j) {
                const double dij = (i == j) ? 1.0 : 0.0;
                const double djk = (j == k) ? 1.0 : 0.0;
                co.dg[i][j][k] =
                    i4 * ((-ks * h1s) / mat.mu * co.rh[j] * del +
                          (a / r *
                               (dij * co.rh[k] + co.rh[i] * djk + co.rh[j] * del -
                                2.0 * co.rh[i] * co.rh[j] * co.rh[k]) +
                           ap * co.rh[i] * co.rh[j] * co.rh[k]) /
                              om2);
            }
        }
    return co;
}

Grad2 grad_for_force(const KupCore& co, const CVec2& q) {
    Grad2 g{};
    const cd qv[2] = {q.x, q.y};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) g[i][j] = co.dg[i][j][0] * qv[0] + co.dg[i][j][1] * qv[1];
    return g;
}

struct GradedMesh {
    std::vector<double> t, delta, cdf;  // cdf has one extra knot at 2 pi

    double pick_one(double u) const {
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::size_t k = (it == cdf.begin()) ? 0 : (std::size_t)(it - cdf.begin()) - 1;
        if (k + 1 >= cdf.size()) k = cdf.size() - 2;
        const double t0 = t[k];
        const double t1 = (k + 1 < t.size()) ? t[k + 1] : 2.0 * kPi;
        return t0 + (u - cdf[k]) / (cdf[k + 1] - cdf[k]) * (t1 - t0);
    }
    std::vector<double> pick(int m, double stag) const {
        std::vector<double> out((std::size_t)m);
        for (int a = 0; a < m; ++a) out[(std::size_t)a] = pick_one((a + stag) / m);
        return out;
    }
    double delta_at(double tt) const {
        if (tt <= t.front()) return delta.front();
        if (tt >= t.back()) return delta.back();
        const auto it = std::upper_bound(t.begin(), t.end(), tt);
        const std::size_t k = (std::size_t)(it - t.begin()) - 1;
        const double w = (tt - t[k]) / (t[k + 1] - t[k]);
        return delta[k] + w * (delta[k + 1] - delta[k]);
    }
};

GradedMesh graded_mesh(const ShapeSpec& shape, const MFSConfig& cfg) {
    constexpr int nfine = 32768;
    GradedMesh mesh;
    mesh.t.resize(nfine);
    mesh.delta.resize(nfine);
    mesh.cdf.assign(nfine + 1, 0.0);
    for (int i = 0; i < nfine; ++i) {
        const double tt = 2.0 * kPi * i / nfine;
        mesh.t[(std::size_t)i] = tt;
        const auto rp = shape_raw(shape, tt);
        const double spd = std::hypot(rp.der.x, rp.der.y);
        double bump = 0.0;
        for (const double f : cfg.bump_centers) {
            const double dd = std::remainder(tt - f, 2.0 * kPi);
            bump += std::exp(-(dd / cfg.bump_width) * (dd / cfg.bump_width));
        }
        bump = std::min(bump, 1.0);
        const double delta = cfg.offset_near + (cfg.offset_far - cfg.offset_near) * (1.0 - bump);
        mesh.delta[(std::size_t)i] = delta;
        mesh.cdf[(std::size_t)i + 1] = mesh.cdf[(std::size_t)i] + spd / delta;
    }
    const double total = mesh.cdf.back();
    for (double& v : mesh.cdf) v /= total;
    return mesh;
}

struct Layout {
    std::vector<Vec2> sources;
    std::vector<double> th_col;
};

Layout build_layout(const ShapeSpec& shape, const MFSConfig& cfg, int n_src, int n_col) {
    Layout lay;
    lay.sources.reserve((std::size_t)n_src);
    if (cfg.rule == MFSConfig::SourceRule::radial) {
        for (int m = 0; m < n_src; ++m) {
            const auto bp = shape_eval(shape, 2.0 * kPi * m / n_src);
            lay.sources.push_back(shape.offset + (bp.x - shape.offset) * cfg.retraction);
        }
        for (int i = 0; i < n_col; ++i) lay.th_col.push_back(2.0 * kPi * i / n_col);
    } else {
        const auto mesh = graded_mesh(shape, cfg);
        for (const double ts : mesh.pick(n_src, 0.0)) {
            const auto bp = shape_eval(shape, ts);
            lay.sources.push_back(bp.x - bp.normal * mesh.delta_at(ts));
        }
        lay.th_col = mesh.pick(n_col, 0.5);
    }
    return lay;
}

// rows 2i, 2i+1: x/y component at collocation point i; cols 2m, 2m+1: source strengths
void assemble_system(const ShapeSpec& shape, const BoundaryCondition& bc, const PlaneWave& pw,
                     const Material& mat, const std::vector<Vec2>& sources,
                     const std::vector<double>& th, Eigen::MatrixXcd& a, Eigen::VectorXcd& b) {
    const int n_col = (int)th.size();
    const int n_src = (int)sources.size();
    a.resize(2 * n_col, 2 * n_src);
    b.resize(2 * n_col);
    const cd is{0.0, bc.sigma};
    for (int i = 0; i < n_col; ++i) {
        const auto bp = shape_eval(shape, th[(std::size_t)i]);
        for (int m = 0; m < n_src; ++m) {
            const auto co = kup_core(sources[(std::size_t)m], mat, bp.x);
            for (int k = 0; k < 2; ++k) {
                cd e0, e1;
                if (bc.kind == BCKind::dirichlet) {
                    e0 = co.g[0][k];
                    e1 = co.g[1][k];
                } else {
                    Grad2 gk;
                    for (int r = 0; r < 2; ++r)
                        for (int c = 0; c < 2; ++c) gk[r][c] = co.dg[r][c][k];
                    const CVec2 tr = traction(mat, gk, bp.normal);
                    e0 = tr.x;
                    e1 = tr.y;
                    if (bc.kind == BCKind::impedance) {
                        e0 += is * co.g[0][k];
                        e1 += is * co.g[1][k];
                    }
                }
                a(2 * i, 2 * m + k) = e0;
                a(2 * i + 1, 2 * m + k) = e1;
            }
        }
        const CVec2 u = plane_wave_displacement(pw, mat, bp.x);
        CVec2 rhs;
        if (bc.kind == BCKind::dirichlet) {
            rhs = u;
        } else {
            rhs = traction(mat, plane_wave_gradient(pw, mat, bp.x), bp.normal);
            if (bc.kind == BCKind::impedance) rhs = rhs + u * is;
        }
        b(2 * i) = -rhs.x;
        b(2 * i + 1) = -rhs.y;
    }
}

}  // namespace

BoundaryPoint shape_eval(const ShapeSpec& shape, double theta) {
    const auto raw = shape_raw(shape, theta);
    const double spd = std::hypot(raw.der.x, raw.der.y);
    BoundaryPoint bp;
    bp.x = raw.pos;
    bp.tangent = raw.der * (raw.orient / spd);
    bp.normal = {bp.tangent.y, -bp.tangent.x};
    return bp;
}

MFSConfig default_mfs_config(ShapeKind kind) {
    MFSConfig cfg;
    switch (kind) {
        case ShapeKind::disk:
            break;
        case ShapeKind::pear:
        case ShapeKind::peanut:
            cfg.n_sources = 192;
            cfg.n_collocation = 384;
            break;
        case ShapeKind::kite:
            cfg.rule = MFSConfig::SourceRule::graded_normal;
            cfg.n_sources = 512;
            cfg.n_collocation = 1024;
            cfg.bump_centers = {1.854, 4.429};
            break;
    }
    return cfg;
}

CVec2 kupradze_displacement(Vec2 y, CVec2 q, const Material& mat, Vec2 x) {
    const auto co = kup_core(y, mat, x);
    return {co.g[0][0] * q.x + co.g[0][1] * q.y, co.g[1][0] * q.x + co.g[1][1] * q.y};
}

CVec2 kupradze_traction(Vec2 y, CVec2 q, const Material& mat, Vec2 x, Vec2 normal) {
    const auto co = kup_core(y, mat, x);
    return traction(mat, grad_for_force(co, q), normal);
}

MFSSolution mfs_solve(const ShapeSpec& shape, const BoundaryCondition& bc, const PlaneWave& pw,
                      const Material& mat, const MFSConfig& config) {
    mat.validate();
    bc.validate();
    config.validate();

    int n_src = config.n_sources;
    int n_col = config.n_collocation;
    double last_cond = 0.0;
    for (int attempt = 0; attempt < 2; ++attempt) {
        const auto lay = build_layout(shape, config, n_src, n_col);
        Eigen::MatrixXcd a;
        Eigen::VectorXcd b;
        assemble_system(shape, bc, pw, mat, lay.sources, lay.th_col, a, b);

        Eigen::VectorXd cs = a.colwise().norm().transpose();
        for (int j = 0; j < cs.size(); ++j)
            if (cs(j) == 0.0) cs(j) = 1.0;
        const Eigen::MatrixXcd aeq = a * cs.cwiseInverse().asDiagonal();
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(aeq, Eigen::ComputeThinU | Eigen::ComputeThinV);
        svd.setThreshold(config.rcond);
        const Eigen::VectorXcd q = cs.cwiseInverse().cast<cd>().cwiseProduct(svd.solve(b));
        const int rank = (int)svd.rank();
        last_cond = svd.singularValues()(0) / svd.singularValues()(std::max(rank - 1, 0));

        std::vector<double> th_v((std::size_t)(2 * n_col));
        for (int i = 0; i < 2 * n_col; ++i)
            th_v[(std::size_t)i] = 2.0 * kPi * (i + 0.5) / (2.0 * n_col);
        Eigen::MatrixXcd av;
        Eigen::VectorXcd bv;
        assemble_system(shape, bc, pw, mat, lay.sources, th_v, av, bv);
        const double rel = (av * q - bv).norm() / bv.norm();

        if (rel <= config.residual_limit) {
            MFSSolution sol;
            sol.sources = lay.sources;
            sol.strengths.reserve((std::size_t)n_src);
            for (int m = 0; m < n_src; ++m) sol.strengths.push_back({q(2 * m), q(2 * m + 1)});
            sol.residual = rel;
            return sol;
        }
        n_src *= 2;
        n_col *= 2;
    }
    throw SolverError("mfs residual exceeds the limit after refinement", last_cond);
}

ElasticFarField mfs_farfield(const MFSSolution& sol, const Material& mat, int m) {
    const double kp = mat.kp(), ks = mat.ks();
    const cd cp = kp * kp / (4.0 * mat.omega * mat.omega) * std::sqrt(2.0 / (kPi * kp)) *
                  std::polar(1.0, kPi / 4.0);
    const cd cs = 1.0 / (4.0 * mat.mu) * std::sqrt(2.0 / (kPi * ks)) *
                  std::polar(1.0, kPi / 4.0);
    const auto th = direction_grid(m);
    ElasticFarField ff;
    ff.m = m;
    ff.up.assign((std::size_t)m, cd{});
    ff.us.assign((std::size_t)m, cd{});
    for (int j = 0; j < m; ++j) {
        const Vec2 xh{std::cos(th[(std::size_t)j]), std::sin(th[(std::size_t)j])};
        const Vec2 xp = xh.perp();
        cd sp{}, ss{};
        for (std::size_t s = 0; s < sol.sources.size(); ++s) {
            const Vec2 y = sol.sources[s];
            const CVec2& q = sol.strengths[s];
            sp += (q.x * xh.x + q.y * xh.y) * std::exp(cd{0.0, -kp * (xh.x * y.x + xh.y * y.y)});
            ss += (q.x * xp.x + q.y * xp.y) * std::exp(cd{0.0, -ks * (xh.x * y.x + xh.y * y.y)});
        }
        ff.up[(std::size_t)j] = cp * sp;
        ff.us[(std::size_t)j] = cs * ss;
    }
    return ff;
}

ElasticFarField add_noise(const ElasticFarField& ff, double level, std::uint64_t seed) {
    if (level == 0.0) return ff;
    std::mt19937_64 gen(seed);
    auto uniform = [&gen] { return (double)(gen() >> 11) * 0x1.0p-53; };
    auto unit_disk = [&] {
        for (;;) {
            const double a = 2.0 * uniform() - 1.0;
            const double b = 2.0 * uniform() - 1.0;
            if (a * a + b * b <= 1.0) return cd{a, b};
        }
    };
    ElasticFarField out = ff;
    for (auto& v : out.up) v *= 1.0 + level * unit_disk();
    for (auto& v : out.us) v *= 1.0 + level * unit_disk();
    return out;
}

}  // namespace esm2d
