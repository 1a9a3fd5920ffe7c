#include "esm2d/esm.hpp"

#include <algorithm>
#include <cmath>

namespace esm2d {

namespace {

// SVD of scale * base * scale^-1, stored on the operator
void factorize(ProbeOperator& op) {
    const Eigen::VectorXcd s = op.scale.cast<cd>();
    const Eigen::MatrixXcd w = s.asDiagonal() * op.base * s.cwiseInverse().asDiagonal();
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(w, Eigen::ComputeThinU | Eigen::ComputeThinV);
    op.u = svd.matrixU();
    op.v = svd.matrixV();
    op.sigma = svd.singularValues();
}

}  // namespace

Eigen::VectorXd ProbeOperator::filter(double alpha) const {
    return (sigma.array() / (sigma.array().square() + alpha * alpha)).matrix();
}

ProbeOperator assemble_base_ipp(const Material& mat, double R, ProbeMode which, int m) {
    if (which == ProbeMode::ipf) throw ConfigError("ipp assembly called with mode ipf");
    mat.validate();
    const double kt = (which == ProbeMode::ipp_p) ? mat.kp() : mat.ks();
    const auto th = direction_grid(m);

    ProbeOperator op;
    op.mat = mat;
    op.radius = R;
    op.mode = which;
    op.m = m;
    op.base.resize(m, m);
    for (int l = 0; l < m; ++l)
        for (int j = 0; j < m; ++j)
            op.base(l, j) = soft_disk_farfield(kt, R, th[(std::size_t)l], th[(std::size_t)j]);
    op.row_k = Eigen::VectorXd::Constant(m, kt);
    op.col_k = Eigen::VectorXd::Constant(m, kt);
    op.scale = Eigen::VectorXd::Ones(m);
    factorize(op);
    return op;
}

ProbeOperator assemble_base_ipf(const Material& mat, double R, int m) {
    mat.validate();
    const double kp = mat.kp(), ks = mat.ks();
    const auto th = direction_grid(m);
    const double wp = std::sqrt(kp / mat.omega);
    const double ws = std::sqrt(ks / mat.omega);

    ProbeOperator op;
    op.mat = mat;
    op.radius = R;
    op.mode = ProbeMode::ipf;
    op.m = m;
    op.base.resize(2 * m, 2 * m);
    for (int j = 0; j < m; ++j) {
        PlaneWave pw;
        pw.dir.theta = th[(std::size_t)j];
        pw.ap = 1.0;
        pw.as = 0.0;
        auto ff = rigid_disk_farfield_grid(mat, R, pw, th);
        for (int l = 0; l < m; ++l) {
            op.base(l, j) = wp * ff.up[(std::size_t)l];
            // shear rows flipped: the probe kernel and the measured data
            // use opposite signs for the shear far-field prefactor
            op.base(m + l, j) = -wp * ff.us[(std::size_t)l];
        }
        pw.ap = 0.0;
        pw.as = 1.0;
        ff = rigid_disk_farfield_grid(mat, R, pw, th);
        for (int l = 0; l < m; ++l) {
            op.base(l, m + j) = ws * ff.up[(std::size_t)l];
            op.base(m + l, m + j) = -ws * ff.us[(std::size_t)l];
        }
    }
    op.row_k.resize(2 * m);
    op.row_k.head(m).setConstant(kp);
    op.row_k.tail(m).setConstant(ks);
    op.col_k = op.row_k;
    op.scale.resize(2 * m);
    op.scale.head(m).setConstant(std::sqrt(ks / kp));
    op.scale.tail(m).setOnes();
    factorize(op);
    return op;
}

ProbeOperator assemble_base(const Material& mat, const ESMParams& params) {
    params.validate();
    if (params.mode == ProbeMode::ipf)
        return assemble_base_ipf(mat, params.probe_radius, params.m_directions);
    return assemble_base_ipp(mat, params.probe_radius, params.mode, params.m_directions);
}

Eigen::VectorXcd prepare_rhs(ProbeMode mode, const ElasticFarField& ff, const Material& mat) {
    if (ff.m <= 0 || (int)ff.up.size() != ff.m || (int)ff.us.size() != ff.m)
        throw ShapeError("far field has inconsistent sizes");
    if (mode == ProbeMode::ipf) {
        Eigen::VectorXcd rhs(2 * ff.m);
        for (int j = 0; j < ff.m; ++j) {
            rhs(j) = ff.up[(std::size_t)j];
            rhs(ff.m + j) = ff.us[(std::size_t)j];
        }
        return rhs;
    }
    const double kt = (mode == ProbeMode::ipp_p) ? mat.kp() : mat.ks();
    const auto& part = (mode == ProbeMode::ipp_p) ? ff.up : ff.us;
    const auto scaled = ipp_rhs_scale(part, kt);
    Eigen::VectorXcd rhs(ff.m);
    for (int j = 0; j < ff.m; ++j) rhs(j) = scaled[(std::size_t)j];
    return rhs;
}

std::pair<Eigen::VectorXcd, double> solve_at_point(const ProbeOperator& op, Vec2 z,
                                                   const Eigen::VectorXcd& rhs, double alpha) {
    const int n = op.size();
    if (rhs.size() != n) throw ShapeError("rhs length does not match the probe operator");
    const auto th = direction_grid(op.m);

    Eigen::VectorXcd p(n);
    for (int i = 0; i < n; ++i) {
        const double a = th[(std::size_t)(i % op.m)];
        const double zx = z.x * std::cos(a) + z.y * std::sin(a);
        p(i) = std::exp(cd{0.0, op.row_k(i) * zx}) * (op.scale(i) * rhs(i));
    }
    const Eigen::VectorXcd y = op.filter(alpha).cast<cd>().cwiseProduct(op.u.adjoint() * p);
    Eigen::VectorXcd g = op.scale.cast<cd>().cwiseInverse().cwiseProduct(op.v * y);
    const double nm = g.norm();
    for (int i = 0; i < n; ++i) {
        const double a = th[(std::size_t)(i % op.m)];
        const double zd = z.x * std::cos(a) + z.y * std::sin(a);
        g(i) *= std::exp(cd{0.0, -op.col_k(i) * zd});
    }
    return {std::move(g), nm};
}

Eigen::VectorXd norms_on_grid(const ProbeOperator& op, const SamplingGrid& grid,
                              const Eigen::VectorXcd& rhs, double alpha) {
    const int n = op.size();
    if (rhs.size() != n) throw ShapeError("rhs length does not match the probe operator");
    const auto th = direction_grid(op.m);
    const Eigen::VectorXcd fhat = op.scale.cast<cd>().cwiseProduct(rhs);
    const Eigen::VectorXcd filt = op.filter(alpha).cast<cd>();
    const Eigen::MatrixXcd uh = op.u.adjoint();
    const Eigen::VectorXcd inv_scale = op.scale.cast<cd>().cwiseInverse();
    const bool need_v = op.mode == ProbeMode::ipf;

    std::vector<double> ca(th.size()), sa(th.size());
    for (std::size_t j = 0; j < th.size(); ++j) {
        ca[j] = std::cos(th[j]);
        sa[j] = std::sin(th[j]);
    }

    Eigen::VectorXd out(grid.size());
    Eigen::VectorXcd p(n), y(n);
    for (int i = 0; i < grid.size(); ++i) {
        const Vec2 z = grid.point(i);
        for (int r = 0; r < n; ++r) {
            const std::size_t j = (std::size_t)(r % op.m);
            const double zx = z.x * ca[j] + z.y * sa[j];
            p(r) = std::exp(cd{0.0, op.row_k(r) * zx}) * fhat(r);
        }
        y = filt.cwiseProduct(uh * p);
        // for ipp the scale is identity and v is unitary, so ||y|| suffices
        out(i) = need_v ? inv_scale.cwiseProduct(op.v * y).norm() : y.norm();
    }
    return out;
}

IndicatorField indicator_field(const ProbeOperator& op, const SamplingGrid& grid,
                               const Eigen::VectorXcd& rhs, double alpha) {
    const Eigen::VectorXd norms = norms_on_grid(op, grid, rhs, alpha);
    IndicatorField field;
    field.grid = grid;
    field.raw_norms.assign(norms.data(), norms.data() + norms.size());
    const auto mn = std::min_element(field.raw_norms.begin(), field.raw_norms.end());
    const auto mx = std::max_element(field.raw_norms.begin(), field.raw_norms.end());
    field.argmin = (int)(mn - field.raw_norms.begin());
    field.values.resize(field.raw_norms.size());
    for (std::size_t i = 0; i < field.values.size(); ++i)
        field.values[i] = field.raw_norms[i] / *mx;
    return field;
}

Reconstruction esm_reconstruct(const Material& mat, const ESMParams& params,
                               const Eigen::VectorXcd& rhs, const SamplingGrid& grid) {
    const ProbeOperator op = assemble_base(mat, params);
    Reconstruction rec;
    rec.field = indicator_field(op, grid, rhs, params.alpha);
    rec.z_star = grid.point(rec.field.argmin);
    rec.disk = {rec.z_star, params.probe_radius};
    return rec;
}

MultilevelResult multilevel(const Material& mat, const ESMParams& params,
                            const Eigen::VectorXcd& rhs, const SamplingGrid& grid,
                            double r0, double r_floor) {
    MultilevelResult res;
    ESMParams level_params = params;
    double radius = r0;
    int level = 0;
    for (;;) {
        level_params.probe_radius = radius;
        const auto rec = esm_reconstruct(mat, level_params, rhs, grid);
        if (!res.trace.empty()) {
            const auto& prev = res.trace.back();
            const Vec2 dz = rec.z_star - prev.z;
            if (dz.norm() > prev.radius) {
                res.z_final = prev.z;
                res.r_final = prev.radius;
                return res;
            }
        }
        res.trace.push_back({level, radius, rec.z_star});
        res.z_final = rec.z_star;
        res.r_final = radius;
        if (radius / 2.0 < r_floor) return res;
        radius /= 2.0;
        ++level;
    }
}

}  // namespace esm2d
