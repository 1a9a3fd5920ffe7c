#include "esm2d/elastic.hpp"

namespace esm2d {

Wavenumbers wavenumbers(const Material& mat) {
    mat.validate();
    return {mat.kp(), mat.ks()};
}

std::vector<double> direction_grid(int m) {
    std::vector<double> th(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) th[(std::size_t)j] = 2.0 * kPi * j / m;
    return th;
}

CVec2 plane_wave_displacement(const PlaneWave& pw, const Material& mat, Vec2 x) {
    const Vec2 d = pw.dir.d();
    const Vec2 dp = pw.dir.perp();
    const double xd = x.dot(d);
    const cd ep = std::exp(cd{0.0, mat.kp() * xd});
    const cd es = std::exp(cd{0.0, mat.ks() * xd});
    return {pw.ap * d.x * ep + pw.as * dp.x * es, pw.ap * d.y * ep + pw.as * dp.y * es};
}

Grad2 plane_wave_gradient(const PlaneWave& pw, const Material& mat, Vec2 x) {
    const Vec2 d = pw.dir.d();
    const Vec2 dp = pw.dir.perp();
    const double xd = x.dot(d);
    const cd cp = pw.ap * cd{0.0, mat.kp()} * std::exp(cd{0.0, mat.kp() * xd});
    const cd cs = pw.as * cd{0.0, mat.ks()} * std::exp(cd{0.0, mat.ks() * xd});
    Grad2 g;
    g[0][0] = cp * d.x * d.x + cs * dp.x * d.x;
    g[0][1] = cp * d.x * d.y + cs * dp.x * d.y;
    g[1][0] = cp * d.y * d.x + cs * dp.y * d.x;
    g[1][1] = cp * d.y * d.y + cs * dp.y * d.y;
    return g;
}

CVec2 traction(const Material& mat, const Grad2& g, Vec2 nu) {
    const cd div = g[0][0] + g[1][1];
    const cd divp = g[1][0] - g[0][1];
    const Vec2 nup = nu.perp();
    return {2.0 * mat.mu * (g[0][0] * nu.x + g[0][1] * nu.y) + mat.lambda * nu.x * div -
                mat.mu * nup.x * divp,
            2.0 * mat.mu * (g[1][0] * nu.x + g[1][1] * nu.y) + mat.lambda * nu.y * div -
                mat.mu * nup.y * divp};
}

std::vector<cd> ipp_rhs_scale(const std::vector<cd>& values, double kt) {
    const cd f = 1.0 / cd{0.0, kt};
    std::vector<cd> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i] * f;
    return out;
}

cd weighted_inner_product(const ElasticFarField& g, const ElasticFarField& h,
                          const Material& mat) {
    if (g.m != h.m || g.up.size() != h.up.size() || g.us.size() != h.us.size() ||
        (int)g.up.size() != g.m || (int)g.us.size() != g.m)
        throw ShapeError("weighted_inner_product: direction grids differ");
    const double w = 2.0 * kPi / g.m;
    cd sp{}, ss{};
    for (int j = 0; j < g.m; ++j) {
        sp += g.up[(std::size_t)j] * std::conj(h.up[(std::size_t)j]);
        ss += g.us[(std::size_t)j] * std::conj(h.us[(std::size_t)j]);
    }
    return (mat.omega / mat.kp()) * w * sp + (mat.omega / mat.ks()) * w * ss;
}

CVec2 herglotz_eval(const ElasticFarField& g, const Material& mat, Vec2 x) {
    const double w = 2.0 * kPi / g.m;
    const double wp = std::sqrt(mat.kp() / mat.omega) * w;
    const double ws = std::sqrt(mat.ks() / mat.omega) * w;
    CVec2 v;
    for (int j = 0; j < g.m; ++j) {
        const double th = g.theta(j);
        const Vec2 d{std::cos(th), std::sin(th)};
        const Vec2 dp = d.perp();
        const cd ep = wp * std::exp(cd{0.0, mat.kp() * x.dot(d)}) * g.up[(std::size_t)j];
        const cd es = ws * std::exp(cd{0.0, mat.ks() * x.dot(d)}) * g.us[(std::size_t)j];
        v.x += d.x * ep + dp.x * es;
        v.y += d.y * ep + dp.y * es;
    }
    return v;
}

}  // namespace esm2d
