#include "esm2d/cli.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "esm2d/io.hpp"
#include "esm2d/specfun.hpp"

namespace esm2d {

namespace {

ElasticFarField series_disk_farfield(const Material& mat, double radius, Vec2 center,
                                     const PlaneWave& pw, int m) {
    const auto th = direction_grid(m);
    ElasticFarField out;
    out.m = m;
    out.up.assign((std::size_t)m, cd{});
    out.us.assign((std::size_t)m, cd{});
    for (int inc = 0; inc < 2; ++inc) {
        PlaneWave unit = pw;
        unit.ap = (inc == 0) ? pw.ap : cd{};
        unit.as = (inc == 0) ? cd{} : pw.as;
        if (unit.ap == cd{} && unit.as == cd{}) continue;
        const auto mode = (inc == 0) ? IncidenceMode::compressional : IncidenceMode::shear;
        const auto ff = rigid_disk_farfield_grid(mat, radius, unit, th);
        for (int j = 0; j < m; ++j) {
            const auto v = translate_elastic({ff.up[(std::size_t)j], ff.us[(std::size_t)j]},
                                             mat, center, th[(std::size_t)j], pw.dir.theta, mode);
            out.up[(std::size_t)j] += v.first;
            out.us[(std::size_t)j] += v.second;
        }
    }
    return out;
}

int run_inversion_input(const std::string& data, int m_expected, ElasticFarField& ff,
                        DatasetMeta& meta) {
    auto [f, md] = read_farfield_csv(data);
    if (f.m != m_expected) {
        std::fprintf(stderr, "data has m=%d directions but the probe expects m=%d\n", f.m,
                     m_expected);
        return exit_code::config_mismatch;
    }
    ff = std::move(f);
    meta = std::move(md);
    return exit_code::ok;
}

struct SelfCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

ElasticFarField oracle_data(const Material& mat) {
    PlaneWave pw;
    return series_disk_farfield(mat, 1.0, {-2.0, 3.0}, pw, 52);
}

std::vector<SelfCheck> run_selftest_checks(bool corrupt_dps) {
    std::vector<SelfCheck> checks;
    const Material mat{};
    char buf[128];

    {
        double worst = 0.0;
        for (const double x : {0.3, 1.0, 2.5, kPi, 7.7, 13.0, 21.0, 30.0}) {
            const auto js = bessel_j_seq(21, x);
            const auto ys = bessel_y_seq(21, x);
            for (int n = 0; n <= 20; ++n) {
                const double w = js[(std::size_t)n + 1] * ys[(std::size_t)n] -
                                 js[(std::size_t)n] * ys[(std::size_t)n + 1] -
                                 2.0 / (kPi * x);
                worst = std::max(worst, std::abs(w));
            }
        }
        std::snprintf(buf, sizeof buf, "max dev %.2e", worst);
        checks.push_back({"bessel wronskian", worst <= 1e-10, buf});
    }

    {
        double worst = 0.0;
        for (const double r : {0.5, 1.7}) {
            for (const double phi : {0.3, 2.1}) {
                const double x = kPi * r;
                const auto js = bessel_j_seq(40, x);
                cd sum{js[0], 0.0};
                cd ipow{0.0, 1.0};
                for (int n = 1; n <= 40; ++n) {
                    const cd e{std::cos(n * phi), std::sin(n * phi)};
                    sum += ipow * js[(std::size_t)n] * (e + 1.0 / e);
                    ipow *= cd{0.0, 1.0};
                }
                worst = std::max(worst, std::abs(sum - std::exp(cd{0.0, x * std::cos(phi)})));
            }
        }
        std::snprintf(buf, sizeof buf, "max dev %.2e", worst);
        checks.push_back({"plane-wave bessel expansion", worst <= 1e-12, buf});
    }

    {
        ShapeSpec shape;  // disk radius 1 at (-2,3)
        BoundaryCondition bc;
        PlaneWave pw;
        const auto sol = mfs_solve(shape, bc, pw, mat, default_mfs_config(ShapeKind::disk));
        const auto mfs = mfs_farfield(sol, mat, 52);
        const auto ser = oracle_data(mat);
        double worst = 0.0;
        for (int j = 0; j < 52; ++j) {
            worst = std::max(worst, std::abs(mfs.up[(std::size_t)j] - ser.up[(std::size_t)j]));
            worst = std::max(worst, std::abs(mfs.us[(std::size_t)j] - ser.us[(std::size_t)j]));
        }
        std::snprintf(buf, sizeof buf, "max dev %.2e, residual %.2e", worst, sol.residual);
        checks.push_back({"disk series vs mfs", worst <= 1e-6, buf});
    }

    const ProbeOperator op = assemble_base_ipf(mat, 1.2, 52);
    {
        std::mt19937 rng(11);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        Eigen::VectorXcd g(104), h(104);
        for (int i = 0; i < 104; ++i) {
            g(i) = cd{u(rng), u(rng)};
            h(i) = cd{u(rng), u(rng)};
        }
        Eigen::VectorXd dps(104);
        dps.head(52).setConstant(mat.ks() / mat.kp() * (corrupt_dps ? 1.01 : 1.0));
        dps.tail(52).setOnes();
        Eigen::VectorXd w(104);
        w.head(52).setConstant(mat.omega / mat.kp() * (2.0 * kPi / 52.0));
        w.tail(52).setConstant(mat.omega / mat.ks() * (2.0 * kPi / 52.0));
        const Eigen::VectorXcd bg = op.base * g;
        const Eigen::VectorXcd bsh = dps.cwiseInverse().cast<cd>().cwiseProduct(
            op.base.adjoint() * dps.cast<cd>().cwiseProduct(h));
        const cd lhs = (w.cast<cd>().cwiseProduct(bg).adjoint() * h).value();
        const cd rhs = (w.cast<cd>().cwiseProduct(g).adjoint() * bsh).value();
        const double dev = std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
        std::snprintf(buf, sizeof buf, "rel dev %.2e", dev);
        checks.push_back({"weighted adjoint identity", dev <= 1e-12, buf});
    }

    const auto data = oracle_data(mat);
    {
        const auto rhs_f = prepare_rhs(ProbeMode::ipf, data, mat);
        const ProbeOperator opp = assemble_base_ipp(mat, 1.2, ProbeMode::ipp_p, 52);
        const auto rhs_p = prepare_rhs(ProbeMode::ipp_p, data, mat);
        const auto th = direction_grid(52);
        double worst = 0.0;
        std::mt19937 rng(29);
        std::uniform_real_distribution<double> u(-4.0, 4.0);
        for (int t = 0; t < 3; ++t) {
            const Vec2 z{u(rng), u(rng)};
            for (const auto* pr : {&op, &opp}) {
                const auto& rhs = (pr == &op) ? rhs_f : rhs_p;
                const int n = pr->size();
                Eigen::MatrixXcd K = pr->base;
                for (int i = 0; i < n; ++i) {
                    const double a = th[(std::size_t)(i % pr->m)];
                    K.row(i) *= std::exp(cd{0.0, -pr->row_k(i) * (z.x * std::cos(a) +
                                                                  z.y * std::sin(a))});
                }
                for (int j = 0; j < n; ++j) {
                    const double a = th[(std::size_t)(j % pr->m)];
                    K.col(j) *= std::exp(cd{0.0, pr->col_k(j) * (z.x * std::cos(a) +
                                                                 z.y * std::sin(a))});
                }
                const Eigen::VectorXcd s = pr->scale.cast<cd>();
                const Eigen::MatrixXcd W = s.asDiagonal() * K * s.cwiseInverse().asDiagonal();
                // alpha = 0.1 keeps the regularized map well conditioned so
                // two independent solvers can agree to 1e-10
                const Eigen::MatrixXcd lhs =
                    W.adjoint() * W + 1e-2 * Eigen::MatrixXcd::Identity(n, n);
                const Eigen::VectorXcd gd = s.cwiseInverse().cwiseProduct(
                    lhs.llt().solve(W.adjoint() * s.cwiseProduct(rhs)));
                const auto fast = solve_at_point(*pr, z, rhs, 0.1);
                worst = std::max(worst, (fast.first - gd).norm() / gd.norm());
            }
        }
        std::snprintf(buf, sizeof buf, "rel dev %.2e", worst);
        checks.push_back({"fast path vs dense solve", worst <= 1e-10, buf});
    }

    {
        const auto rhs = prepare_rhs(ProbeMode::ipf, data, mat);
        const auto field = indicator_field(op, SamplingGrid{}, rhs, 1e-5);
        const Vec2 z = SamplingGrid{}.point(field.argmin);
        const double dist = std::hypot(z.x + 2.0, z.y - 3.0);
        std::snprintf(buf, sizeof buf, "minimizer (%.2f, %.2f), dist %.3f", z.x, z.y, dist);
        checks.push_back({"disk end-to-end localization", dist <= 0.15, buf});
    }

    return checks;
}

}  // namespace

int cmd_forward(const ForwardConfig& config) {
    try {
        config.material.validate();
        config.bc.validate();
        PlaneWave pw;
        pw.dir.theta = config.incidence_theta;
        pw.ap = config.ap;
        pw.as = config.as;

        DatasetMeta meta;
        meta.m = config.m;
        meta.material = config.material;
        meta.incidence_theta = config.incidence_theta;
        meta.ap = config.ap;
        meta.as = config.as;
        meta.bc = (config.bc.kind == BCKind::dirichlet)  ? "dirichlet"
                  : (config.bc.kind == BCKind::neumann) ? "neumann"
                                                         : "impedance";
        meta.sigma = config.bc.sigma;
        meta.noise_level = config.noise_level;
        meta.seed = config.seed;
        switch (config.shape.kind) {
            case ShapeKind::disk: meta.shape = "disk"; break;
            case ShapeKind::pear: meta.shape = "pear"; break;
            case ShapeKind::peanut: meta.shape = "peanut"; break;
            case ShapeKind::kite: meta.shape = "kite"; break;
        }

        ElasticFarField ff;
        const bool series = config.shape.kind == ShapeKind::disk &&
                            config.bc.kind == BCKind::dirichlet && !config.use_mfs_for_disk;
        if (series) {
            ff = series_disk_farfield(config.material, config.shape.radius, config.shape.offset,
                                      pw, config.m);
        } else {
            const auto sol =
                mfs_solve(config.shape, config.bc, pw, config.material, config.mfs);
            ff = mfs_farfield(sol, config.material, config.m);
            meta.residual = sol.residual;
        }
        if (config.noise_level != 0.0) ff = add_noise(ff, config.noise_level, config.seed);
        write_farfield_csv(config.out, ff, meta);
        return exit_code::ok;
    } catch (const SolverError& e) {
        std::fprintf(stderr, "forward solver: %s (condition %.3e)\n", e.what(), e.condition);
        return exit_code::forward_quality;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return exit_code::parse_error;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "forward: %s\n", e.what());
        return exit_code::config_mismatch;
    }
}

int cmd_invert(const InvertConfig& config) {
    try {
        config.params.validate();
        ElasticFarField ff;
        DatasetMeta meta;
        const int rc = run_inversion_input(config.data, config.params.m_directions, ff, meta);
        if (rc != exit_code::ok) return rc;
        const auto rhs = prepare_rhs(config.params.mode, ff, meta.material);
        const auto rec = esm_reconstruct(meta.material, config.params, rhs, config.grid);
        write_indicator_csv(config.out_indicator, rec.field, config.params);
        write_result_json(config.out_json, rec.z_star, config.params.probe_radius,
                          rec.field.raw_norms[(std::size_t)rec.field.argmin],
                          mode_name(config.params.mode), config.params.alpha);
        if (!config.out_pgm.empty()) write_pgm(config.out_pgm, rec.field);
        return exit_code::ok;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return exit_code::parse_error;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "invert: %s\n", e.what());
        return exit_code::config_mismatch;
    }
}

int cmd_multilevel(const MultilevelConfig& config) {
    try {
        config.params.validate();
        ElasticFarField ff;
        DatasetMeta meta;
        const int rc = run_inversion_input(config.data, config.params.m_directions, ff, meta);
        if (rc != exit_code::ok) return rc;
        const auto rhs = prepare_rhs(config.params.mode, ff, meta.material);
        const auto res =
            multilevel(meta.material, config.params, rhs, config.grid, config.r0, config.r_floor);
        write_multilevel_json(config.out, res, mode_name(config.params.mode),
                              config.params.alpha);
        return exit_code::ok;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return exit_code::parse_error;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "multilevel: %s\n", e.what());
        return exit_code::config_mismatch;
    }
}

int cmd_selftest(const SelftestConfig& config) {
    const auto checks = run_selftest_checks(config.corrupt_dps);
    bool all = true;
    for (const auto& c : checks) {
        std::printf("[%s] %-30s %s\n", c.pass ? "pass" : "FAIL", c.name.c_str(),
                    c.detail.c_str());
        all = all && c.pass;
    }
    return all ? exit_code::ok : exit_code::selftest_failure;
}

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli((int)argv.size(), argv.data());
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"extended sampling method for 2-d elastic scattering"};
    app.require_subcommand(1);

    ForwardConfig fc;
    std::string f_shape, f_bc = "dirichlet", f_center = "-2,3";
    int f_nsrc = 0, f_ncol = 0;
    auto* fwd = app.add_subcommand("forward", "generate a far-field dataset");
    fwd->add_option("--shape", f_shape, "disk|pear|peanut|kite")
        ->required()
        ->check(CLI::IsMember({"disk", "pear", "peanut", "kite"}));
    fwd->add_option("--radius", fc.shape.radius, "disk radius");
    fwd->add_option("--center", f_center, "obstacle center x,y");
    fwd->add_option("--bc", f_bc)->check(CLI::IsMember({"dirichlet", "neumann", "impedance"}));
    double f_sigma = 2.0;
    fwd->add_option("--sigma", f_sigma, "impedance parameter");
    fwd->add_option("--lambda", fc.material.lambda);
    fwd->add_option("--mu", fc.material.mu);
    fwd->add_option("--omega", fc.material.omega);
    fwd->add_option("--theta-inc", fc.incidence_theta);
    fwd->add_option("--ap", fc.ap);
    fwd->add_option("--as", fc.as);
    fwd->add_option("--m", fc.m, "number of observation directions");
    fwd->add_option("--noise", fc.noise_level, "multiplicative noise level");
    fwd->add_option("--seed", fc.seed);
    fwd->add_option("--n-sources", f_nsrc, "override the per-shape source count");
    fwd->add_option("--n-collocation", f_ncol, "override the collocation count");
    fwd->add_flag("--use-mfs-for-disk", fc.use_mfs_for_disk,
                  "solve the disk with mfs instead of the series");
    fwd->add_option("--out", fc.out);

    InvertConfig ic;
    std::string i_mode = "ipf";
    auto* inv = app.add_subcommand("invert", "single-level reconstruction");
    inv->add_option("--data", ic.data, "far-field csv")->required();
    inv->add_option("--mode", i_mode)->check(CLI::IsMember({"ipp-p", "ipp-s", "ipf"}));
    inv->add_option("--radius", ic.params.probe_radius, "probe disk radius");
    inv->add_option("--alpha", ic.params.alpha);
    inv->add_option("--m", ic.params.m_directions);
    inv->add_option("--xmin", ic.grid.x_min);
    inv->add_option("--xmax", ic.grid.x_max);
    inv->add_option("--ymin", ic.grid.y_min);
    inv->add_option("--ymax", ic.grid.y_max);
    inv->add_option("--step", ic.grid.step);
    inv->add_option("--out", ic.out_indicator, "indicator csv path");
    inv->add_option("--json", ic.out_json, "result json path");
    inv->add_option("--pgm", ic.out_pgm, "optional heatmap path");

    MultilevelConfig mc;
    std::string m_mode = "ipf";
    auto* ml = app.add_subcommand("multilevel", "probe-radius halving search");
    ml->add_option("--data", mc.data)->required();
    ml->add_option("--mode", m_mode)->check(CLI::IsMember({"ipp-p", "ipp-s", "ipf"}));
    ml->add_option("--alpha", mc.params.alpha);
    ml->add_option("--m", mc.params.m_directions);
    ml->add_option("--r0", mc.r0, "starting probe radius");
    ml->add_option("--floor", mc.r_floor, "radius floor");
    ml->add_option("--xmin", mc.grid.x_min);
    ml->add_option("--xmax", mc.grid.x_max);
    ml->add_option("--ymin", mc.grid.y_min);
    ml->add_option("--ymax", mc.grid.y_max);
    ml->add_option("--step", mc.grid.step);
    ml->add_option("--out", mc.out);

    SelftestConfig sc;
    auto* st = app.add_subcommand("selftest", "run the built-in verification suite");
    st->add_flag("--corrupt-dps", sc.corrupt_dps, "negative control: break a weight");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_code::ok : exit_code::config_mismatch;
    }

    if (*fwd) {
        if (f_shape == "disk") fc.shape.kind = ShapeKind::disk;
        else if (f_shape == "pear") fc.shape.kind = ShapeKind::pear;
        else if (f_shape == "peanut") fc.shape.kind = ShapeKind::peanut;
        else fc.shape.kind = ShapeKind::kite;
        if (f_bc == "dirichlet") fc.bc.kind = BCKind::dirichlet;
        else if (f_bc == "neumann") fc.bc.kind = BCKind::neumann;
        else fc.bc.kind = BCKind::impedance;
        fc.bc.sigma = (fc.bc.kind == BCKind::impedance) ? f_sigma : 0.0;
        if (std::sscanf(f_center.c_str(), "%lf,%lf", &fc.shape.offset.x, &fc.shape.offset.y) !=
            2) {
            std::fprintf(stderr, "cannot parse --center '%s' (expected x,y)\n",
                         f_center.c_str());
            return exit_code::config_mismatch;
        }
        fc.mfs = default_mfs_config(fc.shape.kind);
        if (f_nsrc > 0) fc.mfs.n_sources = f_nsrc;
        if (f_ncol > 0) fc.mfs.n_collocation = f_ncol;
        return cmd_forward(fc);
    }
    if (*inv) {
        ic.params.mode = *mode_from_name(i_mode);
        return cmd_invert(ic);
    }
    if (*ml) {
        mc.params.mode = *mode_from_name(m_mode);
        return cmd_multilevel(mc);
    }
    return cmd_selftest(sc);
}

}  // namespace esm2d
