#include "esm2d/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace esm2d {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_pair(cd v) { return fmt(v.real()) + "," + fmt(v.imag()); }

double parse_double(const std::string& s, std::size_t row) {
    double v = 0.0;
    const char* b = s.data();
    const char* e = b + s.size();
    const auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc{} || p != e)
        throw ParseError("row " + std::to_string(row) + ": cannot parse number '" + s + "'", row);
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

void apply_meta_token(DatasetMeta& meta, const std::string& token, std::size_t row) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) return;
    const std::string key = token.substr(0, eq);
    const std::string val = token.substr(eq + 1);
    auto num = [&] { return parse_double(val, row); };
    auto pair = [&]() -> cd {
        const auto parts = split(val, ',');
        if (parts.size() != 2)
            throw ParseError("row " + std::to_string(row) + ": bad complex '" + val + "'", row);
        return {parse_double(parts[0], row), parse_double(parts[1], row)};
    };
    if (key == "m") meta.m = (int)num();
    else if (key == "lambda") meta.material.lambda = num();
    else if (key == "mu") meta.material.mu = num();
    else if (key == "omega") meta.material.omega = num();
    else if (key == "theta_inc") meta.incidence_theta = num();
    else if (key == "ap") meta.ap = pair();
    else if (key == "as") meta.as = pair();
    else if (key == "shape") meta.shape = val;
    else if (key == "bc") meta.bc = val;
    else if (key == "sigma") meta.sigma = num();
    else if (key == "residual") meta.residual = num();
    else if (key == "noise") meta.noise_level = num();
    else if (key == "seed") {
        std::uint64_t s = 0;
        const auto [p, ec] = std::from_chars(val.data(), val.data() + val.size(), s);
        if (ec != std::errc{} || p != val.data() + val.size())
            throw ParseError("row " + std::to_string(row) + ": bad seed '" + val + "'", row);
        meta.seed = s;
    }
}

}  // namespace

void write_farfield_csv(const std::string& path, const ElasticFarField& ff,
                        const DatasetMeta& meta) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open for writing: " + path, 0);
    out << "# esm2d-farfield\n";
    out << "# m=" << ff.m << "\n";
    out << "# lambda=" << fmt(meta.material.lambda) << " mu=" << fmt(meta.material.mu)
        << " omega=" << fmt(meta.material.omega) << "\n";
    out << "# theta_inc=" << fmt(meta.incidence_theta) << " ap=" << fmt_pair(meta.ap)
        << " as=" << fmt_pair(meta.as) << "\n";
    if (!meta.shape.empty())
        out << "# shape=" << meta.shape << " bc=" << meta.bc << " sigma=" << fmt(meta.sigma)
            << "\n";
    if (meta.residual) out << "# residual=" << fmt(*meta.residual) << "\n";
    out << "# noise=" << fmt(meta.noise_level) << " seed=" << meta.seed << "\n";
    out << "j,theta,re_up,im_up,re_us,im_us\n";
    for (int j = 0; j < ff.m; ++j) {
        const auto& up = ff.up[(std::size_t)j];
        const auto& us = ff.us[(std::size_t)j];
        out << (j + 1) << "," << fmt(ff.theta(j)) << "," << fmt(up.real()) << ","
            << fmt(up.imag()) << "," << fmt(us.real()) << "," << fmt(us.imag()) << "\n";
    }

    nlohmann::json side;
    side["m"] = ff.m;
    side["lambda"] = meta.material.lambda;
    side["mu"] = meta.material.mu;
    side["omega"] = meta.material.omega;
    side["theta_inc"] = meta.incidence_theta;
    side["ap"] = {meta.ap.real(), meta.ap.imag()};
    side["as"] = {meta.as.real(), meta.as.imag()};
    if (!meta.shape.empty()) {
        side["shape"] = meta.shape;
        side["bc"] = meta.bc;
        side["sigma"] = meta.sigma;
    }
    if (meta.residual) side["residual"] = *meta.residual;
    side["noise"] = meta.noise_level;
    side["seed"] = meta.seed;
    std::ofstream(path + ".meta.json") << side.dump(2) << "\n";
}

std::pair<ElasticFarField, DatasetMeta> read_farfield_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open: " + path, 0);

    DatasetMeta meta;
    bool m_declared = false;
    ElasticFarField ff;
    std::vector<double> thetas;
    std::vector<std::size_t> row_lines;
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ss(line.substr(1));
            for (std::string tok; ss >> tok;) {
                if (tok.find('=') != std::string::npos) {
                    if (tok.rfind("m=", 0) == 0) m_declared = true;
                    apply_meta_token(meta, tok, lineno);
                }
            }
            continue;
        }
        if (line[0] == 'j') continue;  // column header
        const auto cells = split(line, ',');
        if (cells.size() != 6)
            throw ParseError("row " + std::to_string(lineno) + ": expected 6 columns, got " +
                                 std::to_string(cells.size()),
                             lineno);
        const int j = (int)parse_double(cells[0], lineno);
        if (j != (int)thetas.size() + 1)
            throw ParseError("row " + std::to_string(lineno) + ": index " + std::to_string(j) +
                                 " out of order",
                             lineno);
        thetas.push_back(parse_double(cells[1], lineno));
        row_lines.push_back(lineno);
        ff.up.push_back({parse_double(cells[2], lineno), parse_double(cells[3], lineno)});
        ff.us.push_back({parse_double(cells[4], lineno), parse_double(cells[5], lineno)});
    }
    if (thetas.empty()) throw ParseError("no data rows in " + path, lineno);
    ff.m = (int)thetas.size();
    if (m_declared && meta.m != ff.m)
        throw ParseError("declared m=" + std::to_string(meta.m) + " but found " +
                             std::to_string(ff.m) + " rows",
                         lineno);
    meta.m = ff.m;
    for (int j = 0; j < ff.m; ++j) {
        const double want = 2.0 * kPi * j / ff.m;
        if (std::abs(thetas[(std::size_t)j] - want) > 1e-9)
            throw ParseError("row " + std::to_string(row_lines[(std::size_t)j]) +
                                 ": theta is not on the uniform grid",
                             row_lines[(std::size_t)j]);
    }
    return {std::move(ff), std::move(meta)};
}

void write_indicator_csv(const std::string& path, const IndicatorField& field,
                         const ESMParams& params) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open for writing: " + path, 0);
    const auto& g = field.grid;
    out << "# esm2d-indicator mode=" << mode_name(params.mode) << " alpha=" << fmt(params.alpha)
        << " radius=" << fmt(params.probe_radius) << "\n";
    out << "# xmin=" << fmt(g.x_min) << " xmax=" << fmt(g.x_max) << " ymin=" << fmt(g.y_min)
        << " ymax=" << fmt(g.y_max) << " step=" << fmt(g.step) << " nx=" << g.nx()
        << " ny=" << g.ny() << "\n";
    for (int mx = 0; mx < g.nx(); ++mx) {
        for (int ny = 0; ny < g.ny(); ++ny) {
            if (ny) out << ",";
            out << fmt(field.values[(std::size_t)(mx * g.ny() + ny)]);
        }
        out << "\n";
    }
}

void write_result_json(const std::string& path, Vec2 z_star, double radius,
                       double min_raw_norm, const std::string& mode, double alpha) {
    nlohmann::json j;
    j["z_star"] = {z_star.x, z_star.y};
    j["radius"] = radius;
    j["min_raw_norm"] = min_raw_norm;
    j["mode"] = mode;
    j["alpha"] = alpha;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open for writing: " + path, 0);
    out << j.dump(2) << "\n";
}

void write_multilevel_json(const std::string& path, const MultilevelResult& result,
                           const std::string& mode, double alpha) {
    nlohmann::json j;
    j["mode"] = mode;
    j["alpha"] = alpha;
    j["trace"] = nlohmann::json::array();
    for (const auto& rec : result.trace)
        j["trace"].push_back({{"level", rec.level}, {"R", rec.radius}, {"z", {rec.z.x, rec.z.y}}});
    j["z_final"] = {result.z_final.x, result.z_final.y};
    j["R_final"] = result.r_final;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open for writing: " + path, 0);
    out << j.dump(2) << "\n";
}

void write_pgm(const std::string& path, const IndicatorField& field) {
    const auto& g = field.grid;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open for writing: " + path, 0);
    out << "P5\n" << g.nx() << " " << g.ny() << "\n255\n";
    double vmin = 1.0;
    for (double v : field.values) vmin = std::min(vmin, v);
    const double span = 1.0 - vmin;
    for (int r = 0; r < g.ny(); ++r) {
        const int iy = g.ny() - 1 - r;
        for (int c = 0; c < g.nx(); ++c) {
            const double v = field.values[(std::size_t)(c * g.ny() + iy)];
            const int byte = (span > 0.0) ? (int)std::lround((v - vmin) / span * 255.0) : 0;
            out.put((char)(unsigned char)std::clamp(byte, 0, 255));
        }
    }
}

std::string mode_name(ProbeMode mode) {
    switch (mode) {
        case ProbeMode::ipp_p: return "ipp-p";
        case ProbeMode::ipp_s: return "ipp-s";
        default: return "ipf";
    }
}

std::optional<ProbeMode> mode_from_name(const std::string& name) {
    if (name == "ipp-p" || name == "ipp_p") return ProbeMode::ipp_p;
    if (name == "ipp-s" || name == "ipp_s") return ProbeMode::ipp_s;
    if (name == "ipf") return ProbeMode::ipf;
    return std::nullopt;
}

}  // namespace esm2d
