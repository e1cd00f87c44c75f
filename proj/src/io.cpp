#include "calabi/io.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace calabi {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    return os;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

double to_real(const std::string& s, const char* what) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("malformed ") + what + ": '" + s + "'");
    }
    if (pos != s.size())
        throw std::invalid_argument(std::string("malformed ") + what + ": '" + s + "'");
    return v;
}

}  // namespace

void write_field_csv(const Grid2D& g, const Field& f, const Mask& valid, const std::string& path) {
    auto os = open_out(path);
    os << "x,y,value\n";
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const std::size_t k = g.idx(i, j);
            if (!valid.empty() && !valid[k]) continue;
            os << fmt17(g.x(i)) << ',' << fmt17(g.y(j)) << ',' << fmt17(f[k]) << '\n';
        }
}

void write_profile_csv(const RadialProfile& p, const std::string& path) {
    auto os = open_out(path);
    os << "s,x,u,z\n";
    for (std::size_t k = 0; k < p.size(); ++k)
        os << fmt17(p.s[k]) << ',' << fmt17(p.x[k]) << ',' << fmt17(p.u[k]) << ','
           << fmt17(p.z[k]) << '\n';
}

void write_curve_csv(const TransformedCurve& c, const std::string& path) {
    auto os = open_out(path);
    os << "lambda,theta\n";
    for (std::size_t k = 0; k < c.lambda.size(); ++k)
        os << fmt17(c.lambda[k]) << ',' << fmt17(c.theta[k]) << '\n';
}

void write_hyperbolic_csv(const HyperbolicProfile& p, const std::string& path) {
    auto os = open_out(path);
    os << "x,u,z,k\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        os << fmt17(p.x[i]) << ',' << fmt17(p.u[i]) << ',' << fmt17(p.z[i]) << ',' << fmt17(p.k)
           << '\n';
}

void write_obj(const SurfaceMesh& m, const std::string& path) {
    auto os = open_out(path);
    for (const auto& v : m.vertices)
        os << "v " << fmt17(v[0]) << ' ' << fmt17(v[1]) << ' ' << fmt17(v[2]) << '\n';
    for (const auto& n : m.normals)
        os << "vn " << fmt17(n[0]) << ' ' << fmt17(n[1]) << ' ' << fmt17(n[2]) << '\n';
    for (const auto& k : m.K) os << "# K " << fmt17(k) << '\n';
    for (const auto& t : m.triangles)
        os << "f " << t[0] + 1 << "//" << t[0] + 1 << ' ' << t[1] + 1 << "//" << t[1] + 1 << ' '
           << t[2] + 1 << "//" << t[2] + 1 << '\n';
}

GraphSurface read_field_csv(const Grid2D& g, Signature sig, const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    GraphSurface s;
    s.grid = g;
    s.signature = sig;
    s.u.assign(g.size(), 0.0);
    s.valid.assign(g.size(), 0);
    std::string line;
    std::getline(is, line);  // header
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto cols = split(line, ',');
        if (cols.size() != 3) throw std::runtime_error("bad field CSV row: '" + line + "'");
        const double x = to_real(cols[0], "csv x"), y = to_real(cols[1], "csv y");
        const double v = to_real(cols[2], "csv value");
        const int i = static_cast<int>(std::lround((x - g.x0) / g.dx));
        const int j = static_cast<int>(std::lround((y - g.y0) / g.dy));
        if (i < 0 || j < 0 || i >= g.nx || j >= g.ny)
            throw std::runtime_error("field CSV row falls outside the grid: '" + line + "'");
        s.u[g.idx(i, j)] = v;
        s.valid[g.idx(i, j)] = 1;
    }
    return s;
}

RadialProfile read_profile_csv(Signature side, const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open for reading: " + path);
    RadialProfile p;
    p.side = side;
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto cols = split(line, ',');
        if (cols.size() != 4) throw std::runtime_error("bad profile CSV row: '" + line + "'");
        p.s.push_back(to_real(cols[0], "csv s"));
        p.x.push_back(to_real(cols[1], "csv x"));
        p.u.push_back(to_real(cols[2], "csv u"));
        p.z.push_back(to_real(cols[3], "csv z"));
    }
    return p;
}

std::string report_to_json(const InvariantReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    nlohmann::ordered_json meta;
    for (const auto& [k, v] : r.metadata) meta[k] = v;
    j["metadata"] = meta;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& e : r.entries) {
        nlohmann::ordered_json je;
        je["name"] = e.name;
        je["value"] = e.value;
        je["tolerance"] = e.tolerance;
        je["pass"] = e.pass;
        entries.push_back(je);
    }
    j["entries"] = entries;
    j["pass"] = r.all_pass();
    return j.dump(2) + "\n";
}

void write_text(const std::string& text, const std::string& path) {
    auto os = open_out(path);
    os << text;
}

WeightFunction parse_weight_spec(const std::string& spec) {
    auto parts = split(spec, ':');
    double gauge = 0.0;
    if (parts.size() > 1 && parts.back().rfind("g=", 0) == 0) {
        gauge = to_real(parts.back().substr(2), "gauge");
        parts.pop_back();
    }
    const std::string& kind = parts[0];
    if (kind == "minimal") {
        if (parts.size() != 1) throw std::invalid_argument("weight spec: minimal takes no parameters");
        return minimal_weight(gauge);
    }
    if (kind == "linear") {
        if (parts.size() != 2) throw std::invalid_argument("weight spec: expected linear:<c>");
        return linear_weight(to_real(parts[1], "linear slope"), gauge);
    }
    if (kind == "log") {
        if (parts.size() != 2) throw std::invalid_argument("weight spec: expected log:<alpha>");
        return log_alpha_weight(to_real(parts[1], "log exponent"), gauge);
    }
    if (kind == "scaledlog") {
        if (parts.size() != 3)
            throw std::invalid_argument("weight spec: expected scaledlog:<a>:<b>");
        return scaled_log_weight(to_real(parts[1], "scaledlog exponent"),
                                 to_real(parts[2], "scaledlog scale"), gauge);
    }
    throw std::invalid_argument("unknown weight spec: '" + spec + "'");
}

Grid2D parse_grid_spec(const std::string& spec) {
    auto parts = split(spec, ':');
    if (parts.size() != 6)
        throw std::invalid_argument("grid spec: expected x0:x1:nx:y0:y1:ny");
    const double x0 = to_real(parts[0], "grid x0"), x1 = to_real(parts[1], "grid x1");
    const double y0 = to_real(parts[3], "grid y0"), y1 = to_real(parts[4], "grid y1");
    const double nxd = to_real(parts[2], "grid nx"), nyd = to_real(parts[5], "grid ny");
    const int nx = static_cast<int>(nxd), ny = static_cast<int>(nyd);
    if (nx != nxd || ny != nyd) throw std::invalid_argument("grid spec: nx, ny must be integers");
    return make_grid_span(x0, x1, nx, y0, y1, ny);
}

}  // namespace calabi
