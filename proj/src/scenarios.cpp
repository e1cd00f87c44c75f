#include "calabi/scenarios.hpp"

#include "calabi/radial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace calabi {

namespace {

constexpr double kOdeStep = 2e-4;

Grid2D centered_grid(double half_x, double half_y, double h) {
    const int nx = static_cast<int>(std::floor(half_x / h + 1e-9));
    const int ny = static_cast<int>(std::floor(half_y / h + 1e-9));
    return make_grid(-nx * h, -ny * h, h, h, 2 * nx + 1, 2 * ny + 1);
}

std::map<std::string, double> exact_tolerances(double tol) {
    return {{"hh_max", tol},        {"hh_rms", tol},      {"kk_max", tol},
            {"kk_rms", tol},        {"conformal_max", tol}, {"dual_pde_max", tol},
            {"curl_max", tol},      {"compat_max", tol},  {"gaussmap_defect", 1e-12}};
}

std::map<std::string, double> discretized_tolerances(double tol) {
    auto t = exact_tolerances(tol);
    t["gaussmap_defect"] = 1e-12;
    return t;
}

}  // namespace

GraphSurface soliton_bowl_graph(double h, double half_extent) {
    RadialProfile p = bowl_profile(linear_weight(1.0), 0.0, 2.2 * half_extent + 1.0, kOdeStep);
    return profile_to_graph(p, centered_grid(half_extent, half_extent, h));
}

GraphSurface cupola_graph(double beta, double h) {
    RadialProfile p = bowl_profile(log_alpha_weight(beta), 1.0, 6.0, kOdeStep);
    // Keep the sampled graph in the moderate-slope part of the profile.
    std::size_t last = 0;
    for (std::size_t k = 0; k < p.size(); ++k)
        if (std::fabs(p.z[k]) <= 0.8) last = k;
    const double half = p.x[last] / std::sqrt(2.0);
    if (!(half > 4.0 * h))
        throw std::invalid_argument("cupola_graph: spacing too coarse for the profile");
    return profile_to_graph(p, centered_grid(half, half, h));
}

std::vector<std::string> scenario_names() {
    return {"plane-identity", "tilted-plane", "grim-reaper", "soliton-bowl",
            "cupola",         "cupola-steep", "ruled"};
}

Scenario make_scenario(const std::string& name, double h) {
    Scenario sc;
    sc.name = name;
    if (name == "plane-identity") {
        if (h <= 0.0) h = 1.0 / 16.0;
        Grid2D g = centered_grid(1.0, 1.0, h);
        sc.surface = make_graph(g, Field(g.size(), 0.0), Signature::Euclidean);
        sc.weight = minimal_weight();
        sc.tolerances = exact_tolerances(1e-12);
        return sc;
    }
    if (name == "tilted-plane") {
        if (h <= 0.0) h = 1.0 / 16.0;
        Grid2D g = centered_grid(1.0, 1.0, h);
        sc.surface = make_graph(g, sample(g, [](double x, double) { return x; }),
                                Signature::Euclidean);
        sc.weight = minimal_weight();
        sc.tolerances = exact_tolerances(1e-10);
        return sc;
    }
    if (name == "grim-reaper") {
        if (h <= 0.0) h = 0.01;
        Grid2D g = centered_grid(0.5, 1.2, h);
        sc.surface = make_graph(
            g, sample(g, [](double, double y) { return -std::log(std::cos(y)); }),
            Signature::Euclidean);
        sc.weight = linear_weight(1.0);
        sc.tolerances = discretized_tolerances(2e-2);
        sc.tolerances["conformal_max"] = 1e-1;  // large smooth constant, still O(h^2)
        return sc;
    }
    if (name == "soliton-bowl") {
        if (h <= 0.0) h = 0.025;
        sc.surface = soliton_bowl_graph(h);
        sc.weight = linear_weight(1.0);
        sc.tolerances = discretized_tolerances(2e-2);
        return sc;
    }
    if (name == "cupola" || name == "cupola-steep") {
        const double beta = name == "cupola" ? -1.0 : -2.0;
        if (h <= 0.0) h = 0.005;
        sc.surface = cupola_graph(beta, h);
        sc.weight = log_alpha_weight(beta);
        sc.tolerances = discretized_tolerances(5e-2);
        return sc;
    }
    if (name == "ruled") {
        if (h <= 0.0) h = 0.01;
        Grid2D g = centered_grid(1.0, 1.5, h);
        sc.surface = make_graph(
            g, sample(g, [](double, double y) { return std::sqrt(1.0 + y * y); }),
            Signature::Lorentzian);
        sc.weight = log_alpha_weight(-1.0);
        sc.direction = Direction::LorentzToEuclid;
        sc.tolerances = discretized_tolerances(2e-2);
        return sc;
    }
    std::ostringstream os;
    os << "unknown scenario '" << name << "'; choices:";
    for (const auto& n : scenario_names()) os << ' ' << n;
    throw std::invalid_argument(os.str());
}

}  // namespace calabi
