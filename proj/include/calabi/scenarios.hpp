#ifndef CALABI_SCENARIOS_HPP
#define CALABI_SCENARIOS_HPP

#include "calabi/grid.hpp"
#include "calabi/transform.hpp"
#include "calabi/weights.hpp"

#include <map>
#include <string>
#include <vector>

namespace calabi {

/// A named verification setup: source surface + weight + direction, with
/// tolerances calibrated at the default spacing.  Shared by the CLI
/// presets and the acceptance suite.
struct Scenario {
    std::string name;
    GraphSurface surface;
    WeightFunction weight;
    Direction direction = Direction::EuclidToLorentz;
    std::map<std::string, double> tolerances;
};

std::vector<std::string> scenario_names();

/// h <= 0 picks the scenario's default spacing.  Unknown names throw
/// std::invalid_argument listing the choices.
Scenario make_scenario(const std::string& name, double h = 0.0);

/// Euclidean radial soliton graph (linear weight, apex height 0) sampled
/// at spacing h; used by several scenarios and the acceptance suite.
GraphSurface soliton_bowl_graph(double h, double half_extent = 0.8);

/// Cupola-family radial graph for exponent beta (log weight), apex height
/// 1, restricted to radii with moderate slope.
GraphSurface cupola_graph(double beta, double h);

}  // namespace calabi

#endif
