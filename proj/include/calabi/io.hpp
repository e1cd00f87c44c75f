#ifndef CALABI_IO_HPP
#define CALABI_IO_HPP

#include "calabi/grid.hpp"
#include "calabi/hyperbolic.hpp"
#include "calabi/mesh.hpp"
#include "calabi/radial.hpp"
#include "calabi/transform.hpp"
#include "calabi/weights.hpp"

#include <string>

namespace calabi {

/// %.17g — round-trippable doubles, byte-stable across runs.
std::string fmt17(double v);

void write_field_csv(const Grid2D& g, const Field& f, const Mask& valid, const std::string& path);
void write_profile_csv(const RadialProfile& p, const std::string& path);
void write_curve_csv(const TransformedCurve& c, const std::string& path);
void write_hyperbolic_csv(const HyperbolicProfile& p, const std::string& path);
void write_obj(const SurfaceMesh& m, const std::string& path);

/// Report JSON: {"schema":1, "metadata":{...}, "entries":[{name,value,
/// tolerance,pass},...], "pass":bool}, keys in stable order.
std::string report_to_json(const InvariantReport& r);
void write_text(const std::string& text, const std::string& path);

/// Reads an x,y,value CSV onto the grid (rows mapped to nearest node);
/// nodes with no row are masked invalid.
GraphSurface read_field_csv(const Grid2D& g, Signature sig, const std::string& path);

/// Reads an s,x,u,z profile CSV; weight/forcing left default.
RadialProfile read_profile_csv(Signature side, const std::string& path);

/// "minimal" | "linear:<c>" | "log:<alpha>" | "scaledlog:<a>:<b>",
/// optionally suffixed ":g=<gauge>".
WeightFunction parse_weight_spec(const std::string& spec);

/// "x0:x1:nx:y0:y1:ny".
Grid2D parse_grid_spec(const std::string& spec);

}  // namespace calabi

#endif
