#include "calabi/cli.hpp"

#include "calabi/io.hpp"
#include "calabi/mesh.hpp"
#include "calabi/scenarios.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

namespace calabi {

namespace {

Forcing parse_forcing(const std::string& spec) {
    if (spec == "one") return Forcing{ForcingKind::One, 0.0};
    if (spec.rfind("alpha:", 0) == 0) {
        Forcing f;
        f.kind = ForcingKind::AlphaOverU;
        f.alpha = std::stod(spec.substr(6));
        return f;
    }
    throw std::invalid_argument("forcing spec must be 'one' or 'alpha:<a>'");
}

int do_verify(const std::string& preset, double h, const std::string& out) {
    Scenario sc = make_scenario(preset, h);
    CalabiPair pair = sc.direction == Direction::EuclidToLorentz
                          ? forward_transform(sc.surface, sc.weight)
                          : inverse_transform(sc.surface, sc.weight);
    ResampledImage res = resample_image_graph(pair);
    InvariantReport rep = verify_pair(pair, res, sc.tolerances);
    rep.metadata["preset"] = sc.name;
    for (const auto& e : rep.entries)
        std::printf("%-18s %-4s  value=%.3e  tol=%.3e\n", e.name.c_str(),
                    e.pass ? "PASS" : "FAIL", e.value, e.tolerance);
    if (!out.empty()) write_text(report_to_json(rep), out);
    return rep.all_pass() ? 0 : 2;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"weighted-minimal / weighted-maximal graph correspondence toolkit"};
    app.require_subcommand(1);
    // '--h' is a step-size option here, so keep help on '--help' only.
    app.set_help_flag("--help", "print help");

    bool dry = false;
    std::string weight_spec = "minimal", grid_spec, out, out2, forcing_spec = "one";
    std::string preset, surface_csv, profile_csv, branch = "down", side = "euclid";
    double u0 = 0.0, smax = 3.0, h = 1e-3, x1 = 1.0, u1 = 1.0, a0 = 1.0, rmax = 50.0;
    double alpha = 1.0, extent = 5.0, lambda = 0.0, y0 = -1.0, y1 = 1.0, t0 = -2.0, t1 = 2.0;
    int n = 64, n_t = 0;

    auto add_dry = [&](CLI::App* s) { s->add_flag("--dry-run", dry, "validate options only"); };

    auto* cbowl = app.add_subcommand("bowl", "Euclidean rotational profile from the axis");
    cbowl->add_option("--weight", weight_spec);
    cbowl->add_option("--u0", u0, "apex height");
    cbowl->add_option("--smax", smax);
    cbowl->add_option("--h", h, "arc-length step");
    cbowl->add_option("--out", out, "profile CSV (s,x,u,z)")->required();
    cbowl->add_option("--transform-out", out2, "dual generating curve CSV (lambda,theta)");
    add_dry(cbowl);

    auto* cwing = app.add_subcommand("winglike", "Euclidean winglike profile from the neck");
    cwing->add_option("--weight", weight_spec);
    cwing->add_option("--x1", x1, "neck radius");
    cwing->add_option("--u1", u1, "neck height");
    cwing->add_option("--smax", smax);
    cwing->add_option("--h", h);
    cwing->add_option("--out", out)->required();
    add_dry(cwing);

    auto* clb = app.add_subcommand("lbowl", "Lorentzian bowl profile");
    clb->add_option("--forcing", forcing_spec, "'one' or 'alpha:<a>'");
    clb->add_option("--a0", a0, "axis height");
    clb->add_option("--rmax", rmax);
    clb->add_option("--h", h);
    clb->add_option("--out", out)->required();
    add_dry(clb);

    auto* clw = app.add_subcommand("lwinglike", "Lorentzian light-cone-seeded profile");
    clw->add_option("--forcing", forcing_spec);
    clw->add_option("--a0", a0);
    clw->add_option("--branch", branch, "'down' (u'(0)=-1) or 'up'");
    clw->add_option("--rmax", rmax);
    clw->add_option("--h", h);
    clw->add_option("--out", out)->required();
    add_dry(clw);

    auto* chyp = app.add_subcommand("hyperbolic", "hyperbolic-rotation profile / mesh");
    chyp->add_option("--alpha", alpha);
    chyp->add_option("--u0", u1);
    chyp->add_option("--extent", extent);
    chyp->add_option("--h", h);
    chyp->add_option("--revolve", n_t, "emit an OBJ orbit mesh with this many t samples");
    chyp->add_option("--t0", t0);
    chyp->add_option("--t1", t1);
    chyp->add_option("--out", out)->required();
    add_dry(chyp);

    auto* cgr = app.add_subcommand("grim-reaper", "Grim Reaper mesh from the closed form");
    cgr->add_option("--lambda", lambda, "tilt, sinh(z0)");
    cgr->add_option("--u0", u1);
    cgr->add_option("--y0", y0);
    cgr->add_option("--y1", y1);
    cgr->add_option("--t0", t0);
    cgr->add_option("--t1", t1);
    cgr->add_option("--n", n);
    cgr->add_option("--out", out)->required();
    cgr->add_option("--source-out", out2, "also write the ruled maximal source mesh");
    add_dry(cgr);

    auto* ctr = app.add_subcommand("transform", "Euclidean graph -> spacelike image");
    ctr->add_option("--weight", weight_spec)->required();
    ctr->add_option("--grid", grid_spec, "x0:x1:nx:y0:y1:ny")->required();
    ctr->add_option("--surface", surface_csv, "x,y,value CSV of heights")->required();
    ctr->add_option("--out", out, "image CSV (x,y,Ix,Iy,Iz)")->required();
    ctr->add_option("--resampled-out", out2, "resampled image height CSV");
    add_dry(ctr);

    auto* cinv = app.add_subcommand("inverse-transform", "spacelike graph -> Euclidean image");
    cinv->add_option("--weight", weight_spec)->required();
    cinv->add_option("--grid", grid_spec)->required();
    cinv->add_option("--surface", surface_csv)->required();
    cinv->add_option("--out", out)->required();
    cinv->add_option("--resampled-out", out2);
    add_dry(cinv);

    auto* cver = app.add_subcommand("verify", "run a named scenario and check invariants");
    cver->add_option("--preset", preset)->required();
    cver->add_option("--h", h, "grid spacing override (0 = preset default)")->default_val(0.0);
    cver->add_option("--out", out, "report JSON");
    add_dry(cver);

    auto* crev = app.add_subcommand("revolve", "full-turn mesh from a profile CSV");
    crev->add_option("--profile", profile_csv)->required();
    crev->add_option("--side", side, "'euclid' or 'lorentz'");
    crev->add_option("--n", n, "t samples");
    crev->add_option("--out", out)->required();
    add_dry(crev);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (cbowl->parsed()) {
            const WeightFunction w = parse_weight_spec(weight_spec);
            if (dry) return 0;
            RadialProfile p = bowl_profile(w, u0, smax, h);
            write_profile_csv(p, out);
            if (!out2.empty()) write_curve_csv(transform_profile(p), out2);
        } else if (cwing->parsed()) {
            const WeightFunction w = parse_weight_spec(weight_spec);
            if (dry) return 0;
            write_profile_csv(winglike_profile(w, x1, u1, smax, h), out);
        } else if (clb->parsed()) {
            const Forcing f = parse_forcing(forcing_spec);
            if (dry) return 0;
            write_profile_csv(lorentz_bowl_profile(f, a0, rmax, h), out);
        } else if (clw->parsed()) {
            const Forcing f = parse_forcing(forcing_spec);
            if (branch != "down" && branch != "up")
                throw std::invalid_argument("branch must be 'down' or 'up'");
            if (dry) return 0;
            const auto b = branch == "down" ? LightconeBranch::Down : LightconeBranch::Up;
            write_profile_csv(lorentz_winglike_profile(f, a0, b, rmax, h), out);
        } else if (chyp->parsed()) {
            if (dry) return 0;
            HyperbolicProfile p = hyperbolic_profile(alpha, u1, extent, h);
            if (n_t > 0)
                write_obj(hyperbolic_revolve(p, t0, t1, n_t), out);
            else
                write_hyperbolic_csv(p, out);
        } else if (cgr->parsed()) {
            if (dry) return 0;
            write_obj(grim_reaper(lambda, u1, y0, y1, t0, t1, n), out);
            if (!out2.empty())
                write_obj(ruled_maximal_surface(std::asinh(lambda), u1, y0, y1, t0, t1, n), out2);
        } else if (ctr->parsed() || cinv->parsed()) {
            const WeightFunction w = parse_weight_spec(weight_spec);
            const Grid2D g = parse_grid_spec(grid_spec);
            if (dry) return 0;
            const bool fwd = ctr->parsed();
            GraphSurface s = read_field_csv(
                g, fwd ? Signature::Euclidean : Signature::Lorentzian, surface_csv);
            CalabiPair pair = fwd ? forward_transform(s, w) : inverse_transform(s, w);
            {
                std::ofstream os(out);
                if (!os) throw std::runtime_error("cannot open for writing: " + out);
                os << "x,y,Ix,Iy,Iz\n";
                for (int j = 0; j < g.ny; ++j)
                    for (int i = 0; i < g.nx; ++i) {
                        const std::size_t k = g.idx(i, j);
                        if (!pair.valid[k]) continue;
                        os << fmt17(g.x(i)) << ',' << fmt17(g.y(j)) << ',' << fmt17(pair.Ix[k])
                           << ',' << fmt17(pair.Iy[k]) << ',' << fmt17(pair.Iz[k]) << '\n';
                    }
            }
            if (!out2.empty()) {
                ResampledImage r = resample_image_graph(pair);
                write_field_csv(r.surface.grid, r.surface.u, r.surface.valid, out2);
            }
        } else if (cver->parsed()) {
            if (dry) {
                make_scenario(preset, 0.0);  // validates the name
                return 0;
            }
            return do_verify(preset, h, out);
        } else if (crev->parsed()) {
            if (side != "euclid" && side != "lorentz")
                throw std::invalid_argument("side must be 'euclid' or 'lorentz'");
            if (dry) return 0;
            RadialProfile p = read_profile_csv(
                side == "euclid" ? Signature::Euclidean : Signature::Lorentzian, profile_csv);
            write_obj(elliptic_revolve(p, n), out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace calabi
