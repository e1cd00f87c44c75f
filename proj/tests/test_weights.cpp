#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "calabi/weights.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace calabi;

namespace {

std::vector<WeightFunction> weight_zoo() {
    return {
        minimal_weight(),
        minimal_weight(0.7),
        linear_weight(1.0),
        linear_weight(2.5, -0.3),
        log_alpha_weight(1.0),
        log_alpha_weight(-0.5),
        log_alpha_weight(-1.0),
        log_alpha_weight(-2.0),
        log_alpha_weight(-1.5, 0.4),
        scaled_log_weight(2.0, 3.0),
        scaled_log_weight(-0.5, 0.5, 0.2),
        scaled_log_weight(-2.0, -1.0),
    };
}

// A height well inside the weight's domain for randomized property checks.
double domain_point(const WeightFunction& w, double t01) {
    if (w.z_max == 0.0) return -0.5 - 2.0 * t01;  // negative-axis domains
    if (w.z_min == 0.0) return 0.5 + 2.0 * t01;
    return -1.5 + 3.0 * t01;
}

}  // namespace

TEST_CASE("closed forms at pinned points") {
    CHECK(minimal_weight().phi(5.0) == 0.0);
    CHECK(minimal_weight().theta(5.0) == 5.0);

    const WeightFunction lin = linear_weight(1.0);
    CHECK(lin.phi(0.0) == 0.0);
    CHECK(lin.phi_dot(3.0) == 1.0);
    CHECK(lin.theta(0.0) == doctest::Approx(1.0));  // e^z/1 at z=0

    const WeightFunction la1 = log_alpha_weight(1.0);
    CHECK(la1.phi(2.0) == doctest::Approx(std::log(2.0)));
    CHECK(la1.phi_dot(2.0) == doctest::Approx(0.5));
    CHECK(la1.theta(2.0) == doctest::Approx(2.0));  // z^2/2

    const WeightFunction lam1 = log_alpha_weight(-1.0);
    CHECK(lam1.theta(std::exp(1.0)) == doctest::Approx(1.0));  // log z

    // theta(z) = z^{a+1}/(a+1): exponent -2 gives -1/z.
    CHECK(log_alpha_weight(-2.0).theta(2.0) == doctest::Approx(-0.5));

    const WeightFunction sl = scaled_log_weight(2.0, 3.0);
    CHECK(sl.phi(1.0) == doctest::Approx(2.0 * std::log(3.0)));
    CHECK(sl.phi_dot(4.0) == doctest::Approx(0.5));
}

TEST_CASE("gauge shifts phi additively and theta multiplicatively") {
    for (const auto& base : weight_zoo()) {
        WeightFunction g = base;
        g.gauge += 0.9;
        const double z = domain_point(base, 0.4);
        CHECK(g.phi(z) == doctest::Approx(base.phi(z) + 0.9));
        CHECK(g.phi_dot(z) == doctest::Approx(base.phi_dot(z)));
        CHECK(g.theta(z) == doctest::Approx(base.theta(z) * std::exp(0.9)));
    }
}

TEST_CASE("theta' = e^phi (second-order finite-difference check)") {
    std::mt19937 rng(20240517);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (const auto& w : weight_zoo()) {
        for (int trial = 0; trial < 100; ++trial) {
            const double z = domain_point(w, uni(rng));
            const double h = 1e-5;
            const double fd = (w.theta(z + h) - w.theta(z - h)) / (2.0 * h);
            const double ref = std::exp(w.phi(z));
            CHECK(fd == doctest::Approx(ref).epsilon(1e-7));
        }
    }
}

TEST_CASE("theta_inv inverts theta") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (const auto& w : weight_zoo()) {
        for (int trial = 0; trial < 100; ++trial) {
            const double z = domain_point(w, uni(rng));
            CHECK(w.theta_inv(w.theta(z)) == doctest::Approx(z).epsilon(1e-12));
        }
    }
}

TEST_CASE("domain enforcement") {
    CHECK_THROWS_AS(evaluate(log_alpha_weight(-1.0), -1.0), std::domain_error);
    CHECK_THROWS_AS(evaluate(log_alpha_weight(2.0), 0.0), std::domain_error);
    CHECK_THROWS_AS(evaluate(scaled_log_weight(1.0, -1.0), 0.5), std::domain_error);
    CHECK_NOTHROW(evaluate(scaled_log_weight(1.0, -1.0), -0.5));
    CHECK_THROWS_AS(scaled_log_weight(1.0, 0.0), std::invalid_argument);
    CHECK_NOTHROW(evaluate(linear_weight(3.0), -1e6));
}

TEST_CASE("dual weight closed forms") {
    CHECK(dual_weight(minimal_weight()).kind == WeightKind::Minimal);

    const WeightFunction dl = dual_weight(linear_weight(1.0));
    CHECK(dl.kind == WeightKind::LogAlpha);
    CHECK(dl.alpha == doctest::Approx(-1.0));

    const WeightFunction dla = dual_weight(log_alpha_weight(-1.0));
    CHECK(dla.kind == WeightKind::Linear);
    CHECK(dla.c == doctest::Approx(1.0));

    CHECK(dual_weight(log_alpha_weight(0.0)).kind == WeightKind::Minimal);

    // beta = -2: dual is a*log(b*t) with a = -beta/(beta+1) = -2, b = beta+1 = -1.
    const WeightFunction d2 = dual_weight(log_alpha_weight(-2.0));
    CHECK(d2.kind == WeightKind::ScaledLog);
    CHECK(d2.a == doctest::Approx(-2.0));
    CHECK(d2.b == doctest::Approx(-1.0));

    CHECK_THROWS_AS(dual_weight(linear_weight(-1.0)), std::invalid_argument);
}

TEST_CASE("defining identity phi_dual(theta(z)) = -phi(z)") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (const auto& w : weight_zoo()) {
        if (w.kind == WeightKind::Linear && w.c < 0.0) continue;
        const WeightFunction d = dual_weight(w);
        for (int trial = 0; trial < 50; ++trial) {
            const double z = domain_point(w, uni(rng));
            const double t = w.theta(z);
            REQUIRE(d.in_domain(t));
            CHECK(d.phi(t) == doctest::Approx(-w.phi(z)).epsilon(1e-12));
        }
    }
}

TEST_CASE("duality is an involution on the minimal/soliton pair") {
    const WeightFunction a = dual_weight(dual_weight(linear_weight(1.0)));
    CHECK(a.kind == WeightKind::Linear);
    CHECK(a.c == doctest::Approx(1.0));
    CHECK(a.gauge == doctest::Approx(0.0));
    const WeightFunction b = dual_weight(dual_weight(minimal_weight(0.3)));
    CHECK(b.kind == WeightKind::Minimal);
    CHECK(b.gauge == doctest::Approx(0.3));
}

TEST_CASE("spec strings round-trip the parameters") {
    CHECK(minimal_weight().spec() == "minimal");
    CHECK(linear_weight(1.0).spec() == "linear:1");
    CHECK(log_alpha_weight(-2.0).spec() == "log:-2");
    CHECK(scaled_log_weight(-2.0, -1.0).spec() == "scaledlog:-2:-1");
    CHECK(minimal_weight(0.5).spec() == "minimal:g=0.5");
}
