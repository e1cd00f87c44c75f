#ifndef CALABI_WEIGHTS_HPP
#define CALABI_WEIGHTS_HPP

#include <limits>
#include <string>

namespace calabi {

/// Vertical weight families phi(z).  The weight enters the equations only
/// through phi, its derivative and the primitive theta of e^phi, so each
/// kind stores closed forms for all three plus the inverse of theta.
enum class WeightKind { Minimal, Linear, LogAlpha, ScaledLog };

/// Additive constants on phi (multiplicative on e^phi) are tracked in
/// `gauge` because the transform scales by e^phi.
struct WeightFunction {
    WeightKind kind = WeightKind::Minimal;
    double c = 0.0;      // Linear slope
    double alpha = 0.0;  // LogAlpha exponent
    double a = 0.0;      // ScaledLog exponent, phi = a*log(b*z)
    double b = 1.0;      // ScaledLog scale
    double gauge = 0.0;
    double z_min = -std::numeric_limits<double>::infinity();
    double z_max = std::numeric_limits<double>::infinity();

    bool in_domain(double z) const { return z > z_min && z < z_max; }

    double phi(double z) const;
    double phi_dot(double z) const;
    double theta(double z) const;
    double theta_inv(double t) const;

    /// CLI spec string ("minimal", "linear:<c>", "log:<alpha>",
    /// "scaledlog:<a>:<b>"); gauge appended as ":g=<gauge>" when nonzero.
    std::string spec() const;
};

struct WeightEval {
    double phi;
    double phi_dot;
    double theta;
};

WeightFunction minimal_weight(double gauge = 0.0);
WeightFunction linear_weight(double c, double gauge = 0.0);
WeightFunction log_alpha_weight(double alpha, double gauge = 0.0);
WeightFunction scaled_log_weight(double a, double b, double gauge = 0.0);

/// Throws std::domain_error if z is outside the weight's domain.
WeightEval evaluate(const WeightFunction& w, double z);

/// The weight -phi(theta^{-1}(.)) induced on the image side of the
/// correspondence, returned in closed form.
WeightFunction dual_weight(const WeightFunction& w);

}  // namespace calabi

#endif
