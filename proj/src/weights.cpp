#include "calabi/weights.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace calabi {

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

}  // namespace

WeightFunction minimal_weight(double gauge) {
    WeightFunction w;
    w.kind = WeightKind::Minimal;
    w.gauge = gauge;
    return w;
}

WeightFunction linear_weight(double c, double gauge) {
    require_finite(c, "linear slope");
    WeightFunction w;
    w.kind = WeightKind::Linear;
    w.c = c;
    w.gauge = gauge;
    return w;
}

WeightFunction log_alpha_weight(double alpha, double gauge) {
    require_finite(alpha, "log exponent");
    WeightFunction w;
    w.kind = WeightKind::LogAlpha;
    w.alpha = alpha;
    w.gauge = gauge;
    w.z_min = 0.0;
    return w;
}

WeightFunction scaled_log_weight(double a, double b, double gauge) {
    require_finite(a, "scaledlog exponent");
    require_finite(b, "scaledlog scale");
    if (b == 0.0) throw std::invalid_argument("scaledlog scale b must be nonzero");
    WeightFunction w;
    w.kind = WeightKind::ScaledLog;
    w.a = a;
    w.b = b;
    w.gauge = gauge;
    if (b > 0.0)
        w.z_min = 0.0;
    else
        w.z_max = 0.0;
    return w;
}

double WeightFunction::phi(double z) const {
    switch (kind) {
        case WeightKind::Minimal: return gauge;
        case WeightKind::Linear: return c * z + gauge;
        case WeightKind::LogAlpha: return alpha * std::log(z) + gauge;
        case WeightKind::ScaledLog: return a * std::log(b * z) + gauge;
    }
    return 0.0;
}

double WeightFunction::phi_dot(double z) const {
    switch (kind) {
        case WeightKind::Minimal: return 0.0;
        case WeightKind::Linear: return c;
        case WeightKind::LogAlpha: return alpha / z;
        case WeightKind::ScaledLog: return a / z;
    }
    return 0.0;
}

double WeightFunction::theta(double z) const {
    const double s = std::exp(gauge);
    switch (kind) {
        case WeightKind::Minimal: return s * z;
        case WeightKind::Linear:
            if (c == 0.0) return s * z;
            return s * std::exp(c * z) / c;
        case WeightKind::LogAlpha:
            if (alpha == -1.0) return s * std::log(z);
            return s * std::pow(z, alpha + 1.0) / (alpha + 1.0);
        case WeightKind::ScaledLog:
            if (a == -1.0) return s * std::log(b * z) / b;
            return s * std::pow(b * z, a + 1.0) / (b * (a + 1.0));
    }
    return 0.0;
}

double WeightFunction::theta_inv(double t) const {
    const double s = std::exp(-gauge);  // undo the e^gauge factor
    switch (kind) {
        case WeightKind::Minimal: return s * t;
        case WeightKind::Linear: {
            if (c == 0.0) return s * t;
            const double arg = c * t * s;
            if (arg <= 0.0) throw std::domain_error("theta_inv: value outside primitive range");
            return std::log(arg) / c;
        }
        case WeightKind::LogAlpha: {
            if (alpha == -1.0) return std::exp(t * s);
            const double arg = (alpha + 1.0) * t * s;
            if (arg <= 0.0) throw std::domain_error("theta_inv: value outside primitive range");
            return std::pow(arg, 1.0 / (alpha + 1.0));
        }
        case WeightKind::ScaledLog: {
            if (a == -1.0) return std::exp(b * t * s) / b;
            const double arg = b * (a + 1.0) * t * s;
            if (arg <= 0.0) throw std::domain_error("theta_inv: value outside primitive range");
            return std::pow(arg, 1.0 / (a + 1.0)) / b;
        }
    }
    return 0.0;
}

std::string WeightFunction::spec() const {
    std::ostringstream os;
    switch (kind) {
        case WeightKind::Minimal: os << "minimal"; break;
        case WeightKind::Linear: os << "linear:" << c; break;
        case WeightKind::LogAlpha: os << "log:" << alpha; break;
        case WeightKind::ScaledLog: os << "scaledlog:" << a << ":" << b; break;
    }
    if (gauge != 0.0) os << ":g=" << gauge;
    return os.str();
}

WeightEval evaluate(const WeightFunction& w, double z) {
    if (!w.in_domain(z)) throw std::domain_error("weight evaluated outside its domain");
    return WeightEval{w.phi(z), w.phi_dot(z), w.theta(z)};
}

WeightFunction dual_weight(const WeightFunction& w) {
    const double g = w.gauge;
    switch (w.kind) {
        case WeightKind::Minimal:
            return minimal_weight(-g);
        case WeightKind::Linear: {
            if (w.c == 0.0) return minimal_weight(-g);
            if (w.c < 0.0)
                throw std::invalid_argument("dual_weight: Linear slope must be positive");
            // -phi(theta_inv(t)) = -log(c t); the gauge cancels.
            return log_alpha_weight(-1.0, -std::log(w.c));
        }
        case WeightKind::LogAlpha: {
            if (w.alpha == 0.0) return minimal_weight(-g);
            if (w.alpha == -1.0) return linear_weight(std::exp(-g), -g);
            const double beta = w.alpha;
            return scaled_log_weight(-beta / (beta + 1.0), beta + 1.0, -g / (beta + 1.0));
        }
        case WeightKind::ScaledLog: {
            if (w.a == 0.0) return minimal_weight(-g);
            if (w.a == -1.0) return linear_weight(w.b * std::exp(-g), -g);
            const double ad = -w.a / (w.a + 1.0);
            const double bd = w.b * (w.a + 1.0);
            const double gd = -g / (w.a + 1.0);
            if (bd == 1.0) return log_alpha_weight(ad, gd);
            return scaled_log_weight(ad, bd, gd);
        }
    }
    throw std::logic_error("dual_weight: unreachable");
}

}  // namespace calabi
