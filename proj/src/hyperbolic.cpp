#include "qfid/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qfid {

namespace {

// cosh(phi/2) from cosh(phi), via the half-angle identity
double cosh_half_from_cosh(double cosh_phi) { return std::sqrt(0.5 * (cosh_phi + 1.0)); }

void require_sub_pure(const BlochVector& n) {
    if (n.norm() > 1.0 - tolerances::kPureStateWindow) throw PureStateSingularityError(n.norm());
}

double direction_cosine(const BlochVector& u, const BlochVector& v) {
    const double nu = u.norm(), nv = v.norm();
    if (nu == 0.0 || nv == 0.0) return 1.0;  // undefined direction; any value works
    double c = u.dot(v) / (nu * nv);
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    return c;
}

}  // namespace

Rapidity::Rapidity(double value) : value_(value) {
    if (!(value >= 0.0) || !std::isfinite(value))
        throw DomainError("rapidity must be a nonnegative finite value, got " +
                          std::to_string(value));
}

Rapidity rapidity_of(const BlochVector& n) {
    require_sub_pure(n);
    return Rapidity(std::atanh(n.norm()));
}

double cosine_law_cosh_w(const Rapidity& phi_u, const Rapidity& phi_v, double cos_angle) {
    if (std::abs(cos_angle) > 1.0 + 1e-12)
        throw DomainError("direction cosine outside [-1, 1]: " + std::to_string(cos_angle));
    cos_angle = std::clamp(cos_angle, -1.0, 1.0);
    return phi_u.cosh() * phi_v.cosh() * (1.0 + cos_angle * phi_u.tanh() * phi_v.tanh());
}

BlochVector einstein_add(const BlochVector& u, const BlochVector& v) {
    if (u.dim() != 2 || v.dim() != 2) throw DimMismatchError(u.dim(), v.dim());
    require_sub_pure(u);
    require_sub_pure(v);
    const double uv = u.dot(v);
    const double gamma_u = 1.0 / std::sqrt(1.0 - u.norm() * u.norm());
    const double scale = 1.0 / (1.0 + uv);
    const double u_weight = scale * (1.0 + gamma_u / (1.0 + gamma_u) * uv);
    const double v_weight = scale / gamma_u;
    std::vector<double> w(3);
    for (int i = 0; i < 3; ++i) w[i] = u_weight * u.coords()[i] + v_weight * v.coords()[i];
    return {2, std::move(w)};
}

HyperbolicTriangle triangle_of(const BlochVector& u, const BlochVector& v) {
    if (u.dim() != v.dim()) throw DimMismatchError(u.dim(), v.dim());
    require_sub_pure(u);
    require_sub_pure(v);

    const Rapidity phi_u(std::atanh(u.norm()));
    const Rapidity phi_v(std::atanh(v.norm()));
    const double cosh_w = cosine_law_cosh_w(phi_u, phi_v, direction_cosine(u, v));
    const Rapidity phi_w(std::acosh(std::max(cosh_w, 1.0)));

    double cd = (1.0 + phi_u.cosh() + phi_v.cosh() + cosh_w) /
                (4.0 * cosh_half_from_cosh(phi_u.cosh()) * cosh_half_from_cosh(phi_v.cosh()) *
                 cosh_half_from_cosh(cosh_w));
    if (!(cd > 0.0) || cd > 1.0 + 1e-9)
        throw DomainError("cos(delta/2) escaped (0, 1]: " + std::to_string(cd));
    if (cd > 1.0) cd = 1.0;

    return HyperbolicTriangle{phi_u, phi_v, phi_w, cd};
}

double geometric_bures(const BlochVector& u, const BlochVector& v) {
    require_sub_pure(u);
    require_sub_pure(v);
    const Rapidity phi_u(std::atanh(u.norm()));
    const Rapidity phi_v(std::atanh(v.norm()));
    const double cosh_w = cosine_law_cosh_w(phi_u, phi_v, direction_cosine(u, v));
    // cosh^2(phi_w/2) = (cosh phi_w + 1)/2
    return (cosh_w + 1.0) / (2.0 * phi_u.cosh() * phi_v.cosh());
}

double geometric_a_fidelity(const BlochVector& u, const BlochVector& v) {
    const HyperbolicTriangle t = triangle_of(u, v);
    const double bures = (t.phi_w.cosh() + 1.0) / (2.0 * t.phi_u.cosh() * t.phi_v.cosh());
    return bures * t.cos2_half_defect();
}

double closed_form_bures(double abs_u, double abs_v, double dot_uv) {
    if (!(abs_u >= 0.0 && abs_u <= 1.0) || !(abs_v >= 0.0 && abs_v <= 1.0))
        throw DomainError("Bloch norms must lie in [0, 1]");
    if (std::abs(dot_uv) > abs_u * abs_v + 1e-12)
        throw DomainError("|u.v| exceeds |u||v|: " + std::to_string(dot_uv));
    return 0.5 * (1.0 + dot_uv + std::sqrt(1.0 - abs_u * abs_u) * std::sqrt(1.0 - abs_v * abs_v));
}

double defect_bound_expression(double fidelity_bures, double abs_u, double abs_v) {
    if (!(fidelity_bures > 0.0))
        throw DomainError("defect bound expression needs F_B > 0, got " +
                          std::to_string(fidelity_bures));
    if (fidelity_bures > 1.0 + 1e-12)
        throw DomainError("F_B exceeds 1: " + std::to_string(fidelity_bures));
    if (!(abs_u >= 0.0 && abs_u <= 1.0) || !(abs_v >= 0.0 && abs_v <= 1.0))
        throw DomainError("Bloch norms must lie in [0, 1]");
    const double su = std::sqrt(1.0 - abs_u * abs_u);
    const double sv = std::sqrt(1.0 - abs_v * abs_v);
    const double num = 2.0 * fidelity_bures + su + sv;
    return num * num / (4.0 * (1.0 + su) * (1.0 + sv) * fidelity_bures);
}

double closed_form_cos2_half_defect(double fidelity_bures, double abs_u, double abs_v) {
    double c2 = defect_bound_expression(fidelity_bures, abs_u, abs_v);
    if (c2 > 1.0 + 1e-9)
        throw DomainError("cos^2(delta/2) escaped (0, 1]: inputs are not a consistent "
                          "fidelity/norm combination");
    if (c2 > 1.0) c2 = 1.0;
    return c2;
}

double defect_quadratic_f(double x, double abs_u, double abs_v) {
    if (!(abs_u >= 0.0 && abs_u <= 1.0) || !(abs_v >= 0.0 && abs_v <= 1.0))
        throw DomainError("Bloch norms must lie in [0, 1]");
    const double su = std::sqrt(1.0 - abs_u * abs_u);
    const double sv = std::sqrt(1.0 - abs_v * abs_v);
    const double lead = 4.0 * ((1.0 + su) * (1.0 + sv) - 1.0);
    return lead * x * x - 4.0 * (su + sv) * x - (su + sv) * (su + sv);
}

}  // namespace qfid
