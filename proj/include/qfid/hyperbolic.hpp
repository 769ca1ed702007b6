#pragma once

#include <cmath>

#include "qfid/states.hpp"

namespace qfid {

// Hyperbolic angle phi with |n| = tanh(phi); nonnegative and finite.
class Rapidity {
public:
    explicit Rapidity(double value);
    double value() const { return value_; }
    double cosh() const { return std::cosh(value_); }
    double tanh() const { return std::tanh(value_); }

private:
    double value_;
};

// Triangle with side lengths (phi_u, phi_v, phi_w); phi_w is the side
// produced by the hyperbolic cosine law, and cos_half_defect is
// cos(delta/2) for the triangle's angular defect delta.
struct HyperbolicTriangle {
    Rapidity phi_u;
    Rapidity phi_v;
    Rapidity phi_w;
    double cos_half_defect;

    double cos2_half_defect() const { return cos_half_defect * cos_half_defect; }
};

// atanh(|n|). Throws PureStateSingularityError when |n| > 1 - 1e-12; use
// the closed forms for pure and near-pure states.
Rapidity rapidity_of(const BlochVector& n);

// Relativistic (Einstein) composition of two sub-unit qubit Bloch
// vectors. The result's rapidity obeys the hyperbolic cosine law.
BlochVector einstein_add(const BlochVector& u, const BlochVector& v);

// cosh(phi_w) = cosh(phi_u) cosh(phi_v) (1 + cos_angle tanh(phi_u) tanh(phi_v)),
// where cos_angle is the cosine between the two Bloch directions.
double cosine_law_cosh_w(const Rapidity& phi_u, const Rapidity& phi_v, double cos_angle);

// Build the triangle for a pair of Bloch vectors (any matching system
// dimension). When either vector is zero its direction is undefined and
// the direction cosine is taken as 1; tanh(0) = 0 makes every downstream
// quantity insensitive to that choice.
HyperbolicTriangle triangle_of(const BlochVector& u, const BlochVector& v);

// Bures fidelity in triangle form: cosh^2(phi_w/2) / (cosh phi_u cosh phi_v).
double geometric_bures(const BlochVector& u, const BlochVector& v);

// A-fidelity in triangle form: geometric Bures fidelity times cos^2(delta/2).
double geometric_a_fidelity(const BlochVector& u, const BlochVector& v);

// (1/2)[1 + u.v + sqrt(1-|u|^2) sqrt(1-|v|^2)]. Finite for pure states.
double closed_form_bures(double abs_u, double abs_v, double dot_uv);

// [2 F_B + sqrt(1-|u|^2) + sqrt(1-|v|^2)]^2
// over 4 (1+sqrt(1-|u|^2)) (1+sqrt(1-|v|^2)) F_B, unconstrained above.
// With generalized Bloch norms (N > 2) this upper-bounds F_B but is no
// longer a squared cosine and may exceed 1.
double defect_bound_expression(double fidelity_bures, double abs_u, double abs_v);

// The same expression policed to (0, 1]: for qubits it equals
// cos^2(delta/2) of the state pair's triangle. Values beyond 1 + 1e-9
// throw; round-off excess below that clamps to 1.
double closed_form_cos2_half_defect(double fidelity_bures, double abs_u, double abs_v);

// The quadratic whose nonpositivity on [0,1] forces F_B <= cos^2(delta/2):
//   f(x) = 4[(1+s_u)(1+s_v) - 1] x^2 - 4(s_u+s_v) x - (s_u+s_v)^2,
// with s_u = sqrt(1-|u|^2), s_v = sqrt(1-|v|^2).
double defect_quadratic_f(double x, double abs_u, double abs_v);

namespace tolerances {
inline constexpr double kPureStateWindow = 1e-12;
}

}  // namespace qfid
