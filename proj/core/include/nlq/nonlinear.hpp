// nonlinear.hpp
// The five nonlinear evolution laws i|Psi'> = c(Psi) G |Psi| and everything
// derived from them: state-dependent coefficients, closed-form propagators
// (the generators square to the identity or to a projector, so the
// exponential collapses to cos/sin), mobility frequencies, and the flag
// observable trajectory.
//
// Sign convention: `coefficient` returns the signed value that drives the
// propagator; `mobility_frequency` reports its magnitude. The flag
// observable depends on the frequency only through cos 2wt and sin^2 wt, so
// observables are insensitive to the sign.

#pragma once

#include <cstdint>
#include <variant>

#include "nlq/flag_operator.hpp"
#include "nlq/state_vector.hpp"

namespace nlq {

// Single-qubit law with the quadratic coefficient
// c = eps (<A>/<1> - <0|A|0>). Extends to register states through B = 1 (x) A.
// `n` parameterizes the reference initial state family used by
// mobility_frequency; the law itself does not depend on it.
struct QuadraticGap {
    double eps;
    double eta;
    int n;
};

// Single-qubit law with c = eps tanh(<1>/<A> - 1/<0|A|0>). Same extension
// and same role of `n` as QuadraticGap.
struct InverseTanh {
    double eps;
    double eta;
    int n;
};

// Full-register law with generator P_ground * B, active only on the
// all-zero input branch. Coefficient
// c = eps tanh(<P_g>/<P_g B> - <P_g P>/<P_g P B P>), where the second ratio
// is the algebraic constant 1/eta (P B P = eta P).
struct GatedTanh {
    double eps;
    double eta;
    int n;
};

// Full-register law with generator B, coefficient driven by global
// expectations only: c = eps tanh(<1>/<B> - <P>/<P B P>), second ratio again
// 1/eta. Free of any input-basis dependence.
struct PolchinskiTanh {
    double eps;
    double eta;
    int n;
};

// Full-register law i|Psi'> = eps tanh(alpha <1 (x) (A - eta 1)>) B |Psi>.
struct AlphaTanh {
    double eps;
    double eta;
    double alpha;
    int n;
};

using NonlinearModel =
    std::variant<QuadraticGap, InverseTanh, GatedTanh, PolchinskiTanh, AlphaTanh>;

// Throws DomainError unless eps > 0, eta in (0,1), alpha > 0, 1 <= n <= 30.
void validate_model(const NonlinearModel& model);

const char* model_name(const NonlinearModel& model);
double model_eps(const NonlinearModel& model);
double model_eta(const NonlinearModel& model);
int model_n(const NonlinearModel& model);

// The signed instantaneous coefficient c(state). Throws SingularCoefficient
// when a denominator is within 1e-12 of zero; the full-register laws also
// require state.n_inputs() == model n (DimensionMismatch).
double coefficient(const NonlinearModel& model, const StateVector& state);

// G|state> for the model's generator (B, or P_ground B for GatedTanh).
StateVector apply_generator(const NonlinearModel& model, const StateVector& state);

// exp(-i c t G)|state0> with c = coefficient(model, state0); the coefficient
// is a constant of motion, so evaluating it at t = 0 is exact.
StateVector closed_form_evolve(const NonlinearModel& model, const StateVector& state0, double t);

// Closed-form |frequency| of the model evaluated on its reference initial
// state for the given s: the (2^n - s, s) single-qubit state for
// QuadraticGap/InverseTanh/GatedTanh, the fully mixed flag for
// PolchinskiTanh/AlphaTanh. Throws DomainError for s > 2^n.
double mobility_frequency(const NonlinearModel& model, std::uint64_t s);

// The corresponding 2^n >> s approximation (for AlphaTanh the closed form is
// already elementary and is returned unchanged).
double mobility_frequency_approx(const NonlinearModel& model, std::uint64_t s);

// Normalized ((2^n - s)|0> + s|1>) on a bare flag register.
StateVector initial_single_qubit(int n, std::uint64_t s);

// <sigma3>(t) = C cos 2wt + 2 eta^2 C sin^2 wt, C = (2^(n-1) - s)/2^(n-1).
double sigma3_trajectory_formula(int n, std::uint64_t s, double eta, double omega, double t);

// Tr(rho op) for the flag's reduced density matrix. op must be Hermitian;
// throws NormError for unnormalized states.
double expectation_flag(const StateVector& state, const FlagOperator& op);

} // namespace nlq
