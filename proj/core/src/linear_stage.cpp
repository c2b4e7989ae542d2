#include "nlq/linear_stage.hpp"

#include <cmath>
#include <utility>

#include "nlq/errors.hpp"

namespace nlq {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_probability_domain(int n, std::uint64_t s) {
    if (n < 1 || n > 30) {
        throw DomainError("probability formula: n must be in [1, 30]");
    }
    if (s > (std::uint64_t{1} << n)) {
        throw DomainError("probability formula: s exceeds 2^n");
    }
}

void check_normalized(const StateVector& state, const char* what) {
    if (std::abs(state.norm() - 1.0) > 1e-6) {
        throw NormError(std::string(what) + ": state is not normalized");
    }
}

} // namespace

StateVector apply_U_all(const StateVector& state, bool inverse) {
    StateVector out = state;
    auto amps = out.amps();
    const std::size_t dim = amps.size();
    // Input qubit q lives at bit n-q of idx, i.e. bit n-q+1 of k = 2 idx + b;
    // the flag bit 0 is untouched.
    for (std::size_t stride = 2; stride < dim; stride <<= 1) {
        for (std::size_t group = 0; group < dim; group += 2 * stride) {
            for (std::size_t k = group; k < group + stride; ++k) {
                const Amp a0 = amps[k];
                const Amp a1 = amps[k + stride];
                if (inverse) {
                    amps[k] = (a0 + a1) * kInvSqrt2;
                    amps[k + stride] = (a1 - a0) * kInvSqrt2;
                } else {
                    amps[k] = (a0 - a1) * kInvSqrt2;
                    amps[k + stride] = (a0 + a1) * kInvSqrt2;
                }
            }
        }
    }
    return out;
}

StateVector apply_oracle(const StateVector& state, const TruthTable& f) {
    if (f.n() != state.n_inputs()) {
        throw DimensionMismatch("apply_oracle: truth table and state register sizes differ");
    }
    StateVector out = state;
    auto amps = out.amps();
    const std::size_t branches = out.input_dim();
    for (std::size_t idx = 0; idx < branches; ++idx) {
        if (f.value(idx)) {
            std::swap(amps[2 * idx], amps[2 * idx + 1]);
        }
    }
    return out;
}

StateVector post_oracle_state(const TruthTable& f) {
    return apply_oracle(apply_U_all(StateVector(f.n()), false), f);
}

StateVector run_linear_stage(const TruthTable& f) {
    return apply_U_all(post_oracle_state(f), true);
}

double p_ground_formula(int n, std::uint64_t s) {
    check_probability_domain(n, s);
    const double size = std::ldexp(1.0, n);
    const double marked = static_cast<double>(s);
    return ((size - marked) * (size - marked) + marked * marked) / (size * size);
}

double p_flag_one_formula(int n, std::uint64_t s) {
    check_probability_domain(n, s);
    return static_cast<double>(s) / std::ldexp(1.0, n);
}

double measure_probability(const StateVector& state, ProbabilityKind which) {
    check_normalized(state, "measure_probability");
    if (which == ProbabilityKind::input_ground) {
        return std::norm(state[0]) + std::norm(state[1]);
    }
    long double acc = 0.0L;
    auto amps = state.amps();
    for (std::size_t k = 1; k < amps.size(); k += 2) {
        acc += static_cast<long double>(std::norm(amps[k]));
    }
    return static_cast<double>(acc);
}

} // namespace nlq
