#include "nlq/state_vector.hpp"

#include <cmath>
#include <utility>

#include "nlq/errors.hpp"

namespace nlq {

namespace {

constexpr int kMaxInputQubits = 30;

void check_register_size(int n_inputs) {
    if (n_inputs < 0 || n_inputs > kMaxInputQubits) {
        throw DomainError("StateVector: input register size out of range");
    }
}

} // namespace

StateVector::StateVector(int n_inputs) : n_inputs_(n_inputs) {
    check_register_size(n_inputs);
    amps_.assign(std::size_t{2} << n_inputs, Amp{0.0});
    amps_[0] = Amp{1.0};
}

StateVector::StateVector(int n_inputs, std::vector<Amp> amps)
    : n_inputs_(n_inputs), amps_(std::move(amps)) {
    check_register_size(n_inputs);
    if (amps_.size() != (std::size_t{2} << n_inputs)) {
        throw DimensionMismatch("StateVector: amplitude array size is not 2^(n+1)");
    }
}

double StateVector::squared_norm() const {
    long double acc = 0.0L;
    for (const Amp& a : amps_) {
        acc += static_cast<long double>(std::norm(a));
    }
    return static_cast<double>(acc);
}

double StateVector::norm() const {
    return std::sqrt(squared_norm());
}

Amp inner_product(const StateVector& a, const StateVector& b) {
    if (a.n_inputs() != b.n_inputs()) {
        throw DimensionMismatch("inner_product: register sizes differ");
    }
    std::complex<long double> acc{0.0L, 0.0L};
    for (std::size_t k = 0; k < a.dim(); ++k) {
        acc += std::complex<long double>(std::conj(a[k]) * b[k]);
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

double distance(const StateVector& a, const StateVector& b) {
    if (a.n_inputs() != b.n_inputs()) {
        throw DimensionMismatch("distance: register sizes differ");
    }
    long double acc = 0.0L;
    for (std::size_t k = 0; k < a.dim(); ++k) {
        acc += static_cast<long double>(std::norm(a[k] - b[k]));
    }
    return static_cast<double>(std::sqrt(acc));
}

StateVector apply_flag_operator(const StateVector& state, const FlagOperator& op) {
    StateVector out = state;
    const std::size_t pairs = out.input_dim();
    auto amps = out.amps();
    for (std::size_t idx = 0; idx < pairs; ++idx) {
        op.apply_pair(amps[2 * idx], amps[2 * idx + 1]);
    }
    return out;
}

StateVector apply_ground_projector(const StateVector& state) {
    StateVector out(state.n_inputs());
    out[0] = state[0];
    out[1] = state[1];
    return out;
}

StateVector apply_flag_zero_projector(const StateVector& state) {
    StateVector out = state;
    auto amps = out.amps();
    for (std::size_t k = 1; k < amps.size(); k += 2) {
        amps[k] = Amp{0.0};
    }
    return out;
}

DensityMatrix2 partial_trace_inputs(const StateVector& state) {
    if (std::abs(state.norm() - 1.0) > 1e-6) {
        throw NormError("partial_trace_inputs: state is not normalized");
    }
    std::complex<long double> r00{0.0L}, r01{0.0L}, r11{0.0L};
    const std::size_t pairs = state.input_dim();
    for (std::size_t idx = 0; idx < pairs; ++idx) {
        const Amp a0 = state[2 * idx];
        const Amp a1 = state[2 * idx + 1];
        r00 += static_cast<long double>(std::norm(a0));
        r11 += static_cast<long double>(std::norm(a1));
        r01 += std::complex<long double>(a0 * std::conj(a1));
    }
    DensityMatrix2 rho;
    rho.r00 = {static_cast<double>(r00.real()), static_cast<double>(r00.imag())};
    rho.r11 = {static_cast<double>(r11.real()), static_cast<double>(r11.imag())};
    rho.r01 = {static_cast<double>(r01.real()), static_cast<double>(r01.imag())};
    rho.r10 = std::conj(rho.r01);
    return rho;
}

} // namespace nlq
