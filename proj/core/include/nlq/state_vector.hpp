// state_vector.hpp
// Complex state vector of an n-qubit input register plus one flag qubit.
//
// Index convention (fixed project-wide): basis index k = 2*idx + b, where
// idx encodes the input register with qubit 1 as the most significant bit
// and b is the flag bit. Flag amplitudes of the same branch are therefore
// adjacent, which lets every flag-qubit operator run as a strided 2x2 kernel
// without materializing a 2^(n+1)-square matrix.
//
// All operations are pure: state in, new state out. Values are safe to share
// read-only across threads.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nlq/flag_operator.hpp"
#include "nlq/types.hpp"

namespace nlq {

class StateVector {
public:
    // Ground state |0...0>|0>. n_inputs = 0 is the bare flag qubit, used by
    // the single-qubit evolution laws.
    explicit StateVector(int n_inputs);

    // Takes ownership of a full amplitude array (size must be 2^(n_inputs+1)).
    StateVector(int n_inputs, std::vector<Amp> amps);

    int n_inputs() const { return n_inputs_; }
    std::size_t dim() const { return amps_.size(); }
    std::size_t input_dim() const { return amps_.size() >> 1; }

    const Amp& operator[](std::size_t k) const { return amps_[k]; }
    Amp& operator[](std::size_t k) { return amps_[k]; }

    // Amplitude of |idx>|flag>.
    Amp amp(std::size_t idx, int flag) const { return amps_[2 * idx + static_cast<std::size_t>(flag)]; }

    std::span<const Amp> amps() const { return amps_; }
    std::span<Amp> amps() { return amps_; }

    double squared_norm() const;
    double norm() const;

private:
    int n_inputs_;
    std::vector<Amp> amps_;
};

// <a|b>. Throws DimensionMismatch if the register sizes differ.
Amp inner_product(const StateVector& a, const StateVector& b);

// ||a - b||.
double distance(const StateVector& a, const StateVector& b);

// (1 tensor op) applied branch by branch; norm preserved when op is unitary.
StateVector apply_flag_operator(const StateVector& state, const FlagOperator& op);

// Projector onto input register |0...0| (both flag amplitudes of idx = 0 kept).
StateVector apply_ground_projector(const StateVector& state);

// Projector onto flag |0> (all odd amplitude slots zeroed).
StateVector apply_flag_zero_projector(const StateVector& state);

// rho_{bb'} = sum_idx amps_{2 idx + b} conj(amps_{2 idx + b'}).
// Throws NormError if the input norm deviates from 1 by more than 1e-6.
DensityMatrix2 partial_trace_inputs(const StateVector& state);

} // namespace nlq
