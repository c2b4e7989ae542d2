// linear_stage.hpp
// The shared linear front end of both algorithms: the single-qubit transform
// U (U|0> = (|0>+|1>)/sqrt2, U|1> = (-|0>+|1>)/sqrt2) applied to every input
// qubit, the truth-table oracle |i>|b> -> |i>|b xor f(i)>, and the exact
// probability identities of the resulting entangled state.

#pragma once

#include <cstdint>

#include "nlq/state_vector.hpp"
#include "nlq/truth_table.hpp"

namespace nlq {

// Applies U (or U^-1) to each input qubit, identity on the flag.
// O(n 2^n) strided butterflies; no dense matrix is formed.
StateVector apply_U_all(const StateVector& state, bool inverse);

// Swaps the flag amplitude pair of every marked branch. Unitary, involutive.
// Throws DimensionMismatch if f.n() != state.n_inputs().
StateVector apply_oracle(const StateVector& state, const TruthTable& f);

// Steps 1-3: uniform superposition, then the oracle.
StateVector post_oracle_state(const TruthTable& f);

// Steps 1-4: (U^-1)^n F U^n |0...0>|0>. The two idx = 0 amplitudes come out
// as (2^n - s)/2^n and s/2^n, both real.
StateVector run_linear_stage(const TruthTable& f);

// P(s) = ((2^n - s)^2 + s^2) / 2^(2n).
double p_ground_formula(int n, std::uint64_t s);

// P_f(1) = s / 2^n.
double p_flag_one_formula(int n, std::uint64_t s);

enum class ProbabilityKind {
    input_ground, // both flag slots of idx = 0
    flag_one      // all odd slots
};

// Exact probability from the state vector. Throws NormError if the state is
// not normalized to 1e-6.
double measure_probability(const StateVector& state, ProbabilityKind which);

} // namespace nlq
