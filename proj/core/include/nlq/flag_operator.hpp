// flag_operator.hpp
// 2x2 operators and density matrices on the flag qubit, in the {|0>, |1>}
// basis. The involution A = eta*sigma3 + sqrt(1-eta^2)*sigma1 generates every
// rotation used by the nonlinear evolution laws.

#pragma once

#include "nlq/types.hpp"

namespace nlq {

struct FlagOperator {
    Amp m00{0.0}, m01{0.0}, m10{0.0}, m11{0.0};

    // Applies the operator to an amplitude pair in place.
    void apply_pair(Amp& a0, Amp& a1) const {
        const Amp b0 = m00 * a0 + m01 * a1;
        const Amp b1 = m10 * a0 + m11 * a1;
        a0 = b0;
        a1 = b1;
    }

    FlagOperator operator*(const FlagOperator& rhs) const {
        return {m00 * rhs.m00 + m01 * rhs.m10, m00 * rhs.m01 + m01 * rhs.m11,
                m10 * rhs.m00 + m11 * rhs.m10, m10 * rhs.m01 + m11 * rhs.m11};
    }

    FlagOperator operator-(const FlagOperator& rhs) const {
        return {m00 - rhs.m00, m01 - rhs.m01, m10 - rhs.m10, m11 - rhs.m11};
    }

    FlagOperator adjoint() const;
    bool is_hermitian(double tol = 1e-12) const;

    static FlagOperator identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static FlagOperator scaled_identity(double c) { return {c, 0.0, 0.0, c}; }
};

// A = eta(|0><0| - |1><1|) + sqrt(1-eta^2)(|0><1| + |1><0|).
// Hermitian and squares to the identity. Throws DomainError unless
// 0 < eta < 1; the boundary values make the frequency formulas degenerate.
FlagOperator build_A(double eta);

// sigma3 = |0><0| - |1><1|.
FlagOperator sigma3();

// |0><0| on the flag qubit.
FlagOperator flag_ground();

// 2x2 density matrix of the flag qubit.
struct DensityMatrix2 {
    Amp r00{0.0}, r01{0.0}, r10{0.0}, r11{0.0};

    double trace() const { return r00.real() + r11.real(); }
    bool is_hermitian(double tol = 1e-12) const;

    // Tr(rho * op).
    Amp trace_product(const FlagOperator& op) const {
        return r00 * op.m00 + r01 * op.m10 + r10 * op.m01 + r11 * op.m11;
    }
};

} // namespace nlq
