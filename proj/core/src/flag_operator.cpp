#include "nlq/flag_operator.hpp"

#include <cmath>

#include "nlq/errors.hpp"

namespace nlq {

FlagOperator FlagOperator::adjoint() const {
    return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
}

bool FlagOperator::is_hermitian(double tol) const {
    return std::abs(m00.imag()) <= tol && std::abs(m11.imag()) <= tol &&
           std::abs(m01 - std::conj(m10)) <= tol;
}

FlagOperator build_A(double eta) {
    if (!(eta > 0.0) || !(eta < 1.0)) {
        throw DomainError("build_A: eta must lie strictly inside (0, 1)");
    }
    const double off = std::sqrt(1.0 - eta * eta);
    return {Amp{eta}, Amp{off}, Amp{off}, Amp{-eta}};
}

FlagOperator sigma3() {
    return {Amp{1.0}, Amp{0.0}, Amp{0.0}, Amp{-1.0}};
}

FlagOperator flag_ground() {
    return {Amp{1.0}, Amp{0.0}, Amp{0.0}, Amp{0.0}};
}

bool DensityMatrix2::is_hermitian(double tol) const {
    return std::abs(r00.imag()) <= tol && std::abs(r11.imag()) <= tol &&
           std::abs(r01 - std::conj(r10)) <= tol;
}

} // namespace nlq
