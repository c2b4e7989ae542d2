#pragma once

#include <complex>

namespace nlq {

using Amp = std::complex<double>;

} // namespace nlq
