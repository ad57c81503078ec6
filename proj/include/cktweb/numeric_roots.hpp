#pragma once

#include <complex>
#include <vector>

#include "cktweb/unipoly.hpp"

namespace cktweb {

using Complex = std::complex<long double>;

// All complex roots of a square-free polynomial (Durand-Kerner, then Newton polish).
std::vector<Complex> complex_roots(const UniPoly& p);

}  // namespace cktweb
