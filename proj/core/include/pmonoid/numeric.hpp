#pragma once

// Lossy double-precision views of exact values. Nothing here feeds back into
// exact computation.

#include <complex>
#include <span>
#include <vector>

#include "pmonoid/matrix.hpp"

namespace pmonoid::numeric {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

ComplexVector to_complex(std::span<const Scalar> v);
/// Row-major entries of m.
ComplexVector to_complex(const Matrix& m);

/// min over unit phases u of |x/|x| - u y/|y||, a metric on projective
/// classes. Returns 0 when both inputs are zero and 2 when exactly one is.
double projective_distance(std::span<const Complex> x, std::span<const Complex> y);

}  // namespace pmonoid::numeric
