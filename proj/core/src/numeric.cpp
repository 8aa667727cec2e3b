#include "pmonoid/numeric.hpp"

#include <cmath>

#include "pmonoid/errors.hpp"

namespace pmonoid::numeric {

ComplexVector to_complex(std::span<const Scalar> v) {
    ComplexVector out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(s.to_complex());
    return out;
}

ComplexVector to_complex(const Matrix& m) { return to_complex(m.entries()); }

double projective_distance(std::span<const Complex> x, std::span<const Complex> y) {
    if (x.size() != y.size()) throw DimensionMismatch("projective_distance: lengths differ");
    double nx = 0.0;
    double ny = 0.0;
    Complex inner{0.0, 0.0};
    for (std::size_t k = 0; k < x.size(); ++k) {
        nx += std::norm(x[k]);
        ny += std::norm(y[k]);
        inner += x[k] * std::conj(y[k]);
    }
    if (nx == 0.0 && ny == 0.0) return 0.0;
    if (nx == 0.0 || ny == 0.0) return 2.0;
    // The minimizing phase aligns ŷ with x̂: u = <x̂, ŷ> / |<x̂, ŷ>|. The
    // difference is formed explicitly to avoid cancellation in 2 - 2|<x̂, ŷ>|.
    const double mag = std::abs(inner);
    const Complex u = mag == 0.0 ? Complex{1.0, 0.0} : inner / mag;
    const double sx = 1.0 / std::sqrt(nx);
    const double sy = 1.0 / std::sqrt(ny);
    double acc = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) acc += std::norm(x[k] * sx - u * y[k] * sy);
    return std::sqrt(acc);
}

}  // namespace pmonoid::numeric
