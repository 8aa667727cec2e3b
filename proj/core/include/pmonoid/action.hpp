#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pmonoid/monoid.hpp"

namespace pmonoid {

/// Point of P(V), stored with its first nonzero coordinate equal to 1.
class ProjPoint {
public:
    /// Throws InvalidSequence for the zero vector.
    explicit ProjPoint(Vector coords);

    std::size_t n() const { return coords_.size(); }
    const Vector& coords() const { return coords_; }

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

private:
    Vector coords_;
};

/// Index i with x in V_i \ V_{i+1}.
std::size_t stratum_index(const MSeq& a, std::span<const Scalar> x);

/// The action: x̄ is sent to the class of A_i x for the stratum i containing x.
ProjPoint phi_apply(const PMSeq& a, const ProjPoint& x);

/// Compares the two actions on a finite sample of points only.
bool maps_equal_on(const PMSeq& a, const PMSeq& b, std::span<const ProjPoint> points);

}  // namespace pmonoid
