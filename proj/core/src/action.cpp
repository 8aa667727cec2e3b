#include "pmonoid/action.hpp"

#include <algorithm>

#include "pmonoid/errors.hpp"

namespace pmonoid {

ProjPoint::ProjPoint(Vector coords) : coords_(std::move(coords)) {
    auto lead = std::find_if(coords_.begin(), coords_.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (lead == coords_.end()) throw InvalidSequence("projective point from the zero vector");
    if (!lead->is_one()) {
        const Scalar inv = lead->inverse();
        for (auto& s : coords_) s *= inv;
    }
}

std::size_t stratum_index(const MSeq& a, std::span<const Scalar> x) {
    if (x.size() != a.n()) throw DimensionMismatch("point and sequence dimensions differ");
    const auto& chain = a.chain();
    for (std::size_t i = 0; i < a.length(); ++i) {
        if (!chain[i + 1].contains_vector(x)) return i;
    }
    throw InvalidSequence("zero vector has no stratum");
}

ProjPoint phi_apply(const PMSeq& a, const ProjPoint& x) {
    const std::size_t i = stratum_index(a.seq(), x.coords());
    return ProjPoint(a.seq().apply(i, x.coords()));
}

bool maps_equal_on(const PMSeq& a, const PMSeq& b, std::span<const ProjPoint> points) {
    if (a.n() != b.n()) throw DimensionMismatch("maps_equal_on: dimensions differ");
    for (const auto& x : points) {
        if (!(phi_apply(a, x) == phi_apply(b, x))) return false;
    }
    return true;
}

}  // namespace pmonoid
