#pragma once

// Small worked examples used by the verifier, the tests and the benchmarks.

#include "pmonoid/matrix.hpp"

namespace pmonoid::fixtures {

/// 2x2 pair whose two orderings give different sequences with equal actions.
namespace order_dependence {
inline Matrix A() { return {{1, 0}, {0, 0}}; }
inline Matrix B() { return {{0, 1}, {0, 0}}; }
}  // namespace order_dependence

/// 3x3 pencil A0 + ε A1 whose limit has two terms.
namespace pencil3 {
inline Matrix A0() { return {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}; }
inline Matrix A1() { return {{0, 1, 1}, {0, 1, -1}, {0, 1, -1}}; }
}  // namespace pencil3

/// Families A0 + ε² A1 and B0 + ε B1 whose limits do not multiply to the
/// limit of the product.
namespace discontinuity {
inline Matrix A0() { return {{1, 0}, {0, 0}}; }
inline Matrix A1() { return {{0, 1}, {0, 2}}; }
inline Matrix B0() { return {{0, 0}, {1, 0}}; }
inline Matrix B1() { return {{1, 2}, {0, 0}}; }
}  // namespace discontinuity

/// Two elements of M_H whose product leaves M_H.
namespace mh_not_closed {
inline Matrix A0() { return {{0, 1}, {0, 0}}; }
inline Matrix A1() { return {{0, 0}, {1, 0}}; }
inline Matrix B0() { return {{1, 1}, {0, 0}}; }
inline Matrix B1() { return {{0, 0}, {1, -1}}; }
}  // namespace mh_not_closed

/// (A0, A1) lies outside M_H, (A0, A2) inside; A0 + A1 ε + A2 ε² is generic.
namespace hinge_limit {
inline Matrix A0() { return {{1, 0}, {0, 0}}; }
inline Matrix A1() { return {{0, 1}, {0, 0}}; }
inline Matrix A2() { return {{0, 0}, {0, 1}}; }
}  // namespace hinge_limit

/// 4x4 pencil diag(1,1,0,0) + ε diag(0,0,1,1).
namespace wedge4 {
inline Matrix A0() { return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}; }
inline Matrix A1() { return {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}; }
}  // namespace wedge4

}  // namespace pmonoid::fixtures
