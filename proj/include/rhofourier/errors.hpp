#pragma once

#include <stdexcept>
#include <string>

namespace rhofourier {

struct ZeroDenominator : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MixedPoleDirections : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroScalar : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PoleAtHalf : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericPole : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ArityMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonDominant : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotWeylInvariant : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotStronglyConvex : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TruncationTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ShapeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateSatake : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EnumerationBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WindowTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnboundedSupport : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct QuadratureBudget : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PoleEvaluation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rhofourier
