#pragma once

// Finite census of the Nica spectrum: non-empty hereditary directed subsets
// of a ball, with the principal points [e,t] = {s : s <= t} marked.

#include <optional>
#include <vector>

#include "qlat/monoid.hpp"
#include "qlat/report.hpp"

namespace qlat {

struct SpectrumPoint {
  std::vector<Element> members;
  bool hereditary = false;
  bool directed = false;
  bool principal = false;
  /// t with members = [e,t] intersected with the ball.
  std::optional<Element> generator;
};

constexpr std::size_t kMaxSpectrumBall = 22;

/// Throws InvalidArgument when the ball exceeds kMaxSpectrumBall elements.
std::vector<SpectrumPoint> enumerate_spectrum(const Monoid& m, int bound);

/// Same census over an explicit hereditary set.
std::vector<SpectrumPoint> enumerate_spectrum(const Monoid& m, const std::vector<Element>& ball);

Rational principal_fraction(const Monoid& m, int bound);

/// Census report: every point with its flags, plus the principal fraction
/// and injectivity of t |-> [e,t] on the ball.
CheckReport spectrum_report(const Monoid& m, int bound);

}  // namespace qlat
