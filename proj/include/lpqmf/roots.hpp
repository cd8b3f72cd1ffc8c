#pragma once

#include <vector>

#include "lpqmf/poly.hpp"

namespace lpqmf {

struct RootMultiplicity {
  Complex value;
  int multiplicity = 1;
};

/// Roots of a real polynomial with multiplicities; closed under complex
/// conjugation by construction.
class ComplexRootSet {
 public:
  ComplexRootSet() = default;
  explicit ComplexRootSet(std::vector<RootMultiplicity> roots);

  const std::vector<RootMultiplicity>& roots() const { return roots_; }
  int total_multiplicity() const;
  /// Each root repeated per its multiplicity.
  std::vector<Complex> expanded() const;

 private:
  std::vector<RootMultiplicity> roots_;
};

/// All complex roots of p.  Companion-matrix eigenvalues with Newton
/// polishing; clusters of near-coincident values collapse to a single root
/// with the cluster size as multiplicity, refined on the matching derivative.
/// Throws ValidationError for the zero polynomial or degree < 1.
ComplexRootSet poly_roots(const RealPoly& p);

/// Largest m >= 0 such that the first m Taylor coefficients of p about z0
/// vanish within tol relative to the coefficient norm of p.
int multiplicity_at(const RealPoly& p, Complex z0, double tol = 1e-7);

/// Newton refinement of a simple root estimate against p; returns the
/// iterate with the smallest residual.
Complex refine_root(const RealPoly& p, Complex z0);

/// leading(p) * prod (z - r)^mult, re-expanded; used to verify root sets.
RealPoly expand_from_roots(double leading, const ComplexRootSet& roots);

}  // namespace lpqmf
