#pragma once

#include "homkernel/presentations.hpp"
#include "homkernel/report.hpp"

namespace homkernel {

/// Twisted associativity a'(bc) = (ab)c' with a' = alpha(a), c' = alpha(c),
/// multiplicativity of the twist, twisted unitality a1 = 1a = alpha(a), and
/// alpha(1) = 1, each checked on every basis tuple. Instances touching an
/// unrepresentable product are counted as skipped.
Report check_hom_algebra(const AlgebraPresentation& p, int witnessCap = 5);

Report check_hom_coalgebra(const CoalgebraPresentation& p, int witnessCap = 5);

/// Comultiplication and counit are algebra maps.
Report check_hom_bialgebra(const HopfPresentation& p, int witnessCap = 5);

/// Both convolution identities S(h1)h2 = eps(h)1 = h1 S(h2) plus S alpha =
/// alpha S. Requires an antipode in the presentation.
Report check_antipode(const HopfPresentation& p, int witnessCap = 5);

/// All applicable checks for the given kind, merged into one report.
Report check_hopf_suite(const HopfPresentation& p, bool includeAntipode,
                        int witnessCap = 5);

} // namespace homkernel
