#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>

#include "homkernel/linalg.hpp"
#include "homkernel/tensor.hpp"

namespace homkernel {

/// Basis pairs whose product is not representable (degree overflow in a
/// truncated quotient). Empty for ordinary finite presentations.
using OverflowSet = std::set<std::pair<int, int>>;

/// A finite-dimensional algebra with multiplication, unit and an invertible
/// twist, all given by structure constants:
///   m    [in, in, out]   e_i e_j = sum_k m[i,j,k] e_k
///   unit [out]           coordinates of 1
///   alpha [in, out]      the twist
struct AlgebraPresentation {
    BasisPtr basis;
    Tensor m;
    Tensor unit;
    Tensor alpha;
    Tensor alphaInv;
    OverflowSet overflow;

    static AlgebraPresentation make(BasisPtr basis, Tensor m, Tensor unit,
                                    Tensor alpha, OverflowSet overflow = {});
};

struct CoalgebraPresentation {
    BasisPtr basis;
    Tensor delta;    // [in, out, out]
    Tensor counit;   // [in]
    Tensor gamma;    // [in, out]
    Tensor gammaInv;

    static CoalgebraPresentation make(BasisPtr basis, Tensor delta, Tensor counit,
                                      Tensor gamma);
};

/// Algebra and coalgebra data over one basis sharing one twist, optionally
/// with an antipode. Inverses of the twist and antipode are computed once at
/// construction; a singular twist or antipode is rejected then.
struct HopfPresentation {
    std::string name;
    BasisPtr basis;
    Tensor m;
    Tensor unit;
    Tensor delta;
    Tensor counit;
    Tensor alpha;
    Tensor alphaInv;
    std::optional<Tensor> antipode;
    std::optional<Tensor> antipodeInv;
    OverflowSet overflow;

    static HopfPresentation make(std::string name, BasisPtr basis, Tensor m,
                                 Tensor unit, Tensor delta, Tensor counit,
                                 Tensor alpha, std::optional<Tensor> antipode,
                                 OverflowSet overflow = {});

    AlgebraPresentation algebraPart() const;
    CoalgebraPresentation coalgebraPart() const;

    /// True when the twist squares to the identity.
    bool involutive() const;

    bool operator==(const HopfPresentation& other) const;
};

using HopfPtr = std::shared_ptr<const HopfPresentation>;

// ---- element helpers -------------------------------------------------------
// Elements are all-Out tensors. Every product returns nullopt when a needed
// basis product is missing from a truncated table; total presentations never
// produce nullopt.

std::optional<Tensor> mulElem(const Tensor& m, const OverflowSet& overflow,
                              const Tensor& x, const Tensor& y);

/// Multiplies two Out axes of a higher-rank element in place.
std::optional<Tensor> mulAxes(const Tensor& m, const OverflowSet& overflow,
                              const Tensor& element, int axisA, int axisB);

inline Tensor applyLinear(const Tensor& map, const Tensor& x) {
    return applyMap(x, map, {0});
}

inline Tensor coprodElem(const Tensor& delta, const Tensor& x) {
    return applyMap(x, delta, {0});
}

Scalar counitElem(const Tensor& counit, const Tensor& x);

/// Shape checks shared by all factory functions.
void expectAxes(const Tensor& t, const std::vector<Axis>& axes,
                const std::string& what);

} // namespace homkernel
