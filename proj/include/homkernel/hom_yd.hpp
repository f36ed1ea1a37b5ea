#pragma once

#include "homkernel/hom_hopf.hpp"

namespace homkernel {

/// A space carrying a twisted action and coaction of one Hopf presentation:
///   action   [in H, in M, out M]
///   coaction [in M, out H, out M]
///   beta     [in M, out M]        (invertible twist)
/// The Hopf reference is shared so cross-structure operations can insist the
/// two sides agree on H.
struct YDModulePresentation {
    std::string name;
    HopfPtr hopf;
    BasisPtr basis;
    Tensor action;
    Tensor coaction;
    Tensor beta;
    Tensor betaInv;

    static YDModulePresentation make(std::string name, HopfPtr hopf, BasisPtr basis,
                                     Tensor action, Tensor coaction, Tensor beta);

    bool involutive() const;
};

/// A module whose space also carries a multiplication and unit, with the
/// module twist doubling as the algebra twist.
struct YDAlgebraPresentation {
    YDModulePresentation module;
    Tensor m;
    Tensor unit;
    OverflowSet overflow;

    static YDAlgebraPresentation make(YDModulePresentation module, Tensor m,
                                      Tensor unit, OverflowSet overflow = {});

    AlgebraPresentation algebraPart() const;
    const BasisPtr& basis() const { return module.basis; }
};

/// True when the two modules reference the same Hopf presentation, by
/// pointer or by structural equality.
bool sameHopf(const YDModulePresentation& a, const YDModulePresentation& b);

// Element helpers. h and x are elements (all-Out tensors).
Tensor actElem(const YDModulePresentation& yd, const Tensor& h, const Tensor& x);
Tensor coactElem(const YDModulePresentation& yd, const Tensor& x); // [H, M]

Report check_hom_module(const YDModulePresentation& yd, int witnessCap = 5);
Report check_hom_comodule(const YDModulePresentation& yd, int witnessCap = 5);

/// Compatibility of action and coaction, plus the equivalent reformulation;
/// the report flags any instance where the two forms disagree.
Report check_yd_compatibility(const YDModulePresentation& yd, int witnessCap = 5);

/// Module, comodule, and compatibility in one report.
Report check_yd_module_suite(const YDModulePresentation& yd, int witnessCap = 5);

/// The categorical braiding as a matrix [in M, in N, out N, out M]:
/// m x n  |->  m_(-1).nuInv(n) (x) mu(m_0).
Tensor braiding(const YDModulePresentation& m, const YDModulePresentation& n);

/// Symmetry of the braiding (needs an invertible antipode).
Report check_braiding_symmetric(const YDModulePresentation& yd, int witnessCap = 5);

Report check_h_commutative(const YDAlgebraPresentation& a, int witnessCap = 5);

/// Same identity evaluated on an arbitrary spanning set instead of the basis
/// (used for subalgebra restrictions; the identity is bilinear, so spanning
/// vectors suffice).
Report check_h_commutative_on(const YDAlgebraPresentation& a,
                              const std::vector<Tensor>& span,
                              const std::vector<std::string>& spanLabels,
                              int witnessCap = 5);

/// Cocommutativity of a coproduct carried by the module's space: the
/// braiding applied to delta(a) equals the flipped delta(a).
Report check_h_cocommutative(const YDModulePresentation& yd, const Tensor& delta,
                             int witnessCap = 5);

/// Module-algebra and comodule-algebra identities.
Report check_yd_algebra(const YDAlgebraPresentation& a, int witnessCap = 5);

} // namespace homkernel
