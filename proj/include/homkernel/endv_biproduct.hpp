#pragma once

#include "homkernel/enveloping.hpp"

namespace homkernel {

/// The endomorphism space of a finite-dimensional module over an ordinary
/// Hopf presentation (identity twist on H), on the matrix-unit basis, with
/// the conjugation-style action, the column-wise coaction and an identity
/// twist (the module's twist must be involutive).
struct EndVPresentation {
    std::shared_ptr<const YDModulePresentation> sourceV;
    std::shared_ptr<const YDAlgebraPresentation> endv;

    const BasisPtr& basis() const { return endv->module.basis; }
};

/// Requires alpha = id on H (AlphaNotIdentityError), an antipode with
/// inverse, and an involutive module twist (NotInvolutiveError).
EndVPresentation build_endv(std::shared_ptr<const YDModulePresentation> v);

/// The derived bracket on End(V); refuses a non-symmetric braiding.
BraidedLiePresentation endv_bracket(const EndVPresentation& e);

/// Smash-product-style composite of the truncated enveloping algebra of
/// End(V) with H, on the product basis, as a Hopf presentation with window
/// tracking on the multiplication.
struct BiproductPresentation {
    std::shared_ptr<const TruncatedEnveloping> factorU;
    HopfPtr factorH;
    HopfPresentation hopf;

    const BasisPtr& basis() const { return hopf.basis; }
};

/// When literalMultiplication is set, the product table is built from the
/// printed one-sided formula (the second factor's endomorphism leg ignored)
/// instead of the smash product; useful only to demonstrate that the
/// literal reading breaks the Hopf axioms.
BiproductPresentation build_biproduct(const EndVPresentation& e, int maxDegree,
                                      bool literalMultiplication = false);

} // namespace homkernel
