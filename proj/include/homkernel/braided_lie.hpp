#pragma once

#include <memory>

#include "homkernel/hom_yd.hpp"

namespace homkernel {

/// A Yetter-Drinfeld module with a bracket [in, in, out]. When derived from
/// an algebra, the source is kept so product-based identities can be checked.
struct BraidedLiePresentation {
    YDModulePresentation module;
    Tensor bracket;
    std::shared_ptr<const YDAlgebraPresentation> source;

    static BraidedLiePresentation make(YDModulePresentation module, Tensor bracket,
                                       std::shared_ptr<const YDAlgebraPresentation>
                                           source = nullptr);

    const BasisPtr& basis() const { return module.basis; }
    bool involutive() const { return module.involutive(); }
};

/// (a_-1 . betaInv(b)) beta(a_0): the product twisted by the braiding.
std::optional<Tensor> braidedProductElem(const YDAlgebraPresentation& a,
                                         const Tensor& x, const Tensor& y);

/// The bracket [a,b] = ab - (a_-1 . betaInv(b)) beta(a_0) as a tensor,
/// computed without precondition checks.
Tensor commutatorBracketTensor(const YDAlgebraPresentation& a);

/// Derives the braided bracket from a product. Preconditions: the algebra
/// passes check_yd_algebra and its braiding is symmetric; violations raise
/// PreconditionError / BraidingNotSymmetricError.
BraidedLiePresentation derive_bracket(const YDAlgebraPresentation& a);

/// Bracket is a morphism (H-linear, H-colinear, twist-compatible), braided
/// skew-symmetry, and the braided Jacobi identity with both permuted
/// summands braided before bracketing.
Report verify_braided_lie(const BraidedLiePresentation& l, int witnessCap = 5);

/// Both product rules tying the derived bracket to the source algebra.
/// Requires a derived presentation (source attached).
Report check_leibniz_identities(const BraidedLiePresentation& l, int witnessCap = 5);

/// Elements on which every h acts through the counit.
Subspace invariants(const YDModulePresentation& yd);

/// Elements whose bracket with the whole space vanishes.
Subspace center(const BraidedLiePresentation& l);

/// Stability of a subspace under action, coaction, twist and bracket.
Report check_h_ideal(const Subspace& u, const BraidedLiePresentation& l,
                     int witnessCap = 5);

/// Span of all pairwise brackets.
Subspace commutator_ideal(const BraidedLiePresentation& l);

/// The sum-of-two-commutative-subalgebras nilpotency check: verifies the
/// preconditions (X, Y twist-stable subalgebras, each H-commutative, X+Y
/// spanning, braiding symmetric) and, only when they all hold, that the
/// commutator span squares to zero. The report records the complement
/// splitting used to decompose products along X + Y.
Report check_kegel_nilpotency(const YDAlgebraPresentation& a, const Subspace& x,
                              const Subspace& y, int witnessCap = 5);

/// The four adjoint-map identities for a twist-invariant element of the
/// invariant subalgebra. Throws NotInvariantError when x does not qualify.
Report check_adjoint_identities(const BraidedLiePresentation& l, const QVec& x,
                                int witnessCap = 5);

} // namespace homkernel
