#pragma once

#include <memory>
#include <string>
#include <vector>

#include "homkernel/hom_yd.hpp"

namespace homkernel::builtins {

using YDModulePtr = std::shared_ptr<const YDModulePresentation>;
using YDAlgebraPtr = std::shared_ptr<const YDAlgebraPresentation>;

/// The 2-dimensional twisted Hopf algebra k{1,h} with h^2 = 0, a negating
/// twist on h, primitive-style coproduct and S(h) = -h.
HopfPtr h2();

/// The ground field as a one-dimensional Hopf algebra.
HopfPtr trivialHopf();

/// Group algebra of Z/2 with grouplike generator s.
HopfPtr kz2();

/// The 4-dimensional twisted Sweedler algebra as a module algebra over h2.
YDAlgebraPtr a4();

/// The same 4-dimensional algebra with its own coalgebra and antipode, as a
/// standalone Hopf presentation.
HopfPtr a4Hopf();

/// H acting on itself by the twisted adjoint action, coacting by its
/// coproduct. Requires a commutative Hopf presentation.
YDAlgebraPtr adjoint(const HopfPtr& hopf);

/// H acting on itself by multiplication, coacting by the twisted coadjoint
/// coaction. Requires a cocommutative Hopf presentation. Registered as a
/// module only: its multiplication is generally not H-linear.
YDModulePtr coadjoint(const HopfPtr& hopf);

/// Upper-triangular 2x2 matrices over the trivial Hopf algebra.
YDAlgebraPtr ut2();

/// Componentwise product algebra of dimension d over the trivial Hopf
/// algebra (diagonal idempotents, unit = all-ones).
YDAlgebraPtr triv(int d);

/// d-dimensional space over the trivial Hopf algebra with zero structure;
/// its abelian bracket is added by the Lie layer.
YDModulePtr trivAbelian(int d);

/// Z/2-graded space with p even and q odd coordinates over kz2, identity
/// twist; s acts by parity sign, the coaction records the grading.
YDModulePtr superspace(int p, int q);

/// One deterministic single-constant perturbation of a built-in, used to
/// demonstrate that the checkers catch broken presentations.
struct PerturbationSeed {
    std::string name;        // e.g. "a4-m-xg"
    std::string builtin;     // which built-in it perturbs
    std::string tensor;      // which table is touched
    std::vector<int> index;  // the touched entry
    Scalar value;            // replacement constant
    std::string expectFailure; // an axiom expected to fail
};

const std::vector<PerturbationSeed>& perturbationSeeds();

/// Rebuilds the seed's built-in as a Hopf presentation with the one constant
/// replaced. Valid for seeds touching m, delta, counit, antipode or beta.
HopfPresentation perturbedHopf(const PerturbationSeed& seed);

/// Rebuilds the seed's built-in as a YD algebra with the one constant
/// replaced. Valid for a4 seeds touching m, beta, action or coaction.
YDAlgebraPresentation perturbedYDAlgebra(const PerturbationSeed& seed);

} // namespace homkernel::builtins
