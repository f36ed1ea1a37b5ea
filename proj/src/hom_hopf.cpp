#include "homkernel/hom_hopf.hpp"

namespace homkernel {

namespace {

/// Compares two optional element values for one instance; skips when either
/// side was unrepresentable.
void judge(Report& rep, AxiomResult& ax, const std::optional<Tensor>& lhs,
           const std::optional<Tensor>& rhs, std::vector<std::string> tuple) {
    if (!lhs || !rhs) {
        rep.recordSkip(ax);
        return;
    }
    if (*lhs == *rhs)
        rep.recordPass(ax);
    else
        rep.recordFail(ax, std::move(tuple), formatElement(*lhs), formatElement(*rhs));
}

void judgeScalar(Report& rep, AxiomResult& ax, const std::optional<Scalar>& lhs,
                 const std::optional<Scalar>& rhs, std::vector<std::string> tuple) {
    if (!lhs || !rhs) {
        rep.recordSkip(ax);
        return;
    }
    if (*lhs == *rhs)
        rep.recordPass(ax);
    else
        rep.recordFail(ax, std::move(tuple), toString(*lhs), toString(*rhs));
}

} // namespace

Report check_hom_algebra(const AlgebraPresentation& p, int witnessCap) {
    Report rep("hom-algebra on " + p.basis->name(), witnessCap);
    const int d = p.basis->dim();
    auto e = [&](int i) { return Tensor::basisVector(p.basis, i); };
    auto lab = [&](int i) { return p.basis->label(i); };
    auto mul = [&](const Tensor& x, const Tensor& y) { return mulElem(p.m, p.overflow, x, y); };

    auto& assoc = rep.axiom("hom-associativity");
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                auto bc = mul(e(b), e(c));
                auto ab = mul(e(a), e(b));
                std::optional<Tensor> lhs, rhs;
                if (bc) lhs = mul(applyLinear(p.alpha, e(a)), *bc);
                if (ab) rhs = mul(*ab, applyLinear(p.alpha, e(c)));
                judge(rep, assoc, lhs, rhs, {lab(a), lab(b), lab(c)});
            }

    auto& multi = rep.axiom("alpha-multiplicative");
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            auto ab = mul(e(a), e(b));
            std::optional<Tensor> lhs;
            if (ab) lhs = applyLinear(p.alpha, *ab);
            auto rhs = mul(applyLinear(p.alpha, e(a)), applyLinear(p.alpha, e(b)));
            judge(rep, multi, lhs, rhs, {lab(a), lab(b)});
        }

    auto& unitR = rep.axiom("right-hom-unit");
    auto& unitL = rep.axiom("left-hom-unit");
    for (int a = 0; a < d; ++a) {
        Tensor twisted = applyLinear(p.alpha, e(a));
        judge(rep, unitR, mul(e(a), p.unit), twisted, {lab(a)});
        judge(rep, unitL, mul(p.unit, e(a)), twisted, {lab(a)});
    }

    auto& fix = rep.axiom("alpha-fixes-unit");
    judge(rep, fix, applyLinear(p.alpha, p.unit), p.unit, {"1"});

    return rep;
}

Report check_hom_coalgebra(const CoalgebraPresentation& p, int witnessCap) {
    Report rep("hom-coalgebra on " + p.basis->name(), witnessCap);
    const int d = p.basis->dim();
    auto e = [&](int i) { return Tensor::basisVector(p.basis, i); };
    auto lab = [&](int i) { return p.basis->label(i); };

    auto& coassoc = rep.axiom("hom-coassociativity");
    auto& compat = rep.axiom("delta-gamma-compatible");
    auto& counitL = rep.axiom("left-hom-counit");
    auto& counitR = rep.axiom("right-hom-counit");
    auto& epsGamma = rep.axiom("counit-gamma-invariant");
    for (int c = 0; c < d; ++c) {
        Tensor dd = coprodElem(p.delta, e(c));
        // gammaInv(c1) x delta(c2)  vs  delta(c1) x gammaInv(c2)
        Tensor lhs = applyMap(applyMap(dd, p.gammaInv, {0}), p.delta, {1});
        Tensor rhs = applyMap(applyMap(dd, p.delta, {0}), p.gammaInv, {2});
        judge(rep, coassoc, lhs, rhs, {lab(c)});

        judge(rep, compat, coprodElem(p.delta, applyLinear(p.gamma, e(c))),
              applyMap(applyMap(dd, p.gamma, {0}), p.gamma, {1}), {lab(c)});

        Tensor target = applyLinear(p.gammaInv, e(c));
        judge(rep, counitR, applyMap(dd, p.counit, {1}), target, {lab(c)});
        judge(rep, counitL, applyMap(dd, p.counit, {0}), target, {lab(c)});

        judgeScalar(rep, epsGamma, counitElem(p.counit, applyLinear(p.gamma, e(c))),
                    counitElem(p.counit, e(c)), {lab(c)});
    }
    return rep;
}

Report check_hom_bialgebra(const HopfPresentation& p, int witnessCap) {
    Report rep("hom-bialgebra on " + p.basis->name(), witnessCap);
    const int d = p.basis->dim();
    auto e = [&](int i) { return Tensor::basisVector(p.basis, i); };
    auto lab = [&](int i) { return p.basis->label(i); };
    auto mul = [&](const Tensor& x, const Tensor& y) { return mulElem(p.m, p.overflow, x, y); };

    auto& deltaMul = rep.axiom("delta-multiplicative");
    auto& epsMul = rep.axiom("counit-multiplicative");
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            auto ab = mul(e(a), e(b));
            std::optional<Tensor> lhs, rhs;
            std::optional<Scalar> sl;
            if (ab) {
                lhs = coprodElem(p.delta, *ab);
                sl = counitElem(p.counit, *ab);
            }
            // (a1 b1) x (a2 b2), multiplying slotwise.
            Tensor slots = kron(coprodElem(p.delta, e(a)), coprodElem(p.delta, e(b)));
            auto step = mulAxes(p.m, p.overflow, slots, 0, 2);
            if (step) rhs = mulAxes(p.m, p.overflow, *step, 1, 2);
            Scalar sr = counitElem(p.counit, e(a)) * counitElem(p.counit, e(b));
            judge(rep, deltaMul, lhs, rhs, {lab(a), lab(b)});
            judgeScalar(rep, epsMul, sl, sr, {lab(a), lab(b)});
        }

    auto& deltaUnit = rep.axiom("delta-preserves-unit");
    judge(rep, deltaUnit, coprodElem(p.delta, p.unit), kron(p.unit, p.unit), {"1"});
    auto& epsUnit = rep.axiom("counit-preserves-unit");
    judgeScalar(rep, epsUnit, counitElem(p.counit, p.unit), Scalar(1), {"1"});
    return rep;
}

Report check_antipode(const HopfPresentation& p, int witnessCap) {
    Report rep("antipode on " + p.basis->name(), witnessCap);
    if (!p.antipode)
        throw StructuralError("presentation '" + p.name + "' has no antipode");
    const Tensor& S = *p.antipode;
    const int d = p.basis->dim();
    auto e = [&](int i) { return Tensor::basisVector(p.basis, i); };
    auto lab = [&](int i) { return p.basis->label(i); };

    auto& left = rep.axiom("left-antipode");
    auto& right = rep.axiom("right-antipode");
    for (int h = 0; h < d; ++h) {
        Tensor dd = coprodElem(p.delta, e(h));
        Tensor target = counitElem(p.counit, e(h)) * p.unit;
        auto lhs = mulAxes(p.m, p.overflow, applyMap(dd, S, {0}), 0, 1);
        judge(rep, left, lhs, target, {lab(h)});
        auto rhs = mulAxes(p.m, p.overflow, applyMap(dd, S, {1}), 0, 1);
        judge(rep, right, rhs, target, {lab(h)});
    }

    auto& comm = rep.axiom("antipode-alpha-commute");
    judge(rep, comm, contract(p.alpha, S, {{1, 0}}), contract(S, p.alpha, {{1, 0}}),
          {"alpha"});
    return rep;
}

Report check_hopf_suite(const HopfPresentation& p, bool includeAntipode,
                        int witnessCap) {
    Report rep(p.name.empty() ? "hopf presentation" : p.name, witnessCap);
    rep.merge(check_hom_algebra(p.algebraPart(), witnessCap));
    rep.merge(check_hom_coalgebra(p.coalgebraPart(), witnessCap));
    rep.merge(check_hom_bialgebra(p, witnessCap));
    if (includeAntipode) rep.merge(check_antipode(p, witnessCap));
    return rep;
}

} // namespace homkernel
