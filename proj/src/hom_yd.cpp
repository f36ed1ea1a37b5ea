#include "homkernel/hom_yd.hpp"

namespace homkernel {

namespace {

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

} // namespace

YDModulePresentation YDModulePresentation::make(std::string name, HopfPtr hopf,
                                                BasisPtr basis, Tensor action,
                                                Tensor coaction, Tensor beta) {
    if (!hopf) throw StructuralError("module '" + name + "' lacks a Hopf reference");
    expectAxes(action, {inAxis(hopf->basis), inAxis(basis), outAxis(basis)}, "action");
    expectAxes(coaction, {inAxis(basis), outAxis(hopf->basis), outAxis(basis)},
               "coaction");
    expectAxes(beta, {inAxis(basis), outAxis(basis)}, "twist");
    YDModulePresentation yd;
    yd.name = std::move(name);
    yd.hopf = std::move(hopf);
    yd.basis = std::move(basis);
    yd.action = std::move(action);
    yd.coaction = std::move(coaction);
    yd.beta = std::move(beta);
    yd.betaInv = invertMap(yd.beta);
    return yd;
}

bool YDModulePresentation::involutive() const {
    return contract(beta, beta, {{1, 0}}) == Tensor::identityMap(basis);
}

YDAlgebraPresentation YDAlgebraPresentation::make(YDModulePresentation module,
                                                  Tensor m, Tensor unit,
                                                  OverflowSet overflow) {
    expectAxes(m, {inAxis(module.basis), inAxis(module.basis), outAxis(module.basis)},
               "multiplication");
    expectAxes(unit, {outAxis(module.basis)}, "unit");
    YDAlgebraPresentation a;
    a.module = std::move(module);
    a.m = std::move(m);
    a.unit = std::move(unit);
    a.overflow = std::move(overflow);
    return a;
}

AlgebraPresentation YDAlgebraPresentation::algebraPart() const {
    AlgebraPresentation p;
    p.basis = module.basis;
    p.m = m;
    p.unit = unit;
    p.alpha = module.beta;
    p.alphaInv = module.betaInv;
    p.overflow = overflow;
    return p;
}

bool sameHopf(const YDModulePresentation& a, const YDModulePresentation& b) {
    return a.hopf == b.hopf || (a.hopf && b.hopf && *a.hopf == *b.hopf);
}

Tensor actElem(const YDModulePresentation& yd, const Tensor& h, const Tensor& x) {
    return applyMap(kron(h, x), yd.action, {0, 1});
}

Tensor coactElem(const YDModulePresentation& yd, const Tensor& x) {
    return applyMap(x, yd.coaction, {0});
}

Report check_hom_module(const YDModulePresentation& yd, int witnessCap) {
    Report rep("hom-module " + yd.name, witnessCap);
    const HopfPresentation& H = *yd.hopf;
    const int dh = H.basis->dim();
    const int dm = yd.basis->dim();
    auto eh = [&](int i) { return Tensor::basisVector(H.basis, i); };
    auto em = [&](int i) { return Tensor::basisVector(yd.basis, i); };

    auto& assoc = rep.axiom("hom-module-associativity");
    for (int a = 0; a < dh; ++a)
        for (int b = 0; b < dh; ++b)
            for (int m = 0; m < dm; ++m) {
                Tensor lhs = actElem(yd, applyLinear(H.alpha, eh(a)),
                                     actElem(yd, eh(b), em(m)));
                auto ab = mulElem(H.m, H.overflow, eh(a), eh(b));
                std::optional<Tensor> rhs;
                if (ab) rhs = actElem(yd, *ab, applyLinear(yd.beta, em(m)));
                judge(rep, assoc, lhs, rhs,
                      {H.basis->label(a), H.basis->label(b), yd.basis->label(m)});
            }

    auto& unit = rep.axiom("hom-module-unit");
    for (int m = 0; m < dm; ++m)
        judge(rep, unit, actElem(yd, H.unit, em(m)), applyLinear(yd.beta, em(m)),
              {yd.basis->label(m)});

    auto& compat = rep.axiom("beta-action-compatible");
    for (int a = 0; a < dh; ++a)
        for (int m = 0; m < dm; ++m)
            judge(rep, compat, applyLinear(yd.beta, actElem(yd, eh(a), em(m))),
                  actElem(yd, applyLinear(H.alpha, eh(a)), applyLinear(yd.beta, em(m))),
                  {H.basis->label(a), yd.basis->label(m)});
    return rep;
}

Report check_hom_comodule(const YDModulePresentation& yd, int witnessCap) {
    Report rep("hom-comodule " + yd.name, witnessCap);
    const HopfPresentation& H = *yd.hopf;
    const int dm = yd.basis->dim();
    auto em = [&](int i) { return Tensor::basisVector(yd.basis, i); };

    auto& coassoc = rep.axiom("hom-comodule-coassociativity");
    auto& compat = rep.axiom("beta-coaction-compatible");
    auto& counit = rep.axiom("hom-comodule-counit");
    for (int m = 0; m < dm; ++m) {
        Tensor t = coactElem(yd, em(m));
        // Delta(m_-1) x betaInv(m_0)  vs  alphaInv(m_-1) x rho(m_0)
        Tensor lhs = applyMap(applyMap(t, H.delta, {0}), yd.betaInv, {2});
        Tensor rhs = applyMap(applyMap(t, H.alphaInv, {0}), yd.coaction, {1});
        judge(rep, coassoc, lhs, rhs, {yd.basis->label(m)});

        judge(rep, compat, coactElem(yd, applyLinear(yd.beta, em(m))),
              applyMap(applyMap(t, H.alpha, {0}), yd.beta, {1}), {yd.basis->label(m)});

        judge(rep, counit, applyMap(t, H.counit, {0}),
              applyLinear(yd.betaInv, em(m)), {yd.basis->label(m)});
    }
    return rep;
}

Report check_yd_compatibility(const YDModulePresentation& yd, int witnessCap) {
    Report rep("yd-compatibility " + yd.name, witnessCap);
    const HopfPresentation& H = *yd.hopf;
    if (!H.antipode)
        throw StructuralError("compatibility check needs an antipode on H");
    const int dh = H.basis->dim();
    const int dm = yd.basis->dim();
    auto eh = [&](int i) { return Tensor::basisVector(H.basis, i); };
    auto em = [&](int i) { return Tensor::basisVector(yd.basis, i); };

    auto& main = rep.axiom("yd-compatibility");
    auto& equiv = rep.axiom("yd-compatibility-equivalent");
    auto& agree = rep.axiom("yd-forms-agree");
    for (int h = 0; h < dh; ++h)
        for (int m = 0; m < dm; ++m) {
            std::vector<std::string> tuple{H.basis->label(h), yd.basis->label(m)};
            Tensor cm = coactElem(yd, em(m));
            Tensor dd = coprodElem(H.delta, eh(h));

            // rho(h.m) = (h11 alphaInv(m_-1)) S(h2) x alpha(h12).m0
            Tensor lhs1 = coactElem(yd, actElem(yd, eh(h), em(m)));
            Tensor t = kron(applyMap(dd, H.delta, {0}), cm); // [h11,h12,h2,mc,m0]
            t = applyMap(t, H.alphaInv, {3});
            t = applyMap(t, H.m, {0, 3});      // [p1, h12, h2, m0]
            t = applyMap(t, *H.antipode, {2});
            t = applyMap(t, H.m, {0, 2});      // [p, h12, m0]
            t = applyMap(t, H.alpha, {1});
            Tensor rhs1 = applyMap(t, yd.action, {1, 2}); // [p, M]
            bool ok1 = (lhs1 == rhs1);
            if (ok1)
                rep.recordPass(main);
            else
                rep.recordFail(main, tuple, formatElement(lhs1), formatElement(rhs1));

            // h1 m_-1 x h2.m0 = (h1.betaInv(m))_-1 h2 x beta((h1.betaInv(m))_0)
            Tensor u = kron(dd, cm);            // [h1,h2,mc,m0]
            u = applyMap(u, H.m, {0, 2});       // [p, h2, m0]
            Tensor lhs2 = applyMap(u, yd.action, {1, 2});
            Tensor v = kron(dd, applyLinear(yd.betaInv, em(m))); // [h1,h2,M]
            v = applyMap(v, yd.action, {0, 2}); // [Ma, h2]
            v = applyMap(v, yd.coaction, {0});  // [Hc, M0, h2]
            v = applyMap(v, H.m, {0, 2});       // [p, M0]
            Tensor rhs2 = applyMap(v, yd.beta, {1});
            bool ok2 = (lhs2 == rhs2);
            if (ok2)
                rep.recordPass(equiv);
            else
                rep.recordFail(equiv, tuple, formatElement(lhs2), formatElement(rhs2));

            if (ok1 == ok2)
                rep.recordPass(agree);
            else
                rep.recordFail(agree, tuple, ok1 ? "holds" : "fails",
                               ok2 ? "holds" : "fails");
        }
    return rep;
}

Report check_yd_module_suite(const YDModulePresentation& yd, int witnessCap) {
    Report rep(yd.name.empty() ? "yd module" : yd.name, witnessCap);
    rep.merge(check_hom_module(yd, witnessCap));
    rep.merge(check_hom_comodule(yd, witnessCap));
    rep.merge(check_yd_compatibility(yd, witnessCap));
    return rep;
}

Tensor braiding(const YDModulePresentation& m, const YDModulePresentation& n) {
    if (!sameHopf(m, n))
        throw StructuralError("braiding requires both modules over the same Hopf presentation");
    Tensor C({inAxis(m.basis), inAxis(n.basis), outAxis(n.basis), outAxis(m.basis)});
    for (int i = 0; i < m.basis->dim(); ++i) {
        Tensor t = coactElem(m, Tensor::basisVector(m.basis, i)); // [H, M]
        for (int j = 0; j < n.basis->dim(); ++j) {
            Tensor u = kron(t, applyLinear(n.betaInv, Tensor::basisVector(n.basis, j)));
            u = applyMap(u, n.action, {0, 2}); // [N', M]
            u = applyMap(u, m.beta, {1});
            for (const auto& [idx, v] : u.entries())
                C.add({i, j, idx[0], idx[1]}, v);
        }
    }
    return C;
}

Report check_braiding_symmetric(const YDModulePresentation& yd, int witnessCap) {
    Report rep("braiding symmetry on " + yd.name, witnessCap);
    const HopfPresentation& H = *yd.hopf;
    if (!H.antipodeInv)
        throw StructuralError("symmetry check needs an invertible antipode on H");
    const int dm = yd.basis->dim();
    auto em = [&](int i) { return Tensor::basisVector(yd.basis, i); };

    auto& sym = rep.axiom("braiding-symmetric");
    for (int a = 0; a < dm; ++a)
        for (int b = 0; b < dm; ++b) {
            Tensor u = kron(coactElem(yd, em(a)), applyLinear(yd.betaInv, em(b)));
            u = applyMap(u, yd.action, {0, 2});
            Tensor lhs = applyMap(u, yd.beta, {1}); // a_-1.bInv x beta(a_0)

            Tensor v = kron(coactElem(yd, em(b)), applyLinear(yd.betaInv, em(a)));
            v = applyMap(v, *H.antipodeInv, {0});
            v = applyMap(v, yd.action, {0, 2}); // [act, b0]
            Tensor rhs = applyMap(permuted(v, {1, 0}), yd.beta, {0});
            judge(rep, sym, lhs, rhs, {yd.basis->label(a), yd.basis->label(b)});
        }
    return rep;
}

namespace {

/// (a_-1 . betaInv(b)) beta(a_0) for arbitrary elements.
std::optional<Tensor> braidedProduct(const YDAlgebraPresentation& alg,
                                     const Tensor& a, const Tensor& b) {
    const auto& yd = alg.module;
    Tensor u = kron(coactElem(yd, a), applyLinear(yd.betaInv, b));
    u = applyMap(u, yd.action, {0, 2});
    u = applyMap(u, yd.beta, {1});
    return mulAxes(alg.m, alg.overflow, u, 0, 1);
}

} // namespace

Report check_h_commutative_on(const YDAlgebraPresentation& a,
                              const std::vector<Tensor>& span,
                              const std::vector<std::string>& spanLabels,
                              int witnessCap) {
    Report rep("h-commutativity on " + a.module.name, witnessCap);
    auto& comm = rep.axiom("h-commutative");
    for (size_t i = 0; i < span.size(); ++i)
        for (size_t j = 0; j < span.size(); ++j) {
            auto lhs = braidedProduct(a, span[i], span[j]);
            auto rhs = mulElem(a.m, a.overflow, span[i], span[j]);
            judge(rep, comm, lhs, rhs, {spanLabels[i], spanLabels[j]});
        }
    return rep;
}

Report check_h_commutative(const YDAlgebraPresentation& a, int witnessCap) {
    std::vector<Tensor> span;
    std::vector<std::string> labels;
    for (int i = 0; i < a.basis()->dim(); ++i) {
        span.push_back(Tensor::basisVector(a.basis(), i));
        labels.push_back(a.basis()->label(i));
    }
    return check_h_commutative_on(a, span, labels, witnessCap);
}

Report check_h_cocommutative(const YDModulePresentation& yd, const Tensor& delta,
                             int witnessCap) {
    Report rep("h-cocommutativity on " + yd.name, witnessCap);
    expectAxes(delta, {inAxis(yd.basis), outAxis(yd.basis), outAxis(yd.basis)},
               "comultiplication");
    Tensor C = braiding(yd, yd);
    auto& cocomm = rep.axiom("h-cocommutative");
    for (int a = 0; a < yd.basis->dim(); ++a) {
        Tensor dd = coprodElem(delta, Tensor::basisVector(yd.basis, a));
        Tensor lhs = applyMap(dd, C, {0, 1});
        Tensor rhs = permuted(dd, {1, 0});
        judge(rep, cocomm, lhs, rhs, {yd.basis->label(a)});
    }
    return rep;
}

Report check_yd_algebra(const YDAlgebraPresentation& a, int witnessCap) {
    Report rep("yd-algebra " + a.module.name, witnessCap);
    const auto& yd = a.module;
    const HopfPresentation& H = *yd.hopf;
    const int dh = H.basis->dim();
    const int dm = yd.basis->dim();
    auto eh = [&](int i) { return Tensor::basisVector(H.basis, i); };
    auto em = [&](int i) { return Tensor::basisVector(yd.basis, i); };

    auto& modMul = rep.axiom("module-algebra-multiplication");
    for (int h = 0; h < dh; ++h)
        for (int f = 0; f < dm; ++f)
            for (int g = 0; g < dm; ++g) {
                auto fg = mulElem(a.m, a.overflow, em(f), em(g));
                std::optional<Tensor> lhs;
                if (fg) lhs = actElem(yd, eh(h), *fg);
                Tensor u = kron(coprodElem(H.delta, eh(h)), kron(em(f), em(g)));
                u = applyMap(u, yd.action, {0, 2}); // [f', h2, g]
                u = applyMap(u, yd.action, {1, 2}); // [f', g']
                auto rhs = mulAxes(a.m, a.overflow, u, 0, 1);
                judge(rep, modMul, lhs, rhs,
                      {H.basis->label(h), yd.basis->label(f), yd.basis->label(g)});
            }

    auto& modUnit = rep.axiom("module-algebra-unit");
    for (int h = 0; h < dh; ++h)
        judge(rep, modUnit, actElem(yd, eh(h), a.unit),
              counitElem(H.counit, eh(h)) * a.unit, {H.basis->label(h)});

    auto& comMul = rep.axiom("comodule-algebra-multiplication");
    for (int f = 0; f < dm; ++f)
        for (int g = 0; g < dm; ++g) {
            auto fg = mulElem(a.m, a.overflow, em(f), em(g));
            std::optional<Tensor> lhs;
            if (fg) lhs = coactElem(yd, *fg);
            Tensor u = kron(coactElem(yd, em(f)), coactElem(yd, em(g)));
            u = applyMap(u, H.m, {0, 2}); // [hp, f0, g0]
            auto rhs = mulAxes(a.m, a.overflow, u, 1, 2);
            judge(rep, comMul, lhs, rhs, {yd.basis->label(f), yd.basis->label(g)});
        }

    auto& comUnit = rep.axiom("comodule-algebra-unit");
    judge(rep, comUnit, coactElem(yd, a.unit), kron(H.unit, a.unit), {"1"});
    return rep;
}

} // namespace homkernel
