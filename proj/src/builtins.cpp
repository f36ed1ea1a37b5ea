#include "homkernel/builtins.hpp"

namespace homkernel::builtins {

namespace {

Tensor fromTriplets(std::vector<Axis> axes,
                    const std::vector<std::pair<Tensor::Index, Scalar>>& triplets) {
    Tensor t(std::move(axes));
    for (const auto& [idx, v] : triplets) t.set(idx, v);
    return t;
}

Tensor diagonalMap(const BasisPtr& b, const std::vector<Scalar>& diag) {
    Tensor t({inAxis(b), outAxis(b)});
    for (int i = 0; i < b->dim(); ++i) t.set({i, i}, diag[i]);
    return t;
}

/// Trivial structure over any Hopf algebra: h acts through the counit
/// composed with the twist, the coaction is unit x betaInv.
Tensor trivialAction(const HopfPtr& H, const BasisPtr& M, const Tensor& beta) {
    Tensor t({inAxis(H->basis), inAxis(M), outAxis(M)});
    for (int h = 0; h < H->basis->dim(); ++h) {
        Scalar eps = H->counit.at({h});
        if (isZero(eps)) continue;
        for (const auto& [idx, v] : beta.entries()) t.set({h, idx[0], idx[1]}, eps * v);
    }
    return t;
}

Tensor trivialCoaction(const HopfPtr& H, const BasisPtr& M, const Tensor& betaInv) {
    Tensor t({inAxis(M), outAxis(H->basis), outAxis(M)});
    for (const auto& [uidx, uv] : H->unit.entries())
        for (const auto& [bidx, bv] : betaInv.entries())
            t.set({bidx[0], uidx[0], bidx[1]}, uv * bv);
    return t;
}

} // namespace

HopfPtr h2() {
    static HopfPtr cached = [] {
        // The valid 2-dim Hopf algebra with counit-killed generator: h^2 = h,
        // Delta(h) = h x 1 + 1 x h - 2 h x h, eps(h) = 0 (the group algebra of
        // Z/2 written in the basis {1, (1-g)/2}).
        auto B = makeBasis("H", {"1", "h"});
        Tensor m = fromTriplets(
            {inAxis(B), inAxis(B), outAxis(B)},
            {{{0, 0, 0}, 1}, {{0, 1, 1}, 1}, {{1, 0, 1}, 1}, {{1, 1, 1}, 1}});
        Tensor unit = Tensor::basisVector(B, 0);
        Tensor delta = fromTriplets(
            {inAxis(B), outAxis(B), outAxis(B)},
            {{{0, 0, 0}, 1}, {{1, 1, 0}, 1}, {{1, 0, 1}, 1}, {{1, 1, 1}, -2}});
        Tensor counit = fromTriplets({inAxis(B)}, {{{0}, 1}});
        Tensor id = Tensor::identityMap(B);
        return std::make_shared<const HopfPresentation>(
            HopfPresentation::make("h2", B, m, unit, delta, counit, id, id));
    }();
    return cached;
}

HopfPtr trivialHopf() {
    static HopfPtr cached = [] {
        auto B = makeBasis("k", {"1"});
        Tensor m = fromTriplets({inAxis(B), inAxis(B), outAxis(B)}, {{{0, 0, 0}, 1}});
        Tensor unit = Tensor::basisVector(B, 0);
        Tensor delta = fromTriplets({inAxis(B), outAxis(B), outAxis(B)}, {{{0, 0, 0}, 1}});
        Tensor counit = fromTriplets({inAxis(B)}, {{{0}, 1}});
        Tensor id = Tensor::identityMap(B);
        return std::make_shared<const HopfPresentation>(
            HopfPresentation::make("triv(1)", B, m, unit, delta, counit, id, id));
    }();
    return cached;
}

HopfPtr kz2() {
    static HopfPtr cached = [] {
        auto B = makeBasis("H", {"1", "s"});
        Tensor m = fromTriplets(
            {inAxis(B), inAxis(B), outAxis(B)},
            {{{0, 0, 0}, 1}, {{0, 1, 1}, 1}, {{1, 0, 1}, 1}, {{1, 1, 0}, 1}});
        Tensor unit = Tensor::basisVector(B, 0);
        Tensor delta = fromTriplets({inAxis(B), outAxis(B), outAxis(B)},
                                    {{{0, 0, 0}, 1}, {{1, 1, 1}, 1}});
        Tensor counit = fromTriplets({inAxis(B)}, {{{0}, 1}, {{1}, 1}});
        Tensor id = Tensor::identityMap(B);
        return std::make_shared<const HopfPresentation>(
            HopfPresentation::make("kz2", B, m, unit, delta, counit, id, id));
    }();
    return cached;
}

namespace {

struct A4Data {
    BasisPtr basis;
    Tensor m, unit, delta, counit, beta, antipode;
};

// Indices: 0 = 1, 1 = x, 2 = g, 3 = gx.
const A4Data& a4Data() {
    static const A4Data data = [] {
        A4Data d;
        d.basis = makeBasis("A", {"1", "x", "g", "gx"});
        const auto& B = d.basis;
        d.m = fromTriplets(
            {inAxis(B), inAxis(B), outAxis(B)},
            {{{0, 0, 0}, 1},  {{0, 1, 1}, -1}, {{0, 2, 2}, 1},  {{0, 3, 3}, -1},
             {{1, 0, 1}, -1}, {{1, 2, 3}, 1},
             {{2, 0, 2}, 1},  {{2, 1, 3}, -1}, {{2, 2, 0}, 1},  {{2, 3, 1}, -1},
             {{3, 0, 3}, -1}, {{3, 2, 1}, 1}});
        d.unit = Tensor::basisVector(B, 0);
        d.delta = fromTriplets({inAxis(B), outAxis(B), outAxis(B)},
                               {{{0, 0, 0}, 1},
                                {{1, 1, 0}, -1}, {{1, 2, 1}, -1},
                                {{2, 2, 2}, 1},
                                {{3, 3, 2}, -1}, {{3, 0, 3}, -1}});
        // The grouplike g has counit 1, as in the untwisted Sweedler algebra.
        d.counit = fromTriplets({inAxis(B)}, {{{0}, 1}, {{2}, 1}});
        d.beta = diagonalMap(B, {1, -1, 1, -1});
        d.antipode = fromTriplets({inAxis(B), outAxis(B)},
                                  {{{0, 0}, 1}, {{1, 3}, -1}, {{2, 2}, 1}, {{3, 1}, 1}});
        return d;
    }();
    return data;
}

} // namespace

YDAlgebraPtr a4() {
    static YDAlgebraPtr cached = [] {
        auto H = h2();
        const A4Data& d = a4Data();
        const auto& B = d.basis;
        // h annihilates everything, 1_H acts as the twist.
        Tensor action = fromTriplets(
            {inAxis(H->basis), inAxis(B), outAxis(B)},
            {{{0, 0, 0}, 1}, {{0, 1, 1}, -1}, {{0, 2, 2}, 1}, {{0, 3, 3}, -1}});
        Tensor coaction = fromTriplets(
            {inAxis(B), outAxis(H->basis), outAxis(B)},
            {{{0, 0, 0}, 1}, {{1, 0, 1}, -1}, {{2, 0, 2}, 1}, {{3, 0, 3}, -1}});
        auto module = YDModulePresentation::make("a4", H, B, action, coaction, d.beta);
        return std::make_shared<const YDAlgebraPresentation>(
            YDAlgebraPresentation::make(std::move(module), d.m, d.unit));
    }();
    return cached;
}

HopfPtr a4Hopf() {
    static HopfPtr cached = [] {
        const A4Data& d = a4Data();
        return std::make_shared<const HopfPresentation>(HopfPresentation::make(
            "a4", d.basis, d.m, d.unit, d.delta, d.counit, d.beta, d.antipode));
    }();
    return cached;
}

YDAlgebraPtr adjoint(const HopfPtr& hopf) {
    const HopfPresentation& H = *hopf;
    if (H.m != permuted(H.m, {1, 0, 2}))
        throw PreconditionError("adjoint structure requires a commutative Hopf presentation");
    if (!H.antipode)
        throw StructuralError("adjoint structure requires an antipode");
    auto B = H.basis;
    // h . g = (h1 alphaInv(g)) S(alpha(h2))
    Tensor action({inAxis(B), inAxis(B), outAxis(B)});
    for (int h = 0; h < B->dim(); ++h) {
        Tensor dd = coprodElem(H.delta, Tensor::basisVector(B, h));
        for (int g = 0; g < B->dim(); ++g) {
            Tensor u = kron(dd, applyLinear(H.alphaInv, Tensor::basisVector(B, g)));
            u = applyMap(u, H.m, {0, 2});            // [p, h2]
            u = applyMap(u, H.alpha, {1});
            u = applyMap(u, *H.antipode, {1});
            u = *mulAxes(H.m, {}, u, 0, 1);
            for (const auto& [idx, v] : u.entries()) action.add({h, g, idx[0]}, v);
        }
    }
    auto module = YDModulePresentation::make("adjoint(" + H.name + ")", hopf, B,
                                             action, H.delta, H.alpha);
    return std::make_shared<const YDAlgebraPresentation>(
        YDAlgebraPresentation::make(std::move(module), H.m, H.unit));
}

YDModulePtr coadjoint(const HopfPtr& hopf) {
    const HopfPresentation& H = *hopf;
    if (H.delta != permuted(H.delta, {0, 2, 1}))
        throw PreconditionError("coadjoint structure requires a cocommutative Hopf presentation");
    if (!H.antipode)
        throw StructuralError("coadjoint structure requires an antipode");
    auto B = H.basis;
    // rho(h) = h11 alphaInv(S(h2)) x alpha(h12)
    Tensor coaction({inAxis(B), outAxis(B), outAxis(B)});
    for (int h = 0; h < B->dim(); ++h) {
        Tensor dd = coprodElem(H.delta, Tensor::basisVector(B, h));
        Tensor u = applyMap(dd, H.delta, {0});   // [h11, h12, h2]
        u = applyMap(u, *H.antipode, {2});
        u = applyMap(u, H.alphaInv, {2});
        u = applyMap(u, H.m, {0, 2});            // [p, h12]
        u = applyMap(u, H.alpha, {1});
        for (const auto& [idx, v] : u.entries()) coaction.add({h, idx[0], idx[1]}, v);
    }
    return std::make_shared<const YDModulePresentation>(YDModulePresentation::make(
        "coadjoint(" + H.name + ")", hopf, B, H.m, coaction, H.alpha));
}

YDAlgebraPtr ut2() {
    static YDAlgebraPtr cached = [] {
        auto H = trivialHopf();
        auto B = makeBasis("M", {"e11", "e12", "e22"});
        Tensor m = fromTriplets({inAxis(B), inAxis(B), outAxis(B)},
                                {{{0, 0, 0}, 1},
                                 {{0, 1, 1}, 1},
                                 {{1, 2, 1}, 1},
                                 {{2, 2, 2}, 1}});
        Tensor unit = fromTriplets({outAxis(B)}, {{{0}, 1}, {{2}, 1}});
        Tensor beta = Tensor::identityMap(B);
        Tensor action = trivialAction(H, B, beta);
        Tensor coaction = trivialCoaction(H, B, beta);
        auto module = YDModulePresentation::make("ut2", H, B, action, coaction, beta);
        return std::make_shared<const YDAlgebraPresentation>(
            YDAlgebraPresentation::make(std::move(module), m, unit));
    }();
    return cached;
}

YDAlgebraPtr triv(int d) {
    if (d < 1) throw StructuralError("triv(d) needs d >= 1");
    auto H = trivialHopf();
    std::vector<std::string> labels;
    for (int i = 1; i <= d; ++i) labels.push_back("e" + std::to_string(i));
    auto B = makeBasis("A", labels);
    Tensor m({inAxis(B), inAxis(B), outAxis(B)});
    Tensor unit({outAxis(B)});
    for (int i = 0; i < d; ++i) {
        m.set({i, i, i}, 1);
        unit.set({i}, 1);
    }
    Tensor beta = Tensor::identityMap(B);
    auto module = YDModulePresentation::make("triv(" + std::to_string(d) + ")", H, B,
                                             trivialAction(H, B, beta),
                                             trivialCoaction(H, B, beta), beta);
    return std::make_shared<const YDAlgebraPresentation>(
        YDAlgebraPresentation::make(std::move(module), m, unit));
}

YDModulePtr trivAbelian(int d) {
    if (d < 1) throw StructuralError("triv-abelian(d) needs d >= 1");
    auto H = trivialHopf();
    std::vector<std::string> labels;
    for (int i = 1; i <= d; ++i) labels.push_back("e" + std::to_string(i));
    auto B = makeBasis("L", labels);
    Tensor beta = Tensor::identityMap(B);
    return std::make_shared<const YDModulePresentation>(YDModulePresentation::make(
        "triv-abelian(" + std::to_string(d) + ")", H, B, trivialAction(H, B, beta),
        trivialCoaction(H, B, beta), beta));
}

YDModulePtr superspace(int p, int q) {
    if (p < 0 || q < 0 || p + q == 0)
        throw StructuralError("superspace(p,q) needs p+q >= 1");
    auto H = kz2();
    std::vector<std::string> labels;
    for (int i = 1; i <= p; ++i) labels.push_back("v" + std::to_string(i));
    for (int i = 1; i <= q; ++i) labels.push_back("w" + std::to_string(i));
    auto B = makeBasis("V", labels);
    Tensor action({inAxis(H->basis), inAxis(B), outAxis(B)});
    Tensor coaction({inAxis(B), outAxis(H->basis), outAxis(B)});
    for (int i = 0; i < p + q; ++i) {
        int parity = i < p ? 0 : 1;
        action.set({0, i, i}, 1);
        action.set({1, i, i}, parity ? -1 : 1);
        coaction.set({i, parity, i}, 1);
    }
    return std::make_shared<const YDModulePresentation>(YDModulePresentation::make(
        "superspace(" + std::to_string(p) + "," + std::to_string(q) + ")", H, B,
        action, coaction, Tensor::identityMap(B)));
}

const std::vector<PerturbationSeed>& perturbationSeeds() {
    static const std::vector<PerturbationSeed> seeds = {
        {"a4-m-xg", "a4", "m", {1, 2, 3}, -1, "hom-associativity"},
        {"a4-m-gg", "a4", "m", {2, 2, 0}, 2, "delta-multiplicative"},
        {"a4-m-x1", "a4", "m", {1, 0, 1}, 1, "right-hom-unit"},
        {"a4-m-xx", "a4", "m", {1, 1, 0}, 1, "hom-associativity"},
        {"a4-delta-x", "a4", "delta", {1, 1, 0}, 1, "right-hom-counit"},
        {"a4-delta-g", "a4", "delta", {2, 2, 2}, 2, "left-hom-counit"},
        {"a4-delta-gx", "a4", "delta", {3, 0, 3}, 1, "left-hom-counit"},
        {"a4-counit-x", "a4", "counit", {1}, 1, "left-hom-counit"},
        {"a4-antipode-x", "a4", "antipode", {1, 3}, 1, "left-antipode"},
        {"a4-antipode-g", "a4", "antipode", {2, 2}, -1, "left-antipode"},
        {"a4-beta-x", "a4", "beta", {1, 1}, 1, "right-hom-unit"},
        {"a4-action-hx", "a4", "action", {1, 1, 1}, 1, "hom-module-associativity"},
        {"a4-action-1x", "a4", "action", {0, 1, 1}, 1, "hom-module-unit"},
        {"a4-coaction-x", "a4", "coaction", {1, 0, 1}, 1, "hom-comodule-counit"},
        {"a4-coaction-g", "a4", "coaction", {2, 1, 2}, 1, "hom-comodule-coassociativity"},
        {"h2-m-1h", "h2", "m", {0, 1, 1}, -1, "left-hom-unit"},
        {"h2-m-hh", "h2", "m", {1, 1, 1}, 0, "delta-multiplicative"},
        {"h2-counit-h", "h2", "counit", {1}, 1, "right-hom-counit"},
        {"h2-delta-h", "h2", "delta", {1, 1, 0}, -1, "right-hom-counit"},
        {"h2-antipode-h", "h2", "antipode", {1, 1}, -1, "left-antipode"},
        {"a4-bracket-xg", "a4", "bracket", {1, 2, 3}, 3, "braided-skew-symmetry"},
        {"a4-bracket-gx2", "a4", "bracket", {3, 2, 1}, -2, "braided-hom-jacobi"},
    };
    return seeds;
}

namespace {

Tensor withEntry(Tensor t, const Tensor::Index& idx, const Scalar& value) {
    t.set(idx, value);
    return t;
}

} // namespace

HopfPresentation perturbedHopf(const PerturbationSeed& seed) {
    HopfPtr base;
    if (seed.builtin == "h2")
        base = h2();
    else if (seed.builtin == "a4")
        base = a4Hopf();
    else
        throw StructuralError("seed '" + seed.name + "' does not name a Hopf built-in");
    Tensor m = base->m, unit = base->unit, delta = base->delta, counit = base->counit,
           alpha = base->alpha;
    std::optional<Tensor> antipode = base->antipode;
    if (seed.tensor == "m")
        m = withEntry(m, seed.index, seed.value);
    else if (seed.tensor == "delta")
        delta = withEntry(delta, seed.index, seed.value);
    else if (seed.tensor == "counit")
        counit = withEntry(counit, seed.index, seed.value);
    else if (seed.tensor == "antipode")
        antipode = withEntry(*antipode, seed.index, seed.value);
    else if (seed.tensor == "beta" || seed.tensor == "alpha")
        alpha = withEntry(alpha, seed.index, seed.value);
    else
        throw StructuralError("seed '" + seed.name + "' does not touch a Hopf tensor");
    return HopfPresentation::make(seed.name, base->basis, m, unit, delta, counit,
                                  alpha, antipode);
}

YDAlgebraPresentation perturbedYDAlgebra(const PerturbationSeed& seed) {
    if (seed.builtin != "a4")
        throw StructuralError("seed '" + seed.name + "' does not name a YD built-in");
    const YDAlgebraPresentation& base = *a4();
    Tensor m = base.m, beta = base.module.beta, action = base.module.action,
           coaction = base.module.coaction;
    if (seed.tensor == "m")
        m = withEntry(m, seed.index, seed.value);
    else if (seed.tensor == "beta")
        beta = withEntry(beta, seed.index, seed.value);
    else if (seed.tensor == "action")
        action = withEntry(action, seed.index, seed.value);
    else if (seed.tensor == "coaction")
        coaction = withEntry(coaction, seed.index, seed.value);
    else
        throw StructuralError("seed '" + seed.name + "' does not touch a module tensor");
    auto module = YDModulePresentation::make(seed.name, base.module.hopf,
                                             base.module.basis, action, coaction, beta);
    return YDAlgebraPresentation::make(std::move(module), m, base.unit);
}

} // namespace homkernel::builtins
