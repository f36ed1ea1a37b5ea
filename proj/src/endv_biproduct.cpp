#include "homkernel/endv_biproduct.hpp"

namespace homkernel {

EndVPresentation build_endv(std::shared_ptr<const YDModulePresentation> v) {
    const YDModulePresentation& V = *v;
    const HopfPresentation& H = *V.hopf;
    if (H.alpha != Tensor::identityMap(H.basis))
        throw AlphaNotIdentityError("End(V) needs an ordinary Hopf presentation");
    if (!H.antipodeInv)
        throw StructuralError("End(V) needs an invertible antipode");
    if (!V.involutive())
        throw NotInvolutiveError("the module twist must square to the identity");

    const int d = V.basis->dim();
    const int dh = H.basis->dim();
    std::vector<std::string> labels;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            labels.push_back("E(" + V.basis->label(a) + "," + V.basis->label(b) + ")");
    auto E = makeBasis("End(" + V.basis->name() + ")", labels);
    auto slot = [d](int a, int b) { return a * d + b; };

    Tensor m({inAxis(E), inAxis(E), outAxis(E)});
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) m.set({slot(a, b), slot(b, c), slot(a, c)}, 1);
    Tensor unit({outAxis(E)});
    for (int a = 0; a < d; ++a) unit.set({slot(a, a)}, 1);

    // (h.f)(v_c) = h1 . f(S(h2) . v_c)
    Tensor action({inAxis(H.basis), inAxis(E), outAxis(E)});
    for (int t = 0; t < dh; ++t)
        for (const auto& [didx, dv] : H.delta.entries()) {
            if (didx[0] != t) continue;
            for (const auto& [sidx, sv] : H.antipode->entries()) {
                if (sidx[0] != didx[2]) continue;
                for (const auto& [inner, iv] : V.action.entries()) {
                    if (inner[0] != sidx[1]) continue;
                    const int c = inner[1]; // input column
                    const int b = inner[2]; // must meet the matrix unit's row b
                    for (const auto& [outer, ov] : V.action.entries()) {
                        if (outer[0] != didx[1]) continue;
                        const int a = outer[1];
                        const int r = outer[2];
                        action.add({t, slot(a, b), slot(r, c)}, dv * sv * iv * ov);
                    }
                }
            }
        }

    // rho(f)(v_c) = (f(v_c0))_(-1) SInv(v_c(-1)) x (f(v_c0))_0
    Tensor coaction({inAxis(E), outAxis(H.basis), outAxis(E)});
    for (const auto& [cIdx, cv] : V.coaction.entries()) {
        const int c = cIdx[0];
        const int s = cIdx[1];
        const int b = cIdx[2]; // f sees this index
        for (int a = 0; a < d; ++a) {
            // f = E(a,b): f(v_b) = v_a; expand rho(v_a)
            for (const auto& [aIdx, av] : V.coaction.entries()) {
                if (aIdx[0] != a) continue;
                const int sPrime = aIdx[1];
                const int r = aIdx[2];
                // H part: h_sPrime * SInv(h_s)
                for (const auto& [sinvIdx, sinvV] : H.antipodeInv->entries()) {
                    if (sinvIdx[0] != s) continue;
                    for (const auto& [mIdx, mv] : H.m.entries()) {
                        if (mIdx[0] != sPrime || mIdx[1] != sinvIdx[1]) continue;
                        coaction.add({slot(a, b), mIdx[2], slot(r, c)},
                                     cv * av * sinvV * mv);
                    }
                }
            }
        }
    }

    auto module = YDModulePresentation::make("End(" + V.name + ")", v->hopf, E,
                                             action, coaction, Tensor::identityMap(E));
    EndVPresentation out;
    out.sourceV = std::move(v);
    out.endv = std::make_shared<const YDAlgebraPresentation>(
        YDAlgebraPresentation::make(std::move(module), m, unit));
    return out;
}

BraidedLiePresentation endv_bracket(const EndVPresentation& e) {
    return derive_bracket(*e.endv);
}

BiproductPresentation build_biproduct(const EndVPresentation& e, int maxDegree,
                                      bool literalMultiplication) {
    auto lie = std::make_shared<const BraidedLiePresentation>(endv_bracket(e));
    auto U = std::make_shared<const TruncatedEnveloping>(
        build_enveloping(lie, maxDegree));
    HopfPtr Hp = e.sourceV->hopf;
    const HopfPresentation& H = *Hp;
    const int du = U->dim();
    const int dh = H.basis->dim();

    std::vector<std::string> labels;
    for (int t = 0; t < du; ++t)
        for (int h = 0; h < dh; ++h)
            labels.push_back(U->basis()->label(t) + "#" + H.basis->label(h));
    auto B = makeBasis(U->basis()->name() + "#" + H.basis->name(), labels);
    auto slot = [dh](int t, int h) { return t * dh + h; };

    const Tensor& mU = U->hopf.m;
    const OverflowSet& ovU = U->hopf.overflow;
    const Tensor& twistU = U->ydModule.beta;
    const Tensor& twistUInv = U->ydModule.betaInv;
    const Tensor& actU = U->ydModule.action;
    const Tensor& coactU = U->ydModule.coaction;

    // (f x h)(f' x h') = f (h1 . twistInv(f')) x h2 h'; the literal variant
    // reads the first factor's endomorphism leg twice.
    Tensor mB({inAxis(B), inAxis(B), outAxis(B)});
    OverflowSet ovB;
    for (int t = 0; t < du; ++t)
        for (int h = 0; h < dh; ++h)
            for (int t2 = 0; t2 < du; ++t2)
                for (int h2 = 0; h2 < dh; ++h2) {
                    const int uLeg = literalMultiplication ? t : t2;
                    std::map<int, Scalar> row;
                    bool overflowed = false;
                    for (const auto& [didx, dv] : H.delta.entries()) {
                        if (didx[0] != h) continue;
                        Tensor inner({outAxis(U->basis())});
                        for (const auto& [aidx, av] : actU.entries())
                            if (aidx[0] == didx[1])
                                for (const auto& [tidx, tv] : twistUInv.entries())
                                    if (tidx[0] == uLeg && tidx[1] == aidx[1])
                                        inner.add({aidx[2]}, av * tv);
                        auto prod = mulElem(mU, ovU, Tensor::basisVector(U->basis(), t),
                                            inner);
                        if (!prod) {
                            overflowed = true;
                            break;
                        }
                        for (const auto& [pidx, pv] : prod->entries())
                            for (const auto& [midx, mv] : H.m.entries())
                                if (midx[0] == didx[2] && midx[1] == h2)
                                    row[slot(pidx[0], midx[2])] += dv * pv * mv;
                    }
                    if (overflowed) {
                        ovB.insert({slot(t, h), slot(t2, h2)});
                        continue;
                    }
                    for (const auto& [k, v] : row)
                        if (!isZero(v)) mB.set({slot(t, h), slot(t2, h2), k}, v);
                }

    Tensor unitB({outAxis(B)});
    for (const auto& [hidx, hv] : H.unit.entries()) unitB.set({slot(0, hidx[0])}, hv);

    // Delta(f x h) = (f1 x f2_(-1) h1) (x) (twist(f2_0) x h2)
    Tensor deltaB({inAxis(B), outAxis(B), outAxis(B)});
    for (int t = 0; t < du; ++t)
        for (int h = 0; h < dh; ++h)
            for (const auto& [uidx, uv] : U->hopf.delta.entries()) {
                if (uidx[0] != t) continue;
                const int t1 = uidx[1];
                const int t2 = uidx[2];
                for (const auto& [cidx, cv] : coactU.entries()) {
                    if (cidx[0] != t2) continue;
                    for (const auto& [didx, dv] : H.delta.entries()) {
                        if (didx[0] != h) continue;
                        for (const auto& [midx, mv] : H.m.entries()) {
                            if (midx[0] != cidx[1] || midx[1] != didx[1]) continue;
                            for (const auto& [tidx, tv] : twistU.entries())
                                if (tidx[0] == cidx[2])
                                    deltaB.add({slot(t, h), slot(t1, midx[2]),
                                                slot(tidx[1], didx[2])},
                                               uv * cv * dv * mv * tv);
                        }
                    }
                }
            }

    Tensor counitB({inAxis(B)});
    for (int t = 0; t < du; ++t) {
        Scalar eu = U->hopf.counit.at({t});
        if (isZero(eu)) continue;
        for (int h = 0; h < dh; ++h) {
            Scalar eh = H.counit.at({h});
            if (!isZero(eu * eh)) counitB.set({slot(t, h)}, eu * eh);
        }
    }

    Tensor twistB({inAxis(B), outAxis(B)});
    for (const auto& [uidx, uv] : twistU.entries())
        for (const auto& [hidx, hv] : H.alpha.entries())
            twistB.set({slot(uidx[0], hidx[0]), slot(uidx[1], hidx[1])}, uv * hv);

    // S(f x h) = (1 x S(f_(-1) h)) (f_0 ... ) with both factors multiplied in
    // the composite; the left factor has a unit endomorphism leg, so the
    // product never leaves the window.
    Tensor antipodeB({inAxis(B), outAxis(B)});
    for (int t = 0; t < du; ++t)
        for (int h = 0; h < dh; ++h) {
            Tensor value({outAxis(B)});
            for (const auto& [cidx, cv] : coactU.entries()) {
                if (cidx[0] != t) continue;
                // S_H(h_s h)
                Tensor leftH({outAxis(H.basis)});
                for (const auto& [midx, mv] : H.m.entries())
                    if (midx[0] == cidx[1] && midx[1] == h)
                        for (const auto& [sidx, sv] : H.antipode->entries())
                            if (sidx[0] == midx[2]) leftH.add({sidx[1]}, mv * sv);
                Tensor left({outAxis(B)});
                for (const auto& [lidx, lv] : leftH.entries())
                    left.add({slot(0, lidx[0])}, cv * lv);

                Tensor right({outAxis(B)});
                for (const auto& [sidx, sv] : U->hopf.antipode->entries())
                    if (sidx[0] == cidx[2])
                        for (const auto& [hidx, hv] : H.unit.entries())
                            right.add({slot(sidx[1], hidx[0])}, sv * hv);

                auto prod = mulElem(mB, ovB, left, right);
                if (!prod)
                    throw StructuralError("composite antipode left the degree window");
                value += *prod;
            }
            for (const auto& [idx, v] : value.entries())
                antipodeB.set({slot(t, h), idx[0]}, v);
        }

    BiproductPresentation out;
    out.factorU = U;
    out.factorH = Hp;
    out.hopf = HopfPresentation::make(B->name(), B, mB, unitB, deltaB, counitB,
                                      twistB, antipodeB, ovB);
    return out;
}

} // namespace homkernel
