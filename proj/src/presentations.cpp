#include "homkernel/presentations.hpp"

namespace homkernel {

void expectAxes(const Tensor& t, const std::vector<Axis>& axes,
                const std::string& what) {
    if (!compatibleAxes(t.axes(), axes)) {
        auto render = [](const std::vector<Axis>& as) {
            std::string s;
            for (const auto& a : as) {
                if (!s.empty()) s += ",";
                s += (a.variance == Variance::In ? "in:" : "out:") + a.basis->name();
            }
            return s;
        };
        throw StructuralError(what + ": expected axes [" + render(axes) +
                              "], got [" + render(t.axes()) + "]");
    }
}

AlgebraPresentation AlgebraPresentation::make(BasisPtr basis, Tensor m, Tensor unit,
                                              Tensor alpha, OverflowSet overflow) {
    expectAxes(m, {inAxis(basis), inAxis(basis), outAxis(basis)}, "multiplication");
    expectAxes(unit, {outAxis(basis)}, "unit");
    expectAxes(alpha, {inAxis(basis), outAxis(basis)}, "twist");
    AlgebraPresentation p;
    p.basis = std::move(basis);
    p.m = std::move(m);
    p.unit = std::move(unit);
    p.alpha = std::move(alpha);
    p.alphaInv = invertMap(p.alpha);
    p.overflow = std::move(overflow);
    return p;
}

CoalgebraPresentation CoalgebraPresentation::make(BasisPtr basis, Tensor delta,
                                                  Tensor counit, Tensor gamma) {
    expectAxes(delta, {inAxis(basis), outAxis(basis), outAxis(basis)}, "comultiplication");
    expectAxes(counit, {inAxis(basis)}, "counit");
    expectAxes(gamma, {inAxis(basis), outAxis(basis)}, "twist");
    CoalgebraPresentation p;
    p.basis = std::move(basis);
    p.delta = std::move(delta);
    p.counit = std::move(counit);
    p.gamma = std::move(gamma);
    p.gammaInv = invertMap(p.gamma);
    return p;
}

HopfPresentation HopfPresentation::make(std::string name, BasisPtr basis, Tensor m,
                                        Tensor unit, Tensor delta, Tensor counit,
                                        Tensor alpha, std::optional<Tensor> antipode,
                                        OverflowSet overflow) {
    expectAxes(m, {inAxis(basis), inAxis(basis), outAxis(basis)}, "multiplication");
    expectAxes(unit, {outAxis(basis)}, "unit");
    expectAxes(delta, {inAxis(basis), outAxis(basis), outAxis(basis)}, "comultiplication");
    expectAxes(counit, {inAxis(basis)}, "counit");
    expectAxes(alpha, {inAxis(basis), outAxis(basis)}, "twist");
    HopfPresentation p;
    p.name = std::move(name);
    p.basis = std::move(basis);
    p.m = std::move(m);
    p.unit = std::move(unit);
    p.delta = std::move(delta);
    p.counit = std::move(counit);
    p.alpha = std::move(alpha);
    p.alphaInv = invertMap(p.alpha);
    p.overflow = std::move(overflow);
    if (antipode) {
        expectAxes(*antipode, {inAxis(p.basis), outAxis(p.basis)}, "antipode");
        p.antipodeInv = invertMap(*antipode);
        p.antipode = std::move(*antipode);
    }
    return p;
}

AlgebraPresentation HopfPresentation::algebraPart() const {
    AlgebraPresentation p;
    p.basis = basis;
    p.m = m;
    p.unit = unit;
    p.alpha = alpha;
    p.alphaInv = alphaInv;
    p.overflow = overflow;
    return p;
}

CoalgebraPresentation HopfPresentation::coalgebraPart() const {
    CoalgebraPresentation p;
    p.basis = basis;
    p.delta = delta;
    p.counit = counit;
    p.gamma = alpha;
    p.gammaInv = alphaInv;
    return p;
}

bool HopfPresentation::involutive() const {
    return contract(alpha, alpha, {{1, 0}}) == Tensor::identityMap(basis);
}

bool HopfPresentation::operator==(const HopfPresentation& other) const {
    return *basis == *other.basis && m == other.m && unit == other.unit &&
           delta == other.delta && counit == other.counit && alpha == other.alpha &&
           antipode == other.antipode && overflow == other.overflow;
}

std::optional<Tensor> mulElem(const Tensor& m, const OverflowSet& overflow,
                              const Tensor& x, const Tensor& y) {
    if (!overflow.empty()) {
        for (const auto& [ix, vx] : x.entries())
            for (const auto& [iy, vy] : y.entries())
                if (overflow.count({ix[0], iy[0]})) return std::nullopt;
    }
    return applyMap(kron(x, y), m, {0, 1});
}

std::optional<Tensor> mulAxes(const Tensor& m, const OverflowSet& overflow,
                              const Tensor& element, int axisA, int axisB) {
    if (!overflow.empty()) {
        for (const auto& [idx, v] : element.entries())
            if (overflow.count({idx[axisA], idx[axisB]})) return std::nullopt;
    }
    return applyMap(element, m, {axisA, axisB});
}

Scalar counitElem(const Tensor& counit, const Tensor& x) {
    Scalar s = 0;
    for (const auto& [idx, v] : x.entries()) s += counit.at({idx[0]}) * v;
    return s;
}

} // namespace homkernel
