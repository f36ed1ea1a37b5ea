#include "doctest.h"

#include "homkernel/builtins.hpp"
#include "homkernel/hom_yd.hpp"
#include "homkernel/linalg.hpp"

using namespace homkernel;
namespace bi = homkernel::builtins;

namespace {

bool axiomFails(const Report& rep, const std::string& name) {
    for (const auto& ax : rep.axioms())
        if (ax.axiom == name) return !ax.pass();
    return false;
}

/// Straight-line evaluation of the braiding formula on one basis pair,
/// independent of the tensor pipeline: walks the raw structure-constant
/// entries with explicit loops.
Tensor braidingOracle(const YDModulePresentation& yd, int i, int j) {
    const int dm = yd.basis->dim();
    Tensor out({outAxis(yd.basis), outAxis(yd.basis)});
    // nuInv(e_j)
    std::vector<Scalar> nj(dm, Scalar(0));
    for (const auto& [idx, v] : yd.betaInv.entries())
        if (idx[0] == j) nj[idx[1]] = v;
    for (const auto& [cidx, cv] : yd.coaction.entries()) {
        if (cidx[0] != i) continue;
        int t = cidx[1], u = cidx[2];
        // (h_t . nuInv(e_j)) x beta(e_u)
        for (int l = 0; l < dm; ++l) {
            if (isZero(nj[l])) continue;
            for (const auto& [aidx, av] : yd.action.entries()) {
                if (aidx[0] != t || aidx[1] != l) continue;
                for (const auto& [bidx, bv] : yd.beta.entries()) {
                    if (bidx[0] != u) continue;
                    out.add({aidx[2], bidx[1]}, cv * nj[l] * av * bv);
                }
            }
        }
    }
    return out;
}

RationalMatrix braidingAsMatrix(const Tensor& C, int dm, int dn) {
    RationalMatrix mat(dm * dn, dn * dm);
    for (const auto& [idx, v] : C.entries())
        mat.at(idx[0] * dn + idx[1], idx[2] * dm + idx[3]) = v;
    return mat;
}

} // namespace

TEST_CASE("a4 is a Hom-module, Hom-comodule and compatible") {
    const auto& a = *bi::a4();
    CHECK(check_hom_module(a.module).pass());
    CHECK(check_hom_comodule(a.module).pass());
    CHECK(check_yd_compatibility(a.module).pass());
    CHECK(check_yd_algebra(a).pass());
}

TEST_CASE("trivial action and coaction form a module over any Hopf builtin") {
    for (const auto& yd :
         {bi::trivAbelian(3), bi::superspace(2, 1), bi::coadjoint(bi::h2())}) {
        CHECK(check_hom_module(*yd).pass());
        CHECK(check_hom_comodule(*yd).pass());
    }
}

TEST_CASE("adjoint and coadjoint structures are compatible") {
    auto adj = bi::adjoint(bi::h2());
    CHECK(check_yd_module_suite(adj->module).pass());
    CHECK(check_yd_algebra(*adj).pass());

    auto coadj = bi::coadjoint(bi::h2());
    CHECK(check_yd_module_suite(*coadj).pass());

    auto adjK = bi::adjoint(bi::kz2());
    CHECK(check_yd_module_suite(adjK->module).pass());
}

TEST_CASE("perturbed action breaks the module axioms with the right witness") {
    bi::PerturbationSeed seed{"a4-action-hx", "a4", "action", {1, 1, 1}, 1, ""};
    Report rep = check_hom_module(bi::perturbedYDAlgebra(seed).module);
    CHECK(axiomFails(rep, "hom-module-associativity"));
}

TEST_CASE("perturbed coaction breaks comodule counitality") {
    bi::PerturbationSeed seed{"a4-coaction-x", "a4", "coaction", {1, 0, 1}, 1, ""};
    Report rep = check_hom_comodule(bi::perturbedYDAlgebra(seed).module);
    CHECK(axiomFails(rep, "hom-comodule-counit"));
}

TEST_CASE("the braiding of a4 is the flip on all 16 basis pairs") {
    const auto& a = *bi::a4();
    Tensor C = braiding(a.module, a.module);
    const int d = a.basis()->dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Tensor expect({outAxis(a.basis()), outAxis(a.basis())});
            expect.set({j, i}, 1);
            Tensor got = applyMap(
                kron(Tensor::basisVector(a.basis(), i), Tensor::basisVector(a.basis(), j)),
                C, {0, 1});
            CHECK(got == expect);
        }
}

TEST_CASE("braiding matches the straight-line oracle on the adjoint module") {
    auto adj = bi::adjoint(bi::h2());
    Tensor C = braiding(adj->module, adj->module);
    const int d = adj->basis()->dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Tensor got = applyMap(
                kron(Tensor::basisVector(adj->basis(), i),
                     Tensor::basisVector(adj->basis(), j)),
                C, {0, 1});
            CHECK(got == braidingOracle(adj->module, i, j));
        }
}

TEST_CASE("braiding with identity twists and trivial coaction is the flip") {
    auto yd = bi::trivAbelian(2);
    Tensor C = braiding(*yd, *yd);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Tensor got = applyMap(
                kron(Tensor::basisVector(yd->basis, i), Tensor::basisVector(yd->basis, j)),
                C, {0, 1});
            Tensor expect({outAxis(yd->basis), outAxis(yd->basis)});
            expect.set({j, i}, 1);
            CHECK(got == expect);
        }
}

TEST_CASE("braiding rejects modules over different Hopf presentations") {
    auto a = bi::a4();
    auto t = bi::trivAbelian(2);
    CHECK_THROWS_AS(braiding(a->module, *t), StructuralError);
}

TEST_CASE("braiding is invertible on every built-in module") {
    std::vector<std::shared_ptr<const YDModulePresentation>> mods = {
        std::make_shared<const YDModulePresentation>(bi::a4()->module),
        std::make_shared<const YDModulePresentation>(bi::adjoint(bi::h2())->module),
        bi::coadjoint(bi::h2()),
        bi::superspace(1, 1),
        bi::trivAbelian(3),
        std::make_shared<const YDModulePresentation>(bi::ut2()->module)};
    for (const auto& yd : mods) {
        const int d = yd->basis->dim();
        auto rank = rref(braidingAsMatrix(braiding(*yd, *yd), d, d)).rank;
        CHECK(rank == d * d);
    }
}

TEST_CASE("symmetric braidings and the double-braiding identity") {
    CHECK(check_braiding_symmetric(bi::a4()->module).pass());
    CHECK(check_braiding_symmetric(bi::adjoint(bi::h2())->module).pass());
    CHECK(check_braiding_symmetric(*bi::coadjoint(bi::h2())).pass());
    CHECK(check_braiding_symmetric(*bi::superspace(1, 1)).pass());

    // When symmetric, applying the braiding twice is the identity matrix.
    for (const auto& yd : {bi::a4()->module, bi::adjoint(bi::h2())->module}) {
        Tensor C = braiding(yd, yd);
        Tensor twice = contract(C, C, {{2, 0}, {3, 1}});
        Tensor id({inAxis(yd.basis), inAxis(yd.basis), outAxis(yd.basis), outAxis(yd.basis)});
        for (int i = 0; i < yd.basis->dim(); ++i)
            for (int j = 0; j < yd.basis->dim(); ++j)
                id.set({i, j, i, j}, 1);
        CHECK(twice == id);
    }
}

TEST_CASE("h-commutativity holds on the 1,g span but fails on all of a4") {
    const auto& a = *bi::a4();
    std::vector<Tensor> span = {Tensor::basisVector(a.basis(), 0),
                                Tensor::basisVector(a.basis(), 2)};
    CHECK(check_h_commutative_on(a, span, {"1", "g"}).pass());

    CHECK(check_h_commutative(*bi::triv(1)).pass());

    Report full = check_h_commutative(a);
    CHECK(!full.pass());
    bool sawWitness = false;
    for (const auto& ax : full.axioms())
        for (const auto& w : ax.witnesses)
            if (w.tuple == std::vector<std::string>{"x", "g"}) {
                sawWitness = true;
                CHECK(w.lhs == "-gx");
                CHECK(w.rhs == "gx");
            }
    CHECK(sawWitness);
}

TEST_CASE("h-cocommutativity: grouplike with trivial coaction passes, odd grading fails") {
    auto flat = bi::trivAbelian(2);
    Tensor delta({inAxis(flat->basis), outAxis(flat->basis), outAxis(flat->basis)});
    delta.set({0, 0, 0}, 1);
    delta.set({1, 1, 1}, 1);
    CHECK(check_h_cocommutative(*flat, delta).pass());

    auto super = bi::superspace(1, 1);
    Tensor deltaSuper({inAxis(super->basis), outAxis(super->basis), outAxis(super->basis)});
    deltaSuper.set({0, 0, 0}, 1);
    deltaSuper.set({1, 1, 1}, 1); // grouplike odd coordinate
    Report rep = check_h_cocommutative(*super, deltaSuper);
    CHECK(axiomFails(rep, "h-cocommutative"));
}

TEST_CASE("yd-algebra identities fail when the product is damaged") {
    bi::PerturbationSeed seed{"a4-m-xg", "a4", "m", {1, 2, 3}, -1, ""};
    auto broken = bi::perturbedYDAlgebra(seed);
    // The trivial action commutes with any product, so the damage surfaces in
    // the algebra axioms rather than the module-algebra ones.
    CHECK(!check_hom_algebra(broken.algebraPart()).pass());
}

TEST_CASE("the equivalent compatibility form agrees instancewise on perturbed data") {
    for (const auto& seedName : {"a4-action-hx", "a4-coaction-x", "a4-coaction-g"}) {
        for (const auto& seed : bi::perturbationSeeds()) {
            if (seed.name != seedName) continue;
            Report rep = check_yd_compatibility(bi::perturbedYDAlgebra(seed).module);
            CHECK(!axiomFails(rep, "yd-forms-agree"));
        }
    }
}
