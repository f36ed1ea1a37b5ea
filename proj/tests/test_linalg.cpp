#include "doctest.h"

#include "homkernel/linalg.hpp"
#include "support/oracles.hpp"

using namespace homkernel;
using namespace homkernel::testsupport;

namespace {
BasisPtr basisOfDim(const std::string& name, int d) {
    std::vector<std::string> labels;
    for (int i = 0; i < d; ++i) labels.push_back(name + std::to_string(i));
    return makeBasis(name, labels);
}
} // namespace

TEST_CASE("zero map has a full kernel") {
    auto B = basisOfDim("V", 3);
    Tensor zero({inAxis(B), outAxis(B)});
    auto kernel = solveNullspace({zero});
    REQUIRE(kernel.size() == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(kernel[i][j] == Scalar(i == j ? 1 : 0));
}

TEST_CASE("nullspace vectors multiply back to zero on random rank-2 systems") {
    for (unsigned seed = 3; seed <= 10; ++seed) {
        // 3x5 from two independent rows plus one dependent combination.
        RationalMatrix m(3, 5);
        QVec r0 = randomQVec(5, seed), r1 = randomQVec(5, seed + 50);
        for (int c = 0; c < 5; ++c) {
            m.at(0, c) = r0[c];
            m.at(1, c) = r1[c];
            m.at(2, c) = 2 * r0[c] - 3 * r1[c];
        }
        auto kernel = nullspaceBasis(m);
        if (rref(m).rank == 2) CHECK(kernel.size() == 3);
        for (const auto& v : kernel) {
            for (int r = 0; r < 3; ++r) {
                Scalar dot = 0;
                for (int c = 0; c < 5; ++c) dot += m.at(r, c) * v[c];
                CHECK(isZero(dot));
            }
        }
    }
}

TEST_CASE("kernel of beta minus identity on the twisted 4-dim algebra") {
    // beta fixes the first two coordinates and negates the last two.
    auto A = makeBasis("A", {"1", "x", "g", "gx"});
    Tensor betaMinusId({inAxis(A), outAxis(A)});
    betaMinusId.set({1, 1}, Scalar(-2));
    betaMinusId.set({3, 3}, Scalar(-2));
    auto kernel = solveNullspace({betaMinusId});
    REQUIRE(kernel.size() == 2);
    CHECK(kernel[0] == QVec{1, 0, 0, 0});
    CHECK(kernel[1] == QVec{0, 0, 1, 0});
}

TEST_CASE("invert_map inverts exactly") {
    auto B = basisOfDim("V", 4);
    SUBCASE("identity") {
        Tensor id = Tensor::identityMap(B);
        CHECK(invertMap(id) == id);
    }
    SUBCASE("an involution is its own inverse") {
        Tensor alpha({inAxis(B), outAxis(B)});
        alpha.set({0, 0}, 1);
        alpha.set({1, 1}, -1);
        alpha.set({2, 2}, 1);
        alpha.set({3, 3}, -1);
        CHECK(invertMap(alpha) == alpha);
    }
    SUBCASE("random invertible matrix composes to the identity") {
        for (unsigned seed = 21; seed <= 26; ++seed) {
            Tensor t = randomTensor({inAxis(B), outAxis(B)}, seed, 0.8);
            bool invertible = true;
            Tensor inv;
            try {
                inv = invertMap(t);
            } catch (const NotInvertibleError&) {
                invertible = false;
            }
            if (!invertible) continue;
            CHECK(contract(t, inv, {{1, 0}}) == Tensor::identityMap(B));
            CHECK(contract(inv, t, {{1, 0}}) == Tensor::identityMap(B));
        }
    }
    SUBCASE("singular maps are rejected") {
        Tensor t({inAxis(B), outAxis(B)});
        t.set({0, 0}, 1);
        CHECK_THROWS_AS(invertMap(t), NotInvertibleError);
    }
}

TEST_CASE("subspace echelon form is canonical") {
    Subspace s(4);
    CHECK(s.insert({0, 2, 0, 4}));
    CHECK(s.insert({1, 1, 0, 0}));
    CHECK(!s.insert({1, 3, 0, 4}));  // dependent
    CHECK(s.dim() == 2);
    CHECK(s.pivots() == std::vector<int>{0, 1});
    // Fully reduced rows with unit pivots.
    CHECK(s.rows()[0] == QVec{1, 0, 0, -2});
    CHECK(s.rows()[1] == QVec{0, 1, 0, 2});
    CHECK(s.contains({2, 2, 0, 0}));
    CHECK(!s.contains({0, 0, 1, 0}));

    // Insertion order does not matter.
    Subspace t = Subspace::span(4, {{1, 1, 0, 0}, {1, 3, 0, 4}, {0, 2, 0, 4}});
    CHECK(s == t);
}

TEST_CASE("subspace sum and intersection") {
    Subspace a = Subspace::span(3, {{1, 0, 0}, {0, 1, 0}});
    Subspace b = Subspace::span(3, {{0, 1, 0}, {0, 0, 1}});
    CHECK(Subspace::sum(a, b).dim() == 3);
    Subspace meet = Subspace::intersection(a, b);
    REQUIRE(meet.dim() == 1);
    CHECK(meet.rows()[0] == QVec{0, 1, 0});
}
