#include "doctest.h"

#include "homkernel/tensor.hpp"
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

TEST_CASE("identity contracted with identity is the identity") {
    auto B = basisOfDim("B", 4);
    Tensor id = Tensor::identityMap(B);
    Tensor composed = contract(id, id, {{1, 0}});
    CHECK(composed == id);
}

TEST_CASE("contraction agrees with the dense enumeration oracle") {
    auto B3 = basisOfDim("B", 3);
    for (unsigned seed = 1; seed <= 8; ++seed) {
        Tensor a = randomTensor({outAxis(B3), outAxis(B3), outAxis(B3)}, seed, 0.4);
        Tensor m = randomTensor({inAxis(B3), inAxis(B3), outAxis(B3)}, seed + 100, 0.6);
        Tensor fast = contract(a, m, {{0, 0}, {2, 1}});
        Tensor slow = naiveContract(a, m, {{0, 0}, {2, 1}});
        CHECK(fast == slow);
    }
}

TEST_CASE("contraction agrees with the oracle on all shapes of dim <= 5") {
    for (int d = 1; d <= 5; ++d) {
        auto B = basisOfDim("B", d);
        Tensor f = randomTensor({inAxis(B), outAxis(B)}, 40 + d, 0.7);
        Tensor g = randomTensor({inAxis(B), outAxis(B)}, 80 + d, 0.7);
        CHECK(contract(f, g, {{1, 0}}) == naiveContract(f, g, {{1, 0}}));
    }
}

TEST_CASE("contraction rejects mismatched axes") {
    auto B = basisOfDim("B", 2);
    auto C = basisOfDim("C", 3);
    Tensor f = Tensor::identityMap(B);
    Tensor g = Tensor::identityMap(C);
    CHECK_THROWS_AS(contract(f, g, {{1, 0}}), StructuralError);
    // both Out
    CHECK_THROWS_AS(contract(f, f, {{1, 1}}), StructuralError);
}

TEST_CASE("kron of identities is the identity on the product") {
    auto B = basisOfDim("B", 2);
    Tensor id = Tensor::identityMap(B);
    Tensor k = kron(id, id);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    CHECK(k.at({i, j, a, b}) == Scalar((i == j && a == b) ? 1 : 0));
}

TEST_CASE("kron agrees with the quadruple-loop oracle") {
    auto B = basisOfDim("B", 2);
    for (unsigned seed = 11; seed <= 14; ++seed) {
        Tensor f = randomTensor({inAxis(B), outAxis(B)}, seed);
        Tensor g = randomTensor({inAxis(B), outAxis(B)}, seed + 7);
        CHECK(kron(f, g) == naiveKron(f, g));
    }
}

TEST_CASE("applyMap composes like contraction") {
    auto B = basisOfDim("B", 3);
    Tensor v = randomTensor({outAxis(B), outAxis(B)}, 5, 0.8);
    Tensor m = randomTensor({inAxis(B), inAxis(B), outAxis(B)}, 6, 0.8);
    Tensor viaApply = applyMap(v, m, {0, 1});
    Tensor viaOracle = naiveContract(v, m, {{0, 0}, {1, 1}});
    CHECK(viaApply == viaOracle);

    // Single-axis map on the middle axis of a rank-3 element.
    Tensor w = randomTensor({outAxis(B), outAxis(B), outAxis(B)}, 7, 0.5);
    Tensor f = randomTensor({inAxis(B), outAxis(B)}, 8, 0.9);
    Tensor got = applyMap(w, f, {1});
    Tensor expect = permuted(naiveContract(w, f, {{1, 0}}), {0, 2, 1});
    CHECK(got == expect);
}

TEST_CASE("permutation reorders axes deterministically") {
    auto B = basisOfDim("B", 2);
    auto C = basisOfDim("C", 3);
    Tensor t({outAxis(B), outAxis(C)});
    t.set({1, 2}, Scalar(5));
    Tensor p = permuted(t, {1, 0});
    CHECK(p.at({2, 1}) == Scalar(5));
    CHECK(p.axes()[0].basis->name() == "C");
}

TEST_CASE("determinism: identical inputs give identical sparse representations") {
    auto B = basisOfDim("B", 3);
    Tensor a = randomTensor({inAxis(B), outAxis(B)}, 99);
    Tensor b = randomTensor({inAxis(B), outAxis(B)}, 99);
    CHECK(a == b);
    CHECK(contract(a, b, {{1, 0}}).entries() == contract(b, a, {{1, 0}}).entries());
}

TEST_CASE("out-of-range writes are structural errors") {
    auto B = basisOfDim("B", 2);
    Tensor t({outAxis(B)});
    CHECK_THROWS_AS(t.set({2}, Scalar(1)), StructuralError);
    CHECK_THROWS_AS(t.set({0, 0}, Scalar(1)), StructuralError);
}

TEST_CASE("element formatting is stable and readable") {
    auto B = makeBasis("A", {"1", "x", "g", "gx"});
    Tensor t({outAxis(B)});
    t.set({2}, Scalar(1));
    t.set({3}, Scalar(-2));
    CHECK(formatElement(t) == "g - 2*gx");
    Tensor z({outAxis(B)});
    CHECK(formatElement(z) == "0");
}
