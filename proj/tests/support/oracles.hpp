#pragma once

// Test-only brute-force implementations. These deliberately avoid the sparse
// iteration paths in the library so the two routes are independent.

#include <random>
#include <vector>

#include "homkernel/linalg.hpp"
#include "homkernel/tensor.hpp"

namespace homkernel::testsupport {

inline std::vector<Tensor::Index> allIndices(const std::vector<Axis>& axes) {
    std::vector<Tensor::Index> out;
    Tensor::Index idx(axes.size(), 0);
    while (true) {
        out.push_back(idx);
        int k = static_cast<int>(axes.size()) - 1;
        while (k >= 0) {
            if (++idx[k] < axes[k].basis->dim()) break;
            idx[k] = 0;
            --k;
        }
        if (k < 0) break;
        if (axes.empty()) break;
    }
    if (axes.empty()) out.resize(1);
    return out;
}

/// Dense triple-loop contraction: enumerates every index tuple of both
/// tensors and sums products where the paired indices agree.
inline Tensor naiveContract(const Tensor& a, const Tensor& b,
                            const std::vector<std::pair<int, int>>& pairs) {
    std::vector<bool> usedA(a.arity(), false), usedB(b.arity(), false);
    for (auto [i, j] : pairs) usedA[i] = true, usedB[j] = true;
    std::vector<Axis> freeAxes;
    std::vector<int> freeA, freeB;
    for (int i = 0; i < a.arity(); ++i)
        if (!usedA[i]) { freeAxes.push_back(a.axes()[i]); freeA.push_back(i); }
    for (int j = 0; j < b.arity(); ++j)
        if (!usedB[j]) { freeAxes.push_back(b.axes()[j]); freeB.push_back(j); }

    Tensor result(freeAxes);
    for (const auto& ia : allIndices(a.axes())) {
        for (const auto& ib : allIndices(b.axes())) {
            bool match = true;
            for (auto [i, j] : pairs)
                if (ia[i] != ib[j]) { match = false; break; }
            if (!match) continue;
            Scalar prod = a.at(ia) * b.at(ib);
            if (isZero(prod)) continue;
            Tensor::Index idx;
            for (int i : freeA) idx.push_back(ia[i]);
            for (int j : freeB) idx.push_back(ib[j]);
            result.add(idx, prod);
        }
    }
    return result;
}

/// Quadruple-loop outer product.
inline Tensor naiveKron(const Tensor& a, const Tensor& b) {
    std::vector<Axis> axes = a.axes();
    axes.insert(axes.end(), b.axes().begin(), b.axes().end());
    Tensor result(axes);
    for (const auto& ia : allIndices(a.axes())) {
        for (const auto& ib : allIndices(b.axes())) {
            Scalar prod = a.at(ia) * b.at(ib);
            if (isZero(prod)) continue;
            Tensor::Index idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            result.add(idx, prod);
        }
    }
    return result;
}

inline Scalar randomScalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    return Scalar(num(rng), den(rng));
}

inline Tensor randomTensor(const std::vector<Axis>& axes, unsigned seed,
                           double density = 0.5) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Tensor t(axes);
    for (const auto& idx : allIndices(axes))
        if (coin(rng) < density) t.set(idx, randomScalar(rng));
    return t;
}

inline QVec randomQVec(int n, unsigned seed) {
    std::mt19937 rng(seed);
    QVec v(n);
    for (auto& x : v) x = randomScalar(rng);
    return v;
}

} // namespace homkernel::testsupport
