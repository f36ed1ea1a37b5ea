#include "homkernel/tensor.hpp"

#include <algorithm>
#include <sstream>

namespace homkernel {

namespace {
const Scalar kZero = 0;
}

void Tensor::checkIndex(const Index& idx) const {
    if (static_cast<int>(idx.size()) != arity())
        throw StructuralError("index arity " + std::to_string(idx.size()) +
                              " does not match tensor arity " + std::to_string(arity()));
    for (int k = 0; k < arity(); ++k) {
        if (idx[k] < 0 || idx[k] >= axes_[k].basis->dim())
            throw StructuralError("index " + std::to_string(idx[k]) +
                                  " out of range for basis '" + axes_[k].basis->name() +
                                  "' (dim " + std::to_string(axes_[k].basis->dim()) + ")");
    }
}

const Scalar& Tensor::at(const Index& idx) const {
    checkIndex(idx);
    auto it = entries_.find(idx);
    return it == entries_.end() ? kZero : it->second;
}

void Tensor::set(const Index& idx, Scalar value) {
    checkIndex(idx);
    if (homkernel::isZero(value))
        entries_.erase(idx);
    else
        entries_[idx] = std::move(value);
}

void Tensor::add(const Index& idx, const Scalar& value) {
    if (homkernel::isZero(value)) return;
    checkIndex(idx);
    auto [it, inserted] = entries_.try_emplace(idx, value);
    if (!inserted) {
        it->second += value;
        if (homkernel::isZero(it->second)) entries_.erase(it);
    }
}

bool compatibleAxes(const std::vector<Axis>& a, const std::vector<Axis>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].variance != b[i].variance || !sameBasis(a[i].basis, b[i].basis))
            return false;
    return true;
}

Tensor& Tensor::operator+=(const Tensor& other) {
    if (!compatibleAxes(axes_, other.axes_))
        throw StructuralError("tensor addition with mismatched axes");
    for (const auto& [idx, v] : other.entries_) add(idx, v);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
    if (!compatibleAxes(axes_, other.axes_))
        throw StructuralError("tensor subtraction with mismatched axes");
    for (const auto& [idx, v] : other.entries_) add(idx, -v);
    return *this;
}

Tensor& Tensor::operator*=(const Scalar& c) {
    if (homkernel::isZero(c)) {
        entries_.clear();
        return *this;
    }
    for (auto& [idx, v] : entries_) v *= c;
    return *this;
}

Tensor Tensor::operator-() const {
    Tensor r(*this);
    for (auto& [idx, v] : r.entries_) v = -v;
    return r;
}

bool Tensor::operator==(const Tensor& other) const {
    return compatibleAxes(axes_, other.axes_) && entries_ == other.entries_;
}

Tensor Tensor::identityMap(const BasisPtr& b) {
    Tensor t({inAxis(b), outAxis(b)});
    for (int i = 0; i < b->dim(); ++i) t.set({i, i}, 1);
    return t;
}

Tensor Tensor::basisVector(const BasisPtr& b, int i) {
    Tensor t({outAxis(b)});
    t.set({i}, 1);
    return t;
}

Tensor contract(const Tensor& a, const Tensor& b,
                const std::vector<std::pair<int, int>>& pairs) {
    std::vector<bool> usedA(a.arity(), false), usedB(b.arity(), false);
    for (const auto& [i, j] : pairs) {
        if (i < 0 || i >= a.arity() || j < 0 || j >= b.arity())
            throw StructuralError("contraction axis out of range");
        if (usedA[i] || usedB[j])
            throw StructuralError("contraction axis used twice");
        const Axis& ax = a.axes()[i];
        const Axis& bx = b.axes()[j];
        if (!sameBasis(ax.basis, bx.basis))
            throw StructuralError("contraction joins axes over different bases ('" +
                                  ax.basis->name() + "' vs '" + bx.basis->name() + "')");
        if (ax.variance == bx.variance)
            throw StructuralError("contraction joins two axes of the same variance");
        usedA[i] = usedB[j] = true;
    }

    std::vector<int> freeA, freeB;
    std::vector<Axis> axes;
    for (int i = 0; i < a.arity(); ++i)
        if (!usedA[i]) { freeA.push_back(i); axes.push_back(a.axes()[i]); }
    for (int j = 0; j < b.arity(); ++j)
        if (!usedB[j]) { freeB.push_back(j); axes.push_back(b.axes()[j]); }

    Tensor result(std::move(axes));
    Tensor::Index idx(result.arity());
    for (const auto& [ia, va] : a.entries()) {
        for (const auto& [ib, vb] : b.entries()) {
            bool match = true;
            for (const auto& [i, j] : pairs)
                if (ia[i] != ib[j]) { match = false; break; }
            if (!match) continue;
            int k = 0;
            for (int i : freeA) idx[k++] = ia[i];
            for (int j : freeB) idx[k++] = ib[j];
            result.add(idx, va * vb);
        }
    }
    return result;
}

Tensor kron(const Tensor& a, const Tensor& b) {
    std::vector<Axis> axes = a.axes();
    axes.insert(axes.end(), b.axes().begin(), b.axes().end());
    Tensor result(std::move(axes));
    Tensor::Index idx(result.arity());
    for (const auto& [ia, va] : a.entries()) {
        std::copy(ia.begin(), ia.end(), idx.begin());
        for (const auto& [ib, vb] : b.entries()) {
            std::copy(ib.begin(), ib.end(), idx.begin() + ia.size());
            result.add(idx, va * vb);
        }
    }
    return result;
}

Tensor permuted(const Tensor& t, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != t.arity())
        throw StructuralError("permutation arity mismatch");
    std::vector<bool> seen(perm.size(), false);
    std::vector<Axis> axes(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] < 0 || perm[i] >= t.arity() || seen[perm[i]])
            throw StructuralError("invalid axis permutation");
        seen[perm[i]] = true;
        axes[i] = t.axes()[perm[i]];
    }
    Tensor result(std::move(axes));
    Tensor::Index idx(perm.size());
    for (const auto& [ia, v] : t.entries()) {
        for (size_t i = 0; i < perm.size(); ++i) idx[i] = ia[perm[i]];
        result.set(idx, v);
    }
    return result;
}

Tensor applyMap(const Tensor& element, const Tensor& map,
                const std::vector<int>& positions) {
    const int k = static_cast<int>(positions.size());
    if (map.arity() < k)
        throw StructuralError("map arity smaller than number of consumed axes");
    for (int i = 0; i < k; ++i) {
        if (map.axes()[i].variance != Variance::In)
            throw StructuralError("map input axes must come first and be In");
        int p = positions[i];
        if (p < 0 || p >= element.arity())
            throw StructuralError("applyMap position out of range");
        if (element.axes()[p].variance != Variance::Out)
            throw StructuralError("applyMap consumes only Out axes");
        if (!sameBasis(element.axes()[p].basis, map.axes()[i].basis))
            throw StructuralError("applyMap basis mismatch on axis " + std::to_string(p));
    }

    std::vector<bool> consumed(element.arity(), false);
    for (int p : positions) {
        if (consumed[p]) throw StructuralError("applyMap position used twice");
        consumed[p] = true;
    }
    const int insertAt = positions.empty() ? 0 : positions[0];

    std::vector<Axis> axes;
    for (int i = 0; i < element.arity(); ++i) {
        if (i == insertAt)
            for (int j = k; j < map.arity(); ++j) axes.push_back(map.axes()[j]);
        if (!consumed[i]) axes.push_back(element.axes()[i]);
    }
    if (insertAt == element.arity())
        for (int j = k; j < map.arity(); ++j) axes.push_back(map.axes()[j]);

    Tensor result(std::move(axes));
    Tensor::Index idx(result.arity());
    for (const auto& [ie, ve] : element.entries()) {
        for (const auto& [im, vm] : map.entries()) {
            bool match = true;
            for (int i = 0; i < k; ++i)
                if (ie[positions[i]] != im[i]) { match = false; break; }
            if (!match) continue;
            int w = 0;
            for (int i = 0; i < element.arity(); ++i) {
                if (i == insertAt)
                    for (int j = k; j < map.arity(); ++j) idx[w++] = im[j];
                if (!consumed[i]) idx[w++] = ie[i];
            }
            if (insertAt == element.arity())
                for (int j = k; j < map.arity(); ++j) idx[w++] = im[j];
            result.add(idx, ve * vm);
        }
    }
    return result;
}

std::string formatElement(const Tensor& t) {
    if (t.isZero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [idx, v] : t.entries()) {
        Scalar c = v;
        if (first) {
            if (c < 0) { out << "-"; c = -c; }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        std::string word;
        for (size_t k = 0; k < idx.size(); ++k) {
            if (k) word += ".";
            word += t.axes()[k].basis->label(idx[k]);
        }
        if (c != 1)
            out << toString(c) << "*";
        out << word;
    }
    return out.str();
}

} // namespace homkernel
