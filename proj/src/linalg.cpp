#include "homkernel/linalg.hpp"

#include <algorithm>

namespace homkernel {

void RationalMatrix::appendRow(const QVec& row) {
    if (cols == 0 && rows == 0) cols = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols)
        throw StructuralError("row length does not match matrix width");
    a.insert(a.end(), row.begin(), row.end());
    ++rows;
}

RrefResult rref(RationalMatrix m) {
    RrefResult res;
    int lead = 0;
    for (int c = 0; c < m.cols && lead < m.rows; ++c) {
        int p = -1;
        for (int r = lead; r < m.rows; ++r)
            if (!isZero(m.at(r, c))) { p = r; break; }
        if (p < 0) continue;
        if (p != lead)
            for (int k = 0; k < m.cols; ++k) std::swap(m.at(p, k), m.at(lead, k));
        Scalar inv = 1 / m.at(lead, c);
        for (int k = c; k < m.cols; ++k) m.at(lead, k) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == lead || isZero(m.at(r, c))) continue;
            Scalar f = m.at(r, c);
            for (int k = c; k < m.cols; ++k) m.at(r, k) -= f * m.at(lead, k);
        }
        res.pivots.push_back(c);
        ++lead;
    }
    res.rank = static_cast<int>(res.pivots.size());
    res.mat = std::move(m);
    return res;
}

std::vector<QVec> nullspaceBasis(const RationalMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> isPivot(m.cols, false);
    for (int c : r.pivots) isPivot[c] = true;
    std::vector<QVec> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (isPivot[f]) continue;
        QVec v(m.cols, Scalar(0));
        v[f] = 1;
        for (int row = 0; row < r.rank; ++row)
            v[r.pivots[row]] = -r.mat.at(row, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<QVec> solveNullspace(const std::vector<Tensor>& rowMaps) {
    if (rowMaps.empty())
        throw StructuralError("solveNullspace needs at least one row map");
    BasisPtr domain;
    for (const auto& t : rowMaps) {
        int inCount = 0;
        for (const auto& ax : t.axes())
            if (ax.variance == Variance::In) ++inCount;
        if (inCount != 1 || t.axes().empty() || t.axes()[0].variance != Variance::In)
            throw StructuralError("row map must have exactly one leading In axis");
        if (!domain)
            domain = t.axes()[0].basis;
        else if (!sameBasis(domain, t.axes()[0].basis))
            throw StructuralError("row maps act on different spaces");
    }
    const int d = domain->dim();
    RationalMatrix sys(0, d);
    for (const auto& t : rowMaps) {
        // One condition per Out multi-index.
        std::map<Tensor::Index, QVec> conditions;
        for (const auto& [idx, v] : t.entries()) {
            Tensor::Index outIdx(idx.begin() + 1, idx.end());
            auto [it, inserted] = conditions.try_emplace(outIdx, QVec(d, Scalar(0)));
            it->second[idx[0]] = v;
        }
        for (auto& [outIdx, row] : conditions) sys.appendRow(row);
    }
    if (sys.rows == 0) {
        // Zero map: the kernel is everything.
        std::vector<QVec> all;
        for (int i = 0; i < d; ++i) {
            QVec v(d, Scalar(0));
            v[i] = 1;
            all.push_back(std::move(v));
        }
        return all;
    }
    return nullspaceBasis(sys);
}

RationalMatrix matrixOfMap(const Tensor& t) {
    if (t.arity() != 2 || t.axes()[0].variance != Variance::In ||
        t.axes()[1].variance != Variance::Out ||
        !sameBasis(t.axes()[0].basis, t.axes()[1].basis))
        throw StructuralError("expected a square [in, out] map tensor");
    const int d = t.axes()[0].basis->dim();
    RationalMatrix m(d, d);
    for (const auto& [idx, v] : t.entries()) m.at(idx[0], idx[1]) = v;
    return m;
}

Tensor invertMap(const Tensor& t) {
    RationalMatrix m = matrixOfMap(t);
    const int d = m.rows;
    // Gauss-Jordan on [M | I]; rows index inputs, so the inverse drops out
    // transposed the same way the input was laid out.
    RationalMatrix aug(d, 2 * d);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, d + r) = 1;
    }
    RrefResult red = rref(std::move(aug));
    if (red.rank < d || red.pivots[d - 1] >= d)
        throw NotInvertibleError("map on basis '" + t.axes()[0].basis->name() +
                                 "' is singular");
    Tensor inv({inAxis(t.axes()[0].basis), outAxis(t.axes()[0].basis)});
    // red.mat is [I | M^-1]; the inverse uses the same (in-row, out-col)
    // layout as the input, since M M^-1 = I in that layout.
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            inv.set({r, c}, red.mat.at(r, d + c));
    return inv;
}

QVec tensorToQVec(const Tensor& rank1) {
    if (rank1.arity() != 1 || rank1.axes()[0].variance != Variance::Out)
        throw StructuralError("expected a rank-1 Out tensor");
    QVec v(rank1.axes()[0].basis->dim(), Scalar(0));
    for (const auto& [idx, c] : rank1.entries()) v[idx[0]] = c;
    return v;
}

Tensor qvecToTensor(const BasisPtr& basis, const QVec& v) {
    if (static_cast<int>(v.size()) != basis->dim())
        throw StructuralError("vector length does not match basis dimension");
    Tensor t({outAxis(basis)});
    for (int i = 0; i < basis->dim(); ++i)
        if (!isZero(v[i])) t.set({i}, v[i]);
    return t;
}

Subspace Subspace::span(int ambient, const std::vector<QVec>& vectors) {
    Subspace s(ambient);
    for (const auto& v : vectors) s.insert(v);
    return s;
}

QVec Subspace::reduce(QVec v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw StructuralError("vector does not live in the subspace's ambient space");
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = v[pivots_[r]];
        if (isZero(c)) continue;
        Scalar f = c;
        for (int k = 0; k < ambient_; ++k) v[k] -= f * rows_[r][k];
    }
    return v;
}

bool Subspace::insert(QVec v) {
    v = reduce(std::move(v));
    int pivot = -1;
    for (int k = 0; k < ambient_; ++k)
        if (!isZero(v[k])) { pivot = k; break; }
    if (pivot < 0) return false;
    Scalar inv = 1 / v[pivot];
    for (auto& x : v) x *= inv;
    // Clear the new pivot column in the existing rows, then keep rows sorted
    // by pivot so the basis stays canonical.
    for (size_t r = 0; r < rows_.size(); ++r) {
        Scalar f = rows_[r][pivot];
        if (isZero(f)) continue;
        for (int k = 0; k < ambient_; ++k) rows_[r][k] -= f * v[k];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    size_t at = pos - pivots_.begin();
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + at, std::move(v));
    return true;
}

bool Subspace::contains(const QVec& v) const {
    QVec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Scalar& x) { return isZero(x); });
}

Subspace Subspace::sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_)
        throw StructuralError("subspace sum with different ambient spaces");
    Subspace s = a;
    for (const auto& row : b.rows_) s.insert(row);
    return s;
}

Subspace Subspace::intersection(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_)
        throw StructuralError("subspace intersection with different ambient spaces");
    // Solve sums of a-rows equal to sums of b-rows: kernel of [A^T | -B^T].
    const int na = a.dim(), nb = b.dim();
    Subspace s(a.ambient_);
    if (na == 0 || nb == 0) return s;
    RationalMatrix sys(a.ambient_, na + nb);
    for (int k = 0; k < a.ambient_; ++k) {
        for (int r = 0; r < na; ++r) sys.at(k, r) = a.rows_[r][k];
        for (int r = 0; r < nb; ++r) sys.at(k, na + r) = -b.rows_[r][k];
    }
    for (const QVec& sol : nullspaceBasis(sys)) {
        QVec v(a.ambient_, Scalar(0));
        for (int r = 0; r < na; ++r)
            for (int k = 0; k < a.ambient_; ++k) v[k] += sol[r] * a.rows_[r][k];
        s.insert(std::move(v));
    }
    return s;
}

} // namespace homkernel
