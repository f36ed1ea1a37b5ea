#pragma once

#include <optional>
#include <vector>

#include "homkernel/tensor.hpp"

namespace homkernel {

using QVec = std::vector<Scalar>;

/// Dense row-major rational matrix. Row reduction is plain fraction-free-less
/// Gauss-Jordan over Q; pivot columns are taken left to right, which realizes
/// the graded-lex pivot rule whenever columns follow the basis order.
struct RationalMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Scalar> a;

    RationalMatrix() = default;
    RationalMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Scalar& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Scalar& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    void appendRow(const QVec& row);
};

struct RrefResult {
    RationalMatrix mat;
    std::vector<int> pivots;
    int rank = 0;
};

RrefResult rref(RationalMatrix m);

/// Canonical kernel basis of the stacked system, one vector per free column
/// in ascending column order.
std::vector<QVec> nullspaceBasis(const RationalMatrix& m);

/// Joint kernel of a family of linear maps out of one space. Every row tensor
/// must have exactly one In axis (the common domain); its Out axes are
/// flattened into conditions. Empty kernel returns an empty list.
std::vector<QVec> solveNullspace(const std::vector<Tensor>& rowMaps);

/// Exact inverse of a square map tensor ([in, out] over one basis).
/// Throws NotInvertibleError on singular input.
Tensor invertMap(const Tensor& t);

RationalMatrix matrixOfMap(const Tensor& t);

QVec tensorToQVec(const Tensor& rank1);
Tensor qvecToTensor(const BasisPtr& basis, const QVec& v);

/// A subspace of Q^n kept as a fully reduced row echelon basis: unit pivots,
/// ascending pivot columns, zeros above and below each pivot. Canonical, so
/// equal subspaces have byte-identical bases.
class Subspace {
public:
    explicit Subspace(int ambient) : ambient_(ambient) {}

    static Subspace span(int ambient, const std::vector<QVec>& vectors);

    /// Adds a vector to the span; returns true when the dimension grew.
    bool insert(QVec v);
    bool contains(const QVec& v) const;
    /// Residual of v after eliminating all pivot coordinates.
    QVec reduce(QVec v) const;

    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient() const { return ambient_; }
    const std::vector<QVec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    static Subspace sum(const Subspace& a, const Subspace& b);
    static Subspace intersection(const Subspace& a, const Subspace& b);

    bool operator==(const Subspace& other) const {
        return ambient_ == other.ambient_ && rows_ == other.rows_;
    }

private:
    int ambient_;
    std::vector<QVec> rows_;
    std::vector<int> pivots_;
};

} // namespace homkernel
