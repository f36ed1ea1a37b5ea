#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "homkernel/basis.hpp"
#include "homkernel/scalar.hpp"

namespace homkernel {

enum class Variance { In, Out };

struct Axis {
    BasisPtr basis;
    Variance variance = Variance::Out;
};

inline Axis inAxis(BasisPtr b) { return Axis{std::move(b), Variance::In}; }
inline Axis outAxis(BasisPtr b) { return Axis{std::move(b), Variance::Out}; }

/// Sparse multi-index array of exact rationals over named bases.
///
/// Structure constants and elements share this one representation: a map
/// with k inputs and r outputs is stored with its k In axes first, and an
/// element of a tensor-product space is a tensor whose axes are all Out.
/// Only nonzero entries are stored; entry order is canonical (lexicographic
/// on the multi-index), so equal tensors have identical representations.
class Tensor {
public:
    using Index = std::vector<int>;
    using EntryMap = std::map<Index, Scalar>;

    Tensor() = default;
    explicit Tensor(std::vector<Axis> axes) : axes_(std::move(axes)) {}

    const std::vector<Axis>& axes() const { return axes_; }
    int arity() const { return static_cast<int>(axes_.size()); }
    const EntryMap& entries() const { return entries_; }
    bool isZero() const { return entries_.empty(); }

    /// Entry at a multi-index; absent entries read as zero.
    const Scalar& at(const Index& idx) const;
    void set(const Index& idx, Scalar value);
    void add(const Index& idx, const Scalar& value);

    Tensor& operator+=(const Tensor& other);
    Tensor& operator-=(const Tensor& other);
    Tensor& operator*=(const Scalar& c);
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(const Scalar& c, Tensor t) { return t *= c; }
    Tensor operator-() const;

    /// Exact equality: compatible axes and identical entries.
    bool operator==(const Tensor& other) const;
    bool operator!=(const Tensor& other) const { return !(*this == other); }

    static Tensor zero(std::vector<Axis> axes) { return Tensor(std::move(axes)); }
    /// Identity map on a basis, axes [in, out].
    static Tensor identityMap(const BasisPtr& b);
    /// Coordinate vector of the i-th basis element, a single Out axis.
    static Tensor basisVector(const BasisPtr& b, int i);

    void checkIndex(const Index& idx) const;

private:
    std::vector<Axis> axes_;
    EntryMap entries_;
};

/// True when the axis lists pair up with equal bases and variances.
bool compatibleAxes(const std::vector<Axis>& a, const std::vector<Axis>& b);

/// Exact sum over paired indices. Each pair (i, j) joins axis i of `a` with
/// axis j of `b`; the two must share a basis and have opposite variance.
/// Remaining axes are ordered a-axes then b-axes.
Tensor contract(const Tensor& a, const Tensor& b,
                const std::vector<std::pair<int, int>>& pairs);

/// Outer product; axes concatenated.
Tensor kron(const Tensor& a, const Tensor& b);

/// Axis permutation: result axis i is input axis perm[i].
Tensor permuted(const Tensor& t, const std::vector<int>& perm);

/// Applies a map tensor (k In axes first, then Out axes) to k axes of an
/// element. The consumed element axes must be Out and match the map's In
/// bases in order; the map's Out axes replace them at the position of
/// positions[0].
Tensor applyMap(const Tensor& element, const Tensor& map,
                const std::vector<int>& positions);

/// Renders an all-Out tensor as a readable combination, e.g. "2*x.g - gx".
std::string formatElement(const Tensor& t);

} // namespace homkernel
