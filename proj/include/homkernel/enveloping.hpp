#pragma once

#include <memory>

#include "homkernel/braided_lie.hpp"

namespace homkernel {

/// Graded words of length 1..N over the bracket's basis, with the twisted
/// concatenation product, the letterwise twist, and the nested action and
/// coaction (tensor factors associated to the left). Products that would
/// exceed the degree window return nullopt.
class TruncatedTensorAlgebra {
public:
    /// Sparse combination of words, keyed by word index.
    using Lin = std::map<int, Scalar>;

    TruncatedTensorAlgebra(std::shared_ptr<const BraidedLiePresentation> lie,
                           int maxDegree);

    const BraidedLiePresentation& lie() const { return *lie_; }
    std::shared_ptr<const BraidedLiePresentation> liePtr() const { return lie_; }
    int maxDegree() const { return maxDegree_; }
    int letterCount() const { return letters_; }
    int wordCount() const { return static_cast<int>(words_.size()); }

    int degreeOf(int w) const { return static_cast<int>(words_[w].size()); }
    const std::vector<int>& letters(int w) const { return words_[w]; }
    int wordIndex(const std::vector<int>& letters) const;
    std::string label(int w) const;
    /// First word index of the given degree.
    int degreeOffset(int degree) const { return offsets_[degree]; }

    /// Letterwise twist of a word, expanded over the word basis.
    const Lin& betaT(int w) const { return betaCache_[w]; }
    Lin betaT(const Lin& v) const;

    /// Twisted concatenation of two basis words; nullopt past the window.
    std::optional<Lin> mul(int wa, int wb) const;
    std::optional<Lin> mul(const Lin& a, const Lin& b) const;

    /// Nested action of the h-th basis element of H.
    const Lin& act(int h, int w) const { return actCache_[h][w]; }
    Lin act(int h, const Lin& v) const;

    /// Nested coaction, one component per H basis element.
    const std::vector<Lin>& coact(int w) const { return coactCache_[w]; }

    QVec toQVec(const Lin& v) const;
    Lin fromQVec(const QVec& v) const;

    /// Coordinates with the graded-lex order reversed, so that row reduction
    /// pivots on the largest word of each relation and normal forms are the
    /// smallest representatives.
    QVec toLeadingQVec(const Lin& v) const;
    Lin fromLeadingQVec(const QVec& v) const;
    int flip(int w) const { return wordCount() - 1 - w; }

private:
    std::shared_ptr<const BraidedLiePresentation> lie_;
    int maxDegree_;
    int letters_;
    std::vector<std::vector<int>> words_;
    std::vector<int> offsets_;
    std::map<std::vector<int>, int> index_;
    std::vector<Lin> betaCache_;
    std::vector<std::vector<Lin>> actCache_;   // [h][word]
    std::vector<std::vector<Lin>> coactCache_; // [word][h]
};

struct IdealResult {
    /// Echelon span in leading-order coordinates (see toLeadingQVec).
    Subspace span;
    bool stabilizersImplied;    // twist/action/coaction closure added nothing

    bool contains(const TruncatedTensorAlgebra& words,
                  const TruncatedTensorAlgebra::Lin& v) const {
        return span.contains(words.toLeadingQVec(v));
    }
};

/// Requires an involutive source (twist on L and on H) and degree >= 2.
TruncatedTensorAlgebra build_tensor_algebra(
    std::shared_ptr<const BraidedLiePresentation> lie, int maxDegree);

/// Smallest subspace containing the bracket relations that is closed under
/// in-window multiplication by letters, the letterwise twist, the action and
/// the coaction components.
IdealResult build_ideal(const TruncatedTensorAlgebra& words);

/// The degree-truncated quotient with its Hopf tables over the normal-form
/// basis (adjoined unit at index 0, non-pivot monomials after it, in graded
/// lexicographic order). Multiplication entries past the window are listed
/// in hopf.overflow; every other table is total.
struct TruncatedEnveloping {
    std::shared_ptr<const BraidedLiePresentation> source;
    std::shared_ptr<const TruncatedTensorAlgebra> words;
    int maxDegree = 0;
    Subspace idealSpan{0};
    bool stabilizersImplied = true;
    std::vector<int> nfWords;      // word index per basis slot 1..dim-1
    std::vector<int> dimsByDegree; // index 0 = the adjoined unit line
    HopfPresentation hopf;         // over the normal-form basis
    YDModulePresentation ydModule; // action/coaction/twist over the source's H
    Tensor psi;                    // [in L, out U]

    const BasisPtr& basis() const { return hopf.basis; }
    int dim() const { return hopf.basis->dim(); }
    int degreeOfSlot(int nfIdx) const;
};

TruncatedEnveloping build_enveloping(std::shared_ptr<const BraidedLiePresentation> lie,
                                     int maxDegree);

/// Cumulative quotient dimensions per degree (0..N), computed with the basis
/// letters optionally enumerated in reverse: the filtration dimensions must
/// not depend on the order.
std::vector<int> quotientDims(const BraidedLiePresentation& lie, int maxDegree,
                              bool reversedLetterOrder);

/// Algebra axioms, coalgebra axioms, braided multiplicativity of the
/// coproduct, antipode convolution identities, and cocommutativity through
/// the braiding, evaluated on quotient tables (possibly re-loaded from a
/// document). Window-crossing instances are skipped and counted.
Report verify_enveloping_tables(const HopfPresentation& hopf,
                                const YDModulePresentation& yd, int witnessCap = 5);

/// The table sweep plus the generator tables (primitive coproduct, negated
/// antipode, zero counit on the image of the inclusion).
Report verify_enveloping_hopf(const TruncatedEnveloping& u, int witnessCap = 5);

/// A multiplication target for the universal-property extension.
struct ExtensionTarget {
    std::string name;
    BasisPtr basis;
    HopfPtr hopf;
    Tensor unit; // element
    std::function<std::optional<Tensor>(const Tensor&, const Tensor&)> mul;
    std::function<Tensor(const Tensor&)> twist;
    std::function<Tensor(const Tensor&)> twistInv;
    std::function<Tensor(const Tensor&, const Tensor&)> act; // (h element, x)
    std::function<Tensor(const Tensor&)> coact;              // -> [H, M]

    static ExtensionTarget fromYDAlgebra(
        std::shared_ptr<const YDAlgebraPresentation> a);
    static ExtensionTarget fromEnveloping(
        std::shared_ptr<const TruncatedEnveloping> u);
};

struct ExtensionResult {
    Report report;                 // morphism preconditions + extension checks
    std::optional<Tensor> matrix;  // [in U, out target] when preconditions hold
};

/// Extends a categorical Lie morphism f: L -> target to the quotient,
/// verifying that the extension vanishes on the whole ideal span and agrees
/// with f through the canonical inclusion. A nonzero ideal image is an
/// internal inconsistency and throws.
ExtensionResult extend_to_enveloping(const TruncatedEnveloping& u,
                                     const ExtensionTarget& target,
                                     const Tensor& f, int witnessCap = 5);

} // namespace homkernel
