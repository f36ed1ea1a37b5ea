#pragma once

#include <functional>

#include "homkernel/endv_biproduct.hpp"

namespace homkernel {

/// One tensor section of a document: axis specs name bases symbolically so
/// a document can reference the Hopf presentation it sits over.
struct RawTensor {
    std::string name;
    std::vector<std::pair<std::string, bool>> axes; // (basis name, is input)
    std::vector<std::pair<Tensor::Index, Scalar>> triplets;
};

/// Parsed form of the line-oriented presentation format. Emission is
/// canonical: fixed header order, tensors sorted by name, triplets sorted by
/// index, rationals in lowest terms.
struct PresentationDocument {
    int version = 1;
    std::string kind;
    std::string name;
    std::string hopfRef; // "builtin:<name>" or "file:<path>", empty if none
    std::string basisName;
    std::vector<std::string> basisLabels;
    int maxDegree = 0;          // 0 when absent
    std::vector<int> dims;      // empty when absent
    std::vector<RawTensor> tensors;
    std::map<std::string, std::vector<std::pair<int, int>>> overflow;
    int matrixRows = 0;         // subspace kind
    std::vector<std::pair<Tensor::Index, Scalar>> matrixTriplets;
};

PresentationDocument parseDocument(const std::string& text);
std::string emitDocument(const PresentationDocument& doc);

const std::vector<std::string>& documentKinds();

// ---- conversions from in-memory presentations ------------------------------

PresentationDocument documentOfHopf(const HopfPresentation& p, const std::string& kind);
PresentationDocument documentOfModule(const YDModulePresentation& m,
                                      const std::string& hopfRef);
PresentationDocument documentOfAlgebra(const YDAlgebraPresentation& a,
                                       const std::string& hopfRef);
PresentationDocument documentOfLie(const BraidedLiePresentation& l,
                                   const std::string& hopfRef);
PresentationDocument documentOfEnveloping(const TruncatedEnveloping& u,
                                          const std::string& hopfRef);
PresentationDocument documentOfBiproduct(const BiproductPresentation& b);
PresentationDocument documentOfSubspace(const Subspace& s, const BasisPtr& ambient,
                                        const std::string& name);

// ---- resolution into checkable objects --------------------------------------

/// Loader for cross-references: receives the text after "builtin:"/"file:"
/// prefix handling is done by the caller.
using HopfLoader = std::function<HopfPtr(const std::string& ref)>;

/// A document turned back into presentations. Facets not applicable to the
/// kind stay empty.
struct ResolvedDocument {
    std::string kind;
    std::string name;
    HopfPtr hopf;
    std::shared_ptr<const YDModulePresentation> ydModule;
    std::shared_ptr<const YDAlgebraPresentation> ydAlgebra;
    std::shared_ptr<const BraidedLiePresentation> lie;
    std::shared_ptr<const Subspace> subspace;
    BasisPtr subspaceAmbient;
    int maxDegree = 0;
};

ResolvedDocument resolveDocument(const PresentationDocument& doc,
                                 const HopfLoader& loadHopf);

} // namespace homkernel
