#pragma once

#include <memory>
#include <string>
#include <vector>

#include "homkernel/errors.hpp"

namespace homkernel {

/// An ordered list of distinct labels naming the coordinates of a space.
/// The label order is fixed and defines indices 0..dim-1.
class Basis {
public:
    Basis(std::string name, std::vector<std::string> labels);

    const std::string& name() const { return name_; }
    const std::vector<std::string>& labels() const { return labels_; }
    int dim() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(i); }

    /// Index of a label, or -1 when absent.
    int indexOf(const std::string& label) const;

    bool operator==(const Basis& other) const {
        return name_ == other.name_ && labels_ == other.labels_;
    }

private:
    std::string name_;
    std::vector<std::string> labels_;
};

using BasisPtr = std::shared_ptr<const Basis>;

inline BasisPtr makeBasis(std::string name, std::vector<std::string> labels) {
    return std::make_shared<const Basis>(std::move(name), std::move(labels));
}

/// Two axes are compatible when they reference the same basis content,
/// whether or not they share the allocation.
inline bool sameBasis(const BasisPtr& a, const BasisPtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace homkernel
