#include "homkernel/basis.hpp"

#include <set>

namespace homkernel {

Basis::Basis(std::string name, std::vector<std::string> labels)
    : name_(std::move(name)), labels_(std::move(labels)) {
    if (labels_.empty())
        throw StructuralError("basis '" + name_ + "' has no labels");
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty())
            throw StructuralError("basis '" + name_ + "' has an empty label");
        if (!seen.insert(l).second)
            throw StructuralError("basis '" + name_ + "' repeats label '" + l + "'");
    }
}

int Basis::indexOf(const std::string& label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return -1;
}

} // namespace homkernel
