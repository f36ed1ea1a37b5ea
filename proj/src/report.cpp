#include "homkernel/report.hpp"

#include <sstream>

namespace homkernel {

AxiomResult& Report::axiom(const std::string& name) {
    for (auto& ax : axioms_)
        if (ax.axiom == name) return ax;
    axioms_.push_back(AxiomResult{name});
    return axioms_.back();
}

void Report::recordFail(AxiomResult& ax, std::vector<std::string> tuple,
                        std::string lhs, std::string rhs) {
    ++ax.checked;
    ++ax.failed;
    if (static_cast<int>(ax.witnesses.size()) < witnessCap_)
        ax.witnesses.push_back(Witness{std::move(tuple), std::move(lhs), std::move(rhs)});
}

bool Report::pass() const {
    for (const auto& ax : axioms_)
        if (!ax.pass()) return false;
    return true;
}

void Report::merge(const Report& other) {
    for (const auto& ax : other.axioms_) axioms_.push_back(ax);
}

namespace {
std::string joinTuple(const std::vector<std::string>& tuple) {
    std::string s = "(";
    for (size_t i = 0; i < tuple.size(); ++i) {
        if (i) s += ", ";
        s += tuple[i];
    }
    return s + ")";
}
} // namespace

std::string Report::human() const {
    std::ostringstream out;
    out << subject_ << ": " << (pass() ? "PASS" : "FAIL") << "\n";
    for (const auto& ax : axioms_) {
        out << "  " << ax.axiom << ": " << (ax.pass() ? "pass" : "FAIL")
            << " (" << ax.checked << " instances";
        if (ax.failed) out << ", " << ax.failed << " failed";
        if (ax.skipped) out << ", " << ax.skipped << " skipped";
        out << ")\n";
        for (const auto& w : ax.witnesses)
            out << "    witness " << joinTuple(w.tuple) << ": lhs = " << w.lhs
                << ", rhs = " << w.rhs << "\n";
        for (const auto& n : ax.notes) out << "    note: " << n << "\n";
    }
    return out.str();
}

void Report::machine(std::ostream& out) const {
    for (const auto& ax : axioms_) {
        out << "AXIOM " << ax.axiom << " " << (ax.pass() ? "PASS" : "FAIL")
            << " checked=" << ax.checked << " failed=" << ax.failed
            << " skipped=" << ax.skipped << "\n";
        for (const auto& w : ax.witnesses)
            out << "WITNESS " << ax.axiom << " " << joinTuple(w.tuple)
                << " lhs=" << w.lhs << " rhs=" << w.rhs << "\n";
    }
    out << "RESULT " << (pass() ? "PASS" : "FAIL") << "\n";
}

} // namespace homkernel
