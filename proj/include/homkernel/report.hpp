#pragma once

#include <deque>
#include <ostream>
#include <string>
#include <vector>

namespace homkernel {

/// A concrete failing (or noteworthy) instance: the basis tuple it happened
/// on and both evaluated sides, so re-evaluation reproduces the inequality.
struct Witness {
    std::vector<std::string> tuple;
    std::string lhs;
    std::string rhs;
};

struct AxiomResult {
    std::string axiom;
    long checked = 0;
    long failed = 0;
    long skipped = 0;   // instances left unevaluated (degree overflow)
    std::vector<Witness> witnesses;
    std::vector<std::string> notes;

    bool pass() const { return failed == 0; }
};

/// Outcome of one checker run: per-axiom tallies plus capped witnesses,
/// enumerated in a fixed order so reports are byte-stable.
class Report {
public:
    explicit Report(std::string subject, int witnessCap = 5)
        : subject_(std::move(subject)), witnessCap_(witnessCap) {}

    /// Registers (or finds) an axiom entry. References stay valid while
    /// further axioms are added.
    AxiomResult& axiom(const std::string& name);
    void recordPass(AxiomResult& ax) { ++ax.checked; }
    void recordSkip(AxiomResult& ax) { ++ax.checked, ++ax.skipped; }
    void recordFail(AxiomResult& ax, std::vector<std::string> tuple,
                    std::string lhs, std::string rhs);

    bool pass() const;
    const std::string& subject() const { return subject_; }
    const std::deque<AxiomResult>& axioms() const { return axioms_; }
    std::deque<AxiomResult>& axioms() { return axioms_; }
    int witnessCap() const { return witnessCap_; }

    void merge(const Report& other);

    /// Prose rendering, one paragraph per axiom.
    std::string human() const;
    /// Line-oriented rendering for machine consumption:
    ///   AXIOM <name> <PASS|FAIL> checked=N failed=N skipped=N
    ///   WITNESS <name> (<tuple>) lhs=<...> rhs=<...>
    ///   RESULT <PASS|FAIL>
    void machine(std::ostream& out) const;

private:
    std::string subject_;
    int witnessCap_;
    std::deque<AxiomResult> axioms_;
};

} // namespace homkernel
