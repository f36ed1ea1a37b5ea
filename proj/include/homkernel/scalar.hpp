#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "homkernel/errors.hpp"

namespace homkernel {

/// Exact rational scalar over the ground field Q. Values are always kept in
/// lowest terms with positive denominator; arithmetic never rounds.
using Scalar = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline bool isZero(const Scalar& s) { return s.is_zero(); }

/// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string toString(const Scalar& s) {
    return s.str();
}

/// Parses "p" or "p/q" with optional leading '-'. Throws StructuralError on
/// malformed text or zero denominator; callers that track positions should
/// catch and re-annotate.
Scalar parseScalar(const std::string& text);

} // namespace homkernel
