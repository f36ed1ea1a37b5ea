#include "homkernel/scalar.hpp"

#include <cctype>

namespace homkernel {

namespace {

bool allDigits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Scalar parseScalar(const std::string& text) {
    std::string t = text;
    bool negative = false;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
        negative = (t[0] == '-');
        t = t.substr(1);
    }
    std::string num = t, den = "1";
    if (auto slash = t.find('/'); slash != std::string::npos) {
        num = t.substr(0, slash);
        den = t.substr(slash + 1);
    }
    if (!allDigits(num) || !allDigits(den))
        throw StructuralError("malformed rational '" + text + "'");
    BigInt n(num), d(den);
    if (d == 0)
        throw StructuralError("zero denominator in '" + text + "'");
    if (negative) n = -n;
    return Scalar(n, d);
}

} // namespace homkernel
