#include "ctxkit/rational.hpp"

#include "ctxkit/errors.hpp"

#include <cctype>

namespace ctxkit {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = (s[0] == '-');
        s.erase(0, 1);
    }
    std::string num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den)) {
        throw input_error("not a rational: '" + text + "' (expected p or p/q with positive q)");
    }
    BigInt n(num), d(den);
    if (d == 0) {
        throw input_error("not a rational: '" + text + "' (zero denominator)");
    }
    if (negative) n = -n;
    return Rat(n, d);
}

std::string format_rational(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

}  // namespace ctxkit
