#include "hartogs/rational.hpp"

#include "hartogs/errors.hpp"

#include <cctype>

namespace hartogs {

namespace {

// Strict integer literal: optional sign, then at least one digit.
bool is_integer_literal(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

// mpz_int rejects a leading '+', which the literal grammar allows
Int int_from_literal(const std::string& s) {
    return Int(s.front() == '+' ? s.substr(1) : s);
}

}  // namespace

Rat rat_from_string(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_literal(text)) throw Error("bad rational literal '" + text + "'");
        return Rat(int_from_literal(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
        throw Error("bad rational literal '" + text + "'");
    }
    const Int q = int_from_literal(den);
    if (q == 0) throw Error("bad rational literal '" + text + "': zero denominator");
    return Rat(int_from_literal(num), q);  // mpq_rational canonicalizes sign and gcd
}

std::string rat_to_string(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace hartogs
