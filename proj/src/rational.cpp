#include "ipsf/rational.hpp"

#include "ipsf/errors.hpp"

namespace ipsf {

std::string format_rational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/" + denominator(r).str();
    }
    return s;
}

Rational parse_rational(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) {
            throw ValidationError("rational with zero denominator: " + text);
        }
        return Rational(num, den);
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception&) {
        throw ValidationError("malformed rational: '" + text + "'");
    }
}

} // namespace ipsf
