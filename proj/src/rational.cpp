#include "collapsat/rational.hpp"

#include "collapsat/error.hpp"

namespace collapsat {

std::string rational_to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw Error(errc::bad_input, "zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(errc::bad_input, "malformed rational '" + s + "'");
    }
}

} // namespace collapsat
