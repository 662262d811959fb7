#ifndef COLLAPSAT_RATIONAL_HPP
#define COLLAPSAT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace collapsat {

// All numeric work in the library is exact. BigInt carries fraction-free
// elimination intermediates, Rational everything else (box coordinates,
// form coefficients, monomial coordinates).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Wire format is "p/q" with canonical sign on p and q > 0; plain integers
// are accepted on input.
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

} // namespace collapsat

#endif
