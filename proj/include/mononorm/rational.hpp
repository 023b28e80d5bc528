#ifndef MONONORM_RATIONAL_HPP
#define MONONORM_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace mononorm {

// Exact scalars. Every certifying computation in this library runs on these;
// there is no floating point anywhere on a decision path.
using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline std::string toString(const Rational& q) { return q.str(); }

inline bool isInteger(const Rational& q) { return denominator(q) == 1; }

} // namespace mononorm

#endif
