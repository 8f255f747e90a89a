#ifndef TURAN_RATIONAL_HPP
#define TURAN_RATIONAL_HPP

#include <boost/rational.hpp>
#include <sstream>
#include <string>

namespace turan {

using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
    return os.str();
}

// base^e for e >= 0
inline Rational pow_rational(const Rational& base, int e) {
    Rational out(1);
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace turan

#endif
