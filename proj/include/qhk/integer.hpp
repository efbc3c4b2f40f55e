#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace qhk {

// All matrix and group arithmetic runs on arbitrary-precision integers;
// SNF pivot growth overflows fixed-width types even on small boundary matrices.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// Non-negative remainder, also for negative a or m given as a positive modulus.
inline Int pos_mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Error taxonomy shared with the CLI exit codes:
//   input_error -> 2, bound_error -> 3, plain verification failures -> 1.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

struct bound_error : std::runtime_error {
    explicit bound_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qhk
