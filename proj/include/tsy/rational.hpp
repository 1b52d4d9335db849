#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace tsy {

// Exact scalar. Always stored canonically (lowest terms, positive denominator);
// mpq_class maintains that on its own as long as values come from arithmetic.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat_of(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p/q" style strings (the wire format for coefficients).
inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

using RatVec = std::vector<Rat>;

inline bool is_zero(const RatVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// Scales a rational vector to a primitive integer vector (content 1). Keeps
// the sign pattern; zero vectors pass through. Used to keep sample points and
// report output small.
inline void make_primitive(RatVec& v) {
    Int lcm = 1;
    for (const auto& x : v)
        if (x != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    Int gcd = 0;
    std::vector<Int> num(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        num[i] = Int(v[i] * lcm);
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), num[i].get_mpz_t());
    }
    if (gcd == 0) return;
    for (size_t i = 0; i < v.size(); ++i) v[i] = Rat(num[i] / gcd);
}

}  // namespace tsy
