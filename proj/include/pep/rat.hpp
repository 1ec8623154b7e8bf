#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pep/errors.hpp"

namespace pep {

using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Int& z) { return mpz_sgn(z.get_mpz_t()); }
inline int sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// base^e for e in Z; negative e requires a unit-free exact inverse.
inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0 && e < 0) throw DivisionByZeroError("0 raised to a negative power");
    Rat r;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), a);
    if (e < 0) {
        r = Rat(r.get_den(), r.get_num());
    }
    r.canonicalize();
    return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Least positive k with k*q integral, over a list of rationals.
inline Int common_denominator(const std::vector<Rat>& qs) {
    Int den(1);
    for (const auto& q : qs) den = int_lcm(den, q.get_den());
    return den;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline std::optional<Rat> parse_rat(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) return std::nullopt;
    q.canonicalize();
    return q;
}

inline bool fits_long(const Int& z) { return z.fits_slong_p(); }

inline long to_long(const Int& z) {
    if (!z.fits_slong_p()) throw CapError("integer too large for machine word: " + z.get_str());
    return z.get_si();
}

}  // namespace pep
