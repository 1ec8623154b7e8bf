#pragma once

// Polynomials with integer coefficients: the carrier for defining
// polynomials, minimal polynomials and resultant work. Coefficient of t^i
// sits at index i; the zero polynomial is the empty vector.

#include <string>
#include <vector>

#include "pep/polydom.hpp"
#include "pep/rat.hpp"

namespace pep {

struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { normalize(); }
    static IntPoly from_longs(std::initializer_list<long> v) {
        std::vector<Int> w;
        for (long x : v) w.emplace_back(x);
        return IntPoly(std::move(w));
    }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Int& lc() const { return c.back(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }

    bool operator==(const IntPoly& o) const { return c == o.c; }

    Int coeff(size_t i) const { return i < c.size() ? c[i] : Int(0); }
};

IntPoly ip_add(const IntPoly& a, const IntPoly& b);
IntPoly ip_sub(const IntPoly& a, const IntPoly& b);
IntPoly ip_mul(const IntPoly& a, const IntPoly& b);
IntPoly ip_neg(const IntPoly& a);
IntPoly ip_scale(const IntPoly& a, const Int& k);
IntPoly ip_derivative(const IntPoly& a);

Int ip_content(const IntPoly& a);              // gcd of coefficients, >= 0
IntPoly ip_primitive(const IntPoly& a);        // content removed, lc > 0
Rat ip_eval(const IntPoly& a, const Rat& x);   // exact evaluation
Int ip_eval_int(const IntPoly& a, const Int& x);

// Sign of a(p/q) for q > 0, via the homogeneous integer form.
int ip_sign_at(const IntPoly& a, const Int& p, const Int& q);

// True division (throws if not exact over Z).
IntPoly ip_divexact(const IntPoly& a, const IntPoly& b);
bool ip_divides(const IntPoly& b, const IntPoly& a);  // b | a over Q with integer quotient check

IntPoly ip_gcd(const IntPoly& a, const IntPoly& b);  // primitive gcd, lc > 0
IntPoly ip_squarefree_part(const IntPoly& a);

Int ip_resultant(const IntPoly& a, const IntPoly& b);
Rat rat_resultant(QPoly a, QPoly b);
Int ip_discriminant(const IntPoly& a);

// 1 + max |a_i / a_n|: every complex root has modulus below this.
Rat ip_cauchy_root_bound(const IntPoly& a);

QPoly ip_to_q(const IntPoly& a);
IntPoly ip_from_q_primitive(const QPoly& a);  // clear denominators, make primitive

std::string ip_str(const IntPoly& a, const std::string& var = "x");

}  // namespace pep
