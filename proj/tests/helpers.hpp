#pragma once

// Shared fixtures: the Pell solution set as a three-base system in (m, n),
//   x(m,n) = (-1)^m ((3-2sqrt2)^n + (3+2sqrt2)^n)/2
//   y(m,n) = ((3-2sqrt2)^n - (3+2sqrt2)^n)/(2 sqrt2)
// and a one-base system 1 + 2^(n1) - 2^(n2).

#include "pep/pepsystem.hpp"

namespace pep::testing {

inline FieldPtr sqrt2_field() {
    static FieldPtr f = make_field(IntPoly::from_longs({-2, 0, 1}));
    return f;
}

inline FieldPtr rationals() {
    static FieldPtr f = make_field(IntPoly::from_longs({-1, 1}));
    return f;
}

// bases: [0] = 3-2sqrt2, [1] = 3+2sqrt2, [2] = -1; variables (m, n)
inline PepSystem pell_system() {
    FieldPtr k = sqrt2_field();
    PepSystem f;
    f.field = k;
    f.r = 2;
    FieldElement u = k->element({Rat(3), Rat(-2)});
    FieldElement v = k->element({Rat(3), Rat(2)});
    f.bases = {u, v, k->from_rat(Rat(-1))};
    FieldElement half = k->from_rat(Rat(1, 2));
    FieldElement inv2s = (k->gen() * k->from_rat(Rat(2))).inverse();  // 1/(2 sqrt2)

    auto mk_term = [&](const FieldElement& c, long eu, long ev, long em_on_m) {
        PepTerm t;
        t.coeff = c;
        t.exponents = IntMat(3, 2);
        t.exponents.at(0, 1) = eu;       // u^n
        t.exponents.at(1, 1) = ev;       // v^n
        t.exponents.at(2, 0) = em_on_m;  // (-1)^m
        return t;
    };

    PepComponent x, y;
    x.terms.push_back(mk_term(half, 1, 0, 1));
    x.terms.push_back(mk_term(half, 0, 1, 1));
    y.terms.push_back(mk_term(inv2s, 1, 0, 0));
    y.terms.push_back(mk_term(-inv2s, 0, 1, 0));
    f.components = {x, y};
    f.validate();
    return f;
}

// 1 + 2^(n1) - 2^(n2) over Q, e = 3 terms, base 2
inline PepSystem two_power_system() {
    FieldPtr q = rationals();
    PepSystem f;
    f.field = q;
    f.r = 2;
    f.bases = {q->from_rat(Rat(2))};
    PepComponent c;
    auto term = [&](long coeff, long e1, long e2) {
        PepTerm t;
        t.coeff = q->from_rat(Rat(coeff));
        t.exponents = IntMat(1, 2);
        t.exponents.at(0, 0) = e1;
        t.exponents.at(0, 1) = e2;
        return t;
    };
    c.terms.push_back(term(1, 0, 0));
    c.terms.push_back(term(1, 1, 0));
    c.terms.push_back(term(-1, 0, 1));
    f.components = {c};
    f.validate();
    return f;
}

}  // namespace pep::testing
