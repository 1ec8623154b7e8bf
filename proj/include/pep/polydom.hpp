#pragma once

// Dense univariate polynomial algorithms over an abstract field, used with
// rational coefficients and with number-field coefficients. A domain D
// supplies the coefficient type and its ring operations; polynomials are
// plain coefficient vectors (index i = coefficient of t^i) normalized to
// have a nonzero leading coefficient.

#include <string>
#include <vector>

#include "pep/errors.hpp"
#include "pep/rat.hpp"

namespace pep {

template <class D>
using PolyOf = std::vector<typename D::Elem>;

template <class D>
void pnormalize(const D& d, PolyOf<D>& p) {
    while (!p.empty() && d.is_zero(p.back())) p.pop_back();
}

template <class E>
int pdeg(const std::vector<E>& p) {
    return static_cast<int>(p.size()) - 1;  // -1 for the zero polynomial
}

template <class E>
bool pis_zero(const std::vector<E>& p) {
    return p.empty();
}

template <class D>
PolyOf<D> padd(const D& d, const PolyOf<D>& a, const PolyOf<D>& b) {
    PolyOf<D> r(std::max(a.size(), b.size()), d.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = d.add(r[i], b[i]);
    pnormalize(d, r);
    return r;
}

template <class D>
PolyOf<D> psub(const D& d, const PolyOf<D>& a, const PolyOf<D>& b) {
    PolyOf<D> r(std::max(a.size(), b.size()), d.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = d.sub(r[i], b[i]);
    pnormalize(d, r);
    return r;
}

template <class D>
PolyOf<D> pmul(const D& d, const PolyOf<D>& a, const PolyOf<D>& b) {
    if (a.empty() || b.empty()) return {};
    PolyOf<D> r(a.size() + b.size() - 1, d.zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = d.add(r[i + j], d.mul(a[i], b[j]));
    pnormalize(d, r);
    return r;
}

template <class D>
PolyOf<D> pscale(const D& d, const PolyOf<D>& a, const typename D::Elem& s) {
    if (d.is_zero(s)) return {};
    PolyOf<D> r = a;
    for (auto& x : r) x = d.mul(x, s);
    return r;
}

template <class D>
PolyOf<D> pmonic(const D& d, const PolyOf<D>& a) {
    if (a.empty()) return a;
    return pscale(d, a, d.inv(a.back()));
}

// Euclidean division by a nonzero divisor; returns {quotient, remainder}.
template <class D>
std::pair<PolyOf<D>, PolyOf<D>> pdivrem(const D& d, PolyOf<D> a, const PolyOf<D>& b) {
    if (b.empty()) throw DivisionByZeroError("polynomial division by zero");
    PolyOf<D> q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, d.zero());
    auto lb = d.inv(b.back());
    while (a.size() >= b.size()) {
        auto f = d.mul(a.back(), lb);
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = d.sub(a[shift + i], d.mul(f, b[i]));
        a.pop_back();
        pnormalize(d, a);
        if (a.size() < b.size()) break;
    }
    pnormalize(d, q);
    return {q, a};
}

template <class D>
PolyOf<D> pmod(const D& d, const PolyOf<D>& a, const PolyOf<D>& b) {
    return pdivrem(d, a, b).second;
}

// Monic gcd by the Euclidean algorithm.
template <class D>
PolyOf<D> pgcd_monic(const D& d, PolyOf<D> a, PolyOf<D> b) {
    while (!b.empty()) {
        auto r = pmod(d, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(d, a);
}

template <class D>
PolyOf<D> pderiv(const D& d, const PolyOf<D>& a) {
    if (a.size() <= 1) return {};
    PolyOf<D> r(a.size() - 1, d.zero());
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = d.mul_int(a[i], static_cast<long>(i));
    pnormalize(d, r);
    return r;
}

template <class D>
typename D::Elem peval(const D& d, const PolyOf<D>& a, const typename D::Elem& x) {
    auto r = d.zero();
    for (size_t i = a.size(); i-- > 0;) r = d.add(d.mul(r, x), a[i]);
    return r;
}

// p(t + a) by Horner-style recomposition.
template <class D>
PolyOf<D> pshift_var(const D& d, const PolyOf<D>& p, const typename D::Elem& a) {
    PolyOf<D> r;  // result accumulates p reinterpreted at t+a
    for (size_t i = p.size(); i-- > 0;) {
        // r = r*(t+a) + p[i]
        PolyOf<D> nr(r.size() + 1, d.zero());
        for (size_t j = 0; j < r.size(); ++j) {
            nr[j + 1] = d.add(nr[j + 1], r[j]);
            nr[j] = d.add(nr[j], d.mul(r[j], a));
        }
        if (nr.empty()) nr.push_back(p[i]);
        else nr[0] = d.add(nr[0], p[i]);
        pnormalize(d, nr);
        r = std::move(nr);
    }
    return r;
}

// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
template <class D>
std::tuple<PolyOf<D>, PolyOf<D>, PolyOf<D>> pxgcd(const D& d, PolyOf<D> a, PolyOf<D> b) {
    PolyOf<D> s0{d.one()}, s1, t0, t1{d.one()};
    while (!pis_zero(b)) {
        auto [q, r] = pdivrem(d, a, b);
        PolyOf<D> s2 = psub(d, s0, pmul(d, q, s1));
        PolyOf<D> t2 = psub(d, t0, pmul(d, q, t1));
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!pis_zero(a)) {
        auto inv = d.inv(a.back());
        a = pscale(d, a, inv);
        s0 = pscale(d, s0, inv);
        t0 = pscale(d, t0, inv);
    }
    return {a, s0, t0};
}

// Domain of exact rationals.
struct RatDomain {
    using Elem = Rat;
    Rat zero() const { return Rat(0); }
    Rat one() const { return Rat(1); }
    Rat from_long(long k) const { return Rat(k); }
    bool is_zero(const Rat& a) const { return a == 0; }
    Rat add(const Rat& a, const Rat& b) const { return a + b; }
    Rat sub(const Rat& a, const Rat& b) const { return a - b; }
    Rat mul(const Rat& a, const Rat& b) const { return a * b; }
    Rat mul_int(const Rat& a, long k) const { return a * k; }
    Rat inv(const Rat& a) const {
        if (a == 0) throw DivisionByZeroError("rational inverse of zero");
        return Rat(1) / a;
    }
};

using QPoly = PolyOf<RatDomain>;

}  // namespace pep
