#include "pep/intpoly.hpp"

#include <algorithm>

namespace pep {

IntPoly ip_add(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> r(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return IntPoly(std::move(r));
}

IntPoly ip_sub(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> r(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
    return IntPoly(std::move(r));
}

IntPoly ip_neg(const IntPoly& a) {
    IntPoly r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

IntPoly ip_mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> r(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return IntPoly(std::move(r));
}

IntPoly ip_scale(const IntPoly& a, const Int& k) {
    if (k == 0) return {};
    IntPoly r = a;
    for (auto& x : r.c) x *= k;
    return r;
}

IntPoly ip_derivative(const IntPoly& a) {
    if (a.c.size() <= 1) return {};
    std::vector<Int> r(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r[i - 1] = a.c[i] * static_cast<long>(i);
    return IntPoly(std::move(r));
}

Int ip_content(const IntPoly& a) {
    Int g(0);
    for (const auto& x : a.c) g = int_gcd(g, x);
    return g;
}

IntPoly ip_primitive(const IntPoly& a) {
    if (a.is_zero()) return a;
    Int g = ip_content(a);
    if (a.lc() < 0) g = -g;
    IntPoly r = a;
    for (auto& x : r.c) x /= g;
    return r;
}

Rat ip_eval(const IntPoly& a, const Rat& x) {
    Rat r(0);
    for (size_t i = a.c.size(); i-- > 0;) r = r * x + a.c[i];
    return r;
}

Int ip_eval_int(const IntPoly& a, const Int& x) {
    Int r(0);
    for (size_t i = a.c.size(); i-- > 0;) r = r * x + a.c[i];
    return r;
}

int ip_sign_at(const IntPoly& a, const Int& p, const Int& q) {
    // sum a_i p^i q^(n-i), q > 0; shares sign with a(p/q)
    if (a.is_zero()) return 0;
    Int acc(0), ppow(1);
    size_t n = a.c.size() - 1;
    std::vector<Int> qpow(n + 1);
    qpow[n] = 1;
    for (size_t i = n; i-- > 0;) qpow[i] = qpow[i + 1] * q;
    // qpow[i] = q^(n-i)
    for (size_t i = 0; i <= n; ++i) {
        acc += a.c[i] * ppow * qpow[i];
        ppow *= p;
    }
    return sgn(acc);
}

IntPoly ip_divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw MathError("inexact integer polynomial division");
    std::vector<Int> rem = a.c;
    std::vector<Int> q(a.c.size() - b.c.size() + 1, Int(0));
    for (size_t shift = q.size(); shift-- > 0;) {
        const Int& top = rem[shift + b.c.size() - 1];
        if (top == 0) continue;
        Int f = top / b.lc();
        if (f * b.lc() != top) throw MathError("inexact integer polynomial division");
        q[shift] = f;
        for (size_t i = 0; i < b.c.size(); ++i) rem[shift + i] -= f * b.c[i];
    }
    for (const auto& x : rem)
        if (x != 0) throw MathError("inexact integer polynomial division");
    return IntPoly(std::move(q));
}

bool ip_divides(const IntPoly& b, const IntPoly& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    if (a.degree() < b.degree()) return false;
    RatDomain D;
    auto [q, r] = pdivrem(D, ip_to_q(a), ip_to_q(b));
    return pis_zero(r);
}

IntPoly ip_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return ip_primitive(b);
    if (b.is_zero()) return ip_primitive(a);
    Int cont = int_gcd(ip_content(a), ip_content(b));
    RatDomain D;
    QPoly g = pgcd_monic(D, ip_to_q(a), ip_to_q(b));
    IntPoly pg = ip_from_q_primitive(g);
    return ip_scale(pg, cont);
}

IntPoly ip_squarefree_part(const IntPoly& a) {
    if (a.degree() <= 1) return ip_primitive(a);
    IntPoly g = ip_gcd(a, ip_derivative(a));
    if (g.degree() == 0) return ip_primitive(a);
    RatDomain D;
    auto [q, r] = pdivrem(D, ip_to_q(a), ip_to_q(g));
    (void)r;
    return ip_from_q_primitive(q);
}

// Resultant by rational Euclid with the classical recurrence
//   res(f,g) = (-1)^(df*dg) * lc(g)^(df-dr) * res(g, f mod g).
// All arithmetic exact; fine at desk-scale degrees.
Rat rat_resultant(QPoly f, QPoly g) {
    RatDomain D;
    Rat acc(1);
    while (true) {
        if (pis_zero(f) || pis_zero(g)) return Rat(0);
        if (pdeg(g) == 0) return acc * rat_pow(g[0], pdeg(f));
        long df = pdeg(f), dg = pdeg(g);
        QPoly r = pmod(D, f, g);
        if (pis_zero(r)) return Rat(0);
        long dr = pdeg(r);
        acc = acc * rat_pow(g.back(), df - dr);
        if ((df * dg) % 2 != 0) acc = -acc;
        f = std::move(g);
        g = std::move(r);
    }
}

Int ip_resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return Int(0);
    Rat r = rat_resultant(ip_to_q(a), ip_to_q(b));
    if (r.get_den() != 1) throw MathError("resultant of integer polynomials must be integral");
    return r.get_num();
}

Int ip_discriminant(const IntPoly& a) {
    if (a.degree() < 1) throw InvalidPolynomialError("discriminant needs degree >= 1");
    if (a.degree() == 1) return Int(1);
    Int res = ip_resultant(a, ip_derivative(a));
    Int d(a.degree());
    Int q = res / a.lc();
    if (q * a.lc() != res) throw MathError("discriminant: leading coefficient does not divide resultant");
    long n = a.degree();
    bool neg = ((n * (n - 1)) / 2) % 2 != 0;
    return neg ? Int(-q) : q;
}

Rat ip_cauchy_root_bound(const IntPoly& a) {
    if (a.degree() < 1) return Rat(1);
    Rat m(0);
    for (int i = 0; i < a.degree(); ++i) {
        Rat v = abs(Rat(a.c[i], a.lc()));
        if (v > m) m = v;
    }
    return m + 1;
}

QPoly ip_to_q(const IntPoly& a) {
    QPoly r;
    r.reserve(a.c.size());
    for (const auto& x : a.c) r.emplace_back(x);
    return r;
}

IntPoly ip_from_q_primitive(const QPoly& a) {
    Int den = common_denominator(a);
    std::vector<Int> r;
    r.reserve(a.size());
    for (const auto& q : a) {
        Rat v = q * den;
        r.push_back(v.get_num());
    }
    return ip_primitive(IntPoly(std::move(r)));
}

std::string ip_str(const IntPoly& a, const std::string& var) {
    if (a.is_zero()) return "0";
    std::string s;
    for (size_t i = a.c.size(); i-- > 0;) {
        const Int& x = a.c[i];
        if (x == 0) continue;
        bool first = s.empty();
        if (!first) s += (x > 0) ? "+" : "-";
        Int ax = abs(x);
        if (i == 0) {
            s += (first && x < 0 ? "-" : "") + ax.get_str();
        } else {
            std::string coeff = (ax == 1) ? "" : ax.get_str() + "*";
            if (first && x < 0) coeff = "-" + coeff;
            s += coeff + var + (i == 1 ? "" : "^" + std::to_string(i));
        }
    }
    return s;
}

}  // namespace pep
