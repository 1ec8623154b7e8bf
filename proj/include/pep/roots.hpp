#pragma once

// Certified root enclosures of squarefree integer polynomials.
//
// Real roots are isolated by Sturm sequences and refined by dyadic bisection
// with exact sign evaluation. Non-real roots come as conjugate pairs; the
// upper-half representative is enclosed in a disk certified by the classical
// bound (a zero lies within deg * |f(z)/f'(z)| of any point z), with all
// certification arithmetic exact over Q(i). Approximations themselves use
// Durand-Kerner on dyadically rounded rationals, so the whole pipeline is
// deterministic. MPFR enters only for directed-rounded logarithms.

#include <memory>
#include <mutex>
#include <vector>

#include "pep/intpoly.hpp"

namespace pep {

struct RatInterval {
    Rat lo, hi;
    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
    static RatInterval point(const Rat& x) { return {x, x}; }
    Rat width() const { return hi - lo; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

RatInterval iv_add(const RatInterval& a, const RatInterval& b);
RatInterval iv_sub(const RatInterval& a, const RatInterval& b);
RatInterval iv_mul(const RatInterval& a, const RatInterval& b);
RatInterval iv_neg(const RatInterval& a);
RatInterval iv_abs(const RatInterval& a);
RatInterval iv_max(const RatInterval& a, const RatInterval& b);
RatInterval iv_square(const RatInterval& a);

struct RatRect {
    RatInterval re, im;
};

RatRect rc_add(const RatRect& a, const RatRect& b);
RatRect rc_mul(const RatRect& a, const RatRect& b);
RatInterval rc_modulus_squared(const RatRect& z);

// Exact interval Horner over rational coefficient polynomials.
RatInterval eval_interval(const QPoly& f, const RatInterval& x);
RatRect eval_rect(const QPoly& f, const RatRect& z);

// Directed-rounded natural log of a positive rational interval; the result
// brackets [log lo, log hi].
std::pair<Rat, Rat> log_interval(const RatInterval& x, long prec_bits);
Rat log_lower(const Rat& x, long prec_bits);
Rat log_upper(const Rat& x, long prec_bits);

// Rational upper bound of sqrt(q), q >= 0.
Rat sqrt_upper(const Rat& q);

struct RealRootEnc {
    Rat lo, hi;      // lo == hi for an exact rational root
    int sign_lo = 0, sign_hi = 0;
};

struct DiskEnc {
    Rat cx, cy, r;   // cy - r > 0: strictly upper half plane
};

struct RootSnapshot {
    std::vector<RealRootEnc> real;  // ascending
    std::vector<DiskEnc> upper;     // one per conjugate pair, stable order
    std::vector<RatRect> upper_box; // monotone rectangle enclosures, same order
};

class RootSet {
  public:
    explicit RootSet(IntPoly squarefree, long precision_cap_bits = 4096);

    int degree() const { return poly_.degree(); }
    size_t num_real() const { return n_real_; }
    size_t num_pairs() const { return n_pairs_; }
    const IntPoly& poly() const { return poly_; }

    std::shared_ptr<const RootSnapshot> current() const;
    // Refine until every real interval and every rectangle side is <= w.
    std::shared_ptr<const RootSnapshot> refine_below(const Rat& w) const;

  private:
    void isolate();

    IntPoly poly_;
    long cap_bits_;
    size_t n_real_ = 0, n_pairs_ = 0;
    mutable std::mutex mu_;
    mutable std::shared_ptr<const RootSnapshot> snap_;
    mutable long dk_bits_ = 64;
};

}  // namespace pep
