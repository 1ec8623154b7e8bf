#include "pep/heights.hpp"

#include <algorithm>

namespace pep {

namespace {

long tolerance_bits(const Rat& tol) {
    long b = static_cast<long>(mpz_sizeinbase(tol.get_den().get_mpz_t(), 2));
    return std::max(64L, b + 32);
}

struct ClearedTuple {
    FieldPtr field;
    std::vector<FieldElement> ys;  // integral, common scaling of the inputs
    Int content;                   // [O_K : (ys)]
    bool all_rational = true;
};

ClearedTuple clear_tuple(const std::vector<FieldElement>& xs) {
    if (xs.empty()) throw AllZeroError("height of an empty tuple");
    ClearedTuple ct;
    ct.field = xs[0].field();
    if (!ct.field) throw MathError("height of uninitialized element");
    bool all_zero = true;
    for (const auto& x : xs) {
        if (x.field().get() != ct.field.get() && !ct.field->same_field(*x.field()))
            throw FieldMismatchError("height tuple spans distinct fields");
        if (!x.is_zero()) all_zero = false;
        if (!x.is_rational()) ct.all_rational = false;
    }
    if (all_zero) throw AllZeroError("projective height of the zero tuple");
    Int den = ct.field->clearing_denominator(xs);
    FieldElement d = ct.field->from_rat(Rat(den));
    for (const auto& x : xs) ct.ys.push_back(x * d);
    ct.content = ct.field->content_ideal_norm(ct.ys);
    return ct;
}

// Exact interval for prod_places max_i ||y_i||_v over archimedean places;
// complex pairs enter through |.|^2 so the product equals prod over all
// [K:Q] embeddings of max_i |tau(y_i)|.
RatInterval archimedean_interval(const ClearedTuple& ct, std::shared_ptr<const RootSnapshot> snap) {
    std::vector<EmbeddingValues> evs;
    evs.reserve(ct.ys.size());
    for (const auto& y : ct.ys) evs.push_back(ct.field->embed(y, snap));
    RatInterval prod = RatInterval::point(Rat(1));
    size_t nreal = snap->real.size(), npairs = snap->upper_box.size();
    for (size_t v = 0; v < nreal; ++v) {
        RatInterval m(Rat(0), Rat(0));
        for (size_t i = 0; i < ct.ys.size(); ++i) {
            RatInterval a = iv_abs(evs[i].real[v]);
            m = (i == 0) ? a : iv_max(m, a);
        }
        prod = iv_mul(prod, m);
    }
    for (size_t v = 0; v < npairs; ++v) {
        RatInterval m(Rat(0), Rat(0));
        for (size_t i = 0; i < ct.ys.size(); ++i) {
            RatInterval a = rc_modulus_squared(evs[i].cplx[v]);
            m = (i == 0) ? a : iv_max(m, a);
        }
        prod = iv_mul(prod, m);
    }
    return prod;
}

HeightValue finish_from_power(const Rat& power_lo, const Rat& power_hi, int degree, const Rat& tol,
                              std::optional<Rat> exact) {
    // rounding slack only; the caller drives the rational interval width
    for (long prec = tolerance_bits(tol);; prec *= 4) {
        Rat lo = log_lower(power_lo, prec) / degree;
        Rat hi = log_upper(power_hi, prec) / degree;
        if (lo < 0) lo = 0;  // heights are >= 1 multiplicatively
        if (hi < lo) hi = lo;
        if (hi - lo <= tol || prec > (1L << 22))
            return HeightValue{lo, hi, tol, std::move(exact)};
    }
}

}  // namespace

HeightValue projective_height(const std::vector<FieldElement>& xs, const Rat& tolerance) {
    if (tolerance <= 0) throw MathError("height tolerance must be positive");
    ClearedTuple ct = clear_tuple(xs);
    int d = ct.field->degree();

    if (ct.all_rational) {
        Rat mx(0);
        for (const auto& y : ct.ys) {
            Rat a = abs(y.coords()[0]);
            if (a > mx) mx = a;
        }
        // H^d = mx^d / content
        Rat hp = rat_pow(mx, d) / Rat(ct.content);
        return finish_from_power(hp, hp, d, tolerance, hp);
    }

    // interval refinement loop
    Rat w = tolerance / 16;
    for (int round = 0;; ++round) {
        auto snap = ct.field->roots().refine_below(w);
        RatInterval a = archimedean_interval(ct, snap);
        if (a.lo > 0) {
            Rat plo = a.lo / Rat(ct.content), phi = a.hi / Rat(ct.content);
            HeightValue hv = finish_from_power(plo, phi, d, tolerance, std::nullopt);
            if (hv.log_hi - hv.log_lo <= tolerance) return hv;
        }
        w /= 256;
        if (round > 64) throw PrecisionCapExceededError("height refinement failed to converge");
    }
}

HeightValue affine_height(const std::vector<FieldElement>& xs, const Rat& tolerance) {
    if (xs.empty()) throw AllZeroError("affine height of an empty tuple");
    FieldPtr f = xs[0].field();
    std::vector<FieldElement> with_one;
    with_one.reserve(xs.size() + 1);
    with_one.push_back(f->one());
    for (const auto& x : xs) with_one.push_back(x);
    return projective_height(with_one, tolerance);
}

HeightValue element_height_mahler(const FieldElement& x, const Rat& tolerance) {
    if (tolerance <= 0) throw MathError("height tolerance must be positive");
    const FieldPtr& f = x.field();
    IntPoly mp = f->minimal_polynomial(x);
    int deg = mp.degree();
    Rat lc = Rat(abs(mp.lc()));
    std::optional<Rat> exact;
    if (x.is_rational()) {
        Rat q = x.rational_value();
        Rat m = std::max(Rat(abs(q.get_num())), Rat(q.get_den()));
        exact = rat_pow(m, f->degree());
    }
    if (deg == 1) {
        // rational element: measure is max(|num|, den)
        Rat m = std::max(Rat(abs(mp.c[0])), Rat(abs(mp.c[1])));
        long prec = tolerance_bits(tolerance);
        Rat lo = std::max(Rat(0), log_lower(m, prec));
        Rat hi = std::max(lo, log_upper(m, prec));
        return HeightValue{lo, hi, tolerance, exact};
    }

    RootSet rs(mp, f->precision_cap_bits());
    Rat w = tolerance / 16;
    for (int round = 0;; ++round) {
        auto snap = rs.refine_below(w);
        // measure^2 = lc^2 * prod max(1,|a|)^2, using modulus squares throughout
        RatInterval prod2 = RatInterval::point(lc * lc);
        QPoly t{Rat(0), Rat(1)};
        for (const auto& r : snap->real) {
            RatInterval a = iv_square(iv_abs(eval_interval(t, RatInterval(r.lo, r.hi))));
            prod2 = iv_mul(prod2, iv_max(a, RatInterval::point(Rat(1))));
        }
        for (const auto& b : snap->upper_box) {
            RatInterval a2 = rc_modulus_squared(eval_rect(t, b));
            RatInterval m = iv_max(a2, RatInterval::point(Rat(1)));
            prod2 = iv_mul(prod2, iv_square(m));
        }
        if (prod2.lo > 0) {
            long prec = tolerance_bits(tolerance);
            Rat lo = log_lower(prod2.lo, prec) / (2 * deg);
            Rat hi = log_upper(prod2.hi, prec) / (2 * deg);
            if (lo < 0) lo = 0;
            if (hi < lo) hi = lo;
            if (hi - lo <= tolerance) return HeightValue{lo, hi, tolerance, exact};
        }
        w /= 256;
        if (round > 64) throw PrecisionCapExceededError("mahler refinement failed to converge");
    }
}

HeightCmp compare_height(const std::vector<FieldElement>& tuple, const Rat& bound) {
    if (bound <= 0) throw MathError("height bound must be positive");
    if (tuple.empty()) throw AllZeroError("comparing the height of an empty tuple");
    FieldPtr f = tuple[0].field();
    std::vector<FieldElement> with_one;
    with_one.push_back(f->one());
    for (const auto& x : tuple) with_one.push_back(x);
    ClearedTuple ct = clear_tuple(with_one);
    int d = ct.field->degree();
    Rat target = rat_pow(bound, d) * Rat(ct.content);  // compare arch part against this

    if (ct.all_rational) {
        Rat mx(0);
        for (const auto& y : ct.ys) {
            Rat a = abs(y.coords()[0]);
            if (a > mx) mx = a;
        }
        Rat lhs = rat_pow(mx, d);
        if (lhs < target) return HeightCmp::Below;
        if (lhs > target) return HeightCmp::Above;
        return HeightCmp::Equal;
    }

    Rat w(1, Int(1) << 32);
    for (int round = 0; round < 4; ++round) {
        try {
            auto snap = ct.field->roots().refine_below(w);
            RatInterval a = archimedean_interval(ct, snap);
            if (a.hi < target) return HeightCmp::Below;
            if (a.lo > target) return HeightCmp::Above;
        } catch (const CapError&) {
            break;  // the exact fallback is total and ignores the cap
        }
        w *= w;  // square the width: 2^-32, 2^-64, 2^-128 ...
        if (w < Rat(1, Int(1) << 256)) break;
    }
    return exact_archimedean_compare(ct.field, ct.ys, target);
}

}  // namespace pep
