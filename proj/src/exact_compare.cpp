#include <algorithm>
#include <cmath>

#include "pep/heights.hpp"

// Exact trichotomy for the archimedean product A = prod_places max_i ||y_i||_v
// against a positive rational.
//
// Ties among coordinates at a complex place are settled by a resultant
// construction: the difference of two squared moduli is a root of
// R(t) = Res_x(m(x), Res_y(m(y), t - F(x,y))) for an explicit F in Q[x,y], so
// a Cauchy-style lower bound on R's nonzero roots turns interval refinement
// into an exact zero test. With the per-place maxima fixed, A = |beta| for
// beta a product of one conjugate value per embedding; beta is a root of the
// integer polynomial G(t) = prod over all coordinate selections of
// (t - prod_tau y_s(tau)(theta_tau)), whose coefficients are recovered
// exactly by pinning interval coefficients to unique integers. Equality
// against the target then reduces to a separation bound on G. Every loop
// terminates, so the comparison is total.

namespace pep {

namespace {

QPoly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& pts) {
    RatDomain D;
    QPoly acc;  // running interpolant
    QPoly basis{Rat(1)};
    // Newton form: coefficients by divided differences
    std::vector<Rat> coef;
    std::vector<Rat> xs, ys;
    for (const auto& [x, y] : pts) {
        xs.push_back(x);
        ys.push_back(y);
    }
    size_t n = pts.size();
    std::vector<Rat> dd = ys;
    coef.push_back(dd[0]);
    for (size_t lev = 1; lev < n; ++lev) {
        for (size_t i = 0; i + lev < n; ++i) dd[i] = (dd[i + 1] - dd[i]) / (xs[i + lev] - xs[i]);
        dd.pop_back();
        coef.push_back(dd[0]);
    }
    for (size_t k = 0; k < n; ++k) {
        acc = padd(D, acc, pscale(D, basis, coef[k]));
        QPoly lin{-xs[k], Rat(1)};
        basis = pmul(D, basis, lin);
    }
    return acc;
}

// lower bound on |z| over nonzero roots of p; nullopt when p has none
std::optional<Rat> nonzero_root_lower_bound(const QPoly& p) {
    size_t k = 0;
    while (k < p.size() && p[k] == 0) ++k;
    if (k >= p.size()) throw MathError("zero polynomial has no root bound");
    if (k + 1 == p.size()) return std::nullopt;  // p = c t^k: only the zero root
    Rat s0 = abs(p[k]), m(0);
    for (size_t i = k + 1; i < p.size(); ++i) m = std::max(m, Rat(abs(p[i])));
    return s0 / (s0 + m);
}

struct CompareCtx {
    FieldPtr field;
    IntPoly m;
    std::unique_ptr<RootSet> roots;  // private uncapped root set
    std::vector<FieldElement> reps;  // coordinates deduplicated up to sign
    std::vector<QPoly> rep_co;
    Rat width;

    std::shared_ptr<const RootSnapshot> refine_more() {
        width /= Rat(Int(1) << 32);
        return roots->refine_below(width);
    }
    std::shared_ptr<const RootSnapshot> snap() { return roots->refine_below(width); }
};

// squared modulus interval of rep i at a place: real index v < r1, else pair
RatInterval place_value_sq(CompareCtx& cx, const std::shared_ptr<const RootSnapshot>& s, size_t i,
                           size_t v) {
    size_t r1 = s->real.size();
    if (v < r1) {
        RatInterval x = eval_interval(cx.rep_co[i], RatInterval(s->real[v].lo, s->real[v].hi));
        return iv_square(x);
    }
    return rc_modulus_squared(eval_rect(cx.rep_co[i], s->upper_box[v - r1]));
}

// R(t) = Res_x(m(x), Res_y(m(y), t - F(x,y))) with
// F(x,y) = Ci(x) Ci(y) - Cj(x) Cj(y); exact, via interpolation.
QPoly tie_resultant(const IntPoly& m, const QPoly& ci, const QPoly& cj) {
    RatDomain D;
    int d = m.degree();
    QPoly mq = ip_to_q(m);
    auto F_at = [&](const Rat& x0, const Rat& y0) {
        return peval(D, ci, x0) * peval(D, ci, y0) - peval(D, cj, x0) * peval(D, cj, y0);
    };
    // S(x0, t) = prod over roots y of m of (t - F(x0, y)): interpolate in t
    auto S_at_x = [&](const Rat& x0) {
        std::vector<std::pair<Rat, Rat>> pts;
        for (int t0 = 0; t0 <= d; ++t0) {
            // g(y) = t0 - F(x0, y)
            QPoly g;
            {
                QPoly ciy = pscale(D, ci, peval(D, ci, x0));
                QPoly cjy = pscale(D, cj, peval(D, cj, x0));
                g = psub(D, QPoly{Rat(t0)}, psub(D, ciy, cjy));
            }
            Rat r = pis_zero(g) ? Rat(0) : rat_resultant(mq, g);
            pts.emplace_back(Rat(t0), r);
        }
        return lagrange_interpolate(pts);  // degree d in t
    };
    long dx = 2L * d * std::max(1, d - 1) + 1;
    std::vector<QPoly> s_at(dx + 1);  // S(x_l, t) for nodes x_l = l
    for (long l = 0; l <= dx; ++l) s_at[static_cast<size_t>(l)] = S_at_x(Rat(l));
    (void)F_at;
    // R(t) interpolated in t from Res_x(m(x), S(x,t0))
    long dt = static_cast<long>(d) * d;
    std::vector<std::pair<Rat, Rat>> rpts;
    for (long t0 = 0; t0 <= dt; ++t0) {
        // build S(x, t0) by interpolating its x-values at the nodes
        std::vector<std::pair<Rat, Rat>> xpts;
        for (long l = 0; l <= dx; ++l) {
            Rat v = peval(D, s_at[static_cast<size_t>(l)], Rat(t0));
            xpts.emplace_back(Rat(l), v);
        }
        QPoly sx = lagrange_interpolate(xpts);
        Rat r = pis_zero(sx) ? Rat(0) : rat_resultant(mq, sx);
        rpts.emplace_back(Rat(t0), r);
    }
    return lagrange_interpolate(rpts);
}

// exact trichotomy of |tau(y_i)|^2 - |tau(y_j)|^2 at complex pair `pair_idx`
int compare_at_pair(CompareCtx& cx, size_t i, size_t j, size_t pair_idx) {
    QPoly R = tie_resultant(cx.m, cx.rep_co[i], cx.rep_co[j]);
    auto lambda = nonzero_root_lower_bound(R);
    auto s = cx.snap();
    for (;;) {
        size_t r1 = s->real.size();
        RatInterval vi = place_value_sq(cx, s, i, r1 + pair_idx);
        RatInterval vj = place_value_sq(cx, s, j, r1 + pair_idx);
        RatInterval eta = iv_sub(vi, vj);
        if (eta.lo > 0) return 1;
        if (eta.hi < 0) return -1;
        if (!lambda.has_value()) return 0;  // all roots of R are zero
        if (eta.lo > -*lambda && eta.hi < *lambda) return 0;
        s = cx.refine_more();
    }
}

// strict comparison at a real embedding (ties excluded by the +- dedup)
int compare_at_real(CompareCtx& cx, size_t i, size_t j, size_t real_idx) {
    auto s = cx.snap();
    for (;;) {
        RatInterval vi = place_value_sq(cx, s, i, real_idx);
        RatInterval vj = place_value_sq(cx, s, j, real_idx);
        RatInterval eta = iv_sub(vi, vj);
        if (eta.lo > 0) return 1;
        if (eta.hi < 0) return -1;
        s = cx.refine_more();
    }
}

struct PinnedPoly {
    std::vector<Int> coeffs;  // G exactly, index = power of t
};

// all embeddings as rectangles: real intervals (im = 0), upper and lower pairs
std::vector<RatRect> all_embedding_rects(const std::shared_ptr<const RootSnapshot>& s) {
    std::vector<RatRect> out;
    for (const auto& r : s->real)
        out.push_back({RatInterval(r.lo, r.hi), RatInterval(Rat(0), Rat(0))});
    for (const auto& b : s->upper_box) {
        out.push_back(b);
        out.push_back({b.re, RatInterval(-b.im.hi, -b.im.lo)});
    }
    return out;
}

PinnedPoly pin_annihilator(CompareCtx& cx) {
    size_t d = static_cast<size_t>(cx.m.degree());
    size_t mreps = cx.reps.size();
    double count = std::pow(static_cast<double>(mreps), static_cast<double>(d));
    if (count > 200000.0) throw PrecisionCapExceededError("tie certificate too large");
    size_t nsel = 1;
    for (size_t k = 0; k < d; ++k) nsel *= mreps;

    auto s = cx.snap();
    for (;;) {
        std::vector<RatRect> embs = all_embedding_rects(s);
        // value of each rep at each embedding
        std::vector<std::vector<RatRect>> vals(mreps, std::vector<RatRect>(d));
        for (size_t i = 0; i < mreps; ++i)
            for (size_t e = 0; e < d; ++e) vals[i][e] = eval_rect(cx.rep_co[i], embs[e]);
        // expand G = prod over selections (t - beta_s)
        std::vector<RatRect> g{RatRect{RatInterval::point(Rat(1)), RatInterval::point(Rat(0))}};
        std::vector<size_t> sel(d, 0);
        for (size_t n = 0; n < nsel; ++n) {
            RatRect beta{RatInterval::point(Rat(1)), RatInterval::point(Rat(0))};
            for (size_t e = 0; e < d; ++e) beta = rc_mul(beta, vals[sel[e]][e]);
            // g *= (t - beta)
            std::vector<RatRect> ng(g.size() + 1,
                                    RatRect{RatInterval::point(Rat(0)), RatInterval::point(Rat(0))});
            for (size_t k = 0; k < g.size(); ++k) {
                ng[k + 1].re = iv_add(ng[k + 1].re, g[k].re);
                ng[k + 1].im = iv_add(ng[k + 1].im, g[k].im);
                RatRect prod = rc_mul(g[k], beta);
                ng[k].re = iv_sub(ng[k].re, prod.re);
                ng[k].im = iv_sub(ng[k].im, prod.im);
            }
            g = std::move(ng);
            // advance selection counter
            for (size_t e = 0; e < d; ++e) {
                if (++sel[e] < mreps) break;
                sel[e] = 0;
            }
        }
        // pin every coefficient to a unique integer
        PinnedPoly out;
        out.coeffs.resize(g.size());
        bool ok = true;
        for (size_t k = 0; k < g.size() && ok; ++k) {
            const RatRect& c = g[k];
            if (!(c.im.lo <= 0 && 0 <= c.im.hi)) throw MathError("annihilator has drifted off the real axis");
            Int lo_c, hi_f;
            mpz_cdiv_q(lo_c.get_mpz_t(), c.re.lo.get_num().get_mpz_t(), c.re.lo.get_den().get_mpz_t());
            mpz_fdiv_q(hi_f.get_mpz_t(), c.re.hi.get_num().get_mpz_t(), c.re.hi.get_den().get_mpz_t());
            if (lo_c != hi_f) ok = false;
            else out.coeffs[k] = lo_c;
        }
        if (ok) return out;
        s = cx.refine_more();
    }
}

}  // namespace

HeightCmp exact_archimedean_compare(const FieldPtr& field, const std::vector<FieldElement>& ys,
                                    const Rat& target) {
    int d = field->degree();
    if (d == 1) {
        Rat mx(0);
        for (const auto& y : ys) mx = std::max(mx, Rat(abs(y.coords()[0])));
        if (mx < target) return HeightCmp::Below;
        if (mx > target) return HeightCmp::Above;
        return HeightCmp::Equal;
    }

    CompareCtx cx;
    cx.field = field;
    cx.m = field->defining_polynomial();
    // private root set: the exact path must not be limited by the field cap
    cx.roots = std::make_unique<RootSet>(cx.m, 1L << 22);
    cx.width = Rat(1, Int(1) << 64);

    // deduplicate coordinates up to sign; |tau(y)| only sees the class
    for (const auto& y : ys) {
        bool dup = false;
        for (const auto& r : cx.reps)
            if (r == y || r == -y) {
                dup = true;
                break;
            }
        if (!dup) cx.reps.push_back(y);
    }
    for (const auto& r : cx.reps) {
        QPoly co(r.coords().begin(), r.coords().end());
        RatDomain D;
        pnormalize(D, co);
        cx.rep_co.push_back(co);
    }

    size_t r1 = field->real_embeddings(), r2 = field->complex_pairs();
    // per-place argmax by exact pairwise comparison
    std::vector<size_t> sel(r1 + r2, 0);
    for (size_t v = 0; v < r1 + r2; ++v) {
        size_t best = 0;
        for (size_t i = 1; i < cx.reps.size(); ++i) {
            int c = (v < r1) ? compare_at_real(cx, i, best, v) : compare_at_pair(cx, i, best, v - r1);
            if (c > 0) best = i;
        }
        sel[v] = best;
    }

    // A-interval from the selected coordinates; refine and compare
    auto a_interval = [&](const std::shared_ptr<const RootSnapshot>& s) {
        RatInterval prod = RatInterval::point(Rat(1));
        for (size_t v = 0; v < r1; ++v) {
            RatInterval x = eval_interval(cx.rep_co[sel[v]], RatInterval(s->real[v].lo, s->real[v].hi));
            prod = iv_mul(prod, iv_abs(x));
        }
        for (size_t v = 0; v < r2; ++v)
            prod = iv_mul(prod, rc_modulus_squared(eval_rect(cx.rep_co[sel[r1 + v]], s->upper_box[v])));
        return prod;
    };
    // beta-interval: signed real factors, squared pair factors
    auto beta_interval = [&](const std::shared_ptr<const RootSnapshot>& s) {
        RatInterval prod = RatInterval::point(Rat(1));
        for (size_t v = 0; v < r1; ++v)
            prod = iv_mul(prod, eval_interval(cx.rep_co[sel[v]], RatInterval(s->real[v].lo, s->real[v].hi)));
        for (size_t v = 0; v < r2; ++v)
            prod = iv_mul(prod, rc_modulus_squared(eval_rect(cx.rep_co[sel[r1 + v]], s->upper_box[v])));
        return prod;
    };

    auto s = cx.snap();
    for (int round = 0; round < 3; ++round) {
        RatInterval a = a_interval(s);
        if (a.hi < target) return HeightCmp::Below;
        if (a.lo > target) return HeightCmp::Above;
        s = cx.refine_more();
    }

    PinnedPoly g = pin_annihilator(cx);
    QPoly gq;
    for (const auto& c : g.coeffs) gq.emplace_back(c);
    RatDomain D;
    pnormalize(D, gq);

    // sign of beta, then equality against the signed target
    Rat signed_target;
    for (;;) {
        RatInterval b = beta_interval(s);
        if (b.lo > 0) {
            signed_target = target;
            break;
        }
        if (b.hi < 0) {
            signed_target = -target;
            break;
        }
        s = cx.refine_more();
    }
    Rat g_at = peval(D, gq, signed_target);
    if (g_at != 0) {
        // beta != +-target: refinement must separate
        for (;;) {
            RatInterval a = a_interval(s);
            if (a.hi < target) return HeightCmp::Below;
            if (a.lo > target) return HeightCmp::Above;
            s = cx.refine_more();
        }
    }
    QPoly shifted = pshift_var(D, gq, signed_target);  // roots are beta' - signed_target
    auto lambda = nonzero_root_lower_bound(shifted);
    for (;;) {
        RatInterval b = beta_interval(s);
        RatInterval diff = iv_sub(b, RatInterval::point(signed_target));
        if (diff.lo > 0 || diff.hi < 0) {
            RatInterval a = a_interval(s);
            if (a.hi < target) return HeightCmp::Below;
            if (a.lo > target) return HeightCmp::Above;
        } else if (!lambda.has_value() || (diff.lo > -*lambda && diff.hi < *lambda)) {
            return HeightCmp::Equal;  // beta is a root of `shifted` within the separation bound
        }
        s = cx.refine_more();
    }
}

}  // namespace pep
