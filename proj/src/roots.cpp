#include "pep/roots.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>

#include "pep/errors.hpp"

namespace pep {

// ------------------------------------------------------------- interval ops

RatInterval iv_add(const RatInterval& a, const RatInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
RatInterval iv_sub(const RatInterval& a, const RatInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

RatInterval iv_mul(const RatInterval& a, const RatInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)), std::max(std::max(p1, p2), std::max(p3, p4))};
}

RatInterval iv_neg(const RatInterval& a) { return {-a.hi, -a.lo}; }

RatInterval iv_abs(const RatInterval& a) {
    if (a.lo >= 0) return a;
    if (a.hi <= 0) return {-a.hi, -a.lo};
    return {Rat(0), std::max(Rat(-a.lo), a.hi)};
}

RatInterval iv_max(const RatInterval& a, const RatInterval& b) {
    return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

RatInterval iv_square(const RatInterval& a) {
    RatInterval ab = iv_abs(a);
    return {ab.lo * ab.lo, ab.hi * ab.hi};
}

RatRect rc_add(const RatRect& a, const RatRect& b) { return {iv_add(a.re, b.re), iv_add(a.im, b.im)}; }

RatRect rc_mul(const RatRect& a, const RatRect& b) {
    return {iv_sub(iv_mul(a.re, b.re), iv_mul(a.im, b.im)),
            iv_add(iv_mul(a.re, b.im), iv_mul(a.im, b.re))};
}

RatInterval rc_modulus_squared(const RatRect& z) { return iv_add(iv_square(z.re), iv_square(z.im)); }

RatInterval eval_interval(const QPoly& f, const RatInterval& x) {
    RatInterval acc = RatInterval::point(Rat(0));
    for (size_t i = f.size(); i-- > 0;) {
        acc = iv_mul(acc, x);
        acc = iv_add(acc, RatInterval::point(f[i]));
    }
    return acc;
}

RatRect eval_rect(const QPoly& f, const RatRect& z) {
    RatRect acc{RatInterval::point(Rat(0)), RatInterval::point(Rat(0))};
    for (size_t i = f.size(); i-- > 0;) {
        acc = rc_mul(acc, z);
        acc.re = iv_add(acc.re, RatInterval::point(f[i]));
    }
    return acc;
}

namespace {

Rat mpfr_to_rat(mpfr_t x) {
    if (mpfr_zero_p(x)) return Rat(0);
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
    Rat r(m);
    if (e >= 0) {
        mpz_class sc;
        mpz_mul_2exp(sc.get_mpz_t(), Rat(1).get_num().get_mpz_t(), static_cast<mp_bitcnt_t>(e));
        r *= sc;
    } else {
        mpz_class sc;
        mpz_mul_2exp(sc.get_mpz_t(), Rat(1).get_num().get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
        r /= sc;
    }
    return r;
}

Rat log_rounded(const Rat& x, long prec, mpfr_rnd_t rnd) {
    if (x <= 0) throw MathError("log of non-positive rational");
    mpfr_t v;
    mpfr_init2(v, prec);
    mpfr_set_q(v, x.get_mpq_t(), rnd);
    mpfr_log(v, v, rnd);
    Rat r = mpfr_to_rat(v);
    mpfr_clear(v);
    return r;
}

}  // namespace

Rat log_lower(const Rat& x, long prec_bits) { return log_rounded(x, prec_bits, MPFR_RNDD); }
Rat log_upper(const Rat& x, long prec_bits) { return log_rounded(x, prec_bits, MPFR_RNDU); }

std::pair<Rat, Rat> log_interval(const RatInterval& x, long prec_bits) {
    return {log_lower(x.lo, prec_bits), log_upper(x.hi, prec_bits)};
}

Rat sqrt_upper(const Rat& q) {
    if (q < 0) throw MathError("sqrt of negative rational");
    if (q == 0) return Rat(0);
    // sqrt(a/b) <= (isqrt(a*b)+1)/b
    Int ab = q.get_num() * q.get_den();
    Int root;
    mpz_sqrt(root.get_mpz_t(), ab.get_mpz_t());
    return Rat(root + 1, q.get_den());
}

// ------------------------------------------------------------- Sturm chains

namespace {

std::vector<QPoly> sturm_chain(const IntPoly& p) {
    RatDomain D;
    std::vector<QPoly> chain;
    chain.push_back(ip_to_q(p));
    chain.push_back(ip_to_q(ip_derivative(p)));
    while (!pis_zero(chain.back())) {
        QPoly r = pmod(D, chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        if (pis_zero(r)) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_variations(const std::vector<QPoly>& chain, const Rat& x) {
    int last = 0, var = 0;
    for (const auto& f : chain) {
        Rat v(0);
        for (size_t i = f.size(); i-- > 0;) v = v * x + f[i];
        int s = sgn(v);
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

// exact sign of p at a rational point
int sign_at(const IntPoly& p, const Rat& x) { return ip_sign_at(p, x.get_num(), x.get_den()); }

struct Bracket {
    Rat lo, hi;
    int slo, shi;  // nonzero opposite signs, or slo==shi==0 for exact root lo==hi
};

void isolate_in(const IntPoly& p, const std::vector<QPoly>& chain, Rat a, Rat b, int sa, int sb,
                std::vector<Bracket>& out, int depth) {
    if (depth > 4000) throw PrecisionCapExceededError("real root isolation depth exceeded");
    long count = sign_variations(chain, a) - sign_variations(chain, b);
    if (count <= 0) return;
    if (count == 1 && sa != 0 && sb != 0 && sa != sb) {
        out.push_back({a, b, sa, sb});
        return;
    }
    Rat mid = (a + b) / 2;
    int sm = sign_at(p, mid);
    if (sm == 0) {
        out.push_back({mid, mid, 0, 0});
        // nudge around the exact root until the gap holds exactly one root
        Rat eps = (b - a) / 4;
        while (true) {
            Rat l = mid - eps, r = mid + eps;
            if (l > a && r < b && sign_at(p, l) != 0 && sign_at(p, r) != 0 &&
                sign_variations(chain, l) - sign_variations(chain, r) == 1)
                break;
            eps /= 2;
            if (eps.get_den().get_str().size() > 4000)
                throw PrecisionCapExceededError("root nudge underflow");
        }
        Rat l = mid - eps, r = mid + eps;
        isolate_in(p, chain, a, l, sa, sign_at(p, l), out, depth + 1);
        isolate_in(p, chain, r, b, sign_at(p, r), sb, out, depth + 1);
        return;
    }
    isolate_in(p, chain, a, mid, sa, sm, out, depth + 1);
    isolate_in(p, chain, mid, b, sm, sb, out, depth + 1);
}

void refine_bracket(const IntPoly& p, Bracket& br, const Rat& target_width) {
    if (br.lo == br.hi) return;
    while (br.hi - br.lo > target_width) {
        Rat mid = (br.lo + br.hi) / 2;
        int sm = sign_at(p, mid);
        if (sm == 0) {
            br.lo = br.hi = mid;
            br.slo = br.shi = 0;
            return;
        }
        if (sm == br.slo) br.lo = mid;
        else br.hi = mid;
    }
}

// ------------------------------------------------- dyadic complex machinery

struct QC {
    Rat re, im;
};


QC qc_sub(const QC& a, const QC& b) { return {a.re - b.re, a.im - b.im}; }
QC qc_mul(const QC& a, const QC& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Rat qc_norm(const QC& a) { return a.re * a.re + a.im * a.im; }
QC qc_div(const QC& a, const QC& b) {
    Rat n = qc_norm(b);
    if (n == 0) throw DivisionByZeroError("complex division by zero");
    QC c = qc_mul(a, QC{b.re, -b.im});
    return {c.re / n, c.im / n};
}

Rat round_bits(const Rat& x, long bits) {
    // nearest multiple of 2^-bits
    mpz_class two_k;
    mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(bits));
    Rat scaled = x * two_k;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    if (scaled - Rat(fl) >= Rat(1, 2)) fl += 1;
    return Rat(fl) / Rat(two_k);
}

QC qc_round(const QC& a, long bits) { return {round_bits(a.re, bits), round_bits(a.im, bits)}; }

QC eval_qc(const IntPoly& p, const QC& z) {
    QC acc{Rat(0), Rat(0)};
    for (size_t i = p.c.size(); i-- > 0;) {
        acc = qc_mul(acc, z);
        acc.re += p.c[i];
    }
    return acc;
}

// Durand-Kerner at `bits` working precision (dyadic rounding each step).
std::vector<QC> durand_kerner(const IntPoly& p, long bits, const std::vector<QC>* warm) {
    int n = p.degree();
    std::vector<QC> z(n);
    if (warm && static_cast<int>(warm->size()) == n) {
        z = *warm;
        for (auto& v : z) v = qc_round(v, bits);
    } else {
        // points on a circle of the Cauchy radius, irrational-ish angle offset
        Rat R = ip_cauchy_root_bound(p);
        for (int i = 0; i < n; ++i) {
            double ang = 2.0 * 3.14159265358979323846 * (i + 0.354) / n;
            z[i] = qc_round(QC{R * Rat(static_cast<long>(1000 * std::cos(ang)), 1000),
                               R * Rat(static_cast<long>(1000 * std::sin(ang) + 7), 1000)},
                            bits);
        }
    }
    Rat tol = Rat(1, 1);
    for (long k = 0; k < bits; ++k) tol /= 2;
    tol *= tol;  // squared tolerance
    for (int iter = 0; iter < 60 + 4 * n; ++iter) {
        Rat worst(0);
        for (int i = 0; i < n; ++i) {
            QC denom{Rat(p.lc()), Rat(0)};
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                denom = qc_mul(denom, qc_sub(z[i], z[j]));
            }
            if (qc_norm(denom) == 0) {
                // coincident iterates: perturb deterministically
                z[i].re += Rat(1, 1000 + i);
                continue;
            }
            QC delta = qc_div(eval_qc(p, z[i]), denom);
            z[i] = qc_round(qc_sub(z[i], delta), bits);
            Rat dn = qc_norm(delta);
            if (dn > worst) worst = dn;
        }
        if (worst <= tol) break;
    }
    return z;
}

struct CertifiedDisk {
    QC c;
    Rat r;  // exact certified radius bound
};

// smallest-zero bound: some zero of p lies within deg * |p(z)/p'(z)| of z
bool certify_disk(const IntPoly& p, const IntPoly& dp, const QC& z, CertifiedDisk& out) {
    QC fv = eval_qc(p, z);
    QC dv = eval_qc(dp, z);
    Rat dn = qc_norm(dv);
    if (dn == 0) return false;
    Rat rho2 = qc_norm(fv) / dn * (p.degree() * p.degree());
    out.c = z;
    out.r = sqrt_upper(rho2);
    return true;
}

bool disks_disjoint(const CertifiedDisk& a, const CertifiedDisk& b) {
    Rat d2 = qc_norm(qc_sub(a.c, b.c));
    Rat rr = a.r + b.r;
    return d2 > rr * rr;
}

}  // namespace

// ---------------------------------------------------------------- RootSet

RootSet::RootSet(IntPoly squarefree, long precision_cap_bits)
    : poly_(std::move(squarefree)), cap_bits_(precision_cap_bits) {
    if (poly_.degree() < 1) throw InvalidPolynomialError("RootSet needs degree >= 1");
    IntPoly sf = ip_squarefree_part(poly_);
    if (sf.degree() != poly_.degree()) throw MathError("RootSet input must be squarefree");
    isolate();
}

void RootSet::isolate() {
    auto snap = std::make_shared<RootSnapshot>();
    // real part
    if (poly_.degree() == 1) {
        Rat root(-poly_.c[0], poly_.c[1]);
        root.canonicalize();
        snap->real.push_back({root, root, 0, 0});
        n_real_ = 1;
        n_pairs_ = 0;
        snap_ = snap;
        return;
    }
    auto chain = sturm_chain(poly_);
    Rat M = ip_cauchy_root_bound(poly_) + 1;
    std::vector<Bracket> brackets;
    int sa = sign_at(poly_, -M), sb = sign_at(poly_, M);
    isolate_in(poly_, chain, -M, M, sa, sb, brackets, 0);
    std::sort(brackets.begin(), brackets.end(), [](const Bracket& x, const Bracket& y) {
        return x.lo < y.lo;
    });
    for (const auto& b : brackets) snap->real.push_back({b.lo, b.hi, b.slo, b.shi});
    n_real_ = brackets.size();
    size_t npairs = (static_cast<size_t>(poly_.degree()) - n_real_) / 2;
    n_pairs_ = npairs;
    if ((poly_.degree() - n_real_) % 2 != 0)
        throw MathError("real root count parity violation");

    // complex part: iterate precision until certification succeeds
    if (npairs == 0) {
        snap_ = snap;
        return;
    }
    IntPoly dp = ip_derivative(poly_);
    std::vector<QC> warm;
    for (long bits = dk_bits_;; bits *= 2) {
        if (bits > cap_bits_) throw PrecisionCapExceededError("complex root isolation precision cap");
        std::vector<QC> zs = durand_kerner(poly_, bits, warm.empty() ? nullptr : &warm);
        warm = zs;
        std::vector<CertifiedDisk> upper, lower;
        size_t on_axis = 0;
        bool ok = true;
        for (const auto& z : zs) {
            CertifiedDisk d;
            if (!certify_disk(poly_, dp, z, d)) {
                ok = false;
                break;
            }
            if (d.c.im > d.r) upper.push_back(d);
            else if (d.c.im < -d.r) lower.push_back(d);
            else ++on_axis;
        }
        if (ok && upper.size() == npairs && lower.size() == npairs && on_axis == n_real_) {
            std::vector<CertifiedDisk> all = upper;
            all.insert(all.end(), lower.begin(), lower.end());
            for (size_t i = 0; i < all.size() && ok; ++i)
                for (size_t j = i + 1; j < all.size() && ok; ++j)
                    if (!disks_disjoint(all[i], all[j])) ok = false;
            if (ok) {
                std::sort(upper.begin(), upper.end(), [](const CertifiedDisk& a, const CertifiedDisk& b) {
                    if (a.c.re != b.c.re) return a.c.re < b.c.re;
                    return a.c.im < b.c.im;
                });
                for (const auto& d : upper) {
                    snap->upper.push_back({d.c.re, d.c.im, d.r});
                    snap->upper_box.push_back(
                        {RatInterval(d.c.re - d.r, d.c.re + d.r), RatInterval(d.c.im - d.r, d.c.im + d.r)});
                }
                dk_bits_ = bits;
                break;
            }
        }
    }
    snap_ = snap;
}

std::shared_ptr<const RootSnapshot> RootSet::current() const {
    std::lock_guard<std::mutex> lk(mu_);
    return snap_;
}

std::shared_ptr<const RootSnapshot> RootSet::refine_below(const Rat& w) const {
    std::lock_guard<std::mutex> lk(mu_);
    if (w <= 0) throw MathError("refinement width must be positive");
    {
        Rat capw(1);
        mpz_class two_k;
        mpz_ui_pow_ui(two_k.get_mpz_t(), 2, static_cast<unsigned long>(cap_bits_));
        capw /= Rat(two_k);
        if (w < capw) throw PrecisionCapExceededError("requested width beyond precision cap");
    }
    bool done = true;
    for (const auto& r : snap_->real)
        if (r.hi - r.lo > w) done = false;
    for (const auto& b : snap_->upper_box)
        if (b.re.width() > w || b.im.width() > w) done = false;
    if (done) return snap_;

    auto next = std::make_shared<RootSnapshot>(*snap_);
    for (auto& r : next->real) {
        if (r.hi - r.lo <= w) continue;
        Bracket br{r.lo, r.hi, r.sign_lo, r.sign_hi};
        refine_bracket(poly_, br, w);
        r = {br.lo, br.hi, br.slo, br.shi};
    }
    if (!next->upper.empty()) {
        IntPoly dp = ip_derivative(poly_);
        for (size_t i = 0; i < next->upper.size(); ++i) {
            DiskEnc& d = next->upper[i];
            RatRect& box = next->upper_box[i];
            Rat target = w / 4;
            if (Rat(2) * d.r <= w && box.re.width() <= w && box.im.width() <= w) continue;
            QC z{d.cx, d.cy};
            long need = static_cast<long>(mpz_sizeinbase(target.get_den().get_mpz_t(), 2)) + 64;
            long bits = dk_bits_;
            CertifiedDisk cur{z, d.r};
            int guard = 0;
            while (Rat(2) * cur.r > target) {
                if (++guard > 200) throw PrecisionCapExceededError("complex refinement stalled");
                bits = std::min(std::max(bits * 2, need), cap_bits_ * 4);
                // Newton step at higher precision
                QC fv = eval_qc(poly_, cur.c);
                QC dv = eval_qc(dp, cur.c);
                if (qc_norm(dv) == 0) throw MathError("derivative vanished during refinement");
                QC zn = qc_round(qc_sub(cur.c, qc_div(fv, dv)), bits);
                CertifiedDisk cand;
                if (!certify_disk(poly_, dp, zn, cand)) continue;
                // must stay inside the previous certified disk to keep the root identity
                Rat dist2 = qc_norm(qc_sub(cand.c, cur.c));
                if (cand.r <= cur.r && dist2 <= (cur.r - cand.r) * (cur.r - cand.r)) cur = cand;
            }
            d = {cur.c.re, cur.c.im, cur.r};
            // monotone rectangle: intersect with previous box
            RatRect nb{RatInterval(cur.c.re - cur.r, cur.c.re + cur.r),
                       RatInterval(cur.c.im - cur.r, cur.c.im + cur.r)};
            box.re.lo = std::max(box.re.lo, nb.re.lo);
            box.re.hi = std::min(box.re.hi, nb.re.hi);
            box.im.lo = std::max(box.im.lo, nb.im.lo);
            box.im.hi = std::min(box.im.hi, nb.im.hi);
        }
    }
    snap_ = next;
    return snap_;
}

}  // namespace pep
