#include "pep/factor.hpp"

#include <algorithm>
#include <cstdint>

#include "pep/errors.hpp"

namespace pep {

// ---------------------------------------------------------------- integers

bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    // GMP's Miller-Rabin + BPSW; 40 rounds is far beyond desk-scale needs.
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

Int pollard_rho(const Int& n) {
    // Brent's variant with deterministic restarts.
    if (n % 2 == 0) return Int(2);
    for (unsigned long c = 1; c < 64; ++c) {
        Int x(2), y(2), d(1);
        unsigned long power = 1, lam = 0;
        auto step = [&](Int v) { return (v * v + c) % n; };
        y = step(x);
        while (d == 1) {
            if (lam == power) {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = step(y);
            ++lam;
            Int diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            d = int_gcd(diff, n);
            if (lam > (1ul << 24)) break;  // give up on this c
        }
        if (d != 1 && d != n) return d;
    }
    throw CapError("integer factorization effort cap exceeded for " + n.get_str());
}

void factor_rec(Int n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::map<Int, unsigned> int_factorize(const Int& n) {
    if (n <= 0) throw MathError("int_factorize expects n > 0");
    std::map<Int, unsigned> out;
    Int m = n;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
        while (m % p == 0) {
            ++out[Int(p)];
            m /= p;
        }
    }
    // trial division up to 10^6 keeps rho inputs honest
    for (long p = 53; p < 1000000 && m > 1; p += 2) {
        if (m % p == 0) {
            while (m % p == 0) {
                ++out[Int(p)];
                m /= p;
            }
        }
        Int psq = Int(p) * p;
        if (psq > m) break;
    }
    if (m > 1) factor_rec(m, out);
    return out;
}

std::pair<Int, Int> squarefree_decomposition(const Int& n) {
    if (n == 0) throw MathError("squarefree decomposition of zero");
    auto f = int_factorize(abs(n));
    Int m(1), s(1);
    for (const auto& [p, e] : f) {
        if (e % 2 == 1) m *= p;
        for (unsigned i = 0; i < e / 2; ++i) s *= p;
    }
    if (n < 0) m = -m;
    return {m, s};
}

bool is_squarefree_int(const Int& n) {
    auto f = int_factorize(abs(n));
    for (const auto& [p, e] : f)
        if (e > 1) return false;
    return true;
}

std::vector<Int> divisors(const Int& n) {
    auto f = int_factorize(abs(n));
    std::vector<Int> out{Int(1)};
    for (const auto& [p, e] : f) {
        size_t base = out.size();
        Int pk(1);
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --------------------------------------------------------- mod-p machinery

namespace {

using u64 = std::uint64_t;

struct ModP {
    u64 p;
    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b % p) % p; }
    u64 mul(u64 a, u64 b) const { return (a * b) % p; }  // p < 2^31
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a % p, p - 2); }
};

using MPoly = std::vector<u64>;  // coeff of x^i at index i, normalized

void mnorm(MPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
int mdeg(const MPoly& f) { return static_cast<int>(f.size()) - 1; }

MPoly mfrom_int(const IntPoly& f, const ModP& m) {
    MPoly r(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) {
        Int v = f.c[i] % static_cast<long>(m.p);
        if (v < 0) v += static_cast<long>(m.p);
        r[i] = v.get_ui();
    }
    mnorm(r);
    return r;
}

MPoly mmul(const MPoly& a, const MPoly& b, const ModP& m) {
    if (a.empty() || b.empty()) return {};
    MPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % m.p;
    }
    mnorm(r);
    return r;
}

MPoly mmonic(MPoly f, const ModP& m) {
    if (f.empty()) return f;
    u64 s = m.inv(f.back());
    for (auto& c : f) c = m.mul(c, s);
    return f;
}

std::pair<MPoly, MPoly> mdivrem(MPoly a, const MPoly& b, const ModP& m) {
    MPoly q;
    if (b.empty()) throw DivisionByZeroError("mod-p division by zero");
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
    u64 lbinv = m.inv(b.back());
    while (a.size() >= b.size()) {
        u64 f = m.mul(a.back(), lbinv);
        size_t shift = a.size() - b.size();
        if (f != 0) {
            q[shift] = f;
            for (size_t i = 0; i < b.size(); ++i) a[shift + i] = m.sub(a[shift + i], m.mul(f, b[i]));
        }
        a.pop_back();
        mnorm(a);
        if (a.size() < b.size()) break;
    }
    mnorm(q);
    return {q, a};
}

MPoly mmod(const MPoly& a, const MPoly& b, const ModP& m) { return mdivrem(a, b, m).second; }

MPoly mgcd(MPoly a, MPoly b, const ModP& m) {
    while (!b.empty()) {
        MPoly r = mmod(a, b, m);
        a = std::move(b);
        b = std::move(r);
    }
    return mmonic(std::move(a), m);
}

MPoly mderiv(const MPoly& f, const ModP& m) {
    if (f.size() <= 1) return {};
    MPoly r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = (f[i] * (i % m.p)) % m.p;
    mnorm(r);
    return r;
}

MPoly mpowmod(MPoly base, Int e, const MPoly& f, const ModP& m) {
    MPoly r{1};
    base = mmod(base, f, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mmod(mmul(r, base, m), f, m);
        base = mmod(mmul(base, base, m), f, m);
        e >>= 1;
    }
    return r;
}

// Berlekamp for monic squarefree f mod p (p small).
std::vector<MPoly> berlekamp(const MPoly& f, const ModP& m) {
    int n = mdeg(f);
    if (n <= 1) return {f};
    // Q[i] = x^(i*p) mod f
    std::vector<MPoly> Q(n);
    MPoly xp = mpowmod(MPoly{0, 1}, Int(static_cast<unsigned long>(m.p)), f, m);
    Q[0] = MPoly{1};
    for (int i = 1; i < n; ++i) Q[i] = mmod(mmul(Q[i - 1], xp, m), f, m);
    // rows of (Q - I) in a matrix, kernel over F_p
    std::vector<std::vector<u64>> mat(n, std::vector<u64>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= mdeg(Q[i]); ++j) mat[i][j] = Q[i][j];
        mat[i][i] = m.sub(mat[i][i], 1);
    }
    // row-reduce the transpose-free way: we need null space of M^T v = 0 where
    // rows are images; standard Berlekamp uses v M = 0, i.e. kernel of M acting
    // on row vectors. Set up columns as unknowns via Gaussian elimination on M^T.
    std::vector<std::vector<u64>> t(n, std::vector<u64>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = mat[j][i];
    std::vector<int> pivot_of_row(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (t[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(t[rank], t[piv]);
        u64 inv = m.inv(t[rank][col]);
        for (int j = 0; j < n; ++j) t[rank][j] = m.mul(t[rank][j], inv);
        for (int r = 0; r < n; ++r) {
            if (r == rank || t[r][col] == 0) continue;
            u64 fct = t[r][col];
            for (int j = 0; j < n; ++j) t[r][j] = m.sub(t[r][j], m.mul(fct, t[rank][j]));
        }
        pivot_of_row[rank] = col;
        ++rank;
    }
    // free columns give kernel basis vectors
    std::vector<MPoly> basis;
    std::vector<bool> is_pivot(n, false);
    for (int r = 0; r < rank; ++r) is_pivot[pivot_of_row[r]] = true;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        std::vector<u64> v(n, 0);
        v[col] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_of_row[r]] = m.sub(0, t[r][col]);
        MPoly vp(v.begin(), v.end());
        mnorm(vp);
        basis.push_back(vp);
    }
    size_t nfactors = basis.size();
    std::vector<MPoly> factors{f};
    if (nfactors <= 1) return factors;
    for (const MPoly& v : basis) {
        if (factors.size() == nfactors) break;
        if (mdeg(v) < 1) continue;  // constant vector splits nothing
        std::vector<MPoly> next;
        for (const MPoly& g : factors) {
            if (mdeg(g) <= 1) {
                next.push_back(g);
                continue;
            }
            MPoly rem = g;
            for (u64 a = 0; a < m.p && mdeg(rem) > 0; ++a) {
                MPoly shifted = v;
                if (shifted.empty()) shifted.push_back(0);
                shifted[0] = m.sub(shifted[0], a);
                mnorm(shifted);
                MPoly d = mgcd(rem, shifted, m);
                if (mdeg(d) > 0 && mdeg(d) < mdeg(rem)) {
                    next.push_back(d);
                    rem = mdivrem(rem, d, m).first;
                }
            }
            if (mdeg(rem) > 0) next.push_back(rem);
        }
        factors = std::move(next);
    }
    if (factors.size() != nfactors) throw MathError("berlekamp split incomplete");
    return factors;
}

// Hensel: lift f = g*h (mod p^k) to mod p^(k+1); s*g + t*h = 1 (mod p),
// g monic. All coefficient representatives live in [0, p^(k+1)).
struct HenselPair {
    IntPoly g, h;
};

IntPoly ip_mod_int(const IntPoly& f, const Int& m) {
    IntPoly r = f;
    for (auto& c : r.c) {
        c %= m;
        if (c < 0) c += m;
    }
    r.normalize();
    return r;
}

MPoly to_modp(const IntPoly& f, const ModP& m) { return mfrom_int(f, m); }

IntPoly from_modp(const MPoly& f) {
    std::vector<Int> c(f.size());
    for (size_t i = 0; i < f.size(); ++i) c[i] = Int(static_cast<unsigned long>(f[i]));
    return IntPoly(std::move(c));
}

// One linear lifting step for the full factor list (g_i monic mod p^k).
std::vector<IntPoly> hensel_step(const IntPoly& f, std::vector<IntPoly> gs, const ModP& m,
                                 const Int& pk) {
    // error e = (f - prod g) / p^k  (mod p)
    IntPoly prod = IntPoly::from_longs({1});
    for (const auto& g : gs) prod = ip_mul(prod, g);
    IntPoly diff = ip_sub(f, prod);
    std::vector<Int> ec(diff.c.size());
    for (size_t i = 0; i < diff.c.size(); ++i) {
        Int q = diff.c[i] / pk;
        if (q * pk != diff.c[i]) throw MathError("hensel: error term not divisible");
        ec[i] = q;
    }
    IntPoly e(std::move(ec));
    MPoly emod = to_modp(e, m);
    // Lagrange-style correction: for each i, u_i = e * t_i mod g_i where
    // t_i = inverse of prod_{j != i} g_j modulo g_i (mod p).
    std::vector<IntPoly> out;
    out.reserve(gs.size());
    for (size_t i = 0; i < gs.size(); ++i) {
        MPoly gi = to_modp(gs[i], m);
        MPoly rest{1};
        for (size_t j = 0; j < gs.size(); ++j)
            if (j != i) rest = mmod(mmul(rest, to_modp(gs[j], m), m), gi, m);
        // invert rest mod gi by extended Euclid over F_p
        MPoly r0 = gi, r1 = rest, s0 = {}, s1 = {1};
        while (!r1.empty()) {
            auto [q, r2] = mdivrem(r0, r1, m);
            MPoly s2 = s0;
            MPoly qs1 = mmul(q, s1, m);
            // s2 = s0 - q*s1
            s2.resize(std::max(s2.size(), qs1.size()), 0);
            for (size_t z = 0; z < qs1.size(); ++z) s2[z] = m.sub(z < s2.size() ? s2[z] : 0, qs1[z]);
            mnorm(s2);
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (mdeg(r0) != 0) throw MathError("hensel: factors not coprime mod p");
        u64 inv = m.inv(r0[0]);
        for (auto& cc : s0) cc = m.mul(cc, inv);
        MPoly ti = s0;
        MPoly ui = mmod(mmul(emod, ti, m), gi, m);
        IntPoly lifted = ip_add(gs[i], ip_scale(from_modp(ui), pk));
        out.push_back(ip_mod_int(lifted, pk * static_cast<long>(m.p)));
    }
    return out;
}

Int mignotte_bound(const IntPoly& f) {
    // sqrt(n+1) * 2^n * max|coeff| bounds any factor's coefficients
    Int h(0);
    for (const auto& c : f.c) h = std::max(h, Int(abs(c)));
    Int b = h * int_pow(Int(2), f.degree());
    Int root;
    mpz_sqrt(root.get_mpz_t(), Int((f.degree() + 1)).get_mpz_t());
    return b * (root + 1);
}

bool next_combination(std::vector<size_t>& idx, size_t n) {
    size_t k = idx.size();
    for (size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Zassenhaus recombination given lifted monic modular factors.
std::vector<IntPoly> recombine(IntPoly f, std::vector<IntPoly> mods, const Int& pk) {
    std::vector<IntPoly> out;
    auto symmetric = [&](IntPoly g) {
        Int half = pk / 2;
        for (auto& c : g.c)
            if (c > half) c -= pk;
        g.normalize();
        return g;
    };
    size_t subset_size = 1;
    while (2 * subset_size <= mods.size()) {
        bool found = false;
        std::vector<size_t> idx(subset_size);
        for (size_t i = 0; i < subset_size; ++i) idx[i] = i;
        do {
            IntPoly cand = IntPoly::from_longs({1});
            for (size_t i : idx) cand = ip_mod_int(ip_mul(cand, mods[i]), pk);
            cand = symmetric(cand);
            if (ip_divides(cand, f)) {
                out.push_back(ip_primitive(cand));
                f = ip_divexact(f, cand);
                std::vector<IntPoly> rest;
                for (size_t i = 0, j = 0; i < mods.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    rest.push_back(mods[i]);
                }
                mods = std::move(rest);
                found = true;
                break;
            }
        } while (next_combination(idx, mods.size()));
        if (!found) ++subset_size;
    }
    if (f.degree() > 0) out.push_back(ip_primitive(f));
    return out;
}

std::vector<IntPoly> factor_monic_squarefree(const IntPoly& f) {
    if (f.degree() <= 1) return {f};
    // prime with f squarefree mod p
    ModP m{0};
    MPoly fp;
    for (u64 p : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull, 41ull,
                  43ull, 47ull, 53ull, 59ull, 61ull, 67ull, 71ull, 73ull, 79ull, 83ull, 89ull, 97ull,
                  101ull, 103ull, 107ull, 109ull, 113ull, 127ull, 131ull, 137ull, 139ull, 149ull,
                  151ull, 157ull, 163ull, 167ull, 173ull, 179ull, 181ull, 191ull, 193ull, 197ull,
                  199ull, 2ull}) {
        ModP cand{p};
        MPoly g = mfrom_int(f, cand);
        if (mdeg(g) != f.degree()) continue;  // lc vanished
        MPoly d = mderiv(g, cand);
        if (d.empty()) continue;
        if (mdeg(mgcd(g, d, cand)) != 0) continue;
        m = cand;
        fp = mmonic(std::move(g), cand);
        break;
    }
    if (m.p == 0) throw MathError("no usable prime for polynomial factorization");

    std::vector<MPoly> modfactors = berlekamp(fp, m);
    if (modfactors.size() == 1) return {f};

    // lift to p^K beyond twice the Mignotte bound
    Int bound = 2 * mignotte_bound(f) + 1;
    Int pk(static_cast<unsigned long>(m.p));
    std::vector<IntPoly> lifted;
    lifted.reserve(modfactors.size());
    for (const auto& g : modfactors) lifted.push_back(from_modp(g));
    while (pk <= bound) {
        lifted = hensel_step(f, std::move(lifted), m, pk);
        pk *= static_cast<long>(m.p);
    }
    return recombine(f, std::move(lifted), pk);
}

// Primitive squarefree, not necessarily monic: classical monic substitution
// g(t) = lc^(n-1) f(t/lc), factor g, map factors back through t -> lc*t.
std::vector<IntPoly> factor_primitive_squarefree(const IntPoly& f) {
    if (f.degree() <= 1) return {f};
    if (f.is_monic()) return factor_monic_squarefree(f);
    const Int& L = f.lc();
    size_t n = static_cast<size_t>(f.degree());
    std::vector<Int> g(n + 1);
    for (size_t i = 0; i <= n; ++i)
        g[i] = (i == n) ? Int(1) : f.c[i] * int_pow(L, static_cast<unsigned long>(n - 1 - i));
    auto monic_factors = factor_monic_squarefree(IntPoly(std::move(g)));
    std::vector<IntPoly> out;
    out.reserve(monic_factors.size());
    for (const auto& h : monic_factors) {
        std::vector<Int> back(h.c.size());
        for (size_t i = 0; i < h.c.size(); ++i)
            back[i] = h.c[i] * int_pow(L, static_cast<unsigned long>(i));
        out.push_back(ip_primitive(IntPoly(std::move(back))));
    }
    return out;
}

}  // namespace

std::vector<std::pair<IntPoly, unsigned>> factor_int_poly(const IntPoly& f0) {
    if (f0.is_zero()) throw MathError("factoring the zero polynomial");
    if (f0.degree() > 64) throw DegreeCapExceededError("polynomial degree beyond desk-scale cap");
    IntPoly f = ip_primitive(f0);
    std::vector<std::pair<IntPoly, unsigned>> out;
    if (f.degree() == 0) return out;

    // squarefree split (Yun): f = prod piece_m^m
    {
        IntPoly g = ip_gcd(f, ip_derivative(f));
        IntPoly w = ip_divexact(f, g);
        unsigned mult = 1;
        while (w.degree() > 0) {
            IntPoly y = ip_gcd(w, g);
            IntPoly piece = ip_divexact(w, y);
            if (piece.degree() > 0)
                for (const auto& fac : factor_primitive_squarefree(piece)) out.emplace_back(fac, mult);
            w = y;
            g = ip_divexact(g, y);
            ++mult;
            if (mult > 200) throw MathError("squarefree decomposition runaway");
        }
    }
    return out;
}

bool is_irreducible_int_poly(const IntPoly& f) {
    IntPoly p = ip_primitive(f);
    if (p.degree() <= 0) return false;
    if (p.degree() == 1) return true;
    auto fac = factor_int_poly(p);
    return fac.size() == 1 && fac[0].second == 1 && fac[0].first.degree() == p.degree();
}

std::vector<Rat> rational_roots(const IntPoly& f) {
    std::vector<Rat> roots;
    if (f.is_zero()) return roots;
    IntPoly p = ip_primitive(f);
    // strip powers of t
    size_t zshift = 0;
    while (zshift < p.c.size() && p.c[zshift] == 0) ++zshift;
    if (zshift > 0) {
        roots.emplace_back(0);
        p.c.erase(p.c.begin(), p.c.begin() + zshift);
    }
    if (p.degree() < 1) return roots;
    for (const Int& num : divisors(p.c[0]))
        for (const Int& den : divisors(p.lc()))
            for (int s : {1, -1}) {
                Rat cand(s * num, den);
                cand.canonicalize();
                if (ip_eval(p, cand) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace pep
