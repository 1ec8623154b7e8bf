#include "pep/numberfield.hpp"

#include <algorithm>

#include "pep/factor.hpp"
#include "pep/intmat.hpp"

namespace pep {

// ------------------------------------------------------------ FieldElement

FieldElement::FieldElement(FieldPtr field, std::vector<Rat> power_coords)
    : field_(std::move(field)), co_(std::move(power_coords)) {
    if (!field_) throw MathError("element without a field");
    if (co_.size() != static_cast<size_t>(field_->degree()))
        throw DimensionMismatchError("coordinate count does not match field degree");
}

bool FieldElement::is_zero() const {
    for (const auto& c : co_)
        if (c != 0) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (size_t i = 1; i < co_.size(); ++i)
        if (co_[i] != 0) return false;
    return true;
}

Rat FieldElement::rational_value() const {
    if (!is_rational()) throw MathError("element is not rational");
    return co_[0];
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field() || !b.field()) throw MathError("uninitialized field element");
    if (a.field().get() == b.field().get()) return;
    if (!a.field()->same_field(*b.field()))
        throw FieldMismatchError("elements belong to different fields");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(*this, o);
    std::vector<Rat> r(co_.size());
    for (size_t i = 0; i < co_.size(); ++i) r[i] = co_[i] + o.co_[i];
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_field(*this, o);
    std::vector<Rat> r(co_.size());
    for (size_t i = 0; i < co_.size(); ++i) r[i] = co_[i] - o.co_[i];
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator-() const {
    std::vector<Rat> r(co_.size());
    for (size_t i = 0; i < co_.size(); ++i) r[i] = -co_[i];
    return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(*this, o);
    return FieldElement(field_, field_->mul_coords(co_, o.co_));
}

FieldElement FieldElement::inverse() const {
    return FieldElement(field_, field_->inv_coords(co_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    require_same_field(*this, o);
    return *this * o.inverse();
}

FieldElement FieldElement::pow(const Int& e) const {
    if (e == 0) return field_->one();
    FieldElement base = e < 0 ? inverse() : *this;
    Int n = abs(e);
    FieldElement acc = field_->one();
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (!field_ || !o.field_) return !field_ && !o.field_;
    if (field_.get() != o.field_.get() && !field_->same_field(*o.field_)) return false;
    return co_ == o.co_;
}

int FieldElement::cmp(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    for (size_t i = 0; i < a.co_.size(); ++i) {
        int c = pep::sgn(a.co_[i] - b.co_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string FieldElement::str(const std::string& symbol) const {
    std::string s;
    for (size_t i = co_.size(); i-- > 0;) {
        const Rat& c = co_[i];
        if (c == 0) continue;
        bool first = s.empty();
        Rat a = abs(c);
        std::string mag;
        if (i == 0) mag = a.get_str();
        else {
            std::string pw = symbol + (i == 1 ? "" : "^" + std::to_string(i));
            mag = (a == 1) ? pw : a.get_str() + "*" + pw;
        }
        if (first) s += (c < 0 ? "-" : "") + mag;
        else s += (c < 0 ? " - " : " + ") + mag;
    }
    return s.empty() ? "0" : s;
}

std::string FieldElement::key() const {
    std::string s;
    for (size_t i = 0; i < co_.size(); ++i) {
        if (i) s += ",";
        s += co_[i].get_str();
    }
    return s;
}

// ------------------------------------------------------------- NumberField

namespace {

// closed-form quadratic integral basis; returns rows in power coordinates
std::vector<std::vector<Rat>> quadratic_basis(const IntPoly& f, Int& field_disc) {
    // f = x^2 + b x + c, disc0 = b^2 - 4c = m s^2, sqrt(disc0) = 2 theta + b
    Int b = f.coeff(1), c = f.coeff(0);
    Int disc0 = b * b - 4 * c;
    auto [m, s] = squarefree_decomposition(disc0);
    std::vector<std::vector<Rat>> rows(2, std::vector<Rat>(2, Rat(0)));
    rows[0][0] = 1;
    Int mm = m % 4;
    if (mm < 0) mm += 4;
    if (mm == 1) {
        // (1 + sqrt(m))/2 = (s + b + 2 theta) / (2 s)
        rows[1][0] = Rat(s + b, 2 * s);
        rows[1][1] = Rat(2, 2 * s);
        field_disc = m;
    } else {
        // sqrt(m) = (2 theta + b)/s
        rows[1][0] = Rat(b, s);
        rows[1][1] = Rat(2, s);
        field_disc = 4 * m;
    }
    rows[1][0].canonicalize();
    rows[1][1].canonicalize();
    return rows;
}

}  // namespace

FieldPtr NumberField::make(const IntPoly& f, std::optional<std::vector<std::vector<Rat>>> basis_opt,
                           const FieldOptions& options) {
    if (f.is_zero() || f.degree() < 1)
        throw InvalidPolynomialError("defining polynomial must have degree >= 1");
    if (!f.is_monic()) throw NonMonicError("defining polynomial must be monic");
    if (f.degree() > 24) throw DegreeCapExceededError("defining polynomial degree above desk-scale cap (24)");
    if (f.degree() == 1 && f.coeff(0) == 0)
        throw InvalidPolynomialError("degenerate defining polynomial x; use a shifted generator such as x-1");

    // irreducibility: linear factors settle degrees 2 and 3, Zassenhaus beyond
    if (f.degree() >= 2) {
        if (!rational_roots(f).empty()) throw ReduciblePolynomialError("defining polynomial has a rational root");
        if (f.degree() > 3 && !is_irreducible_int_poly(f))
            throw ReduciblePolynomialError("defining polynomial is reducible");
    }

    auto nf = std::shared_ptr<NumberField>(new NumberField());
    nf->poly_ = f;
    nf->d_ = f.degree();
    nf->options_ = options;
    Int disc_poly = ip_discriminant(f);

    // theta-power reduction rows for multiplication
    {
        size_t d = static_cast<size_t>(nf->d_);
        std::vector<std::vector<Rat>> red;
        std::vector<Rat> cur(d, Rat(0));  // theta^d = -(a_0 + ... + a_{d-1} theta^{d-1})
        for (size_t i = 0; i < d; ++i) cur[i] = -Rat(f.c[i]);
        red.push_back(cur);
        for (size_t k = 1; k + 1 < d; ++k) {
            // multiply by theta: shift and reduce
            std::vector<Rat> nxt(d, Rat(0));
            for (size_t i = 0; i + 1 < d; ++i) nxt[i + 1] = cur[i];
            if (cur[d - 1] != 0)
                for (size_t i = 0; i < d; ++i) nxt[i] += cur[d - 1] * red[0][i];
            red.push_back(nxt);
            cur = red.back();
        }
        nf->theta_red_ = std::move(red);
    }

    // integral basis
    std::vector<std::vector<Rat>> basis;
    Int field_disc;
    if (basis_opt.has_value()) {
        basis = std::move(*basis_opt);
        if (basis.size() != static_cast<size_t>(nf->d_))
            throw IntegralBasisRequiredError("integral basis must have [K:Q] elements");
        for (auto& row : basis)
            if (row.size() != static_cast<size_t>(nf->d_))
                throw IntegralBasisRequiredError("integral basis rows must be power-basis coordinates");
        field_disc = 0;  // filled below from det
    } else if (nf->d_ == 1) {
        basis = {{Rat(1)}};
        field_disc = 1;
    } else if (nf->d_ == 2) {
        basis = quadratic_basis(f, field_disc);
    } else {
        bool sqfree;
        try {
            sqfree = is_squarefree_int(disc_poly);
        } catch (const CapError&) {
            throw IntegralBasisRequiredError(
                "discriminant could not be certified squarefree; supply an integral basis");
        }
        if (!sqfree)
            throw IntegralBasisRequiredError(
                "polynomial discriminant is not squarefree; supply an integral basis");
        basis.assign(static_cast<size_t>(nf->d_), std::vector<Rat>(static_cast<size_t>(nf->d_), Rat(0)));
        for (size_t i = 0; i < basis.size(); ++i) basis[i][i] = 1;
        field_disc = disc_poly;
    }
    nf->basis_ = basis;

    // change-of-basis checks; basis rows are power coordinates, so integral
    // coordinates c of x satisfy x_pow = B^T c
    RatDomain D;
    MatOf<RatDomain> B(basis.begin(), basis.end());
    Rat detB = mat_det(D, B);
    if (detB == 0) throw IntegralBasisRequiredError("integral basis is singular");
    size_t dd = static_cast<size_t>(nf->d_);
    MatOf<RatDomain> BT(dd, std::vector<Rat>(dd, Rat(0)));
    for (size_t i = 0; i < dd; ++i)
        for (size_t j = 0; j < dd; ++j) BT[i][j] = B[j][i];
    nf->basis_inv_ = mat_inverse(D, BT);
    if (field_disc == 0) {
        Rat fd = Rat(disc_poly) * detB * detB;
        if (fd.get_den() != 1) throw IntegralBasisRequiredError("supplied basis has non-integral covolume");
        field_disc = fd.get_num();
    }
    nf->field_disc_ = field_disc;

    // order axioms for the basis: contains 1 and theta, closed under product
    {
        auto to_int_coords = [&](const std::vector<Rat>& pow_co) -> std::optional<std::vector<Rat>> {
            auto v = mat_vec(D, nf->basis_inv_, pow_co);
            for (const auto& q : v)
                if (q.get_den() != 1) return std::nullopt;
            return v;
        };
        std::vector<Rat> one_co(static_cast<size_t>(nf->d_), Rat(0));
        one_co[0] = 1;
        if (!to_int_coords(one_co))
            throw IntegralBasisRequiredError("integral basis does not contain 1");
        if (nf->d_ > 1) {
            std::vector<Rat> th(static_cast<size_t>(nf->d_), Rat(0));
            th[1] = 1;
            if (!to_int_coords(th))
                throw IntegralBasisRequiredError("integral basis does not contain the generator");
        }
        size_t d = static_cast<size_t>(nf->d_);
        nf->basis_mul_.assign(d, std::vector<std::vector<Rat>>(d));
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) {
                auto prod = nf->mul_coords(basis[i], basis[j]);
                auto ic = to_int_coords(prod);
                if (!ic)
                    throw IntegralBasisRequiredError("integral basis is not multiplicatively closed");
                nf->basis_mul_[i][j] = *ic;
            }
    }

    nf->roots_ = std::make_unique<RootSet>(f, options.precision_cap_bits);
    return nf;
}

FieldPtr make_field(const IntPoly& defining_polynomial,
                    std::optional<std::vector<std::vector<Rat>>> integral_basis,
                    const FieldOptions& options) {
    return NumberField::make(defining_polynomial, std::move(integral_basis), options);
}

bool NumberField::same_field(const NumberField& o) const {
    return poly_ == o.poly_ && basis_ == o.basis_;
}

FieldElement NumberField::element(std::vector<Rat> power_coords) const {
    return FieldElement(shared_from_this(), std::move(power_coords));
}

FieldElement NumberField::from_rat(const Rat& q) const {
    std::vector<Rat> co(static_cast<size_t>(d_), Rat(0));
    co[0] = q;
    return element(std::move(co));
}

FieldElement NumberField::gen() const {
    std::vector<Rat> co(static_cast<size_t>(d_), Rat(0));
    if (d_ == 1) {
        // theta is the rational root of the degree-1 polynomial
        co[0] = Rat(-poly_.coeff(0));
    } else {
        co[1] = 1;
    }
    return element(std::move(co));
}

std::vector<Rat> NumberField::mul_coords(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
    size_t d = static_cast<size_t>(d_);
    std::vector<Rat> conv(2 * d - 1, Rat(0));
    for (size_t i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < d; ++j) {
            if (b[j] == 0) continue;
            conv[i + j] += a[i] * b[j];
        }
    }
    std::vector<Rat> r(conv.begin(), conv.begin() + static_cast<long>(d));
    for (size_t k = d; k < 2 * d - 1; ++k) {
        if (conv[k] == 0) continue;
        const auto& row = theta_red_[k - d];
        for (size_t i = 0; i < d; ++i) r[i] += conv[k] * row[i];
    }
    return r;
}

std::vector<Rat> NumberField::inv_coords(const std::vector<Rat>& a) const {
    RatDomain D;
    QPoly av(a.begin(), a.end());
    pnormalize(D, av);
    if (pis_zero(av)) throw DivisionByZeroError("inverse of zero field element");
    auto [g, s, t] = pxgcd(D, av, ip_to_q(poly_));
    (void)t;
    if (pdeg(g) != 0) throw MathError("defining polynomial not coprime with element");
    // g is monic 1 after normalization, so s inverts av modulo the polynomial
    s = pmod(D, s, ip_to_q(poly_));
    std::vector<Rat> r(static_cast<size_t>(d_), Rat(0));
    for (size_t i = 0; i < s.size(); ++i) r[i] = s[i];
    return r;
}

QPoly NumberField::charpoly_of(const FieldElement& x) const {
    size_t d = static_cast<size_t>(d_);
    // multiplication matrix: column j = coords of x * theta^j
    MatOf<RatDomain> M(d, std::vector<Rat>(d, Rat(0)));
    std::vector<Rat> cur = x.coords();
    for (size_t j = 0; j < d; ++j) {
        for (size_t i = 0; i < d; ++i) M[i][j] = cur[i];
        if (j + 1 < d) {
            // multiply cur by theta
            std::vector<Rat> nxt(d, Rat(0));
            for (size_t i = 0; i + 1 < d; ++i) nxt[i + 1] = cur[i];
            if (cur[d - 1] != 0)
                for (size_t i = 0; i < d; ++i) nxt[i] += cur[d - 1] * theta_red_[0][i];
            cur = std::move(nxt);
        }
    }
    RatDomain D;
    return charpoly_faddeev(D, M);
}

Rat NumberField::norm(const FieldElement& x) const {
    QPoly cp = charpoly_of(x);
    Rat c0 = cp.empty() ? Rat(0) : cp[0];
    return (d_ % 2 == 0) ? c0 : -c0;
}

Rat NumberField::trace(const FieldElement& x) const {
    QPoly cp = charpoly_of(x);
    Rat cn1 = (cp.size() >= static_cast<size_t>(d_)) ? cp[static_cast<size_t>(d_) - 1] : Rat(0);
    return -cn1;
}

IntPoly NumberField::minimal_polynomial(const FieldElement& x) const {
    // smallest Krylov dependence of 1, x, x^2, ...
    size_t d = static_cast<size_t>(d_);
    RatDomain D;
    std::vector<std::vector<Rat>> rows;     // echelon rows
    std::vector<std::vector<Rat>> combos;   // combination producing each row
    FieldElement p = one();
    std::vector<FieldElement> powers;
    for (size_t k = 0;; ++k) {
        powers.push_back(p);
        std::vector<Rat> v = p.coords();
        std::vector<Rat> combo(k + 1, Rat(0));
        combo[k] = 1;
        // reduce v against echelon rows
        for (size_t r = 0; r < rows.size(); ++r) {
            size_t piv = 0;
            while (piv < d && rows[r][piv] == 0) ++piv;
            if (piv == d || v[piv] == 0) continue;
            Rat f = v[piv] / rows[r][piv];
            for (size_t i = 0; i < d; ++i) v[i] -= f * rows[r][i];
            for (size_t i = 0; i < combos[r].size() && i < combo.size(); ++i)
                combo[i] -= f * combos[r][i];
        }
        bool zero = true;
        for (const auto& q : v)
            if (q != 0) {
                zero = false;
                break;
            }
        if (zero) {
            // combo gives sum combo_i x^i = 0 with combo_k = 1
            QPoly m(combo.begin(), combo.end());
            pnormalize(D, m);
            return ip_from_q_primitive(m);
        }
        rows.push_back(v);
        combos.push_back(combo);
        p = p * x;
        if (k > d) throw MathError("minimal polynomial search exceeded field degree");
    }
}

std::vector<Rat> NumberField::integral_coords(const FieldElement& x) const {
    RatDomain D;
    return mat_vec(D, basis_inv_, x.coords());
}

bool NumberField::is_integral(const FieldElement& x) const {
    for (const auto& q : integral_coords(x))
        if (q.get_den() != 1) return false;
    return true;
}

Int NumberField::clearing_denominator(const std::vector<FieldElement>& xs) const {
    Int den(1);
    for (const auto& x : xs)
        for (const auto& q : integral_coords(x)) den = int_lcm(den, q.get_den());
    return den;
}

Int NumberField::content_ideal_norm(const std::vector<FieldElement>& xs) const {
    if (xs.empty()) throw AllZeroError("content ideal of an empty tuple");
    size_t d = static_cast<size_t>(d_);
    bool all_zero = true;
    std::vector<std::vector<Int>> rows;
    for (const auto& x : xs) {
        if (x.field().get() != this && !same_field(*x.field()))
            throw FieldMismatchError("content ideal across fields");
        if (!x.is_zero()) all_zero = false;
        auto xi = integral_coords(x);
        std::vector<Int> xi_int(d);
        for (size_t i = 0; i < d; ++i) {
            if (xi[i].get_den() != 1) throw NotIntegralError("content ideal needs integral elements");
            xi_int[i] = xi[i].get_num();
        }
        // products x * b_j expressed in the integral basis via structure constants
        for (size_t j = 0; j < d; ++j) {
            std::vector<Int> row(d, Int(0));
            for (size_t i = 0; i < d; ++i) {
                if (xi_int[i] == 0) continue;
                for (size_t t = 0; t < d; ++t) {
                    const Rat& sc = basis_mul_[i][j][t];
                    row[t] += xi_int[i] * sc.get_num();  // structure constants are integers
                }
            }
            rows.push_back(std::move(row));
        }
    }
    if (all_zero) throw AllZeroError("content ideal of the zero tuple");
    IntMat m(rows.size(), d);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < d; ++j) m.at(i, j) = rows[i][j];
    auto h = hnf(m);
    if (h.rank != d) throw MathError("content ideal unexpectedly not of full rank");
    Int idx(1);
    for (size_t i = 0; i < d; ++i) idx *= h.h.at(i, h.pivot_cols[i]);
    return idx;
}

EmbeddingValues NumberField::embed(const FieldElement& x, std::shared_ptr<const RootSnapshot> snap) const {
    EmbeddingValues ev;
    QPoly co(x.coords().begin(), x.coords().end());
    for (const auto& r : snap->real)
        ev.real.push_back(eval_interval(co, RatInterval(r.lo, r.hi)));
    for (const auto& b : snap->upper_box) ev.cplx.push_back(eval_rect(co, b));
    return ev;
}

std::vector<long> NumberField::allowed_torsion_orders() const {
    std::vector<long> out;
    long dd = d_;
    long cap = 2 * dd * dd + 2;
    for (long m = 1; m <= cap; ++m) {
        // Euler phi
        long n = m, phi = m;
        for (long p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                phi -= phi / p;
                while (n % p == 0) n /= p;
            }
        }
        if (n > 1) phi -= phi / n;
        if (phi <= dd) out.push_back(m);
    }
    return out;
}

}  // namespace pep
