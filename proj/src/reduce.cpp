#include "pep/reduce.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace pep {

IntMat relation_lattice(const std::vector<FieldElement>& bases, long bound, double cell_cap) {
    size_t k = bases.size();
    if (bound < 1) throw MathError("relation search bound must be >= 1");
    if (k == 0) return IntMat(0, 0);
    for (const auto& b : bases)
        if (b.is_zero()) throw MathError("relation lattice of a zero base");
    double cells = std::pow(2.0 * bound + 1.0, static_cast<double>(k));
    if (cells > cell_cap) throw BoxTooLargeError("relation search box beyond the cell cap");

    const FieldPtr& f = bases[0].field();
    // cheap filters: exact rational norms, float logs of all conjugate moduli
    std::vector<Rat> absnorm(k);
    for (size_t j = 0; j < k; ++j) absnorm[j] = abs(f->norm(bases[j]));
    size_t nplaces = f->real_embeddings() + f->complex_pairs();
    std::vector<std::vector<double>> logs(k, std::vector<double>(nplaces, 0.0));
    auto snap = f->roots().refine_below(Rat(1, Int(1) << 60));
    for (size_t j = 0; j < k; ++j) {
        auto ev = f->embed(bases[j], snap);
        for (size_t v = 0; v < ev.real.size(); ++v) {
            double lo = std::abs(ev.real[v].lo.get_d()), hi = std::abs(ev.real[v].hi.get_d());
            logs[j][v] = std::log(std::max(1e-300, (lo + hi) / 2));
        }
        for (size_t v = 0; v < ev.cplx.size(); ++v) {
            RatInterval m2 = rc_modulus_squared(ev.cplx[v]);
            logs[j][ev.real.size() + v] = 0.5 * std::log(std::max(1e-300, m2.hi.get_d()));
        }
    }

    // cached powers base^e for |e| <= bound
    std::vector<std::map<long, FieldElement>> pows(k);
    for (size_t j = 0; j < k; ++j) {
        pows[j][0] = f->one();
        FieldElement inv = bases[j].inverse();
        FieldElement up = f->one(), dn = f->one();
        for (long e = 1; e <= bound; ++e) {
            up = up * bases[j];
            dn = dn * inv;
            pows[j][e] = up;
            pows[j][-e] = dn;
        }
    }

    std::vector<std::vector<Int>> relations;
    std::vector<long> theta(k, -bound);
    // enumerate with first nonzero entry positive (theta and -theta give one relation)
    for (;;) {
        bool lead_ok = false, all_zero = true;
        for (size_t j = 0; j < k; ++j) {
            if (theta[j] != 0) {
                all_zero = false;
                lead_ok = theta[j] > 0;
                break;
            }
        }
        if (!all_zero && lead_ok) {
            // rational norm filter
            Rat nprod(1);
            for (size_t j = 0; j < k; ++j) {
                if (theta[j] == 0) continue;
                nprod *= rat_pow(absnorm[j], theta[j]);
            }
            if (nprod == 1) {
                bool plausible = true;
                for (size_t v = 0; v < nplaces && plausible; ++v) {
                    double acc = 0;
                    for (size_t j = 0; j < k; ++j) acc += theta[j] * logs[j][v];
                    if (std::abs(acc) > 1e-6) plausible = false;
                }
                if (plausible) {
                    FieldElement prod = f->one();
                    for (size_t j = 0; j < k; ++j) prod = prod * pows[j][theta[j]];
                    if (prod == f->one()) {
                        std::vector<Int> row(k);
                        for (size_t j = 0; j < k; ++j) row[j] = theta[j];
                        relations.push_back(std::move(row));
                    }
                }
            }
        }
        // odometer
        size_t j = 0;
        while (j < k && theta[j] == bound) theta[j++] = -bound;
        if (j == k) break;
        ++theta[j];
    }

    if (relations.empty()) return IntMat(0, k);
    IntMat m(relations.size(), k);
    for (size_t i = 0; i < relations.size(); ++i)
        for (size_t j = 0; j < k; ++j) m.at(i, j) = relations[i][j];
    auto h = hnf(m);
    IntMat out(h.rank, k);
    for (size_t i = 0; i < h.rank; ++i)
        for (size_t j = 0; j < k; ++j) out.at(i, j) = h.h.at(i, j);
    return out;
}

namespace {

// lattice { n : W n = 0 mod moduli }, full rank r, as row-HNF
HnfResult congruence_lattice(const IntMat& w, const std::vector<Int>& moduli) {
    size_t s = w.rows, r = w.cols;
    // kernel of [W | -diag(m)] over Z, projected to the first r coordinates
    IntMat a(s, r + s);
    for (size_t i = 0; i < s; ++i) {
        for (size_t j = 0; j < r; ++j) a.at(i, j) = w.at(i, j);
        a.at(i, r + i) = -moduli[i];
    }
    IntMat ker = im_kernel(a);
    IntMat proj(ker.rows, r);
    for (size_t i = 0; i < ker.rows; ++i)
        for (size_t j = 0; j < r; ++j) proj.at(i, j) = ker.at(i, j);
    auto h = hnf(proj);
    if (h.rank != r) throw MathError("congruence lattice unexpectedly not of full rank");
    IntMat basis(r, r);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) basis.at(i, j) = h.h.at(i, j);
    return hnf(basis);
}

}  // namespace

bool ReducedPep::is_single_plain() const {
    if (classes.size() != 1) return false;
    const ReducedClass& c = classes[0];
    if (c.offset.sup_norm() != 0) return false;
    return c.sublattice == IntMat::identity(c.sublattice.rows);
}

const PepSystem& ReducedPep::single() const {
    if (!is_single_plain()) throw MathError("reduced system is not a single plain class");
    return classes[0].system;
}

std::vector<FieldElement> ReducedPep::evaluate_original(const ExponentVector& n) const {
    if (n.size() != original.r) throw DimensionMismatchError("exponent vector length mismatch");
    for (const auto& cls : classes) {
        std::vector<Int> diff(n.size());
        for (size_t i = 0; i < n.size(); ++i) diff[i] = n.n[i] - cls.offset.n[i];
        auto sol = im_solve_row_lattice(cls.sublattice, diff);
        if (!sol) continue;
        return evaluate(cls.system, ExponentVector(*sol));
    }
    throw MathError("no residue class matched; reduction is inconsistent");
}

ReducedPep reduce_to_independent(const PepSystem& f, long bound) {
    f.validate();
    ReducedPep out;
    out.original = f;
    size_t k = f.k(), r = f.r;

    auto single_identity = [&](PepSystem sys) {
        ReducedClass cls;
        cls.offset = ExponentVector(std::vector<Int>(r, Int(0)));
        cls.sublattice = IntMat::identity(r);
        cls.system = std::move(sys);
        out.independent_bases = cls.system.bases;
        out.classes.push_back(std::move(cls));
        return out;
    };

    if (k == 0) return single_identity(f);
    IntMat rel = relation_lattice(f.bases, bound);
    if (rel.rows == 0) return single_identity(f);

    // SNF of rel^T: u (k x k) with u * rel^T * v = diag(d_i); the new bases are
    // psi_i = prod_j bases_j ^ u_inv[j][i] and exponent forms transform by u.
    auto S = snf(rel.transpose());
    size_t rank = S.diag.size();
    const FieldPtr& fld = f.field;

    std::vector<FieldElement> psi(k, fld->one());
    for (size_t i = 0; i < k; ++i) {
        FieldElement p = fld->one();
        for (size_t j = 0; j < k; ++j) {
            const Int& e = S.u_inv.at(j, i);
            if (e == 0) continue;
            p = p * f.bases[j].pow(e);
        }
        psi[i] = p;
    }

    // classify new bases: torsion (exact order), trivial, free
    auto allowed = fld->allowed_torsion_orders();
    std::vector<long> order(k, 0);  // 0 = free, 1 = trivial, m>1 = torsion of order m
    for (size_t i = 0; i < rank; ++i) {
        Int d = S.diag[i];
        if (fld->one() != psi[i].pow(d))
            throw MathError("relation verification failed after SNF rewrite");
        long o = 0;
        for (long m : allowed) {
            if (d % m != 0) continue;
            if (psi[i].pow(Int(m)) == fld->one()) {
                o = m;
                break;
            }
        }
        if (o == 0) throw TorsionBoundExceededError("torsion base order above the field bound");
        order[i] = o;
    }

    std::vector<size_t> free_idx;
    for (size_t i = rank; i < k; ++i) {
        order[i] = 0;
        free_idx.push_back(i);
    }
    // torsion rows may include order 1 (psi = 1): drop those entirely
    std::vector<size_t> torsion_idx;
    for (size_t i = 0; i < rank; ++i) {
        if (order[i] == 1) {
            if (!(psi[i] == fld->one())) throw MathError("trivial base is not 1");
        } else {
            torsion_idx.push_back(i);
        }
    }

    // transformed exponent matrices per term: Ltilde = u * L
    struct TermT {
        FieldElement coeff;
        IntMat lt;  // k x r
    };
    std::vector<std::vector<TermT>> comps(f.s());
    for (size_t c = 0; c < f.s(); ++c)
        for (const auto& t : f.components[c].terms)
            comps[c].push_back({t.coeff, im_mul(S.u, t.exponents)});

    std::vector<FieldElement> new_bases;
    for (size_t i : free_idx) new_bases.push_back(psi[i]);
    out.independent_bases = new_bases;

    if (torsion_idx.empty()) {
        PepSystem sys;
        sys.field = fld;
        sys.r = r;
        sys.bases = new_bases;
        for (size_t c = 0; c < f.s(); ++c) {
            PepComponent comp;
            for (const auto& t : comps[c]) {
                PepTerm nt;
                nt.coeff = t.coeff;
                nt.exponents = IntMat(new_bases.size(), r);
                for (size_t a = 0; a < free_idx.size(); ++a)
                    for (size_t b = 0; b < r; ++b) nt.exponents.at(a, b) = t.lt.at(free_idx[a], b);
                comp.terms.push_back(std::move(nt));
            }
            sys.components.push_back(std::move(comp));
        }
        return single_identity(std::move(sys));
    }

    // congruence lattice of all torsion forms across all terms
    std::vector<std::vector<Int>> wrows;
    std::vector<Int> moduli;
    for (size_t c = 0; c < f.s(); ++c)
        for (const auto& t : comps[c])
            for (size_t i : torsion_idx) {
                std::vector<Int> row(r);
                bool nonzero = false;
                for (size_t b = 0; b < r; ++b) {
                    row[b] = t.lt.at(i, b);
                    if (row[b] != 0) nonzero = true;
                }
                if (nonzero) {
                    wrows.push_back(std::move(row));
                    moduli.emplace_back(order[i]);
                }
            }
    HnfResult g;
    if (wrows.empty()) {
        g = hnf(IntMat::identity(r));
    } else {
        IntMat w(wrows.size(), r);
        for (size_t i = 0; i < wrows.size(); ++i)
            for (size_t j = 0; j < r; ++j) w.at(i, j) = wrows[i][j];
        g = congruence_lattice(w, moduli);
    }

    // residue classes: fundamental domain of the row lattice
    Int index(1);
    for (size_t i = 0; i < r; ++i) index *= g.h.at(i, i);
    if (index > 4096) throw BoxTooLargeError("torsion residue class count beyond cap");

    std::vector<ExponentVector> reps;
    {
        std::vector<Int> counter(r, Int(0));
        for (;;) {
            reps.push_back(ExponentVector(counter));
            size_t j = 0;
            while (j < r && counter[j] + 1 == g.h.at(j, j)) counter[j++] = 0;
            if (j == r) break;
            counter[j] += 1;
        }
    }

    // basis of G with vectors as rows; substitution n = rep + G^T m
    IntMat gbasis(r, r);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) gbasis.at(i, j) = g.h.at(i, j);
    IntMat gbasis_t = gbasis.transpose();

    for (const auto& rep : reps) {
        ReducedClass cls;
        cls.offset = rep;
        cls.sublattice = gbasis;
        PepSystem sys;
        sys.field = fld;
        sys.r = r;
        sys.bases = new_bases;
        for (size_t c = 0; c < f.s(); ++c) {
            PepComponent comp;
            for (const auto& t : comps[c]) {
                PepTerm nt;
                nt.coeff = t.coeff;
                // absorb psi_i^(lt_i(rep)) for every new base, torsion or free
                for (size_t i = 0; i < k; ++i) {
                    if (order[i] == 1) continue;
                    Int e(0);
                    for (size_t b = 0; b < r; ++b) e += t.lt.at(i, b) * rep.n[b];
                    if (e != 0) nt.coeff = nt.coeff * psi[i].pow(e);
                }
                nt.exponents = IntMat(new_bases.size(), r);
                // free forms composed with the sublattice map
                for (size_t a = 0; a < free_idx.size(); ++a) {
                    for (size_t b = 0; b < r; ++b) {
                        Int acc(0);
                        for (size_t t2 = 0; t2 < r; ++t2)
                            acc += t.lt.at(free_idx[a], t2) * gbasis_t.at(t2, b);
                        nt.exponents.at(a, b) = acc;
                    }
                }
                // torsion forms composed with G must vanish mod order: check
                for (size_t i : torsion_idx) {
                    for (size_t b = 0; b < r; ++b) {
                        Int acc(0);
                        for (size_t t2 = 0; t2 < r; ++t2) acc += t.lt.at(i, t2) * gbasis_t.at(t2, b);
                        if (acc % order[i] != 0)
                            throw MathError("torsion form does not vanish on the class sublattice");
                    }
                }
                comp.terms.push_back(std::move(nt));
            }
            sys.components.push_back(std::move(comp));
        }
        cls.system = std::move(sys);
        out.classes.push_back(std::move(cls));
    }
    return out;
}

}  // namespace pep
