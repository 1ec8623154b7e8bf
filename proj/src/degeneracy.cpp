#include "pep/degeneracy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <set>

namespace pep {

bool IntegerLatticeCoset::contains(const ExponentVector& n) const {
    if (n.size() != dim()) throw DimensionMismatchError("coset membership dimension mismatch");
    std::vector<Int> diff(n.size());
    for (size_t i = 0; i < n.size(); ++i) diff[i] = n.n[i] - offset.n[i];
    if (basis.rows == 0) {
        for (const auto& x : diff)
            if (x != 0) return false;
        return true;
    }
    return im_solve_row_lattice(basis, diff).has_value();
}

void IntegerLatticeCoset::canonicalize() {
    auto h = hnf(basis);
    IntMat b(h.rank, basis.cols);
    for (size_t i = 0; i < h.rank; ++i)
        for (size_t j = 0; j < basis.cols; ++j) b.at(i, j) = h.h.at(i, j);
    basis = b;
    auto hh = hnf(basis);
    offset = ExponentVector(im_reduce_mod_hnf(hh, offset.n));
}

bool IntegerLatticeCoset::operator==(const IntegerLatticeCoset& o) const {
    return offset == o.offset && basis == o.basis;
}

bool IntegerLatticeCoset::operator<(const IntegerLatticeCoset& o) const {
    if (basis.rows != o.basis.rows) return basis.rows < o.basis.rows;
    if (offset.n != o.offset.n) return offset < o.offset;
    return basis.a < o.basis.a;
}

std::string IntegerLatticeCoset::str() const {
    std::string s = offset.str() + " + span{";
    for (size_t i = 0; i < basis.rows; ++i) {
        if (i) s += ", ";
        s += "(";
        for (size_t j = 0; j < basis.cols; ++j) {
            if (j) s += ",";
            s += basis.at(i, j).get_str();
        }
        s += ")";
    }
    return s + "}";
}

IntegerLatticeCoset IntegerLatticeCoset::full(size_t r) {
    IntegerLatticeCoset c;
    c.offset = ExponentVector(std::vector<Int>(r, Int(0)));
    c.basis = IntMat::identity(r);
    return c;
}

IntegerLatticeCoset IntegerLatticeCoset::single_point(ExponentVector p) {
    IntegerLatticeCoset c;
    c.basis = IntMat(0, p.size());
    c.offset = std::move(p);
    return c;
}

void box_iterate(size_t r, long N, const std::function<void(const ExponentVector&)>& fn) {
    if (r == 0) {
        fn(ExponentVector{});
        return;
    }
    std::vector<Int> v(r, Int(-N));
    for (;;) {
        fn(ExponentVector(v));
        size_t j = 0;
        while (j < r && v[j] == N) v[j++] = -N;
        if (j == r) break;
        v[j] += 1;
    }
}

double box_cells(size_t r, long N) {
    return std::pow(2.0 * N + 1.0, static_cast<double>(r));
}

namespace {

// single-coset fit: offset at the lexicographic minimum, lattice from the
// differences; exact iff every box point of the coset is a family point
std::optional<IntegerLatticeCoset> fit_single(const std::vector<ExponentVector>& pts, size_t r,
                                              long N, const std::set<std::vector<Int>>& family_set) {
    IntegerLatticeCoset c;
    const ExponentVector& p0 = pts[0];
    if (pts.size() == 1) {
        c = IntegerLatticeCoset::single_point(p0);
        return c;
    }
    IntMat diffs(pts.size() - 1, r);
    for (size_t i = 1; i < pts.size(); ++i)
        for (size_t j = 0; j < r; ++j) diffs.at(i - 1, j) = pts[i].n[j] - p0.n[j];
    auto h = hnf(diffs);
    c.basis = IntMat(h.rank, r);
    for (size_t i = 0; i < h.rank; ++i)
        for (size_t j = 0; j < r; ++j) c.basis.at(i, j) = h.h.at(i, j);
    c.offset = p0;
    c.canonicalize();
    // exactness check against the family inside the box
    bool exact = true;
    box_iterate(r, N, [&](const ExponentVector& q) {
        if (!exact) return;
        if (c.contains(q) && family_set.find(q.n) == family_set.end()) exact = false;
    });
    if (!exact) return std::nullopt;
    return c;
}

std::vector<IntegerLatticeCoset> fit_family(const std::vector<ExponentVector>& pts, size_t r, long N,
                                            bool& unstructured) {
    std::set<std::vector<Int>> family_set;
    for (const auto& p : pts) family_set.insert(p.n);
    if (auto c = fit_single(pts, r, N, family_set)) return {*c};
    for (long m = 2; m <= 4; ++m) {
        std::map<std::vector<Int>, std::vector<ExponentVector>> parts;
        for (const auto& p : pts) {
            std::vector<Int> res(r);
            for (size_t j = 0; j < r; ++j) {
                res[j] = p.n[j] % m;
                if (res[j] < 0) res[j] += m;
            }
            parts[res].push_back(p);
        }
        if (parts.size() <= 1) continue;
        std::vector<IntegerLatticeCoset> out;
        bool all_ok = true;
        for (auto& [res, sub] : parts) {
            auto c = fit_single(sub, r, N, family_set);
            if (!c) {
                all_ok = false;
                break;
            }
            out.push_back(*c);
        }
        if (all_ok) return out;
    }
    // unstructured remainder: cover each point by itself
    unstructured = true;
    std::vector<IntegerLatticeCoset> out;
    for (const auto& p : pts) out.push_back(IntegerLatticeCoset::single_point(p));
    return out;
}

}  // namespace

DegeneracyResult degeneracy_locus(const PepSystem& f, size_t component, long N, size_t subset_cap,
                                  double cell_cap) {
    f.validate();
    if (component >= f.s()) throw DimensionMismatchError("component index out of range");
    if (N < 1) throw MathError("degeneracy box bound must be >= 1");
    if (box_cells(f.r, N) > cell_cap) throw BoxTooLargeError("degeneracy box beyond the cell cap");
    size_t e = f.components[component].terms.size();
    if (e > subset_cap) throw SubsetCapExceededError("too many terms for exact subset-sum scan");

    DegeneracyResult res;
    std::map<size_t, std::vector<ExponentVector>> families;  // mask -> points
    std::set<std::vector<Int>> point_set;
    if (e >= 2) {
        size_t nmask = (size_t{1} << e);
        box_iterate(f.r, N, [&](const ExponentVector& n) {
            std::vector<FieldElement> mono = term_monomials(f, component, n);
            std::vector<FieldElement> vals;
            vals.reserve(e);
            for (size_t i = 0; i < e; ++i) vals.push_back(f.components[component].terms[i].coeff * mono[i]);
            for (size_t mask = 1; mask < nmask - 1; ++mask) {
                FieldElement acc = f.field->zero();
                for (size_t i = 0; i < e; ++i)
                    if (mask & (size_t{1} << i)) acc = acc + vals[i];
                if (acc.is_zero()) {
                    families[mask].push_back(n);
                    point_set.insert(n.n);
                }
            }
        });
    }

    for (const auto& p : point_set) res.points.push_back(ExponentVector(p));
    std::sort(res.points.begin(), res.points.end());

    // fitted cosets per family, then a minimal exact cover
    std::vector<IntegerLatticeCoset> cands;
    for (auto& [mask, pts] : families) {
        SubsetFamily fam;
        for (size_t i = 0; i < e; ++i)
            if (mask & (size_t{1} << i)) fam.subset.push_back(i);
        fam.points = pts;
        res.families.push_back(fam);
        for (auto& c : fit_family(pts, f.r, N, res.unstructured_remainder)) cands.push_back(c);
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    // greedy pruning, deterministic order
    auto covered = [&](const std::vector<IntegerLatticeCoset>& cs) {
        for (const auto& p : res.points) {
            bool hit = false;
            for (const auto& c : cs)
                if (c.contains(p)) {
                    hit = true;
                    break;
                }
            if (!hit) return false;
        }
        return true;
    };
    for (size_t i = cands.size(); i-- > 0;) {
        std::vector<IntegerLatticeCoset> rest;
        for (size_t j = 0; j < cands.size(); ++j)
            if (j != i) rest.push_back(cands[j]);
        if (covered(rest)) cands = std::move(rest);
    }
    res.cosets = std::move(cands);
    return res;
}

PepSystem restrict_to_coset(const PepSystem& f, const IntegerLatticeCoset& c) {
    f.validate();
    if (c.dim() != f.r) throw DimensionMismatchError("coset dimension does not match variable count");
    size_t rho = c.rank();
    PepSystem g;
    g.field = f.field;
    g.r = rho;
    g.bases = f.bases;
    for (const auto& comp : f.components) {
        PepComponent nc;
        for (const auto& t : comp.terms) {
            PepTerm nt;
            nt.coeff = t.coeff;
            // absorb base^(L . offset)
            for (size_t j = 0; j < f.k(); ++j) {
                Int e(0);
                for (size_t i = 0; i < f.r; ++i) e += t.exponents.at(j, i) * c.offset.n[i];
                if (e != 0) nt.coeff = nt.coeff * f.bases[j].pow(e);
            }
            // L' = L * basis^T
            nt.exponents = IntMat(f.k(), rho);
            for (size_t j = 0; j < f.k(); ++j)
                for (size_t b = 0; b < rho; ++b) {
                    Int acc(0);
                    for (size_t i = 0; i < f.r; ++i) acc += t.exponents.at(j, i) * c.basis.at(b, i);
                    nt.exponents.at(j, b) = acc;
                }
            nc.terms.push_back(std::move(nt));
        }
        g.components.push_back(std::move(nc));
    }
    g.validate();
    return g;
}

HomHeightBounds hom_height_bounds(const PepSystem& f, long N, double cell_cap) {
    f.validate();
    if (N < 1) throw MathError("box bound must be >= 1");
    HomHeightBounds out;
    out.c2_certified_upper = Rat(0);
    if (f.r == 0) {
        out.vacuous = true;
        out.c1_empirical = std::numeric_limits<double>::infinity();
        out.c2_empirical = 0;
        return out;
    }
    if (box_cells(f.r, N) > cell_cap) throw BoxTooLargeError("height-bound box beyond the cell cap");

    // distinct term exponent matrices across components
    std::vector<IntMat> terms;
    for (const auto& comp : f.components)
        for (const auto& t : comp.terms) {
            if (std::find(terms.begin(), terms.end(), t.exponents) == terms.end())
                terms.push_back(t.exponents);
        }

    Rat tol = default_height_tolerance();
    std::vector<Rat> base_h_hi;
    for (const auto& b : f.bases) base_h_hi.push_back(affine_height({b}, tol).log_hi);
    for (const auto& L : terms) {
        for (size_t j = 0; j < f.k(); ++j) {
            Int sum(0);
            for (size_t i = 0; i < f.r; ++i) sum += abs(L.at(j, i));
            out.c2_certified_upper += Rat(sum) * base_h_hi[j];
        }
    }

    double c1 = std::numeric_limits<double>::infinity(), c2 = 0;
    box_iterate(f.r, N, [&](const ExponentVector& n) {
        Int norm = n.sup_norm();
        if (norm == 0) return;
        double total = 0;
        for (const auto& L : terms) {
            FieldElement u = f.field->one();
            for (size_t j = 0; j < f.k(); ++j) {
                Int e(0);
                for (size_t i = 0; i < f.r; ++i) e += L.at(j, i) * n.n[i];
                if (e != 0) u = u * f.bases[j].pow(e);
            }
            total += affine_height({u}, tol).mid();
        }
        double ratio = total / norm.get_d();
        c1 = std::min(c1, ratio);
        c2 = std::max(c2, ratio);
    });
    out.c1_empirical = c1;
    out.c2_empirical = c2;
    return out;
}

}  // namespace pep
