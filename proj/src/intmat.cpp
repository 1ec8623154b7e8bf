#include "pep/intmat.hpp"

#include <algorithm>

#include "pep/errors.hpp"

namespace pep {

IntMat IntMat::identity(size_t n) {
    IntMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::transpose() const {
    IntMat t(cols, rows);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMat im_mul(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) throw DimensionMismatchError("matrix product shape mismatch");
    IntMat r(x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t k = 0; k < x.cols; ++k) {
            if (x.at(i, k) == 0) continue;
            for (size_t j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return r;
}

std::vector<Int> im_mul_vec(const IntMat& m, const std::vector<Int>& v) {
    if (m.cols != v.size()) throw DimensionMismatchError("matrix-vector shape mismatch");
    std::vector<Int> r(m.rows, Int(0));
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) r[i] += m.at(i, j) * v[j];
    return r;
}

Int im_det(const IntMat& m) {
    if (m.rows != m.cols) throw DimensionMismatchError("determinant of non-square matrix");
    size_t n = m.rows;
    if (n == 0) return Int(1);
    IntMat w = m;
    Int prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && w.at(p, k) == 0) ++p;
            if (p == n) return Int(0);
            for (size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = num / prev;  // Bareiss: division is exact
            }
        for (size_t i = k + 1; i < n; ++i) w.at(i, k) = 0;
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

HnfResult hnf(const IntMat& m) {
    HnfResult res;
    res.h = m;
    res.u = IntMat::identity(m.rows);
    IntMat& h = res.h;
    IntMat& u = res.u;

    auto swap_rows = [&](size_t i, size_t j) {
        if (i == j) return;
        for (size_t c = 0; c < h.cols; ++c) std::swap(h.at(i, c), h.at(j, c));
        for (size_t c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    };
    auto addmul_row = [&](size_t dst, size_t src, const Int& f) {
        if (f == 0) return;
        for (size_t c = 0; c < h.cols; ++c) h.at(dst, c) += f * h.at(src, c);
        for (size_t c = 0; c < u.cols; ++c) u.at(dst, c) += f * u.at(src, c);
    };
    auto negate_row = [&](size_t i) {
        for (size_t c = 0; c < h.cols; ++c) h.at(i, c) = -h.at(i, c);
        for (size_t c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
    };

    size_t row = 0;
    for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
        // Euclid within the column below `row`
        while (true) {
            size_t best = row;
            bool any = false;
            for (size_t i = row; i < h.rows; ++i) {
                if (h.at(i, col) == 0) continue;
                if (!any || abs(h.at(i, col)) < abs(h.at(best, col))) {
                    best = i;
                    any = true;
                }
            }
            if (!any) break;
            swap_rows(row, best);
            if (h.at(row, col) < 0) negate_row(row);
            bool reduced_all = true;
            for (size_t i = row + 1; i < h.rows; ++i) {
                if (h.at(i, col) == 0) continue;
                Int q = h.at(i, col) / h.at(row, col);  // floor for positive pivot? use truncation then fix
                // use floor division to guarantee progress
                Int r = h.at(i, col) - q * h.at(row, col);
                if (r < 0) { q -= 1; r += h.at(row, col); }
                addmul_row(i, row, -q);
                if (h.at(i, col) != 0) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (h.at(row, col) != 0) {
            // reduce entries above the pivot into [0, pivot)
            for (size_t i = 0; i < row; ++i) {
                Int q = h.at(i, col) / h.at(row, col);
                Int r = h.at(i, col) - q * h.at(row, col);
                if (r < 0) q -= 1;
                addmul_row(i, row, -q);
            }
            res.pivot_cols.push_back(col);
            ++row;
        }
    }
    res.rank = row;
    return res;
}

IntMat im_kernel(const IntMat& m) {
    // left-kernel of m^T equals kernel of m
    HnfResult h = hnf(m.transpose());
    IntMat k(m.cols >= h.rank ? m.cols - h.rank : 0, m.cols);
    size_t out = 0;
    for (size_t i = h.rank; i < h.h.rows; ++i, ++out)
        for (size_t j = 0; j < m.cols; ++j) k.at(out, j) = h.u.at(i, j);
    return k;
}

std::optional<std::vector<Int>> im_solve_row_lattice(const IntMat& gens, const std::vector<Int>& target) {
    if (gens.cols != target.size()) throw DimensionMismatchError("lattice solve shape mismatch");
    HnfResult h = hnf(gens);
    std::vector<Int> rem = target, coeff(h.rank, Int(0));
    for (size_t i = 0; i < h.rank; ++i) {
        size_t pc = h.pivot_cols[i];
        const Int& piv = h.h.at(i, pc);
        Int q = rem[pc] / piv;
        if (q * piv != rem[pc]) return std::nullopt;
        coeff[i] = q;
        for (size_t j = 0; j < gens.cols; ++j) rem[j] -= q * h.h.at(i, j);
    }
    for (const auto& x : rem)
        if (x != 0) return std::nullopt;
    // pull back through the transform: target = coeff . h = (coeff . u) . gens
    std::vector<Int> sol(gens.rows, Int(0));
    for (size_t i = 0; i < h.rank; ++i)
        for (size_t j = 0; j < gens.rows; ++j) sol[j] += coeff[i] * h.u.at(i, j);
    return sol;
}

std::vector<Int> im_reduce_mod_hnf(const HnfResult& h, std::vector<Int> x) {
    if (h.h.cols != x.size()) throw DimensionMismatchError("reduce shape mismatch");
    for (size_t i = 0; i < h.rank; ++i) {
        size_t pc = h.pivot_cols[i];
        const Int& piv = h.h.at(i, pc);
        Int q = x[pc] / piv;
        Int r = x[pc] - q * piv;
        if (r < 0) q -= 1;
        if (q == 0) continue;
        for (size_t j = 0; j < x.size(); ++j) x[j] -= q * h.h.at(i, j);
    }
    return x;
}

SnfResult snf(const IntMat& m) {
    SnfResult res;
    res.s = m;
    res.u = IntMat::identity(m.rows);
    res.u_inv = IntMat::identity(m.rows);
    res.v = IntMat::identity(m.cols);
    IntMat& s = res.s;

    auto row_addmul = [&](size_t dst, size_t src, const Int& f) {
        for (size_t c = 0; c < s.cols; ++c) s.at(dst, c) += f * s.at(src, c);
        for (size_t c = 0; c < res.u.cols; ++c) res.u.at(dst, c) += f * res.u.at(src, c);
        for (size_t r = 0; r < res.u_inv.rows; ++r) res.u_inv.at(r, src) -= f * res.u_inv.at(r, dst);
    };
    auto row_swap = [&](size_t i, size_t j) {
        if (i == j) return;
        for (size_t c = 0; c < s.cols; ++c) std::swap(s.at(i, c), s.at(j, c));
        for (size_t c = 0; c < res.u.cols; ++c) std::swap(res.u.at(i, c), res.u.at(j, c));
        for (size_t r = 0; r < res.u_inv.rows; ++r) std::swap(res.u_inv.at(r, i), res.u_inv.at(r, j));
    };
    auto row_negate = [&](size_t i) {
        for (size_t c = 0; c < s.cols; ++c) s.at(i, c) = -s.at(i, c);
        for (size_t c = 0; c < res.u.cols; ++c) res.u.at(i, c) = -res.u.at(i, c);
        for (size_t r = 0; r < res.u_inv.rows; ++r) res.u_inv.at(r, i) = -res.u_inv.at(r, i);
    };
    auto col_addmul = [&](size_t dst, size_t src, const Int& f) {
        for (size_t r = 0; r < s.rows; ++r) s.at(r, dst) += f * s.at(r, src);
        for (size_t r = 0; r < res.v.rows; ++r) res.v.at(r, dst) += f * res.v.at(r, src);
    };
    auto col_swap = [&](size_t i, size_t j) {
        if (i == j) return;
        for (size_t r = 0; r < s.rows; ++r) std::swap(s.at(r, i), s.at(r, j));
        for (size_t r = 0; r < res.v.rows; ++r) std::swap(res.v.at(r, i), res.v.at(r, j));
    };
    auto col_negate = [&](size_t j) {
        for (size_t r = 0; r < s.rows; ++r) s.at(r, j) = -s.at(r, j);
        for (size_t r = 0; r < res.v.rows; ++r) res.v.at(r, j) = -res.v.at(r, j);
    };

    size_t n = std::min(s.rows, s.cols);
    for (size_t k = 0; k < n; ++k) {
        while (true) {
            // locate a smallest nonzero entry in the remaining block
            bool found = false;
            size_t pi = k, pj = k;
            for (size_t i = k; i < s.rows; ++i)
                for (size_t j = k; j < s.cols; ++j) {
                    if (s.at(i, j) == 0) continue;
                    if (!found || abs(s.at(i, j)) < abs(s.at(pi, pj))) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found) { k = n; break; }
            row_swap(k, pi);
            col_swap(k, pj);
            if (s.at(k, k) < 0) row_negate(k);
            bool clean = true;
            for (size_t i = k + 1; i < s.rows; ++i) {
                if (s.at(i, k) == 0) continue;
                Int q = s.at(i, k) / s.at(k, k);
                row_addmul(i, k, -q);
                if (s.at(i, k) != 0) clean = false;
            }
            for (size_t j = k + 1; j < s.cols; ++j) {
                if (s.at(k, j) == 0) continue;
                Int q = s.at(k, j) / s.at(k, k);
                col_addmul(j, k, -q);
                if (s.at(k, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility sweep: fold a non-divisible entry into column k
            bool divisible = true;
            for (size_t i = k + 1; i < s.rows && divisible; ++i)
                for (size_t j = k + 1; j < s.cols && divisible; ++j)
                    if (s.at(i, j) % s.at(k, k) != 0) {
                        row_addmul(k, i, Int(1));
                        divisible = false;
                    }
            if (divisible) break;
        }
        if (k >= n) break;
    }
    for (size_t k = 0; k < n; ++k) {
        if (s.at(k, k) < 0) { row_negate(k); }
        res.diag.push_back(s.at(k, k));
    }
    while (!res.diag.empty() && res.diag.back() == 0) res.diag.pop_back();
    (void)col_negate;
    return res;
}

IntMat im_inverse_unimodular(const IntMat& m) {
    if (m.rows != m.cols) throw DimensionMismatchError("inverse of non-square matrix");
    size_t n = m.rows;
    // rational Gauss-Jordan, then integrality check
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(2 * n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) w[i][j] = Rat(m.at(i, j));
        w[i][n + i] = 1;
    }
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && w[p][k] == 0) ++p;
        if (p == n) throw MathError("matrix not invertible");
        std::swap(w[k], w[p]);
        Rat inv = Rat(1) / w[k][k];
        for (size_t j = 0; j < 2 * n; ++j) w[k][j] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == k || w[i][k] == 0) continue;
            Rat f = w[i][k];
            for (size_t j = 0; j < 2 * n; ++j) w[i][j] -= f * w[k][j];
        }
    }
    IntMat r(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (w[i][n + j].get_den() != 1) throw MathError("matrix inverse not integral");
            r.at(i, j) = w[i][n + j].get_num();
        }
    return r;
}

}  // namespace pep
