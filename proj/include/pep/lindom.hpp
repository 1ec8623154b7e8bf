#pragma once

// Exact dense linear algebra over an abstract field domain; instantiated for
// rationals and for number-field elements.

#include <vector>

#include "pep/polydom.hpp"

namespace pep {

template <class D>
using MatOf = std::vector<std::vector<typename D::Elem>>;

template <class D>
MatOf<D> mat_identity(const D& d, size_t n) {
    MatOf<D> m(n, std::vector<typename D::Elem>(n, d.zero()));
    for (size_t i = 0; i < n; ++i) m[i][i] = d.one();
    return m;
}

template <class D>
MatOf<D> mat_mul(const D& d, const MatOf<D>& a, const MatOf<D>& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    MatOf<D> r(n, std::vector<typename D::Elem>(m, d.zero()));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (d.is_zero(a[i][t])) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] = d.add(r[i][j], d.mul(a[i][t], b[t][j]));
        }
    return r;
}

template <class D>
std::vector<typename D::Elem> mat_vec(const D& d, const MatOf<D>& a,
                                      const std::vector<typename D::Elem>& v) {
    std::vector<typename D::Elem> r(a.size(), d.zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] = d.add(r[i], d.mul(a[i][j], v[j]));
    return r;
}

// Gauss-Jordan inverse; throws MathError when singular.
template <class D>
MatOf<D> mat_inverse(const D& d, MatOf<D> a) {
    size_t n = a.size();
    MatOf<D> inv = mat_identity(d, n);
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && d.is_zero(a[p][k])) ++p;
        if (p == n) throw MathError("singular matrix");
        std::swap(a[k], a[p]);
        std::swap(inv[k], inv[p]);
        auto s = d.inv(a[k][k]);
        for (size_t j = 0; j < n; ++j) {
            a[k][j] = d.mul(a[k][j], s);
            inv[k][j] = d.mul(inv[k][j], s);
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == k || d.is_zero(a[i][k])) continue;
            auto f = a[i][k];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] = d.sub(a[i][j], d.mul(f, a[k][j]));
                inv[i][j] = d.sub(inv[i][j], d.mul(f, inv[k][j]));
            }
        }
    }
    return inv;
}

template <class D>
typename D::Elem mat_det(const D& d, MatOf<D> a) {
    size_t n = a.size();
    auto det = d.one();
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && d.is_zero(a[p][k])) ++p;
        if (p == n) return d.zero();
        if (p != k) {
            std::swap(a[k], a[p]);
            det = d.sub(d.zero(), det);
        }
        det = d.mul(det, a[k][k]);
        auto s = d.inv(a[k][k]);
        for (size_t i = k + 1; i < n; ++i) {
            if (d.is_zero(a[i][k])) continue;
            auto f = d.mul(a[i][k], s);
            for (size_t j = k; j < n; ++j) a[i][j] = d.sub(a[i][j], d.mul(f, a[k][j]));
        }
    }
    return det;
}

// Basis of the right kernel { v : a v = 0 }.
template <class D>
MatOf<D> mat_kernel(const D& d, MatOf<D> a) {
    if (a.empty()) return {};
    size_t rows = a.size(), cols = a[0].size();
    std::vector<long> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && d.is_zero(a[p][c])) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        auto s = d.inv(a[r][c]);
        for (size_t j = 0; j < cols; ++j) a[r][j] = d.mul(a[r][j], s);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || d.is_zero(a[i][c])) continue;
            auto f = a[i][c];
            for (size_t j = 0; j < cols; ++j) a[i][j] = d.sub(a[i][j], d.mul(f, a[r][j]));
        }
        pivot_col.push_back(static_cast<long>(c));
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (long c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    MatOf<D> kernel;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<typename D::Elem> v(cols, d.zero());
        v[c] = d.one();
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[static_cast<size_t>(pivot_col[i])] = d.sub(d.zero(), a[i][c]);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

// Faddeev-LeVerrier characteristic polynomial det(tI - M), monic degree n.
template <class D>
PolyOf<D> charpoly_faddeev(const D& d, const MatOf<D>& m) {
    size_t n = m.size();
    PolyOf<D> cp(n + 1, d.zero());
    cp[n] = d.one();
    MatOf<D> mk = mat_identity(d, n);
    auto trace = [&](const MatOf<D>& x) {
        auto t = d.zero();
        for (size_t i = 0; i < n; ++i) t = d.add(t, x[i][i]);
        return t;
    };
    for (size_t k = 1; k <= n; ++k) {
        mk = mat_mul(d, m, mk);
        auto c = d.mul(trace(mk), d.inv(d.from_long(static_cast<long>(k))));
        c = d.sub(d.zero(), c);
        cp[n - k] = c;
        for (size_t i = 0; i < n; ++i) mk[i][i] = d.add(mk[i][i], c);
    }
    return cp;
}

}  // namespace pep
