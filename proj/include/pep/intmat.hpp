#pragma once

// Dense integer matrices and the lattice algorithms built on them: row-style
// Hermite normal form with transform, Smith normal form with transforms,
// kernels, exact solves and fundamental-domain enumeration.

#include <optional>
#include <vector>

#include "pep/rat.hpp"

namespace pep {

struct IntMat {
    size_t rows = 0, cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(size_t r, size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}

    Int& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Int& at(size_t i, size_t j) const { return a[i * cols + j]; }

    static IntMat identity(size_t n);
    IntMat transpose() const;
    bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

IntMat im_mul(const IntMat& x, const IntMat& y);
std::vector<Int> im_mul_vec(const IntMat& m, const std::vector<Int>& v);

// Fraction-free determinant (Bareiss); square input.
Int im_det(const IntMat& m);

struct HnfResult {
    IntMat h;          // row HNF: pivots positive, entries above a pivot reduced into [0, pivot)
    IntMat u;          // unimodular, u * input = h
    size_t rank = 0;   // nonzero rows of h (they come first)
    std::vector<size_t> pivot_cols;
};

HnfResult hnf(const IntMat& m);

struct SnfResult {
    IntMat u, s, v;    // u * input * v = s, diagonal d1 | d2 | ...
    IntMat u_inv;      // exact integer inverse of u
    std::vector<Int> diag;
};

SnfResult snf(const IntMat& m);

// Basis of { x : m x = 0 }, returned as rows of a (k x cols) matrix.
IntMat im_kernel(const IntMat& m);

// Integer solution of (x^T * gens = target) where gens rows generate a
// lattice; nullopt when target is outside the lattice.
std::optional<std::vector<Int>> im_solve_row_lattice(const IntMat& gens, const std::vector<Int>& target);

// Canonical representative of x modulo the row lattice of a row-HNF matrix.
std::vector<Int> im_reduce_mod_hnf(const HnfResult& h, std::vector<Int> x);

// Exact inverse of a unimodular integer matrix.
IntMat im_inverse_unimodular(const IntMat& m);

}  // namespace pep
