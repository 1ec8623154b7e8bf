#pragma once

// Degenerate-subsum loci of one component inside a box, fitted by integer
// lattice cosets; restriction of a system to a coset; and the empirical /
// certified two-sided height bounds of the term-monomial map.

#include <functional>
#include <optional>

#include "pep/heights.hpp"
#include "pep/pepsystem.hpp"

namespace pep {

struct IntegerLatticeCoset {
    ExponentVector offset;
    IntMat basis;  // rank x dim rows, row-HNF

    size_t rank() const { return basis.rows; }
    size_t dim() const { return basis.cols; }
    bool contains(const ExponentVector& n) const;
    void canonicalize();
    bool operator==(const IntegerLatticeCoset& o) const;
    bool operator<(const IntegerLatticeCoset& o) const;
    std::string str() const;

    static IntegerLatticeCoset full(size_t r);  // offset 0, identity basis
    static IntegerLatticeCoset single_point(ExponentVector p);
};

// iterate the sup-norm box [-N, N]^r; fn gets each point
void box_iterate(size_t r, long N, const std::function<void(const ExponentVector&)>& fn);
double box_cells(size_t r, long N);

struct SubsetFamily {
    std::vector<size_t> subset;             // term indices of the vanishing subsum
    std::vector<ExponentVector> points;     // box points where it vanishes
};

struct DegeneracyResult {
    std::vector<ExponentVector> points;        // union over subsets, sorted
    std::vector<IntegerLatticeCoset> cosets;   // minimal list covering exactly the points in the box
    std::vector<SubsetFamily> families;        // per vanishing subset detail
    bool unstructured_remainder = false;       // some points were covered only as rank-0 cosets
};

DegeneracyResult degeneracy_locus(const PepSystem& f, size_t component, long N,
                                  size_t subset_cap = 12, double cell_cap = 1e8);

// f'(m) = f(offset + basis^T m), exponent forms composed with the affine map,
// constant parts absorbed into coefficients as exact powers.
PepSystem restrict_to_coset(const PepSystem& f, const IntegerLatticeCoset& c);

struct HomHeightBounds {
    bool vacuous = false;       // r = 0: empty range conventions
    double c1_empirical = 0;    // min over the box of sum_i h(u_i(n)) / sup-norm
    double c2_empirical = 0;    // matching max
    Rat c2_certified_upper;     // sum over terms and bases of |L| * h(base), all n
};

HomHeightBounds hom_height_bounds(const PepSystem& f, long N, double cell_cap = 1e8);

}  // namespace pep
