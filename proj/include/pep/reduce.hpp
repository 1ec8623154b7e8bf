#pragma once

// Multiplicative-relation lattices of the bases (bounded search, exactly
// verified) and the rewrite of a system over multiplicatively independent
// bases. Torsion bases (roots of unity) cannot be expressed through
// independent bases pointwise, so the rewrite returns one system per residue
// class of the torsion forms, each on a finite-index sublattice; evaluation
// dispatches through the class decomposition and agrees with the original
// everywhere.

#include "pep/pepsystem.hpp"

namespace pep {

// HNF basis (rows) of the lattice generated by all integer vectors theta with
// sup-norm <= bound and prod bases[j]^theta_j == 1, each verified exactly.
// Completeness beyond the bound is not claimed.
IntMat relation_lattice(const std::vector<FieldElement>& bases, long bound,
                        double cell_cap = 1e8);

struct ReducedClass {
    ExponentVector offset;  // class representative in the original variables
    IntMat sublattice;      // r x r rows: basis of the class sublattice G
    PepSystem system;       // same component count, independent bases, r variables
};

struct ReducedPep {
    PepSystem original;
    std::vector<FieldElement> independent_bases;
    std::vector<ReducedClass> classes;

    bool is_single_plain() const;           // one class, identity reindexing
    const PepSystem& single() const;        // valid when is_single_plain()
    // dispatch evaluation: agrees with evaluate(original, n) for every n
    std::vector<FieldElement> evaluate_original(const ExponentVector& n) const;
};

ReducedPep reduce_to_independent(const PepSystem& f, long bound);

}  // namespace pep
