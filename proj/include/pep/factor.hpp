#pragma once

// Factorization over Z: integers (trial division + Pollard rho) and
// primitive integer polynomials (Berlekamp mod p, Hensel lifting, subset
// recombination). Degrees are capped at desk scale by the caller.

#include <map>
#include <vector>

#include "pep/intpoly.hpp"

namespace pep {

bool is_probable_prime(const Int& n);

// Full factorization n = prod p^e for n > 0; throws CapError when a factor
// resists the configured effort.
std::map<Int, unsigned> int_factorize(const Int& n);

// n = m * s^2 with m squarefree; returns {m, s} for n != 0 (sign goes to m).
std::pair<Int, Int> squarefree_decomposition(const Int& n);

bool is_squarefree_int(const Int& n);

std::vector<Int> divisors(const Int& n);  // positive divisors of |n|

// Irreducible factors with multiplicity of a nonzero primitive polynomial.
// Factors are primitive with positive leading coefficient; the constant
// content is dropped.
std::vector<std::pair<IntPoly, unsigned>> factor_int_poly(const IntPoly& f);

bool is_irreducible_int_poly(const IntPoly& f);

// All rational roots of f (exact).
std::vector<Rat> rational_roots(const IntPoly& f);

}  // namespace pep
