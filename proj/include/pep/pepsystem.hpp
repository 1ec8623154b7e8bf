#pragma once

// The purely exponential polynomial system: s components, each a sum of
// terms  coeff * prod_j base_j ^ (L n)_j  with integer linear forms in r
// integer variables. Evaluation is exact; negative exponents go through
// exact inverses.

#include <string>
#include <vector>

#include "pep/intmat.hpp"
#include "pep/numberfield.hpp"

namespace pep {

struct ExponentVector {
    std::vector<Int> n;

    ExponentVector() = default;
    explicit ExponentVector(std::vector<Int> v) : n(std::move(v)) {}
    static ExponentVector from_longs(const std::vector<long>& v) {
        std::vector<Int> w(v.begin(), v.end());
        return ExponentVector(std::move(w));
    }
    size_t size() const { return n.size(); }
    Int sup_norm() const {
        Int m(0);
        for (const auto& x : n) m = std::max(m, Int(abs(x)));
        return m;
    }
    bool operator==(const ExponentVector& o) const { return n == o.n; }
    bool operator<(const ExponentVector& o) const;  // lexicographic
    std::string str() const;
};

struct PepTerm {
    FieldElement coeff;   // nonzero
    IntMat exponents;     // k x r: row j = linear form attached to base j
};

struct PepComponent {
    std::vector<PepTerm> terms;
};

struct PepSystem {
    FieldPtr field;
    size_t r = 0;  // integer variables
    std::vector<FieldElement> bases;  // k nonzero elements
    std::vector<PepComponent> components;

    size_t k() const { return bases.size(); }
    size_t s() const { return components.size(); }
    void validate() const;

    std::string str(const std::string& symbol, const std::vector<std::string>& vars) const;
    std::string default_str() const;
};

// exact evaluation of all components at n
std::vector<FieldElement> evaluate(const PepSystem& f, const ExponentVector& n);

// the term monomials u_i(n) of one component, coefficients excluded
std::vector<FieldElement> term_monomials(const PepSystem& f, size_t component, const ExponentVector& n);

// value set of the union of two systems (same field, same component count),
// realized with a parity selector variable over base -1
PepSystem union_systems(const PepSystem& a, const PepSystem& b);

// merge terms with identical exponent matrices, dropping zero sums
PepSystem collect_terms(const PepSystem& f);

// canonical serialization key of a value tuple
std::string value_key(const std::vector<FieldElement>& tuple);

}  // namespace pep
