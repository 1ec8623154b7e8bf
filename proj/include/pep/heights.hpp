#pragma once

// Weil heights of tuples of field elements, certified to a requested
// tolerance. The non-archimedean part is the content-ideal norm; the
// archimedean part is an exact rational interval over the certified
// embeddings, with MPFR supplying directed-rounded logarithms at the end.
//
// compare_height settles ties exactly: beyond interval refinement it falls
// back to an annihilating-polynomial argument (resultant-flavored) that is
// total, so counting experiments are reproducible bit for bit.

#include <optional>
#include <vector>

#include "pep/numberfield.hpp"

namespace pep {

struct HeightValue {
    Rat log_lo, log_hi;  // certified bounds on the logarithmic height
    Rat tolerance;       // requested width, log_hi - log_lo <= tolerance
    std::optional<Rat> exact_rational_power;  // H^[K:Q] when provably rational

    double mid() const { return (log_lo.get_d() + log_hi.get_d()) / 2; }
    double lo() const { return log_lo.get_d(); }
    double hi() const { return log_hi.get_d(); }
};

enum class HeightCmp { Below, Equal, Above };

inline Rat default_height_tolerance() { return Rat(1, Int(1) << 40); }

// H(x_0 : ... : x_n), not all zero.
HeightValue projective_height(const std::vector<FieldElement>& xs, const Rat& tolerance);

// H_aff(x_1,...,x_n) = H(1 : x_1 : ... : x_n).
HeightValue affine_height(const std::vector<FieldElement>& xs, const Rat& tolerance);

// Single-element height by the Mahler measure of the minimal polynomial;
// an independent oracle for affine_height on one element.
HeightValue element_height_mahler(const FieldElement& x, const Rat& tolerance);

// Certified trichotomy of H_aff(tuple) against a positive rational bound.
HeightCmp compare_height(const std::vector<FieldElement>& tuple, const Rat& bound);

// Internal: exact archimedean comparison used by compare_height once interval
// refinement stops making progress. ys are integral, target compares against
// prod_places max_i ||y_i||_v (that is, H^[K:Q] * content). Total.
HeightCmp exact_archimedean_compare(const FieldPtr& field, const std::vector<FieldElement>& ys,
                                    const Rat& target);

}  // namespace pep
