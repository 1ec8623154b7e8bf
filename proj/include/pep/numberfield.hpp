#pragma once

// One fixed number field K = Q(theta) with exact power-basis arithmetic,
// certified embeddings, an integral basis, and the HNF-based content-ideal
// norm that carries the non-archimedean part of heights.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pep/intpoly.hpp"
#include "pep/lindom.hpp"
#include "pep/roots.hpp"

namespace pep {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

class FieldElement {
  public:
    FieldElement() = default;  // empty element; unusable until assigned
    FieldElement(FieldPtr field, std::vector<Rat> power_coords);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coords() const { return co_; }

    bool is_zero() const;
    bool is_rational() const;  // all coordinates beyond the first vanish
    Rat rational_value() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement inverse() const;
    FieldElement pow(const Int& e) const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // total order by coordinates; used for canonical serialization only
    static int cmp(const FieldElement& a, const FieldElement& b);

    std::string str(const std::string& symbol) const;  // expression in the generator
    std::string key() const;                           // canonical "a/b,c/d,..." form

  private:
    FieldPtr field_;
    std::vector<Rat> co_;
};

struct FieldOptions {
    long precision_cap_bits = 4096;
};

struct EmbeddingValues {
    std::vector<RatInterval> real;  // one per real embedding
    std::vector<RatRect> cplx;      // one per conjugate pair (upper representative)
};

class NumberField : public std::enable_shared_from_this<NumberField> {
  public:
    // Integral basis rows are power-basis coordinates. Resolution: degree 1
    // trivial, degree 2 closed form, degree >= 3 power basis only when the
    // polynomial discriminant is squarefree, otherwise the caller supplies one.
    static FieldPtr make(const IntPoly& defining_polynomial,
                         std::optional<std::vector<std::vector<Rat>>> integral_basis = std::nullopt,
                         const FieldOptions& options = {});

    int degree() const { return d_; }
    size_t real_embeddings() const { return roots_->num_real(); }
    size_t complex_pairs() const { return roots_->num_pairs(); }
    const IntPoly& defining_polynomial() const { return poly_; }
    const Int& discriminant() const { return field_disc_; }
    const std::vector<std::vector<Rat>>& integral_basis() const { return basis_; }
    long precision_cap_bits() const { return options_.precision_cap_bits; }

    FieldElement element(std::vector<Rat> power_coords) const;
    FieldElement from_rat(const Rat& q) const;
    FieldElement zero() const { return from_rat(Rat(0)); }
    FieldElement one() const { return from_rat(Rat(1)); }
    FieldElement gen() const;  // theta

    bool same_field(const NumberField& o) const;

    // arithmetic backend used by FieldElement
    std::vector<Rat> mul_coords(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
    std::vector<Rat> inv_coords(const std::vector<Rat>& a) const;

    // characteristic data of an element
    QPoly charpoly_of(const FieldElement& x) const;
    Rat norm(const FieldElement& x) const;
    Rat trace(const FieldElement& x) const;
    IntPoly minimal_polynomial(const FieldElement& x) const;  // primitive, lc > 0

    // integral structure
    std::vector<Rat> integral_coords(const FieldElement& x) const;
    bool is_integral(const FieldElement& x) const;
    // least positive integer k with k*x_i integral for every tuple member
    Int clearing_denominator(const std::vector<FieldElement>& xs) const;
    // [O_K : (x_1,...,x_n)] for integral x_i, not all zero
    Int content_ideal_norm(const std::vector<FieldElement>& xs) const;

    // certified embeddings
    const RootSet& roots() const { return *roots_; }
    EmbeddingValues embed(const FieldElement& x, std::shared_ptr<const RootSnapshot> snap) const;

    // orders m with phi(m) <= degree: the only possible torsion orders in K
    std::vector<long> allowed_torsion_orders() const;

  private:
    NumberField() = default;

    IntPoly poly_;
    int d_ = 0;
    std::vector<std::vector<Rat>> basis_;      // rows: integral basis in power coords
    MatOf<RatDomain> basis_inv_;               // power -> integral coordinate transform
    Int field_disc_;
    FieldOptions options_;
    std::unique_ptr<RootSet> roots_;
    std::vector<std::vector<Rat>> theta_red_;  // theta^d .. theta^(2d-2) in power coords
    std::vector<std::vector<std::vector<Rat>>> basis_mul_;  // integral structure constants
};

// Free-function face of the module API.
FieldPtr make_field(const IntPoly& defining_polynomial,
                    std::optional<std::vector<std::vector<Rat>>> integral_basis = std::nullopt,
                    const FieldOptions& options = {});

// Domain adapter: number-field elements as coefficients for Poly/Mat code.
struct KDomain {
    FieldPtr f;
    using Elem = FieldElement;
    FieldElement zero() const { return f->zero(); }
    FieldElement one() const { return f->one(); }
    FieldElement from_long(long k) const { return f->from_rat(Rat(k)); }
    bool is_zero(const FieldElement& a) const { return a.is_zero(); }
    FieldElement add(const FieldElement& a, const FieldElement& b) const { return a + b; }
    FieldElement sub(const FieldElement& a, const FieldElement& b) const { return a - b; }
    FieldElement mul(const FieldElement& a, const FieldElement& b) const { return a * b; }
    FieldElement mul_int(const FieldElement& a, long k) const { return a * f->from_rat(Rat(k)); }
    FieldElement inv(const FieldElement& a) const { return a.inverse(); }
};

using KPoly = PolyOf<KDomain>;

}  // namespace pep
