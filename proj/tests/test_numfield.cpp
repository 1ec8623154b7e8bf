#include <random>

#include "doctest.h"
#include "pep/factor.hpp"
#include "pep/numberfield.hpp"

using namespace pep;

namespace {
FieldPtr sqrt2_field() { return make_field(IntPoly::from_longs({-2, 0, 1})); }
}  // namespace

TEST_CASE("make_field validation") {
    CHECK_THROWS_AS(make_field(IntPoly::from_longs({0, 1})), InvalidPolynomialError);
    CHECK_THROWS_AS(make_field(IntPoly::from_longs({-4, 0, 1})), ReduciblePolynomialError);
    CHECK_THROWS_AS(make_field(IntPoly::from_longs({-2, 0, 2})), NonMonicError);
    auto q = make_field(IntPoly::from_longs({-1, 1}));  // x - 1
    CHECK(q->degree() == 1);
    CHECK(q->real_embeddings() == 1);
    CHECK(q->complex_pairs() == 0);
}

TEST_CASE("quadratic fields: signature, discriminant, integral basis") {
    auto k = sqrt2_field();
    CHECK(k->degree() == 2);
    CHECK(k->real_embeddings() == 2);
    CHECK(k->complex_pairs() == 0);
    CHECK(k->discriminant() == 8);
    CHECK(k->integral_basis()[1][1] == 1);  // {1, theta}

    auto gauss = make_field(IntPoly::from_longs({1, 0, 1}));
    CHECK(gauss->real_embeddings() == 0);
    CHECK(gauss->complex_pairs() == 1);
    CHECK(gauss->discriminant() == -4);

    auto root5 = make_field(IntPoly::from_longs({-5, 0, 1}));
    CHECK(root5->discriminant() == 5);
    CHECK(root5->integral_basis()[1][0] == Rat(1, 2));  // (1+sqrt5)/2
}

TEST_CASE("degree-3 field with squarefree discriminant") {
    auto k = make_field(IntPoly::from_longs({-1, -1, 0, 1}));
    CHECK(k->degree() == 3);
    CHECK(k->discriminant() == -23);
    CHECK(k->real_embeddings() == 1);
    CHECK(k->complex_pairs() == 1);
}

TEST_CASE("non-squarefree discriminant requires a basis") {
    // x^3 - x^2 - 2x - 8 has disc -4 * 503, index 2: power basis not maximal
    IntPoly f = IntPoly(std::vector<Int>{Int(-8), Int(-2), Int(-1), Int(1)});
    CHECK_THROWS_AS(make_field(f), IntegralBasisRequiredError);
    // supplying the classical basis {1, x, (x^2+x)/2} works
    std::vector<std::vector<Rat>> basis = {
        {Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(1, 2), Rat(1, 2)}};
    auto k = make_field(f, basis);
    CHECK(k->discriminant() == -503);
}

TEST_CASE("pell unit arithmetic") {
    auto k = sqrt2_field();
    FieldElement u = k->element({Rat(3), Rat(2)});   // 3 + 2 sqrt2
    FieldElement v = k->element({Rat(3), Rat(-2)});  // 3 - 2 sqrt2
    CHECK((u * v) == k->one());
    CHECK(u.pow(Int(0)) == k->one());
    CHECK(u.pow(Int(-1)) == v);
    CHECK(u.inverse() == v);
    CHECK((u / u) == k->one());
    CHECK_THROWS_AS(k->zero().inverse(), DivisionByZeroError);
    auto q = make_field(IntPoly::from_longs({-1, 1}));
    CHECK_THROWS_AS((void)(q->one() + k->one()), FieldMismatchError);
}

TEST_CASE("minimal polynomials") {
    auto k = sqrt2_field();
    CHECK(k->minimal_polynomial(k->one()) == IntPoly::from_longs({-1, 1}));
    CHECK(k->minimal_polynomial(k->gen()) == IntPoly::from_longs({-2, 0, 1}));
    FieldElement u = k->element({Rat(3), Rat(2)});
    CHECK(k->minimal_polynomial(u) == IntPoly::from_longs({1, -6, 1}));
    // trace 6, norm 1 oracle
    CHECK(k->trace(u) == 6);
    CHECK(k->norm(u) == 1);
    CHECK(k->minimal_polynomial(k->from_rat(Rat(1, 2))) == IntPoly::from_longs({-1, 2}));
}

TEST_CASE("content ideal norms") {
    auto q = make_field(IntPoly::from_longs({-1, 1}));
    CHECK(q->content_ideal_norm({q->from_rat(Rat(6)), q->from_rat(Rat(10))}) == 2);
    CHECK(q->content_ideal_norm({q->from_rat(Rat(1)), q->from_rat(Rat(7))}) == 1);
    auto k = sqrt2_field();
    CHECK(k->content_ideal_norm({k->gen()}) == 2);  // (sqrt2) has norm 2
    CHECK_THROWS_AS(k->content_ideal_norm({k->zero()}), AllZeroError);
    CHECK_THROWS_AS(k->content_ideal_norm({k->from_rat(Rat(1, 2))}), NotIntegralError);
}

TEST_CASE("clearing denominators") {
    auto k = sqrt2_field();
    FieldElement x = k->element({Rat(1, 2), Rat(1, 3)});
    Int den = k->clearing_denominator({x});
    CHECK(den == 6);
    CHECK(k->is_integral(k->element({Rat(1, 2) * 6, Rat(1, 3) * 6})));
}

TEST_CASE("norm consistency: product over embeddings equals |N(x)|") {
    std::mt19937_64 rng(12345);
    auto check_field = [&](FieldPtr k, int n) {
        for (int t = 0; t < n; ++t) {
            std::vector<Rat> co(static_cast<size_t>(k->degree()));
            bool nz = false;
            for (auto& c : co) {
                long num = static_cast<long>(rng() % 19) - 9;
                long den = 1 + static_cast<long>(rng() % 7);
                c = Rat(num, den);
                c.canonicalize();
                if (c != 0) nz = true;
            }
            if (!nz) co[0] = 1;
            FieldElement x = k->element(co);
            Rat absn = abs(k->norm(x));
            REQUIRE(absn != 0);
            // product of |sigma(x)|^dv must contain |N(x)|
            auto snap = k->roots().refine_below(Rat(1, Int(1) << 48));
            auto ev = k->embed(x, snap);
            RatInterval prod = RatInterval::point(Rat(1));
            for (const auto& iv : ev.real) prod = iv_mul(prod, iv_abs(iv));
            for (const auto& rc : ev.cplx) prod = iv_mul(prod, rc_modulus_squared(rc));
            CHECK(prod.lo <= absn);
            CHECK(prod.hi >= absn);
        }
    };
    check_field(sqrt2_field(), 100);
    check_field(make_field(IntPoly::from_longs({-1, -1, 0, 1})), 100);
}

TEST_CASE("embedding refinement is monotone") {
    auto k = make_field(IntPoly::from_longs({-1, -1, 0, 1}));
    auto s1 = k->roots().refine_below(Rat(1, 1 << 10));
    auto s2 = k->roots().refine_below(Rat(1, 1 << 20));
    CHECK(s2->real[0].lo >= s1->real[0].lo);
    CHECK(s2->real[0].hi <= s1->real[0].hi);
    CHECK(s2->upper_box[0].re.lo >= s1->upper_box[0].re.lo);
    CHECK(s2->upper_box[0].im.hi <= s1->upper_box[0].im.hi);
}

TEST_CASE("torsion order table") {
    auto k = sqrt2_field();
    auto orders = k->allowed_torsion_orders();
    // phi(m) <= 2: m in {1,2,3,4,6}
    CHECK(orders == std::vector<long>{1, 2, 3, 4, 6});
}

TEST_CASE("element printing and keys") {
    auto k = sqrt2_field();
    FieldElement u = k->element({Rat(3), Rat(-2)});
    CHECK(u.str("s") == "-2*s + 3");
    CHECK(u.key() == "3,-2");
    CHECK(k->zero().str("s") == "0");
}
