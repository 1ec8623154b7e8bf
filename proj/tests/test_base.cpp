#include "doctest.h"

#include "pep/factor.hpp"
#include "pep/intmat.hpp"
#include "pep/intpoly.hpp"

using namespace pep;

TEST_CASE("integer polynomial arithmetic") {
    IntPoly f = IntPoly::from_longs({-2, 0, 1});  // x^2 - 2
    IntPoly g = IntPoly::from_longs({1, 1});      // x + 1
    CHECK(ip_mul(f, g) == IntPoly::from_longs({-2, -2, 1, 1}));
    CHECK(ip_eval(f, Rat(3)) == Rat(7));
    CHECK(ip_sign_at(f, Int(3), Int(2)) == sgn(Rat(9, 4) - 2));
    CHECK(ip_divexact(ip_mul(f, g), g) == f);
    CHECK(ip_gcd(ip_mul(f, g), ip_mul(f, IntPoly::from_longs({5, 3}))) == f);
}

TEST_CASE("discriminant and resultant") {
    IntPoly f = IntPoly::from_longs({-2, 0, 1});
    CHECK(ip_discriminant(f) == 8);
    IntPoly c3 = IntPoly::from_longs({-1, -1, 0, 1});  // x^3 - x - 1
    CHECK(ip_discriminant(c3) == -23);
    // res(x^2-2, x^2-3) = (2-3)^2 = 1
    CHECK(ip_resultant(f, IntPoly::from_longs({-3, 0, 1})) == 1);
}

TEST_CASE("integer factorization") {
    auto f = int_factorize(Int(2 * 2 * 3 * 49));
    CHECK(f[Int(2)] == 2);
    CHECK(f[Int(3)] == 1);
    CHECK(f[Int(7)] == 2);
    auto [m, s] = squarefree_decomposition(Int(8));
    CHECK(m == 2);
    CHECK(s == 2);
    CHECK(is_squarefree_int(Int(-23)) == true);
    CHECK(is_probable_prime(Int("1000000007")));
}

TEST_CASE("polynomial factorization over Z") {
    IntPoly f = ip_mul(IntPoly::from_longs({-2, 0, 1}), IntPoly::from_longs({1, 1}));
    auto fac = factor_int_poly(f);
    REQUIRE(fac.size() == 2);
    CHECK(is_irreducible_int_poly(IntPoly::from_longs({-2, 0, 1})));
    CHECK(is_irreducible_int_poly(IntPoly::from_longs({1, 0, 1})));
    CHECK(is_irreducible_int_poly(IntPoly::from_longs({-1, -1, 0, 1})));
    CHECK(is_irreducible_int_poly(IntPoly::from_longs({1, -6, 1})));
    CHECK(is_irreducible_int_poly(IntPoly::from_longs({-4, 0, 1})) == false);
}

TEST_CASE("pell minimal polynomial is irreducible") {
    CHECK(is_irreducible_int_poly(IntPoly(std::vector<Int>{Int(1), Int(-6), Int(1)})));
}

TEST_CASE("cyclotomic-style factorization") {
    // x^4 - 1 = (x-1)(x+1)(x^2+1)
    auto fac = factor_int_poly(IntPoly::from_longs({-1, 0, 0, 0, 1}));
    CHECK(fac.size() == 3);
    unsigned total = 0;
    for (auto& [p, e] : fac) total += e * p.degree();
    CHECK(total == 4);
    // (x^2-2)^2 multiplicity
    auto sq = factor_int_poly(ip_mul(IntPoly::from_longs({-2, 0, 1}), IntPoly::from_longs({-2, 0, 1})));
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].second == 2);
    CHECK(sq[0].first == IntPoly::from_longs({-2, 0, 1}));
}

TEST_CASE("swinnerton-dyer style splits") {
    // x^4 - 10x^2 + 1 (minimal poly of sqrt2+sqrt3): irreducible over Q but
    // splits mod every prime; exercises recombination.
    CHECK(is_irreducible_int_poly(IntPoly::from_longs({1, 0, -10, 0, 1})));
    // non-monic: 2x^2 - 1 irreducible; 4x^2-1 = (2x-1)(2x+1)
    CHECK(is_irreducible_int_poly(IntPoly::from_longs({-1, 0, 2})));
    auto fac = factor_int_poly(IntPoly::from_longs({-1, 0, 4}));
    CHECK(fac.size() == 2);
}

TEST_CASE("rational roots") {
    // 2x^2 - x - 1 = (2x+1)(x-1)
    auto r = rational_roots(IntPoly::from_longs({-1, -1, 2}));
    REQUIRE(r.size() == 2);
    CHECK(r[0] == Rat(-1, 2));
    CHECK(r[1] == Rat(1));
}

TEST_CASE("hnf basics") {
    IntMat m(2, 2);
    m.at(0, 0) = 1; m.at(0, 1) = 1;
    m.at(1, 0) = 1; m.at(1, 1) = -1;
    auto h = hnf(m);
    CHECK(h.rank == 2);
    CHECK(h.h.at(0, 0) == 1);
    CHECK(h.h.at(0, 1) == 1);
    CHECK(h.h.at(1, 0) == 0);
    CHECK(h.h.at(1, 1) == 2);
    CHECK(im_det(h.u) * im_det(m) == im_det(h.h));
    CHECK(abs(im_det(h.u)) == 1);
    CHECK(im_mul(h.u, m) == h.h);
    // idempotence
    auto h2 = hnf(h.h);
    CHECK(h2.h == h.h);
}

TEST_CASE("hnf diagonal and identity") {
    IntMat id = IntMat::identity(2);
    CHECK(hnf(id).h == id);
    IntMat d(2, 2);
    d.at(0, 0) = 2; d.at(1, 1) = 3;
    auto h = hnf(d);
    CHECK(h.h == d);
    CHECK(abs(im_det(h.h)) == 6);
}

TEST_CASE("kernel and lattice solve") {
    IntMat m(1, 3);
    m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
    IntMat k = im_kernel(m);
    CHECK(k.rows == 2);
    for (size_t i = 0; i < k.rows; ++i) {
        Int dot = k.at(i, 0) * 1 + k.at(i, 1) * 2 + k.at(i, 2) * 3;
        CHECK(dot == 0);
    }
    IntMat gens(2, 2);
    gens.at(0, 0) = 2; gens.at(0, 1) = 0;
    gens.at(1, 0) = 0; gens.at(1, 1) = 3;
    auto s = im_solve_row_lattice(gens, {Int(4), Int(-3)});
    REQUIRE(s.has_value());
    CHECK((*s)[0] == 2);
    CHECK((*s)[1] == -1);
    CHECK(!im_solve_row_lattice(gens, {Int(1), Int(0)}).has_value());
}

TEST_CASE("snf") {
    IntMat m(2, 2);
    m.at(0, 0) = 2; m.at(0, 1) = 4;
    m.at(1, 0) = 6; m.at(1, 1) = 8;
    auto s = snf(m);
    CHECK(im_mul(im_mul(s.u, m), s.v) == s.s);
    CHECK(im_mul(s.u, s.u_inv) == IntMat::identity(2));
    REQUIRE(s.diag.size() == 2);
    CHECK(s.diag[0] == 2);
    CHECK(s.diag[1] == 4);  // det 16-24=-8, d1*d2 = 8
    CHECK(s.diag[0] * s.diag[1] == abs(im_det(m)));
    // divisibility chain on a rectangular matrix
    IntMat r(2, 3);
    r.at(0, 0) = 2; r.at(0, 1) = 3; r.at(0, 2) = 5;
    r.at(1, 0) = 4; r.at(1, 1) = 6; r.at(1, 2) = 7;
    auto s2 = snf(r);
    CHECK(im_mul(im_mul(s2.u, r), s2.v) == s2.s);
    REQUIRE(s2.diag.size() == 2);
    CHECK(s2.diag[1] % s2.diag[0] == 0);
}

TEST_CASE("unimodular inverse") {
    IntMat m(2, 2);
    m.at(0, 0) = 3; m.at(0, 1) = 2;
    m.at(1, 0) = 4; m.at(1, 1) = 3;
    auto inv = im_inverse_unimodular(m);
    CHECK(im_mul(m, inv) == IntMat::identity(2));
}

#include "pep/roots.hpp"

TEST_CASE("real root isolation: x^2-2") {
    RootSet rs(IntPoly::from_longs({-2, 0, 1}));
    CHECK(rs.num_real() == 2);
    CHECK(rs.num_pairs() == 0);
    auto s = rs.refine_below(Rat(1, 1 << 20));
    REQUIRE(s->real.size() == 2);
    CHECK(s->real[0].hi < 0);
    CHECK(s->real[1].lo > 0);
    // sqrt(2) in the bracket
    CHECK(s->real[1].lo * s->real[1].lo <= 2);
    CHECK(s->real[1].hi * s->real[1].hi >= 2);
    CHECK(s->real[1].hi - s->real[1].lo <= Rat(1, 1 << 20));
}

TEST_CASE("complex enclosure: x^2+1") {
    RootSet rs(IntPoly::from_longs({1, 0, 1}));
    CHECK(rs.num_real() == 0);
    CHECK(rs.num_pairs() == 1);
    auto s = rs.refine_below(Rat(1, 1 << 16));
    REQUIRE(s->upper.size() == 1);
    // i = (0, 1)
    CHECK(s->upper_box[0].re.contains(Rat(0)));
    CHECK(s->upper_box[0].im.contains(Rat(1)));
    CHECK(s->upper_box[0].im.width() <= Rat(1, 1 << 16));
}

TEST_CASE("mixed roots: x^3-x-1 (one real, one pair)") {
    RootSet rs(IntPoly::from_longs({-1, -1, 0, 1}));
    CHECK(rs.num_real() == 1);
    CHECK(rs.num_pairs() == 1);
    auto s = rs.refine_below(Rat(1, 1000000));
    // plastic number ~ 1.32472
    CHECK(s->real[0].lo > Rat(13, 10));
    CHECK(s->real[0].hi < Rat(133, 100));
}

TEST_CASE("exact rational root hit: degree 1 and dyadic roots") {
    RootSet r1(IntPoly::from_longs({-3, 1}));
    auto s = r1.current();
    REQUIRE(s->real.size() == 1);
    CHECK(s->real[0].lo == 3);
    CHECK(s->real[0].hi == 3);
    // (2x-1)(x^2-3) has root 1/2 likely hit by dyadic midpoints
    RootSet r2(IntPoly(std::vector<Int>{Int(3), Int(-6), Int(-1), Int(2)}));
    CHECK(r2.num_real() == 3);
    auto s2 = r2.refine_below(Rat(1, 1 << 12));
    bool found_half = false;
    for (auto& b : s2->real)
        if (b.lo <= Rat(1, 2) && Rat(1, 2) <= b.hi) found_half = true;
    CHECK(found_half);
}

TEST_CASE("monotone refinement") {
    RootSet rs(IntPoly::from_longs({-2, 0, 1}));
    auto a = rs.refine_below(Rat(1, 1 << 8));
    auto b = rs.refine_below(Rat(1, 1 << 24));
    CHECK(b->real[1].lo >= a->real[1].lo);
    CHECK(b->real[1].hi <= a->real[1].hi);
}

TEST_CASE("interval arithmetic and logs") {
    RatInterval x(Rat(1), Rat(2)), y(Rat(-1), Rat(3));
    auto m = iv_mul(x, y);
    CHECK(m.lo == -2);
    CHECK(m.hi == 6);
    auto lg = log_interval(RatInterval(Rat(1), Rat(1)), 64);
    CHECK(lg.first <= 0);
    CHECK(lg.second >= 0);
    auto l2 = log_interval(RatInterval(Rat(2), Rat(2)), 64);
    CHECK(l2.first > Rat(69, 100));
    CHECK(l2.second < Rat(70, 100));
    CHECK(sqrt_upper(Rat(2)) * sqrt_upper(Rat(2)) >= 2);
}
