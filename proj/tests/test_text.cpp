#include "test_helpers.hpp"

using namespace ringalg;
using ringalg::testing::poly_of;
using ringalg::testing::scalar_rings;

TEST_CASE("ring descriptor syntax round-trips", "[text]") {
    const std::vector<Ring> rings = {integers(),
                                     rationals(),
                                     integers_mod(6),
                                     integers_mod(97),
                                     dual_numbers(integers()),
                                     dual_numbers(integers_mod(6)),
                                     dual_numbers(dual_numbers(rationals()))};
    for (const Ring& r : rings) {
        CAPTURE(render_ring(r));
        REQUIRE(same_ring(parse_ring(render_ring(r, RingStyle::Canonical)), r));
        REQUIRE(same_ring(parse_ring(render_ring(r, RingStyle::Compact)), r));
    }

    REQUIRE(same_ring(parse_ring("Zmod6"), integers_mod(6)));
    REQUIRE(same_ring(parse_ring("Zmod 6"), integers_mod(6)));
    REQUIRE(same_ring(parse_ring("Zmod(6)"), integers_mod(6)));
    REQUIRE(same_ring(parse_ring("Dual Z"), dual_numbers(integers())));
    REQUIRE(same_ring(parse_ring("Dual(Z)"), dual_numbers(integers())));
    REQUIRE(same_ring(parse_ring("Dual Zmod 97"), dual_numbers(integers_mod(97))));
    REQUIRE(same_ring(parse_ring(" Dual ( Zmod 97 ) "), dual_numbers(integers_mod(97))));
}

TEST_CASE("ring descriptor errors", "[text]") {
    REQUIRE_THROWS_AS(parse_ring("Zmod 1"), InvalidRingError);
    REQUIRE_THROWS_AS(parse_ring("Gaussian"), ParseError);
    REQUIRE_THROWS_AS(parse_ring("Z extra"), ParseError);
    REQUIRE_THROWS_AS(parse_ring("Zmod"), ParseError);
    REQUIRE_THROWS_AS(parse_ring("Dual"), ParseError);
    REQUIRE_THROWS_AS(parse_ring(""), ParseError);
    REQUIRE_THROWS_AS(parse_ring("Poly(Z,1)"), ParseError);
}

TEST_CASE("element literals round-trip on random values", "[text]") {
    std::uint64_t seed = 900;
    std::vector<Ring> rings = scalar_rings();
    rings.push_back(dual_numbers(rationals()));
    rings.push_back(dual_numbers(integers_mod(6)));
    rings.push_back(dual_numbers(dual_numbers(integers())));
    for (const Ring& ring : rings) {
        Rng rng(seed++);
        for (int t = 0; t < 300; ++t) {
            const Value v = random_element(ring, rng);
            const std::string text = render_element(v);
            CAPTURE(render_ring(ring, RingStyle::Compact), text);
            REQUIRE(parse_element(ring, text) == v);
            // Literals embed in whitespace-separated matrix rows.
            REQUIRE(text.find(' ') == std::string::npos);
        }
    }
}

TEST_CASE("specific literal renderings", "[text]") {
    const Ring z = integers();
    const Ring q = rationals();
    const Ring dz = dual_numbers(z);

    REQUIRE(render_element(from_int(z, -56)) == "-56");
    REQUIRE(render_element(Value(q, Rat(5, 1))) == "5");
    REQUIRE(render_element(Value(q, Rat(-5, 2))) == "-5/2");
    REQUIRE(render_element(Value(q, make_rational(2, -4))) == "-1/2");  // normalized on entry
    REQUIRE(parse_element(q, "2/-4") == Value(q, Rat(-1, 2)));
    REQUIRE(render_element(Value::make_dual(dz, from_int(z, 1), from_int(z, 2))) == "1+2*eps");
    REQUIRE(render_element(Value::make_dual(dz, from_int(z, 1), from_int(z, -2))) == "1-2*eps");

    REQUIRE(parse_element(dz, "1+2*eps") ==
            Value::make_dual(dz, from_int(z, 1), from_int(z, 2)));
    REQUIRE(parse_element(dz, "7") == Value::make_dual(dz, from_int(z, 7), from_int(z, 0)));

    const Ring ddz = dual_numbers(dz);
    const Value nested = Value::make_dual(
        ddz, Value::make_dual(dz, from_int(z, 0), from_int(z, 1)),
        Value::make_dual(dz, from_int(z, 2), from_int(z, 0)));
    REQUIRE(render_element(nested) == "(0+1*eps)+(2+0*eps)*eps");
    REQUIRE(parse_element(ddz, render_element(nested)) == nested);
}

TEST_CASE("element literal errors", "[text]") {
    REQUIRE_THROWS_AS(parse_element(integers(), "1.5"), ParseError);
    REQUIRE_THROWS_AS(parse_element(integers(), "abc"), ParseError);
    REQUIRE_THROWS_AS(parse_element(integers(), ""), ParseError);
    REQUIRE_THROWS_AS(parse_element(rationals(), "2/0"), ParseError);
    REQUIRE_THROWS_AS(parse_element(rationals(), "1/2/3"), ParseError);
    REQUIRE_THROWS_AS(parse_element(poly_ring(integers(), 1), "X"), ParseError);
}

TEST_CASE("univariate polynomial rendering", "[text]") {
    const Ring z = integers();
    REQUIRE(render_element(poly_of(z, {-2, -5, 1})) == "-2 - 5*X + X^2");
    REQUIRE(render_element(poly_of(z, {})) == "0");
    REQUIRE(render_element(poly_of(z, {0, 1})) == "X");
    REQUIRE(render_element(poly_of(z, {0, -1})) == "-X");
    REQUIRE(render_element(poly_of(z, {3, 0, 2})) == "3 + 2*X^2");

    const Ring z6 = integers_mod(6);
    REQUIRE(render_element(poly_of(z6, {3, 0, 5})) == "3 + 5*X^2");

    // Composite coefficients are parenthesized.
    const Ring dz = dual_numbers(z);
    const Ring dzx = poly_ring(dz, 1);
    const Value p = poly_from_coeffs(
        dzx, {zero(dz), Value::make_dual(dz, from_int(z, 1), from_int(z, 2))});
    REQUIRE(render_element(p) == "(1+2*eps)*X");
}

TEST_CASE("multivariate polynomial rendering uses graded-lex order", "[text]") {
    const Ring z = integers();
    const Ring rxy = poly_ring(z, 2);
    const Value p = Value::make_mpoly(rxy, {{{0, 2}, from_int(z, 2)},
                                            {{2, 0}, from_int(z, 12)},
                                            {{1, 1}, from_int(z, -10)}});
    REQUIRE(render_element(p) == "12*X1^2 - 10*X1*X2 + 2*X2^2");
    REQUIRE(render_element(one(rxy)) == "1");
    REQUIRE(render_element(zero(rxy)) == "0");
    const Value q = Value::make_mpoly(
        rxy, {{{0, 0}, from_int(z, 7)}, {{1, 2}, from_int(z, 1)}, {{1, 0}, from_int(z, -1)}});
    REQUIRE(render_element(q) == "X1*X2^2 - X1 + 7");
}
