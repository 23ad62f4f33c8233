#include "test_helpers.hpp"

using namespace ringalg;
using ringalg::testing::poly_of;
using ringalg::testing::scalar_rings;

TEST_CASE("matrix algebra", "[matrix]") {
    const Ring z = integers();
    Rng rng(2000);
    const Matrix a = random_matrix(z, 3, rng);
    REQUIRE(Matrix::identity(z, 3) * a == a);
    REQUIRE(a * Matrix::identity(z, 3) == a);
    REQUIRE(a + (-a) == Matrix::zero(z, 3));

    // Column swap via permutation matrix.
    const Matrix m = Matrix::from_ints(z, {{1, 2}, {3, 4}});
    const Matrix swap = Matrix::from_ints(z, {{0, 1}, {1, 0}});
    REQUIRE(m * swap == Matrix::from_ints(z, {{2, 1}, {4, 3}}));

    // 2I over Z/4 squares to zero.
    const Ring z4 = integers_mod(4);
    const Matrix twice = scale(from_int(z4, 2), Matrix::identity(z4, 2));
    REQUIRE(twice == Matrix::from_ints(z4, {{2, 0}, {0, 2}}));
    REQUIRE((twice * twice).is_zero());

    REQUIRE_THROWS_AS(Matrix::identity(z, 2) + Matrix::identity(z, 3), MismatchError);
    REQUIRE_THROWS_AS(Matrix::identity(z, 2) * Matrix::identity(z4, 2), MismatchError);
    REQUIRE_THROWS_AS(Matrix::zero(z, 0), MismatchError);
}

TEST_CASE("determinant examples", "[matrix]") {
    const Ring z = integers();
    REQUIRE(det_cofactor(Matrix::identity(z, 3)) == one(z));

    // Leibniz oracle by hand for the 2x2: 1*4 - 2*3 = -2.
    const Matrix a = Matrix::from_ints(z, {{1, 2}, {3, 4}});
    REQUIRE(det_leibniz(a) == from_int(z, -2));
    REQUIRE(det_cofactor(a) == from_int(z, -2));

    REQUIRE(det_leibniz(Matrix::identity(z, 2)) == one(z));
    REQUIRE(det_leibniz(Matrix::from_ints(z, {{0, 1}, {1, 0}})) == from_int(z, -1));

    // diag(2, 3) over Z/6: 6 = 0.
    const Ring z6 = integers_mod(6);
    REQUIRE(det_cofactor(Matrix::from_ints(z6, {{2, 0}, {0, 3}})) == zero(z6));

    REQUIRE_THROWS_AS(det_leibniz(Matrix::identity(z, 7)), MismatchError);
}

TEST_CASE("determinant algorithms agree on random matrices", "[matrix]") {
    std::uint64_t seed = 2100;
    for (const Ring& ring : scalar_rings()) {
        Rng rng(seed++);
        for (int dim = 1; dim <= 5; ++dim) {
            for (int t = 0; t < 40; ++t) {
                const Matrix a = random_matrix(ring, dim, rng);
                CAPTURE(render_ring(ring, RingStyle::Compact), dim, render_matrix_inline(a));
                const Value d = det_cofactor(a);
                REQUIRE(d == det_leibniz(a));
            }
        }
    }
}

TEST_CASE("determinant is multiplicative", "[matrix]") {
    std::uint64_t seed = 2200;
    for (const Ring& ring : scalar_rings()) {
        Rng rng(seed++);
        for (int t = 0; t < 60; ++t) {
            const int dim = static_cast<int>(rng.uniform(1, 4));
            const Matrix a = random_matrix(ring, dim, rng);
            const Matrix b = random_matrix(ring, dim, rng);
            REQUIRE(det_cofactor(a * b) == mul(det_cofactor(a), det_cofactor(b)));
        }
    }
}

TEST_CASE("adjugate examples", "[matrix]") {
    const Ring z = integers();
    // 1x1: forced by adj(a) a = det(a) I with det([r]) = r.
    REQUIRE(adjugate_cofactor(Matrix::from_ints(z, {{5}})) == Matrix::identity(z, 1));
    const Ring z6 = integers_mod(6);
    REQUIRE(adjugate_cofactor(Matrix::from_ints(z6, {{4}})) == Matrix::identity(z6, 1));

    const Matrix a = Matrix::from_ints(z, {{1, 2}, {3, 4}});
    const Matrix adj = adjugate_cofactor(a);
    REQUIRE(adj == Matrix::from_ints(z, {{4, -2}, {-3, 1}}));
    REQUIRE(adj * a == Matrix::from_ints(z, {{-2, 0}, {0, -2}}));
    REQUIRE(adj * a == scale(det_cofactor(a), Matrix::identity(z, 2)));
}

TEST_CASE("adjugate identity holds on both sides", "[matrix]") {
    std::uint64_t seed = 2300;
    for (const Ring& ring : scalar_rings()) {
        Rng rng(seed++);
        for (int dim = 1; dim <= 4; ++dim) {
            for (int t = 0; t < 25; ++t) {
                const Matrix a = random_matrix(ring, dim, rng);
                const Matrix adj = adjugate_cofactor(a);
                const Matrix expected = scale(det_cofactor(a), Matrix::identity(ring, dim));
                CAPTURE(render_ring(ring, RingStyle::Compact), render_matrix_inline(a));
                REQUIRE(adj * a == expected);
                REQUIRE(a * adj == expected);
            }
        }
    }
}

TEST_CASE("characteristic polynomial", "[matrix]") {
    const Ring z = integers();
    // Zero 2x2: det(-X I) = X^2.
    REQUIRE(charpoly(Matrix::zero(z, 2)) == poly_of(z, {0, 0, 1}));

    // (1 - X)(4 - X) - 6 = X^2 - 5X - 2.
    const Matrix a = Matrix::from_ints(z, {{1, 2}, {3, 4}});
    REQUIRE(charpoly(a) == poly_of(z, {-2, -5, 1}));
    REQUIRE(monic_charpoly(a) == poly_of(z, {-2, -5, 1}));  // n even: unchanged

    // n = 1: chi = r - X, monic flips to X - r.
    REQUIRE(charpoly(Matrix::from_ints(z, {{5}})) == poly_of(z, {5, -1}));
    REQUIRE(monic_charpoly(Matrix::from_ints(z, {{5}})) == poly_of(z, {-5, 1}));

    // Identity: chi = (1 - X)^n, adjugate is the identity.
    REQUIRE(charpoly(Matrix::identity(z, 2)) == poly_of(z, {1, -2, 1}));
    REQUIRE(charpoly(Matrix::identity(z, 3)) == poly_of(z, {1, -3, 3, -1}));
    REQUIRE(adjugate_cofactor(Matrix::identity(z, 2)) == Matrix::identity(z, 2));
}

TEST_CASE("charpoly shape on random matrices", "[matrix]") {
    std::uint64_t seed = 2400;
    for (const Ring& ring : scalar_rings()) {
        Rng rng(seed++);
        for (int dim = 1; dim <= 5; ++dim) {
            for (int t = 0; t < 15; ++t) {
                const Matrix a = random_matrix(ring, dim, rng);
                const Value chi = charpoly(a);
                CAPTURE(render_ring(ring, RingStyle::Compact), dim, render_matrix_inline(a));
                REQUIRE(poly_degree(chi) == std::optional<int>(dim));
                REQUIRE(poly_leading_coeff(chi) == from_int(ring, (dim % 2 == 0) ? 1 : -1));
                const Value monic = monic_charpoly(a);
                REQUIRE(monic == ((dim % 2 == 0) ? chi : neg(chi)));
                REQUIRE(poly_leading_coeff(monic) == one(ring));
            }
        }
    }
}

TEST_CASE("exactness beyond machine words", "[matrix]") {
    // Expected values computed with an independent big-integer oracle and
    // frozen; they do not fit in 64 bits.
    const Ring z = integers();

    const Matrix a2 = Matrix::from_ints(
        z, {{1000000000039, 2000000000057}, {3000000000013, 4000000000021}});
    const Value det2 = from_int(z, Int("-2000000000019999999999922"));
    REQUIRE(det_cofactor(a2) == det2);
    REQUIRE(det_leibniz(a2) == det2);
    REQUIRE(det_exterior(a2) == det2);
    REQUIRE(charpoly(a2) ==
            poly_from_coeffs(poly_ring(z, 1), {det2, from_int(z, Int("-5000000000060")),
                                               from_int(z, 1)}));
    REQUIRE(check_cayley_hamilton(a2).verdict);

    const Matrix a3 = Matrix::from_ints(z, {{1000000007, -999999937, 314159265},
                                            {-271828182, 1414213562, -161803398},
                                            {999999733, 123456789, -987654321}});
    const Value det3 = from_int(z, Int("-1401333866965748032475487648"));
    REQUIRE(det_cofactor(a3) == det3);
    REQUIRE(det_leibniz(a3) == det3);
    REQUIRE(det_exterior(a3) == det3);
    REQUIRE(charpoly(a3) ==
            poly_from_coeffs(poly_ring(z, 1),
                             {det3, from_int(z, Int("1536206509368118472")),
                              from_int(z, Int("1426559248")), from_int(z, -1)}));
    const Matrix adj = adjugate_cofactor(a3);
    REQUIRE(adj == adjugate_exterior(a3));
    REQUIRE(adj * a3 == scale(det3, Matrix::identity(z, 3)));
    REQUIRE(check_cayley_hamilton(a3).verdict);
}

TEST_CASE("commutation check", "[matrix]") {
    const Ring z = integers();
    Rng rng(2500);
    const Matrix a = random_matrix(z, 3, rng);
    REQUIRE(commute_check(a, a * a));
    REQUIRE(commute_check(a, Matrix::identity(z, 3)));
    REQUIRE_FALSE(commute_check(Matrix::from_ints(z, {{0, 1}, {0, 0}}),
                                Matrix::from_ints(z, {{0, 0}, {1, 0}})));
}

TEST_CASE("random matrices are deterministic and in range", "[matrix]") {
    const Ring z6 = integers_mod(6);
    Rng r1(99), r2(99);
    REQUIRE(random_matrix(z6, 3, r1) == random_matrix(z6, 3, r2));

    const Ring z = integers();
    Rng rng(100);
    const Matrix one_by_one = random_matrix(z, 1, rng);
    REQUIRE(one_by_one.dim() == 1);
    REQUIRE(one_by_one.at(0, 0).as_int() >= -3);
    REQUIRE(one_by_one.at(0, 0).as_int() <= 3);
}

TEST_CASE("matrix file format round-trips", "[matrix][io]") {
    std::uint64_t seed = 2600;
    std::vector<Ring> rings = scalar_rings();
    rings.push_back(dual_numbers(dual_numbers(integers())));
    for (const Ring& ring : rings) {
        Rng rng(seed++);
        for (int t = 0; t < 40; ++t) {
            const int dim = static_cast<int>(rng.uniform(1, 4));
            const Matrix m = random_matrix(ring, dim, rng);
            CAPTURE(render_matrix_file(m));
            REQUIRE(parse_matrix_file(render_matrix_file(m)) == m);
        }
    }

    const Matrix a = Matrix::from_ints(integers(), {{1, 2}, {3, 4}});
    REQUIRE(render_matrix_file(a) == "Z\n2\n1 2\n3 4\n");
    REQUIRE(parse_matrix_file("Z\n2\n1 2\n3 4\n") == a);
    REQUIRE(parse_matrix_file("Zmod 6\n1\n5\n") ==
            Matrix::from_ints(integers_mod(6), {{5}}));
}

TEST_CASE("matrix file errors carry line numbers", "[matrix][io]") {
    const auto line_of = [](const std::string& text) {
        try {
            parse_matrix_file(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    REQUIRE(line_of("") == 1);
    REQUIRE(line_of("Gaussian\n2\n1 2\n3 4\n") == 1);
    REQUIRE(line_of("Z\nx\n1 2\n3 4\n") == 2);
    REQUIRE(line_of("Z\n-1\n") == 2);
    REQUIRE(line_of("Z\n2 2\n1 2\n3 4\n") == 2);
    REQUIRE(line_of("Z\n2\n1 2\n") == 4);           // missing row
    REQUIRE(line_of("Z\n2\n1 2\n3\n") == 4);        // short row
    REQUIRE(line_of("Z\n2\n1 2\n3 4 5\n") == 4);    // long row
    REQUIRE(line_of("Z\n2\n1 2\n3 four\n") == 4);   // bad literal
    REQUIRE(line_of("Z\n2\n1 2\n3 4\ntrailing\n") == 5);
    REQUIRE_THROWS_AS(parse_matrix_file("Zmod 1\n1\n0\n"), InvalidRingError);
}
