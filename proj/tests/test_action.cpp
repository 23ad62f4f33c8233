#include "test_helpers.hpp"

using namespace ringalg;
using ringalg::testing::scalar_rings;

TEST_CASE("action on specific inputs", "[action]") {
    const Ring z = integers();
    Rng rng(5000);
    const Matrix a = random_matrix(z, 3, rng);
    const Matrix g = random_matrix(z, 3, rng);
    const Matrix f = random_matrix(z, 3, rng);
    const Matrix id = Matrix::identity(z, 3);

    // Constant f acts by left multiplication.
    REQUIRE(act(MatPoly::constant(f), g, a) == f * g);

    // (a - X) . id = a - a = 0.
    REQUIRE(act(char_matrix(a), id, a).is_zero());

    // X^2 (as I*X^2) sends g to g a^2.
    const MatPoly x_sq =
        MatPoly::from_coeffs(z, 3, {Matrix::zero(z, 3), Matrix::zero(z, 3), id});
    REQUIRE(act(x_sq, g, a) == g * a * a);
}

TEST_CASE("right substitution", "[action]") {
    const Ring z = integers();

    // t_a right-substituted at a vanishes for any a.
    Rng rng(5100);
    for (int t = 0; t < 20; ++t) {
        const Matrix a = random_matrix(z, 3, rng);
        REQUIRE(right_subst(char_matrix(a), a).is_zero());
    }

    // f0 + I X at diag(1, 2): f0 + a.
    const MatPoly p = MatPoly::from_coeffs(
        z, 2, {Matrix::from_ints(z, {{0, 1}, {0, 0}}), Matrix::identity(z, 2)});
    const Matrix a = Matrix::from_ints(z, {{1, 0}, {0, 2}});
    REQUIRE(right_subst(p, a) == Matrix::from_ints(z, {{1, 1}, {0, 2}}));
}

TEST_CASE("left and right substitution differ exactly on non-commuting data", "[action]") {
    const Ring z = integers();
    const Matrix f = Matrix::from_ints(z, {{0, 1}, {0, 0}});
    const Matrix a = Matrix::from_ints(z, {{0, 0}, {1, 0}});
    const MatPoly fx = MatPoly::from_coeffs(z, 2, {Matrix::zero(z, 2), f});  // F*X

    REQUIRE(right_subst(fx, a) == f * a);
    REQUIRE(left_subst(fx, a) == a * f);
    REQUIRE(f * a == Matrix::from_ints(z, {{1, 0}, {0, 0}}));
    REQUIRE(a * f == Matrix::from_ints(z, {{0, 0}, {0, 1}}));
    REQUIRE(right_subst(fx, a) != left_subst(fx, a));

    // Constant polynomial: both substitutions return the constant.
    REQUIRE(right_subst(MatPoly::constant(f), a) == f);
    REQUIRE(left_subst(MatPoly::constant(f), a) == f);

    // Scalar coefficients commute with everything: left = right.
    std::uint64_t seed = 5200;
    for (const Ring& ring : scalar_rings()) {
        const Ring rx = poly_ring(ring, 1);
        Rng rng(seed++);
        for (int t = 0; t < 30; ++t) {
            const int dim = static_cast<int>(rng.uniform(1, 4));
            const MatPoly p = lift_scalar_poly(random_poly(rx, 3, rng), dim);
            const Matrix m = random_matrix(ring, dim, rng);
            REQUIRE(right_subst(p, m) == left_subst(p, m));
        }
    }
}

TEST_CASE("characteristic matrix structure", "[action]") {
    const Ring z = integers();
    const MatPoly t0 = char_matrix(Matrix::zero(z, 2));
    REQUIRE(t0.degree() == std::optional<int>(1));
    REQUIRE(t0.coeff(0).is_zero());
    REQUIRE(t0.coeff(1) == -Matrix::identity(z, 2));

    Rng rng(5300);
    const Matrix a = random_matrix(z, 3, rng);
    REQUIRE(char_matrix(a).coeff(0) == a);
    REQUIRE(char_matrix(a).coeff(1) == -Matrix::identity(z, 3));
}

TEST_CASE("the action law and its companions hold on random triples", "[action]") {
    std::uint64_t seed = 5400;
    for (const Ring& ring : scalar_rings()) {
        Rng rng(seed++);
        for (int t = 0; t < 150; ++t) {
            const int dim = static_cast<int>(rng.uniform(1, 4));
            const MatPoly p = random_matpoly(ring, dim, 3, rng);
            const MatPoly q = random_matpoly(ring, dim, 3, rng);
            const Matrix g = random_matrix(ring, dim, rng);
            const Matrix h = random_matrix(ring, dim, rng);
            const Matrix a = random_matrix(ring, dim, rng);
            const Matrix id = Matrix::identity(ring, dim);
            CAPTURE(render_ring(ring, RingStyle::Compact), dim, render_matpoly(p),
                    render_matpoly(q), render_matrix_inline(g), render_matrix_inline(a));

            // (pq) . g = p . (q . g) -- the load-bearing step of the proof.
            REQUIRE(act(p * q, g, a) == act(p, act(q, g, a), a));
            REQUIRE(act(MatPoly::identity(ring, dim), g, a) == g);
            REQUIRE(act(p + q, g, a) == act(p, g, a) + act(q, g, a));
            REQUIRE(act(p, g + h, a) == act(p, g, a) + act(p, h, a));
            REQUIRE(act(p, id, a) == right_subst(p, a));
            REQUIRE(act(char_matrix(a), id, a).is_zero());

            // R-linearity in both slots under scalar rescaling.
            const Value c = random_element(ring, rng);
            const Matrix cg = scale(c, g);
            REQUIRE(act(p, cg, a) == scale(c, act(p, g, a)));
        }
    }
}

TEST_CASE("action operand validation", "[action]") {
    const Ring z = integers();
    const MatPoly p = MatPoly::identity(z, 2);
    REQUIRE_THROWS_AS(act(p, Matrix::identity(z, 3), Matrix::identity(z, 2)), MismatchError);
    REQUIRE_THROWS_AS(act(p, Matrix::identity(z, 2), Matrix::identity(integers_mod(6), 2)),
                      MismatchError);
    REQUIRE_THROWS_AS(right_subst(p, Matrix::identity(z, 3)), MismatchError);
    REQUIRE_THROWS_AS(left_subst(p, Matrix::identity(integers_mod(6), 2)), MismatchError);
}
