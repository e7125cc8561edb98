#include <doctest.h>

#include <random>

#include "reldom/matrix.hpp"
#include "reldom/poly.hpp"

using namespace reldom;

namespace {

// Independent oracle: cofactor-expansion determinant.
template <class F>
typename F::Elt det_cofactor(const Matrix<F>& m) {
    const F& f = m.field();
    int n = m.rows();
    if (n == 0) return f.one();
    if (n == 1) return m.at(0, 0);
    auto total = f.zero();
    for (int j = 0; j < n; ++j) {
        Matrix<F> minor(f, n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = m.at(i, c);
            }
        }
        auto term = f.mul(m.at(0, j), det_cofactor(minor));
        total = (j % 2 == 0) ? f.add(total, term) : f.sub(total, term);
    }
    return total;
}

template <class F>
Matrix<F> random_matrix(const F& f, int r, int c, std::mt19937_64& rng, long spread = 5) {
    Matrix<F> m(f, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m.at(i, j) = f.from_long(static_cast<long>(rng() % (2 * spread + 1)) - spread);
    return m;
}

}  // namespace

TEST_SUITE_BEGIN("linalg");

TEST_CASE("rref of the identity is the identity") {
    FieldQQ f;
    auto id = Matrix<FieldQQ>::identity(f, 3);
    auto r = rref(id);
    CHECK(r.mat.equals(id));
    CHECK(r.rank == 3);
    CHECK(r.pivots == std::vector<int>{0, 1, 2});
}

TEST_CASE("proportional rows collapse to rank 1 over the rationals") {
    FieldQQ f;
    auto m = Matrix<FieldQQ>::from_longs(f, {{1, 2}, {2, 4}});
    CHECK(rank(m) == 1);
}

TEST_CASE("full-rank 3x3 over GF(7), determinant cross-checked by cofactors") {
    FieldGF f(7);
    auto m = Matrix<FieldGF>::from_longs(f, {{1, 2, 3}, {4, 5, 6}, {1, 1, 2}});
    auto d = det_cofactor(m);
    REQUIRE(!f.is_zero(d));  // oracle says invertible
    CHECK(rank(m) == 3);
}

TEST_CASE("kernel and image of the zero and identity matrices") {
    FieldQQ f;
    Matrix<FieldQQ> z(f, 2, 2);
    auto ki = kernel_image(z);
    CHECK(ki.kernel.cols() == 2);
    CHECK(ki.image.cols() == 0);
    auto id = Matrix<FieldQQ>::identity(f, 2);
    CHECK(kernel_basis(id).cols() == 0);
}

TEST_CASE("kernel of [[1,1],[1,1]] over GF(2), brute-forced") {
    FieldGF f(2);
    auto m = Matrix<FieldGF>::from_longs(f, {{1, 1}, {1, 1}});
    // oracle: enumerate all 4 vectors of GF(2)^2
    std::vector<std::pair<int, int>> null;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            auto v = Matrix<FieldGF>::from_longs(f, {{a}, {b}});
            if (m.mul(v).is_zero()) null.push_back({a, b});
        }
    CHECK(null == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
    auto k = kernel_basis(m);
    REQUIRE(k.cols() == 1);
    CHECK(f.eq(k.at(0, 0), f.one()));
    CHECK(f.eq(k.at(1, 0), f.one()));
}

TEST_CASE("membership solve examples") {
    FieldQQ f;
    auto id = Matrix<FieldQQ>::identity(f, 2);
    auto t = Matrix<FieldQQ>::from_longs(f, {{3}, {7}});
    auto x = solve_membership(id, t);
    REQUIRE(x);
    CHECK(x->equals(t));

    // basis spanning the x-axis cannot reach the y-axis
    auto xaxis = Matrix<FieldQQ>::from_longs(f, {{1}, {0}});
    auto y = Matrix<FieldQQ>::from_longs(f, {{0}, {1}});
    CHECK(!solve_membership(xaxis, y));

    // hand back-substitution: {(1,2),(0,1)} reaches (3,7) as 3*(1,2)+1*(0,1)
    auto basis = Matrix<FieldQQ>::from_longs(f, {{1, 0}, {2, 1}});
    auto sol = solve_membership(basis, t);
    REQUIRE(sol);
    CHECK(f.eq(sol->at(0, 0), f.from_long(3)));
    CHECK(f.eq(sol->at(1, 0), f.from_long(1)));

    CHECK_THROWS_AS((void)solve_membership(basis, Matrix<FieldQQ>::from_longs(f, {{1}})),
                    input_error);
}

TEST_CASE("rref is idempotent and rank-nullity holds on random matrices") {
    std::mt19937_64 rng(12345);
    FieldGF g7(7);
    FieldQQ qq;
    for (int trial = 0; trial < 30; ++trial) {
        int r = 1 + static_cast<int>(rng() % 6);
        int c = 1 + static_cast<int>(rng() % 6);
        auto m = random_matrix(g7, r, c, rng);
        auto rr = rref(m);
        CHECK(rref(rr.mat).mat.equals(rr.mat));
        auto ki = kernel_image(m);
        CHECK(ki.kernel.cols() + ki.image.cols() == c);

        auto q = random_matrix(qq, r, c, rng);
        auto rq = rref(q);
        CHECK(rref(rq.mat).mat.equals(rq.mat));
        CHECK(kernel_basis(q).cols() + rank(q) == c);
    }
}

TEST_CASE("every successful solve reproduces the target exactly") {
    std::mt19937_64 rng(99);
    FieldQQ f;
    for (int trial = 0; trial < 20; ++trial) {
        auto basis = random_matrix(f, 4, 3, rng);
        auto coeff = random_matrix(f, 3, 1, rng);
        auto target = basis.mul(coeff);
        auto sol = solve_membership(basis, target);
        REQUIRE(sol);
        CHECK(basis.mul(*sol).equals(target));
    }
}

TEST_CASE("rational pipelines preserve values bit-exactly") {
    FieldQQ f;
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 10; ++trial) {
        auto m = random_matrix(f, 4, 4, rng, 9);
        // scale by 1/3, undo, compare string forms entrywise
        auto third = f.inv(f.from_long(3));
        auto back = m.scale(third).scale(f.from_long(3));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(f.to_string(back.at(i, j)) == f.to_string(m.at(i, j)));
    }
    CHECK(f.to_string(f.from_string("4/6")) == "2/3");
    CHECK(f.to_string(f.from_string("-8/2")) == "-4");
}

TEST_CASE("minimal polynomials and coprime splits") {
    FieldQQ f;
    // nilpotent Jordan block: min poly x^2
    auto n = Matrix<FieldQQ>::from_longs(f, {{0, 1}, {0, 0}});
    auto mp = minimal_polynomial(n);
    CHECK(mp.deg() == 2);
    CHECK(f.is_zero(mp.c[0]));
    CHECK(f.is_zero(mp.c[1]));

    // diag(1,-1): min poly (x-1)(x+1), must split coprimely
    auto d = Matrix<FieldQQ>::from_longs(f, {{1, 0}, {0, -1}});
    auto mpd = minimal_polynomial(d);
    CHECK(mpd.deg() == 2);
    auto split = coprime_split(f, mpd);
    REQUIRE(split);
    CHECK(split->first.deg() == 1);
    CHECK(split->second.deg() == 1);

    FieldGF g7(7);
    auto dg = Matrix<FieldGF>::from_longs(g7, {{2, 0, 0}, {0, 2, 1}, {0, 0, 3}});
    auto mg = minimal_polynomial(dg);
    auto sg = coprime_split(g7, mg);
    REQUIRE(sg);
    CHECK(sg->first.deg() + sg->second.deg() == mg.deg());
    CHECK(poly_gcd(g7, sg->first, sg->second).is_one(g7));
}

TEST_SUITE_END();
