#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "sdsolid/geometry.hpp"
#include "sdsolid/poly.hpp"

using namespace sds;

namespace {

hpoly random_sextic(const field& fld, rng& gen) {
    std::vector<std::pair<exp4, scalar>> terms;
    for (const auto& e : monomials_of_degree(6)) terms.emplace_back(e, fld.sample(gen));
    return hpoly::from_terms(fld, 6, std::move(terms));
}

std::array<scalar, 4> random_pt(const field& fld, rng& gen) {
    return {fld.sample(gen), fld.sample(gen), fld.sample(gen), fld.sample(gen)};
}

}  // namespace

TEST_CASE("monomial bases have the textbook sizes and order") {
    CHECK(monomials_of_degree(5).size() == 56);
    CHECK(monomials_of_degree(6).size() == 84);
    auto m6 = monomials_of_degree(6);
    CHECK(m6.front().e == std::array<std::uint8_t, 4>{6, 0, 0, 0});  // x^6 first
    CHECK(m6.back().e == std::array<std::uint8_t, 4>{0, 0, 0, 6});   // w^6 last
    for (std::size_t i = 0; i + 1 < m6.size(); ++i) CHECK(mono_before(m6[i], m6[i + 1]));
    CHECK(monomials3_of_degree(5).size() == 21);
}

TEST_CASE("parse round trip with frozen evaluation") {
    field f13 = field::finite(13);
    hpoly F = hpoly::parse(f13, "x^6 - 2 x y^5 + 3 w^6", 6);
    CHECK(F.degree() == 6);
    CHECK(F.terms().size() == 3);
    std::array<scalar, 4> one{f13.one(), f13.one(), f13.one(), f13.one()};
    CHECK(F.evaluate(one) == f13.from_int(2));  // 1 - 2 + 3
    CHECK(hpoly::parse(f13, F.str(), 6).terms() == F.terms());

    CHECK_THROWS_AS(hpoly::parse(f13, "x^5", 6), error);        // degree enforced
    CHECK_THROWS_AS(hpoly::parse(f13, "x^6 + $", 6), error);    // junk token
    CHECK(hpoly::parse(f13, "x^6 - x^6", 6).is_zero());
}

TEST_CASE("Euler identity: sum x_i dF/dx_i = 6F") {
    rng gen(5);
    for (auto fld : {field::finite(101), field::finite(11, 2)}) {
        for (int trial = 0; trial < 5; ++trial) {
            hpoly F = random_sextic(fld, gen);
            hpoly acc(fld, 6);
            for (int v = 0; v < 4; ++v) {
                exp4 xv;
                xv.e[v] = 1;
                hpoly coord = hpoly::from_terms(fld, 1, {{xv, fld.one()}});
                acc = acc + coord * F.partial(v);
            }
            CHECK((acc - F.scaled(fld.from_int(6))).is_zero());
            auto pt = random_pt(fld, gen);
            CHECK(acc.evaluate(pt) == fld.from_int(6) * F.evaluate(pt));
        }
    }
}

TEST_CASE("Hessian matches iterated partials and is symmetric") {
    field f = field::finite(101);
    rng gen(17);
    hpoly F = random_sextic(f, gen);
    auto pt = random_pt(f, gen);
    auto H = F.hessian_at(pt);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            CHECK(H[i][j] == H[j][i]);
            CHECK(H[i][j] == F.partial(i).partial(j).evaluate(pt));
        }
    }
}

TEST_CASE("linear substitution composes with evaluation") {
    field f = field::finite(13);
    rng gen(23);
    hpoly F = random_sextic(f, gen);
    std::array<std::array<scalar, 4>, 4> m;
    for (auto& row : m) row = random_pt(f, gen);
    hpoly G = F.substituted(m);
    for (int trial = 0; trial < 10; ++trial) {
        auto v = random_pt(f, gen);
        std::array<scalar, 4> mv{f.zero(), f.zero(), f.zero(), f.zero()};
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) mv[i] = mv[i] + m[i][j] * v[j];
        }
        CHECK(G.evaluate(v) == F.evaluate(mv));
    }
}

TEST_CASE("restriction to lines and planes is substitution") {
    field f = field::finite(101);
    rng gen(31);
    hpoly F = random_sextic(f, gen);
    auto p0 = random_pt(f, gen), p1 = random_pt(f, gen), p2 = random_pt(f, gen);
    bform B = F.restrict_to_line(p0, p1);
    CHECK(B.degree() == 6);
    tpoly T = F.restrict_to_plane(p0, p1, p2);
    CHECK(T.degree() == 6);
    for (int trial = 0; trial < 10; ++trial) {
        scalar s = f.sample(gen), t = f.sample(gen), u = f.sample(gen);
        std::array<scalar, 4> pt{f.zero(), f.zero(), f.zero(), f.zero()};
        for (int i = 0; i < 4; ++i) pt[i] = s * p0[i] + t * p1[i];
        CHECK(B.eval(s, t) == F.evaluate(pt));
        for (int i = 0; i < 4; ++i) pt[i] = pt[i] + u * p2[i];
        CHECK(T.evaluate({s, t, u}) == F.evaluate(pt));
    }
    CHECK_THROWS_AS(F.restrict_to_line(p0, p0), error);  // proportional endpoints
}

TEST_CASE("binary form root machinery on a frozen factorization") {
    // B = (s - t)^3 (s^2 + t^2) over F_7; s^2 + t^2 is irreducible (7 = 3 mod 4).
    field f = field::finite(7);
    bform lin(f, 1);
    lin.set_coeff(0, f.one());
    lin.set_coeff(1, f.from_int(-1));
    bform quad(f, 2);
    quad.set_coeff(0, f.one());
    quad.set_coeff(2, f.one());
    bform B = quad;
    for (int i = 0; i < 3; ++i) {
        bform next(f, B.degree() + 1);
        for (int j = 0; j <= B.degree(); ++j) {
            next.set_coeff(j, next.coeff(j) + B.coeff(j) * lin.coeff(0));
            next.set_coeff(j + 1, next.coeff(j + 1) + B.coeff(j) * lin.coeff(1));
        }
        B = next;
    }
    CHECK(B.degree() == 5);
    CHECK(B.root_multiplicity(f.one(), f.one()) == 3);
    CHECK(B.root_multiplicity(f.one(), f.zero()) == 0);
    auto roots = B.roots();
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].second == 3);
    CHECK(roots[0].first[0] == f.one());
    CHECK(roots[0].first[1] == f.one());
    CHECK(!B.squarefree());
    CHECK(B.factor_degrees() == std::vector<int>{1, 1, 1, 2});

    bform Q = B.divide_root(f.one(), f.one())
                  .divide_root(f.one(), f.one())
                  .divide_root(f.one(), f.one());
    CHECK(Q.degree() == 2);
    CHECK(Q.squarefree());
    CHECK(Q.roots().empty());

    bform g = bform::gcd(B, B.derivative_s());
    CHECK(g.degree() == 2);  // (s - t)^2 survives in the derivative gcd
    CHECK(g.root_multiplicity(f.one(), f.one()) == 2);
}

TEST_CASE("ternary division and coordinate-line restriction") {
    field f = field::finite(13);
    tpoly lin = tpoly::from_terms(
        f, 1, {{exp3{{1, 0, 0}}, f.one()}, {exp3{{0, 1, 0}}, f.one()}, {exp3{{0, 0, 1}}, f.one()}});
    tpoly conic = tpoly::from_terms(
        f, 2, {{exp3{{2, 0, 0}}, f.one()}, {exp3{{0, 1, 1}}, f.from_int(-3)}});
    tpoly prod = lin * conic;
    CHECK(prod.degree() == 3);
    CHECK(prod.divide_by_linear(lin).terms() == conic.terms());
    tpoly off = prod + tpoly::from_terms(f, 3, {{exp3{{0, 0, 3}}, f.one()}});
    CHECK_THROWS_AS(off.divide_by_linear(lin), error);

    bform edge = conic.drop_third();  // a^2 on {c = 0}
    CHECK(edge.degree() == 2);
    CHECK(edge.coeff(0) == f.one());
    CHECK(edge.coeff(1).is_zero());
    CHECK(edge.coeff(2).is_zero());
}

TEST_CASE("lifting to an extension commutes with evaluation") {
    field base = field::finite(11), top = field::finite(11, 2);
    auto powers = embedding_powers(base.ctx(), top.ctx());
    rng gen(47);
    hpoly F = random_sextic(base, gen);
    hpoly G = lift(F, top);
    CHECK(G.fld() == top);
    CHECK(G.terms().size() == F.terms().size());
    for (int trial = 0; trial < 10; ++trial) {
        auto pt = random_pt(base, gen);
        std::array<scalar, 4> lifted;
        for (int i = 0; i < 4; ++i) {
            lifted[i] = top.from_code(embed(pt[i].code(), base.ctx(), top.ctx(), powers));
        }
        CHECK(G.evaluate(lifted).code() ==
              embed(F.evaluate(pt).code(), base.ctx(), top.ctx(), powers));
    }
}
