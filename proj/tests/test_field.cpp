#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sdsolid/field.hpp"

using namespace sds;

TEST_CASE("rational arithmetic is exact") {
    rat a("1/3"), b("1/6");
    CHECK(a + b == rat("1/2"));
    CHECK(rat("22/7") * rat("7/22") == rat(1));
    CHECK(rat("-7/3").str() == "-7/3");
    CHECK(rat("4/6").str() == "2/3");  // canonicalized
    CHECK(rat("3/4").inv() == rat("4/3"));
    CHECK((rat(2) - rat("5/2")).sgn() == -1);
}

TEST_CASE("canonical square roots in small prime fields") {
    // 4^2 = 16 = 5 (mod 11); the other root is 7, and 4 < 7 digit-lex.
    field f11 = field::finite(11);
    auto r5 = f11.from_int(5).sqrt();
    REQUIRE(r5.has_value());
    CHECK(r5->code() == 4);

    // 3^2 = 9 = 2 (mod 7): the canonical square root of 2 in F_7 is 3.
    field f7 = field::finite(7);
    auto r2 = f7.from_int(2).sqrt();
    REQUIRE(r2.has_value());
    CHECK(r2->code() == 3);

    // 3 is not a square mod 7 (squares: 0, 1, 2, 4).
    CHECK(!f7.from_int(3).sqrt().has_value());
}

TEST_CASE("square count is (q+1)/2") {
    for (auto fld : {field::finite(7), field::finite(11), field::finite(13),
                     field::finite(11, 2)}) {
        std::uint64_t squares = 0;
        for (std::uint64_t c = 0; c < fld.q(); ++c) {
            scalar s = fld.from_code(c);
            if (auto r = s.sqrt()) {
                squares++;
                CHECK(*r * *r == s);
            }
        }
        CHECK(squares == (fld.q() + 1) / 2);
    }
}

TEST_CASE("F_121 context: modulus, codes, digits") {
    field f = field::finite(11, 2);
    CHECK(f.q() == 121);
    // -1 is a non-square mod 11, so t^2 + 1 is the first irreducible choice.
    CHECK(f.ctx().modulus() == std::vector<std::uint32_t>{1, 0, 1});
    scalar s = f.from_code(37);  // 37 = 4 + 3*11 -> digits (4, 3)
    CHECK(s.digits() == std::vector<std::uint32_t>{4, 3});
    CHECK(f.from_digits({4, 3}).code() == 37);
    CHECK(f.from_digits({4, 3}) == s);
}

TEST_CASE("field axioms hold on sampled elements") {
    rng gen(42);
    for (auto fld : {field::finite(101), field::finite(11, 2), field::finite(7, 3)}) {
        for (int trial = 0; trial < 50; ++trial) {
            scalar a = fld.sample(gen), b = fld.sample(gen), c = fld.sample(gen);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == fld.zero());
            CHECK(a * fld.one() == a);
            if (!a.is_zero()) CHECK(a * a.inv() == fld.one());
            // Frobenius is additive in characteristic p.
            const fq_ctx& cx = fld.ctx();
            CHECK(cx.frobenius(cx.add(a.code(), b.code())) ==
                  cx.add(cx.frobenius(a.code()), cx.frobenius(b.code())));
        }
    }
}

TEST_CASE("canonical embedding respects arithmetic") {
    field base = field::finite(11), top = field::finite(11, 2);
    auto powers = embedding_powers(base.ctx(), top.ctx());
    REQUIRE(powers.size() == 1);
    CHECK(powers[0] == top.from_int(1).code());
    for (std::uint64_t a = 0; a < 11; ++a) {
        for (std::uint64_t b = 0; b < 11; ++b) {
            std::uint64_t ea = embed(a, base.ctx(), top.ctx(), powers);
            std::uint64_t eb = embed(b, base.ctx(), top.ctx(), powers);
            CHECK(embed(base.ctx().mul(a, b), base.ctx(), top.ctx(), powers) ==
                  top.ctx().mul(ea, eb));
            CHECK(embed(base.ctx().add(a, b), base.ctx(), top.ctx(), powers) ==
                  top.ctx().add(ea, eb));
        }
    }
}

TEST_CASE("field parsing and construction guards") {
    CHECK(field::parse("rational") == field::rationals());
    CHECK(field::parse("p=101") == field::finite(101));
    CHECK(field::parse("p=11,k=2") == field::finite(11, 2));
    CHECK(field::parse("p=11,k=2").str() == "p=11,k=2");
    CHECK_THROWS_AS(field::parse("p=6"), error);

    CHECK_THROWS_AS(field::finite(91), error);  // 91 = 7*13
    CHECK_THROWS_AS(field::finite(5), error);   // characteristic too small
    CHECK(field::finite_unchecked(5).q() == 5);
    // q^3 = 5329^3 > 2^31 exceeds the default enumeration guard.
    CHECK_THROWS_AS(field::finite(73, 2), error);
    CHECK(field::finite(73, 2, ~std::uint64_t(0)).q() == 5329);

    try {
        field::finite(5);
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::char_too_small);
    }
}

TEST_CASE("from_rat reduces fractions modulo p") {
    field f13 = field::finite(13);
    // 3/4 = 3 * 4^{-1} = 3 * 10 = 30 = 4 (mod 13)
    CHECK(f13.from_rat(rat("3/4")).code() == 4);
    CHECK(f13.from_rat(rat(-1)).code() == 12);
}

TEST_CASE("extension tower and primality") {
    field f = field::finite(11);
    CHECK(f.extension(2) == field::finite(11, 2));
    CHECK(f.extension(1) == f);
    CHECK(is_prime_u64(101));
    CHECK(is_prime_u64(2147483647ULL));
    CHECK(!is_prime_u64(1));
    CHECK(!is_prime_u64(5329));  // 73^2
}

TEST_CASE("scalar order is digit-lex and total") {
    field f = field::finite(11, 2);
    std::set<std::uint64_t> seen;
    scalar prev = f.from_code(0);
    for (std::uint64_t c = 1; c < f.q(); ++c) {
        scalar cur = f.from_code(c);
        CHECK(cur != prev);
        seen.insert(cur.code());
        prev = cur;
    }
    CHECK(seen.size() == f.q() - 1);
    // digit-lex: 11 has digits (0,1), 2 has digits (2,0) -> 11 < 2
    CHECK(f.ctx().less(f.from_code(11).code(), f.from_code(2).code()));
}
