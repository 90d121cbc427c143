#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>

#include "sdsolid/defect.hpp"
#include "sdsolid/gallery.hpp"
#include "sdsolid/singular.hpp"

using namespace sds;

namespace {

ppoint pt(const field& f, long long a, long long b, long long c, long long d) {
    return ppoint(f, {f.from_int(a), f.from_int(b), f.from_int(c), f.from_int(d)});
}

gallery_build family(const field& f, int r, std::uint64_t seed) {
    gallery_spec gs;
    gs.name = gallery_name::family_r;
    gs.fld = f;
    gs.r = r;
    gs.seed = seed;
    return build(gs);
}

}  // namespace

TEST_CASE("name parsing and default fields") {
    CHECK(parse_gallery_name("barth") == gallery_name::barth);
    CHECK(parse_gallery_name("family") == gallery_name::family_r);
    CHECK(parse_gallery_name("family_r") == gallery_name::family_r);
    CHECK(std::string(gallery_name_str(gallery_name::bidegree23)) == "bidegree23");
    CHECK_THROWS_AS(parse_gallery_name("nosuch"), error);

    CHECK(suitable_field(gallery_name::barth).p() == 11);     // first prime with sqrt(5)
    CHECK(suitable_field(gallery_name::jihun1).p() == 73);    // z^4 = 2 splits
    CHECK(suitable_field(gallery_name::jihun2).p() == 13);    // z^4 = w^4 splits
    CHECK(suitable_field(gallery_name::char5_demo).p() == 5);
    CHECK(suitable_field(gallery_name::family_r).p() == 101);
}

TEST_CASE("identical specs build identical polynomials") {
    field f = field::finite(101);
    auto a = family(f, 2, 9);
    auto b = family(f, 2, 9);
    CHECK(a.F.terms() == b.F.terms());
    CHECK(a.provenance == b.provenance);
    auto c = family(f, 2, 10);
    CHECK(a.F.terms() != c.F.terms());
}

TEST_CASE("icosahedral surface needs sqrt(5)") {
    gallery_spec gs;
    gs.name = gallery_name::barth;
    gs.fld = field::finite(11);
    auto b = build(gs);
    CHECK(b.provenance.find("sqrt(5) = 4") != std::string::npos);
    CHECK(!b.F.is_zero());

    gs.fld = field::finite(7);  // 5 is a non-square mod 7
    try {
        build(gs);
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::sqrt_unavailable);
    }
}

TEST_CASE("characteristic-5 demo pins its field") {
    gallery_spec gs;
    gs.name = gallery_name::char5_demo;
    auto b = build(gs);  // default rational spec field becomes F_5
    CHECK(b.fld.p() == 5);
    CHECK(b.F.degree() == 6);

    gs.fld = field::finite(7);
    try {
        build(gs);
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::wrong_characteristic);
    }
}

TEST_CASE("nodal family: 18r - 3r^2 nodes and defect exactly 1") {
    field f = field::finite(101);
    const int expected_nodes[4] = {0, 15, 24, 27};
    for (int r = 1; r <= 3; ++r) {
        auto b = family(f, r, 1);
        CHECK(b.intended_nodes.size() == static_cast<std::size_t>(expected_nodes[r]));
        auto rec = verify_nodal(b.F, f, 1);
        CHECK(rec.non_nodal.empty());
        REQUIRE(rec.nodes.size() == b.intended_nodes.size());
        CHECK(std::equal(rec.nodes.begin(), rec.nodes.end(), b.intended_nodes.begin()));
        auto d = defect_of(f, rec.nodes);
        CHECK(d.defect == 1);
        CHECK(!d.q_factorial);
    }
    CHECK_THROWS_AS(family(f, 4, 1), error);
    CHECK_THROWS_AS(family(f, 0, 1), error);
}

TEST_CASE("family construction succeeds across seeds") {
    field f = field::finite(101);
    for (std::uint64_t seed = 2; seed <= 5; ++seed) {
        CHECK(family(f, 1, seed).intended_nodes.size() == 15);
        CHECK(family(f, 2, seed).intended_nodes.size() == 24);
    }
    CHECK(family(f, 3, 2).intended_nodes.size() == 27);
}

TEST_CASE("determinantal shapes: 24 and 27 nodes, defect 1") {
    field f = field::finite(101);
    for (auto [name, count] : {std::pair{gallery_name::quartic_node, 24},
                               std::pair{gallery_name::bidegree23, 27}}) {
        gallery_spec gs;
        gs.name = name;
        gs.fld = f;
        auto b = build(gs);
        CHECK(b.intended_nodes.size() == static_cast<std::size_t>(count));
        auto rec = verify_nodal(b.F, f, 1);
        CHECK(rec.non_nodal.empty());
        CHECK(rec.nodes.size() == static_cast<std::size_t>(count));
        auto d = defect_of(f, rec.nodes);
        CHECK(d.defect == 1);
    }
}

TEST_CASE("prescribed nodes: fitted surface is singular exactly there") {
    field f = field::finite(101);
    rng gen(12);
    std::vector<ppoint> pts;
    while (pts.size() < 5) {
        std::array<scalar, 4> c{f.sample(gen), f.sample(gen), f.sample(gen), f.sample(gen)};
        if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero()) continue;
        ppoint p(f, c);
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    gallery_spec gs;
    gs.name = gallery_name::prescribed;
    gs.fld = f;
    gs.points = pts;
    gs.seed = 2;
    auto b = build(gs);
    auto rec = verify_nodal(b.F, f, 1);
    CHECK(rec.non_nodal.empty());
    REQUIRE(rec.nodes.size() == 5);
    auto sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::equal(rec.nodes.begin(), rec.nodes.end(), sorted.begin()));
    CHECK(defect_of(f, rec.nodes).defect == 0);
}

TEST_CASE("prescribed nodes: k = 0 gives a verified smooth sextic") {
    field f = field::finite(101);
    hpoly F = prescribed_nodes({}, f, 1);
    auto scan = find_singular_points(F, f, 1);
    CHECK(scan.points.empty());
}

TEST_CASE("prescribed nodes input validation") {
    field f = field::finite(101);
    std::vector<ppoint> many;
    for (long long i = 0; i < 21; ++i) many.push_back(pt(f, 1, i, i * i, 1 + i));
    try {
        prescribed_nodes(many, f, 1);
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::too_many_points);
    }

    std::vector<ppoint> dup = {pt(f, 1, 2, 3, 4), pt(f, 2, 4, 6, 8)};  // same point
    try {
        prescribed_nodes(dup, f, 1);
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::identical_points);
    }

    field g = field::finite(13);
    std::vector<ppoint> wrong = {pt(g, 1, 2, 3, 4)};
    try {
        prescribed_nodes(wrong, f, 1);
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::field_mismatch);
    }
}

TEST_CASE("quintic-tail fixtures parse to their published shapes") {
    // Spot values pin the explicit sextics: every term carries an x or y, so
    // both surfaces contain the line x = y = 0, and the x^6 coefficient is 1.
    gallery_spec gs;
    gs.name = gallery_name::jihun2;
    gs.fld = field::finite(13);
    auto b = build(gs);
    CHECK(b.F.evaluate({b.fld.zero(), b.fld.zero(), b.fld.one(), b.fld.one()}).is_zero());
    CHECK(b.F.evaluate({b.fld.one(), b.fld.zero(), b.fld.zero(), b.fld.zero()}) == b.fld.one());

    gs.name = gallery_name::jihun1;
    gs.fld = field::finite(73);
    auto b1 = build(gs);
    // Every term carries an x or y factor, so the line x = y = 0 lies on the
    // surface; the x-partial restricts to z^5 - 2 z w^4, whose zeros with
    // z = 1 are the four fourth roots of 1/2.
    int on_surface = 0, partial_zeros = 0;
    for (long long w = 0; w < 73; ++w) {
        std::array<scalar, 4> p{b1.fld.zero(), b1.fld.zero(), b1.fld.one(),
                                b1.fld.from_int(w)};
        on_surface += b1.F.evaluate(p).is_zero();
        partial_zeros += b1.F.partial(0).evaluate(p).is_zero();
    }
    CHECK(on_surface == 73);
    CHECK(partial_zeros == 4);
}
