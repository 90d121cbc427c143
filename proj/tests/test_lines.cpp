#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "sdsolid/gallery.hpp"
#include "sdsolid/linalg.hpp"
#include "sdsolid/lines.hpp"

using namespace sds;

namespace {

ppoint pt(const field& f, long long a, long long b, long long c, long long d) {
    return ppoint(f, {f.from_int(a), f.from_int(b), f.from_int(c), f.from_int(d)});
}

line coordinate_line_zw(const field& f) {
    return line_through(pt(f, 0, 0, 1, 0), pt(f, 0, 0, 0, 1));
}

nodal_surface_record scanned(gallery_name name, const field& f, int depth = 1) {
    gallery_spec gs;
    gs.name = name;
    gs.fld = f;
    auto b = build(gs);
    return verify_nodal(b.F, f, depth);
}

}  // namespace

TEST_CASE("line census of the 65-node surface: 1136 lines in three classes") {
    for (std::uint32_t p : {11u, 19u, 31u}) {
        field f = field::finite(p);
        auto rec = scanned(gallery_name::barth, f);
        REQUIRE(rec.nodes.size() == 65);
        auto lines = classify_lines(rec);
        CHECK(lines.size() == 1136);
        std::map<std::pair<bool, int>, int> census;
        for (const auto& lr : lines) {
            CHECK(lr.node_count == static_cast<int>(lr.nodes_on_line.size()));
            CHECK(lr.node_count >= 2);
            CHECK(lr.node_count <= 5);
            if (!lr.contained_in_s) CHECK(lr.node_count <= 3);
            if (lr.node_count >= 4) CHECK(lr.contained_in_s);
            for (const auto& n : lr.nodes_on_line) CHECK(lr.ln.contains(n));
            census[{lr.contained_in_s, lr.node_count}]++;
        }
        // 685 off-surface bisecants, 445 off-surface trisecants, and the 6
        // contained five-node lines (the icosahedral axes). No four-node lines.
        CHECK(census[{false, 2}] == 685);
        CHECK(census[{false, 3}] == 445);
        CHECK(census[{true, 5}] == 6);
        CHECK(census.size() == 3);
    }
}

TEST_CASE("census needs at least two nodes") {
    field f = field::finite(11);
    auto rec = scanned(gallery_name::barth, f);
    rec.nodes.resize(1);
    CHECK(classify_lines(rec).empty());
}

TEST_CASE("line records are deduplicated and canonically sorted") {
    field f = field::finite(11);
    auto rec = scanned(gallery_name::barth, f);
    auto lines = classify_lines(rec);
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
        CHECK(lines[i].ln.cmp(lines[i + 1].ln) < 0);
    }
}

TEST_CASE("random family surfaces respect the incidence bounds") {
    field f = field::finite(101);
    for (int r = 1; r <= 2; ++r) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            gallery_spec gs;
            gs.name = gallery_name::family_r;
            gs.fld = f;
            gs.r = r;
            gs.seed = seed;
            auto b = build(gs);
            auto rec = verify_nodal(b.F, f, 1);
            CHECK(rec.non_nodal.empty());
            for (const auto& lr : classify_lines(rec)) {
                CHECK(lr.node_count <= 5);
                if (!lr.contained_in_s) CHECK(lr.node_count <= 3);
            }
        }
    }
}

TEST_CASE("tangent planes along the shared line") {
    // The five-point surface has coinciding tangent planes along x = y = 0;
    // the four-point one does not.
    {
        gallery_spec gs;
        gs.name = gallery_name::jihun2;
        gs.fld = suitable_field(gallery_name::jihun2);
        auto b = build(gs);
        CHECK(tangent_planes_coincide(b.F, coordinate_line_zw(b.fld), 3));
    }
    {
        gallery_spec gs;
        gs.name = gallery_name::jihun1;
        gs.fld = suitable_field(gallery_name::jihun1);
        auto b = build(gs);
        CHECK(!tangent_planes_coincide(b.F, coordinate_line_zw(b.fld), 3));
    }
    // A line not on the surface is rejected.
    field f7 = field::finite(7);
    hpoly fermat = hpoly::parse(f7, "x^6 + y^6 + z^6 + w^6", 6);
    CHECK_THROWS_AS(tangent_planes_coincide(fermat, coordinate_line_zw(f7), 3), error);
}

TEST_CASE("characteristic-5 sections: one residual root of multiplicity 5") {
    gallery_spec gs;
    gs.name = gallery_name::char5_demo;
    auto b = build(gs);
    line L = coordinate_line_zw(b.fld);
    rng gen(7);
    int done = 0;
    while (done < 10) {
        scalar a = b.fld.sample(gen), c = b.fld.sample(gen);
        if (a.is_zero() && c.is_zero()) continue;
        auto prof = residual_profile(b.F, L, {a, c, b.fld.zero(), b.fld.zero()});
        CHECK(prof.quintic.degree() == 5);
        REQUIRE(prof.roots.size() == 1);
        CHECK(prof.roots[0].second == 5);
        CHECK(prof.irrational_degrees.empty());
        CHECK(L.contains(prof.roots[0].first));
        ++done;
    }
}

TEST_CASE("residual profile multiplicities always sum to five") {
    field f = field::finite(11);
    gallery_spec gs;
    gs.name = gallery_name::barth;
    gs.fld = f;
    auto b = build(gs);
    auto rec = verify_nodal(b.F, f, 1);
    line axis;
    for (const auto& lr : classify_lines(rec)) {
        if (lr.contained_in_s) {
            axis = lr.ln;
            break;
        }
    }
    REQUIRE(axis.fld().is_finite());
    // Planes through the axis: dual vectors orthogonal to both spanning points.
    rng gen(3);
    int done = 0;
    while (done < 5) {
        scalar s = f.sample(gen), t = f.sample(gen);
        if (s.is_zero() && t.is_zero()) continue;
        // dual = s * d1 + t * d2 where d1, d2 span the annihilator of the line
        smat m(2, std::vector<scalar>(4));
        for (int j = 0; j < 4; ++j) {
            m[0][j] = axis.point_a()[j];
            m[1][j] = axis.point_b()[j];
        }
        auto duals = kernel_basis(m, f, 4);
        REQUIRE(duals.size() == 2);
        std::array<scalar, 4> plane;
        for (int j = 0; j < 4; ++j) plane[j] = s * duals[0][j] + t * duals[1][j];
        auto prof = residual_profile(b.F, axis, plane);
        int total = 0;
        for (const auto& [root, mult] : prof.roots) {
            total += mult;
            CHECK(axis.contains(root));
        }
        for (int d : prof.irrational_degrees) {
            CHECK(d >= 2);
            total += d;
        }
        CHECK(total == 5);
        ++done;
    }
}

TEST_CASE("fiber probes on the shared-line surface are elliptic") {
    gallery_spec gs;
    gs.name = gallery_name::jihun1;
    gs.fld = suitable_field(gallery_name::jihun1);
    auto b = build(gs);
    line L = coordinate_line_zw(b.fld);
    rng gen(1);
    int valid = 0, tried = 0;
    while (valid < 10 && tried < 400) {
        ++tried;
        std::array<scalar, 4> c{b.fld.sample(gen), b.fld.sample(gen), b.fld.sample(gen),
                                b.fld.sample(gen)};
        if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero()) continue;
        ppoint p(b.fld, c);
        if (L.contains(p)) continue;
        try {
            b_probe probe = construction_b_probe(b.F, L, p);
            ++valid;
            CHECK(probe.fiber_elliptic);
            CHECK(probe.base_line == L);
            CHECK(probe.sample == p);
            CHECK(L.contains(probe.q_p));
            CHECK(probe.probe_line.contains(probe.q_p));
            CHECK(probe.probe_line.contains(p));
            // The certificate unpacked: restricted sextic has an exactly
            // double root at q_p and a squarefree residual quartic.
            CHECK(probe.fiber_form.degree() == 6);
        } catch (const error& e) {
            CHECK(e.code() == errc::no_smooth_residual_point);
        }
    }
    CHECK(valid == 10);
    CHECK(tried == 11);  // seed 1: every sample off the line probes cleanly
}

TEST_CASE("degenerate probe samples are rejected") {
    gallery_spec gs;
    gs.name = gallery_name::jihun1;
    gs.fld = suitable_field(gallery_name::jihun1);
    auto b = build(gs);
    line L = coordinate_line_zw(b.fld);
    try {
        construction_b_probe(b.F, L, pt(b.fld, 0, 0, 1, 2));
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::point_on_line);
    }
}

TEST_CASE("residual profiles through a contained singular line split simply") {
    // On a contained line carrying k singular points, a generic plane section
    // leaves a residual quintic meeting the line in the k singular points plus
    // 5 - k further simple points.
    gallery_spec gs;
    gs.name = gallery_name::jihun1;
    gs.fld = suitable_field(gallery_name::jihun1);
    auto b = build(gs);
    line L = coordinate_line_zw(b.fld);
    auto rec = verify_nodal(b.F, b.fld, 1);
    REQUIRE(rec.non_nodal.size() == 4);

    const std::pair<int, int> planes1[] = {{10, 71}, {9, 12}, {57, 25}, {23, 70}, {54, 18}};
    const long long extras1[] = {64, 57, 24, 6, 33};
    for (std::size_t i = 0; i < 5; ++i) {
        auto [a, c] = planes1[i];
        auto prof = residual_profile(
            b.F, L, {b.fld.from_int(a), b.fld.from_int(c), b.fld.zero(), b.fld.zero()});
        REQUIRE(prof.roots.size() == 5);
        CHECK(prof.irrational_degrees.empty());
        int at_singular = 0;
        bool extra_seen = false;
        for (const auto& [root, mult] : prof.roots) {
            CHECK(mult == 1);
            CHECK(L.contains(root));
            bool is_sing = false;
            for (const auto& s : rec.non_nodal)
                if (s == root) is_sing = true;
            if (is_sing)
                ++at_singular;
            else {
                CHECK(root == pt(b.fld, 0, 0, 1, extras1[i]));
                extra_seen = true;
            }
        }
        CHECK(at_singular == 4);  // the four singular points, always
        CHECK(extra_seen);        // plus one plane-dependent q_p
    }

    gs.name = gallery_name::jihun2;
    gs.fld = suitable_field(gallery_name::jihun2);
    auto b2 = build(gs);
    line L2 = coordinate_line_zw(b2.fld);
    auto rec2 = verify_nodal(b2.F, b2.fld, 1);
    REQUIRE(rec2.non_nodal.size() == 5);

    // With five singular points on the line the residual quintic is exhausted:
    // every root is singular and q_p is absorbed.
    const std::pair<int, int> planes2[] = {{12, 5}, {5, 3}, {11, 7}, {0, 4}, {3, 0}};
    for (auto [a, c] : planes2) {
        auto prof = residual_profile(
            b2.F, L2, {b2.fld.from_int(a), b2.fld.from_int(c), b2.fld.zero(), b2.fld.zero()});
        REQUIRE(prof.roots.size() == 5);
        CHECK(prof.irrational_degrees.empty());
        for (const auto& [root, mult] : prof.roots) {
            CHECK(mult == 1);
            bool is_sing = false;
            for (const auto& s : rec2.non_nodal)
                if (s == root) is_sing = true;
            CHECK(is_sing);
        }
    }

    // x + y = 0 is special for this surface: the section picks up the line
    // twice and no residual profile exists.
    try {
        residual_profile(b2.F, L2,
                         {b2.fld.from_int(10), b2.fld.from_int(10), b2.fld.zero(), b2.fld.zero()});
        FAIL("expected a throw");
    } catch (const error& e) {
        CHECK(e.code() == errc::degenerate_plane);
    }
}
