#include "sdsolid/lines.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

#include "sdsolid/errors.hpp"
#include "sdsolid/linalg.hpp"

namespace sds {

namespace {

bool same_field(const field& a, const field& b) {
    if (a.is_finite() != b.is_finite()) return false;
    if (!a.is_finite()) return true;
    return a.p() == b.p() && a.k() == b.k();
}

bool proportional4(const std::array<scalar, 4>& u, const std::array<scalar, 4>& v) {
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (u[i] * v[j] != u[j] * v[i]) return false;
        }
    }
    return true;
}

// Unique plane through the (independent) rows, as a leading-one dual vector.
std::array<scalar, 4> plane_through_rows(const field& fld, const smat& rows) {
    auto ker = kernel_basis(rows, fld, 4);
    if (ker.size() != 1) fail(errc::degenerate_basis, "rows do not span a plane");
    std::array<scalar, 4> dual{fld.zero(), fld.zero(), fld.zero(), fld.zero()};
    for (int i = 0; i < 4; ++i) dual[i] = ker[0][i];
    for (int i = 0; i < 4; ++i) {
        if (!dual[i].is_zero()) {
            scalar inv = dual[i].inv();
            for (int j = i; j < 4; ++j) dual[j] = dual[j] * inv;
            break;
        }
    }
    return dual;
}

scalar dot4(const std::array<scalar, 4>& u, const std::array<scalar, 4>& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

// Residual quintic of the plane section spanned by (a, b, c): restrict F,
// split off the linear form of L = {third coordinate = 0}.
tpoly section_residual(const hpoly& F, const std::array<scalar, 4>& a,
                       const std::array<scalar, 4>& b, const std::array<scalar, 4>& c) {
    const field& fld = F.fld();
    tpoly section = F.restrict_to_plane(a, b, c);
    tpoly gamma = tpoly::from_terms(fld, 1, {{exp3{{0, 0, 1}}, fld.one()}});
    return section.divide_by_linear(gamma);
}

ppoint line_point(const line& L, const scalar& s0, const scalar& t0) {
    const auto& a = L.point_a().coords();
    const auto& b = L.point_b().coords();
    std::array<scalar, 4> c{s0 * a[0] + t0 * b[0], s0 * a[1] + t0 * b[1],
                            s0 * a[2] + t0 * b[2], s0 * a[3] + t0 * b[3]};
    return ppoint(L.fld(), c);
}

}  // namespace

std::vector<line_record> classify_lines(const nodal_surface_record& rec) {
    if (rec.nodes.size() < 2) return {};

    // embed all nodes and F into the compositum of their fields of definition
    field common = rec.fld;
    if (rec.fld.is_finite()) {
        std::uint64_t l = rec.fld.k();
        for (const auto& n : rec.nodes) l = std::lcm(l, n.fld().k());
        if (l != rec.fld.k()) common = rec.fld.extension(int(l / rec.fld.k()));
    }
    hpoly F = same_field(common, rec.fld) ? rec.F : lift(rec.F, common);
    std::vector<ppoint> nodes;
    nodes.reserve(rec.nodes.size());
    for (const auto& n : rec.nodes) {
        nodes.push_back(same_field(n.fld(), common) ? n : lift_point(n, common));
    }

    std::map<line, line_record> by_line;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            if (nodes[i] == nodes[j]) continue;
            line l = line_through(nodes[i], nodes[j]);
            auto it = by_line.find(l);
            if (it != by_line.end()) continue;
            line_record r;
            r.ln = l;
            for (const auto& n : nodes) {
                if (l.contains(n)) r.nodes_on_line.push_back(n);
            }
            r.node_count = int(r.nodes_on_line.size());
            r.contained_in_s =
                F.restrict_to_line(l.point_a().coords(), l.point_b().coords()).is_zero();
            by_line.emplace(l, std::move(r));
        }
    }

    std::vector<line_record> out;
    out.reserve(by_line.size());
    for (auto& [l, r] : by_line) out.push_back(std::move(r));
    return out;
}

bool tangent_planes_coincide(const hpoly& F, const line& L, int samples) {
    if (!same_field(F.fld(), L.fld())) {
        fail(errc::field_mismatch, "line and surface live over different fields");
    }
    std::array<hpoly, 4> parts{F.partial(0), F.partial(1), F.partial(2), F.partial(3)};
    std::vector<std::array<scalar, 4>> grads;
    for (const ppoint& pt : L.points()) {
        if (!F.evaluate(pt.coords()).is_zero()) continue;
        std::array<scalar, 4> g{parts[0].evaluate(pt.coords()), parts[1].evaluate(pt.coords()),
                                parts[2].evaluate(pt.coords()), parts[3].evaluate(pt.coords())};
        if (g[0].is_zero() && g[1].is_zero() && g[2].is_zero() && g[3].is_zero()) continue;
        grads.push_back(g);
        if (int(grads.size()) == samples) break;
    }
    if (int(grads.size()) < samples) {
        fail(errc::insufficient_smooth_points,
             "line carries fewer than the requested number of smooth surface points");
    }
    for (std::size_t i = 1; i < grads.size(); ++i) {
        if (!proportional4(grads[0], grads[i])) return false;
    }
    return true;
}

residual_profile_result residual_profile(const hpoly& F, const line& L,
                                         const std::array<scalar, 4>& plane) {
    const field& fld = F.fld();
    if (!same_field(fld, L.fld())) {
        fail(errc::field_mismatch, "line and surface live over different fields");
    }
    bool zero = true;
    for (const auto& c : plane) zero = zero && c.is_zero();
    if (zero) fail(errc::degenerate_plane, "zero dual vector");
    const auto& a = L.point_a().coords();
    const auto& b = L.point_b().coords();
    if (!dot4(plane, a).is_zero() || !dot4(plane, b).is_zero()) {
        fail(errc::degenerate_plane, "plane does not contain the line");
    }

    // third basis point of the plane, off L
    smat dual_row{{plane[0], plane[1], plane[2], plane[3]}};
    auto ker = kernel_basis(dual_row, fld, 4);
    std::array<scalar, 4> c{fld.zero(), fld.zero(), fld.zero(), fld.zero()};
    bool found = false;
    for (const auto& v : ker) {
        smat span{{a[0], a[1], a[2], a[3]}, {b[0], b[1], b[2], b[3]}, {v[0], v[1], v[2], v[3]}};
        if (rank_of(span) == 3) {
            for (int i = 0; i < 4; ++i) c[i] = v[i];
            found = true;
            break;
        }
    }
    if (!found) fail(errc::degenerate_plane, "plane has no point off the line");

    residual_profile_result out;
    out.plane = plane;
    for (int i = 0; i < 4; ++i) {
        if (!out.plane[i].is_zero()) {
            scalar inv = out.plane[i].inv();
            for (int j = i; j < 4; ++j) out.plane[j] = out.plane[j] * inv;
            break;
        }
    }
    tpoly Q = section_residual(F, a, b, c);
    out.quintic = Q.drop_third();
    if (out.quintic.is_zero()) {
        fail(errc::degenerate_plane, "section contains the line doubly");
    }

    bform rem = out.quintic;
    for (const auto& [st, mult] : out.quintic.roots()) {
        out.roots.emplace_back(line_point(L, st[0], st[1]), mult);
        for (int i = 0; i < mult; ++i) rem = rem.divide_root(st[0], st[1]);
    }
    if (rem.degree() > 0) out.irrational_degrees = rem.factor_degrees();
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

b_probe construction_b_probe(const hpoly& F, const line& L, const ppoint& p) {
    const field& fld = F.fld();
    if (!same_field(fld, L.fld()) || !same_field(fld, p.fld())) {
        fail(errc::field_mismatch, "probe arguments live over different fields");
    }
    if (L.contains(p)) fail(errc::point_on_line, "sample point lies on the base line");

    const auto& a = L.point_a().coords();
    const auto& b = L.point_b().coords();
    const auto& pc = p.coords();

    b_probe out;
    out.base_line = L;
    out.sample = p;
    out.plane = plane_through_rows(fld, {{a[0], a[1], a[2], a[3]},
                                         {b[0], b[1], b[2], b[3]},
                                         {pc[0], pc[1], pc[2], pc[3]}});
    out.residual_quintic = section_residual(F, a, b, pc);
    bform ql = out.residual_quintic.drop_third();
    if (ql.is_zero()) {
        fail(errc::no_smooth_residual_point, "section contains the line doubly");
    }

    // singular points of the surface on L: common roots of the restricted
    // gradient; divide all of them out of Q|_L
    bform sing;
    bool all_zero = true;
    for (int v = 0; v < 4; ++v) {
        bform pv = F.partial(v).restrict_to_line(a, b);
        if (pv.is_zero()) continue;
        sing = all_zero ? pv : bform::gcd(sing, pv);
        all_zero = false;
    }
    if (all_zero) {
        fail(errc::no_smooth_residual_point, "every point of the base line is singular");
    }
    bform rem = ql;
    if (sing.degree() > 0) {
        for (const auto& [st, mult] : sing.roots()) {
            (void)mult;
            int m = rem.root_multiplicity(st[0], st[1]);
            for (int i = 0; i < m; ++i) rem = rem.divide_root(st[0], st[1]);
        }
    }
    if (rem.degree() == 0) {
        fail(errc::no_smooth_residual_point,
             "residual quintic meets the line only in singular points");
    }
    auto rem_roots = rem.roots();
    if (rem_roots.size() != 1 || rem_roots[0].second != rem.degree()) {
        fail(errc::no_smooth_residual_point, "residual intersection point is not unique");
    }
    out.q_p = line_point(L, rem_roots[0].first[0], rem_roots[0].first[1]);

    out.probe_line = line_through(p, out.q_p);
    out.fiber_form = F.restrict_to_line(pc, out.q_p.coords());
    if (out.fiber_form.is_zero()) {
        out.fiber_elliptic = false;  // probe line inside the surface
        return out;
    }
    // q sits on both the base line and the residual quintic, so the fiber
    // form vanishes to order >= 2 there ((s:t) = (0:1) in probe coordinates)
    int m = out.fiber_form.root_multiplicity(fld.zero(), fld.one());
    assert(m >= 2);
    if (m == 2) {
        bform quart =
            out.fiber_form.divide_root(fld.zero(), fld.one()).divide_root(fld.zero(), fld.one());
        out.fiber_elliptic = quart.squarefree();
    } else {
        out.fiber_elliptic = false;
    }
    return out;
}

}  // namespace sds
