#include "sdsolid/defect.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "sdsolid/poly.hpp"

namespace sds {

smat evaluation_matrix(const std::vector<ppoint>& points) {
    static const std::vector<exp4> quintics = monomials_of_degree(5);
    smat m;
    m.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const ppoint& pt = points[i];
        if (i > 0 && !(pt.fld() == points[0].fld())) {
            fail(errc::field_mismatch, "evaluation matrix needs one common field");
        }
        const field& fld = pt.fld();
        // power tables pt[v]^e, e <= 5
        std::array<std::array<scalar, 6>, 4> pow;
        for (int v = 0; v < 4; ++v) {
            pow[v][0] = fld.one();
            for (int e = 1; e <= 5; ++e) pow[v][e] = pow[v][e - 1] * pt[v];
        }
        std::vector<scalar> row;
        row.reserve(quintics.size());
        for (const auto& mono : quintics) {
            scalar v = fld.one();
            for (int t = 0; t < 4; ++t) {
                if (mono.e[t]) v = v * pow[t][mono.e[t]];
            }
            row.push_back(std::move(v));
        }
        m.push_back(std::move(row));
    }
    return m;
}

namespace {

/// Embed a mixed-level node list into the compositum of its fields (lcm
/// extension degree over the base).
std::vector<ppoint> to_common_field(const field& fld, const std::vector<ppoint>& nodes) {
    if (nodes.empty() || !fld.is_finite()) return nodes;
    std::uint64_t l = 1;
    for (const auto& pt : nodes) {
        std::uint64_t k = pt.fld().k();
        l = std::lcm(l, k);
    }
    field top = fld.extension(static_cast<std::uint32_t>(l / fld.k()));
    std::vector<ppoint> out;
    out.reserve(nodes.size());
    for (const auto& pt : nodes) out.push_back(lift_point(pt, top));
    return out;
}

}  // namespace

defect_report defect_of(const field& fld, const std::vector<ppoint>& nodes,
                        bool synthetic) {
    defect_report rep;
    rep.fld = fld;
    rep.synthetic = synthetic;
    rep.node_count = static_cast<int>(nodes.size());
    rep.caveat = fld.is_finite() ? "char-p-lower-bound" : "exact-rational";
    std::vector<ppoint> pts = to_common_field(fld, nodes);
    rep.independent_conditions = rank_of(evaluation_matrix(pts));
    rep.defect = rep.node_count - rep.independent_conditions;
    rep.q_factorial = rep.defect == 0;
    return rep;
}

bool separates(const std::vector<ppoint>& gamma, const ppoint& q) {
    for (const auto& p : gamma) {
        if (p.fld() == q.fld() && p == q) {
            fail(errc::identical_points, "the extra point already belongs to gamma");
        }
    }
    smat m = evaluation_matrix(gamma);
    int base = rank_of(m);
    std::vector<ppoint> with = gamma;
    with.push_back(q);
    return rank_of(evaluation_matrix(with)) == base + 1;
}

namespace {

/// Dual vector of the plane through three points (kernel of the 3x4 matrix),
/// leading-one normalized; empty when the points are collinear.
std::vector<scalar> plane_through(const ppoint& a, const ppoint& b, const ppoint& c) {
    smat m = {{a[0], a[1], a[2], a[3]},
              {b[0], b[1], b[2], b[3]},
              {c[0], c[1], c[2], c[3]}};
    auto kern = kernel_basis(m, a.fld(), 4);
    if (kern.size() != 1) return {};
    std::vector<scalar> dual = std::move(kern[0]);
    for (auto& x : dual) {
        if (!x.is_zero()) {
            scalar inv = x.inv();
            for (auto& y : dual) y = y * inv;
            break;
        }
    }
    return dual;
}

scalar dot4(const std::vector<scalar>& dual, const ppoint& p) {
    scalar acc = dual[0] * p[0];
    for (int i = 1; i < 4; ++i) acc = acc + dual[i] * p[i];
    return acc;
}

}  // namespace

std::vector<position_violation> sextic_node_position(const std::vector<ppoint>& gamma,
                                                     int k_max) {
    if (k_max < 1 || k_max > 2) {
        fail(errc::k_out_of_range, "position condition implemented for k <= 2");
    }
    std::vector<position_violation> out;
    const int n = static_cast<int>(gamma.size());
    if (n == 0) return out;
    const field& fld = gamma[0].fld();
    for (int i = 1; i < n; ++i) {
        if (!(gamma[i].fld() == fld)) {
            fail(errc::field_mismatch, "position check needs one common field");
        }
    }

    // k = 1: lines with >= 6 incident points
    std::map<std::string, std::vector<int>> by_line;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (gamma[i] == gamma[j]) continue;
            line l = line_through(gamma[i], gamma[j]);
            auto& inc = by_line[l.str()];
            if (inc.empty()) {
                for (int t = 0; t < n; ++t) {
                    if (l.contains(gamma[t])) inc.push_back(t);
                }
            }
        }
    }
    for (auto& [key, inc] : by_line) {
        if (static_cast<int>(inc.size()) >= 6) {
            out.push_back({1, inc});
        }
    }
    if (k_max == 1) return out;

    // k = 2: maximal coplanar subsets of size >= 11 on a single conic
    std::map<std::string, std::vector<int>> by_plane;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int t = j + 1; t < n; ++t) {
                auto dual = plane_through(gamma[i], gamma[j], gamma[t]);
                if (dual.empty()) continue;  // collinear triple
                std::string key;
                for (const auto& x : dual) key += x.str() + "|";
                auto& inc = by_plane[key];
                if (inc.empty()) {
                    for (int s = 0; s < n; ++s) {
                        if (dot4(dual, gamma[s]).is_zero()) inc.push_back(s);
                    }
                }
            }
        }
    }
    for (auto& [key, inc] : by_plane) {
        if (static_cast<int>(inc.size()) < 11) continue;
        // in-plane coordinates: express each point in a basis of three
        // independent incident points
        int b0 = inc[0], b1 = -1, b2 = -1;
        for (std::size_t s = 1; s < inc.size() && b2 < 0; ++s) {
            if (b1 < 0) {
                if (!(gamma[inc[s]] == gamma[b0])) b1 = inc[s];
                continue;
            }
            if (!collinear(gamma[b0], gamma[b1], gamma[inc[s]])) b2 = inc[s];
        }
        if (b2 < 0) continue;  // all incident points collinear: a k=1 matter
        smat conic_rows;
        auto m3 = monomials3_of_degree(2);
        for (int s : inc) {
            // alpha*b0 + beta*b1 + gamma2*b2 = lambda*p  — 1-dim kernel of
            // the 4x4 system with columns (b0 b1 b2 p)
            smat sys(4, std::vector<scalar>(4));
            for (int r = 0; r < 4; ++r) {
                sys[r][0] = gamma[b0][r];
                sys[r][1] = gamma[b1][r];
                sys[r][2] = gamma[b2][r];
                sys[r][3] = gamma[s][r];
            }
            auto kern = kernel_basis(sys, fld, 4);
            std::array<scalar, 3> co = {kern[0][0], kern[0][1], kern[0][2]};
            std::vector<scalar> row;
            for (const auto& mono : m3) {
                scalar v = fld.one();
                for (int t = 0; t < 3; ++t) {
                    for (int e = 0; e < mono.e[t]; ++e) v = v * co[t];
                }
                row.push_back(std::move(v));
            }
            conic_rows.push_back(std::move(row));
        }
        if (rank_of(std::move(conic_rows)) <= 5) {
            out.push_back({2, inc});
        }
    }
    return out;
}

}  // namespace sds
