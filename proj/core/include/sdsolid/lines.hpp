#pragma once

#include <array>
#include <utility>
#include <vector>

#include "sdsolid/geometry.hpp"
#include "sdsolid/poly.hpp"
#include "sdsolid/singular.hpp"

namespace sds {

/// A line through a node pair, with its incidence data. A line not contained
/// in the surface carries at most 3 nodes; a contained line at most 5 (the
/// sextic restricted to the line has degree 6 and each node counts twice).
struct line_record {
    line ln;
    bool contained_in_s = false;
    std::vector<ppoint> nodes_on_line;
    int node_count = 0;
};

/// One record per distinct line through a pair of nodes of the record
/// (deduplicated by Pluecker coordinates, sorted canonically). Nodes over
/// extension fields are embedded into their compositum first; fewer than two
/// nodes yields an empty list. Containment is decided by the vanishing of the
/// restricted sextic, membership by the incidence test.
std::vector<line_record> classify_lines(const nodal_surface_record& rec);

/// True iff the gradients of F at the first `samples` smooth surface points
/// of L (canonical order) are pairwise proportional, i.e. the tangent planes
/// along the sampled part of L coincide. L must lie on {F=0} and carry at
/// least `samples` smooth points over the current field.
bool tangent_planes_coincide(const hpoly& F, const line& L, int samples);

/// Root profile of the residual quintic of a plane section through a
/// contained line. `quintic` is Q|_L in the span coordinates of L (root
/// (s:t) is the point s*a + t*b); `roots` lists its distinct rational roots
/// with multiplicities; `irrational_degrees` has one entry (>= 2) per
/// remaining irreducible-factor copy, so rational multiplicities plus
/// irrational degrees sum to 5.
struct residual_profile_result {
    std::array<scalar, 4> plane;
    bform quintic;
    std::vector<std::pair<ppoint, int>> roots;
    std::vector<int> irrational_degrees;
};

/// Restrict F to the plane (given by its dual vector), divide by the linear
/// form of L to obtain the residual quintic Q, and profile Q|_L. The plane
/// must contain L and the section must not contain L doubly (Q|_L == 0);
/// a line not on the surface surfaces as NotDivisible.
residual_profile_result residual_profile(const hpoly& F, const line& L,
                                         const std::array<scalar, 4>& plane);

/// One sample of the elliptic-fibration construction attached to a contained
/// line: the plane H through L and the sample point, the residual quintic C
/// of that section (ternary, in (a, b, sample) coordinates), the unique
/// residual intersection point q of L and C away from the singular points,
/// the probe line through the sample and q, and the restricted sextic on it.
/// `fiber_elliptic` certifies a root of multiplicity exactly 2 at q together
/// with a squarefree residual quartic.
struct b_probe {
    line base_line;
    ppoint sample;
    std::array<scalar, 4> plane;
    tpoly residual_quintic;
    ppoint q_p;
    line probe_line;
    bform fiber_form;
    bool fiber_elliptic = false;
};

/// Run one probe for base line L (contained in {F=0}) and a sample point off
/// L. Degenerate samples -- the residual point falls into the singular locus,
/// is not unique, or is not rational -- raise NoSmoothResidualPoint and the
/// caller retries with a fresh sample.
b_probe construction_b_probe(const hpoly& F, const line& L, const ppoint& p);

}  // namespace sds
