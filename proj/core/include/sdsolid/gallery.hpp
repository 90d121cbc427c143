#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdsolid/geometry.hpp"
#include "sdsolid/poly.hpp"

namespace sds {

/// Fixture surfaces: the five explicit sextics, the three-parameter nodal
/// family g3^2 + h_r f_{6-r} (r in {1,2,3}), the two verbatim non-factorial
/// shapes f3^2 - 4 f2 f4 and g3^2 - 4 f3 h3, and a prescribed-node generator.
enum class gallery_name {
    barth,
    family_r,
    quartic_node,
    bidegree23,
    jihun1,
    jihun2,
    char5_demo,
    prescribed,
};

const char* gallery_name_str(gallery_name n);
gallery_name parse_gallery_name(const std::string& text);  // ParseError on unknown

struct gallery_spec {
    gallery_name name = gallery_name::barth;
    field fld;                  // used as given; char5_demo turns a default
                                // rational field into F_5 (suitable_field
                                // picks a working default for the others)
    std::uint64_t seed = 1;
    int r = 1;                  // family_r only, 1 <= r <= 3
    std::vector<ppoint> points; // prescribed only, at most 20
};

struct gallery_build {
    hpoly F;
    field fld;                       // the field actually used
    std::string provenance;          // constructor choices, human readable
    std::uint64_t seed = 0;
    std::vector<ppoint> intended_nodes;  // prescribed singular set (may be empty)
};

/// Deterministic constructor: identical spec gives an identical polynomial.
/// The randomized constructors (family_r, quartic_node, bidegree23,
/// prescribed) draw from a generator seeded by spec.seed and retry internally
/// until the candidate's singular locus is verified to be exactly the
/// prescribed rational node set; NoNodalMember when the retry cap exhausts.
/// barth needs sqrt(5) in the field (SqrtUnavailable); char5_demo needs
/// characteristic exactly 5 (WrongCharacteristic) and is the only constructor
/// allowed there -- node certification and the census stay off-limits at
/// p = 5.
gallery_build build(const gallery_spec& spec);

/// A sextic singular exactly at the given points (at most 20, pairwise
/// distinct): solves the 4k linear gradient conditions on the 84 sextic
/// coefficients (vanishing of F follows by the Euler relation), samples a
/// pseudorandom kernel element, and verifies the singular locus; retries with
/// further draws up to a cap. k = 0 produces a verified smooth sextic.
hpoly prescribed_nodes(const std::vector<ppoint>& points, const field& fld, std::uint64_t seed);

/// Smallest usable prime field for a named fixture: barth needs sqrt(5),
/// jihun1 needs z^4 = 2 to have four distinct roots, jihun2 needs z^4 = w^4
/// to split (p = 1 mod 4), char5_demo is pinned to F_5, and the randomized
/// constructors default to F_101.
field suitable_field(gallery_name name, std::uint32_t search_cap = 1000);

}  // namespace sds
