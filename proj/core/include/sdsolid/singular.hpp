#pragma once

#include <cstdint>
#include <vector>

#include "sdsolid/geometry.hpp"
#include "sdsolid/poly.hpp"

namespace sds {

/// Result of the exhaustive singular-point scan over an extension tower.
/// Points carry coordinates over their minimal field of definition and are
/// sorted by (extension degree, canonical point order).
struct singular_scan {
    std::vector<ppoint> points;
    std::vector<std::uint64_t> per_degree;  // cumulative distinct counts N_1..N_m
    bool stabilized = false;                // m >= 2 and N_{m-1} == N_m
};

/// All points of P³ over F_{q}, F_{q²}, ..., F_{q^m} where all four partials
/// of F vanish (F itself then vanishes by the Euler relation). deg F = 6.
singular_scan find_singular_points(const hpoly& F, const field& fld, int max_degree,
                                   std::uint64_t guard = default_enum_guard);

/// True iff the singular point pt of {F=0} is a simple double point: the 4x4
/// Hessian at pt has rank exactly 3 (rank <= 3 being automatic from the Euler
/// kernel relation). Characteristic must not be 2, 3, or 5.
bool is_node(const hpoly& F, const ppoint& pt);

/// F with the singular locus fully certified.
struct nodal_surface_record {
    hpoly F;
    field fld;
    int extension_depth = 1;
    std::vector<std::uint64_t> per_degree;
    bool stabilized = false;
    std::vector<ppoint> nodes;       // singular points with Hessian rank 3
    std::vector<ppoint> non_nodal;   // singular points failing the node test
    std::vector<int> orbit_sizes;    // Galois orbit size (minimal degree) per node
};

nodal_surface_record verify_nodal(const hpoly& F, const field& fld, int max_degree,
                                  std::uint64_t guard = default_enum_guard);

}  // namespace sds
