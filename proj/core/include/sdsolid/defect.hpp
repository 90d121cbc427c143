#pragma once

#include <string>
#include <vector>

#include "sdsolid/geometry.hpp"
#include "sdsolid/linalg.hpp"

namespace sds {

/// Independent conditions that a node set imposes on quintic forms, and the
/// resulting Q-factoriality verdict. Over a finite field the computed rank
/// only bounds the characteristic-0 rank from below, so the computed defect
/// bounds the true defect from above — recorded in `caveat`.
struct defect_report {
    int node_count = 0;
    int independent_conditions = 0;  // I = rank of the evaluation matrix
    int defect = 0;                  // node_count - I
    bool q_factorial = false;        // defect == 0
    field fld;
    std::string caveat;      // "exact-rational" | "char-p-lower-bound"
    bool synthetic = false;  // raw point list, not a verified nodal record
};

/// Row i = the 56 quintic monomials (graded-lex order) evaluated at point i.
/// All points must share one field.
smat evaluation_matrix(const std::vector<ppoint>& points);

/// Defect of a node set over `fld`. Points over different fields of one
/// extension tower are embedded into their compositum first. `synthetic`
/// marks expert-mode input (a raw point list with no verified surface).
defect_report defect_of(const field& fld, const std::vector<ppoint>& nodes,
                        bool synthetic = false);

/// True iff quintics through gamma impose one more independent condition at
/// q, i.e. some quintic vanishes on gamma but not at q.
bool separates(const std::vector<ppoint>& gamma, const ppoint& q);

/// One offending subset for the degree-k position condition (5k+1 points on
/// a degree-k curve).
struct position_violation {
    int k = 0;
    std::vector<int> indices;  // all gamma-indices on the offending curve
};

/// Checks the "no 5k+1 points on a degree-k curve" condition for k <= k_max.
/// k=1: lines carrying >= 6 of the points (one violation per line, listing
/// every incident point). k=2: maximal coplanar subsets of size >= 11 whose
/// full ternary-conic evaluation matrix has rank <= 5, i.e. the subset lies
/// on one conic. A proper sub-subset lying on a conic that misses the other
/// coplanar points is not searched — the full-set test is the designed scope.
std::vector<position_violation> sextic_node_position(const std::vector<ppoint>& gamma,
                                                     int k_max = 2);

}  // namespace sds
