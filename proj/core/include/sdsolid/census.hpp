#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdsolid/defect.hpp"
#include "sdsolid/errors.hpp"
#include "sdsolid/lines.hpp"
#include "sdsolid/singular.hpp"

namespace sds {

/// Thrown by run_census when certification finds a singular point that is
/// not a simple double point. Carries the full scan record so callers can
/// report exactly which points failed and why the census stops.
class non_nodal_error : public error {
  public:
    explicit non_nodal_error(nodal_surface_record rec);
    const nodal_surface_record& record() const { return rec_; }

  private:
    nodal_surface_record rec_;
};

struct census_options {
    int ext_depth = 1;  // extension depth of the singular scan
    std::uint64_t guard = default_enum_guard;
    std::uint64_t seed = 1;  // residual-fibration probe sampling
    bool certify_b = false;  // probe every four-node line for an elliptic fiber
    int probe_retries = 32;
    /// Non-empty: skip the scan and trust this node list after certifying
    /// each point individually. Completeness-dependent verdicts degrade to
    /// "no-verdict". Required over the rationals, where no scan exists.
    std::vector<ppoint> supplied_nodes;
};

/// One elliptic-fibration model of the double solid.
struct census_model {
    std::string kind;  // "A" (projection from a node) or "B" (line residual)
    std::string rule;  // decision tag: "node-projection" | "four-node-line-residual"
    std::optional<ppoint> node;       // A: the projection centre
    std::optional<line_record> base;  // B: the four-node line
    std::string certification;        // "" | "probe-elliptic" | "probe-inconclusive"
};

struct census_report {
    field fld;
    std::uint64_t seed = 1;

    // certified singular locus
    int node_count = 0;
    std::vector<ppoint> nodes;
    std::vector<std::uint64_t> per_degree;  // cumulative scan counts, empty if supplied
    bool stabilized = false;
    bool nodes_supplied = false;

    // Q-factoriality
    defect_report defect;
    bool q_factorial = false;
    std::string q_factorial_rule;  // "defect-zero-q-factorial"

    // birational verdicts: "yes" needs a complete certified node set with
    // defect 0; positive defect leaves the Q-factoriality hypothesis of the
    // rigidity theorem uncertified ("hypothesis-failed"); supplied node
    // lists cannot support either claim ("no-verdict")
    std::string super_rigid;
    bool non_rational = false;     // follows super_rigid == "yes"
    bool no_conic_bundle = false;  // follows super_rigid == "yes"

    // line geometry and the model census
    std::vector<line_record> lines;       // every line through >= 2 nodes
    std::vector<census_model> models;     // A models, then B models
    std::vector<line_record> fano_lines;  // contained lines through 5 nodes
    bool fano_model_exists = false;
    int fibration_count = 0;  // node_count + number of four-node lines

    std::string classification_scope;
    std::vector<std::string> caveats;
};

/// Full pipeline: certify that every singular point of {F = 0} is a node,
/// measure the Q-factoriality defect of the node set, classify all lines
/// through two or more nodes, and list the elliptic-fibration and Fano
/// models attached to nodes, four-node lines, and five-node lines.
/// deg F = 6 and characteristic > 5 are required.
census_report run_census(const hpoly& F, const field& fld, const census_options& opts = {});

/// Re-checks the bound package on a finished report: at most 14 nodes force
/// defect 0, at least 57 force positive defect, at most 65 nodes ever, lines
/// hold at most 5 nodes and need 4 to lie on the surface, and every derived
/// count and flag is internally consistent. Returns human-readable
/// violations; empty means the report is sound.
std::vector<std::string> defect_bound_audit(const census_report& rep);

}  // namespace sds
