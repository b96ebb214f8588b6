#pragma once
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "projcoh/arrangement.hpp"
#include "projcoh/linalg.hpp"
#include "projcoh/scheme.hpp"

namespace projcoh {

struct UnsupportedCodim : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inclusion-induced maps between exterior powers of the stabilizer lattices,
// in the bases fixed by the arrangement ordering. Both pipeline routes consume
// these. For codimension 3 the per-plane relative blocks and the degree-0
// augmented model are populated as well.
struct DiagramMaps {
  long ambient_rank = 0, codim = 0, nu = 0, dim = 0;

  // level_stack[r][k]: block-column matrix of Λ_k(Γ^Θ ⊆ Z^N) over the level-r
  // classes Θ in arrangement order; C(N,k) rows, L_r·C(ν·r,k) columns.
  // Populated for r = 1..codim-1, k = 0..N.
  std::vector<std::vector<IntMatrix>> level_stack;

  // --- codimension 3 only, indexed by top-level (plane) class ---
  // rel_coord[a][t]: coordinates of the t-th incident line stabilizer in the
  // basis of the plane stabilizer (2ν x ν integer matrix)
  std::vector<std::vector<IntMatrix>> rel_coord;
  // rel2[a]: Λ₂ of those coordinate matrices, stacked; C(2ν,2) x L₁^α
  std::vector<IntMatrix> rel2;
  // theta_cls[a][t]: level-1 class index of block t of rel2[a]
  std::vector<std::vector<long>> theta_cls;

  // --- degree-0 augmented model ---
  // one column block per level-1 class θ: ν stabilizer columns, then
  // L₀^θ−1 point-difference columns; rows = Z^N ⊕ Z^{L₀} (global point classes)
  IntMatrix aug_global;
  // first column of each θ block inside aug_global
  std::vector<long> aug_offset;
  // codim 3: the same model relative to each plane class α: rows = Γ^α
  // coordinates ⊕ Z^{point classes of α}, blocks over incident lines
  std::vector<IntMatrix> aug_sub;
  // point classes of each plane, in the row order used by aug_sub[a]
  std::vector<std::vector<long>> point_cls;
};

DiagramMaps build_diagram_maps(const Arrangement& arr);

enum class DegreeStatus { exact, rational_rank_only, extension_ambiguous };

// One cohomology degree. `group` is the full value when status is exact; for
// an ambiguous degree it is the externally resolved value when `resolved` is
// set and the free part alone otherwise, with the possible torsion listed in
// `candidates` (isomorphism types, deterministic order).
struct DegreeResult {
  AbelianGroup group;
  DegreeStatus status = DegreeStatus::exact;
  std::vector<AbelianGroup> candidates;
  std::string annotation;
  bool resolved = false;

  bool operator==(const DegreeResult&) const = default;
};

// codimension-3 diagnostics: the three torsion groups that feed the top-degree
// extension analysis, plus the rank bookkeeping consumed by the cross-checks
struct Codim3Diagnostics {
  AbelianGroup torsion_coker_planes3;  // t of Λ₃Z^N / ⟨Λ₃Γ^α⟩
  AbelianGroup torsion_kernel_quot;    // t of ker(line Λ₂ stack) / ⟨embedded plane kernels⟩
  AbelianGroup torsion_ker_degree0;    // t of ker(induced map of degree-0 cokernels)
  std::string delta_report;            // how the connecting map was resolved
  // top-degree extension data: 0 -> sub -> H^3 -> quotient -> 0
  long ext_sub_rank = 0;               // rank of the subobject (coker of the middle map)
  AbelianGroup ext_quotient;           // the quotient, exact
  // rank pipeline values
  long A3 = 0;            // rank of the plane Λ₃ stack
  long A4 = 0;            // rank of the plane Λ₄ stack
  long T2 = 0;            // rank of the line Λ₂ stack
  long X = 0;             // rank of the embedded relative-kernel span
  long R1 = 0;            // A3 + Σ_α rk(rel2[α]) + X
  long sum_rel_rank = 0;  // Σ_α rk(rel2[α])
  long ker_lines2 = 0;    // dim ker of the line Λ₂ stack
  long ker_phi1_rank = 0;
  long ker_deg0_sub_rank = 0;   // rank of ker(induced degree-0 cokernel map)
  long ker_deg0_quot_rank = 0;  // rank of ker(induced degree-0 kernel map)
  long delta0_rank = 0;         // inferred rank of the degree-0 connecting map
};

struct CohomologyResult {
  std::string scheme;
  std::string method;  // "fhk" or "mv"
  long ambient_rank = 0, codim = 0, dim = 0;
  std::vector<DegreeResult> degrees;  // index = cohomological degree 0..dim
  long euler = 0;                     // Σ_s (−1)^{dim−s} rk H^s
  std::optional<Codim3Diagnostics> diag;
};

// pipelines (the group-homology route)
CohomologyResult codim1(const Arrangement& arr);
CohomologyResult codim2(const Arrangement& arr, const DiagramMaps& maps);
// scheme_name keys externally established extension resolutions; pass the
// catalog name or leave empty for none
CohomologyResult codim3(const Arrangement& arr, const DiagramMaps& maps,
                        const std::string& scheme_name = "");

// arrangement + maps + dispatch on codimension; throws UnsupportedCodim > 3
CohomologyResult cohomology(const SchemeSpec& s);

struct CheckReport {
  bool ok = true;
  std::vector<std::string> lines;

  void expect(bool cond, const std::string& what);
};

// closed-form rank formulas and Euler characteristic vs the direct values
CheckReport codim2_rank_check(const Arrangement& arr, const DiagramMaps& maps,
                              const CohomologyResult& r);
CheckReport codim3_rank_check(const Arrangement& arr, const DiagramMaps& maps,
                              const CohomologyResult& r);
// H^s = Z^C(N,s) for s < ν−1
CheckReport low_degree_check(const CohomologyResult& r);
// degrees forced torsion-free by the general theory
CheckReport torsion_bounds_check(const CohomologyResult& r);

struct KTheoryResult {
  DegreeResult k0, k1;
};

// direct sums of even/odd degrees; defined for dim <= 3 only (throws
// UnsupportedCodim beyond); top-degree ambiguity propagates into k1
KTheoryResult k_theory(const CohomologyResult& r);

std::string result_to_json(const CohomologyResult& r);
std::string ktheory_to_json(const KTheoryResult& k, const CohomologyResult& r);

}  // namespace projcoh
