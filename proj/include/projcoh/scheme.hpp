#pragma once
#include <optional>
#include <string>
#include <vector>

#include "projcoh/linalg.hpp"

namespace projcoh {

// one Γ-orbit family of parallel rational affine singular spaces: direction
// sublattice (saturated) plus a rational translate
struct SingularFamily {
  std::string label;
  HermiteBasis direction;   // saturated sublattice of Z^N, canonical HNF
  std::vector<Rat> offset;  // canonical modulo Z^N + Q-span(direction)

  bool same_class(const SingularFamily& o) const {
    return direction == o.direction && offset == o.offset;
  }
  bool operator==(const SingularFamily&) const = default;
};

struct SchemeSpec {
  std::string name;
  long ambient_rank = 0;  // N
  long codim = 0;         // n
  std::vector<SingularFamily> families;

  long dim() const { return ambient_rank - codim; }  // d
  long nu() const { return ambient_rank / codim; }   // ν
  bool operator==(const SchemeSpec&) const = default;
};

// canonical representative of offset modulo Z^N + Q-span(direction): project
// along the direction span to zero the HNF pivot rows, then reduce the
// complementary coordinates modulo the full projected lattice π(Z^N)
std::vector<Rat> canonical_offset(const HermiteBasis& direction, const std::vector<Rat>& offset);

// kernel_basis(m - 1), i.e. the saturated fixed lattice of an integral
// point-group element
HermiteBasis fixed_sublattice(const IntMatrix& m);

// structural construction: checks ν integrality, direction rank ν(n-1),
// saturation, offset lengths; canonicalizes offsets; rejects duplicates.
// throws std::invalid_argument on breach.
SchemeSpec make_scheme(const std::string& name, long ambient_rank, long codim,
                       std::vector<SingularFamily> families);

// built-in catalog
std::vector<std::string> catalog_names();
SchemeSpec builtin_scheme(const std::string& name, std::optional<Rat> gamma = std::nullopt);

// scheme JSON: {"name","rank","codim","families":[{"label","direction":[[col]...],
// "offset":["p/q"...]}]}; rationals are strings; unknown keys rejected
SchemeSpec scheme_from_json(const std::string& text);
SchemeSpec load_scheme_file(const std::string& path);
std::string scheme_to_json(const SchemeSpec& s);

// mathematical validation report (closure checks live in the arrangement code)
struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};
ValidationReport validate_rationality(const SchemeSpec& s);

}  // namespace projcoh
