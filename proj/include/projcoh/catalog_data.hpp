#pragma once
#include <string>
#include <vector>

namespace projcoh::detail {

// Raw built-in scheme data as emitted by tools/derive_catalog.py. Directions
// are lists of column vectors; offsets are "p/q" literals, one per ambient
// coordinate.
struct RawFamily {
  std::string label;
  std::vector<std::vector<long long>> direction_cols;
  std::vector<std::string> offset;
};

struct RawScheme {
  std::string name;
  long rank;
  long codim;
  std::vector<RawFamily> families;
};

const std::vector<RawScheme>& raw_catalog();

// point-group generators used by catalog integrity checks (row-major; columns
// of the matrix are the images of basis vectors)
const std::vector<std::vector<long long>>& rotation_8();
const std::vector<std::vector<long long>>& rotation_10();
const std::vector<std::vector<long long>>& rotation_12();
const std::vector<std::vector<long long>>& rotation_14();
// rows = basis of the face-centered sublattice expressed in the primitive basis
const std::vector<std::vector<long long>>& icosa_F_basis_in_P();

}  // namespace projcoh::detail
