#include "projcoh/exterior.hpp"

#include <stdexcept>

namespace projcoh {

WedgeIndex wedge_index(long n, long k) {
  WedgeIndex w{n, k, {}};
  if (k < 0 || k > n) return w;
  std::vector<long> cur(k);
  for (long i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    w.subsets.push_back(cur);
    long i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (long j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return w;
}

IntMatrix wedge_matrix(const IntMatrix& m, long k) {
  if (k < 0) throw std::invalid_argument("wedge_matrix: negative degree");
  WedgeIndex ri = wedge_index(m.rows, k), ci = wedge_index(m.cols, k);
  IntMatrix w(static_cast<long>(ri.subsets.size()), static_cast<long>(ci.subsets.size()));
  for (size_t i = 0; i < ri.subsets.size(); ++i)
    for (size_t j = 0; j < ci.subsets.size(); ++j) {
      IntMatrix sub(k, k);
      for (long a = 0; a < k; ++a)
        for (long b = 0; b < k; ++b) sub.at(a, b) = m.at(ri.subsets[i][a], ci.subsets[j][b]);
      w.at(static_cast<long>(i), static_cast<long>(j)) = det(sub);
    }
  return w;
}

ExteriorMap exterior_power_map(const HermiteBasis& basis, long k) {
  if (k > basis.ambient_rank) throw std::invalid_argument("exterior_power_map: k > N");
  return ExteriorMap{basis, k, wedge_matrix(basis.basis, k)};
}

long generated_rank(const std::vector<ExteriorMap>& maps) {
  if (maps.empty()) return 0;
  long n = maps[0].source_basis.ambient_rank, k = maps[0].degree;
  IntMatrix acc(binomial_l(n, k), 0);
  for (const ExteriorMap& m : maps) {
    if (m.source_basis.ambient_rank != n || m.degree != k)
      throw std::invalid_argument("generated_rank: mismatched ambient or degree");
    acc = hstack(acc, m.matrix);
  }
  return rank(acc);
}

}  // namespace projcoh
