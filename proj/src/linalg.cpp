#include "projcoh/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace projcoh {

// --- IntMatrix ---------------------------------------------------------------

IntMatrix IntMatrix::identity(long n) {
  IntMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rws) {
  long r = static_cast<long>(rws.size());
  long c = r ? static_cast<long>(rws.begin()->size()) : 0;
  IntMatrix m(r, c);
  long i = 0;
  for (const auto& row : rws) {
    assert(static_cast<long>(row.size()) == c);
    long j = 0;
    for (long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

bool IntMatrix::is_zero() const {
  for (const Int& v : entries)
    if (v != 0) return false;
  return true;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols, rows);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::negated() const {
  IntMatrix t = *this;
  for (Int& v : t.entries) v = -v;
  return t;
}

std::vector<Int> IntMatrix::col(long j) const {
  std::vector<Int> v(rows);
  for (long i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

std::vector<Int> IntMatrix::row(long i) const {
  std::vector<Int> v(cols);
  for (long j = 0; j < cols; ++j) v[j] = at(i, j);
  return v;
}

IntMatrix IntMatrix::cols_slice(const std::vector<long>& idx) const {
  IntMatrix m(rows, static_cast<long>(idx.size()));
  for (long j = 0; j < m.cols; ++j)
    for (long i = 0; i < rows; ++i) m.at(i, j) = at(i, idx[j]);
  return m;
}

IntMatrix IntMatrix::rows_slice(const std::vector<long>& idx) const {
  IntMatrix m(static_cast<long>(idx.size()), cols);
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < cols; ++j) m.at(i, j) = at(idx[i], j);
  return m;
}

void IntMatrix::swap_cols(long i, long j) {
  if (i == j) return;
  for (long r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_col(long j) {
  for (long r = 0; r < rows; ++r) at(r, j) = -at(r, j);
}

void IntMatrix::addmul_col(long i, long j, const Int& q) {
  if (q == 0) return;
  for (long r = 0; r < rows; ++r) at(r, i) += q * at(r, j);
}

void IntMatrix::combine_cols(long i, long j, const Int& a, const Int& b, const Int& c,
                             const Int& d) {
  for (long r = 0; r < rows; ++r) {
    Int x = at(r, i), y = at(r, j);
    at(r, i) = a * x + b * y;
    at(r, j) = c * x + d * y;
  }
}

void IntMatrix::swap_rows(long i, long j) {
  if (i == j) return;
  for (long c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::negate_row(long i) {
  for (long c = 0; c < cols; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::addmul_row(long i, long j, const Int& q) {
  if (q == 0) return;
  for (long c = 0; c < cols; ++c) at(i, c) += q * at(j, c);
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (long i = 0; i < rows; ++i) {
    os << (i ? " [" : "[");
    for (long j = 0; j < cols; ++j) os << (j ? " " : "") << at(i, j).get_str();
    os << "]";
    if (i + 1 < rows) os << "\n";
  }
  os << "]";
  return os.str();
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  assert(a.cols == b.rows);
  IntMatrix m(a.rows, b.cols);
  for (long i = 0; i < a.rows; ++i)
    for (long k = 0; k < a.cols; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (long j = 0; j < b.cols; ++j) m.at(i, j) += aik * b.at(k, j);
    }
  return m;
}

std::vector<Int> mul(const IntMatrix& a, const std::vector<Int>& x) {
  assert(a.cols == static_cast<long>(x.size()));
  std::vector<Int> y(a.rows);
  for (long i = 0; i < a.rows; ++i)
    for (long j = 0; j < a.cols; ++j) y[i] += a.at(i, j) * x[j];
  return y;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  assert(a.rows == b.rows || a.cols == 0 || b.cols == 0);
  long rows = a.cols ? a.rows : b.rows;
  if (a.cols && b.cols) assert(a.rows == b.rows);
  IntMatrix m(rows, a.cols + b.cols);
  for (long i = 0; i < rows; ++i) {
    for (long j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
    for (long j = 0; j < b.cols; ++j) m.at(i, a.cols + j) = b.at(i, j);
  }
  return m;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  long cols = a.rows ? a.cols : b.cols;
  if (a.rows && b.rows) assert(a.cols == b.cols);
  IntMatrix m(a.rows + b.rows, cols);
  for (long i = 0; i < a.rows; ++i)
    for (long j = 0; j < cols; ++j) m.at(i, j) = a.at(i, j);
  for (long i = 0; i < b.rows; ++i)
    for (long j = 0; j < cols; ++j) m.at(a.rows + i, j) = b.at(i, j);
  return m;
}

// Bareiss fraction-free determinant.
Int det(const IntMatrix& a) {
  assert(a.rows == a.cols);
  long n = a.rows;
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (long k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      long p = -1;
      for (long i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i)
      for (long j = k + 1; j < n; ++j) {
        Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

// --- RatMatrix ---------------------------------------------------------------

RatMatrix::RatMatrix(const IntMatrix& m) : rows(m.rows), cols(m.cols), entries(m.entries.size()) {
  for (size_t i = 0; i < entries.size(); ++i) entries[i] = Rat(m.entries[i]);
}

RatMatrix mul(const RatMatrix& a, const RatMatrix& b) {
  assert(a.cols == b.rows);
  RatMatrix m(a.rows, b.cols);
  for (long i = 0; i < a.rows; ++i)
    for (long k = 0; k < a.cols; ++k) {
      const Rat& aik = a.at(i, k);
      if (aik == 0) continue;
      for (long j = 0; j < b.cols; ++j) m.at(i, j) += aik * b.at(k, j);
    }
  return m;
}

std::vector<Rat> mul(const RatMatrix& a, const std::vector<Rat>& x) {
  assert(a.cols == static_cast<long>(x.size()));
  std::vector<Rat> y(a.rows);
  for (long i = 0; i < a.rows; ++i)
    for (long j = 0; j < a.cols; ++j) y[i] += a.at(i, j) * x[j];
  return y;
}

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
  long rows = a.cols ? a.rows : b.rows;
  if (a.cols && b.cols) assert(a.rows == b.rows);
  RatMatrix m(rows, a.cols + b.cols);
  for (long i = 0; i < rows; ++i) {
    for (long j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
    for (long j = 0; j < b.cols; ++j) m.at(i, a.cols + j) = b.at(i, j);
  }
  return m;
}

IntMatrix scale_to_int(const RatMatrix& a, Int* denom_out) {
  Int d = 1;
  for (const Rat& x : a.entries) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den().get_mpz_t());
  IntMatrix m(a.rows, a.cols);
  for (size_t i = 0; i < a.entries.size(); ++i) {
    Rat v = a.entries[i] * Rat(d);
    assert(v.get_den() == 1);
    m.entries[i] = v.get_num();
  }
  if (denom_out) *denom_out = d;
  return m;
}

// --- column echelon core -------------------------------------------------------

// Column-style HNF reduction in place by unimodular column operations; mirrors
// the operations onto *v when given. Returns pivot rows in order. When
// reduce_left is false only the echelon profile is produced (enough for rank).
static std::vector<long> col_echelon(IntMatrix& m, IntMatrix* v, bool reduce_left) {
  std::vector<long> pivot_rows;
  long pc = 0;
  for (long r = 0; r < m.rows && pc < m.cols; ++r) {
    long c0 = -1;
    for (long c = pc; c < m.cols; ++c)
      if (m.at(r, c) != 0) {
        c0 = c;
        break;
      }
    if (c0 < 0) continue;
    m.swap_cols(pc, c0);
    if (v) v->swap_cols(pc, c0);
    for (long c = pc + 1; c < m.cols; ++c) {
      if (m.at(r, c) == 0) continue;
      Int a = m.at(r, pc), b = m.at(r, c), g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Int ag = a / g, bg = b / g;
      m.combine_cols(pc, c, x, y, -bg, ag);
      if (v) v->combine_cols(pc, c, x, y, -bg, ag);
    }
    if (m.at(r, pc) < 0) {
      m.negate_col(pc);
      if (v) v->negate_col(pc);
    }
    if (reduce_left) {
      for (long c = 0; c < pc; ++c) {
        if (m.at(r, c) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m.at(r, c).get_mpz_t(), m.at(r, pc).get_mpz_t());
        if (q != 0) {
          m.addmul_col(c, pc, -q);
          if (v) v->addmul_col(c, pc, -q);
        }
      }
    }
    pivot_rows.push_back(r);
    ++pc;
  }
  return pivot_rows;
}

HermiteBasis hnf(const IntMatrix& a) {
  IntMatrix m = a;
  std::vector<long> piv = col_echelon(m, nullptr, true);
  std::vector<long> keep(piv.size());
  for (size_t i = 0; i < piv.size(); ++i) keep[i] = static_cast<long>(i);
  return HermiteBasis{a.rows, m.cols_slice(keep)};
}

long rank(const IntMatrix& a) {
  IntMatrix m = a;
  return static_cast<long>(col_echelon(m, nullptr, false).size());
}

long rank(const RatMatrix& a) { return rank(scale_to_int(a)); }

IntMatrix kernel_basis(const IntMatrix& a) {
  IntMatrix m = vstack(a, IntMatrix::identity(a.cols));
  col_echelon(m, nullptr, false);
  std::vector<long> ker_cols;
  for (long c = 0; c < m.cols; ++c) {
    bool top_zero = true;
    for (long r = 0; r < a.rows && top_zero; ++r) top_zero = (m.at(r, c) == 0);
    if (top_zero) ker_cols.push_back(c);
  }
  IntMatrix k(a.cols, static_cast<long>(ker_cols.size()));
  for (long j = 0; j < k.cols; ++j)
    for (long i = 0; i < a.cols; ++i) k.at(i, j) = m.at(a.rows + i, ker_cols[j]);
  return hnf(k).basis;
}

// --- Smith normal form ----------------------------------------------------------

namespace {

struct SnfWork {
  IntMatrix s;
  IntMatrix *u = nullptr, *v = nullptr;

  void swap_rows(long i, long j) {
    s.swap_rows(i, j);
    if (u) u->swap_rows(i, j);
  }
  void negate_row(long i) {
    s.negate_row(i);
    if (u) u->negate_row(i);
  }
  void addmul_row(long i, long j, const Int& q) {
    s.addmul_row(i, j, q);
    if (u) u->addmul_row(i, j, q);
  }
  void swap_cols(long i, long j) {
    s.swap_cols(i, j);
    if (v) v->swap_cols(i, j);
  }
  void addmul_col(long i, long j, const Int& q) {
    s.addmul_col(i, j, q);
    if (v) v->addmul_col(i, j, q);
  }

  // smallest |nonzero| in s[t..][t..]; false if block is zero
  bool find_pivot(long t, long& pi, long& pj) {
    bool found = false;
    Int best;
    for (long i = t; i < s.rows; ++i)
      for (long j = t; j < s.cols; ++j) {
        const Int& x = s.at(i, j);
        if (x == 0) continue;
        Int ax = abs(x);
        if (!found || ax < best) {
          found = true;
          best = ax;
          pi = i;
          pj = j;
          if (best == 1) return true;
        }
      }
    return found;
  }

  void reduce() {
    long n = std::min(s.rows, s.cols);
    for (long t = 0; t < n; ++t) {
      long pi, pj;
      if (!find_pivot(t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool stable = false;
      while (!stable) {
        stable = true;
        if (s.at(t, t) < 0) negate_row(t);
        // clear column t
        for (long i = 0; i < s.rows; ++i) {
          if (i == t || s.at(i, t) == 0) continue;
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), s.at(i, t).get_mpz_t(), s.at(t, t).get_mpz_t());
          addmul_row(i, t, -q);
          if (s.at(i, t) != 0) {
            swap_rows(t, i);  // strictly smaller pivot
            stable = false;
            break;
          }
        }
        if (!stable) continue;
        // clear row t
        for (long j = 0; j < s.cols; ++j) {
          if (j == t || s.at(t, j) == 0) continue;
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), s.at(t, j).get_mpz_t(), s.at(t, t).get_mpz_t());
          addmul_col(j, t, -q);
          if (s.at(t, j) != 0) {
            swap_cols(t, j);
            stable = false;
            break;
          }
        }
        if (!stable) continue;
        // pivot must divide the rest of the block
        for (long i = t + 1; i < s.rows && stable; ++i)
          for (long j = t + 1; j < s.cols && stable; ++j) {
            if (s.at(i, j) % s.at(t, t) != 0) {
              addmul_row(t, i, 1);
              stable = false;
            }
          }
      }
    }
  }

  std::vector<Int> invariants() const {
    std::vector<Int> inv;
    long n = std::min(s.rows, s.cols);
    for (long t = 0; t < n; ++t) {
      if (s.at(t, t) == 0) break;
      inv.push_back(s.at(t, t));
    }
    return inv;
  }
};

}  // namespace

SmithDecomposition snf(const IntMatrix& a) {
  SmithDecomposition d;
  d.u = IntMatrix::identity(a.rows);
  d.v = IntMatrix::identity(a.cols);
  SnfWork w{a, &d.u, &d.v};
  w.reduce();
  d.s = w.s;
  d.invariants = w.invariants();
  return d;
}

std::vector<Int> snf_invariants(const IntMatrix& a) {
  SnfWork w{a, nullptr, nullptr};
  w.reduce();
  return w.invariants();
}

AbelianGroup cokernel(const IntMatrix& a) {
  std::vector<Int> inv = snf_invariants(a);
  AbelianGroup g;
  g.free_rank = a.rows - static_cast<long>(inv.size());
  for (const Int& d : inv)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

// --- AbelianGroup -----------------------------------------------------------------

std::string AbelianGroup::str() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  else if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (size_t i = 0; i < torsion.size();) {
    size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
    std::string p = "Z_" + torsion[i].get_str();
    if (j - i > 1) p += "^" + std::to_string(j - i);
    parts.push_back(p);
    i = j;
  }
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

namespace {

// order -> prime -> exponent multiset, descending
std::map<Int, std::vector<long>> prime_partitions(const std::vector<Int>& torsion) {
  std::map<Int, std::vector<long>> out;
  for (Int d : torsion) {
    for (Int p = 2; p * p <= d; ++p) {
      if (d % p != 0) continue;
      long e = 0;
      while (d % p == 0) {
        d /= p;
        ++e;
      }
      out[p].push_back(e);
    }
    if (d > 1) out[d].push_back(1);
  }
  for (auto& [p, v] : out) std::sort(v.begin(), v.end(), std::greater<>());
  return out;
}

std::vector<Int> chain_from_partitions(const std::map<Int, std::vector<long>>& parts) {
  size_t k = 0;
  for (const auto& [p, v] : parts) k = std::max(k, v.size());
  std::vector<Int> chain(k, Int(1));  // chain[0] = largest invariant
  for (const auto& [p, v] : parts)
    for (size_t i = 0; i < v.size(); ++i) {
      Int pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(v[i]));
      chain[i] *= pe;
    }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

void subpartitions_rec(const std::vector<long>& lam, size_t i, long prev,
                       std::vector<long>& cur, std::vector<std::vector<long>>& out) {
  out.push_back(cur);  // stopping here = trailing zeros
  if (i >= lam.size()) return;
  for (long m = std::min(prev, lam[i]); m >= 1; --m) {
    cur.push_back(m);
    subpartitions_rec(lam, i + 1, m, cur, out);
    cur.pop_back();
  }
}

}  // namespace

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<Int> all = a.torsion;
  all.insert(all.end(), b.torsion.begin(), b.torsion.end());
  AbelianGroup g;
  g.free_rank = a.free_rank + b.free_rank;
  g.torsion = chain_from_partitions(prime_partitions(all));
  return g;
}

std::vector<AbelianGroup> subgroup_types(const AbelianGroup& g) {
  std::map<Int, std::vector<long>> parts = prime_partitions(g.torsion);
  // per-prime sub-partition lists
  std::vector<Int> primes;
  std::vector<std::vector<std::vector<long>>> subs;
  for (const auto& [p, lam] : parts) {
    primes.push_back(p);
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    subpartitions_rec(lam, 0, lam.empty() ? 0 : lam[0], cur, out);
    // dedupe (identical partial stops repeat)
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    subs.push_back(out);
  }
  std::vector<AbelianGroup> types;
  std::vector<size_t> pick(primes.size(), 0);
  while (true) {
    std::map<Int, std::vector<long>> combo;
    for (size_t i = 0; i < primes.size(); ++i)
      if (!subs[i][pick[i]].empty()) combo[primes[i]] = subs[i][pick[i]];
    types.push_back(AbelianGroup{0, chain_from_partitions(combo)});
    size_t i = 0;
    for (; i < primes.size(); ++i) {
      if (++pick[i] < subs[i].size()) break;
      pick[i] = 0;
    }
    if (i == primes.size()) break;
    if (primes.empty()) break;
  }
  auto order_of = [](const AbelianGroup& t) {
    Int o = 1;
    for (const Int& d : t.torsion) o *= d;
    return o;
  };
  std::sort(types.begin(), types.end(), [&](const AbelianGroup& x, const AbelianGroup& y) {
    Int ox = order_of(x), oy = order_of(y);
    if (ox != oy) return ox < oy;
    return x.torsion < y.torsion;
  });
  types.erase(std::unique(types.begin(), types.end()), types.end());
  return types;
}

// --- lattice operations -----------------------------------------------------------

HermiteBasis lattice_sum(const std::vector<HermiteBasis>& xs) {
  if (xs.empty()) throw std::invalid_argument("lattice_sum: empty list");
  long amb = xs[0].ambient_rank;
  IntMatrix acc(amb, 0);
  for (const HermiteBasis& x : xs) {
    if (x.ambient_rank != amb) throw std::invalid_argument("lattice_sum: ambient rank mismatch");
    acc = hstack(acc, x.basis);
  }
  return hnf(acc);
}

HermiteBasis lattice_intersection(const HermiteBasis& x, const HermiteBasis& y) {
  if (x.ambient_rank != y.ambient_rank)
    throw std::invalid_argument("lattice_intersection: ambient rank mismatch");
  if (x.rank() == 0 || y.rank() == 0) return HermiteBasis{x.ambient_rank, IntMatrix(x.ambient_rank, 0)};
  IntMatrix k = kernel_basis(hstack(x.basis, y.basis.negated()));
  std::vector<long> top(x.rank());
  for (long i = 0; i < x.rank(); ++i) top[i] = i;
  IntMatrix coeff = k.rows_slice(top);
  return hnf(mul(x.basis, coeff));
}

HermiteBasis saturate(const HermiteBasis& x) {
  IntMatrix left_ker = kernel_basis(x.basis.transposed());  // N x m
  IntMatrix sat = kernel_basis(left_ker.transposed());      // {v : left_ker^T v = 0}
  return HermiteBasis{x.ambient_rank, sat};
}

bool lattice_contains(const HermiteBasis& lat, const std::vector<Int>& v) {
  assert(static_cast<long>(v.size()) == lat.ambient_rank);
  std::vector<Int> w = v;
  const IntMatrix& b = lat.basis;
  for (long j = 0; j < b.cols; ++j) {
    long pr = -1;
    for (long i = 0; i < b.rows; ++i)
      if (b.at(i, j) != 0) {
        pr = i;
        break;
      }
    assert(pr >= 0);
    if (w[pr] % b.at(pr, j) != 0) return false;
    Int q = w[pr] / b.at(pr, j);
    if (q != 0)
      for (long i = 0; i < b.rows; ++i) w[i] -= q * b.at(i, j);
  }
  for (const Int& e : w)
    if (e != 0) return false;
  return true;
}

bool span_contained(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols == 0) return true;
  assert(x.rows == y.rows);
  return rank(y) == rank(hstack(y, x));
}

std::vector<std::vector<Int>> coset_representatives(const HermiteBasis& sub,
                                                    const HermiteBasis& super) {
  if (sub.ambient_rank != super.ambient_rank)
    throw std::invalid_argument("coset_representatives: ambient rank mismatch");
  if (sub.rank() != super.rank())
    throw std::invalid_argument("coset_representatives: index is infinite");
  long r = super.rank();
  IntMatrix coords(r, sub.rank());
  for (long j = 0; j < sub.basis.cols; ++j) {
    auto x = solve_integer(super.basis, sub.basis.col(j));
    if (!x) throw std::invalid_argument("coset_representatives: not a sublattice");
    for (long i = 0; i < r; ++i) coords.at(i, j) = (*x)[i];
  }
  IntMatrix h = hnf(coords).basis;
  std::vector<std::vector<Int>> reps;
  std::vector<Int> c(r, 0);
  for (;;) {
    std::vector<Int> v(super.ambient_rank, 0);
    for (long i = 0; i < super.ambient_rank; ++i)
      for (long k = 0; k < r; ++k) v[i] += super.basis.at(i, k) * c[k];
    reps.push_back(std::move(v));
    long pos = r - 1;
    while (pos >= 0) {
      c[pos] += 1;
      if (c[pos] < h.at(pos, pos)) break;
      c[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return reps;
}

// --- solving ------------------------------------------------------------------------

std::optional<std::vector<Rat>> solve_rational(const RatMatrix& a, const std::vector<Rat>& b) {
  assert(a.rows == static_cast<long>(b.size()));
  RatMatrix m = hstack(a, [&] {
    RatMatrix c(a.rows, 1);
    for (long i = 0; i < a.rows; ++i) c.at(i, 0) = b[i];
    return c;
  }());
  long r = 0;
  std::vector<long> pivot_col;
  for (long c = 0; c < a.cols && r < m.rows; ++c) {
    long p = -1;
    for (long i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    for (long j = 0; j <= a.cols; ++j) std::swap(m.at(r, j), m.at(p, j));
    Rat inv = m.at(r, c);
    for (long j = 0; j <= a.cols; ++j) m.at(r, j) /= inv;
    for (long i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (long j = 0; j <= a.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (long i = r; i < m.rows; ++i)
    if (m.at(i, a.cols) != 0) return std::nullopt;
  std::vector<Rat> x(a.cols, Rat(0));
  for (long i = 0; i < r; ++i) x[pivot_col[i]] = m.at(i, a.cols);
  return x;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b) {
  assert(a.rows == static_cast<long>(b.size()));
  SmithDecomposition d = snf(a);
  std::vector<Int> ub = mul(d.u, b);
  std::vector<Int> w(a.cols, Int(0));
  long k = static_cast<long>(d.invariants.size());
  for (long i = 0; i < a.rows; ++i) {
    if (i < k) {
      if (ub[i] % d.invariants[i] != 0) return std::nullopt;
      if (i < a.cols) w[i] = ub[i] / d.invariants[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return mul(d.v, w);
}

std::optional<IntMatrix> solve_integer_many(const IntMatrix& a, const IntMatrix& b) {
  assert(a.rows == b.rows);
  SmithDecomposition d = snf(a);
  IntMatrix ub = mul(d.u, b);
  IntMatrix x(a.cols, b.cols);
  long k = static_cast<long>(d.invariants.size());
  for (long j = 0; j < b.cols; ++j) {
    std::vector<Int> w(a.cols, Int(0));
    for (long i = 0; i < a.rows; ++i) {
      if (i < k) {
        if (ub.at(i, j) % d.invariants[i] != 0) return std::nullopt;
        if (i < a.cols) w[i] = ub.at(i, j) / d.invariants[i];
      } else if (ub.at(i, j) != 0) {
        return std::nullopt;
      }
    }
    std::vector<Int> xc = mul(d.v, w);
    for (long i = 0; i < a.cols; ++i) x.at(i, j) = xc[static_cast<size_t>(i)];
  }
  return x;
}

std::optional<ModLatticeSolution> solve_mod_lattice(const RatMatrix& a, const std::vector<Rat>& b,
                                                    const HermiteBasis& l) {
  assert(a.rows == static_cast<long>(b.size()));
  assert(l.ambient_rank == a.rows);
  // scale a, b, l by one denominator: a x - b in L  <=>  A x - B in D*L
  Int d = 1;
  for (const Rat& x : a.entries) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den().get_mpz_t());
  for (const Rat& x : b) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den().get_mpz_t());
  IntMatrix ai(a.rows, a.cols);
  for (long i = 0; i < a.rows; ++i)
    for (long j = 0; j < a.cols; ++j) {
      Rat v = a.at(i, j) * Rat(d);
      ai.at(i, j) = v.get_num();
    }
  std::vector<Int> bi(b.size());
  for (size_t i = 0; i < b.size(); ++i) {
    Rat v = b[i] * Rat(d);
    bi[i] = v.get_num();
  }
  IntMatrix lm = l.basis;
  for (Int& e : lm.entries) e *= d;
  IntMatrix c = hstack(ai, lm.negated());
  std::optional<std::vector<Int>> z = solve_integer(c, bi);
  if (!z) return std::nullopt;
  ModLatticeSolution sol;
  sol.particular.resize(a.cols);
  for (long j = 0; j < a.cols; ++j) sol.particular[j] = Rat((*z)[j]);
  IntMatrix k = kernel_basis(c);
  std::vector<long> top(a.cols);
  for (long i = 0; i < a.cols; ++i) top[i] = i;
  sol.homogeneous = hnf(k.rows_slice(top));
  return sol;
}

}  // namespace projcoh
