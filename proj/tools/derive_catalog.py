#!/usr/bin/env python3
"""Derives the built-in scheme catalog (lattice data for the dihedral and
icosahedral families) with exact integer arithmetic, and emits

  * schemes/<name>.json         -- the shipped catalog files
  * src/catalog_data.cpp        -- the embedded literal data

The derivation is purely algebraic:

  dihedral 2n (n = 8, 10, 12, 14):
    Gamma = Z^phi(n), rotation R = companion matrix of the n-th cyclotomic
    polynomial.  Singular-line direction lattices are the fixed lattices of
    the integral mirrors: conj (zeta -> zeta^-1) fixes the line along e_0,
    R*conj fixes the line along e_0+e_1; the other families are R-rotates.

  icosahedral (rank 6):
    Gamma_P = Z^6 spanned by a star of six 5-fold axis vectors; the point
    group acts by signed permutations preserving the tau-Gram matrix.  The
    direction lattice of the plane family perpendicular to an axis is the
    integer orthogonal complement (standard dot product) of the rational
    fixed plane of a rotation about that axis.  The F/I-centred variants are
    obtained by exact base change.
"""

from fractions import Fraction
from itertools import permutations, product
import json
import os

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


# ---------------------------------------------------------------------------
# exact integer linear algebra (tiny dimensions only)

def mat_mul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    assert len(A[0]) == m
    return [[sum(A[i][k] * B[k][j] for k in range(m)) for j in range(p)]
            for i in range(n)]


def mat_vec(A, v):
    return [sum(A[i][k] * v[k] for k in range(len(v))) for i in range(len(A))]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(A):
    return [list(r) for r in zip(*A)]


def col_hnf(cols, nrows):
    """Column-style HNF: pivots top-to-bottom, positive, entries left of a
    pivot reduced into [0, pivot). Returns list of basis columns."""
    cols = [list(c) for c in cols]
    r = 0
    for i in range(nrows):
        # clear row i among columns >= r
        while True:
            js = [j for j in range(r, len(cols)) if cols[j][i] != 0]
            if len(js) <= 1:
                break
            js.sort(key=lambda j: abs(cols[j][i]))
            p = js[0]
            for j in js[1:]:
                q = cols[j][i] // cols[p][i]
                cols[j] = [a - q * b for a, b in zip(cols[j], cols[p])]
        js = [j for j in range(r, len(cols)) if cols[j][i] != 0]
        if not js:
            continue
        p = js[0]
        cols[r], cols[p] = cols[p], cols[r]
        if cols[r][i] < 0:
            cols[r] = [-a for a in cols[r]]
        for k in range(r):
            q = cols[k][i] // cols[r][i]
            if q:
                cols[k] = [a - q * b for a, b in zip(cols[k], cols[r])]
        r += 1
    return [c for c in cols[:r]]


def int_kernel(A):
    """Saturated integer kernel basis (columns) of integer matrix A."""
    n, m = len(A), len(A[0])
    # column HNF with transform V
    cols = [[A[i][j] for i in range(n)] for j in range(m)]
    V = [[1 if i == j else 0 for i in range(m)] for j in range(m)]  # V[j] = col j
    r = 0
    for i in range(n):
        while True:
            js = [j for j in range(r, m) if cols[j][i] != 0]
            if len(js) <= 1:
                break
            js.sort(key=lambda j: abs(cols[j][i]))
            p = js[0]
            for j in js[1:]:
                q = cols[j][i] // cols[p][i]
                cols[j] = [a - q * b for a, b in zip(cols[j], cols[p])]
                V[j] = [a - q * b for a, b in zip(V[j], V[p])]
        js = [j for j in range(r, m) if cols[j][i] != 0]
        if not js:
            continue
        p = js[0]
        cols[r], cols[p] = cols[p], cols[r]
        V[r], V[p] = V[p], V[r]
        r += 1
    ker = [V[j] for j in range(r, m)]
    return col_hnf(ker, m)


def det(A):
    A = [[Fraction(x) for x in row] for row in A]
    n = len(A)
    d = Fraction(1)
    for i in range(n):
        p = next((r for r in range(i, n) if A[r][i] != 0), None)
        if p is None:
            return Fraction(0)
        if p != i:
            A[i], A[p] = A[p], A[i]
            d = -d
        d *= A[i][i]
        for r in range(i + 1, n):
            f = A[r][i] / A[i][i]
            A[r] = [a - f * b for a, b in zip(A[r], A[i])]
    return d


def solve_rational(A, b):
    """Solve A x = b over Q (A full column rank).  Returns list of Fractions."""
    n, m = len(A), len(A[0])
    M = [[Fraction(A[i][j]) for j in range(m)] + [Fraction(b[i])] for i in range(n)]
    piv = []
    row = 0
    for j in range(m):
        p = next((r for r in range(row, n) if M[r][j] != 0), None)
        if p is None:
            continue
        M[row], M[p] = M[p], M[row]
        M[row] = [x / M[row][j] for x in M[row]]
        for r in range(n):
            if r != row and M[r][j] != 0:
                f = M[r][j]
                M[r] = [a - f * b2 for a, b2 in zip(M[r], M[row])]
        piv.append(j)
        row += 1
    x = [Fraction(0)] * m
    for k, j in enumerate(piv):
        x[j] = M[k][m]
    # verify
    for i in range(n):
        assert sum(Fraction(A[i][j]) * x[j] for j in range(m)) == Fraction(b[i])
    return x


# ---------------------------------------------------------------------------
# dihedral families

CYCLO = {
    8:  [1, 0, 0, 0, 1],            # x^4 + 1
    10: [1, -1, 1, -1, 1],          # x^4 - x^3 + x^2 - x + 1
    12: [1, 0, -1, 0, 1],           # x^4 - x^2 + 1
    14: [1, -1, 1, -1, 1, -1, 1],   # x^6 - x^5 + x^4 - x^3 + x^2 - x + 1
}


def poly_mod(p, phi):
    """Reduce polynomial p (coeff list, low degree first) mod phi (monic)."""
    p = list(p)
    d = len(phi) - 1
    while len(p) > d:
        c = p.pop()
        if c:
            for k in range(d):
                p[len(p) - d + k] -= c * phi[k]
    while len(p) < d:
        p.append(0)
    return p


def zeta_power(k, n):
    phi = CYCLO[n]
    p = [0] * (k % n) + [1]
    return poly_mod(p, phi)


def dihedral_data(n):
    phi = CYCLO[n]
    d = len(phi) - 1
    # rotation: multiplication by zeta
    R = transpose([zeta_power(j + 1, n) for j in range(d)])
    # conjugation: zeta^j -> zeta^(n-j)
    C = transpose([zeta_power((n - j) % n, n) for j in range(d)])
    RC = mat_mul(R, C)
    fix_a = int_kernel([[C[i][j] - (1 if i == j else 0) for j in range(d)]
                        for i in range(d)])
    fix_b = int_kernel([[RC[i][j] - (1 if i == j else 0) for j in range(d)]
                        for i in range(d)])
    a_dirs, b_dirs = [], []
    cur_a, cur_b = fix_a, fix_b
    for _ in range(n // 2):
        a_dirs.append(col_hnf(cur_a, d))
        b_dirs.append(col_hnf(cur_b, d))
        cur_a = [mat_vec(R, c) for c in cur_a]
        cur_b = [mat_vec(R, c) for c in cur_b]
    return R, a_dirs, b_dirs


# ---------------------------------------------------------------------------
# icosahedral families

class Tau:
    """a + b*tau with tau^2 = 1 + tau."""
    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a, self.b = a, b

    def __mul__(self, o):
        return Tau(self.a * o.a + self.b * o.b,
                   self.a * o.b + self.b * o.a + self.b * o.b)

    def __add__(self, o):
        return Tau(self.a + o.a, self.b + o.b)

    def __neg__(self):
        return Tau(-self.a, -self.b)

    def __eq__(self, o):
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"({self.a}+{self.b}t)"


def icosa_data():
    t = Tau(0, 1)
    one = Tau(1)
    zero = Tau(0)
    # star of six 5-fold axis vectors (vertices of an icosahedron)
    axes = [
        (zero, one, t), (t, zero, one), (one, t, zero),
        (-one, t, zero), (t, zero, -one), (zero, -one, t),
    ]

    def dot(u, v):
        return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]

    G = [[dot(axes[i], axes[j]) for j in range(6)] for i in range(6)]

    group = []
    for sigma in permutations(range(6)):
        # determine signs greedily: s_i s_j G[sigma i][sigma j] == G[i][j]
        ok = True
        for signs in product((1, -1), repeat=6):
            good = True
            for i in range(6):
                for j in range(i, 6):
                    lhs = G[sigma[i]][sigma[j]]
                    want = G[i][j]
                    v = Tau(lhs.a * signs[i] * signs[j], lhs.b * signs[i] * signs[j])
                    if v != want:
                        good = False
                        break
                if not good:
                    break
            if good:
                M = [[0] * 6 for _ in range(6)]
                for j in range(6):
                    M[sigma[j]][j] = signs[j]
                group.append(tuple(map(tuple, M)))
        if not ok:
            continue
    group = [list(map(list, M)) for M in set(group)]
    assert len(group) == 120, len(group)

    def order(M):
        P = M
        for k in range(1, 11):
            if P == identity(6):
                return k
            P = mat_mul(P, M)
        return 0

    def fix(M):
        return int_kernel([[M[i][j] - (1 if i == j else 0) for j in range(6)]
                           for i in range(6)])

    def perp_of_fix(M):
        f = fix(M)
        assert len(f) == 2
        return int_kernel([list(c) for c in f])  # rows = fixed vectors

    fams = {5: [], 3: [], 2: []}
    seen = {5: set(), 3: set(), 2: set()}
    for M in group:
        o = order(M)
        tr = sum(M[i][i] for i in range(6))
        k = None
        if o == 5:
            k = 5
        elif o == 3:
            k = 3
        elif o == 2 and tr == -2:
            k = 2
        if k is None:
            continue
        f = tuple(map(tuple, fix(M)))
        if f in seen[k]:
            continue
        seen[k].add(f)
        fams[k].append(col_hnf(perp_of_fix(M), 6))
    assert len(fams[5]) == 6 and len(fams[3]) == 10 and len(fams[2]) == 15, \
        (len(fams[5]), len(fams[3]), len(fams[2]))

    # F-centred sublattice: coordinate sums even (index 2)
    gens = [[2 if i == 0 else 0 for i in range(6)]]
    for j in range(1, 6):
        gens.append([1 if i in (0, j) else 0 for i in range(6)])
    BF = col_hnf(gens, 6)                       # columns, det +-2
    BF_mat = transpose([list(c) for c in BF])   # 6x6, columns = basis
    assert abs(det(BF_mat)) == 2

    def rebase_F(dir_cols):
        """Direction sublattice of Gamma_F expressed in the F basis."""
        K = int_kernel([list(c) for c in dir_cols])  # normal vectors (rows)
        KBF = mat_mul([list(c) for c in K], BF_mat)
        ker = int_kernel(KBF)
        assert len(ker) == len(dir_cols)
        return col_hnf(ker, 6)

    fams_F = {k: [rebase_F(d) for d in fams[k]] for k in fams}
    return G, group, fams, fams_F, BF_mat


# ---------------------------------------------------------------------------
# emission

def fam_json(label, cols, offs, N):
    return {
        "label": label,
        "direction": [[int(x) for x in c] for c in cols],
        "offset": [f"{f.numerator}/{f.denominator}" for f in offs],
    }


def write_scheme(name, N, codim, fams):
    obj = {"name": name, "rank": N, "codim": codim,
           "families": [fam_json(*f, N) for f in fams]}
    path = os.path.join(ROOT, "schemes", name + ".json")
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=1)
        fh.write("\n")
    return obj


def cpp_mat(cols):
    return "{" + ",".join("{" + ",".join(str(x) for x in c) + "}" for c in cols) + "}"


def cpp_offs(offs):
    return "{" + ",".join(f'"{f.numerator}/{f.denominator}"' for f in offs) + "}"


def main():
    os.makedirs(os.path.join(ROOT, "schemes"), exist_ok=True)

    zero2 = [Fraction(0)] * 4

    schemes = []  # (name, N, codim, [(label, dircols, offsets)])

    rot_mats = {}
    for n in (8, 10, 12, 14):
        R, a_dirs, b_dirs = dihedral_data(n)
        rot_mats[n] = R
        d = len(R)
        zero = [Fraction(0)] * d
        a_f = [(f"a{i}", a_dirs[i], zero) for i in range(len(a_dirs))]
        b_f = [(f"b{i}", b_dirs[i], zero) for i in range(len(b_dirs))]
        if n == 8:
            schemes.append(("ammann_beenker", d, 2, a_f))
            schemes.append(("ammann_beenker_coloured", d, 2, b_f))
            schemes.append(("ammann_beenker_decorated", d, 2, a_f + b_f))
        elif n == 10:
            schemes.append(("penrose", d, 2, a_f))
            schemes.append(("ttt", d, 2, b_f))
            # generalized penrose: a-type line directions with offsets -g*e1 and
            # g*(e1+e2), closed under the FIVEFOLD rotation R^2 only (the
            # singular set has no tenfold symmetry)
            g = Fraction(1, 3)
            gp = []
            c1 = [Fraction(0), -g, Fraction(0), Fraction(0)]
            c2 = [Fraction(0), g, g, Fraction(0)]
            R2 = mat_mul(R, R)
            for i in range(5):
                # R^(2i) D0 equals a_dirs[2i mod 5] as a lattice (R^5 = -1)
                gp.append((f"p{i}", a_dirs[(2 * i) % 5], list(c1)))
                gp.append((f"q{i}", a_dirs[(2 * i) % 5], list(c2)))
                c1 = mat_vec(R2, c1)
                c2 = mat_vec(R2, c2)
            schemes.append(("generalized_penrose", d, 2, gp))
        elif n == 12:
            schemes.append(("socolar", d, 2, a_f))
            schemes.append(("socolar_decorated", d, 2, a_f + b_f))
        elif n == 14:
            schemes.append(("heptagonal_a", d, 2, a_f))
            schemes.append(("heptagonal_b", d, 2, b_f))

    G, group, fams_P, fams_F, BF = icosa_data()
    zero6 = [Fraction(0)] * 6
    w2_P = [(f"m{i}", fams_P[2][i], zero6) for i in range(15)]
    w2_F = [(f"m{i}", fams_F[2][i], zero6) for i in range(15)]
    w5_F = [(f"p{i}", fams_F[5][i], zero6) for i in range(6)]
    w3_F = [(f"t{i}", fams_F[3][i], zero6) for i in range(10)]
    schemes.append(("ammann_kramer", 6, 3, w2_P))
    schemes.append(("dual_canonical_d6", 6, 3, w2_F))
    schemes.append(("danzer", 6, 3, w5_F))
    schemes.append(("canonical_d6", 6, 3, w5_F + w3_F))

    for s in schemes:
        write_scheme(*s)

    # ---- C++ data file ------------------------------------------------
    out = []
    out.append("// Generated by tools/derive_catalog.py -- do not edit by hand.")
    out.append("// Direction lattices are fixed lattices of integral point-group")
    out.append("// involutions (dihedral mirrors) resp. integer orthogonal")
    out.append("// complements of rotation-axis planes (icosahedral lattices).")
    out.append('#include "projcoh/catalog_data.hpp"')
    out.append("")
    out.append("namespace projcoh::detail {")
    out.append("")
    out.append("const std::vector<RawScheme>& raw_catalog() {")
    out.append("  static const std::vector<RawScheme> cat = {")
    for name, N, codim, fams in schemes:
        out.append(f'    {{"{name}", {N}, {codim}, {{')
        for label, cols, offs in fams:
            out.append(f'      {{"{label}", {cpp_mat(cols)}, {cpp_offs(offs)}}},')
        out.append("    }},")
    out.append("  };")
    out.append("  return cat;")
    out.append("}")
    out.append("")
    # aux data: rotations, icosa base change
    for n in (8, 10, 12, 14):
        out.append(f"const std::vector<std::vector<long long>>& rotation_{n}() {{")
        rows = ",".join("{" + ",".join(str(x) for x in row) + "}" for row in rot_mats[n])
        out.append(f"  static const std::vector<std::vector<long long>> m = {{{rows}}};")
        out.append("  return m;")
        out.append("}")
    out.append("const std::vector<std::vector<long long>>& icosa_F_basis_in_P() {")
    rows = ",".join("{" + ",".join(str(x) for x in row) + "}" for row in BF)
    out.append(f"  static const std::vector<std::vector<long long>> m = {{{rows}}};")
    out.append("  return m;")
    out.append("}")
    out.append("")
    out.append("}  // namespace projcoh::detail")
    path = os.path.join(ROOT, "src", "catalog_data.cpp")
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as fh:
        fh.write("\n".join(out) + "\n")

    # ---- sanity reports ------------------------------------------------
    R10 = rot_mats[10]
    M = [[R10[i][j] + (1 if i == j else 0) for j in range(4)] for i in range(4)]
    print("det(I+R10) =", det(M))
    R8 = rot_mats[8]
    M8 = [[R8[i][j] + (1 if i == j else 0) for j in range(4)] for i in range(4)]
    print("det(I+R8) =", det(M8))
    print("icosa group order:", len(group))
    print("families per axis type:", {k: len(v) for k, v in fams_P.items()})
    print("det BF =", det(BF))
    print("wrote", len(schemes), "schemes")


if __name__ == "__main__":
    main()
