"""Kltness certification for log-pair leaves via affine-cone SNC checks.

Every checker here certifies the stronger statement that the boundary
divisor of the affine cone has simple normal crossing support away from the
origin; since all coefficients are standard (hence < 1), this implies the
pair is Kawamata log terminal. None of the checkers decides kltness in
general: each validates one specific reduction shape, in exact rational
arithmetic, and reports its steps so the reasoning can be replayed.

The three family strategies re-execute a two-step reduction:

  step 1   every coordinate-hyperplane variable in the "linear block"
           appears linearly, with constant nonzero partial, in the one
           mixed equation H; away from the deep stratum (the common zero of
           the block variables) the arrangement is then normal crossing,
           because H keeps a unit partial in a direction not cut out.
  step 2   on the deep stratum only a small residual configuration is left:
           the residual hypersurface must be smooth outside the origin, and
           so must its restriction to the distinguished coordinate
           hyperplane. Both checks are combinatorial gradient arguments on
           diagonal forms (family_B carries one closed-form mixed gradient).

Arrangement strategies are checked directly: hyperplanes by exact rank of
normal-vector subsets, plane curves by resultants of sheared equations
(squarefree tests for transversality, gcd tests against triple points).
The resultant route is conservative: a shared resultant root that cannot be
certified harmless causes rejection, never acceptance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .wpspairs import (
    LogLeaf,
    NotQuasiHomogeneous,
    SparsePoly,
    Wps,
    weighted_degree,
)

__all__ = [
    "KltStep",
    "KltReport",
    "diagonal_smooth_outside_origin",
    "hyperplane_arrangement_snc",
    "plane_arrangement_snc",
    "family_snc_check",
    "is_klt_leaf",
    "STEP_SHAPE",
    "STEP_LINEAR_PARTIALS",
    "STEP_RESIDUAL_SMOOTH",
    "STEP_RESIDUAL_RESTRICTION",
    "STEP_HYPERPLANES",
    "STEP_PLANE",
    "STEP_KLT",
    "UNCHECKED_IRREDUCIBILITY",
]

# Step description strings are part of the report format; keep them stable.
STEP_SHAPE = "shape matches declared strategy"
STEP_LINEAR_PARTIALS = "linear-block variables appear linearly in H with constant nonzero partials"
STEP_RESIDUAL_SMOOTH = "residual hypersurface smooth outside the origin"
STEP_RESIDUAL_RESTRICTION = "residual restriction to the distinguished hyperplane smooth outside the origin"
STEP_HYPERPLANES = "hyperplane arrangement simple normal crossing outside the origin"
STEP_PLANE = "plane arrangement simple normal crossing outside the origin"
STEP_KLT = "SNC support with all coefficients < 1 outside the origin implies klt"

UNCHECKED_IRREDUCIBILITY = "irreducibility of non-coordinate divisors"

_FAMILIES = ("family_A", "family_B", "family_C")


@dataclass(frozen=True)
class KltStep:
    description: str
    passed: bool
    detail: str = ""

    def as_obj(self) -> dict:
        return {"description": self.description, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class KltReport:
    passed: bool
    strategy: str
    steps: tuple[KltStep, ...]
    unchecked_hypotheses: tuple[str, ...]

    def as_obj(self) -> dict:
        return {
            "passed": self.passed,
            "strategy": self.strategy,
            "steps": [s.as_obj() for s in self.steps],
            "unchecked_hypotheses": list(self.unchecked_hypotheses),
        }


def _report(strategy: str, steps: list[KltStep], unchecked: tuple[str, ...]) -> KltReport:
    passed = all(s.passed for s in steps)
    if passed:
        steps = steps + [KltStep(STEP_KLT, True)]
    return KltReport(passed, strategy, tuple(steps), unchecked)


# ---------------------------------------------------------------------------
# diagonal forms
# ---------------------------------------------------------------------------


def diagonal_smooth_outside_origin(eq: SparsePoly) -> bool:
    """For a diagonal form sum_j c_j x_j^{k_j}: is the zero set smooth away
    from the origin?

    The gradient is (c_j k_j x_j^{k_j - 1}), so its common zero locus is
    contained in {0} iff every ambient variable carries a term. That
    combinatorial criterion is what is checked; no root finding.
    Rejects non-diagonal input (two terms in one variable, mixed monomials,
    constants).
    """
    seen: set[int] = set()
    for _, exps in eq.monomials:
        nz = [j for j, e in enumerate(exps) if e > 0]
        if len(nz) != 1:
            raise ValueError(f"non-diagonal monomial in {eq}")
        j = nz[0]
        if j in seen:
            raise ValueError(f"two monomials in variable x{j} in {eq}")
        seen.add(j)
    return seen == set(range(eq.nvars))


# ---------------------------------------------------------------------------
# hyperplane arrangements
# ---------------------------------------------------------------------------


def _rank(rows: list[list[Fraction]]) -> int:
    mat = [row[:] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, nrows):
            if mat[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        prow = mat[rank]
        for r in range(rank + 1, nrows):
            if mat[r][col] != 0:
                f = mat[r][col] / prow[col]
                mat[r] = [a - f * b for a, b in zip(mat[r], prow)]
        rank += 1
        if rank == nrows:
            break
    return rank


def hyperplane_arrangement_snc(normals) -> bool:
    """Is the arrangement of hyperplanes (given by their normal vectors)
    simple normal crossing outside the origin?

    Required condition: every subset whose common zero locus meets the
    punctured cone has linearly independent normals. Checking all subsets
    of size exactly t = min(#normals, #variables) suffices: a dependent
    subset of size <= t extends to a dependent subset of size t, and if all
    size-t subsets are independent then larger subsets cut out only the
    origin.
    """
    vecs = [[Fraction(x) for x in v] for v in normals]
    if not vecs:
        return True
    nv = len(vecs[0])
    if any(len(v) != nv for v in vecs):
        raise ValueError("normal vectors of mixed lengths")
    if any(all(x == 0 for x in v) for v in vecs):
        raise ValueError("zero normal vector")
    t = min(len(vecs), nv)
    for subset in combinations(range(len(vecs)), t):
        if _rank([vecs[i] for i in subset]) != t:
            return False
    return True


# ---------------------------------------------------------------------------
# dense univariate rational polynomials (internal, for resultants)
# ---------------------------------------------------------------------------
# Represented as lists of Fractions, index = power, no trailing zeros.


def _q_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _q_deg(p: list[Fraction]) -> int:
    return len(p) - 1


def _q_add(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _q_trim(out)


def _q_sub(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _q_trim(out)


def _q_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _q_trim(out)


def _q_deriv(a):
    return _q_trim([a[i] * i for i in range(1, len(a))])


def _q_rem(a, b):
    a = a[:]
    db, lb = _q_deg(b), b[-1]
    while _q_deg(a) >= db:
        f = a[-1] / lb
        shift = _q_deg(a) - db
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        _q_trim(a)
    return a


def _q_gcd(a, b):
    a, b = a[:], b[:]
    while b:
        a, b = b, _q_rem(a, b)
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _det_polys(mat: list[list[list[Fraction]]]) -> list[Fraction]:
    """Determinant of a small matrix with polynomial entries, by expansion."""
    n = len(mat)
    if n == 1:
        return mat[0][0]
    acc: list[Fraction] = []
    for j in range(n):
        head = mat[0][j]
        if not head:
            continue
        minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
        term = _q_mul(head, _det_polys(minor))
        acc = _q_add(acc, term) if j % 2 == 0 else _q_sub(acc, term)
    return acc


# ---------------------------------------------------------------------------
# plane arrangements (lines / conics / cubics on P^2, points on P^1)
# ---------------------------------------------------------------------------


_P2 = Wps((1, 1, 1))


def _shear_x(curve: SparsePoly, k: int) -> SparsePoly:
    """Substitute x -> x + k*y in a 3-variable polynomial."""
    if k == 0:
        return curve
    terms = []
    for coeff, (a, b, c) in curve.monomials:
        for i in range(a + 1):
            terms.append((coeff * comb(a, i) * k ** (a - i), (i, b + a - i, c)))
    return SparsePoly.from_terms(3, terms)


def _y_coeff_polys(curve: SparsePoly) -> list[list[Fraction]]:
    """Coefficients of the powers of y, as dense polynomials in x at z = 1."""
    dy = max((e[1] for _, e in curve.monomials), default=-1)
    if dy < 0:
        return []
    dx = max(e[0] for _, e in curve.monomials)
    coeffs = [[Fraction(0)] * (dx + 1) for _ in range(dy + 1)]
    for c, (a, b, _) in curve.monomials:
        coeffs[b][a] += c
    return [_q_trim(p) for p in coeffs]


def _resultant_y(f: SparsePoly, g: SparsePoly) -> tuple[list[Fraction], int]:
    """Resultant of two homogeneous 3-variable polynomials with respect to y,
    dehomogenized at z = 1.

    Returns (R, D): R as a dense polynomial in x and D the degree of the
    resultant as a binary form in (x, z); D - deg(R) is the multiplicity of
    the root at (1:0).
    """
    fc, gc = _y_coeff_polys(f), _y_coeff_polys(g)
    p, q = len(fc) - 1, len(gc) - 1
    P = weighted_degree(f, _P2)
    Q = weighted_degree(g, _P2)
    if p < 0 or q < 0:
        raise ValueError("resultant of a zero polynomial")
    D = q * P + p * Q - p * q
    if p == 0 and q == 0:
        return [Fraction(1)], D  # no dependence on y: disjoint in the chart
    size = p + q
    mat: list[list[list[Fraction]]] = []
    for r in range(q):
        row = [[] for _ in range(size)]
        for i, cp in enumerate(reversed(fc)):  # fc[p], ..., fc[0]
            row[r + i] = cp
        mat.append(row)
    for r in range(p):
        row = [[] for _ in range(size)]
        for i, cp in enumerate(reversed(gc)):
            row[r + i] = cp
        mat.append(row)
    return _det_polys(mat), D


def _binary_squarefree(r: list[Fraction], d: int) -> bool:
    """Is the binary form (r dehomogenized at z = 1, full degree d) squarefree?"""
    if not r:
        return False
    if d - _q_deg(r) > 1:
        return False  # root at (1:0) with multiplicity >= 2
    return _q_deg(_q_gcd(r, _q_deriv(r))) <= 0


def _share_projective_root(r1, d1, r2, d2) -> bool:
    if not r1 or not r2:
        return True  # zero resultant: treat as shared (conservative)
    if d1 - _q_deg(r1) >= 1 and d2 - _q_deg(r2) >= 1:
        return True  # both vanish at (1:0)
    return _q_deg(_q_gcd(r1, r2)) >= 1


def _conic_smooth(curve: SparsePoly) -> bool:
    """Smoothness of a plane conic: nonzero determinant of its symmetric matrix."""
    m = [[Fraction(0)] * 3 for _ in range(3)]
    for c, exps in curve.monomials:
        nz = [j for j, e in enumerate(exps) if e > 0]
        if len(nz) == 1:
            m[nz[0]][nz[0]] = c
        else:
            i, j = nz
            m[i][j] = m[j][i] = c / 2
    det = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
    return det != 0


def _cubic_smooth_certified(sheared: SparsePoly) -> bool:
    """Gradient common-zero test for a sheared plane cubic, via resultants.

    The shear makes the y-partial y-regular of degree 2 with constant
    leading coefficient, so the resultants of (F_y, F_x) and (F_y, F_z)
    project every common gradient zero faithfully. Certifies smoothness
    when those two resultants share no projective root; anything unclear is
    rejected, never accepted.
    """
    fy = sheared.partial(1)
    fx = sheared.partial(0)
    fz = sheared.partial(2)
    if fx.is_zero() or fz.is_zero():
        return False  # cone over a binary cubic: singular
    r1, d1 = _resultant_y(fy, fx)
    r2, d2 = _resultant_y(fy, fz)
    if not r1 or not r2:
        return False
    return not _share_projective_root(r1, d1, r2, d2)


def plane_arrangement_snc(curves) -> bool:
    """Is an arrangement of plane curves (degree <= 3, homogeneous, in 3
    variables) simple normal crossing outside the origin of its cone?

    Checks: (a) every curve smooth (lines trivially, conics by determinant,
    cubics by the resultant gradient test), (b) every pair transversal (the
    y-resultant after a deterministic shear is squarefree as a binary
    form), (c) no triple points (the two resultants through a pivot curve
    share no projective root). A 2-variable input is a point configuration
    on P^1 and degenerates to a pairwise-distinct-points check.

    Conservative by design: any uncertifiable situation returns False.
    """
    curves = list(curves)
    if not curves:
        return True
    nv = curves[0].nvars
    if any(c.nvars != nv for c in curves):
        raise ValueError("curves in a mixed number of variables")
    if any(c.is_zero() for c in curves):
        return False

    if nv == 2:
        # points on P^1: all entries must be (distinct) linear forms
        for c in curves:
            if c.linear_coefficients() is None:
                return False
        for a, b in combinations(curves, 2):
            if a.proportional_to(b):
                return False
        return True
    if nv != 3:
        raise ValueError("plane arrangements live in 3 variables (or 2 for P^1)")

    degrees = []
    for c in curves:
        d = weighted_degree(c, _P2)  # also enforces homogeneity
        if d > 3:
            raise ValueError(f"curve of degree {d} > 3: {c}")
        degrees.append(d)

    # deterministic shear x -> x + k*y: smallest k making every leading
    # y-coefficient (the value at (k:1:0)) nonzero
    shear_k = None
    for k in range(0, 101):
        if all(c.evaluate((k, 1, 0)) != 0 for c in curves):
            shear_k = k
            break
    if shear_k is None:
        return False  # some curve contains the line z = 0; cannot certify
    sheared = [_shear_x(c, shear_k) for c in curves]

    # (a) smoothness
    for orig, sh, d in zip(curves, sheared, degrees):
        if d == 2 and not _conic_smooth(orig):
            return False
        if d == 3 and not _cubic_smooth_certified(sh):
            return False

    # (b) pairwise transversality
    res: dict[tuple[int, int], tuple[list[Fraction], int]] = {}
    for i, j in combinations(range(len(curves)), 2):
        r, dd = _resultant_y(sheared[i], sheared[j])
        res[(i, j)] = (r, dd)
        if not r:
            return False  # shared component
        if not _binary_squarefree(r, dd):
            return False

    # (c) no point on three curves; pivot on the lowest-degree curve of the
    # triple so that coinciding projections along the pivot mean a genuine
    # triple point rather than a projection artifact
    for tri in combinations(range(len(curves)), 3):
        pivot = min(tri, key=lambda i: (degrees[i], i))
        a, b = [i for i in tri if i != pivot]
        r1, d1 = res[tuple(sorted((pivot, a)))]
        r2, d2 = res[tuple(sorted((pivot, b)))]
        if _share_projective_root(r1, d1, r2, d2):
            return False
    return True


# ---------------------------------------------------------------------------
# family reductions
# ---------------------------------------------------------------------------


def _coordinate_var(eq: SparsePoly) -> int | None:
    """Index j if eq is c * x_j (a coordinate hyperplane), else None."""
    if len(eq.monomials) != 1:
        return None
    _, exps = eq.monomials[0]
    nz = [j for j, e in enumerate(exps) if e > 0]
    if len(nz) == 1 and exps[nz[0]] == 1:
        return nz[0]
    return None


def _split_entries(leaf: LogLeaf):
    coords: list[int] = []
    others: list[SparsePoly] = []
    for _, eq in leaf.entries:
        if eq.is_zero():
            others.append(eq)
            continue
        j = _coordinate_var(eq)
        if j is None:
            others.append(eq)
        else:
            coords.append(j)
    return coords, others


def _h_support_ok(h: SparsePoly, block: set[int], residual: set[int], mixed: tuple[int, ...] | None) -> tuple[bool, str]:
    """Every monomial of H must be a block variable appearing linearly, a
    pure power >= 2 of a residual variable (at most one per variable), or
    the family's designated mixed monomial."""
    powers_seen: set[int] = set()
    for _, exps in h.monomials:
        nz = [j for j, e in enumerate(exps) if e > 0]
        if mixed is not None and len(nz) == 2:
            if tuple(nz) == tuple(sorted(mixed)) and all(exps[j] == 1 for j in nz):
                continue
            return False, f"monomial on variables {nz} outside the family pattern"
        if len(nz) != 1:
            return False, f"monomial on variables {nz} outside the family pattern"
        j = nz[0]
        if exps[j] == 1 and j in block:
            continue
        if exps[j] >= 2 and j in residual:
            if j in powers_seen:
                return False, f"two pure powers of x{j}"
            powers_seen.add(j)
            continue
        return False, f"monomial x{j}^{exps[j]} outside the family pattern"
    return True, ""


def _family_frame(leaf: LogLeaf):
    """Validate entry structure against the declared family; return
    (ok, detail, info). info holds block/residual/distinguished indices and
    the H equation, or {'delegate': normals} for the all-linear degeneration
    of family_C."""
    coords, others = _split_entries(leaf)
    if len(others) != 1:
        return False, f"expected exactly one non-coordinate entry, found {len(others)}", None
    h = others[0]
    if h.is_zero():
        return False, "non-coordinate entry is the zero polynomial", None
    nv = h.nvars
    strategy = leaf.klt_strategy

    if strategy == "family_A":
        n = nv - 1
        if n < 2:
            return False, "too few variables for the odd-index families", None
        expected = sorted(list(range(n - 2)) + [n])
        if sorted(coords) != expected:
            return False, f"coordinate entries {sorted(coords)} != {expected}", None
        block = set(range(n - 2))
        residual = (n - 2, n - 1, n)
        ok, why = _h_support_ok(h, block, set(residual), None)
        if not ok:
            return False, why, None
        return True, "", {"h": h, "block": sorted(block), "residual": residual, "distinguished": n}

    if strategy == "family_B":
        n = nv - 1
        if n < 2:
            return False, "too few variables for the odd-index families", None
        expected = list(range(n - 1))
        if sorted(coords) != expected:
            return False, f"coordinate entries {sorted(coords)} != {expected}", None
        block = set(range(n - 2))
        residual = (n - 2, n - 1, n)
        ok, why = _h_support_ok(h, block, {n - 1, n}, (n - 2, n))
        if not ok:
            return False, why, None
        return True, "", {"h": h, "block": sorted(block), "residual": residual,
                          "distinguished": n - 2, "mixed": (n - 2, n)}

    # family_C
    e = len(coords)
    if e < 2 or sorted(coords) != list(range(e)):
        return False, f"coordinate entries {sorted(coords)} != [0..e-1]", None
    if e == nv:
        # prime power with base 2: everything is a hyperplane
        if h.linear_coefficients() is None:
            return False, "all-coordinate leaf whose extra entry is not linear", None
        normals = []
        for _, eq in leaf.entries:
            lin = eq.linear_coefficients()
            if lin is None:
                return False, "non-linear entry in the degenerate family_C shape", None
            normals.append(lin)
        return True, "degenerate: hyperplane arrangement", {"delegate": normals}
    if e > nv - 1:
        return False, "coordinate entries exceed the ambient variables", None
    block = set(range(e - 1))
    residual = tuple(range(e - 1, nv))
    ok, why = _h_support_ok(h, block, set(residual), None)
    if not ok:
        return False, why, None
    return True, "", {"h": h, "block": sorted(block), "residual": residual, "distinguished": e - 1}


def _check_linear_partials(h: SparsePoly, block: list[int]) -> tuple[bool, str]:
    for i in block:
        unit = tuple(1 if j == i else 0 for j in range(h.nvars))
        if h.coefficient(unit) == 0:
            return False, f"x{i} does not appear linearly in H"
        for _, exps in h.monomials:
            if exps[i] > 0 and exps != unit:
                return False, f"partial of H in x{i} is not constant"
    return True, "" if block else "no linear block (deep stratum is everything)"


def _family_b_residual_smooth(residual: SparsePoly) -> tuple[bool, str]:
    """Closed-form gradient analysis for a*x*z + b*y^j + c*z^k in local
    variables (x, y, z) = residual coordinates: the gradient
    (a*z, j*b*y^(j-1), a*x + k*c*z^(k-1)) vanishes only at the origin iff
    both the mixed term and the y power are present."""
    mixed = Fraction(0)
    ypow = Fraction(0)
    for c, (ex, ey, ez) in residual.monomials:
        if ex == 1 and ez == 1 and ey == 0:
            mixed = c
        elif ey >= 2 and ex == 0 and ez == 0:
            ypow = c
    if mixed == 0:
        return False, "mixed monomial x*z missing: gradient vanishes along a line"
    if ypow == 0:
        return False, "pure y power missing: gradient vanishes along a line"
    return True, "gradient (a*z, j*b*y^(j-1), a*x + k*c*z^(k-1)) vanishes only at the origin"


def family_snc_check(leaf: LogLeaf) -> KltReport:
    """Re-execute the two-step SNC reduction for a family-tagged leaf."""
    strategy = leaf.klt_strategy
    if strategy not in _FAMILIES:
        raise ValueError(f"family_snc_check requires a family strategy, got {strategy!r}")
    steps: list[KltStep] = []
    ok, detail, info = _family_frame(leaf)
    steps.append(KltStep(STEP_SHAPE, ok, detail))
    if not ok:
        return _report(strategy, steps, (UNCHECKED_IRREDUCIBILITY,))

    if "delegate" in info:
        arr = hyperplane_arrangement_snc(info["delegate"])
        steps.append(KltStep(STEP_HYPERPLANES, arr, "degenerate residual: all entries are hyperplanes"))
        return _report(strategy, steps, (UNCHECKED_IRREDUCIBILITY,))

    h: SparsePoly = info["h"]
    block: list[int] = info["block"]
    residual_vars = list(info["residual"])

    ok1, detail1 = _check_linear_partials(h, block)
    steps.append(KltStep(STEP_LINEAR_PARTIALS, ok1, detail1))

    residual = h.subs_zero(block).restrict_to(residual_vars)
    if strategy == "family_B":
        ok2, detail2 = _family_b_residual_smooth(residual)
    else:
        try:
            ok2 = diagonal_smooth_outside_origin(residual)
            detail2 = str(residual)
        except ValueError as err:
            ok2, detail2 = False, str(err)
    steps.append(KltStep(STEP_RESIDUAL_SMOOTH, ok2, detail2))

    dist_local = residual_vars.index(info["distinguished"])
    keep = [j for j in range(len(residual_vars)) if j != dist_local]
    restricted = residual.subs_zero([dist_local]).restrict_to(keep)
    try:
        ok3 = diagonal_smooth_outside_origin(restricted)
        detail3 = str(restricted)
    except ValueError as err:
        ok3, detail3 = False, str(err)
    steps.append(KltStep(STEP_RESIDUAL_RESTRICTION, ok3, detail3))

    return _report(strategy, steps, (UNCHECKED_IRREDUCIBILITY,))


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def is_klt_leaf(leaf: LogLeaf) -> KltReport:
    """Certify kltness of a leaf according to its declared strategy.

    Families go through the two-step reduction; arrangement strategies are
    checked directly on the entry equations. In every passing case the
    final recorded step is the singularity-theoretic implication actually
    used: SNC support with coefficients < 1 outside the origin implies klt.
    """
    strategy = leaf.klt_strategy
    if strategy in _FAMILIES:
        return family_snc_check(leaf)

    steps: list[KltStep] = []
    if strategy == "hyperplane_arrangement":
        normals = []
        shape_ok, shape_detail = True, ""
        for _, eq in leaf.entries:
            lin = eq.linear_coefficients() if not eq.is_zero() else None
            if lin is None:
                shape_ok, shape_detail = False, f"entry {eq} is not a hyperplane"
                break
            normals.append(lin)
        steps.append(KltStep(STEP_SHAPE, shape_ok, shape_detail))
        if shape_ok:
            steps.append(KltStep(STEP_HYPERPLANES, hyperplane_arrangement_snc(normals)))
        return _report(strategy, steps, ())

    if strategy == "plane_arrangement":
        try:
            ok = plane_arrangement_snc(leaf.equations())
            steps.append(KltStep(STEP_PLANE, ok))
        except (NotQuasiHomogeneous, ValueError) as err:
            steps.append(KltStep(STEP_PLANE, False, str(err)))
        return _report(strategy, steps, ())

    raise ValueError(f"unknown klt strategy {strategy!r}")
