"""Index certificates: constructors, the recursive realizer, the independent
verifier, and the plane-arrangement search.

A certificate is a tree witnessing that an integer m is the index of a klt
Calabi-Yau pair of a given dimension with standard coefficients:

  wps_leaf        an explicit pair on a weighted projective space
  elliptic_leaf   an abelian factor of dimension k (index 1, empty boundary)
  cited_leaf      existence by literature citation, not machine checked
  product         combines factors; dimensions add, indices combine by lcm

The realizer turns any m with phi(m) <= 2n into a certificate of dimension
n - 1, by a deterministic recursion: pad with an elliptic factor while
phi(m) < 2n, use the explicit odd-index and prime-power families when m is a
prime or prime power, and otherwise split off the power of the largest prime
and recurse on the coprime parts. Every split is coprime, so product indices
are exact.

The verifier recomputes everything from raw data: well-formedness,
quasi-homogeneity, exact degree zero, standard coefficients, the index, the
klt report, and the tree arithmetic. In strict mode a cited leaf fails
verification; in trusting mode it is accepted and listed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import lcm

from .numtheory import euler_phi, factorize
from .sncklt import KltReport, is_klt_leaf, plane_arrangement_snc
from .wpspairs import (
    KLT_STRATEGIES,
    LogLeaf,
    NotQuasiHomogeneous,
    SparsePoly,
    StdCoeff,
    Wps,
    is_well_formed,
    log_degree,
    pair_index,
    weighted_degree,
)

__all__ = [
    "WpsLeaf",
    "EllipticLeaf",
    "CitedLeaf",
    "Product",
    "Certificate",
    "certificate_dim",
    "certificate_index",
    "build_index_prime",
    "build_prime_power",
    "base_leaf",
    "realize",
    "check_dim_inequality",
    "search_plane_pair",
    "verify_certificate",
    "NodeReport",
    "VerificationReport",
    "CertificateParseError",
    "certificate_to_obj",
    "certificate_from_obj",
    "certificate_dumps",
    "certificate_loads",
    "logleaf_to_obj",
    "logleaf_from_obj",
    "BASE_DIM1_INDICES",
    "BASE_DIM2_INDICES",
    "CITE_INDEX_14",
]


# ---------------------------------------------------------------------------
# certificate tree
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WpsLeaf:
    leaf: LogLeaf


@dataclass(frozen=True)
class EllipticLeaf:
    dim: int


@dataclass(frozen=True)
class CitedLeaf:
    dim: int
    index: int
    cite: str


@dataclass(frozen=True)
class Product:
    factors: tuple["Certificate", ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))


Certificate = WpsLeaf | EllipticLeaf | CitedLeaf | Product


def certificate_dim(cert: Certificate) -> int:
    match cert:
        case WpsLeaf(leaf):
            return leaf.dim
        case EllipticLeaf(dim):
            return dim
        case CitedLeaf(dim, _, _):
            return dim
        case Product(factors):
            return sum(certificate_dim(f) for f in factors)
    raise TypeError(f"not a certificate node: {cert!r}")


def certificate_index(cert: Certificate) -> int:
    match cert:
        case WpsLeaf(leaf):
            return pair_index(leaf)
        case EllipticLeaf(_):
            return 1
        case CitedLeaf(_, index, _):
            return index
        case Product(factors):
            return lcm(*[certificate_index(f) for f in factors])
    raise TypeError(f"not a certificate node: {cert!r}")


# ---------------------------------------------------------------------------
# explicit families
# ---------------------------------------------------------------------------


def build_index_prime(m: int) -> LogLeaf:
    """Explicit pair of index m for odd m >= 5, of dimension (m+3)/4 when
    m = 1 (mod 4) and (m+1)/4 when m = 3 (mod 4).

    m = 1 (mod 4): on P(4^(n-2), 2, 1, 1) with n = (m+3)/4, coefficient
    (m-1)/m on the coordinate hyperplanes x_0, ..., x_{n-3}, x_n and on
    H = {x_0 + ... + x_{n-3} + x_{n-2}^2 + x_{n-1}^4 + x_n^4}.

    m = 3 (mod 4): on P(4^(n-2), 3, 2, 1) with n = (m+1)/4, coefficient
    (m-1)/m on x_0, ..., x_{n-2} and on
    H = {x_0 + ... + x_{n-3} + x_{n-2}x_n + x_{n-1}^2 + x_n^4}.

    Both have exact log degree 0 and pair index m.
    """
    if not isinstance(m, int) or m < 5 or m % 2 == 0:
        raise ValueError(f"build_index_prime requires an odd integer >= 5, got {m!r}")
    c = StdCoeff(m)
    if m % 4 == 1:
        n = (m + 3) // 4
        space = Wps((4,) * (n - 2) + (2, 1, 1))
        nv = n + 1
        coord_vars = list(range(n - 2)) + [n]
        h_terms = [(Fraction(1), tuple(1 if j == i else 0 for j in range(nv))) for i in range(n - 2)]
        for var, exp in ((n - 2, 2), (n - 1, 4), (n, 4)):
            h_terms.append((Fraction(1), tuple(exp if j == var else 0 for j in range(nv))))
        strategy = "family_A"
    else:
        n = (m + 1) // 4
        space = Wps((4,) * (n - 2) + (3, 2, 1))
        nv = n + 1
        coord_vars = list(range(n - 1))
        h_terms = [(Fraction(1), tuple(1 if j == i else 0 for j in range(nv))) for i in range(n - 2)]
        h_terms.append((Fraction(1), tuple(1 if j in (n - 2, n) else 0 for j in range(nv))))
        for var, exp in ((n - 1, 2), (n, 4)):
            h_terms.append((Fraction(1), tuple(exp if j == var else 0 for j in range(nv))))
        strategy = "family_B"
    entries = [(c, SparsePoly.variable(nv, i)) for i in coord_vars]
    entries.append((c, SparsePoly(nv, tuple(h_terms))))
    return LogLeaf(space, tuple(entries), strategy)


def build_prime_power(m: int, e: int) -> LogLeaf:
    """Explicit pair of index m^e and dimension m + e - 3, for m, e >= 2.

    On P((m-1)^(e-1), 1^(m-1)): coefficient (m^(i+1)-1)/m^(i+1) on the
    coordinate hyperplane x_i for 0 <= i <= e-1, and (m^e-1)/m^e on
    H = {x_0 + ... + x_{e-2} + x_{e-1}^(m-1) + ... + x_{e+m-3}^(m-1)}.
    Exact log degree 0; pair index m^e. For m = 2 every entry is a
    hyperplane and the klt check is the arrangement criterion.
    """
    if not isinstance(m, int) or not isinstance(e, int) or m < 2 or e < 2:
        raise ValueError(f"build_prime_power requires m, e >= 2, got ({m!r}, {e!r})")
    nv = m + e - 2
    space = Wps((m - 1,) * (e - 1) + (1,) * (m - 1))
    entries = [(StdCoeff(m ** (i + 1)), SparsePoly.variable(nv, i)) for i in range(e)]
    h_terms = [(Fraction(1), tuple(1 if j == i else 0 for j in range(nv))) for i in range(e - 1)]
    for i in range(e - 1, nv):
        h_terms.append((Fraction(1), tuple(m - 1 if j == i else 0 for j in range(nv))))
    entries.append((StdCoeff(m**e), SparsePoly(nv, tuple(h_terms))))
    strategy = "hyperplane_arrangement" if m == 2 else "family_C"
    return LogLeaf(space, tuple(entries), strategy)


# ---------------------------------------------------------------------------
# base catalogue (dimensions 1 and 2)
# ---------------------------------------------------------------------------

# P^1 points 0, 1, oo, 2, in that order, as linear forms in (x0, x1) with
# affine coordinate t = x1/x0.
_P1_POINTS = (
    SparsePoly.linear_form((0, 1)),
    SparsePoly.linear_form((-1, 1)),
    SparsePoly.linear_form((1, 0)),
    SparsePoly.linear_form((-2, 1)),
)

# P^2 catalogue: lines y = j*x + T_j*z with slopes 0..5 and triangular-number
# intercepts; any three are non-concurrent and every line meets the conic
# x*z - y^2 transversally off it.
_P2_LINES = tuple(
    SparsePoly.linear_form((-j, 1, -t)) for j, t in zip(range(6), (0, 1, 3, 6, 10, 15))
)
_P2_CONICS = (
    SparsePoly.from_terms(3, [(1, (1, 0, 1)), (-1, (0, 2, 0))]),  # x*z - y^2
)

BASE_DIM1_INDICES = (1, 2, 3, 4, 6)
BASE_DIM2_INDICES = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 18)

CITE_INDEX_14 = (
    "Machida-Oguiso, Main Theorem 3: a K3 surface admits an automorphism of "
    "index 14; the quotient is a klt Calabi-Yau surface pair with standard "
    "coefficients and index 14."
)


def _p1_leaf(bs: tuple[int, ...]) -> LogLeaf:
    entries = tuple((StdCoeff(b), _P1_POINTS[i]) for i, b in enumerate(bs))
    return LogLeaf(Wps((1, 1)), entries, "hyperplane_arrangement")


def _plane_leaf(entries) -> LogLeaf:
    return LogLeaf(Wps((1, 1, 1)), tuple(entries), "plane_arrangement")


def base_leaf(dim: int, m: int) -> Certificate:
    """The explicit catalogue for dimensions 1 and 2.

    Dimension 1 realizes {1, 2, 3, 4, 6}: an elliptic curve for m = 1 and
    the four P^1 pairs otherwise. Dimension 2 realizes every m with
    phi(m) <= 6; index 14 is the one citation (K3 quotient), everything
    else is constructed and machine checked.
    """
    if dim == 1:
        if m == 1:
            return EllipticLeaf(1)
        if m == 2:
            return WpsLeaf(_p1_leaf((2, 2, 2, 2)))
        if m == 3:
            return WpsLeaf(_p1_leaf((3, 3, 3)))
        if m == 4:
            return WpsLeaf(_p1_leaf((2, 4, 4)))
        if m == 6:
            return WpsLeaf(_p1_leaf((2, 3, 6)))
        raise ValueError(f"no dimension-1 base leaf for index {m}")
    if dim != 2:
        raise ValueError(f"base_leaf covers dimensions 1 and 2 only, got {dim!r}")
    if m == 1:
        return EllipticLeaf(2)
    if m in (2, 3, 4, 6):
        return Product((base_leaf(1, m), EllipticLeaf(1)))
    if m in (5, 7):
        return WpsLeaf(build_index_prime(m))
    if m == 8:
        return WpsLeaf(build_prime_power(2, 3))
    if m == 9:
        return WpsLeaf(build_prime_power(3, 2))
    if m == 12:
        return Product((base_leaf(1, 4), base_leaf(1, 3)))
    if m == 10:
        return WpsLeaf(
            _plane_leaf(
                [
                    (StdCoeff(2), _P2_LINES[0]),
                    (StdCoeff(5), _P2_CONICS[0]),
                    (StdCoeff(10), _P2_LINES[1]),
                ]
            )
        )
    if m == 18:
        return WpsLeaf(
            _plane_leaf(
                [
                    (StdCoeff(2), _P2_LINES[0]),
                    (StdCoeff(3), _P2_LINES[1]),
                    (StdCoeff(9), _P2_LINES[2]),
                    (StdCoeff(18), _P2_LINES[3]),
                ]
            )
        )
    if m == 14:
        return CitedLeaf(2, 14, CITE_INDEX_14)
    raise ValueError(f"no dimension-2 base leaf for index {m} (needs phi(m) <= 6)")


# ---------------------------------------------------------------------------
# dimension inequality
# ---------------------------------------------------------------------------


def check_dim_inequality(m: int, e: int, variant: int) -> bool:
    """Exact evaluation of the padding inequality for prime powers, with
    n = (m^e - m^(e-1)) / 2:

      variant 1:  m + e - 3 <= n - 1   for (m, e) not in {(2,2), (2,3)}
      variant 2:  m + e - 3 <= n - 3   for m >= 3 and (m, e) != (3, 2)

    True on the whole precondition domain; the realizer asserts it before
    padding. Excluded pairs are rejected with the reason.
    """
    if not isinstance(m, int) or not isinstance(e, int) or m < 2 or e < 2:
        raise ValueError(f"check_dim_inequality requires m, e >= 2, got ({m!r}, {e!r})")
    if variant == 1:
        if (m, e) in ((2, 2), (2, 3)):
            raise ValueError(f"(m, e) = {(m, e)} is excluded from variant 1")
        offset = 1
    elif variant == 2:
        if m < 3:
            raise ValueError("variant 2 requires m >= 3")
        if (m, e) == (3, 2):
            raise ValueError("(m, e) = (3, 2) is excluded from variant 2")
        offset = 3
    else:
        raise ValueError(f"variant must be 1 or 2, got {variant!r}")
    n2 = m**e - m ** (e - 1)  # = 2n, always even
    return 2 * (m + e - 3) <= n2 - 2 * offset


# ---------------------------------------------------------------------------
# the realizer
# ---------------------------------------------------------------------------


def _pad(cert: Certificate, k: int) -> Certificate:
    """Product with an elliptic factor of dimension k (index unchanged)."""
    if k == 0:
        return cert
    if k < 0:
        raise RuntimeError("certificate larger than its target dimension")
    return Product((cert, EllipticLeaf(k)))


def _pad_to(cert: Certificate, target_dim: int) -> Certificate:
    return _pad(cert, target_dim - certificate_dim(cert))


def realize(n: int, m: int) -> Certificate:
    """Certificate of dimension n - 1 and index m, for any m with
    phi(m) <= 2n and n >= 3.

    Deterministic recursion on n: the dimension-2 catalogue at n = 3;
    elliptic padding while phi(m) < 2n; the explicit families for primes and
    prime powers; otherwise split m = m1 * m2 with m2 the power of the
    largest prime, recurse on the coprime parts by the size of their
    totients, and combine with a product plus padding.
    """
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"realize requires n >= 3, got {n!r}")
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"realize requires a positive index, got {m!r}")
    phi = euler_phi(m)
    if phi > 2 * n:
        raise ValueError(f"phi({m}) = {phi} > 2n = {2 * n}: index out of range")

    if n == 3:
        cert = base_leaf(2, m)
    elif phi < 2 * n:
        # phi is 1 or even, so phi <= 2(n-1) and the smaller target works
        cert = Product((realize(n - 1, m), EllipticLeaf(1)))
    else:
        cert = _pad_to(_realize_tight(n, m), n - 1)

    if certificate_dim(cert) != n - 1:
        raise RuntimeError(f"realize({n}, {m}): built dimension {certificate_dim(cert)}")
    return cert


def _realize_tight(n: int, m: int) -> Certificate:
    """The phi(m) = 2n, n >= 4 case split. Returns a certificate of
    dimension <= n - 1 (the caller pads)."""
    fac = factorize(m)
    r = fac.num_prime_factors()

    if r == 1 and fac.factors[0][1] == 1:
        # m prime, m = 2n + 1: dimension (m+3)/4 = (n+2)/2 <= n - 1
        return WpsLeaf(build_index_prime(m))

    if r == 1:
        p, e = fac.factors[0]
        if not check_dim_inequality(p, e, 1):
            raise RuntimeError(f"dimension inequality failed for ({p}, {e})")
        return WpsLeaf(build_prime_power(p, e))

    # r >= 2: split off the power of the largest prime
    p, e = fac.factors[-1]
    m2 = p**e
    m1 = m // m2
    phi1, phi2 = euler_phi(m1), euler_phi(m2)

    if phi1 >= 6 and phi2 >= 6:
        c1 = realize(phi1 // 2, m1)
        c2 = realize(phi2 // 2, m2)
        return Product((c1, c2))
    if phi1 >= 6:
        c1 = realize(phi1 // 2, m1)
        c2 = base_leaf(1, m2) if phi2 == 2 else base_leaf(2, m2)
        return Product((c1, c2))
    if phi1 == 1:
        # m1 = 2, m = 2 p^e with p odd
        if e == 1:
            return Product((base_leaf(1, 2), WpsLeaf(build_index_prime(p))))
        if not check_dim_inequality(p, e, 2):
            raise RuntimeError(f"dimension inequality failed for ({p}, {e})")
        return Product((base_leaf(1, 2), WpsLeaf(build_prime_power(p, e))))
    if phi1 == 2:
        c1 = base_leaf(1, m1)
    else:  # phi1 == 4
        c1 = base_leaf(2, m1)
    if phi2 >= 6:
        c2 = realize(phi2 // 2, m2)
    elif phi2 == 4:
        c2 = base_leaf(2, m2)
    else:
        c2 = base_leaf(1, m2)
    return Product((c1, c2))


# ---------------------------------------------------------------------------
# plane-arrangement search
# ---------------------------------------------------------------------------


def _divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def _instantiate_plane(dim: int, combo) -> LogLeaf | None:
    """Deterministic equations for a multiset of (b, curve degree): P^1
    points 0, 1, oo, 2 in order, P^2 lines and conics from the fixed
    general-position catalogue. None if the catalogue is exhausted."""
    if dim == 1:
        if len(combo) > len(_P1_POINTS):
            return None
        entries = [(StdCoeff(b), _P1_POINTS[i]) for i, (b, _) in enumerate(combo)]
        return LogLeaf(Wps((1, 1)), tuple(entries), "hyperplane_arrangement")
    lines = conics = 0
    entries = []
    for b, d in combo:
        if d == 1:
            if lines >= len(_P2_LINES):
                return None
            entries.append((StdCoeff(b), _P2_LINES[lines]))
            lines += 1
        else:
            if conics >= len(_P2_CONICS):
                return None
            entries.append((StdCoeff(b), _P2_CONICS[conics]))
            conics += 1
    return LogLeaf(Wps((1, 1, 1)), tuple(entries), "plane_arrangement")


def search_plane_pair(dim: int, index: int, max_components: int = 4) -> LogLeaf | None:
    """Search for a pair of the requested index on P^1 (dim 1) or P^2 (dim 2)
    whose boundary is a verified general-position arrangement.

    Enumerates multisets of (b, d) with b a divisor of the index (b >= 2),
    d = 1 on P^1 and d in {1, 2} on P^2, subject to
    sum (1 - 1/b) d = 2 resp. 3 and lcm(b) = index; candidates are tried by
    component count, then lexicographically, each instantiated with the
    deterministic catalogue equations and accepted only if the
    simple-normal-crossing check passes. Absence is a value, not an error.
    """
    if dim not in (1, 2):
        raise ValueError(f"search_plane_pair covers dimensions 1 and 2, got {dim!r}")
    if not isinstance(index, int) or index < 1:
        raise ValueError(f"index must be a positive integer, got {index!r}")
    target = Fraction(2) if dim == 1 else Fraction(3)
    degrees = (1,) if dim == 1 else (1, 2)
    candidates = sorted((b, d) for b in _divisors(index) if b >= 2 for d in degrees)
    for count in range(1, max_components + 1):
        for combo in combinations_with_replacement(candidates, count):
            if sum(Fraction(b - 1, b) * d for b, d in combo) != target:
                continue
            if lcm(*[b for b, _ in combo]) != index:
                continue
            leaf = _instantiate_plane(dim, combo)
            if leaf is None:
                continue
            if plane_arrangement_snc(leaf.equations()):
                return leaf
    return None


# ---------------------------------------------------------------------------
# independent verification
# ---------------------------------------------------------------------------


@dataclass
class NodeReport:
    path: str
    kind: str
    checks: list[tuple[str, bool, str]] = field(default_factory=list)
    klt: KltReport | None = None

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failing(self) -> list[str]:
        return [name for name, ok, _ in self.checks if not ok]

    def as_obj(self) -> dict:
        return {
            "path": self.path,
            "kind": self.kind,
            "passed": self.passed,
            "checks": [
                {"name": n, "passed": ok, "detail": d} for n, ok, d in self.checks
            ],
            "klt": self.klt.as_obj() if self.klt is not None else None,
        }


@dataclass
class VerificationReport:
    mode: str
    dim: int | None
    index: int | None
    passed: bool
    leaf_reports: list[NodeReport]
    cited_leaves: list[dict]

    def failing_checks(self) -> list[tuple[str, str]]:
        return [
            (rep.path, name)
            for rep in self.leaf_reports
            for name in rep.failing()
        ]

    def as_obj(self) -> dict:
        return {
            "mode": self.mode,
            "dim": self.dim,
            "index": self.index,
            "passed": self.passed,
            "cited_leaves": self.cited_leaves,
            "leaf_reports": [r.as_obj() for r in self.leaf_reports],
        }


def _check(rep: NodeReport, name: str, ok: bool, detail: str = "") -> bool:
    rep.checks.append((name, bool(ok), detail))
    return bool(ok)


def _verify_wps_leaf(leaf: LogLeaf, rep: NodeReport) -> tuple[int | None, int | None]:
    space = leaf.space
    _check(rep, "weights-valid", len(space.weights) >= 2 and all(a >= 1 for a in space.weights),
           str(space))

    nv = len(space.weights)
    shape_ok = bool(leaf.entries)
    shape_detail = ""
    for coeff, eq in leaf.entries:
        if eq.is_zero():
            shape_ok, shape_detail = False, "zero divisor equation"
            break
        if eq.nvars != nv:
            shape_ok, shape_detail = False, f"equation in {eq.nvars} variables on {space}"
            break
        if not eq.variables():
            shape_ok, shape_detail = False, "constant equation cuts out no divisor"
            break
    if not leaf.entries:
        shape_detail = "no divisor entries"
    _check(rep, "entry-shape", shape_ok, shape_detail)

    std_ok = all(
        isinstance(coeff.b, int) and coeff.b >= 2 and coeff.value() == Fraction(coeff.b - 1, coeff.b)
        for coeff, _ in leaf.entries
    )
    _check(rep, "standard-coefficients", std_ok,
           " ".join(str(c) for c, _ in leaf.entries))

    qh_ok, qh_detail = shape_ok, "not evaluated (entry shape invalid)"
    if shape_ok:
        try:
            degs = [weighted_degree(eq, space) for _, eq in leaf.entries]
            qh_detail = f"degrees {degs}"
        except NotQuasiHomogeneous as err:
            qh_ok, qh_detail = False, str(err)
    _check(rep, "quasi-homogeneous", qh_ok, qh_detail)

    distinct = True
    eqs = [eq for _, eq in leaf.entries]
    for i, j in combinations(range(len(eqs)), 2):
        if eqs[i].proportional_to(eqs[j]):
            distinct = False
            break
    _check(rep, "entries-distinct", distinct)

    wf = is_well_formed(space)
    _check(rep, "well-formed", wf, str(space))

    deg_ok = False
    deg_detail = ""
    if shape_ok and qh_ok:
        d = log_degree(leaf)
        deg_ok = d == 0
        deg_detail = f"log degree {d}"
    _check(rep, "degree-zero", deg_ok, deg_detail)

    index: int | None = None
    if wf and deg_ok:
        index = pair_index(leaf)
    _check(rep, "index-computed", index is not None,
           str(index) if index is not None else "preconditions failed")

    klt_ok = False
    try:
        rep.klt = is_klt_leaf(leaf)
        klt_ok = rep.klt.passed
        klt_detail = rep.klt.strategy
    except ValueError as err:
        klt_detail = str(err)
    _check(rep, "klt", klt_ok, klt_detail)

    return (space.dim if len(space.weights) >= 2 else None,
            index if rep.passed else None)


def _verify_node(cert: Certificate, mode: str, path: str,
                 reports: list[NodeReport], cited: list[dict]) -> tuple[int | None, int | None]:
    match cert:
        case WpsLeaf(leaf):
            rep = NodeReport(path, "wps_leaf")
            reports.append(rep)
            return _verify_wps_leaf(leaf, rep)
        case EllipticLeaf(dim):
            rep = NodeReport(path, "elliptic_leaf")
            reports.append(rep)
            ok = _check(rep, "elliptic-dim", isinstance(dim, int) and dim >= 1, str(dim))
            return (dim, 1) if ok else (None, None)
        case CitedLeaf(dim, index, cite):
            rep = NodeReport(path, "cited_leaf")
            reports.append(rep)
            ok = _check(rep, "cited-fields",
                        isinstance(dim, int) and dim >= 1 and isinstance(index, int) and index >= 1,
                        f"dim {dim}, index {index}")
            cited.append({"path": path, "dim": dim, "index": index, "cite": cite})
            if mode == "strict":
                _check(rep, "cited-leaf-strict", False,
                       "cited leaves are not machine checked; rerun in trusting mode")
            else:
                _check(rep, "cited-leaf-trusted", True, cite)
            return (dim, index) if rep.passed else (None, None)
        case Product(factors):
            rep = NodeReport(path, "product")
            reports.append(rep)
            _check(rep, "product-arity", len(factors) >= 2, f"{len(factors)} factors")
            dims: list[int | None] = []
            idxs: list[int | None] = []
            for i, f in enumerate(factors):
                d, ix = _verify_node(f, mode, f"{path}.factors[{i}]", reports, cited)
                dims.append(d)
                idxs.append(ix)
            if rep.passed and all(d is not None for d in dims) and all(ix is not None for ix in idxs):
                return sum(dims), lcm(*idxs)
            return (None, None)
    raise TypeError(f"not a certificate node: {cert!r}")


def verify_certificate(cert: Certificate, mode: str = "strict") -> VerificationReport:
    """Recheck every claim a certificate makes, trusting nothing.

    For each explicit leaf: weights, entry shapes, standard coefficients,
    quasi-homogeneity, pairwise-distinct entries, well-formedness, exact
    degree zero, the index, and the full klt report. For the tree: product
    arity, dimension sums and index lcms. Check failures are recorded in
    the report, never thrown. Strict mode fails on any cited leaf.
    """
    if mode not in ("strict", "trusting"):
        raise ValueError(f"mode must be 'strict' or 'trusting', got {mode!r}")
    reports: list[NodeReport] = []
    cited: list[dict] = []
    dim, index = _verify_node(cert, mode, "$", reports, cited)
    passed = all(r.passed for r in reports) and dim is not None and index is not None
    return VerificationReport(mode, dim, index, passed, reports, cited)


# ---------------------------------------------------------------------------
# serialization (schema v1)
# ---------------------------------------------------------------------------


class CertificateParseError(ValueError):
    """Schema violation, with a JSON-path location."""

    def __init__(self, message: str, location: str = "$"):
        super().__init__(f"{location}: {message}")
        self.location = location


def _frac_to_obj(c: Fraction) -> list[int]:
    return [c.numerator, c.denominator]


def logleaf_to_obj(leaf: LogLeaf) -> dict:
    return {
        "v": 1,
        "node": "wps_leaf",
        "weights": list(leaf.space.weights),
        "strategy": leaf.klt_strategy,
        "entries": [
            {
                "b": coeff.b,
                "eq": [{"c": _frac_to_obj(c), "e": list(e)} for c, e in eq.monomials],
            }
            for coeff, eq in leaf.entries
        ],
    }


def certificate_to_obj(cert: Certificate) -> dict:
    match cert:
        case WpsLeaf(leaf):
            return logleaf_to_obj(leaf)
        case EllipticLeaf(dim):
            return {"v": 1, "node": "elliptic_leaf", "dim": dim}
        case CitedLeaf(dim, index, cite):
            return {"v": 1, "node": "cited_leaf", "dim": dim, "index": index, "cite": cite}
        case Product(factors):
            return {"v": 1, "node": "product", "factors": [certificate_to_obj(f) for f in factors]}
    raise TypeError(f"not a certificate node: {cert!r}")


def _need(obj: dict, key: str, loc: str):
    if not isinstance(obj, dict):
        raise CertificateParseError("expected an object", loc)
    if key not in obj:
        raise CertificateParseError(f"missing field {key!r}", loc)
    return obj[key]


def _need_int(value, loc: str, minimum: int | None = None) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise CertificateParseError(f"expected an integer, got {value!r}", loc)
    if minimum is not None and value < minimum:
        raise CertificateParseError(f"integer {value} below minimum {minimum}", loc)
    return value


def logleaf_from_obj(obj: dict, loc: str = "$") -> LogLeaf:
    weights = _need(obj, "weights", loc)
    if not isinstance(weights, list) or len(weights) < 2:
        raise CertificateParseError("weights must be a list of at least 2 integers", f"{loc}.weights")
    weights = [_need_int(w, f"{loc}.weights[{i}]") for i, w in enumerate(weights)]
    if any(w < 1 for w in weights):
        raise CertificateParseError("weights must be positive", f"{loc}.weights")
    strategy = _need(obj, "strategy", loc)
    if strategy not in KLT_STRATEGIES:
        raise CertificateParseError(f"unknown strategy {strategy!r}", f"{loc}.strategy")
    entries_obj = _need(obj, "entries", loc)
    if not isinstance(entries_obj, list):
        raise CertificateParseError("entries must be a list", f"{loc}.entries")
    entries = []
    for i, ent in enumerate(entries_obj):
        eloc = f"{loc}.entries[{i}]"
        b = _need_int(_need(ent, "b", eloc), f"{eloc}.b", minimum=2)
        eq_obj = _need(ent, "eq", eloc)
        if not isinstance(eq_obj, list) or not eq_obj:
            raise CertificateParseError("eq must be a nonempty monomial list", f"{eloc}.eq")
        terms = []
        for j, mono in enumerate(eq_obj):
            mloc = f"{eloc}.eq[{j}]"
            c = _need(mono, "c", mloc)
            if not isinstance(c, list) or len(c) != 2:
                raise CertificateParseError("c must be [numerator, denominator]", f"{mloc}.c")
            num = _need_int(c[0], f"{mloc}.c[0]")
            den = _need_int(c[1], f"{mloc}.c[1]")
            if den == 0:
                raise CertificateParseError("zero denominator", f"{mloc}.c")
            if num == 0:
                raise CertificateParseError("zero coefficient monomial", f"{mloc}.c")
            e = _need(mono, "e", mloc)
            if not isinstance(e, list):
                raise CertificateParseError("e must be a list", f"{mloc}.e")
            exps = tuple(_need_int(x, f"{mloc}.e[{k}]", minimum=0) for k, x in enumerate(e))
            if len(exps) != len(weights):
                raise CertificateParseError(
                    f"exponent vector of length {len(exps)}, expected {len(weights)}", f"{mloc}.e"
                )
            terms.append((Fraction(num, den), exps))
        try:
            eq = SparsePoly(len(weights), tuple(terms))
        except ValueError as err:
            raise CertificateParseError(str(err), f"{eloc}.eq") from err
        entries.append((StdCoeff(b), eq))
    try:
        return LogLeaf(Wps(tuple(weights)), tuple(entries), strategy)
    except ValueError as err:
        raise CertificateParseError(str(err), loc) from err


def certificate_from_obj(obj, loc: str = "$") -> Certificate:
    if not isinstance(obj, dict):
        raise CertificateParseError("expected an object", loc)
    v = _need(obj, "v", loc)
    if v != 1:
        raise CertificateParseError(f"unsupported schema version {v!r}", f"{loc}.v")
    node = _need(obj, "node", loc)
    if node == "wps_leaf":
        return WpsLeaf(logleaf_from_obj(obj, loc))
    if node == "elliptic_leaf":
        return EllipticLeaf(_need_int(_need(obj, "dim", loc), f"{loc}.dim", minimum=1))
    if node == "cited_leaf":
        dim = _need_int(_need(obj, "dim", loc), f"{loc}.dim", minimum=1)
        index = _need_int(_need(obj, "index", loc), f"{loc}.index", minimum=1)
        cite = _need(obj, "cite", loc)
        if not isinstance(cite, str) or not cite:
            raise CertificateParseError("cite must be a nonempty string", f"{loc}.cite")
        return CitedLeaf(dim, index, cite)
    if node == "product":
        factors_obj = _need(obj, "factors", loc)
        if not isinstance(factors_obj, list):
            raise CertificateParseError("factors must be a list", f"{loc}.factors")
        factors = tuple(
            certificate_from_obj(f, f"{loc}.factors[{i}]") for i, f in enumerate(factors_obj)
        )
        return Product(factors)
    raise CertificateParseError(f"unknown node kind {node!r}", f"{loc}.node")


def certificate_dumps(cert: Certificate) -> str:
    return json.dumps(certificate_to_obj(cert), sort_keys=True, separators=(",", ":"))


def certificate_loads(text: str) -> Certificate:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as err:
        raise CertificateParseError(f"invalid JSON: {err.msg}", f"line {err.lineno} column {err.colno}") from err
    return certificate_from_obj(obj)
