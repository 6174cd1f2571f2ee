"""Frobenius degree-shift maps and the characteristic-p verification suite.

Over GF(p) the complex in any degree divisible by p has zero differential,
so its cohomology is the whole wedge algebra there, while degrees off the
multiples of p are expected to carry nothing.  The degree shift
``phi: (m' in V_m) x^m -> (m' in V_pm) x^{pm}`` realizes the comparison:
it is a split injection (projection onto the p-divisible degrees splits
it) and induces an isomorphism onto the cohomology of the pushed-forward
complex.  Every identity here is checked by honest matrix computation over
a box of degrees; nothing is assumed from the statements being verified.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb

import numpy as np

from .complexes import cohomology_table, degree_complex
from .forms import FormExpression, FormTerm, degree_subspace, to_form, wedge_subsets
from .linalg import GF, mat_mul, rank, zero_matrix

__all__ = [
    "PhiMap",
    "phi",
    "CheckResult",
    "check_chain_map",
    "check_split",
    "inverse_cartier_generator_check",
    "LevelSummary",
    "CartierReport",
    "verify_isomorphism",
]


@dataclass(frozen=True, eq=False)
class PhiMap:
    """Matrix of the degree shift on one wedge level, in the subset bases."""

    source_degree: tuple
    target_degree: tuple
    a: int
    matrix: object


def _det(field, rows):
    k = len(rows)
    if k == 0:
        return field.one
    if k == 1:
        return rows[0][0]
    out = field.zero
    for j in range(k):
        if rows[0][j] == field.zero:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = field.mul(rows[0][j], _det(field, minor))
        out = field.add(out, term if j % 2 == 0 else field.neg(term))
    return out


def _wedge_power(field, rows, a):
    d = len(rows)
    subsets = wedge_subsets(d, a)
    M = zero_matrix(len(subsets), len(subsets))
    for ci, I in enumerate(subsets):
        for ri, J in enumerate(subsets):
            M[ri, ci] = _det(field, [[rows[i][j] for j in J] for i in I])
    return M


def phi(cone, m, a, p):
    """The degree shift m -> pm on wedge level a, as an honest matrix.

    Built as the a-th compound of the change of basis from V_m to V_pm.
    The two subspaces coincide (face sets are scale invariant), so the
    matrix works out to the identity; what is asserted here is only
    invertibility, which makes the map injective on every graded piece.
    """
    field = GF(p)
    m = tuple(int(x) for x in m)
    pm = tuple(p * x for x in m)
    sub_m = degree_subspace(cone, m, p)
    sub_pm = degree_subspace(cone, pm, p)
    if sub_m != sub_pm:
        raise ArithmeticError(
            f"internal error: subspaces at {m} and {pm} disagree, the degree shift is broken"
        )
    rows = []
    for basis_row in sub_m.basis:
        coords = sub_pm.coordinates_of(basis_row)
        if coords is None:
            raise ArithmeticError("internal error: basis row escaped the target subspace")
        rows.append(list(coords))
    M = _wedge_power(field, rows, a)
    if rank(field, M) != comb(sub_m.dim, a):
        raise ArithmeticError(f"internal error: degree shift not invertible at {m}, a={a}")
    return PhiMap(m, pm, a, M)


@dataclass
class CheckResult:
    """Outcome of one verification pass over a box of source degrees."""

    name: str
    checked: int
    violations: tuple

    @property
    def passed(self):
        return not self.violations

    def to_text(self):
        state = "PASS" if self.passed else "FAIL"
        lines = [f"{self.name}: checked {self.checked} degrees: {state}"]
        lines.extend(f"  {v}" for v in self.violations)
        return "\n".join(lines)


def check_chain_map(cone, bound, p):
    """Compatibility with the differentials, degree by degree.

    The composite of the shift with the target differential must vanish:
    the target sits in degree pm, where the differential is multiplication
    by pm in V_pm, and p-divisibility is exactly what the vanishing of the
    composite witnesses.  Nothing here uses that fact; the matrices are
    multiplied out.
    """
    field = GF(p)
    n = cone.ambient_rank
    violations = []
    checked = 0
    for m in cone.lattice_points(bound):
        pm = tuple(p * x for x in m)
        target = degree_complex(cone, pm, p)
        for a in range(n):
            ph = phi(cone, m, a, p)
            comp = mat_mul(field, target.differentials[a], ph.matrix)
            if any(x != field.zero for x in comp.flat):
                violations.append(f"degree {m}, a={a}: shift image is not closed")
        checked += 1
    return CheckResult("chain map", checked, tuple(violations))


def check_split(cone, bound, p):
    """Projection onto the p-divisible degrees splits the shift.

    In degree pm the projection acts as the identity, so the composite is
    the shift matrix itself, compared entry by entry with the identity.
    """
    field = GF(p)
    n = cone.ambient_rank
    violations = []
    checked = 0
    for m in cone.lattice_points(bound):
        sub = degree_subspace(cone, m, p)
        for a in range(n + 1):
            ph = phi(cone, m, a, p)
            k = comb(sub.dim, a)
            ok = all(
                ph.matrix[i, j] == (field.one if i == j else field.zero)
                for i in range(k)
                for j in range(k)
            )
            if not ok:
                violations.append(
                    f"degree {m}, a={a}: projection composed with the shift is not the identity"
                )
        checked += 1
    return CheckResult("splitting", checked, tuple(violations))


def inverse_cartier_generator_check(cone, bound, p):
    """On generators the inverse map reads ``dx^m -> x^((p-1)m) dx^m``.

    Checked through the printable form layer: the shift of the one-form
    ``dx^m`` sits in degree pm, and writing it as a form must factor the
    monomial ``x^((p-1)m)`` out in front of ``dx^m``, with matching wedge
    coordinates on both sides.
    """
    violations = []
    checked = 0
    for m in cone.lattice_points(bound):
        if not any(m):
            continue
        pm = tuple(p * x for x in m)
        sub_m = degree_subspace(cone, m, p)
        sub_pm = degree_subspace(cone, pm, p)
        if sub_m.coordinates_of(m) != sub_pm.coordinates_of(m):
            violations.append(f"degree {m}: wedge coordinates drift under the shift")
        shifted = to_form(pm, [(1, (m,))])
        expected = FormExpression(
            (FormTerm(1, tuple((p - 1) * x for x in m), (m,)),)
        )
        if shifted != expected or str(shifted) != str(expected):
            violations.append(
                f"degree {m}: shift of dx^{m} prints as {shifted}, expected {expected}"
            )
        if FormExpression.parse(str(shifted)) != shifted:
            violations.append(f"degree {m}: form does not survive a parse round trip")
        checked += 1
    return CheckResult("generator identity", checked, tuple(violations))


# ---------------------------------------------------------------------------
# the full isomorphism report


@dataclass
class LevelSummary:
    """Per wedge level outcome of the isomorphism verification."""

    a: int
    sources_checked: int
    chain_map_ok: bool
    split_ok: bool
    isomorphism_ok: bool
    source_dim_total: int
    cohomology_dim_total: int


@dataclass
class CartierReport:
    """Aggregated outcome of the characteristic-p verification over a box."""

    rays: tuple
    p: int
    bound: int
    target_bound: int
    levels: tuple
    concentration_ok: bool
    target_degrees: int
    violations: tuple
    table_hash: str

    @property
    def passed(self):
        return (
            self.concentration_ok
            and not self.violations
            and all(
                lv.chain_map_ok and lv.split_ok and lv.isomorphism_ok
                for lv in self.levels
            )
        )

    def to_json(self):
        payload = {
            "rays": [list(r) for r in self.rays],
            "p": self.p,
            "bound": self.bound,
            "target_bound": self.target_bound,
            "levels": [
                {
                    "a": lv.a,
                    "sources_checked": lv.sources_checked,
                    "chain_map_ok": lv.chain_map_ok,
                    "split_ok": lv.split_ok,
                    "isomorphism_ok": lv.isomorphism_ok,
                    "source_dim_total": lv.source_dim_total,
                    "cohomology_dim_total": lv.cohomology_dim_total,
                }
                for lv in self.levels
            ],
            "concentration_ok": self.concentration_ok,
            "target_degrees": self.target_degrees,
            "violations": list(self.violations),
            "table_hash": self.table_hash,
            "passed": self.passed,
        }
        return json.dumps(payload, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        levels = tuple(
            LevelSummary(
                lv["a"],
                lv["sources_checked"],
                lv["chain_map_ok"],
                lv["split_ok"],
                lv["isomorphism_ok"],
                lv["source_dim_total"],
                lv["cohomology_dim_total"],
            )
            for lv in data["levels"]
        )
        return cls(
            tuple(tuple(r) for r in data["rays"]),
            data["p"],
            data["bound"],
            data["target_bound"],
            levels,
            data["concentration_ok"],
            data["target_degrees"],
            tuple(data["violations"]),
            data["table_hash"],
        )

    def to_text(self):
        lines = [
            f"cartier verification: p={self.p}, source bound={self.bound} "
            f"(targets scanned to {self.target_bound})"
        ]
        for lv in self.levels:
            lines.append(
                f"  a={lv.a}: sources={lv.sources_checked}, "
                f"chain map {'PASS' if lv.chain_map_ok else 'FAIL'}, "
                f"splitting {'PASS' if lv.split_ok else 'FAIL'}, "
                f"isomorphism {'PASS' if lv.isomorphism_ok else 'FAIL'} "
                f"(source dim {lv.source_dim_total}, cohomology dim {lv.cohomology_dim_total})"
            )
        lines.append(
            f"  off-multiple degrees carry no cohomology: "
            f"{'PASS' if self.concentration_ok else 'FAIL'} "
            f"({self.target_degrees} target degrees)"
        )
        for v in self.violations:
            lines.append(f"  violation: {v}")
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def verify_isomorphism(cone, bound, p, threads=None):
    """Full verification that the shift hits exactly the cohomology.

    Two halves, both computed without shortcuts: (i) every degree in the
    enlarged box ``[-p*bound, p*bound]^n`` that is not a multiple of p
    carries zero cohomology; (ii) for every source degree m in the
    ``bound`` box and every level a, the shift lands on cocycles, its
    composite with the projection is the identity, and the induced map
    into cohomology at pm is bijective (injective by rank, surjective by
    dimension count against the table).
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    field = GF(p)
    n = cone.ambient_rank
    table = cohomology_table(cone, p * bound, p, threads)
    violations = []
    concentration_ok = True
    for md in sorted(table.entries):
        h = table.entries[md]
        if any(x % p for x in md) and any(h):
            concentration_ok = False
            violations.append(
                f"degree {md}: cohomology {h} away from the multiples of {p}"
            )
    stats = [
        {
            "sources": 0,
            "chain": True,
            "split": True,
            "iso": True,
            "src_total": 0,
            "coh_total": 0,
        }
        for _ in range(n + 1)
    ]
    for m in cone.lattice_points(bound):
        pm = tuple(p * x for x in m)
        target = degree_complex(cone, pm, p)
        hs = table.entries[pm]
        sub = degree_subspace(cone, m, p)
        for a in range(n + 1):
            entry = stats[a]
            entry["sources"] += 1
            src_dim = comb(sub.dim, a)
            entry["src_total"] += src_dim
            entry["coh_total"] += hs[a]
            ph = phi(cone, m, a, p)
            if a < n:
                comp = mat_mul(field, target.differentials[a], ph.matrix)
                if any(x != field.zero for x in comp.flat):
                    entry["chain"] = False
                    violations.append(f"degree {m}, a={a}: shift image is not closed")
            ident = all(
                ph.matrix[i, j] == (field.one if i == j else field.zero)
                for i in range(src_dim)
                for j in range(src_dim)
            )
            if not ident:
                entry["split"] = False
                violations.append(
                    f"degree {m}, a={a}: projection composed with the shift "
                    f"is not the identity"
                )
            boundaries = (
                target.differentials[a - 1]
                if a > 0
                else zero_matrix(target.dims[0], 0)
            )
            brank = rank(field, boundaries)
            stacked = (
                np.concatenate([ph.matrix, boundaries], axis=1)
                if boundaries.shape[1]
                else ph.matrix
            )
            induced = rank(field, stacked) - brank
            if induced != src_dim or hs[a] != src_dim:
                entry["iso"] = False
                violations.append(
                    f"degree {m}, a={a}: induced rank {induced} of {src_dim}, "
                    f"cohomology dimension {hs[a]}"
                )
    levels = tuple(
        LevelSummary(
            a,
            stats[a]["sources"],
            stats[a]["chain"],
            stats[a]["split"],
            stats[a]["iso"],
            stats[a]["src_total"],
            stats[a]["coh_total"],
        )
        for a in range(n + 1)
    )
    return CartierReport(
        cone.rays,
        p,
        bound,
        p * bound,
        levels,
        concentration_ok,
        len(table.entries),
        tuple(violations),
        table.table_hash(),
    )
