"""Degree-by-degree complexes of wedge powers and their cohomology.

In a fixed degree m the complex is the exterior algebra on V_m with the
differential "wedge with the class of m".  That map preserves the grading,
so cohomology over a box of degrees is the direct sum of the per-degree
answers; the fast path exploits this, while :func:`oracle_full_complex`
deliberately does not and serves as an independent cross-check.

Tables and reports serialize to JSON (round-trips through ``from_json``)
and to CSV with one row per degree.  Output is byte-stable: degrees are
sorted, hashes are over the CSV bytes.  Setting the environment variable
``TORIC_THREADS`` to an integer above 1 spreads table computation over that
many worker processes without changing any output.
"""

from __future__ import annotations

import concurrent.futures
import hashlib
import json
import os
from dataclasses import dataclass
from math import comb

from .forms import degree_subspace, wedge_subsets
from .linalg import (
    field_of_characteristic,
    mat_mul,
    rank,
    sparse_rank,
    zero_matrix,
)

__all__ = [
    "DegreeComplex",
    "degree_complex",
    "cohomology",
    "CohomologyTable",
    "cohomology_table",
    "NoVertexError",
    "PoincareReport",
    "poincare_check",
    "oracle_full_complex",
]


class NoVertexError(ValueError):
    """The exactness statement is only made for cones with a vertex."""


@dataclass(frozen=True, eq=False)
class DegreeComplex:
    """Wedge-power complex in one degree.

    ``dims[a]`` is the dimension at level a and ``differentials[a]`` the
    matrix of level a into level a+1 (columns indexed by the lexicographic
    wedge basis).  Consecutive differentials compose to zero; this is
    asserted at construction.
    """

    degree: tuple
    characteristic: int
    dims: tuple
    differentials: tuple


def degree_complex(cone, m, char):
    """The complex in degree m, differential given by wedging with m in V_m.

    When m vanishes in V_m (over GF(p) exactly for m in p times the
    lattice, over QQ only for m = 0) every differential is the zero matrix.
    """
    field = field_of_characteristic(char)
    sub = degree_subspace(cone, m, char)
    m = tuple(int(x) for x in m)
    w = sub.coordinates_of(m)
    d = sub.dim
    n = cone.ambient_rank
    diffs = []
    for a in range(n):
        source = wedge_subsets(d, a)
        target = wedge_subsets(d, a + 1)
        index = {J: j for j, J in enumerate(target)}
        D = zero_matrix(len(target), len(source))
        for ci, I in enumerate(source):
            for pos, c in enumerate(w):
                if c == field.zero or pos in I:
                    continue
                J = tuple(sorted(I + (pos,)))
                sign = -1 if sum(1 for x in I if x < pos) % 2 else 1
                D[index[J], ci] = field.mul(field.of(sign), c)
        diffs.append(D)
    for a in range(n - 1):
        prod = mat_mul(field, diffs[a + 1], diffs[a])
        if any(x != field.zero for x in prod.flat):
            raise AssertionError("differential does not square to zero")
    return DegreeComplex(m, char, tuple(comb(d, a) for a in range(n + 1)), tuple(diffs))


def cohomology(dc):
    """Cohomology dimensions of a degree complex by rank and nullity."""
    field = field_of_characteristic(dc.characteristic)
    n = len(dc.dims) - 1
    ranks = [rank(field, D) for D in dc.differentials]
    out = []
    for a in range(n + 1):
        h = dc.dims[a]
        if a < n:
            h -= ranks[a]
        if a > 0:
            h -= ranks[a - 1]
        out.append(h)
    return tuple(out)


# ---------------------------------------------------------------------------
# tables over a box of degrees


def _thread_count():
    raw = os.environ.get("TORIC_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _chunk_cohomology(args):
    cone, degrees, char = args
    memo = {}
    out = {}
    for m in degrees:
        ids = tuple(f.index for f in cone.facets_containing(m))
        if char:
            # V_m and the coordinates of m in it only depend on the face
            # set and on m mod p, so the box collapses to few cases
            key = (ids, tuple(x % char for x in m))
            got = memo.get(key)
            if got is None:
                got = cohomology(degree_complex(cone, m, char))
                memo[key] = got
        else:
            got = cohomology(degree_complex(cone, m, char))
        out[m] = got
    return out


@dataclass
class CohomologyTable:
    """Per-degree cohomology dimensions over the box ``[-bound, bound]^n``."""

    rays: tuple
    characteristic: int
    bound: int
    entries: dict

    def degrees(self):
        return tuple(sorted(self.entries))

    def to_json(self):
        payload = {
            "rays": [list(r) for r in self.rays],
            "characteristic": self.characteristic,
            "bound": self.bound,
            "cohomology": [
                {"degree": list(m), "h": list(self.entries[m])}
                for m in sorted(self.entries)
            ],
        }
        return json.dumps(payload, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        entries = {
            tuple(row["degree"]): tuple(row["h"]) for row in data["cohomology"]
        }
        return cls(
            tuple(tuple(r) for r in data["rays"]),
            data["characteristic"],
            data["bound"],
            entries,
        )

    def to_csv(self):
        degrees = self.degrees()
        width = len(degrees[0])
        levels = len(self.entries[degrees[0]])
        lines = [",".join([f"m{i + 1}" for i in range(width)] + [f"h{a}" for a in range(levels)])]
        for m in degrees:
            lines.append(",".join(str(x) for x in list(m) + list(self.entries[m])))
        return "\n".join(lines) + "\n"

    def table_hash(self):
        return hashlib.sha256(self.to_csv().encode()).hexdigest()


def cohomology_table(cone, bound, char, threads=None):
    """Cohomology of every degree in the box, memoized and optionally parallel.

    The parallel path partitions the degrees round-robin over worker
    processes and reassembles the table in box order, so the result is
    identical to the serial one.
    """
    degrees = cone.lattice_points(bound)
    if threads is None:
        threads = _thread_count()
    if threads > 1 and len(degrees) >= 64:
        chunks = [(cone, degrees[i::threads], char) for i in range(threads)]
        entries = {}
        with concurrent.futures.ProcessPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(_chunk_cohomology, chunks):
                entries.update(part)
        entries = {m: entries[m] for m in degrees}
    else:
        entries = _chunk_cohomology((cone, degrees, char))
    return CohomologyTable(cone.rays, char, bound, entries)


# ---------------------------------------------------------------------------
# characteristic zero: contractibility degree by degree


@dataclass
class PoincareReport:
    """Outcome of the characteristic-zero exactness check over a box."""

    rays: tuple
    bound: int
    checked: int
    passed: bool
    violations: tuple
    table_hash: str

    def to_json(self):
        payload = {
            "rays": [list(r) for r in self.rays],
            "bound": self.bound,
            "checked": self.checked,
            "passed": self.passed,
            "violations": [
                {"degree": list(m), "h": list(h), "expected": list(want)}
                for m, h, want in self.violations
            ],
            "table_hash": self.table_hash,
        }
        return json.dumps(payload, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        violations = tuple(
            (tuple(v["degree"]), tuple(v["h"]), tuple(v["expected"]))
            for v in data["violations"]
        )
        return cls(
            tuple(tuple(r) for r in data["rays"]),
            data["bound"],
            data["checked"],
            data["passed"],
            violations,
            data["table_hash"],
        )

    def to_text(self):
        head = (
            f"poincare check over QQ: bound={self.bound}, "
            f"degrees checked={self.checked}: {'PASS' if self.passed else 'FAIL'}"
        )
        lines = [head]
        for m, h, want in self.violations:
            lines.append(f"  degree {m}: h={h}, expected {want}")
        return "\n".join(lines)


def poincare_check(cone, bound, threads=None):
    """Exactness over QQ, degree by degree: constants in degree zero, else nothing.

    Only stated for an exponent cone with a vertex (equivalently, the
    coordinate ring has no invertible variables); without one the check is
    refused rather than reported as a failure.
    """
    if not cone.has_vertex():
        raise NoVertexError(
            "exponent cone contains a line; the exactness statement requires a vertex"
        )
    table = cohomology_table(cone, bound, 0, threads)
    n = cone.ambient_rank
    origin = (0,) * n
    point = tuple([1] + [0] * n)
    nothing = (0,) * (n + 1)
    violations = []
    for m in sorted(table.entries):
        h = table.entries[m]
        want = point if m == origin else nothing
        if h != want:
            violations.append((m, h, want))
    return PoincareReport(
        cone.rays,
        bound,
        len(table.entries),
        not violations,
        tuple(violations),
        table.table_hash(),
    )


# ---------------------------------------------------------------------------
# whole-box oracle


def oracle_full_complex(cone, bound, char):
    """Total cohomology of the box-truncated complex, without degree splitting.

    Assembles each differential of the truncated complex as a single sparse
    matrix over all degrees at once and computes ranks by online sparse
    elimination.  Returns the total dimension vector ``h(0..n)``; comparing
    it against the column sums of :func:`cohomology_table` exercises both
    the grading argument and two unrelated elimination codepaths.
    """
    field = field_of_characteristic(char)
    degrees = cone.lattice_points(bound)
    n = cone.ambient_rank
    data = []
    for m in degrees:
        sub = degree_subspace(cone, m, char)
        data.append((sub.dim, sub.coordinates_of(m)))
    offsets = []
    totals = []
    for a in range(n + 1):
        offs = []
        t = 0
        for d, _ in data:
            offs.append(t)
            t += comb(d, a)
        offsets.append(offs)
        totals.append(t)
    ranks = []
    for a in range(n):
        cols = []
        for k, (d, w) in enumerate(data):
            if all(x == field.zero for x in w):
                continue
            target = {J: j for j, J in enumerate(wedge_subsets(d, a + 1))}
            base = offsets[a + 1][k]
            for I in wedge_subsets(d, a):
                col = {}
                for pos, c in enumerate(w):
                    if c == field.zero or pos in I:
                        continue
                    J = tuple(sorted(I + (pos,)))
                    sign = -1 if sum(1 for x in I if x < pos) % 2 else 1
                    col[base + target[J]] = field.mul(field.of(sign), c)
                if col:
                    cols.append(col)
        ranks.append(sparse_rank(field, cols))
    out = []
    for a in range(n + 1):
        h = totals[a]
        if a < n:
            h -= ranks[a]
        if a > 0:
            h -= ranks[a - 1]
        out.append(h)
    return tuple(out)
