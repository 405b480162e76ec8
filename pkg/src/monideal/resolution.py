"""Multigraded Betti numbers, regularity and linear quotients.

Betti numbers come from the Koszul complex: for a multidegree a the strand
of K(x; I) in degree a is the chain complex of the simplicial complex

    K^a(I) = { S ⊆ supp(a) : x^(a - e_S) ∈ I }

(faces indexed by size, empty face in position 0), so beta_{i,a}(I) is the
dimension of its i-th homology.  Ranks are taken over GF(p).
"""
from __future__ import annotations

import enum
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .core import DomainError, MonomialIdeal, ResourceCapError, minimalize
from .linalg import rank_mod_p

DEFAULT_CHAR = 32003
TAYLOR_MAX_GENS = 8
LINEAR_QUOTIENTS_CAP = 22
_CHUNK = 2048


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % q for q in range(2, int(p ** 0.5) + 1))


def _check_char(p: int) -> None:
    if not _is_prime(p):
        raise DomainError(f"field characteristic must be prime, got {p}")
    if p * p >= 2 ** 63:
        raise DomainError(f"characteristic {p} too large for int64 elimination")


@dataclass
class BettiTable:
    """Nonzero multigraded Betti numbers beta_{i,a}(I)."""

    nvars: int
    entries: dict = field(default_factory=dict)
    field_char: int = DEFAULT_CHAR

    def regularity(self) -> int:
        return max(sum(a) - i for (i, a) in self.entries)

    def projective_dimension(self) -> int:
        return max(i for (i, _) in self.entries)

    def total(self, i: int) -> int:
        return sum(r for (k, _), r in self.entries.items() if k == i)

    def coarse(self) -> dict:
        """Graded Betti numbers beta_{i,j} with j the total degree."""
        out: dict = {}
        for (i, a), r in self.entries.items():
            key = (i, sum(a))
            out[key] = out.get(key, 0) + r
        return dict(sorted(out.items()))

    def to_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "field_char": self.field_char,
            "entries": [[i, list(a), r] for (i, a), r in sorted(self.entries.items())],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "BettiTable":
        entries = {(int(i), tuple(a)): int(r) for i, a, r in doc["entries"]}
        return cls(int(doc["nvars"]), entries, int(doc["field_char"]))

    def format(self) -> str:
        """Macaulay2-style table: column i, row j - i."""
        coarse = self.coarse()
        if not coarse:
            return "(empty)"
        top_i = max(i for i, _ in coarse)
        rows = sorted({j - i for i, j in coarse})
        width = max(len(str(v)) for v in coarse.values()) + 1
        width = max(width, len(str(top_i)) + 1, 6)
        lines = [" " * 7 + "".join(f"{i:>{width}}" for i in range(top_i + 1))]
        totals = [sum(v for (i, _), v in coarse.items() if i == k) for k in range(top_i + 1)]
        lines.append(f"{'total:':>7}" + "".join(f"{t:>{width}}" for t in totals))
        for r in range(rows[0], rows[-1] + 1):
            cells = [coarse.get((i, i + r), 0) for i in range(top_i + 1)]
            lines.append(f"{str(r) + ':':>7}" + "".join(
                f"{(c if c else '.'):>{width}}" for c in cells))
        return "\n".join(lines)


def _require_proper(ideal: MonomialIdeal) -> None:
    if ideal.is_zero():
        raise DomainError("Betti numbers of the zero ideal are not defined here")
    if ideal.is_unit():
        raise DomainError("Betti numbers of the unit ideal are not defined here")


def _lcm_lattice_points(gens: np.ndarray, bound: np.ndarray) -> np.ndarray:
    """Multidegrees a <= bound that equal the lcm of the generators dividing x^a.

    Every other a gives a cone K^a (or an empty one), hence vanishing Betti
    numbers: a coordinate with a_j above every dividing generator is an apex.
    """
    box = np.array(list(itertools.product(*(range(int(b) + 1) for b in bound))), dtype=np.int64)
    keep = []
    for start in range(0, len(box), _CHUNK):
        chunk = box[start:start + _CHUNK]
        divides = np.all(gens[None, :, :] <= chunk[:, None, :], axis=2)
        lcms = np.where(divides[:, :, None], gens[None, :, :], 0).max(axis=1)
        hit = divides.any(axis=1) & np.all(lcms == chunk, axis=1)
        keep.append(chunk[hit])
    return np.concatenate(keep) if keep else np.zeros((0, gens.shape[1]), dtype=np.int64)


def _chain_homology(faces_by_size: list, p: int) -> dict:
    """Homology dimensions of a simplicial chain complex given faces grouped by size.

    ``faces_by_size[k]`` lists faces of size k as sorted tuples; the boundary
    of a face drops one vertex with alternating sign.
    """
    index = [{f: r for r, f in enumerate(level)} for level in faces_by_size]
    ranks = [0] * (len(faces_by_size) + 1)
    for k in range(1, len(faces_by_size)):
        rows, cols = faces_by_size[k - 1], faces_by_size[k]
        if not rows or not cols:
            continue
        mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
        for c, face in enumerate(cols):
            for pos in range(len(face)):
                sub = face[:pos] + face[pos + 1:]
                r = index[k - 1].get(sub)
                if r is not None:
                    mat[r, c] = -1 if pos % 2 else 1
        ranks[k] = rank_mod_p(mat, p)
    out = {}
    for k, level in enumerate(faces_by_size):
        dim = len(level) - ranks[k] - ranks[k + 1]
        if dim:
            out[k] = dim
    return out


def _koszul_strand(gens: np.ndarray, a: np.ndarray, p: int) -> dict:
    divisors = gens[np.all(gens <= a, axis=1)]
    supp = [j for j in range(len(a)) if a[j] > 0]
    k = len(supp)
    masks = np.arange(1 << k)
    bits = ((masks[:, None] >> np.arange(k)[None, :]) & 1).astype(np.int64)
    shifted = np.repeat(a[None, :], len(masks), axis=0)
    shifted[:, supp] -= bits
    inside = np.all(divisors[None, :, :] <= shifted[:, None, :], axis=2).any(axis=1)
    if inside.all():
        return {}
    faces: list = [[] for _ in range(k + 1)]
    for mask in np.nonzero(inside)[0]:
        face = tuple(j for j in range(k) if (mask >> j) & 1)
        faces[len(face)].append(face)
    while faces and not faces[-1]:
        faces.pop()
    return _chain_homology(faces, p)


def _strands(args) -> list:
    gens, points, p = args
    out = []
    for a in points:
        for i, r in _koszul_strand(gens, a, p).items():
            out.append((i, tuple(int(v) for v in a), r))
    return out


def betti(ideal: MonomialIdeal, p: int = DEFAULT_CHAR, jobs: Optional[int] = None) -> BettiTable:
    """Multigraded Betti numbers of ``ideal`` over GF(p)."""
    _require_proper(ideal)
    _check_char(p)
    gens = ideal.array
    points = _lcm_lattice_points(gens, ideal.lcm())
    if jobs and jobs > 1 and len(points) > jobs:
        chunks = np.array_split(points, jobs)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_strands, [(gens, c, p) for c in chunks]))
    else:
        parts = [_strands((gens, points, p))]
    entries = {}
    for part in parts:
        for i, a, r in part:
            entries[(i, a)] = r
    return BettiTable(ideal.nvars, dict(sorted(entries.items())), p)


def regularity(ideal: MonomialIdeal, p: int = DEFAULT_CHAR, jobs: Optional[int] = None) -> int:
    return betti(ideal, p, jobs).regularity()


def has_linear_resolution(ideal: MonomialIdeal, p: int = DEFAULT_CHAR, jobs: Optional[int] = None) -> bool:
    """Unit and principal ideals count as linear; otherwise reg(I) = d is required."""
    if ideal.is_zero():
        raise DomainError("linear resolution of the zero ideal")
    if ideal.is_unit() or ideal.is_principal():
        return True
    d = ideal.equigenerated_degree()
    if d is None:
        return False
    return regularity(ideal, p, jobs) == d


def taylor_betti(ideal: MonomialIdeal, p: int = DEFAULT_CHAR) -> BettiTable:
    """Betti numbers from the Taylor complex; an independent check on :func:`betti`."""
    _require_proper(ideal)
    _check_char(p)
    m = len(ideal.gens)
    if m > TAYLOR_MAX_GENS:
        raise ResourceCapError(f"Taylor oracle limited to {TAYLOR_MAX_GENS} generators, got {m}")
    gens = [tuple(g) for g in ideal.gens]
    by_lcm: dict = {}
    for size in range(1, m + 1):
        for subset in itertools.combinations(range(m), size):
            lcm = tuple(max(col) for col in zip(*(gens[s] for s in subset)))
            by_lcm.setdefault(lcm, []).append(subset)
    entries = {}
    for a, subsets in by_lcm.items():
        top = max(len(s) for s in subsets)
        faces: list = [[] for _ in range(top + 1)]
        for s in subsets:
            faces[len(s)].append(s)
        # a face of size k sits in homological position k - 1
        for k, dim in _chain_homology(faces, p).items():
            entries[(k - 1, a)] = dim
    return BettiTable(ideal.nvars, dict(sorted(entries.items())), p)


class QuotientStatus(enum.Enum):
    FOUND = "found"
    NOT_FOUND = "not_found"
    UNKNOWN = "unknown"


@dataclass
class QuotientOrderResult:
    status: QuotientStatus
    order: Optional[list] = None

    @property
    def found(self) -> bool:
        return self.status is QuotientStatus.FOUND


def colon_is_linear(previous, u) -> bool:
    """Whether (previous) : u is generated by variables."""
    quotients = [tuple(max(a - b, 0) for a, b in zip(v, u)) for v in previous]
    return all(sum(q) == 1 for q in minimalize(quotients))


def check_quotient_order(order) -> bool:
    return all(colon_is_linear(order[:k], order[k]) for k in range(1, len(order)))


def linear_quotients(ideal: MonomialIdeal, cap: int = LINEAR_QUOTIENTS_CAP) -> QuotientOrderResult:
    """Search for an order of G(I) with linear quotients.

    Whether a generator may come next depends only on the SET already placed,
    so dead sets are memoized and NOT_FOUND is exhaustive.
    """
    if ideal.is_zero() or ideal.equigenerated_degree() is None:
        raise DomainError("linear quotients search needs a nonzero equigenerated ideal")
    gens = list(ideal.gens)  # descending lex already
    m = len(gens)
    if m > cap:
        return QuotientOrderResult(QuotientStatus.UNKNOWN)
    full = (1 << m) - 1
    dead: set = set()

    def extend(mask: int, order: list) -> Optional[list]:
        if mask == full:
            return order
        if mask in dead:
            return None
        placed = [gens[j] for j in order]
        for c in range(m):
            if mask >> c & 1:
                continue
            if colon_is_linear(placed, gens[c]):
                found = extend(mask | (1 << c), order + [c])
                if found is not None:
                    return found
        dead.add(mask)
        return None

    for first in range(m):
        found = extend(1 << first, [first])
        if found is not None:
            return QuotientOrderResult(QuotientStatus.FOUND, [gens[j] for j in found])
    return QuotientOrderResult(QuotientStatus.NOT_FOUND)
