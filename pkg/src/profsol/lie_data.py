"""Cartan-Killing types, Cartan matrices, centers and diagram symmetries.

Node ordering follows Bourbaki throughout:

* ``A_n``: the chain 1 - 2 - ... - n.
* ``B_n``: the chain 1 - ... - n, with node n the unique short root.
* ``C_n``: the chain 1 - ... - n, with node n the unique long root.
* ``D_n``: the chain 1 - ... - (n-2), with nodes n-1 and n both attached
  to node n-2.
* ``E_n``: 1 - 3 - 4 - 5 - ... - n, with node 2 attached to node 4.
* ``F_4``: 1 - 2 => 3 - 4, nodes 1 and 2 long.
* ``G_2``: node 1 short, node 2 long.

Python indices are zero based, so Bourbaki node ``i`` sits at row ``i - 1``.
Entry ``(i, j)`` of the Cartan matrix is ``2 (a_i, a_j) / (a_j, a_j)``;
with this convention the ``B_n`` matrix has ``-2`` in position
``(n-1, n)`` and ``-1`` in position ``(n, n-1)`` (1-based).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache, total_ordering
from math import gcd, prod

FAMILIES = "ABCDEFG"
MAX_CLASSICAL_RANK = 25

_MIN_RANK = {"A": 1, "B": 3, "C": 2, "D": 4}


@total_ordering
@dataclass(frozen=True)
class CartanType:
    """A Cartan-Killing type such as ``A_3`` or ``E_8``.

    ``B_2`` and ``D_3`` are rejected: they coincide with ``C_2`` and
    ``A_3`` and only the latter names are accepted.
    """

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise ValueError(f"rank must be an integer, got {self.rank!r}")
        if not is_admissible(self.family, self.rank):
            raise ValueError(f"{self.family}_{self.rank} is not an admissible type")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        m = re.fullmatch(r"\s*([A-Ga-g])_?\{?(\d+)\}?\s*", text)
        if m is None:
            raise ValueError(f"cannot parse Cartan type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}_{self.rank}"

    def _key(self):
        return (FAMILIES.index(self.family), self.rank)

    def __lt__(self, other):
        if not isinstance(other, CartanType):
            return NotImplemented
        return self._key() < other._key()

    @property
    def compact_name(self) -> str:
        return f"{self.family}{self.rank}"


def is_admissible(family: str, rank: int) -> bool:
    if family in _MIN_RANK:
        return _MIN_RANK[family] <= rank <= MAX_CLASSICAL_RANK
    if family == "E":
        return rank in (6, 7, 8)
    if family == "F":
        return rank == 4
    if family == "G":
        return rank == 2
    return False


def admissible_types(max_rank: int) -> list[CartanType]:
    """All admissible types of rank at most ``max_rank``, sorted."""
    return sorted(
        CartanType(f, n)
        for f in FAMILIES
        for n in range(1, max_rank + 1)
        if is_admissible(f, n)
    )


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Finite abelian group in invariant-factor form ``Z/d1 x Z/d2 x ...``."""

    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "invariant_factors", tuple(self.invariant_factors))
        fs = self.invariant_factors
        if any(d < 2 for d in fs):
            raise ValueError("invariant factors must be >= 2")
        if any(fs[i + 1] % fs[i] for i in range(len(fs) - 1)):
            raise ValueError(f"divisibility chain violated: {fs}")

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    @property
    def is_cyclic(self) -> bool:
        return len(self.invariant_factors) <= 1

    def __str__(self):
        if not self.invariant_factors:
            return "trivial"
        return " x ".join(f"Z/{d}" for d in self.invariant_factors)


def _gram(t: CartanType) -> list[list[int]]:
    """Integer-scaled Gram matrix of the simple roots."""
    n, f = t.rank, t.family
    g = [[0] * n for _ in range(n)]

    def bond(i, j, value):
        g[i - 1][j - 1] = g[j - 1][i - 1] = value

    if f in "AD":
        for i in range(n):
            g[i][i] = 2
        chain = n if f == "A" else n - 1
        for i in range(1, chain):
            bond(i, i + 1, -1)
        if f == "D":
            bond(n - 2, n, -1)
    elif f == "B":
        for i in range(n - 1):
            g[i][i] = 4
        g[n - 1][n - 1] = 2
        for i in range(1, n):
            bond(i, i + 1, -2)
    elif f == "C":
        for i in range(n - 1):
            g[i][i] = 2
        g[n - 1][n - 1] = 4
        for i in range(1, n - 1):
            bond(i, i + 1, -1)
        bond(n - 1, n, -2)
    elif f == "E":
        for i in range(n):
            g[i][i] = 2
        for i, j in [(1, 3), (3, 4), (2, 4)] + [(k, k + 1) for k in range(4, n)]:
            bond(i, j, -1)
    elif f == "F":
        for i, sq in enumerate((4, 4, 2, 2)):
            g[i][i] = sq
        bond(1, 2, -2)
        bond(2, 3, -2)
        bond(3, 4, -1)
    elif f == "G":
        g[0][0], g[1][1] = 2, 6
        bond(1, 2, -3)
    return g


@lru_cache(maxsize=None)
def _cartan_rows(t: CartanType) -> tuple[tuple[int, ...], ...]:
    g = _gram(t)
    n = t.rank
    return tuple(tuple(2 * g[i][j] // g[j][j] for j in range(n)) for i in range(n))


def cartan_matrix(t: CartanType) -> list[list[int]]:
    """Cartan matrix of ``t`` in Bourbaki ordering (fresh nested list)."""
    return [list(row) for row in _cartan_rows(t)]


def determinant(m: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in m]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def smith_normal_form(m: list[list[int]]) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix.

    Returns the nonnegative diagonal entries ``d1 | d2 | ...`` (length
    ``min(rows, cols)``), zeros last.
    """
    a = [list(row) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    for t in range(min(rows, cols)):
        # Move a nonzero entry of minimal absolute value to the pivot.
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                diag.extend([0] * (min(rows, cols) - t))
                return _normalize_diagonal(diag)
            i, j = best
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
            p = a[t][t]
            done = True
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    done = False
            if not done:
                continue
            # Pivot must divide the remaining block.
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                diag.append(abs(p))
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
    return _normalize_diagonal(diag)


def _normalize_diagonal(diag: list[int]) -> list[int]:
    # Re-establish the divisibility chain (gcd/lcm swaps) for safety.
    d = [abs(x) for x in diag]
    n = len(d)
    for i in range(n):
        for j in range(i + 1, n):
            if d[i] == 0 and d[j]:
                d[i], d[j] = d[j], 0
            elif d[i] and d[j] and d[j] % d[i]:
                g = gcd(d[i], d[j])
                d[i], d[j] = g, d[i] * d[j] // g
    return d


@lru_cache(maxsize=None)
def center(t: CartanType) -> FiniteAbelianGroup:
    """Center of the simply-connected group of type ``t``.

    Computed as the cokernel of the Cartan matrix acting on the root
    lattice, i.e. weight lattice modulo root lattice.
    """
    factors = [d for d in smith_normal_form(cartan_matrix(t)) if d != 1]
    if 0 in factors:
        raise ArithmeticError(f"singular Cartan matrix for {t}")
    return FiniteAbelianGroup(tuple(factors))


def dynkin_symmetries(t: CartanType) -> list[tuple[int, ...]]:
    """All permutations of the simple roots preserving the Cartan matrix.

    Backtracking search: each partial assignment is checked against every
    entry already fixed, so branches die early.
    """
    a = _cartan_rows(t)
    n = t.rank
    found: list[tuple[int, ...]] = []
    perm = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            found.append(tuple(perm))
            return
        for img in range(n):
            if used[img] or a[img][img] != a[i][i]:
                continue
            if all(
                a[i][j] == a[img][perm[j]] and a[j][i] == a[perm[j]][img]
                for j in range(i)
            ):
                perm[i], used[img] = img, True
                extend(i + 1)
                perm[i], used[img] = -1, False

    extend(0)
    return found


@lru_cache(maxsize=None)
def dynkin_symmetry_order(t: CartanType) -> int:
    return len(dynkin_symmetries(t))
