"""Inner real forms of split simple groups, with real ranks and H^2 invariants.

A record's ``h2_invariant`` is the image of the form's class under
``H^1(R, Ad G) -> H^2(R, Z(G))``, written as bits (one per ``Z/2`` factor of
``H^2(R, Z(G))``; two bits for type ``D_{2k}``).  Only forms that can occur at
a real place of a global twist which is split at every finite place are
listed.

Classical families are generated; the exceptional families come from the
fixture ``data/exceptional_real_forms.txt``.  Table lines have the format::

    type;name;real_rank;inv_bits;is_split

e.g. ``E7;E7(-25);3;0;0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .lie_data import CartanType, center
from .qforms import DiagonalForm, hasse_invariant

EXCEPTIONAL_RESOURCE = "exceptional_real_forms.txt"


@dataclass(frozen=True)
class RealFormRecord:
    type: CartanType
    name: str
    real_rank: int
    h2_invariant: tuple[int, ...]
    is_split: bool
    # (p, q) for Spin(p, q) and Sp(p, q); used for deterministic tie-breaks.
    params: tuple[int, int] | None = None

    @property
    def has_trivial_invariant(self) -> bool:
        return not any(self.h2_invariant)

    def __str__(self):
        return self.name


def invariant_length(t: CartanType) -> int:
    return 2 if len(center(t).invariant_factors) == 2 else 1


def spin_invariant(t: CartanType, p: int, q: int) -> int | None:
    """Relative real Hasse-Witt class of ``Spin(p, q)`` against the split form.

    Returns ``None`` when ``Spin(p, q)`` is an outer form (type ``D`` with
    nontrivial discriminant).  For type ``B`` the form is first rescaled by
    ``-1`` if needed so that its determinant matches the split one; this
    does not change the special orthogonal group.
    """
    n = t.rank
    if t.family == "B":
        split = DiagonalForm.signed(n + 1, n)
    elif t.family == "D":
        split = DiagonalForm.signed(n, n)
    else:
        raise ValueError(f"no spin forms for {t}")
    form = DiagonalForm.signed(p, q)
    if form.dim != split.dim:
        raise ValueError(f"Spin({p},{q}) has the wrong dimension for {t}")
    same_det = (q - split_negatives(t)) % 2 == 0
    if not same_det:
        if t.family == "D":
            return None
        form = form.scaled(-1)
    if t.family == "D" and (p - q) % 4:
        return None
    return 0 if hasse_invariant(form, "inf") == hasse_invariant(split, "inf") else 1


def split_negatives(t: CartanType) -> int:
    return t.rank


def _classical_forms(t: CartanType) -> list[RealFormRecord]:
    n, f = t.rank, t.family
    zero = (0,) * invariant_length(t)
    one = (1,) + zero[1:]
    recs: list[RealFormRecord] = []
    if f == "A":
        recs.append(RealFormRecord(t, f"SL_{n + 1}(R)", n, zero, True))
        if n % 2 == 1:
            m = (n + 1) // 2
            recs.append(RealFormRecord(t, f"SL_{m}(H)", m - 1, one, False))
    elif f == "C":
        recs.append(RealFormRecord(t, f"Sp_{2 * n}(R)", n, zero, True))
        for q in range(0, n // 2 + 1):
            p = n - q
            recs.append(RealFormRecord(t, f"Sp({p},{q})", q, one, False, (p, q)))
        recs.sort(key=lambda r: (not r.is_split, -r.real_rank))
    elif f in "BD":
        dim = 2 * n + 1 if f == "B" else 2 * n
        split_q = n
        for q in range(0, dim // 2 + 1):
            p = dim - q
            bit = spin_invariant(t, p, q)
            if bit is None:
                continue
            inv = (bit,) + zero[1:]
            is_split = q == split_q
            recs.append(RealFormRecord(t, f"Spin({p},{q})", q, inv, is_split, (p, q)))
        recs.sort(key=lambda r: (not r.is_split, -r.real_rank))
    return recs


def _parse_bool(text: str) -> bool:
    v = text.strip().lower()
    if v in ("1", "true", "yes"):
        return True
    if v in ("0", "false", "no"):
        return False
    raise ValueError(f"bad boolean {text!r}")


def parse_table(text: str) -> dict[CartanType, list[RealFormRecord]]:
    """Parse and validate a real-form table (format in the module docstring)."""
    table: dict[CartanType, list[RealFormRecord]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = [x.strip() for x in line.split(";")]
        if len(fields) != 5:
            raise ValueError(f"line {lineno}: expected 5 fields, got {len(fields)}")
        tname, name, rank, bits, split = fields
        t = CartanType.parse(tname)
        if not bits or set(bits) - {"0", "1"}:
            raise ValueError(f"line {lineno}: bad invariant bits {bits!r}")
        rec = RealFormRecord(t, name, int(rank), tuple(int(b) for b in bits), _parse_bool(split))
        table.setdefault(t, []).append(rec)
    for t, recs in table.items():
        validate_records(t, recs)
    return table


def validate_records(t: CartanType, recs: list[RealFormRecord]) -> None:
    splits = [r for r in recs if r.is_split]
    if len(splits) != 1:
        raise ValueError(f"{t}: expected exactly one split form, found {len(splits)}")
    s = splits[0]
    if s.real_rank != t.rank or any(s.h2_invariant):
        raise ValueError(f"{t}: split form must have full rank and zero invariant")
    odd_center = center(t).exponent % 2 == 1
    for r in recs:
        if r.type != t:
            raise ValueError(f"{r.name}: type mismatch")
        if not 0 <= r.real_rank <= t.rank:
            raise ValueError(f"{t} {r.name}: real rank {r.real_rank} out of range")
        if len(r.h2_invariant) != invariant_length(t):
            raise ValueError(f"{t} {r.name}: invariant has wrong length")
        if odd_center and any(r.h2_invariant):
            raise ValueError(f"{t} {r.name}: odd center forces a zero invariant")


def format_record(r: RealFormRecord) -> str:
    bits = "".join(str(b) for b in r.h2_invariant)
    return f"{r.type.compact_name};{r.name};{r.real_rank};{bits};{int(r.is_split)}"


def load_table(path: str | Path | None = None) -> dict[CartanType, list[RealFormRecord]]:
    if path is None:
        text = resources.files("profsol.data").joinpath(EXCEPTIONAL_RESOURCE).read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    return parse_table(text)


@lru_cache(maxsize=1)
def _exceptional_table() -> dict[CartanType, list[RealFormRecord]]:
    return load_table()


@lru_cache(maxsize=None)
def _inner_real_forms(t: CartanType) -> tuple[RealFormRecord, ...]:
    if t.family in "ABCD":
        recs = _classical_forms(t)
        validate_records(t, recs)
        return tuple(recs)
    return tuple(_exceptional_table()[t])


def inner_real_forms(t: CartanType) -> list[RealFormRecord]:
    """Inner real forms of the split group of type ``t``, split form first."""
    return list(_inner_real_forms(t))


def split_form(t: CartanType) -> RealFormRecord:
    return _inner_real_forms(t)[0]


def h1_real_trivial(t: CartanType) -> bool:
    """Whether ``H^1(R, G)`` is trivial for the split simply-connected ``G``.

    True exactly for ``SL_n`` and ``Sp_2n``, i.e. families A and C.
    """
    return t.family in "AC"
