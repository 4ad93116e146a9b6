"""Number field profiles: degree, signature, places and local determinacy.

A profile never carries field arithmetic.  Everything downstream only needs
the counts ``r1`` (real places) and ``r2`` (complex places) plus whether the
field is determined by its ring of finite adeles.  Finite places of a general
field are abstract labels; only over the rationals do concrete primes appear.

Profile grammar: comma separated ``key=value`` pairs with keys ``deg``,
``r1``, ``r2``, ``ld`` (``yes``/``no``/``unknown``/``auto``, default
``auto``) and ``label`` (free text), e.g.
``deg=8,r1=2,r2=3,ld=no,label=Q(8throot7)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

LD_VALUES = ("yes", "no", "unknown", "auto")
REGISTRY_RESOURCE = "not_locally_determined.txt"

# Fields of degree at most six are arithmetically solitary (Klingen, 1998).
LOCALLY_DETERMINED_MAX_DEGREE = 6


@dataclass(frozen=True)
class NumberFieldProfile:
    degree: int
    r1: int
    r2: int
    ld_override: str = "auto"
    label: str = ""

    def __post_init__(self):
        for name in ("degree", "r1", "r2"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"{name} must be an integer")
        if self.degree < 1:
            raise ValueError("degree must be positive")
        if self.r1 < 0 or self.r2 < 0:
            raise ValueError("r1 and r2 must be nonnegative")
        if self.r1 + 2 * self.r2 != self.degree:
            raise ValueError(
                f"signature ({self.r1},{self.r2}) does not match degree {self.degree}"
            )
        if self.ld_override not in LD_VALUES:
            raise ValueError(f"ld must be one of {LD_VALUES}, got {self.ld_override!r}")

    @classmethod
    def from_signature(cls, r1: int, r2: int, **kw) -> "NumberFieldProfile":
        return cls(r1 + 2 * r2, r1, r2, **kw)

    @classmethod
    def rationals(cls) -> "NumberFieldProfile":
        return cls(1, 1, 0, label="Q")

    @property
    def signature(self) -> tuple[int, int]:
        return (self.r1, self.r2)

    @property
    def is_rationals(self) -> bool:
        return self.degree == 1

    @property
    def is_imaginary_quadratic(self) -> bool:
        return self.signature == (0, 1)

    @property
    def is_totally_imaginary(self) -> bool:
        return self.r1 == 0

    def real_places(self) -> list["Place"]:
        return [Place.real(i) for i in range(self.r1)]

    def complex_places(self) -> list["Place"]:
        return [Place.complex(i) for i in range(self.r2)]

    def infinite_places(self) -> list["Place"]:
        return self.real_places() + self.complex_places()

    def has_place(self, v: "Place") -> bool:
        if v.kind == "real":
            return v.value < self.r1
        if v.kind == "complex":
            return v.value < self.r2
        if v.kind == "prime":
            return self.is_rationals
        return True

    def display_name(self) -> str:
        if self.label:
            return self.label
        if self.is_rationals:
            return "Q"
        return f"k[deg={self.degree},sig=({self.r1},{self.r2})]"

    def to_spec(self) -> str:
        parts = [f"deg={self.degree}", f"r1={self.r1}", f"r2={self.r2}"]
        if self.ld_override != "auto":
            parts.append(f"ld={self.ld_override}")
        if self.label:
            parts.append(f"label={self.label}")
        return ",".join(parts)


@dataclass(frozen=True, order=True)
class Place:
    """A place of a number field.

    ``kind`` is one of ``real``, ``complex``, ``prime`` (a rational prime,
    only meaningful over Q) or ``finite`` (an abstract finite place label).
    """

    kind: str
    value: int | str = field(default=0)

    def __post_init__(self):
        if self.kind in ("real", "complex"):
            if not isinstance(self.value, int) or self.value < 0:
                raise ValueError(f"{self.kind} place index must be a nonnegative int")
        elif self.kind == "prime":
            if not isinstance(self.value, int) or not _is_prime(self.value):
                raise ValueError(f"{self.value!r} is not a prime")
        elif self.kind == "finite":
            if not isinstance(self.value, str) or not self.value:
                raise ValueError("abstract finite places need a nonempty label")
        else:
            raise ValueError(f"unknown place kind {self.kind!r}")

    @classmethod
    def real(cls, index: int = 0) -> "Place":
        return cls("real", index)

    @classmethod
    def complex(cls, index: int = 0) -> "Place":
        return cls("complex", index)

    @classmethod
    def prime(cls, p: int) -> "Place":
        return cls("prime", p)

    @classmethod
    def finite(cls, label: str) -> "Place":
        return cls("finite", label)

    @property
    def is_infinite(self) -> bool:
        return self.kind in ("real", "complex")

    def __str__(self):
        if self.kind == "real":
            return f"v{self.value}"
        if self.kind == "complex":
            return f"w{self.value}"
        if self.kind == "prime":
            return f"p{self.value}"
        return str(self.value)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def parse_profile(text: str) -> NumberFieldProfile:
    """Parse ``deg=..,r1=..,r2=..[,ld=..][,label=..]`` into a profile.

    ``deg`` may be omitted and is then inferred from the signature.
    """
    kv: dict[str, str] = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        key, sep, value = chunk.partition("=")
        key = key.strip().lower()
        if not sep:
            raise ValueError(f"expected key=value, got {chunk!r}")
        if key not in ("deg", "r1", "r2", "ld", "label"):
            raise ValueError(f"unknown key {key!r}")
        if key in kv:
            raise ValueError(f"duplicate key {key!r}")
        kv[key] = value.strip()
    if "r1" not in kv or "r2" not in kv:
        raise ValueError("profile needs both r1 and r2")
    try:
        r1, r2 = int(kv["r1"]), int(kv["r2"])
        deg = int(kv["deg"]) if "deg" in kv else r1 + 2 * r2
    except ValueError as exc:
        raise ValueError(f"non-integer count in {text!r}") from exc
    return NumberFieldProfile(
        deg, r1, r2, ld_override=kv.get("ld", "auto").lower(), label=kv.get("label", "")
    )


def read_registry(path: str | Path | None = None) -> frozenset[str]:
    """Labels of fields known not to be locally determined.

    One label per line; blank lines and ``#`` comments are ignored.
    """
    if path is None:
        text = resources.files("profsol.data").joinpath(REGISTRY_RESOURCE).read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    labels = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            labels.add(line)
    return frozenset(labels)


@lru_cache(maxsize=1)
def default_registry() -> frozenset[str]:
    return read_registry()


def local_determinacy(p: NumberFieldProfile, registry: frozenset[str] | None = None) -> str:
    """``yes``, ``no`` or ``unknown``.

    An explicit ``ld_override`` wins.  Otherwise degree <= 6 gives ``yes``,
    a label in the registry gives ``no``, and anything else is ``unknown``.
    """
    if p.ld_override != "auto":
        return p.ld_override
    if p.degree <= LOCALLY_DETERMINED_MAX_DEGREE:
        return "yes"
    if p.label in (default_registry() if registry is None else registry):
        return "no"
    return "unknown"
