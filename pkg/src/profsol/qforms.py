"""Local invariants of diagonal quadratic forms over Q.

Places of Q are given either as :class:`~profsol.number_field.Place` objects
(``Place.real()`` or ``Place.prime(p)``), as a plain prime ``int``, or as the
string ``"inf"`` for the real place.

The Hasse invariant of ``<a_1, ..., a_n>`` is the product over ``i < j`` of
``(a_i, a_j)_v``.  Only equality of invariants is ever used, so the choice
between the two common conventions does not matter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .number_field import Place

Rational = int | Fraction


def _prime_of(v) -> int | None:
    """Return the prime of a finite place of Q, or None for the real place."""
    if isinstance(v, Place):
        if v.kind == "real":
            return None
        if v.kind == "prime":
            return v.value
        raise ValueError(f"{v} is not a place of Q")
    if v in ("inf", "real", None):
        return None
    if isinstance(v, int) and Place.prime(v):
        return v
    raise ValueError(f"not a place of Q: {v!r}")


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def legendre(a: int, p: int) -> int:
    """Legendre symbol for odd prime ``p`` and ``a`` prime to ``p``."""
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _to_integer_class(a: Rational) -> int:
    # a and a * den^2 = num * den share a square class.
    a = Fraction(a)
    if a == 0:
        raise ValueError("zero is not allowed here")
    return a.numerator * a.denominator


def squarefree_part(a: Rational) -> int:
    """Signed squarefree integer in the rational square class of ``a``."""
    n = _to_integer_class(a)
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e % 2:
            out *= d
        d += 1
    return sign * out * n


def hilbert_symbol(a: Rational, b: Rational, v) -> int:
    """Hilbert symbol ``(a, b)_v`` for nonzero rationals at a place of Q."""
    p = _prime_of(v)
    a, b = _to_integer_class(a), _to_integer_class(b)
    if p is None:
        return -1 if a < 0 and b < 0 else 1
    alpha, beta = valuation(a, p), valuation(b, p)
    u, w = a // p**alpha, b // p**beta
    if p != 2:
        sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
        return sign * legendre(u, p) ** beta * legendre(w, p) ** alpha

    def eps(x):
        return ((x - 1) // 2) % 2

    def omega(x):
        return ((x * x - 1) // 8) % 2

    e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u)
    return -1 if e % 2 else 1


def is_local_square(a: Rational, v) -> bool:
    """Whether ``a`` is a square in the completion of Q at ``v``.

    Direct test: even valuation and a square unit part (Legendre symbol for
    odd ``p``, ``1 mod 8`` for ``p = 2``).
    """
    p = _prime_of(v)
    n = _to_integer_class(a)
    if p is None:
        return n > 0
    e = valuation(n, p)
    if e % 2:
        return False
    u = n // p**e
    if p == 2:
        return u % 8 == 1
    return legendre(u, p) == 1


@dataclass(frozen=True)
class DiagonalForm:
    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients):
        coeffs = tuple(Fraction(c) for c in coefficients)
        if not coeffs:
            raise ValueError("a form needs at least one coefficient")
        if any(c == 0 for c in coeffs):
            raise ValueError("coefficients must be nonzero")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def parse(cls, text: str) -> "DiagonalForm":
        """Parse comma separated rationals such as ``1,-1,3/2``."""
        try:
            return cls(Fraction(c.strip()) for c in text.split(",") if c.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse form {text!r}: {exc}") from exc

    @classmethod
    def signed(cls, positives: int, negatives: int) -> "DiagonalForm":
        """The form ``<1>^positives (+) <-1>^negatives``."""
        return cls([1] * positives + [-1] * negatives)

    @property
    def dim(self) -> int:
        return len(self.coefficients)

    def __add__(self, other: "DiagonalForm") -> "DiagonalForm":
        return DiagonalForm(self.coefficients + other.coefficients)

    def scaled(self, c: Rational) -> "DiagonalForm":
        return DiagonalForm(c * x for x in self.coefficients)

    def __str__(self):
        return "<" + ", ".join(str(c) for c in self.coefficients) + ">"


def signature(q: DiagonalForm) -> tuple[int, int]:
    pos = sum(1 for c in q.coefficients if c > 0)
    return pos, q.dim - pos


def discriminant_class(q: DiagonalForm) -> int:
    return squarefree_part(prod(q.coefficients))


def hasse_invariant(q: DiagonalForm, v) -> int:
    c = q.coefficients
    return prod(
        (hilbert_symbol(c[i], c[j], v) for i in range(len(c)) for j in range(i + 1, len(c))),
        start=1,
    )


@dataclass(frozen=True)
class LocalInvariantTriple:
    dim: int
    disc_class: int
    hasse: int
    signature: tuple[int, int] | None = None


def local_invariants(q: DiagonalForm, v) -> LocalInvariantTriple:
    """Dimension, squarefree discriminant and Hasse invariant at ``v``.

    At the real place the signature is recorded as well.
    """
    p = _prime_of(v)
    return LocalInvariantTriple(
        q.dim,
        discriminant_class(q),
        hasse_invariant(q, v),
        signature(q) if p is None else None,
    )


def same_square_class(a: Rational, b: Rational, v) -> bool:
    return is_local_square(Fraction(a) * Fraction(b), v)


def locally_isometric(q1: DiagonalForm, q2: DiagonalForm, v) -> bool:
    if _prime_of(v) is None:
        return signature(q1) == signature(q2)
    i1, i2 = local_invariants(q1, v), local_invariants(q2, v)
    return (
        i1.dim == i2.dim
        and same_square_class(i1.disc_class, i2.disc_class, v)
        and i1.hasse == i2.hasse
    )


def relevant_primes(*forms: DiagonalForm) -> list[int]:
    """2 and every odd prime dividing a numerator or denominator."""
    primes = {2}
    for q in forms:
        for c in q.coefficients:
            for n in (abs(c.numerator), c.denominator):
                primes |= _prime_factors(n)
    return sorted(primes)


def _prime_factors(n: int) -> set[int]:
    out = set()
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def isometric_at_all_finite(q1: DiagonalForm, q2: DiagonalForm) -> bool:
    """Whether ``q1`` and ``q2`` are isometric over ``Q_p`` for every prime.

    Only ``p = 2`` and the odd primes dividing some coefficient need a look.
    At any other odd ``p`` all coefficients are ``p``-adic units, so every
    Hilbert symbol between them is ``+1`` and both Hasse invariants are
    ``+1``.  The discriminants agree there as well: if the squarefree
    discriminants ``d1 != d2`` then ``d1 d2`` is, up to squares, a nonsquare
    squarefree ``m``; an odd prime factor of ``m`` divides a coefficient and
    gives an odd valuation at a checked prime, while ``m`` in ``{-1, 2, -2}``
    is already a nonsquare in ``Q_2``.
    """
    if q1.dim != q2.dim:
        return False
    return all(locally_isometric(q1, q2, p) for p in relevant_primes(q1, q2))


def finite_places_where_different(q1: DiagonalForm, q2: DiagonalForm) -> list[int]:
    return [p for p in relevant_primes(q1, q2) if not locally_isometric(q1, q2, p)]
