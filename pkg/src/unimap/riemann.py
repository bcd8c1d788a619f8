"""
Signature arithmetic for finite group actions on Riemann surfaces.

Everything here is exact: areas are :class:`fractions.Fraction` and all
modular arithmetic is on Python integers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from sympy import factorint


class SignatureError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Signature:
    """``(h; r1, ..., rs)``; equality ignores the order of the periods."""

    orbit_genus: int
    periods: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "periods", tuple(self.periods))
        if self.orbit_genus < 0:
            raise SignatureError(f"negative orbit genus {self.orbit_genus}")
        if any(r < 2 for r in self.periods):
            raise SignatureError(f"periods must be >= 2: {self.periods}")

    def _key(self):
        return self.orbit_genus, tuple(sorted(self.periods))

    def __eq__(self, other):
        if not isinstance(other, Signature):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        if not self.periods:
            return f"({self.orbit_genus}; -)"
        return f"({self.orbit_genus}; {', '.join(map(str, self.periods))})"

    __repr__ = __str__

    @property
    def is_triangular(self) -> bool:
        return self.orbit_genus == 0 and len(self.periods) == 3


def sig(*periods: int, h: int = 0) -> Signature:
    return Signature(h, periods)


def mu(sigma: Signature) -> Fraction:
    """``2h - 2 + sum(1 - 1/r)``; negative, zero or positive for sphere, plane, disc."""
    return 2 * sigma.orbit_genus - 2 + sum((1 - Fraction(1, r) for r in sigma.periods), Fraction(0))


def rh_genus(group_order: int, sigma: Signature) -> int:
    """Genus ``g`` with ``2g - 2 = |G| mu(sigma)``."""
    chi = group_order * mu(sigma)
    if chi.denominator != 1 or chi.numerator % 2 or chi < -2:
        raise SignatureError(
            f"no surface-kernel action of order {group_order} with signature {sigma}: "
            f"|G| mu = {chi}"
        )
    return int(chi) // 2 + 1


@dataclass(frozen=True)
class GenVector:
    """Normal-form generating vector ``<1, b, c>`` of the cyclic group of order ``n``."""

    n: int
    b: int
    c: int

    def __post_init__(self):
        if self.n < 1:
            raise SignatureError(f"modulus must be positive, got {self.n}")
        if (1 + self.b + self.c) % self.n:
            raise SignatureError(f"1 + {self.b} + {self.c} is not 0 mod {self.n}")

    @property
    def entries(self) -> tuple[int, int, int]:
        return 1 % self.n, self.b, self.c

    @property
    def orders(self) -> tuple[int, int, int]:
        return tuple(self.n // gcd(e, self.n) for e in self.entries)

    @property
    def degenerate(self) -> bool:
        return self.b == 0 or self.c == 0

    def __str__(self):
        return f"<1, {self.b}, {self.c}> mod {self.n}"


def normal_form_vector(n: int, b: int) -> GenVector:
    b %= n
    return GenVector(n, b, (-1 - b) % n)


def vector_signature(v: GenVector) -> Signature:
    """Periods are the element orders; an entry ``0`` contributes no period."""
    return Signature(0, tuple(r for r in v.orders if r > 1))


def lcm_condition(n: int, m: int, r: int) -> bool:
    """Whether a cyclic group of order ``n`` has a ``(0; n, m, r)`` generating vector."""
    return lcm(m, r) == n


# --- normal extensions of cyclic actions ------------------------------------


def n6_numeric_ok(k: int) -> bool:
    if k % 9 == 0:
        return False
    return all(q == 3 or q % 3 == 1 for q in factorint(k))


def n6_admissible(k: int) -> list[int]:
    """
    Residues ``b`` of order 3 in the unit group with ``1 + b + b^2 = 0 mod k``:
    the choices of ``<1, b, b^2>`` for a ``(0; k, k, k)`` action extending to
    ``Z_3 x| Z_k``. Empty unless ``9`` does not divide ``k`` and every other
    prime divisor is ``1 mod 3``.
    """
    if k < 2 or not n6_numeric_ok(k):
        return []
    return [
        b
        for b in range(2, k)
        if pow(b, 3, k) == 1 and (1 + b + b * b) % k == 0
    ]


def has_only_trivial_square_roots(k: int) -> bool:
    """``k`` in ``{1, 2, 4, p^s, 2 p^s}`` (p odd), i.e. the unit group is cyclic."""
    if k in (1, 2, 4):
        return True
    f = factorint(k)
    odd = [q for q in f if q != 2]
    return len(odd) == 1 and f.get(2, 0) <= 1


@dataclass(frozen=True)
class N8Case:
    tag: str
    alpha: int | None = None

    def __str__(self):
        return self.tag if self.alpha is None else f"{self.tag}(alpha1={self.alpha})"


ABELIAN_Z2K = "Abelian_Z2k"
ABELIAN_Z2xZK = "Abelian_Z2xZk"
NONABELIAN = "NonAbelian"


def n8_admissible(k: int, t: int) -> N8Case | None:
    """
    Which index-2 normal extension the ``Z_k`` action with vector
    ``<1, t, k-1-t>`` admits, if any.
    """
    if not 1 <= t < k:
        raise SignatureError(f"need 1 <= t < k, got t={t}, k={k}")
    if k < 3:
        return None
    if t == 1:
        return N8Case(ABELIAN_Z2K if k % 2 else ABELIAN_Z2xZK)
    if t == k - 1 or (t * t) % k != 1:
        return None
    if has_only_trivial_square_roots(k):
        return None
    return N8Case(NONABELIAN, t)


# --- triangle signature pairs -------------------------------------------------


@dataclass(frozen=True)
class ExtensionCase:
    case_name: str
    sigma: Signature
    sigma_prime: Signature
    index: int
    conditions_note: str = ""
    params: tuple = field(default=(), compare=False)

    def to_json(self) -> dict:
        return {
            "case": self.case_name,
            "sigma": str(self.sigma),
            "sigma_prime": str(self.sigma_prime),
            "index": self.index,
            "params": dict(self.params),
        }


TABLE1_INDEX = {"N6": 3, "N8": 2, "T1": 24, "T4": 12, "T8": 6, "T9": 4, "T10": 4}


def index_ratio(sigma: Signature, sigma_prime: Signature) -> Fraction | None:
    """``mu(sigma) / mu(sigma_prime)``, or ``None`` when both are Euclidean."""
    a, b = mu(sigma), mu(sigma_prime)
    if b == 0:
        if a != 0:
            raise SignatureError(f"{sigma} cannot sit with finite index in Euclidean {sigma_prime}")
        return None
    return a / b


def _case(name, sigma, sigma_prime, note, **params):
    idx = index_ratio(sigma, sigma_prime)
    # Euclidean pairs (N8 with k=u=3 or k=4, u=2) take the index from the table
    assert idx is None or idx == TABLE1_INDEX[name], (name, sigma, sigma_prime, idx)
    return ExtensionCase(name, sigma, sigma_prime, TABLE1_INDEX[name], note, tuple(sorted(params.items())))


def table1_row(name: str, **params) -> ExtensionCase:
    """Instantiate one row with explicit pattern variables, e.g. ``table1_row("N8", k=8, u=4)``."""
    k = params.get("k")
    u = params.get("u")
    rows = {
        "N6": lambda: (sig(k, k, k), sig(3, 3, k), "k >= 4"),
        "N8": lambda: (sig(k, k, u), sig(2, k, 2 * u), "u | k, k >= 3"),
        "T1": lambda: (sig(7, 7, 7), sig(2, 3, 7), ""),
        "T4": lambda: (sig(8, 8, 4), sig(2, 3, 8), ""),
        "T8": lambda: (sig(4 * k, 4 * k, k), sig(2, 3, 4 * k), "k >= 2"),
        "T9": lambda: (sig(2 * k, 2 * k, k), sig(2, 4, 2 * k), "k >= 3"),
        "T10": lambda: (sig(3 * k, k, 3), sig(2, 3, 3 * k), "k >= 3"),
    }
    sigma, sigma_prime, note = rows[name]()
    return _case(name, sigma, sigma_prime, note, **params)


def _match_n6(a, b, c):
    if a == b == c and a >= 4:
        yield {"k": a}


def _match_n8(a, b, c):
    if a == b and a >= 3 and c >= 2 and a % c == 0:
        yield {"k": a, "u": c}


def _match_t1(a, b, c):
    if (a, b, c) == (7, 7, 7):
        yield {}


def _match_t4(a, b, c):
    if (a, b, c) == (8, 8, 4):
        yield {}


def _match_t8(a, b, c):
    if a == b and c >= 2 and a == 4 * c:
        yield {"k": c}


def _match_t9(a, b, c):
    if a == b and c >= 3 and a == 2 * c:
        yield {"k": c}


def _match_t10(a, b, c):
    if c == 3 and b >= 3 and a == 3 * b:
        yield {"k": b}


_MATCHERS = [
    ("N6", _match_n6),
    ("N8", _match_n8),
    ("T1", _match_t1),
    ("T4", _match_t4),
    ("T8", _match_t8),
    ("T9", _match_t9),
    ("T10", _match_t10),
]


def table1_matches(sigma: Signature) -> list[ExtensionCase]:
    """All signature pairs from the cyclic-admissible triangle table that start at ``sigma``."""
    if not sigma.is_triangular:
        return []
    found = []
    for name, matcher in _MATCHERS:
        seen = set()
        for triple in itertools.permutations(sigma.periods):
            for params in matcher(*triple):
                key = tuple(sorted(params.items()))
                if key not in seen:
                    seen.add(key)
                    found.append(table1_row(name, **params))
    return found


# --- maximal cyclic actions on the classical curves ----------------------------


@dataclass(frozen=True)
class ClassicalAction:
    curve: str
    order: int
    signature: Signature
    vector: tuple[int, int, int]


def classical_cyclic_actions(g: int) -> list[ClassicalAction]:
    """Group order, signature and normal-form vector of the largest cyclic
    action on each classical curve of genus ``g`` that exists."""
    rows = [
        ClassicalAction("Wiman type I", 4 * g + 2, sig(4 * g + 2, 2 * g + 1, 2), (1, 2 * g, 2 * g + 1)),
        ClassicalAction("Wiman type II", 4 * g, sig(4 * g, 4 * g, 2), (1, 2 * g - 1, 2 * g)),
        ClassicalAction("Accola-Maclachlan", 2 * g + 2, sig(2 * g + 2, 2 * g + 2, g + 1), (1, 1, 2 * g)),
    ]
    if g % 4 == 3:
        rows.append(ClassicalAction("Kulkarni", 2 * g + 2, sig(2 * g + 2, 2 * g + 2, g + 1), (1, g + 2, g - 1)))
    if g == 3:
        rows.append(ClassicalAction("Wiman type III", 12, sig(12, 4, 3), (1, 3, 8)))
        rows.append(ClassicalAction("Klein", 7, sig(7, 7, 7), (1, 2, 4)))
    return rows
