"""
Regular and strictly edge-transitive one-vertex maps and the curves they live on.

A strictly edge-transitive one-vertex map with ``k`` edges pairs the even and
odd darts with a shift ``t``; its automorphism group ``Z_k`` acts with
signature ``(0; k, l1, l2)`` and vector ``<1, t, k-1-t>``. Usually that is the
full automorphism group of the surface. The exceptions are the classical
curves (Wiman I/II/III, Accola-Maclachlan, Kulkarni, Klein) and two families
of semidirect products, detected here from the signature tables.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import gcd

from .census import CommuterSpec, realize
from .maps import OneVertexMap, face_circuits, profile
from .riemann import (
    NONABELIAN,
    ExtensionCase,
    GenVector,
    Signature,
    n6_admissible,
    n8_admissible,
    normal_form_vector,
    rh_genus,
    table1_row,
    vector_signature,
)

WIMAN_I = "WimanI"
WIMAN_II = "WimanII"
WIMAN_III = "WimanIII"
ACCOLA_MACLACHLAN = "AccolaMaclachlan"
KULKARNI = "Kulkarni"
KLEIN_QUARTIC = "KleinQuartic"
Z3_SEMIDIRECT = "Z3SemidirectExtension"
Z2_SEMIDIRECT = "Z2SemidirectExtension"
AUT_EQUALS_MAP_AUT = "AutEqualsMapAut"
NON_HYPERBOLIC = "NonHyperbolic"

CLASSICAL = frozenset({WIMAN_I, WIMAN_II, WIMAN_III, ACCOLA_MACLACHLAN, KULKARNI, KLEIN_QUARTIC})


class ClassifyError(ValueError):
    pass


@dataclass(frozen=True)
class GroupDescriptor:
    name: str
    order: int
    presentation: str | None = None

    def to_json(self) -> dict:
        d = {"name": self.name, "order": self.order}
        if self.presentation is not None:
            d["presentation"] = self.presentation
        return d


def cyclic(n: int) -> GroupDescriptor:
    return GroupDescriptor(f"Z{n}", n, f"<a | a^{n} = 1>")


def semidihedral(g: int) -> GroupDescriptor:
    return GroupDescriptor(
        f"SD{8 * g}", 8 * g, f"<a, b | a^{4 * g} = b^2 = 1, b^-1 a b = a^{2 * g - 1}>"
    )


def accola_maclachlan_group(g: int) -> GroupDescriptor:
    return GroupDescriptor(
        f"AM{8 * g + 8}", 8 * g + 8, f"<a, b | a^{2 * g + 2} = b^4 = 1, (ab)^2 = [a, b^2] = 1>"
    )


def kulkarni_group(g: int) -> GroupDescriptor:
    return GroupDescriptor(
        f"K{8 * g + 8}", 8 * g + 8, f"<a, b | a^{2 * g + 2} = b^4 = 1, (ab)^2 = 1, b^2 a b^2 = a^{g + 2}>"
    )


H48 = GroupDescriptor("H48", 48)
PSL27 = GroupDescriptor("PSL2(7)", 168)


@dataclass(frozen=True)
class EdgeTransitiveDatum:
    k: int
    t: int
    l1: int
    l2: int
    signature: Signature
    vector: GenVector
    genus: int
    canonical_t: int
    degenerate: bool
    y: OneVertexMap


def canonical_shift(k: int, t: int) -> int:
    return min(t, k - (t + 1))


def edge_transitive_map(k: int, t: int) -> OneVertexMap:
    """Pair the even and odd darts with shift ``t``: ``2c -> 2c + 2t + 1``."""
    return OneVertexMap(k, realize(CommuterSpec(k, 2, (), ((0, 1, t),))))


def _check_shift(k: int, t: int):
    if k < 1:
        raise ClassifyError(f"k must be positive, got {k}")
    if not 0 <= t < k:
        raise ClassifyError(f"shift t = {t} outside [0, {k})")
    if k % 2 and 2 * t == k - 1:
        raise ClassifyError(f"t = (k-1)/2 = {t} gives y = x^k, the regular map; use classify_regular")


def edge_transitive_datum(k: int, t: int) -> EdgeTransitiveDatum:
    _check_shift(k, t)
    l1, l2 = k // gcd(t, k), k // gcd(t + 1, k)
    vector = normal_form_vector(k, t)
    signature = vector_signature(vector)
    m = edge_transitive_map(k, t)

    faces = Counter(len(c) for c in face_circuits(m))
    expected = Counter()
    expected[l1] += gcd(t, k)
    expected[l2] += gcd(t + 1, k)
    assert faces == expected, (k, t, faces, expected)
    euler_genus = profile(m).genus
    assert rh_genus(k, signature) == euler_genus, (k, t)

    return EdgeTransitiveDatum(
        k=k,
        t=t,
        l1=l1,
        l2=l2,
        signature=signature,
        vector=vector,
        genus=euler_genus,
        canonical_t=canonical_shift(k, t),
        degenerate=t == 0 or t == k - 1,
        y=m,
    )


@dataclass
class Classification:
    verdict: str
    genus: int
    k: int
    t: int | None
    aut_map_order: int
    signature: Signature
    vector: GenVector
    aut_surface: GroupDescriptor
    extension_chain: list[ExtensionCase] = field(default_factory=list)
    curve_equation: str | None = None
    further_extension_note: str | None = None
    regular: bool = False
    parameter: int | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def label(self) -> str:
        if self.parameter is None:
            return self.verdict
        key = "b" if self.verdict in (Z3_SEMIDIRECT, KLEIN_QUARTIC) else "alpha1"
        return f"{self.verdict}({key}={self.parameter})"

    def to_json(self) -> dict:
        d = {
            "k": self.k,
            "t": self.t,
            "regular": self.regular,
            "genus": self.genus,
            "signature": str(self.signature),
            "vector": str(self.vector),
            "verdict": self.verdict,
            "label": self.label,
            "aut_map_order": self.aut_map_order,
            "aut_surface": self.aut_surface.to_json(),
            "extension_chain": [e.to_json() for e in self.extension_chain],
            "notes": list(self.notes),
        }
        if self.parameter is not None:
            d["parameter"] = self.parameter
        if self.curve_equation is not None:
            d["curve_equation"] = self.curve_equation
        if self.further_extension_note is not None:
            d["further_extension_note"] = self.further_extension_note
        return d

    def check(self):
        if self.verdict == AUT_EQUALS_MAP_AUT:
            assert self.curve_equation
        ratio, rem = divmod(self.aut_surface.order, self.aut_map_order)
        assert rem == 0
        idx = 1
        for e in self.extension_chain:
            idx *= e.index
        assert idx == ratio, (self.label, idx, ratio)


# --- regular maps --------------------------------------------------------------


def classify_regular(k: int) -> Classification:
    """The regular map ``y = x^k``: Wiman I for odd ``k``, Wiman II for even ``k``."""
    if k < 1:
        raise ClassifyError(f"k must be positive, got {k}")
    x_k = realize(CommuterSpec(k, 1, (0,), ()))
    m = OneVertexMap(k, x_k)
    g = profile(m).genus
    n = 2 * k
    vector = normal_form_vector(n, k - 1)
    signature = vector_signature(vector)
    if g <= 1:
        c = Classification(NON_HYPERBOLIC, g, k, None, n, signature, vector, cyclic(n), regular=True)
        if g == 1:
            modulus = "e^{2 pi i/3}" if k % 2 else "i"
            c.notes.append(f"genus 1: lies on the elliptic curve of modulus {modulus}")
        c.check()
        return c
    assert rh_genus(n, signature) == g
    if k % 2:
        assert k == 2 * g + 1
        c = Classification(WIMAN_I, g, k, None, n, signature, vector, cyclic(4 * g + 2), regular=True)
        c.curve_equation = f"w^2 = z^{2 * g + 1} - 1"
    else:
        assert k == 2 * g
        c = Classification(
            WIMAN_II, g, k, None, n, signature, vector, semidihedral(g),
            extension_chain=[table1_row("N8", k=n, u=2)], regular=True,
        )
        c.curve_equation = f"w^2 = z*(z^{2 * g} - 1)"
        if g == 2:
            c.further_extension_note = "SD16 extends to GL2(Z3), order 48, signature (0; 2, 3, 8)"
    c.check()
    return c


# --- strictly edge-transitive maps --------------------------------------------


def _curve_equation(k: int, l1: int, l2: int) -> str:
    return f"w^{k} = z^{k // l1}*(z-1)^{k // l2}"


def classify_edge_transitive(k: int, t: int) -> Classification:
    """
    Decide whether the surface carrying the map ``(k, t)`` has more conformal
    automorphisms than the map, and name the curve when it does.

    ``t`` and ``k-1-t`` describe equivalent maps and get the same verdict.
    """
    datum = edge_transitive_datum(k, t)
    g = datum.genus

    def result(verdict, group, chain=(), **kw):
        c = Classification(
            verdict, g, k, t, k, datum.signature, datum.vector, group, list(chain), **kw
        )
        c.check()
        return c

    if g <= 1:
        return result(NON_HYPERBOLIC, cyclic(k), notes=[f"genus {g}: not hyperbolic"])

    # both representatives of the class, as the middle entry of <1, b, c>
    reps = sorted({t, k - 1 - t})
    ct = datum.canonical_t

    if k == 12 and ct == 3:
        return result(
            WIMAN_III, H48, [table1_row("T10", k=4)], curve_equation="w^3 = z^4 + 1"
        )
    if ct == 1 and k == 2 * g + 1:
        return result(
            WIMAN_I, cyclic(4 * g + 2), [table1_row("N8", k=k, u=k)],
            curve_equation=f"w^2 = z^{2 * g + 1} - 1",
        )
    if ct == 1 and k == 2 * g + 2:
        return result(
            ACCOLA_MACLACHLAN, accola_maclachlan_group(g), [table1_row("T9", k=g + 1)],
            curve_equation=f"w^2 = z^{2 * g + 2} - 1",
            notes=["the N8 extension to Z2 + Z%d is subsumed by T9" % k],
        )

    betas = [b for b in n6_admissible(k) if b in reps]
    if betas and k == 2 * g + 1:
        b = betas[0]
        if k == 7:
            return result(
                KLEIN_QUARTIC, PSL27, [table1_row("T1")], parameter=b,
                curve_equation="w^3*z + z^3 + w = 0",
                notes=["contains the N6 extension Z3 x|_beta Z7 (order 21, beta(1) = 2)"],
            )
        return result(
            Z3_SEMIDIRECT, GroupDescriptor(f"Z3 x|_beta Z{k}", 3 * k), [table1_row("N6", k=k)],
            parameter=b,
        )

    alphas = [a for a in reps if (case := n8_admissible(k, a)) is not None and case.tag == NONABELIAN]
    if alphas and 2 * g + 2 <= k <= 4 * g:
        a = alphas[0]
        u = k // gcd(1 + a, k)
        n8 = table1_row("N8", k=k, u=u)
        if k == 2 * g + 2 and g % 4 == 3 and (g + 2) % k in reps:
            c = result(
                KULKARNI, kulkarni_group(g), [table1_row("T9", k=g + 1)], parameter=g + 2,
                notes=["the N8 extension is subsumed by T9" + (" and T4" if g == 3 else "")],
            )
            if g == 3:
                c.further_extension_note = (
                    "K32 extends to a group of order 96 with signature (0; 2, 3, 8) (T4)"
                )
            return c
        if k == 4 * g and (2 * g - 1) in reps:
            c = result(
                WIMAN_II, semidihedral(g), [n8], parameter=2 * g - 1,
                curve_equation=f"w^2 = z*(z^{2 * g} - 1)",
                notes=[f"Z2 x|_alpha Z{k} is SD{8 * g}"],
            )
            if g == 2:
                c.further_extension_note = "SD16 extends to GL2(Z3), order 48, signature (0; 2, 3, 8)"
            return c
        c = result(
            Z2_SEMIDIRECT, GroupDescriptor(f"Z2 x|_alpha Z{k}", 2 * k), [n8], parameter=a
        )
        if (k, g) in ((12, 4), (24, 10)):
            t8 = table1_row("T8", k=k // 4)
            c.further_extension_note = (
                f"Aut(X) contains Z2 x|_alpha Z{k} with index 3; order {6 * k} via "
                f"{t8.sigma} -> {t8.sigma_prime}"
            )
        return c

    return result(
        AUT_EQUALS_MAP_AUT, cyclic(k), curve_equation=_curve_equation(k, datum.l1, datum.l2)
    )


def classify_map(m: OneVertexMap) -> Classification:
    """Classify a regular or strictly edge-transitive map given by its involution."""
    from .autgroup import aut_period

    p = aut_period(m)
    if p == 1:
        return classify_regular(m.k)
    if p != 2:
        raise ClassifyError(f"map is not edge-transitive (automorphism period {p})")
    # y pairs the even and odd darts: 0 -> 2t + 1
    return classify_edge_transitive(m.k, (m.y.images[0] - 1) // 2)


# --- scans ---------------------------------------------------------------------


def _preferred_shift(c: Classification, k: int, t: int) -> int:
    # named curves are reported with the shift of their classical vector
    if c.verdict in (KULKARNI, WIMAN_II) and c.parameter is not None:
        return c.parameter
    return t


def scan(g_max: int, include_regular: bool = False, include_all: bool = False) -> list[Classification]:
    """
    Classify every strictly edge-transitive one-vertex map of genus
    ``2..g_max`` up to equivalence, keeping by default only those whose
    surface has extra automorphisms. Sorted by ``(genus, k, t)``.
    """
    if g_max < 1:
        raise ClassifyError(f"g_max must be at least 1, got {g_max}")
    out = []
    for k in range(1, 4 * g_max + 3):
        for t in range(1, (k + 1) // 2):
            if k % 2 and 2 * t == k - 1:
                continue
            c = classify_edge_transitive(k, t)
            if c.genus > g_max or (not include_all and c.verdict in (AUT_EQUALS_MAP_AUT, NON_HYPERBOLIC)):
                continue
            assert c.k != 4 * c.genus + 1
            t_out = _preferred_shift(c, k, t)
            if t_out != t:
                c = classify_edge_transitive(k, t_out)
            out.append(c)
        if include_regular:
            c = classify_regular(k)
            if c.genus <= g_max and (include_all or c.verdict != NON_HYPERBOLIC):
                out.append(c)
    out.sort(key=lambda c: (c.genus, c.k, -1 if c.t is None else c.t))
    return out
