"""Isomorphism labels for small groups.

Named labels are guaranteed for order <= 16 via a reference catalog
(order + abelian flag + element-order spectrum, with a brute-force
isomorphism search as tie-breaker).  A few larger groups that show up
as structural invariants get targeted recognitions; everything else
falls back to a deterministic invariant-tuple string.
"""

from __future__ import annotations

from functools import lru_cache

from . import families
from .perm import FiniteGroup, Perm, closure, is_isomorphic


def direct_product(A: FiniteGroup, B: FiniteGroup, label: str = "") -> FiniteGroup:
    """A x B acting on the disjoint union of the two domains."""
    dA, dB = A.degree, B.degree
    gens = []
    for g in A.generators:
        gens.append(Perm(tuple(g) + tuple(dA + i for i in range(dB))))
    for g in B.generators:
        gens.append(Perm(tuple(range(dA)) + tuple(dA + v for v in g)))
    return FiniteGroup.from_generators(gens, cap=A.order() * B.order(), label=label)


def _semidihedral16() -> FiniteGroup:
    r = Perm(tuple((i + 1) % 8 for i in range(8)))
    s = Perm(tuple(3 * i % 8 for i in range(8)))
    return FiniteGroup.from_generators([r, s], cap=16, label="SD16")


def _modular16() -> FiniteGroup:
    r = Perm(tuple((i + 1) % 8 for i in range(8)))
    s = Perm(tuple(5 * i % 8 for i in range(8)))
    return FiniteGroup.from_generators([r, s], cap=16, label="M16")


def _z4_semi_z4() -> FiniteGroup:
    # <a, b | a^4 = b^4 = e, a^b = a^-1>, regular representation
    def mult(x: int, y: int) -> int:
        i, j = x % 4, x // 4
        k, l = y % 4, y // 4
        return (i + (k if j % 2 == 0 else -k)) % 4 + 4 * ((j + l) % 4)

    gens = [Perm(mult(x, 1) for x in range(16)), Perm(mult(x, 4) for x in range(16))]
    return FiniteGroup.from_generators(gens, cap=16, label="Z4:Z4")


@lru_cache(maxsize=1)
def _reference_catalog() -> dict[int, list[tuple[str, FiniteGroup]]]:
    refs: list[tuple[str, FiniteGroup]] = []
    for n in range(1, 17):
        refs.append((f"Z{n}", families.cyclic(n).group))
    c = families.cyclic
    d = families.dihedral
    q = families.generalized_quaternion
    refs += [
        ("Z2xZ2", families.klein().group),
        ("Z2xZ4", direct_product(c(2).group, c(4).group)),
        ("Z2xZ2xZ2", direct_product(c(2).group, families.klein().group)),
        ("Z3xZ3", direct_product(c(3).group, c(3).group)),
        ("Z6xZ2", direct_product(c(6).group, c(2).group)),
        ("Z2xZ8", direct_product(c(2).group, c(8).group)),
        ("Z4xZ4", direct_product(c(4).group, c(4).group)),
        ("Z2xZ2xZ4", direct_product(families.klein().group, c(4).group)),
        ("Z2xZ2xZ2xZ2", direct_product(families.klein().group, families.klein().group)),
        ("S3", d(3).group),
        ("D8", d(4).group),
        ("D10", d(5).group),
        ("D12", d(6).group),
        ("D14", d(7).group),
        ("D16", d(8).group),
        ("Q8", q(2).group),
        ("Q12", q(3).group),
        ("Q16", q(4).group),
        ("A4", families.alternating(4).group),
        ("SD16", _semidihedral16()),
        ("M16", _modular16()),
        ("D8xZ2", direct_product(d(4).group, c(2).group)),
        ("Q8xZ2", direct_product(q(2).group, c(2).group)),
        ("Z4:Z4", _z4_semi_z4()),
    ]
    # duplicates by isomorphism type keep the first label (Z6xZ2 aliases Z2xZ6)
    by_order: dict[int, list[tuple[str, FiniteGroup]]] = {}
    for label, G in refs:
        by_order.setdefault(G.order(), []).append((label, G))
    return by_order


def invariant_tuple(G: FiniteGroup) -> tuple:
    """(order, abelian flag, element-order multiset); cheap iso invariant."""
    spectrum: dict[int, int] = {}
    for k in G.element_orders():
        spectrum[k] = spectrum.get(k, 0) + 1
    return (G.order(), G.is_abelian(), tuple(sorted(spectrum.items())))


def _fallback_label(G: FiniteGroup) -> str:
    order, abelian, spectrum = invariant_tuple(G)
    spec = ",".join(f"{k}:{v}" for k, v in spectrum)
    return f"G[order={order},abelian={abelian},spectrum={spec}]"


def _elements_of_order_dividing(G: FiniteGroup, k: int) -> list[Perm]:
    out = []
    for e in G.elements:
        p = e
        for _ in range(k - 1):
            p = p * e
        if p.is_identity():
            out.append(e)
    return out


def _recognize_large(G: FiniteGroup) -> str | None:
    order = G.order()
    if order in (36, 72) and not G.is_abelian():
        # (Z3xZ3)-by-2-group shapes from the sharply 2-transitive world
        E = _elements_of_order_dividing(G, 3)
        if len(E) == 9 and G.is_subgroup(E) and G.is_normal(E):
            if order == 36 and any(e.order() == 4 for e in G.elements):
                return "(Z3xZ3):Z4"
            if order == 72:
                fours = [e for e in G.elements if e.order() == 4]
                for x in fours:
                    for y in fours:
                        if x != y and x * x == y * y:
                            Q = closure([x, y], cap=order)
                            if len(Q) == 8 and sorted(p.order() for p in Q) == [1, 2, 4, 4, 4, 4, 4, 4]:
                                return "(Z3xZ3):Q8"
    if order in (360, 2520, 181440, 1814400) and _is_perfect(G):
        return {360: "PSL(2,9)", 2520: "A7", 181440: "A9", 1814400: "A10"}[order]
    return None


def _is_perfect(G: FiniteGroup) -> bool:
    comms = [a.inverse() * b.inverse() * a * b for a in G.generators for b in G.generators]
    try:
        return len(closure(comms, cap=G.order())) == G.order()
    except Exception:
        return False


def iso_label(G: FiniteGroup) -> str:
    """Isomorphism label: a name for order <= 16 (plus a few targeted
    recognitions), otherwise a deterministic invariant-tuple string."""
    if not G.enumerated:
        return G.label or f"G[order={G.known_order}]"
    order = G.order()
    if order <= 16:
        inv = invariant_tuple(G)
        matches = [
            (label, R)
            for label, R in _reference_catalog().get(order, [])
            if invariant_tuple(R) == inv
        ]
        if len(matches) == 1:
            return matches[0][0]
        for label, R in matches:
            if is_isomorphic(G, R):
                return label
        return _fallback_label(G)
    special = _recognize_large(G)
    if special is not None:
        return special
    # cyclic groups of any size
    if G.is_abelian() and any(e.order() == order for e in G.elements):
        return f"Z{order}"
    return _fallback_label(G)
