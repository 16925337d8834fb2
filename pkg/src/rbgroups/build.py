"""Operator constructions: splitting operators from exact factorizations,
homomorphisms into abelian subgroups, extensions over factorizations,
the index-2 twist, and a catalog of named example operators."""

from __future__ import annotations

from typing import Callable, Optional

from . import families
from .perm import (
    FactorizationWitness,
    FiniteGroup,
    Perm,
    PermError,
    decompose,
    exact_factorization,
)
from .rbop import InvalidOperator, RBOperator, from_table, tilde


class ConstructionError(ValueError):
    """A named precondition of a builder failed."""


def from_factorization(w: FactorizationWitness) -> RBOperator:
    """The splitting operator B(hl) = l^-1 of an exact factorization."""
    if not w.exact:
        raise ConstructionError("factorization is not exact")
    G = w.group
    images = {x: hl[1].inverse() for x, hl in w.table.items()}
    return from_table(
        G, images, provenance=f"split[{w.left.label or 'H'}*{w.right.label or 'L'}]"
    )


def from_homomorphism(
    G: FiniteGroup,
    phi: dict[Perm, Perm] | Callable[[Perm], Perm],
    A: FiniteGroup,
) -> RBOperator:
    """A homomorphism G -> A with A an abelian subgroup of G is an
    operator.  Both the homomorphism property and abelianness are checked."""
    if not A.is_abelian():
        raise ConstructionError("target subgroup is not abelian")
    if not G.is_subgroup(set(A.elements)):
        raise ConstructionError("target is not a subgroup of G")
    get = phi.__getitem__ if isinstance(phi, dict) else phi
    table = {g: get(g) for g in G.elements}
    aset = set(A.elements)
    for g, v in table.items():
        if v not in aset:
            raise ConstructionError(f"phi({g!r}) = {v!r} lies outside the target")
    for g in G.elements:
        for h in G.elements:
            if table[g * h] != table[g] * table[h]:
                raise ConstructionError(f"phi is not a homomorphism at ({g!r}, {h!r})")
    return from_table(G, table, provenance="homomorphism")


def extend_over_factorization(w: FactorizationWitness, C: RBOperator) -> RBOperator:
    """B(hl) = C(l) over an exact G = HL, valid when Im(C~) normalizes H."""
    if not w.exact:
        raise ConstructionError("factorization is not exact")
    if C.group.elements != w.right.elements:
        raise ConstructionError("C is not an operator on the right factor")
    Ct = tilde(C)
    im_ct = {Ct(l) for l in w.right.elements}
    hset = set(w.left.elements)
    for z in im_ct:
        for h in w.left.elements:
            if h.conj(z) not in hset:
                raise ConstructionError(
                    f"Im(C~) does not normalize H: conjugating {h!r} by {z!r} leaves H"
                )
    images = {x: C(hl[1]) for x, hl in w.table.items()}
    return from_table(w.group, images, provenance=f"extend[{C.provenance}]")


def _coset_indicator(L: FiniteGroup, S: FiniteGroup) -> Callable[[Perm], int]:
    sset = set(S.elements)
    return lambda l: 0 if l in sset else 1


def index2_construction(
    G: FiniteGroup,
    K: FiniteGroup,
    L: FiniteGroup,
    S: FiniteGroup,
    t: Perm,
    r: Perm,
) -> RBOperator:
    """The non-splitting twist B(k t^d y) = l^-1 r^d (l = t^d y, y in S,
    d the S-coset indicator on L).

    Preconditions, each reported by name:
      - G = K * L is an exact factorization;
      - S has index 2 in L and t lies in L outside S;
      - r is an involution of S (so that the twist is non-splitting with
        R = <r>; an involution outside S degenerates to the splitting
        operator of G = <K, r> * S);
      - <r> normalizes K;
      - l -> r^(d(l)) is a homomorphism L -> <r>.
    """
    w = exact_factorization(G, K, L)
    if not w.exact:
        raise ConstructionError("factorization G = K*L is not exact")
    if 2 * S.order() != L.order():
        raise ConstructionError("S does not have index 2 in L")
    if not L.is_subgroup(set(S.elements)):
        raise ConstructionError("S is not a subgroup of L")
    sset = set(S.elements)
    if t not in L._element_set() or t in sset:
        raise ConstructionError("t must lie in L outside S")
    if r.is_identity() or r * r != G.identity:
        raise ConstructionError("r is not an involution")
    if r not in sset:
        raise ConstructionError("r must lie in S")
    kset = set(K.elements)
    for k in K.elements:
        if k.conj(r) not in kset:
            raise ConstructionError(f"<r> does not normalize K at {k!r}")
    delta = _coset_indicator(L, S)
    for l1 in L.elements:
        for l2 in L.elements:
            if delta(l1 * l2) != (delta(l1) + delta(l2)) % 2:
                raise ConstructionError("coset indicator of S is not a homomorphism")

    images = {}
    for x, (k, l) in w.table.items():
        images[x] = l.inverse() * (r if delta(l) else G.identity)
    return from_table(G, images, provenance="index2")


# -- catalog of named example operators ------------------------------------


def _s3_operator() -> RBOperator:
    G = families.symmetric(3).group
    H = G.subgroup([Perm.from_cycles(3, [(0, 1, 2)])], label="Z3")
    L = G.subgroup([Perm.from_cycles(3, [(1, 2)])], label="Z2")
    return from_factorization(exact_factorization(G, H, L))


def _a4_b1() -> RBOperator:
    G = families.alternating(4).group
    H = G.subgroup([Perm.from_cycles(4, [(1, 2, 3)])], label="Z3")
    V = G.subgroup(
        [Perm.from_cycles(4, [(0, 1), (2, 3)]), Perm.from_cycles(4, [(0, 2), (1, 3)])],
        label="V4",
    )
    return from_factorization(exact_factorization(G, H, V))


def _a4_b2() -> RBOperator:
    """The retraction of A4 = V4 . <(1 2 3)> onto the 3-cycle part."""
    G = families.alternating(4).group
    z = Perm.from_cycles(4, [(1, 2, 3)])
    A = G.subgroup([z], label="Z3")
    V = {e for e in G.elements if e.order() in (1, 2)}
    phi = {}
    for v in V:
        for a in A.elements:
            phi[v * a] = a
    return from_homomorphism(G, phi, A)


def _dihedral_klein_tilde_table(built: families.BuiltGroup, n: int) -> dict[Perm, Perm]:
    """The order-4-image homomorphism on D_2n (n even >= 4):
    r^2k -> e, r^2k+1 -> r^(n/2) s, r^2k s -> r^(n/2), r^2k+1 s -> s."""
    G, r, s = built.group, built.r, built.s
    half = n // 2
    rh = G.identity
    for _ in range(half):
        rh = rh * r
    table = {}
    x = G.identity
    for i in range(n):
        table[x] = G.identity if i % 2 == 0 else rh * s
        table[x * s] = rh if i % 2 == 0 else s
        x = x * r
    return table


def d2n_klein(n: int) -> RBOperator:
    """The invertible operator on D_2n whose companion is the homomorphism
    onto a Klein four-subgroup; n even, n >= 4."""
    if n < 4 or n % 2:
        raise ConstructionError("the Klein-image operator needs even n >= 4")
    built = families.dihedral(n)
    G = built.group
    table = _dihedral_klein_tilde_table(built, n)
    A = G.subgroup(sorted(set(table.values())), label="Z2xZ2")
    Bt = from_homomorphism(G, table, A)
    return tilde(Bt)


def _pow(p: Perm, e: int, G: FiniteGroup) -> Perm:
    out = G.identity
    step = p if e >= 0 else p.inverse()
    for _ in range(abs(e)):
        out = out * step
    return out


def _d16_operator() -> RBOperator:
    """Index-2-shaped operator on D16 built compositionally: extend the
    companion of the L-homomorphism over D16 = {e, s} * L, then flip."""
    built = families.dihedral(8)
    G, r, s = built.group, built.r, built.s
    H = G.subgroup([s], label="Z2")
    lelems = [G.identity, _pow(r, 2, G), _pow(r, 4, G), _pow(r, 6, G),
              r * s, _pow(r, 3, G) * s, _pow(r, 5, G) * s, _pow(r, 7, G) * s]
    L = G.subgroup(lelems, label="L")
    r4 = _pow(r, 4, G)
    A = L.subgroup([r4], label="Z2")
    kerC = set(L.subgroup([r4, r * s], label="kerC").elements)
    phi = {l: (G.identity if l in kerC else r4) for l in L.elements}
    C = from_homomorphism(L, phi, A)
    Ct = tilde(C)
    D = extend_over_factorization(exact_factorization(G, H, L), Ct)
    return tilde(D)


def _d60_operator() -> RBOperator:
    built = families.dihedral(30)
    G, r, s = built.group, built.r, built.s
    H = G.subgroup([_pow(r, 10, G)], label="Z3")
    L = G.subgroup([_pow(r, 3, G), s], label="D20")
    # the Klein-image operator on L ~= D20, generated by r^3 and s
    r_l, s_l = _pow(r, 3, G), s
    half = 10 // 2
    rh = _pow(r_l, half, G)
    table = {}
    x = G.identity
    for i in range(10):
        table[x] = G.identity if i % 2 == 0 else rh * s_l
        table[x * s_l] = rh if i % 2 == 0 else s_l
        x = x * r_l
    A = L.subgroup(sorted(set(table.values())), label="Z2xZ2")
    C = tilde(from_homomorphism(L, table, A))
    return extend_over_factorization(exact_factorization(G, H, L), C)


def _q60_operator() -> RBOperator:
    built = families.generalized_quaternion(15)
    G, r, s = built.group, built.r, built.s
    H = G.subgroup([_pow(r, 10, G)], label="Z3")
    L = G.subgroup([_pow(r, 3, G), s], label="Q20")
    r15 = _pow(r, 15, G)
    A = L.subgroup([r15], label="Z2")
    r3set = set(L.subgroup([_pow(r, 3, G)], label="Z10").elements)
    phi = {l: (r15 if l not in r3set else G.identity) for l in L.elements}
    Ct = from_homomorphism(L, phi, A)
    C = tilde(Ct)
    return extend_over_factorization(exact_factorization(G, H, L), C)


_CATALOG: dict[str, Callable[[], RBOperator]] = {
    "s3": _s3_operator,
    "a4_b1": _a4_b1,
    "a4_b2": _a4_b2,
    "d16": _d16_operator,
    "d60": _d60_operator,
    "q60": _q60_operator,
}


def catalog_names() -> list[str]:
    return sorted(_CATALOG) + ["d2n_klein(n)"]


def catalog_operator(name: str) -> RBOperator:
    """Named example operators; d2n_klein(n) takes the even parameter n."""
    if name.startswith("d2n_klein(") and name.endswith(")"):
        return d2n_klein(int(name[len("d2n_klein(") : -1]))
    try:
        builder = _CATALOG[name]
    except KeyError:
        raise ConstructionError(
            f"unknown example {name!r}; known: {', '.join(catalog_names())}"
        ) from None
    return builder()
