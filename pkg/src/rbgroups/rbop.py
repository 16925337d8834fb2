"""The Rota-Baxter operator core.

An operator B on a group G satisfies, for all g, h:

    B(g) B(h) = B(g B(g) h B(g)^-1)

with the package-wide left-to-right composition convention.  Table
operators store one image per canonical element; procedural operators
(used on large alternating groups) carry an evaluation closure plus
structural facts from their construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from .labels import iso_label
from .perm import (
    FiniteGroup,
    Perm,
    PermError,
    closure,
)


class InvalidOperator(ValueError):
    """The defining identity or a structural consequence of it failed."""


DEFAULT_SEED = 7
FULL_VERIFY_MAX_ORDER = 1024


@dataclass(frozen=True)
class Verdict:
    ok: bool
    pairs: int
    seed: Optional[int] = None
    witness: Optional[tuple] = None
    detail: str = ""

    def line(self) -> str:
        status = "pass" if self.ok else "fail"
        seed = "-" if self.seed is None else str(self.seed)
        return f"verify: {status} pairs={self.pairs} seed={seed}"


@dataclass(frozen=True)
class RBOperator:
    """A Rota-Baxter operator on a finite group.

    Exactly one of `images` (table body, aligned with group.elements)
    and `proc` (procedural body) is set.  `structural` carries
    construction-provided subgroup data for procedural operators.
    """

    group: FiniteGroup
    images: Optional[tuple[Perm, ...]] = None
    proc: Optional[Callable[[Perm], Perm]] = None
    provenance: str = ""
    structural: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if (self.images is None) == (self.proc is None):
            raise PermError("operator needs exactly one of a table or a procedure")

    @property
    def is_table(self) -> bool:
        return self.images is not None

    def __call__(self, g: Perm) -> Perm:
        if self.images is not None:
            return self.images[self.group.index(g)]
        return self.proc(g)

    def table_key(self) -> tuple[int, ...]:
        """Canonical key: image indices in canonical element order."""
        if self.images is None:
            raise PermError("procedural operator has no table key")
        return tuple(self.group.index(p) for p in self.images)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RBOperator):
            return NotImplemented
        if self.group is not other.group and self.group != other.group:
            return False
        if self.is_table and other.is_table:
            return self.images == other.images
        return self is other

    def __hash__(self):
        if self.images is not None:
            return hash((self.group.degree, self.images))
        return id(self)


def from_table(
    G: FiniteGroup,
    images: dict[Perm, Perm] | tuple[Perm, ...],
    provenance: str = "",
    check: bool = True,
) -> RBOperator:
    """Table operator; verifies the defining identity on all pairs unless
    the group is too large (then sampled) or check=False."""
    if not G.enumerated:
        raise PermError("table operators need an enumerated group")
    if isinstance(images, dict):
        images = tuple(images[e] for e in G.elements)
    B = RBOperator(group=G, images=tuple(images), provenance=provenance)
    if check:
        if G.order() <= FULL_VERIFY_MAX_ORDER:
            v = verify(B, mode="full")
        else:
            v = verify(B, mode="sampled", count=10_000, seed=DEFAULT_SEED)
        if not v.ok:
            raise InvalidOperator(
                f"defining identity fails at {v.witness}: {v.detail}"
            )
    return B


def trivial_e(G: FiniteGroup) -> RBOperator:
    """g -> e."""
    return from_table(G, tuple(G.identity for _ in G.elements), provenance="B_e", check=False)


def trivial_inv(G: FiniteGroup) -> RBOperator:
    """g -> g^-1."""
    return from_table(G, tuple(e.inverse() for e in G.elements), provenance="B_inv", check=False)


def _check_pair(B: RBOperator, g: Perm, h: Perm) -> bool:
    bg = B(g)
    return bg * B(h) == B(g * bg * h * bg.inverse())


def verify(
    B: RBOperator,
    mode: str = "full",
    count: int = 10_000,
    seed: int = DEFAULT_SEED,
    chunks: int = 1,
) -> Verdict:
    """Check the defining identity on all pairs (full) or seeded random
    pairs (sampled).  Deterministic for a fixed seed and independent of
    the chunk count."""
    if mode == "full":
        if not B.group.enumerated:
            raise PermError("full verification needs an enumerated group")
        elems = B.group.elements
        pairs = [(g, h) for g in elems for h in elems]
        seed_out = None
    elif mode == "sampled":
        if not B.group.enumerated:
            raise PermError("sampled verification over tables needs elements")
        rng = random.Random(seed)
        elems = B.group.elements
        pairs = [(rng.choice(elems), rng.choice(elems)) for _ in range(count)]
        seed_out = seed
    else:
        raise PermError(f"unknown verify mode {mode!r}")

    size = max(1, (len(pairs) + chunks - 1) // chunks)
    for lo in range(0, len(pairs), size):
        for g, h in pairs[lo : lo + size]:
            if not _check_pair(B, g, h):
                bg = B(g)
                return Verdict(
                    ok=False,
                    pairs=len(pairs),
                    seed=seed_out,
                    witness=(g, h),
                    detail=f"B(g)B(h)={bg * B(h)!r} != B(gB(g)hB(g)^-1)={B(g * bg * h * bg.inverse())!r}",
                )
    return Verdict(ok=True, pairs=len(pairs), seed=seed_out)


# -- derived operators -----------------------------------------------------


def tilde(B: RBOperator) -> RBOperator:
    """The companion operator g -> g^-1 B(g^-1); an involution."""
    if B.images is not None:
        G = B.group
        images = tuple(e.inverse() * B(e.inverse()) for e in G.elements)
        return RBOperator(group=G, images=images, provenance=f"tilde({B.provenance})")
    proc = B.proc
    structural = {}
    for a, b in (("ker", "ker_tilde"), ("im", "im_tilde"), ("R", "R")):
        if b in B.structural:
            structural[a] = B.structural[b]
        if a in B.structural:
            structural[b] = B.structural[a]
    return RBOperator(
        group=B.group,
        proc=lambda g: g.inverse() * proc(g.inverse()),
        provenance=f"tilde({B.provenance})",
        structural=structural,
    )


def bplus(B: RBOperator) -> Callable[[Perm], Perm]:
    """The plain map g -> g B(g) (not itself a Rota-Baxter operator)."""
    return lambda g: g * B(g)


def circ(B: RBOperator, g: Perm, h: Perm) -> Perm:
    """The descendent product g o h = g B(g) h B(g)^-1."""
    bg = B(g)
    return g * bg * h * bg.inverse()


def descendent_group(B: RBOperator) -> tuple[FiniteGroup, str]:
    """The group (G, o); checks the axioms and that B is a homomorphism
    from it to G.  Returns (group-on-index-permutations, iso label)."""
    G = B.group
    if not G.enumerated:
        raise PermError("descendent group needs an enumerated group")
    elems = G.elements
    n = len(elems)
    idx = {e: i for i, e in enumerate(elems)}
    table = [[idx[circ(B, a, b)] for b in elems] for a in elems]

    ident = idx[G.identity]
    for i in range(n):
        if table[i][ident] != i or table[ident][i] != i:
            raise InvalidOperator("descendent product has no identity")
    for i in range(n):
        if sorted(table[i]) != list(range(n)):
            raise InvalidOperator("descendent product rows are not bijections")
    # associativity via the regular action: represent a by the row map
    # i -> a o elems[i]; products must close, which closure() verifies.
    perms = [Perm(table[j][i] for j in range(n)) for i in range(n)]
    # right-regular perms: perms[i] maps j to j o i; homomorphism check below
    for a in range(n):
        for b in range(n):
            if perms[a] * perms[b] != perms[table[a][b]]:
                raise InvalidOperator("descendent product is not associative")
    # B: (G, o) -> (G, .) must be a homomorphism
    for a in elems:
        for b in elems:
            if B(circ(B, a, b)) != B(a) * B(b):
                raise InvalidOperator("B is not a homomorphism from the descendent group")
    D = FiniteGroup.from_elements(perms, label=f"{G.label}^o")
    return D, iso_label(D)


# -- images, kernels, splitting --------------------------------------------


@dataclass(frozen=True)
class OperatorImages:
    im: FiniteGroup
    ker: FiniteGroup
    im_tilde: FiniteGroup
    ker_tilde: FiniteGroup
    R: FiniteGroup  # im & im_tilde


def images(B: RBOperator) -> OperatorImages:
    """The five structural subgroups, with the consequences of the
    defining identity asserted (normality, factorization, index identity)."""
    G = B.group
    if not G.enumerated:
        st = B.structural
        if {"ker", "im", "ker_tilde", "im_tilde", "R"} <= st.keys():
            return OperatorImages(
                im=st["im"], ker=st["ker"],
                im_tilde=st["im_tilde"], ker_tilde=st["ker_tilde"], R=st["R"],
            )
        raise PermError("images of a procedural operator need structural data")
    Bt = tilde(B)
    im = sorted({B(g) for g in G.elements})
    ker = sorted(g for g in G.elements if B(g).is_identity())
    im_t = sorted({Bt(g) for g in G.elements})
    ker_t = sorted(g for g in G.elements if Bt(g).is_identity())
    R = sorted(set(im) & set(im_t))
    for name, S in (("Im(B)", im), ("ker(B)", ker), ("Im(B~)", im_t), ("ker(B~)", ker_t)):
        if not G.is_subgroup(set(S)):
            raise InvalidOperator(f"{name} is not a subgroup")
    im_g = FiniteGroup.from_elements(im, label="Im(B)")
    ker_g = FiniteGroup.from_elements(ker, label="ker(B)")
    im_t_g = FiniteGroup.from_elements(im_t, label="Im(B~)")
    ker_t_g = FiniteGroup.from_elements(ker_t, label="ker(B~)")
    R_g = FiniteGroup.from_elements(R, label="R")

    if not _normal_in(ker_t_g, im_g):
        raise InvalidOperator("ker(B~) is not normal in Im(B)")
    if not _normal_in(ker_g, im_t_g):
        raise InvalidOperator("ker(B) is not normal in Im(B~)")
    # G = Im(B~) . Im(B)
    prods = {a * b for a in im_t for b in im}
    if len(prods) != G.order():
        raise InvalidOperator("G != Im(B~) Im(B)")
    # |R| = |Im(B):ker(B~)| = |Im(B~):ker(B)|
    if R_g.order() * ker_t_g.order() != im_g.order():
        raise InvalidOperator("|R| != |Im(B):ker(B~)|")
    if R_g.order() * ker_g.order() != im_t_g.order():
        raise InvalidOperator("|R| != |Im(B~):ker(B)|")
    return OperatorImages(im=im_g, ker=ker_g, im_tilde=im_t_g, ker_tilde=ker_t_g, R=R_g)


def _normal_in(S: FiniteGroup, T: FiniteGroup) -> bool:
    """S normal in T (both given as groups on the same domain)."""
    selems = set(S.elements)
    return all(s.conj(t) in selems for s in S.elements for t in T.generators)


def is_splitting(B: RBOperator) -> bool:
    """True iff Im(B~ B) is trivial, iff R is trivial."""
    if not B.group.enumerated:
        return images(B).R.order() == 1
    Bt = tilde(B)
    return all(Bt(B(g)).is_identity() for g in B.group.elements)


def kernel_invariant(B: RBOperator) -> tuple[str, str]:
    """Unordered pair {label(ker B), label(ker B~)} as a sorted tuple."""
    data = images(B)
    return tuple(sorted((iso_label(data.ker), iso_label(data.ker_tilde))))


# -- graph correspondence with subgroups of G x G --------------------------


@dataclass(frozen=True)
class GraphSubgroup:
    """H_B = {(B(g), g B(g))} as a frozenset of element-index pairs."""

    group: FiniteGroup
    pairs: frozenset[tuple[int, int]]


def graph(B: RBOperator) -> GraphSubgroup:
    G = B.group
    pairs = frozenset(
        (G.index(B(g)), G.index(g * B(g))) for g in G.elements
    )
    return GraphSubgroup(group=G, pairs=pairs)


def from_graph(G: FiniteGroup, pairs: frozenset[tuple[int, int]]) -> RBOperator:
    """The operator with graph `pairs`: B(g) = a for the unique (a, b)
    with b a^-1 = g.  Requires |H| = |G| and trivial diagonal meet."""
    if len(pairs) != G.order():
        raise InvalidOperator(f"graph has {len(pairs)} pairs, need |G| = {G.order()}")
    ident = G.index(G.identity)
    for a, b in pairs:
        if a == b and a != ident:
            raise InvalidOperator("graph meets the diagonal nontrivially")
    elems = G.elements
    images: dict[Perm, Perm] = {}
    for a, b in pairs:
        g = elems[b] * elems[a].inverse()
        if g in images:
            raise InvalidOperator("graph pairs do not separate quotients b a^-1")
        images[g] = elems[a]
    if len(images) != G.order():
        raise InvalidOperator("graph quotients b a^-1 do not cover G")
    return from_table(G, images, provenance="from_graph", check=False)
