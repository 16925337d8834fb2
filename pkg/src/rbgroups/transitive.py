"""Sharply 2- and 3-transitive permutation groups on finite fields, the
admissibility test for degrees, and the non-splitting procedural operators
on large alternating groups built from them."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional

from . import families
from .gf import FiniteField, make_field, prime_factors, prime_power
from .perm import FiniteGroup, Perm, PermError
from .rbop import RBOperator, Verdict

DEFAULT_SAMPLES = 100_000
DEFAULT_SEED = 7
SUPPORTED_DEGREES = (9, 10, 49, 50)


class TransitiveError(ValueError):
    """A precondition or validation of the transitive-group builders failed."""


# -- sharply 2-transitive groups L(m, q, t) --------------------------------


@dataclass
class SharplyTransitiveGroup:
    degree: int
    field: FiniteField
    group: FiniteGroup
    transitivity_degree: int
    a: Optional[Perm] = None
    b: Optional[Perm] = None
    translations: Optional[list[Perm]] = None
    n_part: Optional[FiniteGroup] = None  # <a, b>
    s1: Optional[FiniteGroup] = None  # F.<a, b^2>, index 2 in L
    s2: Optional[FiniteGroup] = None  # F.<a^2, b>
    s3: Optional[FiniteGroup] = None  # F.<a^2, ab>
    psl: Optional[FiniteGroup] = None  # index-2 subgroup, degree-3 case
    twist: Optional[Perm] = None


def _translation(F: FiniteField, c: int) -> Perm:
    return Perm(F.add(x, c) for x in range(F.size))


def _scale(F: FiniteField, c: int) -> Perm:
    return Perm(F.mul(c, x) for x in range(F.size))


def pair_table(
    L: FiniteGroup, alpha: int, beta: int
) -> dict[tuple[int, int], Perm]:
    """Ordered point pair (gamma, delta) -> the unique l with
    alpha -> gamma, beta -> delta.  Total iff L is sharply 2-transitive."""
    if alpha == beta:
        raise TransitiveError("pair_table needs two distinct points")
    table: dict[tuple[int, int], Perm] = {}
    for l in L.elements:
        key = (l[alpha], l[beta])
        if key in table:
            raise TransitiveError(f"two transporters for pair {key}: sharpness fails")
        table[key] = l
    n = L.degree
    if len(table) != n * (n - 1):
        raise TransitiveError(
            f"transporter table covers {len(table)} of {n * (n - 1)} pairs"
        )
    return table


def triple_table(
    L: FiniteGroup, alpha: int, beta: int, gamma: int
) -> dict[tuple[int, int, int], Perm]:
    """Ordered distinct point triple -> the unique transporter from
    (alpha, beta, gamma)."""
    if len({alpha, beta, gamma}) != 3:
        raise TransitiveError("triple_table needs three distinct points")
    table: dict[tuple[int, int, int], Perm] = {}
    for l in L.elements:
        key = (l[alpha], l[beta], l[gamma])
        if key in table:
            raise TransitiveError(f"two transporters for triple {key}: sharpness fails")
        table[key] = l
    n = L.degree
    if len(table) != n * (n - 1) * (n - 2):
        raise TransitiveError(
            f"transporter table covers {len(table)} of {n*(n-1)*(n-2)} triples"
        )
    return table


def sharply2(m: int, q: int, t: int) -> SharplyTransitiveGroup:
    """The group on GF(q^m) generated by all translations plus
    a: x -> w^m x and b: x -> w^t x^q; sharply 2-transitive of order
    q^m (q^m - 1)."""
    pp = prime_power(q)
    if pp is None:
        raise TransitiveError(f"q = {q} is not a prime power")
    p, j = pp
    for d in prime_factors(m):
        if (q - 1) % d:
            raise TransitiveError(f"prime {d} of m = {m} does not divide q-1 = {q-1}")
    if m % 4 == 0 and (q - 1) % 4:
        raise TransitiveError("4 | m requires 4 | q-1")
    if math.gcd(m, t) != 1:
        raise TransitiveError(f"t = {t} is not coprime to m = {m}")

    F = make_field(p, j * m)
    n = F.size
    w = F.w

    def frob_q(x: int) -> int:
        for _ in range(j):
            x = F.frobenius(x)
        return x

    a = _scale(F, F.pow(w, m))
    b = Perm(F.mul(F.pow(w, t), frob_q(x)) for x in range(n))
    translations = [_translation(F, c) for c in range(n)]
    # translations by an additive basis of GF(p^(j m))
    basis = [_translation(F, p**i) for i in range(j * m)]
    L = FiniteGroup.from_generators(
        basis + [a, b],
        cap=n * (n - 1),
        label=f"L({m},{q},{t})",
    )
    if L.order() != n * (n - 1):
        raise TransitiveError(
            f"|L| = {L.order()}, expected n(n-1) = {n*(n-1)}: field defect"
        )
    pair_table(L, 0, 1)  # sharpness
    # Frobenius twist relation b^-1 a b = a^q
    apow = L.identity
    for _ in range(q):
        apow = apow * a
    if b.inverse() * a * b != apow:
        raise TransitiveError("relation b^-1 a b = a^q fails")

    st = SharplyTransitiveGroup(
        degree=n,
        field=F,
        group=L,
        transitivity_degree=2,
        a=a,
        b=b,
        translations=translations,
        n_part=L.subgroup([a, b], label=f"N({m},{q},{t})"),
    )
    if q % 4 == 3 and m % 4 == 2:
        for g in (a, b):
            if not g.is_even():
                raise TransitiveError("generator is an odd permutation")
        f1 = translations[1]
        st.s1 = L.subgroup([f1, a, b * b], label="FS1")
        st.s2 = L.subgroup([f1, a * a, b], label="FS2")
        st.s3 = L.subgroup([f1, a * a, a * b], label="FS3")
        for i, S in enumerate((st.s1, st.s2, st.s3), start=1):
            if 2 * S.order() != L.order():
                raise TransitiveError(f"F.S{i} does not have index 2 in L")
    return st


# -- sharply 3-transitive groups M(q) --------------------------------------


def sharply3(q: int) -> SharplyTransitiveGroup:
    """M(q) = PSL2(q).2 on the projective line over GF(q), q = p^(2e)
    with p odd; the twisting generator x -> c x^(p^e) is searched and
    validated, never assumed."""
    pp = prime_power(q)
    if pp is None:
        raise TransitiveError(f"q = {q} is not a prime power")
    p, k = pp
    if p == 2:
        raise TransitiveError("q must be a power of an odd prime")
    if k % 2:
        raise TransitiveError(f"exponent {k} of q = {q} is not even")
    e = k // 2

    F = make_field(p, k)
    n = q + 1
    INF = q  # projective point at infinity

    def proj(fmap) -> Perm:
        """Lift x -> fmap(x) on field points, fixing infinity."""
        return Perm(list(fmap) + [INF])

    add1 = proj([F.add(x, F.one) for x in range(q)])
    w2 = F.pow(F.w, 2)
    scale2 = proj([F.mul(w2, x) for x in range(q)])
    neginv = [0] * (q + 1)
    for x in range(q):
        neginv[x] = F.neg(F.inv(x)) if x != F.zero else INF
    neginv[INF] = F.zero
    neginv = Perm(neginv)
    psl_gens = [add1, scale2, neginv]
    psl_order = q * (q * q - 1) // 2
    psl = FiniteGroup.from_generators(psl_gens, cap=psl_order, label=f"PSL2({q})")
    if psl.order() != psl_order:
        raise TransitiveError(f"|PSL2({q})| = {psl.order()}, expected {psl_order}")

    def semi(x: int) -> int:
        for _ in range(e):
            x = F.frobenius(x)
        return x

    target = n * (n - 1) * (n - 2)
    failures = []
    for c in range(1, q):
        twist = proj([F.mul(c, semi(x)) for x in range(q)])
        try:
            L = FiniteGroup.from_generators(
                psl_gens + [twist], cap=target, label=f"M({q})"
            )
        except PermError:
            failures.append(f"c={F.format_element(c)}: closure exceeds {target}")
            continue
        if L.order() != target:
            failures.append(f"c={F.format_element(c)}: order {L.order()} != {target}")
            continue
        if not all(g.is_even() for g in (add1, scale2, neginv, twist)):
            failures.append(f"c={F.format_element(c)}: odd generator")
            continue
        if 2 * psl.order() != L.order() or not L.is_subgroup(set(psl.elements)):
            failures.append(f"c={F.format_element(c)}: PSL2 index is not 2")
            continue
        try:
            triple_table(L, 0, 1, INF)
        except TransitiveError as exc:
            failures.append(f"c={F.format_element(c)}: {exc}")
            continue
        return SharplyTransitiveGroup(
            degree=n,
            field=F,
            group=L,
            transitivity_degree=3,
            psl=psl,
            twist=twist,
        )
    raise TransitiveError(
        "no twisting candidate validates: " + "; ".join(failures)
    )


# -- admissible degrees ----------------------------------------------------


@dataclass(frozen=True)
class AdmissibilityVerdict:
    n: int
    admissible: bool
    case: str  # "a", "b", or "none"
    q: Optional[int] = None
    m: Optional[int] = None
    s: Optional[int] = None

    def line(self) -> str:
        if not self.admissible:
            return f"admissible({self.n}): no"
        return f"admissible({self.n}): yes case={self.case} q={self.q} m={self.m} s={self.s}"


def _qm_decomposition(n: int) -> Optional[tuple[int, int]]:
    """A decomposition n = q^m meeting: q a prime power, every prime of m
    divides q-1, q = 3 (mod 4) and m = 2 (mod 4)."""
    pp = prime_power(n)
    if pp is None:
        return None
    p, k = pp
    for m in range(2, k + 1):
        if k % m or m % 4 != 2:
            continue
        q = p ** (k // m)
        if q % 4 != 3:
            continue
        if all((q - 1) % d == 0 for d in prime_factors(m)):
            return q, m
    return None


def admissible(n: int) -> AdmissibilityVerdict:
    """Whether a non-splitting operator on A_n arises from a sharply 2- or
    3-transitive factor: n = q^m (case a) or n - 1 = q^m (case b)."""
    if n < 5:
        raise TransitiveError("admissibility is defined for n >= 5")
    qa = _qm_decomposition(n)
    if qa is not None:
        q, m = qa
        s = 3 if n in (49, 529) else (1 if n == 9 else 2)
        return AdmissibilityVerdict(n=n, admissible=True, case="a", q=q, m=m, s=s)
    qb = _qm_decomposition(n - 1)
    if qb is not None:
        q, m = qb
        return AdmissibilityVerdict(n=n, admissible=True, case="b", q=q, m=m, s=1)
    return AdmissibilityVerdict(n=n, admissible=False, case="none")


# -- the procedural operators on A_n ---------------------------------------

VARIANTS = ("S1", "S2", "S3", "default")


def _involutions_stabilizing(
    S: FiniteGroup, points: tuple[int, ...]
) -> list[Perm]:
    pset = set(points)
    out = [
        g
        for g in S.elements
        if not g.is_identity()
        and (g * g).is_identity()
        and {g[x] for x in pset} == pset
    ]
    out.sort()
    return out


def build_an_operator(n: int, variant: str = "default") -> RBOperator:
    """The non-splitting operator on A_n from the exact factorization
    A_n = K L with L sharply 2- or 3-transitive: B(k t^d y) = l^-1 r^d.

    The distinguished points are the largest two (case a) or three
    (case b) point indices; r is the least involution of S = ker(B~)
    stabilizing the distinguished set."""
    if variant not in VARIANTS:
        raise TransitiveError(f"variant must be one of {VARIANTS}")
    v = admissible(n)
    if not v.admissible:
        raise TransitiveError(f"n = {n} is not admissible")
    if n not in SUPPORTED_DEGREES:
        raise TransitiveError(
            f"degree {n} not configured (supported: {SUPPORTED_DEGREES})"
        )

    if v.case == "a":
        st = sharply2(v.m, v.q, 1)
        L = st.group
        S = {"S1": st.s1, "S2": st.s2, "S3": st.s3, "default": st.s1}[variant]
        distinguished = (n - 2, n - 1)
        table = pair_table(L, *distinguished)

        def decompose_l(x: Perm) -> Perm:
            return table[(x[distinguished[0]], x[distinguished[1]])]

    else:
        if variant != "default":
            raise TransitiveError("variants apply only to the q^m case")
        st = sharply3(v.q ** v.m)
        L = st.group
        S = st.psl
        distinguished = (n - 3, n - 2, n - 1)
        # the projective line is relabelled so that (0, 1, infinity)
        # become the three largest A_n points
        natural = (0, 1, n - 1)  # 0, 1, INF in the builder's numbering
        relabeling = _relabel_perm(n, natural, distinguished)
        L = FiniteGroup.from_elements(
            [relabeling.inverse() * g * relabeling for g in L.elements],
            label=L.label,
        )
        S = FiniteGroup.from_elements(
            [relabeling.inverse() * g * relabeling for g in S.elements],
            label=S.label,
        )
        table3 = triple_table(L, *distinguished)

        def decompose_l(x: Perm) -> Perm:
            return table3[(x[distinguished[0]], x[distinguished[1]], x[distinguished[2]])]

    sset = S._element_set()
    if 2 * S.order() != L.order():
        raise TransitiveError("S does not have index 2 in L")
    rs = _involutions_stabilizing(S, distinguished)
    if not rs:
        raise TransitiveError(
            "no involution of S stabilizes the distinguished points"
        )
    r = rs[0]
    t = min(g for g in L.elements if g not in sset)

    kpoints = [i for i in range(n) if i not in distinguished]
    K = families.alternating_on_points(n, kpoints)
    G = families.alternating(n).group

    def B(x: Perm) -> Perm:
        l = decompose_l(x)
        delta = 0 if l in sset else 1
        out = l.inverse()
        if delta:
            out = out * r
        return out

    im_tilde = FiniteGroup.generator_only(
        n,
        tuple(K.generators) + (r,),
        order=2 * K.order(),
        label="Im(B~)",
    )
    R = FiniteGroup.from_elements([G.identity, r], label="R")
    structural = {
        "ker": K,
        "im": L,
        "ker_tilde": S,
        "im_tilde": im_tilde,
        "R": R,
        "t": t,
        "r": r,
        "distinguished": distinguished,
        "variant": variant,
        "case": v.case,
    }
    return RBOperator(
        group=G,
        proc=B,
        provenance=f"an[{n},{variant}]",
        structural=structural,
    )


def _relabel_perm(n: int, src: tuple[int, ...], dst: tuple[int, ...]) -> Perm:
    """An even permutation of n points carrying each src point to the
    matching dst point."""
    mapping = list(range(n))
    used = {}
    for s, d in zip(src, dst):
        used[s] = d
    # complete to a bijection: send displaced targets back greedily
    remaining_src = [i for i in range(n) if i not in used]
    remaining_dst = [i for i in range(n) if i not in used.values()]
    for s, d in zip(remaining_src, remaining_dst):
        used[s] = d
    perm = Perm(used[i] for i in range(n))
    if not perm.is_even():
        # swap two non-distinguished images to fix parity
        imgs = list(perm)
        i1, i2 = [i for i in range(n) if imgs[i] not in dst][:2]
        imgs[i1], imgs[i2] = imgs[i2], imgs[i1]
        perm = Perm(imgs)
    return perm


# -- verification layers ---------------------------------------------------


@dataclass(frozen=True)
class LayeredVerdict:
    ok: bool
    layer: int  # 0 = all passed; else the first failing layer
    detail: str
    pairs_exhaustive: int
    pairs_sampled: int
    seed: int

    def line(self) -> str:
        status = "pass" if self.ok else f"fail layer={self.layer}"
        return (
            f"verify: {status} pairs={self.pairs_exhaustive + self.pairs_sampled}"
            f" seed={self.seed}"
        )


def _random_even(rng: random.Random, n: int) -> Perm:
    imgs = list(range(n))
    rng.shuffle(imgs)
    p = Perm(imgs)
    if not p.is_even():
        imgs[0], imgs[1] = imgs[1], imgs[0]
        p = Perm(imgs)
    return p


def verify_an_operator(
    B: RBOperator,
    sample_count: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
) -> LayeredVerdict:
    """Three layers: structural facts of the construction, exhaustive
    identity over Im(B) x Im(B), and seeded random pairs from A_n."""
    st = B.structural
    if not {"ker", "im", "ker_tilde", "r", "t"} <= st.keys():
        raise TransitiveError("operator was not built by build_an_operator")
    K, L, S = st["ker"], st["im"], st["ker_tilde"]
    r, t = st["r"], st["t"]
    n = B.group.degree
    sset = S._element_set()

    def fail(layer: int, detail: str) -> LayeredVerdict:
        return LayeredVerdict(
            ok=False, layer=layer, detail=detail,
            pairs_exhaustive=0, pairs_sampled=0, seed=seed,
        )

    # layer 1: structure
    korder = K.order()
    if korder * L.order() != B.group.order():
        return fail(1, "K L is not an exact factorization by order")
    lset = L._element_set()
    distinguished = st["distinguished"]
    # K meets L inside the pointwise stabilizer of the distinguished
    # points, which sharp transitivity forces to be trivial
    for l in L.elements:
        if all(l[i] == i for i in distinguished) and not l.is_identity():
            return fail(1, "K L is not exact: L has a nontrivial stabilizer")
    if 2 * S.order() != L.order():
        return fail(1, "S does not have index 2 in L")
    if t in sset or t not in lset:
        return fail(1, "t does not lie in L outside S")
    if r.is_identity() or not (r * r).is_identity():
        return fail(1, "r is not an involution")
    if r not in sset:
        return fail(1, "r does not lie in S = ker(B~)")
    kpts = {i for i in range(n) if not all(g[i] == i for g in K.generators)}
    fixed_outside = {i for i in range(n) if i not in kpts}
    if not ({r[i] for i in fixed_outside} == fixed_outside):
        return fail(1, "<r> does not normalize K (distinguished set moved)")
    for l1 in L.elements:
        d1 = 0 if l1 in sset else 1
        for l2 in L.elements:
            if ((0 if l2 in sset else 1) + d1) % 2 != (
                0 if (l1 * l2) in sset else 1
            ):
                return fail(1, "coset indicator is not a homomorphism")
        if d1 == 0 and B(l1) != l1.inverse():
            return fail(1, "B(y) != y^-1 on S")
        if d1 == 1 and B(l1) != l1.inverse() * r:
            return fail(1, "B(l) != l^-1 r off S")

    # layer 2: exhaustive over L x L
    exhaustive = 0
    for g in L.elements:
        bg = B(g)
        bgi = bg.inverse()
        for h in L.elements:
            exhaustive += 1
            if bg * B(h) != B(g * bg * h * bgi):
                return fail(2, f"identity fails at L-pair ({g!r}, {h!r})")

    # layer 3: seeded random pairs from the whole group
    rng = random.Random(seed)
    for i in range(sample_count):
        g = _random_even(rng, n)
        h = _random_even(rng, n)
        bg = B(g)
        if bg * B(h) != B(g * bg * h * bg.inverse()):
            return LayeredVerdict(
                ok=False, layer=3,
                detail=f"identity fails at sample {i}: ({g!r}, {h!r})",
                pairs_exhaustive=exhaustive, pairs_sampled=i + 1, seed=seed,
            )
    return LayeredVerdict(
        ok=True, layer=0, detail="",
        pairs_exhaustive=exhaustive, pairs_sampled=sample_count, seed=seed,
    )


# -- descendent structure --------------------------------------------------


@dataclass(frozen=True)
class DescendentReport:
    ok: bool
    detail: str
    s_pairs: int
    k_samples: int
    twist_samples: int


def descendent_structure(
    B: RBOperator,
    k_samples: int = 10_000,
    twist_samples: int = 10_000,
    seed: int = DEFAULT_SEED,
) -> DescendentReport:
    """The product g o h = g B(g) h B(g)^-1 restricted to the parts of the
    construction: opposite product on S, plain product on K, and the
    twisted commutation l o h = h^(r^d) o l across parts."""
    st = B.structural
    K, S, r = st["ker"], st["ker_tilde"], st["r"]
    L = st["im"]
    sset = S._element_set()

    def circ(g: Perm, h: Perm) -> Perm:
        bg = B(g)
        return g * bg * h * bg.inverse()

    s_pairs = 0
    for s1 in S.elements:
        for s2 in S.elements:
            s_pairs += 1
            if circ(s1, s2) != s2 * s1:
                return DescendentReport(
                    False, f"s o s' != s' s at ({s1!r}, {s2!r})", s_pairs, 0, 0
                )

    rng = random.Random(seed)
    kgens = list(K.generators)

    def random_k() -> Perm:
        out = B.group.identity
        for _ in range(12):
            g = rng.choice(kgens)
            out = out * (g if rng.random() < 0.5 else g.inverse())
        return out

    for i in range(k_samples):
        h1, h2 = random_k(), random_k()
        if circ(h1, h2) != h1 * h2:
            return DescendentReport(
                False, f"h o h' != h h' at sample {i}", s_pairs, i + 1, 0
            )

    lelems = L.elements
    for i in range(twist_samples):
        l = rng.choice(lelems)
        h = random_k()
        d = 0 if l in sset else 1
        ref = r if d else B.group.identity
        h_tw = ref * h * ref.inverse() if d else h
        if circ(l, h) != circ(h_tw, l):
            return DescendentReport(
                False,
                f"l o h != h^(r^d) o l at sample {i}",
                s_pairs,
                k_samples,
                i + 1,
            )
    return DescendentReport(True, "", s_pairs, k_samples, twist_samples)
