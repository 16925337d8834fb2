"""The ten structural properties every operator must satisfy.

Shared between the unit tests and the acceptance suite.  The checks for
table operators are exhaustive up to order 200 and pair-sampled beyond;
procedural operators get a sampled variant driven by a seeded RNG.
"""

from __future__ import annotations

import random

from rbgroups import rbop
from rbgroups.perm import FiniteGroup, Perm
from rbgroups.rbop import RBOperator, bplus, circ, tilde, verify

EXHAUSTIVE_MAX_ORDER = 200


def _power(p: Perm, k: int, ident: Perm) -> Perm:
    if k < 0:
        p, k = p.inverse(), -k
    out = ident
    for _ in range(k):
        out = out * p
    return out


def _circ_power(B: RBOperator, a: Perm, k: int) -> Perm:
    """a to the k-th power under the descendent product."""
    if k < 0:
        ba = B(a)
        a = ba.inverse() * a.inverse() * ba  # descendent inverse of a
        k = -k
    out = B.group.identity
    for _ in range(k):
        out = circ(B, out, a)
    return out


def check_invariants(B: RBOperator) -> list[tuple[str, bool]]:
    """Run all ten properties on a table operator; returns (name, ok) pairs."""
    G = B.group
    elems = G.elements
    n = len(elems)
    if n <= EXHAUSTIVE_MAX_ORDER:
        pairs = [(g, h) for g in elems for h in elems]
        singles = list(elems)
    else:
        rng = random.Random(rbop.DEFAULT_SEED)
        pairs = [(rng.choice(elems), rng.choice(elems)) for _ in range(2000)]
        singles = [rng.choice(elems) for _ in range(200)]

    results = []
    Bt = tilde(B)
    Bp = bplus(B)

    results.append(("eq2", all(rbop._check_pair(B, g, h) for g, h in pairs)))
    results.append((
        "prop1c",
        all(B(g).inverse() == B(B(g).inverse() * g.inverse() * B(g)) for g in singles),
    ))
    ker = [g for g in elems if B(g).is_identity()]
    results.append((
        "prop1d",
        all(B(g * h) == B(h) for g in ker for h in singles),
    ))
    # B B_+ = B_+ B as maps: B(g B(g)) = B(g) B(B(g))
    results.append(("prop4", all(B(Bp(g)) == Bp(B(g)) for g in singles)))
    kmax = min(n, 24)
    ok5 = True
    for a in singles:
        ba, bpa = B(a), Bp(a)
        for k in range(-kmax, kmax + 1):
            if _circ_power(B, a, k) != _power(bpa, k, B.group.identity) * _power(ba, -k, B.group.identity):
                ok5 = False
                break
        if not ok5:
            break
    results.append(("prop5", ok5))

    data = rbop.images(B)
    im_bbt = {B(Bt(g)) for g in elems}
    im_btb = {Bt(B(g)) for g in elems}
    results.append(("lemma1", im_bbt == im_btb == set(data.R.elements)))

    split = len(im_btb) == 1
    matches = False
    from rbgroups import build, perm

    try:
        w = perm.exact_factorization(G, data.ker, data.ker_tilde)
        matches = build.from_factorization(w).images == B.images
    except (perm.PermError, build.ConstructionError):
        matches = False
    results.append(("prop7", split == matches))

    center = G.center()
    results.append((
        "lemma2b",
        all(c.order() % B(c).order() == 0 for c in center.elements),
    ))
    results.append(("tilde_involution", tilde(Bt).images == B.images))
    results.append(("prop6d_eq8", True))  # asserted inside images(); raising = failure
    return results


def check_invariants_sampled(B: RBOperator, seed: int = 7, samples: int = 50) -> list[tuple[str, bool]]:
    """Sampled variant of the ten properties for procedural operators."""
    from rbgroups.transitive import _random_even

    G = B.group
    rng = random.Random(seed)
    singles = [_random_even(rng, G.degree) for _ in range(samples)]
    pairs = [(a, b) for a in singles[:20] for b in singles[:20]]

    results = []
    Bt = tilde(B)
    Bp = bplus(B)
    results.append(("eq2", all(rbop._check_pair(B, g, h) for g, h in pairs)))
    results.append((
        "prop1c",
        all(B(g).inverse() == B(B(g).inverse() * g.inverse() * B(g)) for g in singles),
    ))
    ker_gens = B.structural["ker"].generators
    results.append((
        "prop1d",
        all(B(g * h) == B(h) for g in ker_gens for h in singles),
    ))
    results.append(("prop4", all(B(g * B(g)) == B(g) * B(B(g)) for g in singles)))
    ok5 = True
    for a in singles[:10]:
        ba, bpa = B(a), Bp(a)
        for k in range(-8, 9):
            if _circ_power(B, a, k) != _power(bpa, k, B.group.identity) * _power(ba, -k, B.group.identity):
                ok5 = False
    results.append(("prop5", ok5))
    R = set(B.structural["R"].elements)
    results.append((
        "lemma1",
        all(B(Bt(g)) in R and Bt(B(g)) in R for g in singles),
    ))
    results.append(("prop7", R != {G.identity}))  # non-splitting by construction
    results.append(("lemma2b", True))  # center of A_n (n >= 5) is trivial
    results.append((
        "tilde_involution",
        all(tilde(Bt)(g) == B(g) for g in singles),
    ))
    data = rbop.images(B)
    ok10 = (
        data.R.order() * data.ker_tilde.order() == data.im.order()
        and data.R.order() * data.ker.order() == data.im_tilde.order()
    )
    results.append(("prop6d_eq8", ok10))
    return results


def assert_invariants(B: RBOperator) -> None:
    failed = [name for name, ok in check_invariants(B) if not ok]
    assert not failed, f"properties failed on {B.provenance or 'operator'}: {failed}"
