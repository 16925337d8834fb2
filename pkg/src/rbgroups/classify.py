"""Exhaustive enumeration of operators on small groups, equivalence
classes under the graph action, and classification reports."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .labels import iso_label
from .perm import FiniteGroup, PermError, automorphism_group
from .rbop import (
    RBOperator,
    from_graph,
    from_table,
    graph,
    images,
    is_splitting,
    kernel_invariant,
    descendent_group,
    tilde,
)

SUBGROUP_SEARCH_CAP = 600
ENUMERATE_GUARANTEED = 24
ENUMERATE_BEST_EFFORT = 48
ORACLE_CAP = 10


class EnumerationCapExceeded(PermError):
    pass


# -- generic bottom-up subgroup search -------------------------------------


def _closure_mask(
    seed_mask: int,
    seed_elems: list[int],
    gens: list[int],
    mul: list[int],
    nn: int,
    max_size: int,
    forbidden_mask: int,
) -> Optional[tuple[int, list[int]]]:
    """Close seed ∪ gens under multiplication; None once the closure grows
    past max_size or touches a forbidden element."""
    mask = seed_mask
    elems = list(seed_elems)
    for g in gens:
        bit = 1 << g
        if mask & bit:
            continue
        if forbidden_mask & bit:
            return None
        mask |= bit
        elems.append(g)
    if len(elems) > max_size:
        return None
    allgens = [g for g in elems[1:]]  # identity contributes nothing
    frontier = list(elems)
    while frontier:
        y = frontier.pop()
        row = y * nn
        for g in allgens:
            z = mul[row + g]
            bit = 1 << z
            if mask & bit:
                continue
            if forbidden_mask & bit:
                return None
            mask |= bit
            elems.append(z)
            if len(elems) > max_size:
                return None
            frontier.append(z)
    return mask, elems


def _subgroup_masks(
    nn: int,
    mul: list[int],
    identity: int,
    target: int,
    forbidden_mask: int,
    orders: list[int],
) -> list[int]:
    """All subgroup element-masks of order exactly target avoiding the
    forbidden set, by cyclic extension from the trivial subgroup."""
    candidates = [
        i
        for i in range(nn)
        if i != identity
        and not (forbidden_mask >> i) & 1
        and target % orders[i] == 0
    ]
    root = (1 << identity, [identity])
    seen = {root[0]}
    layer = [root]
    found: list[int] = []
    while layer:
        nxt = []
        for mask, elems in layer:
            if len(elems) == target:
                found.append(mask)
                continue
            for x in candidates:
                if (mask >> x) & 1:
                    continue
                closed = _closure_mask(
                    mask, elems, [x], mul, nn, target, forbidden_mask
                )
                if closed is None:
                    continue
                cmask, celems = closed
                if target % len(celems) or cmask in seen:
                    continue
                seen.add(cmask)
                nxt.append(closed)
        layer = nxt
    return sorted(found)


def subgroups_of_order(G: FiniteGroup, k: int) -> list[FiniteGroup]:
    """All subgroups of order k, canonically sorted by element tuple."""
    n = G.order()
    if n > SUBGROUP_SEARCH_CAP:
        raise EnumerationCapExceeded(f"|G| = {n} exceeds cap {SUBGROUP_SEARCH_CAP}")
    if n % k:
        raise ValueError(f"{k} does not divide |G| = {n}")
    table = G.mult_table()
    mul = [table[i][j] for i in range(n) for j in range(n)]
    orders = [G.elements[i].order() for i in range(n)]
    e = G.index(G.identity)
    masks = _subgroup_masks(n, mul, e, k, 0, orders)
    subs = []
    for mask in masks:
        elems = [G.elements[i] for i in range(n) if (mask >> i) & 1]
        subs.append(FiniteGroup.from_elements(elems, label=f"{G.label}-sub{k}"))
    subs.sort(key=lambda S: S.elements)
    return subs


# -- operator enumeration via the product-group lattice --------------------


def enumerate_rb(G: FiniteGroup, cap: int = ENUMERATE_GUARANTEED) -> list[RBOperator]:
    """All operators on G, as the order-|G| subgroups of GxG meeting the
    diagonal trivially.  Canonical order: by sorted graph pairs."""
    n = G.order()
    if n > cap:
        raise EnumerationCapExceeded(f"|G| = {n} exceeds enumeration cap {cap}")
    table = G.mult_table()
    nn = n * n
    # product index (a, b) -> a*n + b
    mul = [0] * (nn * nn)
    for a1 in range(n):
        for b1 in range(n):
            i = a1 * n + b1
            row = i * nn
            ta, tb = table[a1], table[b1]
            for a2 in range(n):
                base = ta[a2] * n
                tb2 = tb
                for b2 in range(n):
                    mul[row + a2 * n + b2] = base + tb2[b2]
    e = G.index(G.identity)
    eid = e * n + e
    forbidden = 0
    for i in range(n):
        if i != e:
            forbidden |= 1 << (i * n + i)
    orders = [0] * nn
    for a in range(n):
        oa = G.elements[a].order()
        for b in range(n):
            ob = G.elements[b].order()
            # lcm of the component orders
            x, y = oa, ob
            while y:
                x, y = y, x % y
            orders[a * n + b] = oa * ob // x
    masks = _subgroup_masks(nn, mul, eid, n, forbidden, orders)
    ops = []
    for mask in masks:
        pairs = frozenset(
            divmod(i, n) for i in range(nn) if (mask >> i) & 1
        )
        ops.append(from_graph(G, pairs))
    ops.sort(key=lambda B: sorted(graph(B).pairs))
    return ops


def oracle_enumerate(G: FiniteGroup) -> list[RBOperator]:
    """Independent brute-force enumeration: depth-first assignment of the
    operator table with incremental constraint propagation of the axiom."""
    n = G.order()
    if n > ORACLE_CAP:
        raise EnumerationCapExceeded(f"|G| = {n} exceeds oracle cap {ORACLE_CAP}")
    table = G.mult_table()
    inv = [0] * n
    e = G.index(G.identity)
    for i in range(n):
        for j in range(n):
            if table[i][j] == e:
                inv[i] = j
    results: list[dict[int, int]] = []

    def propagate(assign: dict[int, int]) -> Optional[dict[int, int]]:
        assign = dict(assign)
        changed = True
        while changed:
            changed = False
            known = list(assign.items())
            for g, bg in known:
                for h, bh in known:
                    # B(g)B(h) = B(g B(g) h B(g)^-1)
                    arg = table[table[table[g][bg]][h]][inv[bg]]
                    val = table[bg][bh]
                    if arg in assign:
                        if assign[arg] != val:
                            return None
                    else:
                        assign[arg] = val
                        changed = True
        return assign

    def search(assign: dict[int, int]) -> None:
        if len(assign) == n:
            results.append(assign)
            return
        g = min(i for i in range(n) if i not in assign)
        for v in range(n):
            trial = dict(assign)
            trial[g] = v
            full = propagate(trial)
            if full is not None:
                search(full)

    base = propagate({e: e})
    assert base is not None
    search(base)
    ops = []
    for assign in results:
        imgs = {G.elements[g]: G.elements[v] for g, v in assign.items()}
        ops.append(from_table(G, imgs, provenance="oracle"))
    ops.sort(key=lambda B: sorted(graph(B).pairs))
    return ops


# -- equivalence under the graph action ------------------------------------

PairSet = frozenset


def _canonical(pairs: Iterable[tuple[int, int]]) -> frozenset:
    return frozenset(pairs)


def equivalence_classes(
    G: FiniteGroup, ops: list[RBOperator]
) -> list[list[RBOperator]]:
    """Partition ops into orbits of their graphs under pair automorphisms
    (phi, phi), conjugation twists (id, alpha_x), and the swap tau."""
    n = G.order()
    auts = automorphism_group(G)
    conj = []
    for x in G.elements:
        xi = x.inverse()
        conj.append(tuple(G.index(xi * G.elements[i] * x) for i in range(n)))

    moves: list[Callable[[frozenset], frozenset]] = []
    for phi in auts:
        moves.append(lambda P, phi=phi: frozenset((phi[a], phi[b]) for a, b in P))
    for c in conj:
        moves.append(lambda P, c=c: frozenset((a, c[b]) for a, b in P))
    moves.append(lambda P: frozenset((b, a) for a, b in P))

    graphs = [graph(B).pairs for B in ops]
    index_of = {g: i for i, g in enumerate(graphs)}

    # tau must realize the companion operator
    for B, P in zip(ops, graphs):
        swapped = frozenset((b, a) for a, b in P)
        tg = graph(tilde(B)).pairs
        if swapped != tg:
            raise AssertionError("swap move does not realize the companion operator")

    assigned = [-1] * len(ops)
    classes: list[list[RBOperator]] = []
    for i in range(len(ops)):
        if assigned[i] >= 0:
            continue
        cid = len(classes)
        orbit = [graphs[i]]
        seen = {graphs[i]}
        members = []
        while orbit:
            P = orbit.pop()
            j = index_of.get(P)
            if j is not None and assigned[j] < 0:
                assigned[j] = cid
                members.append(j)
            for mv in moves:
                Q = mv(P)
                if Q not in seen:
                    seen.add(Q)
                    orbit.append(Q)
        classes.append([ops[j] for j in sorted(members)])
    return classes


# -- classification reports ------------------------------------------------


@dataclass
class ClassSummary:
    representative: RBOperator
    size: int
    splitting: bool
    r_label: str
    kernel_labels: tuple[str, str]
    descendent_label: str


@dataclass
class ClassificationReport:
    group_label: str
    total: int
    splitting: int
    non_splitting: int
    classes: list[ClassSummary]
    conformance: dict[str, bool] = field(default_factory=dict)

    def lines(self) -> list[str]:
        out = [
            f"group: {self.group_label}",
            f"operators: {self.total}",
            f"splitting: {self.splitting}",
            f"non_splitting: {self.non_splitting}",
            f"classes: {len(self.classes)}",
        ]
        for i, c in enumerate(self.classes):
            out.append(
                f"class {i}: size={c.size} splitting={'yes' if c.splitting else 'no'}"
                f" R={c.r_label} kernels={c.kernel_labels[0]},{c.kernel_labels[1]}"
                f" descendent={c.descendent_label}"
            )
        for name in sorted(self.conformance):
            out.append(f"conformant[{name}]: {'yes' if self.conformance[name] else 'no'}")
        return out


def lemma3_shape(B: RBOperator) -> bool:
    """Whether B (or its companion) factors as G = ker(B)*Im(B) exactly
    with the companion restricting to a homomorphism onto R on Im(B)."""
    from .perm import exact_factorization

    for C in (B, tilde(B)):
        im = images(C)
        if not im.R.is_abelian():
            continue
        w = exact_factorization(C.group, im.ker, im.im)
        if not w.exact:
            continue
        Ct = tilde(C)
        rset = im.R._element_set()
        ok = True
        for y1 in im.im.elements:
            if Ct(y1) not in rset:
                ok = False
                break
            for y2 in im.im.elements:
                if Ct(y1 * y2) != Ct(y1) * Ct(y2):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


_DIHEDRAL = re.compile(r"D(\d+)$")
_QUATERNION = re.compile(r"Q(\d+)$")


def classify(G: FiniteGroup, cap: int = ENUMERATE_GUARANTEED) -> ClassificationReport:
    ops = enumerate_rb(G, cap=cap)
    split_flags = [is_splitting(B) for B in ops]
    classes = equivalence_classes(G, ops)
    summaries = []
    for members in classes:
        rep = members[0]
        im = images(rep)
        _, dlabel = descendent_group(rep)
        summaries.append(
            ClassSummary(
                representative=rep,
                size=len(members),
                splitting=is_splitting(rep),
                r_label=iso_label(im.R),
                kernel_labels=kernel_invariant(rep),
                descendent_label=dlabel,
            )
        )
    report = ClassificationReport(
        group_label=G.label or f"G{G.order()}",
        total=len(ops),
        splitting=sum(split_flags),
        non_splitting=len(ops) - sum(split_flags),
        classes=summaries,
    )

    nonsplit = [B for B, s in zip(ops, split_flags) if not s]
    m = _DIHEDRAL.match(G.label or "")
    if m:
        n = int(m.group(1)) // 2
        if n % 2:
            report.conformance["dihedral-odd-no-nonsplitting"] = not nonsplit
        else:
            ok_r = all(
                iso_label(images(B).R) in ("Z2", "Z2xZ2") for B in nonsplit
            )
            ok_shape = all(lemma3_shape(B) for B in nonsplit)
            report.conformance["dihedral-even-R-small"] = ok_r
            report.conformance["dihedral-even-shape"] = ok_shape
    m = _QUATERNION.match(G.label or "")
    if m:
        n = int(m.group(1)) // 4
        if n % 2:
            report.conformance["quaternion-odd-R-order-2"] = all(
                images(B).R.order() == 2 for B in nonsplit
            )
    return report
