"""Exact finite permutation-group arithmetic at desk scale.

Groups live as fully materialized element sets (|G| <= ~10^4), so every
operation here is definitional enumeration: Sylow subgroups, normalizers,
centralizers, transporters, O^p / O^{p'}, subgroup lattices, quotients and
automorphism groups are all computed exactly and cross-checkable.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import gcd

from .perm import Perm, compose, conjugate, cycle_str, identity, inverse, is_perm, order


def mulclose(gens, cap: int | None = None):
    """Closure of a set of permutations under composition (BFS)."""
    gens = [tuple(g) for g in gens]
    if not gens:
        raise ValueError("need at least one generator (or an explicit identity)")
    els = set(gens)
    ident = identity(len(gens[0]))
    els.add(ident)
    frontier = list(els)
    while frontier:
        new = []
        for b in frontier:
            for a in gens:
                c = compose(a, b)
                if c not in els:
                    els.add(c)
                    new.append(c)
                    if cap is not None and len(els) > cap:
                        raise ValueError(f"closure exceeded cap {cap}")
        frontier = new
    return frozenset(els)


def p_part(n: int, p: int) -> int:
    m = 1
    while n % (m * p) == 0:
        m *= p
    return m


class GroupError(ValueError):
    pass


class PermGroup:
    """A finite permutation group of {0..degree-1} with materialized elements."""

    def __init__(self, degree: int, generators, elements=None):
        self.degree = degree
        gens = tuple(tuple(g) for g in generators) or (identity(degree),)
        for g in gens:
            if not is_perm(g, degree):
                raise GroupError(f"not a permutation of degree {degree}: {g}")
        self.generators = gens
        self.elements = frozenset(elements) if elements is not None else mulclose(gens)
        self._cache = {}

    @classmethod
    def closure(cls, gens, degree: int) -> "PermGroup":
        return cls(degree, gens)

    @classmethod
    def trivial(cls, degree: int = 1) -> "PermGroup":
        return cls(degree, [identity(degree)])

    @property
    def order(self) -> int:
        return len(self.elements)

    def identity(self) -> Perm:
        return identity(self.degree)

    def __contains__(self, g) -> bool:
        return tuple(g) in self.elements

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PermGroup)
            and self.degree == other.degree
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((self.degree, self.elements))

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"

    def sorted_elements(self):
        key = "sorted"
        if key not in self._cache:
            self._cache[key] = tuple(sorted(self.elements))
        return self._cache[key]

    def subgroup(self, elements) -> "Subgroup":
        return Subgroup(self, elements)

    def full(self) -> "Subgroup":
        return Subgroup(self, self.elements)

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, [self.identity()])

    # -- conjugacy ---------------------------------------------------------

    def conjugacy_classes(self):
        key = "cc"
        if key not in self._cache:
            seen = set()
            classes = []
            for x in self.sorted_elements():
                if x in seen:
                    continue
                cls = frozenset(conjugate(g, x) for g in self.elements)
                seen |= cls
                classes.append(cls)
            self._cache[key] = tuple(classes)
        return self._cache[key]

    def normal_closure(self, elems) -> frozenset:
        gens = set()
        for x in elems:
            gens.update(conjugate(g, x) for g in self.elements)
        return mulclose(gens | {self.identity()})

    def normal_subgroups(self):
        """All normal subgroups, as frozensets (closure of unions of classes)."""
        key = "normals"
        if key not in self._cache:
            classes = self.conjugacy_classes()
            nontriv = [c for c in classes if c != frozenset({self.identity()})]
            found = {frozenset({self.identity()})}
            frontier = list(found)
            while frontier:
                new = []
                for n in frontier:
                    for c in nontriv:
                        if c <= n:
                            continue
                        m = mulclose(n | c)
                        if m not in found:
                            found.add(m)
                            new.append(m)
                frontier = new
            self._cache[key] = tuple(sorted(found, key=lambda s: (len(s), sorted(s))))
        return self._cache[key]


class Subgroup:
    """A subgroup of a fixed ambient PermGroup, stored as its element set."""

    def __init__(self, ambient: PermGroup, elements, check: bool = True):
        self.ambient = ambient
        self.elements = frozenset(tuple(g) for g in elements)
        if check:
            if not self.elements <= ambient.elements:
                raise GroupError("subgroup elements not inside the ambient group")
            if not is_closed(self.elements):
                raise GroupError("element set is not a subgroup")
        self._gens = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def key(self):
        """Canonical identity: the sorted element tuple."""
        return tuple(sorted(self.elements))

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.ambient.degree == other.ambient.degree
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((self.ambient.degree, self.elements))

    def __le__(self, other) -> bool:
        return self.elements <= other.elements

    def __contains__(self, g) -> bool:
        return tuple(g) in self.elements

    def __repr__(self):
        gens = ", ".join(cycle_str(g) for g in self.generator_witnesses())
        return f"Subgroup(order={self.order}, gens=[{gens}])"

    def generator_witnesses(self):
        """A smallish generating list (greedy)."""
        if self._gens is None:
            gens: list[Perm] = []
            have = {identity(self.ambient.degree)}
            for x in sorted(self.elements, key=lambda g: (order(g), g), reverse=True):
                if x not in have:
                    gens.append(x)
                    have = mulclose(gens)
                if len(have) == self.order:
                    break
            self._gens = tuple(gens)
        return self._gens

    def as_group(self) -> PermGroup:
        gens = self.generator_witnesses() or (identity(self.ambient.degree),)
        return PermGroup(self.ambient.degree, gens, self.elements)

    def is_normal_in(self, other: "Subgroup") -> bool:
        return all(conjugate(g, x) in self.elements for g in other.elements for x in self.elements)

    def conjugated_by(self, g: Perm) -> "Subgroup":
        return Subgroup(self.ambient, [conjugate(g, x) for x in self.elements], check=False)


def is_closed(elements) -> bool:
    els = set(elements)
    if not els:
        return False
    some = next(iter(els))
    if identity(len(some)) not in els:
        return False
    return all(compose(a, b) in els for a in els for b in els)


# -- pointwise constructions ----------------------------------------------


def intersection(a: Subgroup, b: Subgroup) -> Subgroup:
    return Subgroup(a.ambient, a.elements & b.elements, check=False)


def product_set(a: Subgroup, b: Subgroup) -> Subgroup:
    """The subgroup <a, b>; equals the set-product when one normalizes the other."""
    return Subgroup(a.ambient, mulclose(set(a.elements) | set(b.elements)), check=False)


def transporter(G: PermGroup, H: Subgroup, K: Subgroup):
    """N_G(H,K) = {x in G : x H x^{-1} <= K} as a sorted element tuple."""
    out = [x for x in G.sorted_elements() if all(conjugate(x, h) in K.elements for h in H.elements)]
    return tuple(out)


def normalizer(G: PermGroup, H: Subgroup) -> Subgroup:
    els = [x for x in G.elements if frozenset(conjugate(x, h) for h in H.elements) == H.elements]
    return Subgroup(G, els, check=False)


def centralizer(G: PermGroup, H: Subgroup) -> Subgroup:
    els = [x for x in G.elements if all(compose(x, h) == compose(h, x) for h in H.generator_witnesses() or [G.identity()])]
    return Subgroup(G, els, check=False)


def center(G: PermGroup) -> Subgroup:
    return centralizer(G, G.full())


def commutator_subgroup(G: PermGroup) -> Subgroup:
    comms = {
        compose(compose(a, b), compose(inverse(a), inverse(b)))
        for a in G.elements
        for b in G.elements
    }
    return Subgroup(G, mulclose(comms | {G.identity()}), check=False)


def sylow(G: PermGroup, p: int) -> Subgroup:
    """A Sylow p-subgroup, by the normalizer-climb algorithm."""
    if p < 2 or any(p % d == 0 for d in range(2, p)):
        raise GroupError(f"{p} is not prime")
    target = p_part(G.order, p)
    P = G.trivial_subgroup()
    while P.order < target:
        N = normalizer(G, P)
        grew = False
        for x in sorted(N.elements):
            if x in P:
                continue
            k = order(x)
            q = p_part(k, p)
            if q == 1:
                continue
            xp = x
            # power down to p-power order
            e = k // q
            y = G.identity()
            for _ in range(e):
                y = compose(y, xp)
            if y not in P.elements:
                P = Subgroup(G, mulclose(set(P.elements) | {y}), check=False)
                grew = True
                break
        if not grew:  # pragma: no cover - climb always succeeds for p | |G|
            raise GroupError("sylow climb stalled")
    return P


def all_subgroups(G: PermGroup):
    """Every subgroup of G (meant for small G, e.g. a Sylow subgroup)."""
    key = "all_subgroups"
    if key not in G._cache:
        found = {frozenset({G.identity()})}
        frontier = list(found)
        while frontier:
            new = []
            for h in frontier:
                for x in G.elements:
                    if x in h:
                        continue
                    m = mulclose(h | {x})
                    if G.order % len(m) == 0 and m not in found:
                        found.add(m)
                        new.append(m)
            frontier = new
        subs = [Subgroup(G, els, check=False) for els in found]
        subs.sort(key=lambda s: (s.order, s.key()))
        G._cache[key] = tuple(subs)
    return G._cache[key]


def quotient(G: PermGroup, N: Subgroup):
    """The quotient G/N as a permutation group on the left cosets of N.

    Returns (Q, project) where project maps an element of G to its image
    permutation in Q.  N must be normal in G.
    """
    if not N.is_normal_in(G.full()):
        raise GroupError("quotient by a non-normal subgroup")
    nset = N.elements
    reps = []
    seen = set()
    for g in G.sorted_elements():
        if g in seen:
            continue
        reps.append(g)
        seen |= {compose(g, n) for n in nset}
    index = {}
    for i, r in enumerate(reps):
        for n in nset:
            index[compose(r, n)] = i

    def project(g):
        gt = tuple(g)
        return tuple(index[compose(gt, r)] for r in reps)

    images = {}
    for g in G.elements:
        images.setdefault(project(g), g)
    Q = PermGroup(len(reps), sorted(images), elements=images.keys())
    return Q, project


def o_upper_p(G: PermGroup, p: int) -> Subgroup:
    """O^p(G): generated by all elements of order prime to p."""
    gens = {x for x in G.elements if order(x) % p != 0}
    return Subgroup(G, mulclose(gens | {G.identity()}), check=False)


def o_upper_pprime(G: PermGroup, p: int) -> Subgroup:
    """O^{p'}(G): generated by all elements of p-power order."""
    gens = {x for x in G.elements if p_part(order(x), p) == order(x)}
    return Subgroup(G, mulclose(gens | {G.identity()}), check=False)


def o_upper_p_by_index(G: PermGroup, p: int) -> Subgroup:
    """O^p(G) recomputed as the smallest normal subgroup of p-power index."""
    best = None
    for n in G.normal_subgroups():
        idx = G.order // len(n)
        if p_part(idx, p) == idx and (best is None or len(n) < len(best)):
            best = n
    return Subgroup(G, best, check=False)


def o_upper_pprime_by_index(G: PermGroup, p: int) -> Subgroup:
    """O^{p'}(G) recomputed as the smallest normal subgroup of p'-index."""
    best = None
    for n in G.normal_subgroups():
        idx = G.order // len(n)
        if gcd(idx, p) == 1 and (best is None or len(n) < len(best)):
            best = n
    return Subgroup(G, best, check=False)


def o_lower_p(G: PermGroup, p: int) -> Subgroup:
    """O_p(G): the p-core, i.e. the largest normal p-subgroup."""
    best = frozenset({G.identity()})
    for n in G.normal_subgroups():
        if p_part(len(n), p) == len(n) and len(n) > len(best):
            best = n
    return Subgroup(G, best, check=False)


def o_lower_pprime(G: PermGroup, p: int) -> Subgroup:
    """O_{p'}(G): the largest normal p'-subgroup."""
    best = frozenset({G.identity()})
    for n in G.normal_subgroups():
        if gcd(len(n), p) == 1 and len(n) > len(best):
            best = n
    return Subgroup(G, best, check=False)


def is_p_solvable(G: PermGroup, p: int) -> bool:
    """True iff G has a normal series with p-group or p'-group factors."""
    H = G
    while H.order > 1:
        k = o_lower_p(H, p).order * o_lower_pprime(H, p).order  # orders are coprime
        if k == 1:
            return False
        strip = product_set(o_lower_p(H, p), o_lower_pprime(H, p))
        H, _ = quotient(H, strip)
    return True


def hyperfocal_group_oracle(G: PermGroup, S: Subgroup, p: int) -> Subgroup:
    """S ∩ O^p(G), cross-checked against the commutator generating set.

    The equality of the two computations is the hyperfocal subgroup theorem
    for groups, used as an executable oracle; disagreement raises.
    """
    byint = intersection(S, o_upper_p(G, p))
    gens = set()
    for P in all_subgroups(S.as_group()):
        Pamb = Subgroup(G, P.elements, check=False)
        N = normalizer(G, Pamb)
        for x in N.elements:
            if order(x) % p == 0:
                continue
            for g in P.elements:
                # [g, x] = g^{-1} (x g x^{-1})
                gens.add(compose(inverse(g), conjugate(x, g)))
    bycomm = Subgroup(G, mulclose(gens | {G.identity()}), check=False)
    if byint.elements != bycomm.elements:
        raise GroupError(
            "hyperfocal oracle mismatch: S ∩ O^p(G) differs from the "
            "commutator-generated subgroup"
        )
    return byint


# -- automorphisms ---------------------------------------------------------


def aut_group_on(G: PermGroup, P: Subgroup) -> PermGroup:
    """Aut_G(P) = N_G(P)/C_G(P), as permutations of the sorted elements of P."""
    els = sorted(P.elements)
    pos = {e: i for i, e in enumerate(els)}
    perms = set()
    for x in normalizer(G, P).elements:
        perms.add(tuple(pos[conjugate(x, e)] for e in els))
    return PermGroup(len(els), sorted(perms), elements=perms)


def hom_as_perm(P: Subgroup, images: dict) -> Perm:
    """Encode an automorphism of P (element map) as a permutation of its sorted elements."""
    els = sorted(P.elements)
    pos = {e: i for i, e in enumerate(els)}
    return tuple(pos[images[e]] for e in els)


def full_aut_group(P: PermGroup, cap: int = 16) -> PermGroup:
    """Aut(P) for |P| <= cap, as permutations of the sorted elements of P.

    Exhaustive generator-image backtracking; meant only for small p-groups.
    """
    if P.order > cap:
        raise GroupError(f"full_aut_group supports |P| <= {cap}, got {P.order}")
    els = sorted(P.elements)
    pos = {e: i for i, e in enumerate(els)}
    gens = Subgroup(P, P.elements).generator_witnesses() or (P.identity(),)
    by_order: dict[int, list] = {}
    for e in els:
        by_order.setdefault(order(e), []).append(e)

    auts = set()

    def words(k, assigned):
        """Extend a partial map on gens[:k] to the closure; None if inconsistent."""
        if k == len(gens):
            # assigned maps each generator; grow to the full hom by BFS
            fmap = {P.identity(): P.identity()}
            frontier = [P.identity()]
            while frontier:
                new = []
                for x in frontier:
                    for g, h in zip(gens, [assigned[g] for g in gens]):
                        y = compose(g, x)
                        fy = compose(h, fmap[x])
                        if y in fmap:
                            if fmap[y] != fy:
                                return
                        else:
                            fmap[y] = fy
                            new.append(y)
                frontier = new
            if len(set(fmap.values())) == P.order:
                auts.add(tuple(pos[fmap[e]] for e in els))
            return
        g = gens[k]
        for h in by_order.get(order(g), []):
            assigned[g] = h
            words(k + 1, assigned)
        assigned.pop(g, None)

    words(0, {})
    return PermGroup(len(els), sorted(auts), elements=auts)


def perm_on_elements_to_map(P: Subgroup, a: Perm) -> dict:
    els = sorted(P.elements)
    return {els[i]: els[a[i]] for i in range(len(els))}


def inn_group_on(P: Subgroup) -> PermGroup:
    """Inn(P) in the same encoding as aut_group_on/full_aut_group."""
    return aut_group_on(P.as_group(), Subgroup(P.as_group(), P.elements))


def direct_product(A: PermGroup, B: PermGroup) -> PermGroup:
    """A x B acting on the disjoint union of the two point sets."""
    d = A.degree + B.degree
    gens = []
    for g in A.generators:
        gens.append(tuple(list(g) + [A.degree + i for i in range(B.degree)]))
    for h in B.generators:
        gens.append(tuple(list(range(A.degree)) + [A.degree + h[i] for i in range(B.degree)]))
    els = {
        tuple(list(a) + [A.degree + b[i] for i in range(B.degree)])
        for a in A.elements
        for b in B.elements
    }
    return PermGroup(d, gens, elements=els)
