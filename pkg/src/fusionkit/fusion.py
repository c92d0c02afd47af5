"""Fusion systems over a small p-group: construction from a finite group,
axiom and saturation checkers, subgroup classification, and the Alperin
decomposition of morphisms.

A morphism P -> Q is stored as the tuple of images of the sorted elements of
P (images are elements of S).  Hom sets are kept per ordered pair of
subgroups, so deliberately broken systems can be represented and checked.
"""

from __future__ import annotations

import itertools
from math import gcd

from .groups import (
    PermGroup,
    Subgroup,
    all_subgroups,
    aut_group_on,
    centralizer,
    inn_group_on,
    mulclose,
    normalizer,
    o_lower_p,
    p_part,
    quotient,
    transporter,
)
from .perm import compose, conjugate, inverse, order


class FusionError(ValueError):
    pass


def _conj_map(P_sorted, x):
    return tuple(conjugate(x, e) for e in P_sorted)


class FusionSystem:
    """A fusion system (or sub/restrictive category) over the p-group S.

    hom[(i, j)] is a frozenset of image tuples for morphisms P_i -> P_j.
    Nothing is assumed at construction time; the checkers are the arbiters.
    """

    def __init__(self, S: PermGroup, p: int, hom: dict):
        if p_part(S.order, p) != S.order:
            raise FusionError(f"S has order {S.order}, not a power of {p}")
        self.S = S
        self.p = p
        self.subgroups = all_subgroups(S)
        self.sub_index = {H.key(): i for i, H in enumerate(self.subgroups)}
        self.sorted_els = [sorted(H.elements) for H in self.subgroups]
        self.pos = [{e: k for k, e in enumerate(els)} for els in self.sorted_els]
        self.hom = {
            pair: frozenset(ms) for pair, ms in hom.items() if ms
        }
        self._cache = {}

    # -- bookkeeping -------------------------------------------------------

    def index_of(self, H) -> int:
        key = H.key() if isinstance(H, Subgroup) else tuple(sorted(H))
        try:
            return self.sub_index[key]
        except KeyError:
            raise FusionError("not a subgroup of S") from None

    def subgroup(self, i: int) -> Subgroup:
        return self.subgroups[i]

    def n_subgroups(self) -> int:
        return len(self.subgroups)

    def homs(self, i: int, j: int):
        return self.hom.get((i, j), frozenset())

    def morphisms(self):
        for (i, j), ms in sorted(self.hom.items()):
            for m in sorted(ms):
                yield i, j, m

    def n_morphisms(self) -> int:
        return sum(len(ms) for ms in self.hom.values())

    def map_of(self, i: int, m) -> dict:
        return dict(zip(self.sorted_els[i], m))

    def image_index(self, m) -> int:
        return self.sub_index[tuple(sorted(m))]

    def is_iso(self, i: int, j: int, m) -> bool:
        return set(m) == set(self.subgroups[j].elements)

    def compose_maps(self, i, j, m1, k, m2):
        """(P_i --m1--> P_j) then (P_j --m2--> P_k): image tuple of the composite."""
        mp2 = self.map_of(j, m2)
        return tuple(mp2[e] for e in m1)

    def restrict_map(self, i, m, i_sub):
        """Restriction of (P_i, m) to the subgroup with index i_sub <= P_i."""
        mp = self.map_of(i, m)
        return tuple(mp[e] for e in self.sorted_els[i_sub])

    def identity_map(self, i):
        return tuple(self.sorted_els[i])

    def inverse_map(self, i, j, m):
        mp = {v: k for k, v in self.map_of(i, m).items()}
        return tuple(mp[e] for e in self.sorted_els[j])

    def conjugation_map(self, i, x, j=None):
        """c_x : P_i -> P_j (j defaults to the full conjugate)."""
        m = _conj_map(self.sorted_els[i], x)
        if j is None:
            j = self.image_index(m)
        return j, m

    def sub_conjugates(self, i):
        """Indices of S-conjugates of P_i."""
        return sorted({self.image_index(_conj_map(self.sorted_els[i], x)) for x in self.S.elements})

    def equals(self, other: "FusionSystem") -> bool:
        return (
            self.S.elements == other.S.elements
            and self.p == other.p
            and self.hom == other.hom
        )

    def restrict_to(self, t_index: int) -> "FusionSystem":
        """The full fusion data between subgroups of P_t, over P_t as ambient."""
        T = self.subgroups[t_index].as_group()
        keys = {H.key() for H in all_subgroups(T)}
        pairs = []
        for (i, j), ms in self.hom.items():
            ki, kj = self.subgroups[i].key(), self.subgroups[j].key()
            if ki in keys and kj in keys:
                pairs.extend((ki, kj, m) for m in ms)
        return fusion_from_pairs(T, self.p, pairs)

    # -- structural sets ----------------------------------------------------

    def n_s(self, i) -> Subgroup:
        return normalizer(self.S, self.subgroups[i])

    def c_s(self, i) -> Subgroup:
        return centralizer(self.S, self.subgroups[i])

    def hom_s_maps(self, i, j):
        """Hom_S(P_i, P_j) as image tuples."""
        els = self.sorted_els[i]
        return {
            _conj_map(els, x)
            for x in transporter(self.S, self.subgroups[i], self.subgroups[j])
        }

    # -- F-conjugacy --------------------------------------------------------

    def f_classes(self):
        """F-conjugacy classes (isomorphism classes), as sorted index tuples."""
        if "f_classes" not in self._cache:
            n = self.n_subgroups()
            parent = list(range(n))

            def find(a):
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                return a

            def union(a, b):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)

            for (i, j), ms in self.hom.items():
                for m in ms:
                    union(i, self.image_index(m))
            classes = {}
            for i in range(n):
                classes.setdefault(find(i), []).append(i)
            self._cache["f_classes"] = tuple(tuple(sorted(v)) for _, v in sorted(classes.items()))
        return self._cache["f_classes"]

    def f_class_of(self, i):
        for cls in self.f_classes():
            if i in cls:
                return cls
        raise FusionError("index out of range")

    def isos_between(self, i, j):
        return [m for m in self.homs(i, j) if self.is_iso(i, j, m)]

    def aut_maps(self, i):
        return self.isos_between(i, i)

    def aut_group(self, i) -> PermGroup:
        """Aut_F(P_i) as a permutation group of the sorted elements of P_i."""
        key = ("aut", i)
        if key not in self._cache:
            pos = self.pos[i]
            perms = {tuple(pos[e] for e in m) for m in self.aut_maps(i)}
            if not perms:
                perms = {tuple(range(len(self.sorted_els[i])))}
            self._cache[key] = PermGroup(len(self.sorted_els[i]), sorted(perms), elements=perms)
        return self._cache[key]

    def aut_s_group(self, i) -> PermGroup:
        pos = self.pos[i]
        els = self.sorted_els[i]
        perms = {
            tuple(pos[conjugate(x, e)] for e in els) for x in self.n_s(i).elements
        }
        return PermGroup(len(els), sorted(perms), elements=perms)

    def map_as_perm(self, i, m):
        """An automorphism map of P_i in the aut_group(i) encoding."""
        pos = self.pos[i]
        return tuple(pos[e] for e in m)

    def perm_as_map(self, i, a):
        els = self.sorted_els[i]
        return tuple(els[a[k]] for k in range(len(els)))


# -- constructors -----------------------------------------------------------


def fusion_from_pairs(S: PermGroup, p: int, pairs) -> FusionSystem:
    """Exact hom data: iterable of (src_key, dst_key, images)."""
    F = FusionSystem(S, p, {})
    hom = {}
    for src, dst, m in pairs:
        i = F.sub_index[tuple(src)]
        j = F.sub_index[tuple(dst)]
        hom.setdefault((i, j), set()).add(tuple(m))
    return FusionSystem(S, p, hom)


def _close_underlying(F: FusionSystem, gens, include_inner: bool):
    """Closure of underlying maps (src_index, images) under restriction and
    composition; returns a set of underlying maps including all inclusions."""
    maps = set()
    todo = []

    def add(i, m):
        it = (i, tuple(m))
        if it not in maps:
            maps.add(it)
            todo.append(it)

    # inclusions = restrictions of the identity of S
    for i in range(F.n_subgroups()):
        add(i, F.identity_map(i))
    if include_inner:
        top = F.n_subgroups() - 1
        for x in F.S.elements:
            add(top, _conj_map(F.sorted_els[top], x))
    for item in gens:
        if isinstance(item, tuple) and len(item) == 2:
            key, m = item
            add(F.sub_index[tuple(key)], m)
        else:
            i, j, m = item
            add(i, m)

    subs_of = [
        [k for k in range(F.n_subgroups()) if F.subgroups[k].elements <= F.subgroups[i].elements]
        for i in range(F.n_subgroups())
    ]
    while todo:
        i, m = todo.pop()
        # restrictions
        for k in subs_of[i]:
            if k != i:
                add(k, F.restrict_map(i, m, k))
        # compositions with everything currently known
        img = F.image_index(m)
        for (a, mb) in list(maps):
            # (i,m) then (a,mb) when image(m) <= P_a
            if F.subgroups[img].elements <= F.subgroups[a].elements:
                mp = F.map_of(a, mb)
                add(i, tuple(mp[e] for e in m))
            # (a,mb) then (i,m)
            imb = F.image_index(mb)
            if F.subgroups[imb].elements <= F.subgroups[i].elements:
                mp = F.map_of(i, m)
                add(a, tuple(mp[e] for e in mb))
    return maps


def _materialize(F: FusionSystem, maps) -> dict:
    """hom[(i,j)] = all underlying maps from P_i with image inside P_j."""
    hom = {}
    by_src = {}
    for i, m in maps:
        by_src.setdefault(i, []).append(m)
    for i, ms in by_src.items():
        for m in ms:
            img = F.image_index(m)
            for j in range(F.n_subgroups()):
                if F.subgroups[img].elements <= F.subgroups[j].elements:
                    hom.setdefault((i, j), set()).add(m)
    return hom


def generated_fusion_system(S: PermGroup, p: int, gens, include_inner=True) -> FusionSystem:
    F = FusionSystem(S, p, {})
    maps = _close_underlying(F, gens, include_inner=include_inner)
    return FusionSystem(S, p, _materialize(F, maps))


def fusion_from_group(G: PermGroup, S: Subgroup, p: int) -> FusionSystem:
    """F_S(G): Hom(P,Q) = {c_x : x in N_G(P,Q)}.  S must be Sylow in G."""
    if S.order != p_part(G.order, p):
        raise FusionError(
            f"S (order {S.order}) is not a Sylow {p}-subgroup of G (order {G.order})"
        )
    Spg = S.as_group()
    F = FusionSystem(Spg, p, {})
    hom = {}
    for i, P in enumerate(F.subgroups):
        Pg = Subgroup(G, P.elements, check=False)
        els = F.sorted_els[i]
        for j, Q in enumerate(F.subgroups):
            Qg = Subgroup(G, Q.elements, check=False)
            ms = {_conj_map(els, x) for x in transporter(G, Pg, Qg)}
            if ms:
                hom[(i, j)] = ms
    return FusionSystem(Spg, p, hom)


def minimal_fusion_system(S: PermGroup, p: int) -> FusionSystem:
    return fusion_from_group(S, Subgroup(S, S.elements), p)


# -- checkers ---------------------------------------------------------------


def check_fusion_axioms(F: FusionSystem):
    """Definition-level checks; returns a list of violation strings."""
    bad = []
    n = F.n_subgroups()
    for i in range(n):
        for j in range(n):
            ms = F.homs(i, j)
            hs = F.hom_s_maps(i, j)
            missing = hs - set(ms)
            if missing:
                bad.append(f"Hom_S(P{i},P{j}) not contained in Hom_F: {len(missing)} missing")
            for m in ms:
                mp = F.map_of(i, m)
                if len(set(m)) != len(m):
                    bad.append(f"non-injective morphism P{i}->P{j}")
                    continue
                if not set(m) <= F.subgroups[j].elements:
                    bad.append(f"morphism P{i}->P{j} with image outside target")
                    continue
                ok_hom = all(
                    mp[compose(a, b)] == compose(mp[a], mp[b])
                    for a in F.subgroups[i].elements
                    for b in F.subgroups[i].elements
                )
                if not ok_hom:
                    bad.append(f"non-homomorphism in Hom(P{i},P{j})")
                    continue
                img = F.image_index(m)
                if m not in F.homs(i, img):
                    bad.append(f"divisibility fails: iso part of P{i}->P{j} missing")
                if F.identity_map(img) not in F.homs(img, j):
                    bad.append(f"divisibility fails: inclusion P{F.image_index(m)}<=P{j} missing")
    # closure under composition and restriction
    for (i, j), ms in F.hom.items():
        for m in ms:
            for (j2, k), ms2 in F.hom.items():
                if j2 != j:
                    continue
                for m2 in ms2:
                    comp = F.compose_maps(i, j, m, k, m2)
                    if comp not in F.homs(i, k):
                        bad.append(f"composition escapes: P{i}->P{j}->P{k}")
                        break
            for ksub in range(F.n_subgroups()):
                if F.subgroups[ksub].elements < F.subgroups[i].elements:
                    r = F.restrict_map(i, m, ksub)
                    if r not in F.homs(ksub, j):
                        bad.append(f"restriction escapes: P{i}|P{ksub}->P{j}")
                        break
    return bad


def basic_flags(F: FusionSystem):
    """Per-subgroup flags that make sense for any fusion system: conjugacy
    class id, fully centralized/normalized, centric, radical."""
    if "basic_flags" in F._cache:
        return F._cache["basic_flags"]
    n = F.n_subgroups()
    cS = [F.c_s(i).order for i in range(n)]
    nS = [F.n_s(i).order for i in range(n)]
    flags = [dict() for _ in range(n)]
    for cls_id, cls in enumerate(F.f_classes()):
        maxc = max(cS[i] for i in cls)
        maxn = max(nS[i] for i in cls)
        centric = all(F.c_s(i).elements <= F.subgroups[i].elements for i in cls)
        for i in cls:
            flags[i]["class_id"] = cls_id
            flags[i]["fully_centralized"] = cS[i] == maxc
            flags[i]["fully_normalized"] = nS[i] == maxn
            flags[i]["centric"] = centric
    for i in range(n):
        flags[i]["radical"] = _is_radical(F, i)
    F._cache["basic_flags"] = flags
    return flags


def classify_subgroups(F: FusionSystem):
    """Full flag table; quasicentric is decided two independent ways (the
    definitional centralizer-system test and the prime-order-automorphism
    criterion, which agree exactly when F is saturated) and cross-checked.
    """
    if "flags" in F._cache:
        return F._cache["flags"]
    flags = [dict(d) for d in basic_flags(F)]
    for i in range(F.n_subgroups()):
        flags[i]["quasicentric"] = None
    for cls in F.f_classes():
        q1 = all(
            _quasicentric_by_centralizer_system(F, i)
            for i in cls
            if flags[i]["fully_centralized"]
        )
        q2 = all(
            not _quasicentric_obstruction(F, i)
            for i in cls
            if flags[i]["fully_centralized"]
        )
        if q1 != q2:
            raise FusionError(
                f"quasicentric criteria disagree on class {cls}: "
                f"definitional={q1}, prime-order-automorphism={q2}"
            )
        for i in cls:
            flags[i]["quasicentric"] = q1
    for i in range(n):
        if flags[i]["centric"] and not flags[i]["quasicentric"]:
            raise FusionError("centric subgroup classified as non-quasicentric")
    F._cache["flags"] = flags
    return flags


def _is_radical(F: FusionSystem, i: int) -> bool:
    A = F.aut_group(i)
    inn = inn_group_on(F.subgroups[i])
    Q, _ = quotient(A, Subgroup(A, inn.elements, check=False))
    return o_lower_p(Q, F.p).order == 1


def centralizer_fusion_system(F: FusionSystem, i: int) -> FusionSystem:
    """C_F(P_i) over C_S(P_i); P_i must be fully centralized."""
    C = F.c_s(i)
    # fully centralized check kept local to avoid recursion through classify
    cls = F.f_class_of(i)
    if any(F.c_s(k).order > C.order for k in cls):
        raise FusionError("centralizer fusion system needs a fully centralized subgroup")
    Cpg = C.as_group()
    P = F.subgroups[i]
    pairs = []
    csubs = all_subgroups(Cpg)
    for Qs in csubs:
        for Qt in csubs:
            qp = F.index_of(Subgroup(F.S, mulclose(Qs.elements | P.elements), check=False))
            qtp = F.index_of(Subgroup(F.S, mulclose(Qt.elements | P.elements), check=False))
            qs_sorted = sorted(Qs.elements)
            found = set()
            for m in F.homs(qp, qtp):
                mp = F.map_of(qp, m)
                if any(mp[e] != e for e in P.elements):
                    continue
                if all(mp[e] in Qt.elements for e in Qs.elements):
                    found.add(tuple(mp[e] for e in qs_sorted))
            if found:
                pairs.append((Qs.key(), Qt.key(), found))
    return fusion_from_pairs(
        Cpg, F.p, [(s, t, m) for s, t, ms in pairs for m in ms]
    )


def _quasicentric_by_centralizer_system(F: FusionSystem, i: int) -> bool:
    """Definitional test: C_F(P') is the fusion system of the p-group C_S(P')."""
    CF = centralizer_fusion_system(F, i)
    CS = minimal_fusion_system(CF.S, F.p)
    return CF.equals(CS)


def _quasicentric_obstruction(F: FusionSystem, i: int):
    """A witness (Q, alpha) with P <= Q <= P.C_S(P), alpha|_P = id, p'-order."""
    P = F.subgroups[i]
    PC = Subgroup(F.S, mulclose(P.elements | F.c_s(i).elements), check=False)
    for qi in range(F.n_subgroups()):
        Q = F.subgroups[qi]
        if not (P.elements <= Q.elements and Q.elements <= PC.elements):
            continue
        for m in F.aut_maps(qi):
            mp = F.map_of(qi, m)
            if any(mp[e] != e for e in P.elements):
                continue
            a = F.map_as_perm(qi, m)
            k = order(a)
            if k > 1 and k % F.p != 0:
                return qi, m
    return None


def check_saturation(F: FusionSystem):
    """Axioms (I) and (II); returns a list of (axiom, detail) violations."""
    bad = []
    flags = basic_flags(F)
    n = F.n_subgroups()
    for i in range(n):
        if not flags[i]["fully_normalized"]:
            continue
        if not flags[i]["fully_centralized"]:
            bad.append(("I", f"P{i} fully normalized but not fully centralized"))
        autF = F.aut_group(i)
        autS = F.aut_s_group(i)
        if autS.order != p_part(autF.order, F.p):
            bad.append(("I", f"Aut_S(P{i}) is not Sylow in Aut_F(P{i})"))
    bad.extend(_check_extension_axiom(F, require="fully_centralized"))
    return bad


def check_saturation_stancu(F: FusionSystem):
    """Stancu's axioms (I') and (II')."""
    bad = []
    top = F.n_subgroups() - 1
    autF = F.aut_group(top)
    autS = F.aut_s_group(top)  # = Inn(S)
    if autS.order != p_part(autF.order, F.p):
        bad.append(("I'", "Inn(S) is not Sylow in Aut_F(S)"))
    bad.extend(_check_extension_axiom(F, require="fully_normalized", tag="II'"))
    return bad


def _check_extension_axiom(F: FusionSystem, require: str, tag: str = "II"):
    bad = []
    flags = basic_flags(F)
    top = F.n_subgroups() - 1
    for i in range(F.n_subgroups()):
        for m in F.homs(i, top):
            j = F.image_index(m)
            if not flags[j][require]:
                continue
            nphi = _n_phi(F, i, m)
            # search for an extension defined on N_phi restricting to m
            k = F.index_of(nphi)
            mp = F.map_of(i, m)
            ok = any(
                all(F.map_of(k, ext)[e] == mp[e] for e in F.subgroups[i].elements)
                for ext in F.homs(k, top)
            )
            if not ok:
                bad.append((tag, f"no extension of P{i}->P{j} to its N_phi (P{k})"))
    return bad


def _n_phi(F: FusionSystem, i: int, m) -> Subgroup:
    """N_phi = {g in N_S(P) : phi c_g phi^{-1} in Aut_S(phi P)}."""
    mp = F.map_of(i, m)
    j = F.image_index(m)
    autS_j = {
        tuple(conjugate(x, e) for e in F.sorted_els[j])
        for x in F.n_s(j).elements
    }
    inv = {v: k for k, v in mp.items()}
    els = []
    for g in F.n_s(i).elements:
        # phi c_g phi^{-1} evaluated on the sorted elements of phi(P)
        tr = tuple(mp[conjugate(g, inv[e])] for e in F.sorted_els[j])
        if tr in autS_j:
            els.append(g)
    return Subgroup(F.S, mulclose(els), check=False)


def is_saturated(F: FusionSystem) -> bool:
    return not check_saturation(F)


def conjugate_to_fully_normalized(F: FusionSystem, i: int):
    """(j, alpha) with P_j fully normalized, alpha in Hom_F(N_S(P_i), S),
    alpha(P_i) = P_j; exists whenever F is saturated (Lemma-level fact)."""
    flags = basic_flags(F)
    cls = F.f_class_of(i)
    ni = F.index_of(F.n_s(i))
    top = F.n_subgroups() - 1
    for j in sorted(cls):
        if not flags[j]["fully_normalized"]:
            continue
        nj = F.n_s(j)
        for m in sorted(F.homs(ni, top)):
            mp = F.map_of(ni, m)
            if {mp[e] for e in F.subgroups[i].elements} == set(F.subgroups[j].elements) and set(
                m
            ) <= nj.elements:
                return j, m
    raise FusionError(f"no fully normalized target found for P{i} (system not saturated?)")


# -- Alperin decomposition ---------------------------------------------------


class AlperinWord:
    """phi = (restriction of alpha_k) o ... o (restriction of alpha_1).

    letters[t] = (Q_index, alpha_images); applying letter t maps the chain
    subgroup P_{t-1} (inside Q) to P_t.
    """

    def __init__(self, F, src_index, letters, chain):
        self.F = F
        self.src_index = src_index
        self.letters = letters
        self.chain = chain

    def __len__(self):
        return len(self.letters)

    def recompose(self):
        F = self.F
        cur = F.identity_map(self.src_index)
        for (qi, alpha) in self.letters:
            amap = F.map_of(qi, alpha)
            cur = tuple(amap[e] for e in cur)
        return cur


def alperin_letters(F: FusionSystem):
    """All (Q_index, alpha) with Q centric, radical and fully normalized."""
    flags = basic_flags(F)
    out = []
    for qi in range(F.n_subgroups()):
        f = flags[qi]
        if f["centric"] and f["radical"] and f["fully_normalized"]:
            for alpha in sorted(F.aut_maps(qi)):
                out.append((qi, alpha))
    return out


def alperin_decompose(F: FusionSystem, i: int, m) -> AlperinWord:
    """Decompose the morphism (P_i, m) per Alperin's fusion theorem.

    Breadth-first search over underlying maps P_i -> S, where each step
    applies the restriction of an automorphism of a centric-radical-fully
    normalized subgroup containing the current image.  The recomposition is
    exact by construction.
    """
    target = tuple(m)
    start = F.identity_map(i)
    if target == start:
        return AlperinWord(F, i, [], [i])
    letters = alperin_letters(F)
    seen = {start: None}
    frontier = [start]
    while frontier:
        new = []
        for cur in frontier:
            img = set(cur)
            for (qi, alpha) in letters:
                if not img <= F.subgroups[qi].elements:
                    continue
                amap = F.map_of(qi, alpha)
                nxt = tuple(amap[e] for e in cur)
                if nxt not in seen:
                    seen[nxt] = (cur, qi, alpha)
                    if nxt == target:
                        out = []
                        node = nxt
                        while seen[node] is not None:
                            prev, qi2, a2 = seen[node]
                            out.append((qi2, a2))
                            node = prev
                        out.reverse()
                        chain = [i]
                        curm = start
                        for (qq, aa) in out:
                            curm = tuple(F.map_of(qq, aa)[e] for e in curm)
                            chain.append(F.image_index(curm))
                        word = AlperinWord(F, i, out, chain)
                        if word.recompose() != target:
                            raise FusionError("alperin recomposition mismatch")
                        return word
                    new.append(nxt)
        frontier = new
    raise FusionError(
        f"no Alperin decomposition found for morphism of P{i} (system not saturated?)"
    )


# -- generation and counting -------------------------------------------------


def is_H_generated(F: FusionSystem, H_indices) -> bool:
    """True iff every F-morphism is a composite of restrictions of
    F-morphisms between members of H."""
    gens = []
    Hset = set(H_indices)
    for (i, j), ms in F.hom.items():
        if i in Hset and j in Hset:
            for m in ms:
                gens.append((i, j, m))
    maps = _close_underlying(F, [(F.subgroups[i].key(), m) for i, j, m in gens],
                             include_inner=False)
    for (i, j), ms in F.hom.items():
        for m in ms:
            if (i, m) not in maps:
                return False
    return True


def fully_normalized_class_count(F: FusionSystem, i: int) -> int:
    """Number of S-conjugacy classes of fully normalized F-conjugates of P_i."""
    flags = basic_flags(F)
    fn = [j for j in F.f_class_of(i) if flags[j]["fully_normalized"]]
    seen = set()
    count = 0
    for j in fn:
        if j in seen:
            continue
        count += 1
        seen.update(F.sub_conjugates(j))
    return count


# -- isomorphism of fusion systems -------------------------------------------


def _group_iso_candidates(S1: PermGroup, S2: PermGroup):
    """Yield group isomorphisms S1 -> S2 as element dicts (brute force)."""
    if S1.order != S2.order:
        return
    els1 = sorted(S1.elements)
    gens = Subgroup(S1, S1.elements).generator_witnesses() or (S1.identity(),)
    by_order = {}
    for e in S2.elements:
        by_order.setdefault(order(e), []).append(e)

    def extend(k, assigned):
        if k == len(gens):
            fmap = {S1.identity(): S2.identity()}
            frontier = [S1.identity()]
            while frontier:
                new = []
                for x in frontier:
                    for g in gens:
                        y = compose(g, x)
                        fy = compose(assigned[g], fmap[x])
                        if y in fmap:
                            if fmap[y] != fy:
                                return
                        else:
                            fmap[y] = fy
                            new.append(y)
                frontier = new
            if len(set(fmap.values())) == S1.order:
                yield dict(fmap)
            return
        g = gens[k]
        for h in by_order.get(order(g), []):
            assigned[g] = h
            yield from extend(k + 1, assigned)
        assigned.pop(g, None)

    yield from extend(0, {})


def transport_hom(F1: FusionSystem, F2: FusionSystem, beta: dict) -> bool:
    """Does the group isomorphism beta: S1 -> S2 carry F1 exactly onto F2?"""
    for (i, j), ms in F1.hom.items():
        i2 = F2.index_of(Subgroup(F2.S, {beta[e] for e in F1.subgroups[i].elements}, check=False))
        j2 = F2.index_of(Subgroup(F2.S, {beta[e] for e in F1.subgroups[j].elements}, check=False))
        moved = set()
        src2 = F2.sorted_els[i2]
        inv = {v: k for k, v in beta.items()}
        for m in ms:
            mp = F1.map_of(i, m)
            moved.add(tuple(beta[mp[inv[e]]] for e in src2))
        if moved != set(F2.homs(i2, j2)):
            return False
    # surjectivity of pair coverage: F2 must not have extra nonempty pairs
    pairs1 = set()
    for (i, j), ms in F1.hom.items():
        i2 = F2.index_of(Subgroup(F2.S, {beta[e] for e in F1.subgroups[i].elements}, check=False))
        j2 = F2.index_of(Subgroup(F2.S, {beta[e] for e in F1.subgroups[j].elements}, check=False))
        pairs1.add((i2, j2))
    return pairs1 == set(F2.hom.keys())


def find_fusion_iso(F1: FusionSystem, F2: FusionSystem):
    """A fusion-preserving group isomorphism S1 -> S2, or None."""
    if F1.p != F2.p or F1.S.order != F2.S.order:
        return None
    if F1.n_morphisms() != F2.n_morphisms():
        return None
    for beta in _group_iso_candidates(F1.S, F2.S):
        if transport_hom(F1, F2, beta):
            return beta
    return None
