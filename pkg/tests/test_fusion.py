"""Fusion-core tests: construction, axiom/saturation checkers (including
deliberately broken systems), classification cross-checks against the
group-realizable criteria, Alperin decomposition, generation, counts."""

import pytest
from hypothesis import given, settings, strategies as st

from fusionkit.groups import (
    Subgroup,
    all_subgroups,
    intersection,
    mulclose,
    o_lower_pprime,
    p_part,
    sylow,
)
from fusionkit.perm import parse_cycles
from fusionkit.presets import preset
from fusionkit.fusion import (
    FusionError,
    alperin_decompose,
    centralizer_fusion_system,
    check_fusion_axioms,
    check_saturation,
    check_saturation_stancu,
    classify_subgroups,
    conjugate_to_fully_normalized,
    find_fusion_iso,
    fully_normalized_class_count,
    fusion_from_group,
    fusion_from_pairs,
    generated_fusion_system,
    is_H_generated,
    is_saturated,
    minimal_fusion_system,
)

CORPUS = [
    ("C2", 2), ("C4", 2), ("D8", 2), ("Q8", 2), ("V4", 2), ("S3", 2),
    ("S3", 3), ("A4", 2), ("S4", 2), ("SL23", 2), ("A5", 2), ("A6", 2),
    ("C3", 3), ("S3xC2", 2),
]


def corpus_system(name, p):
    g = preset(name)
    return g, sylow(g, p), fusion_from_group(g, sylow(g, p), p)


def test_fusion_from_group_minimal():
    s = preset("D8")
    f = minimal_fusion_system(s, 2)
    for i in range(f.n_subgroups()):
        for j in range(f.n_subgroups()):
            assert set(f.homs(i, j)) == f.hom_s_maps(i, j)


def test_fusion_from_group_sigma3():
    g = preset("S3")
    s = sylow(g, 2)
    f = fusion_from_group(g, s, 2)
    top = f.n_subgroups() - 1
    assert f.homs(top, top) == frozenset({f.identity_map(top)})


def test_fusion_from_group_requires_sylow():
    g = preset("S4")
    z = Subgroup(g, mulclose([parse_cycles("(0 1)(2 3)", 4)]))
    with pytest.raises(FusionError):
        fusion_from_group(g, z, 2)


def test_aut_f_v4_order():
    g, s, f = corpus_system("S4", 2)
    v4 = [i for i in range(f.n_subgroups())
          if f.subgroups[i].order == 4 and classify_subgroups(f)[i]["radical"]]
    assert len(v4) == 1
    assert f.aut_group(v4[0]).order == 6


def test_axioms_pass_on_corpus():
    for name, p in CORPUS:
        _, _, f = corpus_system(name, p)
        assert check_fusion_axioms(f) == [], (name, p)


def test_axioms_fail_on_mutilated_system():
    _, _, f = corpus_system("S4", 2)
    # delete one Hom_S morphism
    pairs = [(f.subgroups[i].key(), f.subgroups[j].key(), m)
             for i, j, m in f.morphisms()]
    inner = next((i, j, m) for i, j, m in f.morphisms()
                 if i != j and m in f.hom_s_maps(i, j))
    broken = fusion_from_pairs(f.S, 2, [t for t in pairs
                                        if t != (f.subgroups[inner[0]].key(),
                                                 f.subgroups[inner[1]].key(), inner[2])])
    msgs = check_fusion_axioms(broken)
    assert any("Hom_S" in s for s in msgs)


def test_axioms_fail_on_noninjective_map():
    _, _, f = corpus_system("S3", 2)
    pairs = [(f.subgroups[i].key(), f.subgroups[j].key(), m) for i, j, m in f.morphisms()]
    top = f.n_subgroups() - 1
    collapse = tuple(f.S.identity() for _ in f.sorted_els[top])
    pairs.append((f.subgroups[top].key(), f.subgroups[0].key(), collapse))
    broken = fusion_from_pairs(f.S, 2, pairs)
    msgs = check_fusion_axioms(broken)
    assert any("non-injective" in s or "outside" in s for s in msgs)


def test_saturation_on_corpus_and_agreement():
    for name, p in CORPUS:
        _, _, f = corpus_system(name, p)
        a = check_saturation(f)
        b = check_saturation_stancu(f)
        assert a == [] and b == [], (name, p, a, b)


def broken_fixture_full_aut_d8():
    """Hom = restrictions of all of Aut(D8): fails (I')/(I) at S."""
    from fusionkit.groups import full_aut_group

    s = preset("D8")
    auts = full_aut_group(s)
    els = sorted(s.elements)
    gens = []
    skey = tuple(els)
    for a in auts.elements:
        gens.append((skey, tuple(els[a[i]] for i in range(len(els)))))
    return generated_fusion_system(s, 2, gens)


def broken_fixture_central_twist():
    """S = V4, alpha trivial on A and S/A but not inner: fails (I')/(I)."""
    s = preset("V4")
    els = sorted(s.elements)
    x, y = [e for e in els if e != s.identity()][:2]
    from fusionkit.perm import compose

    # alpha: x -> x, y -> xy (trivial on A=<x> and on S/A)
    amap = {s.identity(): s.identity(), x: x, y: compose(x, y), compose(x, y): y}
    gens = [(tuple(els), tuple(amap[e] for e in els))]
    return generated_fusion_system(s, 2, gens)


def broken_fixture_missing_extension():
    """S = V4 with an isolated <x> ~ <y> identification: fails (II)/(II')."""
    s = preset("V4")
    els = sorted(s.elements)
    nontriv = [e for e in els if e != s.identity()]
    x, y = nontriv[0], nontriv[1]
    dom = sorted([s.identity(), x])
    images = tuple(y if e == x else e for e in dom)
    return generated_fusion_system(s, 2, [(tuple(dom), images)])


def test_broken_fixtures_fail_with_named_axioms():
    f1 = broken_fixture_full_aut_d8()
    a1, b1 = check_saturation(f1), check_saturation_stancu(f1)
    assert any(v[0] == "I" for v in a1) and any(v[0] == "I'" for v in b1)

    f2 = broken_fixture_central_twist()
    a2, b2 = check_saturation(f2), check_saturation_stancu(f2)
    assert any(v[0] == "I" for v in a2) and any(v[0] == "I'" for v in b2)

    f3 = broken_fixture_missing_extension()
    assert check_fusion_axioms(f3) == []
    a3, b3 = check_saturation(f3), check_saturation_stancu(f3)
    assert any(v[0] == "II" for v in a3) and any(v[0] == "II'" for v in b3)


def test_classification_group_realizable_oracles():
    """F-centric iff Z(P) Sylow in C_G(P); F-quasicentric iff C_G(P) has a
    normal p'-subgroup of p-power index — brute-forced on both sides."""
    from fusionkit.groups import centralizer as cent

    for name, p in CORPUS:
        g, s, f = corpus_system(name, p)
        flags = classify_subgroups(f)
        for i in range(f.n_subgroups()):
            P = Subgroup(g, f.subgroups[i].elements, check=False)
            cg = cent(g, P)
            zp = intersection(P, cg)
            p_centric = zp.order == p_part(cg.order, p)
            assert flags[i]["centric"] == p_centric, (name, p, i)
            opl = o_lower_pprime(cg.as_group(), p)
            idx = cg.order // opl.order
            p_quasi = p_part(idx, p) == idx
            assert flags[i]["quasicentric"] == p_quasi, (name, p, i)


def test_centralizer_fusion_system_cases():
    _, _, f = corpus_system("S4", 2)
    assert centralizer_fusion_system(f, 0).equals(f)
    top = f.n_subgroups() - 1
    cf = centralizer_fusion_system(f, top)
    assert cf.S.order == 2  # Z(D8)
    g, s, fq = corpus_system("SL23", 2)
    zi = next(i for i in range(fq.n_subgroups())
              if fq.subgroups[i].order == 2)
    cf2 = centralizer_fusion_system(fq, zi)
    assert cf2.equals(fq)  # the central involution is fixed by all fusion


def test_conjugate_to_fully_normalized():
    for name, p in [("S4", 2), ("A6", 2), ("SL23", 2)]:
        _, _, f = corpus_system(name, p)
        flags = classify_subgroups(f)
        for i in range(f.n_subgroups()):
            j, m = conjugate_to_fully_normalized(f, i)
            assert flags[j]["fully_normalized"]
            mp = f.map_of(f.index_of(f.n_s(i)), m)
            assert {mp[e] for e in f.subgroups[i].elements} == set(f.subgroups[j].elements)


def test_alperin_identity_and_inner():
    s = preset("D8")
    f = minimal_fusion_system(s, 2)
    w = alperin_decompose(f, 2, f.identity_map(2))
    assert len(w) == 0
    # an inner morphism decomposes through Aut_F(S)-letters
    top = f.n_subgroups() - 1
    for i, j, m in f.morphisms():
        w = alperin_decompose(f, i, m)
        assert w.recompose() == m


def test_alperin_everything_recomposes():
    for name, p in [("S4", 2), ("SL23", 2), ("A6", 2), ("S3", 3)]:
        _, _, f = corpus_system(name, p)
        flags = classify_subgroups(f)
        for i, j, m in f.morphisms():
            w = alperin_decompose(f, i, m)
            assert w.recompose() == m
            for qi, _a in w.letters:
                assert flags[qi]["centric"] and flags[qi]["radical"] \
                    and flags[qi]["fully_normalized"]


def test_fully_normalized_class_count_examples():
    _, _, f = corpus_system("S4", 2)
    top = f.n_subgroups() - 1
    assert fully_normalized_class_count(f, top) == 1
    for name, p in CORPUS:
        _, _, f = corpus_system(name, p)
        for i in range(f.n_subgroups()):
            assert fully_normalized_class_count(f, i) % p != 0, (name, p, i)


def test_is_H_generated_all_subgroups():
    _, _, f = corpus_system("S4", 2)
    assert is_H_generated(f, range(f.n_subgroups()))


def test_fusion_iso_reflexive_and_distinguishing():
    _, _, f1 = corpus_system("A4", 2)
    f2 = minimal_fusion_system(preset("V4"), 2)
    assert find_fusion_iso(f1, f1)
    assert find_fusion_iso(f1, f2) is None


@given(st.integers(min_value=0, max_value=10 ** 6))
@settings(max_examples=25, deadline=None)
def test_random_conjugation_stays_in_fusion(seed):
    """Property: morphism sets of F_S(G) are stable under S-conjugation."""
    import random

    rng = random.Random(seed)
    name, p = CORPUS[seed % len(CORPUS)]
    g = preset(name)
    s = sylow(g, p)
    f = fusion_from_group(g, s, p)
    items = [(i, j, m) for i, j, m in f.morphisms()]
    if not items:
        return
    i, j, m = items[rng.randrange(len(items))]
    x = rng.choice(sorted(f.S.elements))
    from fusionkit.perm import conjugate

    i2 = f.image_index(tuple(sorted(conjugate(x, e) for e in f.subgroups[i].elements)))
    mp = f.map_of(i, m)
    minv = {conjugate(x, e): conjugate(x, mp[e]) for e in f.subgroups[i].elements}
    m2 = tuple(minv[e] for e in f.sorted_els[i2])
    j2 = f.image_index(tuple(sorted(conjugate(x, e) for e in f.subgroups[j].elements)))
    assert m2 in f.homs(i2, j2)
