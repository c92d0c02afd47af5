"""Named stock groups, used by the corpus, the CLI and the tests."""

from __future__ import annotations

from .groups import PermGroup, direct_product
from .perm import parse_cycles


def _g(degree, *cycle_strings):
    return PermGroup(degree, [parse_cycles(s, degree) for s in cycle_strings])


def _sl23() -> PermGroup:
    """SL(2,3) acting on the 8 nonzero vectors of F_3^2.

    Vector (a,b) (a,b in {0,1,2}, not both 0) is point 3*a+b-1.
    """
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}

    def mat_perm(m):
        (p, q), (r, s) = m
        return tuple(
            idx[((p * a + q * b) % 3, (r * a + s * b) % 3)] for (a, b) in vecs
        )

    gens = [mat_perm(((1, 1), (0, 1))), mat_perm(((0, -1), (1, 0)))]
    return PermGroup(8, gens)


def _q8() -> PermGroup:
    """Q8 as the Sylow 2-subgroup of SL(2,3), so it sits inside that preset."""
    from .groups import sylow

    g = _sl23()
    s = sylow(g, 2)
    return PermGroup(g.degree, s.generator_witnesses(), elements=s.elements)


_BUILDERS = {
    "C2": lambda: _g(2, "(0 1)"),
    "C3": lambda: _g(3, "(0 1 2)"),
    "C4": lambda: _g(4, "(0 1 2 3)"),
    "V4": lambda: _g(4, "(0 1)(2 3)", "(0 2)(1 3)"),
    "D8": lambda: _g(4, "(0 1 2 3)", "(0 2)"),
    "Q8": _q8,
    "S3": lambda: _g(3, "(0 1 2)", "(0 1)"),
    "S4": lambda: _g(4, "(0 1 2 3)", "(0 1)"),
    "A4": lambda: _g(4, "(0 1 2)", "(0 1)(2 3)"),
    "A5": lambda: _g(5, "(0 1 2 3 4)", "(0 1 2)"),
    "A6": lambda: _g(6, "(1 2 3 4 5)", "(0 1 2)"),
    "SL23": _sl23,
    "S3xC2": lambda: direct_product(_g(3, "(0 1 2)", "(0 1)"), _g(2, "(0 1)")),
}

PRESET_NAMES = tuple(sorted(_BUILDERS))

_cache: dict[str, PermGroup] = {}


def preset(name: str) -> PermGroup:
    """Look up a stock group by name (S3, S4, A4, A5, A6, D8, Q8, SL23, C2, C3, C4, V4, S3xC2)."""
    key = name.strip()
    aliases = {"S3": "S3", "Σ3": "S3", "Σ4": "S4", "Σ3xC2": "S3xC2"}
    key = aliases.get(key, key)
    if key not in _BUILDERS:
        raise KeyError(f"unknown preset {name!r}; known: {', '.join(PRESET_NAMES)}")
    if key not in _cache:
        _cache[key] = _BUILDERS[key]()
    return _cache[key]
