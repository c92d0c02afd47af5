"""Permutations of {0..n-1} as image tuples, plus cycle-notation parsing."""

from __future__ import annotations

from math import gcd

Perm = tuple


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def compose(a: Perm, b: Perm) -> Perm:
    """a after b: (a*b)(x) = a(b(x))."""
    return tuple(a[b[x]] for x in range(len(b)))


def inverse(a: Perm) -> Perm:
    inv = [0] * len(a)
    for i, j in enumerate(a):
        inv[j] = i
    return tuple(inv)


def conjugate(g: Perm, x: Perm) -> Perm:
    """g x g^{-1}."""
    return compose(g, compose(x, inverse(g)))


def order(a: Perm) -> int:
    n = 1
    for cyc in cycles(a):
        n = n * len(cyc) // gcd(n, len(cyc))
    return n


def is_perm(a, degree: int) -> bool:
    return len(a) == degree and sorted(a) == list(range(degree))


def cycles(a: Perm, include_fixed: bool = False):
    """Disjoint cycle decomposition, each cycle starting at its least point."""
    seen = [False] * len(a)
    out = []
    for start in range(len(a)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        j = a[start]
        while j != start:
            seen[j] = True
            cyc.append(j)
            j = a[j]
        if len(cyc) > 1 or include_fixed:
            out.append(tuple(cyc))
    return out


def cycle_str(a: Perm) -> str:
    cs = cycles(a)
    if not cs:
        return "()"
    return "".join("(" + " ".join(str(i) for i in c) + ")" for c in cs)


class PermParseError(ValueError):
    pass


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse cycle notation like ``(0 1 2)(3 4)``; points may be comma separated."""
    images = list(range(degree))
    text = text.strip()
    if text in ("()", "id", ""):
        return tuple(images)
    if text.count("(") != text.count(")"):
        raise PermParseError(f"unbalanced parentheses in {text!r}")
    depth = 0
    cyc: list[int] = []
    num = ""

    def flush_num():
        nonlocal num
        if num:
            cyc.append(int(num))
            num = ""

    for ch in text:
        if ch == "(":
            if depth:
                raise PermParseError(f"nested parenthesis in {text!r}")
            depth = 1
            cyc = []
        elif ch == ")":
            flush_num()
            depth = 0
            if len(set(cyc)) != len(cyc):
                raise PermParseError(f"repeated point in cycle {cyc}")
            for pt in cyc:
                if not 0 <= pt < degree:
                    raise PermParseError(f"point {pt} out of range for degree {degree}")
            for i, pt in enumerate(cyc):
                images[pt] = cyc[(i + 1) % len(cyc)]
        elif ch.isdigit():
            if not depth:
                raise PermParseError(f"digit outside cycle in {text!r}")
            num += ch
        elif ch in " ,":
            flush_num()
        else:
            raise PermParseError(f"unexpected character {ch!r} in {text!r}")
    if depth:
        raise PermParseError(f"unterminated cycle in {text!r}")
    out = tuple(images)
    if not is_perm(out, degree):
        raise PermParseError(f"cycles in {text!r} overlap; not a permutation")
    return out
