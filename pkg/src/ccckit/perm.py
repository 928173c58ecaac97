"""Finitely supported permutations of the positive integers.

Normal form stores no fixed points, so two equal permutations always have
identical support maps.  Composition is right-to-left function application:
(a * b)(x) = a(b(x)).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import FamilyMismatchError, GroupFamily, Witness, Finite


@dataclass(frozen=True)
class FinPerm:
    # sorted tuple of (point, image) pairs, fixed points omitted
    mapping: tuple[tuple[int, int], ...]

    def __call__(self, x: int) -> int:
        for p, q in self.mapping:
            if p == x:
                return q
        return x

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.mapping)

    def __str__(self) -> str:
        return render_cycles(self)


def perm_from_mapping(mapping: dict[int, int]) -> FinPerm:
    items = {p: q for p, q in mapping.items() if p != q}
    if any(p < 1 for p in items) or any(q < 1 for q in items.values()):
        raise ValueError("points must be positive integers")
    if set(items) != set(items.values()):
        raise ValueError(f"not a bijection of its support: {items}")
    return FinPerm(tuple(sorted(items.items())))


def perm_from_cycles(cycles: list[list[int]]) -> FinPerm:
    mapping: dict[int, int] = {}
    for cyc in cycles:
        if len(set(cyc)) != len(cyc):
            raise ValueError(f"repeated point in cycle {cyc}")
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if a in mapping:
                raise ValueError(f"point {a} in two cycles")
            mapping[a] = b
    return perm_from_mapping(mapping)


IDENTITY = FinPerm(())


def compose(a: FinPerm, b: FinPerm) -> FinPerm:
    """(a o b)(x) = a(b(x))."""
    points = set(a.support) | set(b.support)
    return perm_from_mapping({x: a(b(x)) for x in points})


def inverse(a: FinPerm) -> FinPerm:
    return FinPerm(tuple(sorted((q, p) for p, q in a.mapping)))


def cycles(a: FinPerm) -> list[list[int]]:
    """Cycle decomposition, each cycle rotated to start at its least point,
    cycles sorted by least point."""
    seen: set[int] = set()
    out: list[list[int]] = []
    for start in a.support:
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = a(start)
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = a(x)
        out.append(cyc)
    return out


def parity(a: FinPerm) -> str:
    """'even' or 'odd', via the cycle decomposition."""
    transpositions = sum(len(c) - 1 for c in cycles(a))
    return "even" if transpositions % 2 == 0 else "odd"


def sign(a: FinPerm) -> int:
    return 1 if parity(a) == "even" else -1


def block_swap(n: int) -> FinPerm:
    """The involution (1, n+1)(2, n+2)...(n, 2n)."""
    if n < 1:
        raise ValueError(f"block size must be >= 1, got {n}")
    mapping = {}
    for i in range(1, n + 1):
        mapping[i] = i + n
        mapping[i + n] = i
    return perm_from_mapping(mapping)


def block_swap_witness(n: int) -> Witness:
    return Witness(block_swap(n), Finite(2))


def render_cycles(a: FinPerm) -> str:
    cs = cycles(a)
    if not cs:
        return "()"
    return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cs)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> FinPerm:
    text = text.strip()
    if text in ("()", "", "id"):
        return IDENTITY
    body = _CYCLE_RE.findall(text)
    if not body or _CYCLE_RE.sub("", text).strip():
        raise ValueError(f"bad cycle notation: {text!r}")
    return perm_from_cycles([[int(x) for x in re.split(r"[,\s]+", c.strip())] for c in body])


class PermFamily(GroupFamily):
    name = "perm"

    def check_element(self, a):
        if not isinstance(a, FinPerm):
            raise FamilyMismatchError(f"not a FinPerm: {a!r}")

    def identity(self):
        return IDENTITY

    def mul(self, a, b):
        self.check_element(a)
        self.check_element(b)
        return compose(a, b)

    def inv(self, a):
        self.check_element(a)
        return inverse(a)

    def eq(self, a, b):
        self.check_element(a)
        self.check_element(b)
        return a.mapping == b.mapping

    def render(self, a):
        return render_cycles(a)


PERM = PermFamily()
