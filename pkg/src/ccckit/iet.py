"""Interval exchange transformations of [0, oo) with exact rational data.

A map is a finite list of half-open intervals [a_(j-1), a_j) with rational
translations, fixing the infinite tail [a_k, oo) pointwise.  Construction
validates that the translated intervals partition [0, a_k) exactly, and the
normal form merges adjacent intervals with equal translation and absorbs
trailing identity intervals into the tail, so functional equality is normal
form equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import CcckitError, FamilyMismatchError, GroupFamily, Witness, Finite


class InvalidIetError(CcckitError):
    pass


@dataclass(frozen=True)
class IetMap:
    breakpoints: tuple[Fraction, ...]   # 0 = a_0 < a_1 < ... < a_k
    translations: tuple[Fraction, ...]  # one per finite interval

    def __post_init__(self):
        _validate(self.breakpoints, self.translations)

    @property
    def bound(self) -> Fraction:
        return self.breakpoints[-1]

    def __str__(self) -> str:
        return render_iet(self)


def _validate(breakpoints, translations) -> None:
    if not breakpoints or breakpoints[0] != 0:
        raise InvalidIetError("breakpoints must start at 0")
    if len(translations) != len(breakpoints) - 1:
        raise InvalidIetError("need one translation per finite interval")
    if any(b >= c for b, c in zip(breakpoints, breakpoints[1:])):
        raise InvalidIetError(f"breakpoints not strictly ascending: {breakpoints}")
    bound = breakpoints[-1]
    images = sorted(
        (a + t, b + t) for a, b, t in zip(breakpoints, breakpoints[1:], translations))
    cursor = Fraction(0)
    for lo, hi in images:
        if lo != cursor:
            raise InvalidIetError(
                f"translated intervals do not partition [0, {bound}): gap/overlap at {lo}")
        cursor = hi
    if cursor != bound:
        raise InvalidIetError(f"translated intervals cover up to {cursor}, expected {bound}")
    # trailing identity intervals must already be absorbed into the tail
    if translations and translations[-1] == 0:
        raise InvalidIetError("normal form absorbs trailing identity intervals into the tail")
    for t, u in zip(translations, translations[1:]):
        if t == u:
            raise InvalidIetError("normal form merges adjacent intervals with equal translation")


def make_iet(breakpoints, translations) -> IetMap:
    """Normalize raw interval data into an IetMap."""
    bps = [Fraction(b) for b in breakpoints]
    ts = [Fraction(t) for t in translations]
    if len(ts) != len(bps) - 1:
        raise InvalidIetError("need one translation per finite interval")
    # merge adjacent equal translations
    merged_bps = [bps[0]]
    merged_ts: list[Fraction] = []
    for b, t in zip(bps[1:], ts):
        if merged_ts and merged_ts[-1] == t:
            merged_bps[-1] = b
        else:
            merged_bps.append(b)
            merged_ts.append(t)
    # absorb trailing identity intervals
    while merged_ts and merged_ts[-1] == 0:
        merged_ts.pop()
        merged_bps.pop()
    if not merged_ts:
        return IetMap((Fraction(0),), ())
    return IetMap(tuple(merged_bps), tuple(merged_ts))


IDENTITY = IetMap((Fraction(0),), ())


def apply(f: IetMap, x) -> Fraction:
    x = Fraction(x)
    if x < 0:
        raise ValueError(f"point must be >= 0, got {x}")
    for a, b, t in zip(f.breakpoints, f.breakpoints[1:], f.translations):
        if a <= x < b:
            return x + t
    return x


def _translation_at(f: IetMap, x: Fraction) -> Fraction:
    for a, b, t in zip(f.breakpoints, f.breakpoints[1:], f.translations):
        if a <= x < b:
            return t
    return Fraction(0)


def inverse(f: IetMap) -> IetMap:
    pieces = sorted(
        (a + t, b + t, -t) for a, b, t in zip(f.breakpoints, f.breakpoints[1:], f.translations))
    bps = [Fraction(0)]
    ts = []
    for lo, hi, t in pieces:
        bps.append(hi)
        ts.append(t)
    return make_iet(bps, ts)


def compose(f: IetMap, g: IetMap) -> IetMap:
    """Pointwise f o g, exact; breakpoints of g refined by g-preimages of
    f's breakpoints."""
    ginv = inverse(g)
    cuts = set(g.breakpoints) | {apply(ginv, c) for c in f.breakpoints}
    cuts.add(Fraction(0))
    ordered = sorted(cuts)
    bps = list(ordered)
    ts = [_translation_at(g, x) + _translation_at(f, apply(g, x)) for x in ordered[:-1]]
    # behaviour beyond the last cut must be the identity
    tail = ordered[-1]
    if _translation_at(g, tail) + _translation_at(f, apply(g, tail)) != 0:
        raise InvalidIetError("composition does not fix a tail")  # unreachable for valid maps
    return make_iet(bps, ts)


def block_exchange(n) -> IetMap:
    """Exchange [0, n) with [n, 2n); an involution."""
    n = Fraction(n)
    if n <= 0:
        raise ValueError(f"block length must be > 0, got {n}")
    return make_iet([0, n, 2 * n], [n, -n])


def block_exchange_witness(n) -> Witness:
    return Witness(block_exchange(n), Finite(2))


def rotation(length, amount) -> IetMap:
    """Rotation of [0, length) by amount (mod length), identity beyond."""
    length, amount = Fraction(length), Fraction(amount) % Fraction(length)
    if amount == 0:
        return IDENTITY
    return make_iet([0, length - amount, length], [amount, amount - length])


def support_bound(f: IetMap) -> Fraction:
    """Least N with f = id on [N, oo); read off the normal form."""
    return f.bound


def interval_lengths(f: IetMap) -> list[Fraction]:
    return [b - a for a, b in zip(f.breakpoints, f.breakpoints[1:])]


def render_iet(f: IetMap) -> str:
    if not f.translations:
        return "id"
    parts = [f"[{a},{b}) -> +{t}" if t >= 0 else f"[{a},{b}) -> {t}"
             for a, b, t in zip(f.breakpoints, f.breakpoints[1:], f.translations)]
    return "; ".join(parts)


def to_json_obj(f: IetMap) -> dict:
    return {
        "breakpoints": [str(b) for b in f.breakpoints],
        "translations": [str(t) for t in f.translations],
    }


def from_json_obj(obj: dict) -> IetMap:
    return make_iet([Fraction(b) for b in obj["breakpoints"]],
                    [Fraction(t) for t in obj["translations"]])


class IetFamily(GroupFamily):
    name = "iet"

    def check_element(self, a):
        if not isinstance(a, IetMap):
            raise FamilyMismatchError(f"not an IetMap: {a!r}")

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
        return a == b

    def render(self, a):
        return render_iet(a)


IET = IetFamily()
