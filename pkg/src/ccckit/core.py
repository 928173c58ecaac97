"""Family-agnostic group algebra and the commutation verification engine.

Every concrete family (permutations, matrices, braids, IETs, PL maps,
wreath products) plugs into the same abstract contract; the engine only
ever calls identity/mul/inv/eq/render, so the verification batteries are
written once and reused everywhere.
"""

from __future__ import annotations

import abc
from dataclasses import dataclass, field
from typing import Any, Sequence


class CcckitError(Exception):
    pass


class FamilyMismatchError(CcckitError):
    """An element was handed to a family it does not belong to."""


class WitnessModeError(CcckitError):
    """Witness mode incompatible with the requested check."""


class GroupFamily(abc.ABC):
    """Abstract group contract: identity, multiplication, inverse, equality.

    Elements are immutable plain values; the family object holds the
    operations.  Equality must be decided on normal forms, never on
    renderings.
    """

    name: str = "group"

    @abc.abstractmethod
    def identity(self) -> Any: ...

    @abc.abstractmethod
    def mul(self, a: Any, b: Any) -> Any: ...

    @abc.abstractmethod
    def inv(self, a: Any) -> Any: ...

    @abc.abstractmethod
    def eq(self, a: Any, b: Any) -> bool: ...

    @abc.abstractmethod
    def render(self, a: Any) -> str: ...

    def check_element(self, a: Any) -> None:
        """Raise FamilyMismatchError if ``a`` does not belong here."""

    def power(self, a: Any, k: int) -> Any:
        self.check_element(a)
        if k < 0:
            return self.power(self.inv(a), -k)
        result = self.identity()
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def is_identity(self, a: Any) -> bool:
        return self.eq(a, self.identity())


def commutator(family: GroupFamily, a: Any, b: Any) -> Any:
    """[a, b] = a b a^-1 b^-1 (fixed convention)."""
    family.check_element(a)
    family.check_element(b)
    return family.mul(family.mul(a, b), family.mul(family.inv(a), family.inv(b)))


def conjugate(family: GroupFamily, t: Any, h: Any) -> Any:
    """^t h = t h t^-1."""
    family.check_element(t)
    family.check_element(h)
    return family.mul(family.mul(t, h), family.inv(t))


# ---------------------------------------------------------------------------
# Witnesses and generator sets


@dataclass(frozen=True)
class Finite:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise WitnessModeError(f"finite witness order must be >= 2, got {self.n}")


@dataclass(frozen=True)
class ZMode:
    bound: int = 8

    def __post_init__(self):
        if self.bound < 1:
            raise WitnessModeError(f"Z-mode bound must be >= 1, got {self.bound}")


@dataclass(frozen=True)
class Witness:
    """A pair (t, mode): the conjugating element together with either its
    finite commutation order n >= 2 or a bounded stand-in for n = infinity."""

    t: Any
    mode: Finite | ZMode


@dataclass(frozen=True)
class GeneratorSet:
    family: GroupFamily
    elements: tuple = ()

    def __len__(self) -> int:
        return len(self.elements)


# ---------------------------------------------------------------------------
# Reports


@dataclass(frozen=True)
class CheckRecord:
    name: str
    status: str  # "pass" | "fail"
    lhs: str
    rhs: str
    detail: str = ""


@dataclass
class VerificationReport:
    suite: str
    checks: list[CheckRecord] = field(default_factory=list)
    bounded: bool = False
    elapsed_ms: int = 0
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def record(self, name: str, ok: bool, lhs: str, rhs: str, detail: str = "") -> None:
        self.checks.append(CheckRecord(name, "pass" if ok else "fail", lhs, rhs, detail))
        if not ok and self.counterexample is None:
            self.counterexample = f"{name}: {lhs} != {rhs}"

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)
        self.bounded = self.bounded or other.bounded
        if self.counterexample is None:
            self.counterexample = other.counterexample

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [
                {"name": c.name, "status": c.status, "lhs": c.lhs, "rhs": c.rhs, "detail": c.detail}
                for c in self.checks
            ],
            "bounded": self.bounded,
            "counterexample": self.counterexample,
        }


# ---------------------------------------------------------------------------
# Verification engine


def _check_identity(family: GroupFamily, report: VerificationReport, name: str,
                    value: Any, detail: str = "") -> None:
    report.record(name, family.is_identity(value), family.render(value), "e", detail)


def verify_ccc(H: GeneratorSet, w: Witness, suite: str = "ccc") -> VerificationReport:
    """Check the finite-order commutation battery on generators.

    For t of order mode n:  [h_i, ^(t^p) h_j] = e for 1 <= p < n (and the
    redundant negative powers -p, asserted as a consistency check), and
    [h_i, t^n] = e.  Passing on generators is equivalent to the
    subgroup-level statement.
    """
    if not isinstance(w.mode, Finite):
        raise WitnessModeError("verify_ccc requires a Finite(n) witness")
    fam = H.family
    fam.check_element(w.t)
    for h in H.elements:
        fam.check_element(h)
    n = w.mode.n
    report = VerificationReport(suite)
    powers = [p for p in range(1, n)] + [-p for p in range(1, n)]
    tp_cache = {p: fam.power(w.t, p) for p in powers + [n]}
    for p in powers:
        tp = tp_cache[p]
        for i, hi in enumerate(H.elements):
            for j, hj in enumerate(H.elements):
                c = commutator(fam, hi, conjugate(fam, tp, hj))
                _check_identity(fam, report, f"[h{i + 1}, ^(t^{p}) h{j + 1}]", c)
    tn = tp_cache[n]
    for i, hi in enumerate(H.elements):
        _check_identity(fam, report, f"[h{i + 1}, t^{n}]", commutator(fam, hi, tn))
    return report


def verify_czc(H: GeneratorSet, w: Witness, suite: str = "czc") -> VerificationReport:
    """Bounded check of the n = infinity battery: [h_i, ^(t^p) h_j] = e for
    1 <= |p| <= P.  This is a bounded check of a universally quantified
    condition, and the report says so.
    """
    if not isinstance(w.mode, ZMode):
        raise WitnessModeError("verify_czc requires a ZMode witness")
    fam = H.family
    fam.check_element(w.t)
    for h in H.elements:
        fam.check_element(h)
    P = w.mode.bound
    report = VerificationReport(suite, bounded=True)
    for p in [q for q in range(1, P + 1)] + [-q for q in range(1, P + 1)]:
        tp = fam.power(w.t, p)
        for i, hi in enumerate(H.elements):
            for j, hj in enumerate(H.elements):
                c = commutator(fam, hi, conjugate(fam, tp, hj))
                _check_identity(fam, report, f"[h{i + 1}, ^(t^{p}) h{j + 1}]", c,
                                detail=f"bounded check, |p| <= {P}")
    return report


def derived_witness(family: GroupFamily, t: Any, s: Any) -> Any:
    """c = [t, s]; when s displaces K = <H, t>, conjugation by c^p agrees with
    conjugation by t^p on K, which downstream tests exercise."""
    return commutator(family, t, s)


def bounded_products(family: GroupFamily, gens: Sequence, max_len: int) -> list:
    """All products of the generators and their inverses of word length at
    most max_len, deduplicated by family equality.  Brute-force oracle
    material; keep the inputs small."""
    alphabet = list(gens) + [family.inv(g) for g in gens]
    seen = [family.identity()]
    frontier = [family.identity()]
    for _ in range(max_len):
        new_frontier = []
        for u in frontier:
            for g in alphabet:
                v = family.mul(u, g)
                if not any(family.eq(v, w) for w in seen):
                    seen.append(v)
                    new_frontier.append(v)
        frontier = new_frontier
    return seen


# ---------------------------------------------------------------------------
# Direct products


class ProductFamily(GroupFamily):
    """Finite direct product; elements are tuples, operations componentwise."""

    def __init__(self, factors: Sequence[GroupFamily]):
        if not factors:
            raise ValueError("product of zero families")
        self.factors = tuple(factors)
        self.name = "x".join(f.name for f in self.factors)

    def check_element(self, a):
        if not isinstance(a, tuple) or len(a) != len(self.factors):
            raise FamilyMismatchError(f"expected {len(self.factors)}-tuple, got {a!r}")
        for fam, x in zip(self.factors, a):
            fam.check_element(x)

    def identity(self):
        return tuple(f.identity() for f in self.factors)

    def mul(self, a, b):
        return tuple(f.mul(x, y) for f, x, y in zip(self.factors, a, b))

    def inv(self, a):
        return tuple(f.inv(x) for f, x in zip(self.factors, a))

    def eq(self, a, b):
        return all(f.eq(x, y) for f, x, y in zip(self.factors, a, b))

    def render(self, a):
        return "(" + ", ".join(f.render(x) for f, x in zip(self.factors, a)) + ")"


def combine_product_witnesses(
    pairs: Sequence[tuple[GeneratorSet, Witness]],
) -> tuple[GeneratorSet, Witness]:
    """Tuple together per-factor Z-mode witnesses: t = (t_i) works for the
    product of the subgroups.  All bounds must agree."""
    if not pairs:
        raise ValueError("need at least one (generators, witness) pair")
    bounds = set()
    for _, w in pairs:
        if not isinstance(w.mode, ZMode):
            raise WitnessModeError("product combination requires Z-mode witnesses")
        bounds.add(w.mode.bound)
    if len(bounds) != 1:
        raise WitnessModeError(f"mismatched Z-mode bounds: {sorted(bounds)}")
    families = [H.family for H, _ in pairs]
    product = ProductFamily(families)
    gens = []
    for idx, (H, _) in enumerate(pairs):
        for h in H.elements:
            tup = [f.identity() for f in families]
            tup[idx] = h
            gens.append(tuple(tup))
    t = tuple(w.t for _, w in pairs)
    return GeneratorSet(product, tuple(gens)), Witness(t, ZMode(bounds.pop()))
