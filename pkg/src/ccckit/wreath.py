"""Permutational wreath products with finitely supported base maps, the
iterated tower of acting groups, its distinguished subgroup, and the
homomorphism machinery that turns a chain of commutation witnesses into a
map from the tower into the target family.

Conventions: (f, a)(g, b) = (x -> f(x) * g(a^-1 x), ab); the evaluation
product over base coordinates is taken in ascending point order, which is
sound because the factors commute whenever the chain invariants hold.
"""

from __future__ import annotations

import abc
import random
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .core import (CcckitError, FamilyMismatchError, GeneratorSet, GroupFamily,
                   VerificationReport, commutator, conjugate)


class ChainInvariantError(CcckitError):
    pass


# ---------------------------------------------------------------------------
# The acting group Z and action spaces


class IntAdditiveFamily(GroupFamily):
    """Z under addition."""

    name = "Z"

    def check_element(self, a):
        if not isinstance(a, int):
            raise FamilyMismatchError(f"not an integer: {a!r}")

    def identity(self):
        return 0

    def mul(self, a, b):
        self.check_element(a)
        self.check_element(b)
        return a + b

    def inv(self, a):
        self.check_element(a)
        return -a

    def eq(self, a, b):
        return a == b

    def render(self, a):
        return str(a)


INT_Z = IntAdditiveFamily()


class ActionSpace(abc.ABC):
    """An A-set: the acting family plus the action on points."""

    top: GroupFamily

    @abc.abstractmethod
    def act(self, a: Any, x: Any) -> Any: ...

    @abc.abstractmethod
    def point_eq(self, x: Any, y: Any) -> bool: ...

    @abc.abstractmethod
    def point_key(self, x: Any) -> Any:
        """Deterministic sort key; must agree on action-equal points only
        when they are equal points."""

    def render_point(self, x: Any) -> str:
        return str(x)


class ZModAction(ActionSpace):
    """Z acting on Z/n by left translation."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"need n >= 1, got {n}")
        self.n = n
        self.top = INT_Z

    def act(self, a, x):
        return (x + a) % self.n

    def point_eq(self, x, y):
        return x % self.n == y % self.n

    def point_key(self, x):
        return x % self.n


class RegularZAction(ActionSpace):
    """Z acting on itself by translation."""

    top = INT_Z

    def act(self, a, x):
        return x + a

    def point_eq(self, x, y):
        return x == y

    def point_key(self, x):
        return x


class CosetAction(ActionSpace):
    """A acting on A/B by left translation; points are stored
    representatives, compared through the membership predicate for B."""

    def __init__(self, a_family: GroupFamily, in_B: Callable[[Any], bool]):
        self.top = a_family
        self.in_B = in_B

    def act(self, a, x):
        return self.top.mul(a, x)

    def point_eq(self, x, y):
        return self.in_B(self.top.mul(self.top.inv(x), y))

    def point_key(self, x):
        return self.top.render(x)

    def render_point(self, x):
        return self.top.render(x) + "B"


# ---------------------------------------------------------------------------
# Wreath elements


@dataclass(frozen=True)
class WreathElement:
    base: tuple[tuple[Any, Any], ...]  # (point, base-group element), sorted
    top: Any


class WreathFamily(GroupFamily):
    """Gamma wr_X A with finitely supported base maps."""

    def __init__(self, base_family: GroupFamily, action: ActionSpace):
        self.base_family = base_family
        self.action = action
        self.name = f"({base_family.name})wr({action.top.name})"

    def check_element(self, a):
        if not isinstance(a, WreathElement):
            raise FamilyMismatchError(f"not a WreathElement: {a!r}")
        self.action.top.check_element(a.top)
        for _, g in a.base:
            self.base_family.check_element(g)

    def normalize(self, pairs: Sequence[tuple[Any, Any]], top: Any) -> WreathElement:
        merged: list[tuple[Any, Any]] = []
        for x, g in pairs:
            for i, (y, h) in enumerate(merged):
                if self.action.point_eq(x, y):
                    merged[i] = (y, self.base_family.mul(h, g))
                    break
            else:
                merged.append((x, g))
        cleaned = [(x, g) for x, g in merged if not self.base_family.is_identity(g)]
        cleaned.sort(key=lambda item: self.action.point_key(item[0]))
        return WreathElement(tuple(cleaned), top)

    def element(self, pairs, top=None) -> WreathElement:
        return self.normalize(tuple(pairs), top if top is not None else self.action.top.identity())

    def value_at(self, u: WreathElement, x) -> Any:
        for y, g in u.base:
            if self.action.point_eq(x, y):
                return g
        return self.base_family.identity()

    def identity(self):
        return WreathElement((), self.action.top.identity())

    def mul(self, u, v):
        self.check_element(u)
        self.check_element(v)
        pairs = list(u.base) + [(self.action.act(u.top, x), g) for x, g in v.base]
        return self.normalize(pairs, self.action.top.mul(u.top, v.top))

    def inv(self, u):
        self.check_element(u)
        a_inv = self.action.top.inv(u.top)
        pairs = [(self.action.act(a_inv, x), self.base_family.inv(g)) for x, g in u.base]
        return self.normalize(pairs, a_inv)

    def eq(self, u, v):
        self.check_element(u)
        self.check_element(v)
        if not self.action.top.eq(u.top, v.top):
            return False
        if len(u.base) != len(v.base):
            return False
        for x, g in u.base:
            if not self.base_family.eq(g, self.value_at(v, x)):
                return False
        return True

    def render(self, u):
        body = ", ".join(
            f"{self.action.render_point(x)}: {self.base_family.render(g)}" for x, g in u.base)
        return "{" + body + " | " + self.action.top.render(u.top) + "}"


# ---------------------------------------------------------------------------
# The tower A_1 = Z, A_(i+1) = A_i wr_(Z/n_(i+1)) Z


@dataclass(frozen=True)
class TowerSpec:
    branching: tuple[int, ...]  # (n_2, ..., n_k)

    def __post_init__(self):
        if any(n < 2 for n in self.branching):
            raise ValueError(f"all branching orders must be >= 2: {self.branching}")

    @property
    def depth(self) -> int:
        return len(self.branching) + 1


def tower_family(tower: TowerSpec, level: int) -> GroupFamily:
    if not 1 <= level <= tower.depth:
        raise ValueError(f"level {level} outside 1..{tower.depth}")
    fam: GroupFamily = INT_Z
    for n in tower.branching[: level - 1]:
        fam = WreathFamily(fam, ZModAction(n))
    return fam


def tower_generators(tower: TowerSpec, level: int) -> list:
    """Canonical generators: the shift at each level, lower generators
    embedded at coordinate 0."""
    if level == 1:
        return [1]
    fam = tower_family(tower, level)
    assert isinstance(fam, WreathFamily)
    lower = tower_generators(tower, level - 1)
    gens = [fam.element([(0, g)]) for g in lower]
    gens.append(fam.element([], top=1))
    return gens


def membership_B(tower: TowerSpec, n1: int, u, level: int | None = None) -> bool:
    """The distinguished subgroup: multiples of n1 at the bottom, and at
    level i+1 the elements with coordinate-0 entry in the lower subgroup and
    top a multiple of the branching order."""
    if n1 < 2:
        raise ValueError(f"base order must be >= 2, got {n1}")
    if level is None:
        level = tower.depth
    if level == 1:
        INT_Z.check_element(u)
        return u % n1 == 0
    fam = tower_family(tower, level)
    assert isinstance(fam, WreathFamily)
    fam.check_element(u)
    n = tower.branching[level - 2]
    if u.top % n != 0:
        return False
    return membership_B(tower, n1, fam.value_at(u, 0), level - 1)


# ---------------------------------------------------------------------------
# Witness chains and the homomorphism into the target family


@dataclass(frozen=True)
class WitnessChain:
    """t_1..t_k with orders n_1..n_k over a target family, plus the nested
    generator data: Lambda_0 = H, Lambda_i = <Lambda_(i-1), t_i>."""

    family: GroupFamily
    generators: tuple          # generators of H
    ts: tuple                  # t_1, ..., t_k
    orders: tuple[int, ...]    # n_1, ..., n_k

    def __post_init__(self):
        if len(self.ts) != len(self.orders) or not self.ts:
            raise ValueError("need one order per witness element")
        if any(n < 2 for n in self.orders):
            raise ValueError(f"all orders must be >= 2: {self.orders}")

    def level_generators(self, i: int) -> tuple:
        """Generators of Lambda_i."""
        return tuple(self.generators) + tuple(self.ts[:i])


def validate_chain(chain: WitnessChain) -> VerificationReport:
    """Machine-check the per-level commutation invariants."""
    fam = chain.family
    report = VerificationReport("witness-chain")
    for i, (t, n) in enumerate(zip(chain.ts, chain.orders), start=1):
        gens = chain.level_generators(i - 1)
        for p in range(1, n):
            tp = fam.power(t, p)
            for a, g in enumerate(gens):
                for b, g2 in enumerate(gens):
                    c = commutator(fam, g, conjugate(fam, tp, g2))
                    report.record(f"level {i}: [g{a + 1}, ^(t{i}^{p}) g{b + 1}]",
                                  fam.is_identity(c), fam.render(c), "e")
        tn = fam.power(t, n)
        for a, g in enumerate(gens):
            c = commutator(fam, g, tn)
            report.record(f"level {i}: [g{a + 1}, t{i}^{n}]",
                          fam.is_identity(c), fam.render(c), "e")
    return report


class TowerHom:
    """Evaluator for the inductively defined homomorphism from the tower
    into the target family: the bottom level sends m to t_1^m, and each
    higher level conjugates the lower images through ascending powers of the
    next witness before appending the shift image."""

    def __init__(self, tower: TowerSpec, chain: WitnessChain):
        if tower.branching != tuple(chain.orders[1:]):
            raise ChainInvariantError(
                f"chain orders {chain.orders} do not match tower branching {tower.branching}")
        check = validate_chain(chain)
        if not check.passed:
            raise ChainInvariantError(f"chain invariants fail: {check.counterexample}")
        self.tower = tower
        self.chain = chain
        self.family = chain.family

    def eval(self, u, level: int | None = None):
        if level is None:
            level = self.tower.depth
        fam = self.family
        if level == 1:
            return fam.power(self.chain.ts[0], u)
        t = self.chain.ts[level - 1]
        n = self.chain.orders[level - 1]
        level_fam = tower_family(self.tower, level)
        assert isinstance(level_fam, WreathFamily)
        level_fam.check_element(u)
        result = fam.identity()
        for p in range(n):  # ascending p; factors commute by the chain invariants
            a_p = level_fam.value_at(u, p)
            result = fam.mul(result, conjugate(fam, fam.power(t, p), self.eval(a_p, level - 1)))
        return fam.mul(result, fam.power(t, u.top))

    def __call__(self, u):
        return self.eval(u)

    def in_B(self, u, level: int | None = None) -> bool:
        return membership_B(self.tower, self.chain.orders[0], u, level)


def build_f(tower: TowerSpec, chain: WitnessChain) -> TowerHom:
    return TowerHom(tower, chain)


# ---------------------------------------------------------------------------
# Sampling and the homomorphism property checks


def _random_word(fam: GroupFamily, gens: Sequence, rng: random.Random, max_len: int = 8):
    u = fam.identity()
    for _ in range(rng.randint(0, max_len)):
        g = rng.choice(gens)
        if rng.random() < 0.5:
            g = fam.inv(g)
        u = fam.mul(u, g)
    return u


def sample_tower_elements(tower: TowerSpec, count: int, rng: random.Random,
                          max_len: int = 8) -> list:
    fam = tower_family(tower, tower.depth)
    gens = tower_generators(tower, tower.depth)
    return [_random_word(fam, gens, rng, max_len) for _ in range(count)]


def _sample_B_element(tower: TowerSpec, n1: int, rng: random.Random, level: int):
    if level == 1:
        return n1 * rng.randint(-3, 3)
    fam = tower_family(tower, level)
    assert isinstance(fam, WreathFamily)
    n = tower.branching[level - 2]
    pairs = [(0, _sample_B_element(tower, n1, rng, level - 1))]
    for p in range(1, n):
        if rng.random() < 0.7:
            pairs.append((p, _sample_level_element(tower, n1, rng, level - 1)))
    return fam.element(pairs, top=n * rng.randint(-2, 2))


def _sample_level_element(tower: TowerSpec, n1: int, rng: random.Random, level: int):
    if level == 1:
        return rng.randint(-4, 4)
    fam = tower_family(tower, level)
    assert isinstance(fam, WreathFamily)
    n = tower.branching[level - 2]
    pairs = [(p, _sample_level_element(tower, n1, rng, level - 1))
             for p in range(n) if rng.random() < 0.7]
    return fam.element(pairs, top=rng.randint(-3, 3))


def check_hom(f: TowerHom, H: GeneratorSet, sample_size: int = 50,
              seed: int = 0) -> VerificationReport:
    """Seeded checks of (a) the homomorphism law, (b) commutation of H with
    images of non-members of the distinguished subgroup, and (c) commutation
    of H with images of members."""
    rng = random.Random(seed)
    fam = f.family
    tower = f.tower
    a_fam = tower_family(tower, tower.depth)
    report = VerificationReport("tower-hom", bounded=True)

    for k in range(sample_size):
        u, v = sample_tower_elements(tower, 2, rng)
        lhs = f(a_fam.mul(u, v))
        rhs = fam.mul(f(u), f(v))
        report.record(f"f(uv) = f(u)f(v) [{k}]", fam.eq(lhs, rhs),
                      fam.render(lhs), fam.render(rhs))

    found = 0
    attempts = 0
    while found < sample_size and attempts < 100 * sample_size:
        attempts += 1
        (a,) = sample_tower_elements(tower, 1, rng)
        if f.in_B(a):
            continue
        fa = f(a)
        ok = all(
            fam.is_identity(commutator(fam, h, conjugate(fam, fa, h2)))
            for h in H.elements for h2 in H.elements)
        report.record(f"(i) [H, ^f(a) H] = 1, a outside B [{found}]", ok,
                      "all generator commutators", "e",
                      detail=f"a = {a_fam.render(a)}")
        found += 1
    if found < sample_size:
        report.record("(i) enough non-member samples", False,
                      str(found), str(sample_size))

    for k in range(sample_size):
        b = _sample_B_element(tower, f.chain.orders[0], rng, tower.depth)
        fb = f(b)
        ok = all(fam.is_identity(commutator(fam, h, fb)) for h in H.elements)
        report.record(f"(ii) [H, f(b)] = 1, b in B [{k}]", ok,
                      "all generator commutators", "e",
                      detail=f"b = {a_fam.render(b)}")
    return report


# ---------------------------------------------------------------------------
# Extension to H wr_(A/B) A


class ExtendedHom:
    """Evaluator for the extension of f to the wreath product of H over the
    coset space: base entries are conjugated through f at their
    representative, in ascending coset order, then multiplied by the image
    of the top element.  Commutation of f(B) with H makes the value
    independent of the chosen representatives."""

    def __init__(self, H: GeneratorSet, f: Callable, a_family: GroupFamily,
                 in_B: Callable[[Any], bool], transversal: Sequence):
        self.H = H
        self.f = f
        self.a_family = a_family
        self.in_B = in_B
        self.action = CosetAction(a_family, in_B)
        self.wreath = WreathFamily(H.family, self.action)
        self.transversal = tuple(transversal)
        for i, x in enumerate(self.transversal):
            for y in self.transversal[:i]:
                if self.action.point_eq(x, y):
                    raise ValueError("transversal contains repeated cosets")

    def eval(self, u: WreathElement):
        fam = self.H.family
        self.wreath.check_element(u)
        result = fam.identity()
        for rep, h in u.base:
            result = fam.mul(result, conjugate(fam, self.f(rep), h))
        return fam.mul(result, self.f(u.top))

    def __call__(self, u):
        return self.eval(u)

    def factor_element(self, h, rep=None) -> WreathElement:
        """h placed at a single coset (default: the identity coset 1B)."""
        if rep is None:
            rep = self.a_family.identity()
        return self.wreath.element([(rep, h)])


def extend_to_wreath_hom(H: GeneratorSet, f: Callable, a_family: GroupFamily,
                         in_B: Callable[[Any], bool],
                         transversal: Sequence) -> ExtendedHom:
    return ExtendedHom(H, f, a_family, in_B, transversal)


def kernel_base_commutes(ext: ExtendedHom, sample_size: int = 50,
                         seed: int = 0) -> VerificationReport:
    """Search seeded base-only elements mapping to the identity and check
    that every found pair commutes in the wreath product.  Zero hits is a
    vacuous (and labeled) pass."""
    rng = random.Random(seed)
    fam = ext.H.family
    report = VerificationReport("kernel-base")
    kernel: list[WreathElement] = []
    for _ in range(sample_size):
        pairs = []
        for rep in ext.transversal:
            if rng.random() < 0.8:
                pairs.append((rep, _random_word(fam, list(ext.H.elements) or [fam.identity()],
                                                rng, max_len=3)))
        u = ext.wreath.element(pairs)
        if fam.is_identity(ext(u)):
            kernel.append(u)
    for i, g in enumerate(kernel):
        for j, h in enumerate(kernel[:i]):
            c = commutator(ext.wreath, g, h)
            report.record(f"kernel pair ({j}, {i}) commutes",
                          ext.wreath.is_identity(c), ext.wreath.render(c), "e")
    report.record("kernel samples found", True, str(len(kernel)), ">= 0",
                  detail="vacuous: no kernel pairs sampled" if len(kernel) < 2 else
                  f"{len(kernel)} base-only kernel elements")
    return report


# ---------------------------------------------------------------------------
# The equation-system witness in Gamma wr_(Z/2) Z


def closure_system_witness(H: GeneratorSet) -> VerificationReport:
    """Embed the generators in the 0-coordinate of Gamma wr_(Z/2) Z and
    verify the system [g_i, ^x g_j] = e, [g_i, x^2] = e with x the top
    shift, exactly."""
    fam = H.family
    w = WreathFamily(fam, ZModAction(2))
    x = w.element([], top=1)
    x2 = w.mul(x, x)
    embedded = [w.element([(0, g)]) for g in H.elements]
    report = VerificationReport("closure-system")
    for i, gi in enumerate(embedded):
        for j, gj in enumerate(embedded):
            c = commutator(w, gi, conjugate(w, x, gj))
            report.record(f"[g{i + 1}, ^x g{j + 1}]", w.is_identity(c), w.render(c), "e")
        c2 = commutator(w, gi, x2)
        report.record(f"[g{i + 1}, x^2]", w.is_identity(c2), w.render(c2), "e")
    return report
