"""Reduced words in a free group and composable automorphisms.

Words are stored as tuples of nonzero signed generator indices (+i for
x_i, -i for its inverse), always freely reduced.  Automorphisms carry
explicit inverses and are built only from an invertible repertoire, so no
general invertibility test is needed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import FamilyMismatchError, GroupFamily, Witness, Finite


def reduce_letters(letters) -> tuple[int, ...]:
    """Free reduction; confluent, so any cancellation order gives this."""
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


@dataclass(frozen=True)
class FreeWord:
    rank: int
    letters: tuple[int, ...]

    def __post_init__(self):
        for x in self.letters:
            if x == 0 or abs(x) > self.rank:
                raise ValueError(f"letter {x} out of range for rank {self.rank}")
        if self.letters != reduce_letters(self.letters):
            raise ValueError(f"word not freely reduced: {self.letters}")

    def __str__(self) -> str:
        return render_word(self)


def word(rank: int, letters) -> FreeWord:
    return FreeWord(rank, reduce_letters(letters))


def word_mul(u: FreeWord, v: FreeWord) -> FreeWord:
    if u.rank != v.rank:
        raise FamilyMismatchError(f"rank mismatch: {u.rank} vs {v.rank}")
    return word(u.rank, u.letters + v.letters)


def word_inv(u: FreeWord) -> FreeWord:
    return FreeWord(u.rank, tuple(-x for x in reversed(u.letters)))


def render_word(u: FreeWord) -> str:
    """Lowercase for generators, uppercase for inverses: "x1 X2"."""
    if not u.letters:
        return "1"
    return " ".join((f"x{x}" if x > 0 else f"X{-x}") for x in u.letters)


_LETTER_RE = re.compile(r"^([xX])(\d+)$|^(-?\d+)$")


def parse_word(rank: int, text: str) -> FreeWord:
    """Accepts "x1 X2" or signed-integer form "1 -2"."""
    text = text.strip()
    if text in ("", "1", "e"):
        return word(rank, ())
    letters = []
    for tok in text.split():
        m = _LETTER_RE.match(tok)
        if not m:
            raise ValueError(f"bad word token {tok!r}")
        if m.group(3) is not None:
            letters.append(int(m.group(3)))
        else:
            i = int(m.group(2))
            letters.append(i if m.group(1) == "x" else -i)
    return word(rank, letters)


# ---------------------------------------------------------------------------
# Automorphisms


@dataclass(frozen=True)
class FreeAutomorphism:
    rank: int
    images: tuple[FreeWord, ...]
    inverse_images: tuple[FreeWord, ...]

    def __post_init__(self):
        if len(self.images) != self.rank or len(self.inverse_images) != self.rank:
            raise ValueError("need one image per generator")
        for comp in (
            [_substitute_images(self.images, w) for w in self.inverse_images],
            [_substitute_images(self.inverse_images, w) for w in self.images],
        ):
            for i, w in enumerate(comp, start=1):
                if w.letters != (i,):
                    raise ValueError(f"images and inverse images do not invert: x{i} -> {w}")


def _substitute_images(images: tuple[FreeWord, ...], w: FreeWord) -> FreeWord:
    out: list[int] = []
    for x in w.letters:
        img = images[abs(x) - 1]
        out.extend(img.letters if x > 0 else word_inv(img).letters)
    return word(w.rank, out)


def substitute(phi: FreeAutomorphism, w: FreeWord) -> FreeWord:
    if phi.rank != w.rank:
        raise FamilyMismatchError(f"rank mismatch: {phi.rank} vs {w.rank}")
    return _substitute_images(phi.images, w)


def aut_compose(phi: FreeAutomorphism, psi: FreeAutomorphism) -> FreeAutomorphism:
    """(phi o psi)(x_i) = phi(psi(x_i))."""
    if phi.rank != psi.rank:
        raise FamilyMismatchError(f"rank mismatch: {phi.rank} vs {psi.rank}")
    images = tuple(substitute(phi, w) for w in psi.images)
    inverse_images = tuple(_substitute_images(psi.inverse_images, w) for w in phi.inverse_images)
    return FreeAutomorphism(phi.rank, images, inverse_images)


def aut_inverse(phi: FreeAutomorphism) -> FreeAutomorphism:
    return FreeAutomorphism(phi.rank, phi.inverse_images, phi.images)


def identity_aut(rank: int) -> FreeAutomorphism:
    gens = tuple(word(rank, (i,)) for i in range(1, rank + 1))
    return FreeAutomorphism(rank, gens, gens)


def from_images(rank: int, images, inverse_images) -> FreeAutomorphism:
    return FreeAutomorphism(rank, tuple(images), tuple(inverse_images))


def nielsen_aut(rank: int, i: int, j: int) -> FreeAutomorphism:
    """x_i -> x_i x_j, other generators fixed (i != j)."""
    if i == j:
        raise ValueError("Nielsen move needs distinct indices")
    images = [word(rank, (k,)) for k in range(1, rank + 1)]
    inverse_images = list(images)
    images[i - 1] = word(rank, (i, j))
    inverse_images[i - 1] = word(rank, (i, -j))
    return FreeAutomorphism(rank, tuple(images), tuple(inverse_images))


def inversion_aut(rank: int, i: int) -> FreeAutomorphism:
    """x_i -> x_i^-1, an involution."""
    images = [word(rank, (k,)) for k in range(1, rank + 1)]
    images[i - 1] = word(rank, (-i,))
    images = tuple(images)
    return FreeAutomorphism(rank, images, images)


def permutation_aut(rank: int, perm: dict[int, int]) -> FreeAutomorphism:
    """x_i -> x_perm(i); perm given as a mapping, unmentioned indices fixed."""
    full = {i: perm.get(i, i) for i in range(1, rank + 1)}
    if sorted(full.values()) != list(range(1, rank + 1)):
        raise ValueError(f"not a permutation of 1..{rank}: {perm}")
    inv = {v: k for k, v in full.items()}
    images = tuple(word(rank, (full[i],)) for i in range(1, rank + 1))
    inverse_images = tuple(word(rank, (inv[i],)) for i in range(1, rank + 1))
    return FreeAutomorphism(rank, images, inverse_images)


def extend_rank(phi: FreeAutomorphism, rank: int) -> FreeAutomorphism:
    """Extend by the identity on the new generators (stable extension)."""
    if rank < phi.rank:
        raise ValueError("cannot shrink rank")
    lift = lambda w: word(rank, w.letters)
    images = tuple(lift(w) for w in phi.images) + tuple(
        word(rank, (i,)) for i in range(phi.rank + 1, rank + 1))
    inverse_images = tuple(lift(w) for w in phi.inverse_images) + tuple(
        word(rank, (i,)) for i in range(phi.rank + 1, rank + 1))
    return FreeAutomorphism(rank, images, inverse_images)


def block_swap_aut(n: int) -> FreeAutomorphism:
    """The involution of F_2n with x_i <-> x_(i+n); conjugation by it moves
    anything supported on the first block to the second block."""
    if n < 1:
        raise ValueError(f"block size must be >= 1, got {n}")
    return permutation_aut(2 * n, {i: i + n for i in range(1, n + 1)}
                           | {i + n: i for i in range(1, n + 1)})


def aut_block_swap_witness(n: int) -> Witness:
    return Witness(block_swap_aut(n), Finite(2))


class FreeAutFamily(GroupFamily):
    """Aut(F_r) under composition."""

    def __init__(self, rank: int):
        self.rank = rank
        self.name = f"aut-free-{rank}"

    def check_element(self, a):
        if not isinstance(a, FreeAutomorphism):
            raise FamilyMismatchError(f"not a FreeAutomorphism: {a!r}")
        if a.rank != self.rank:
            raise FamilyMismatchError(f"rank {a.rank} element in rank {self.rank} family")

    def identity(self):
        return identity_aut(self.rank)

    def mul(self, a, b):
        self.check_element(a)
        self.check_element(b)
        return aut_compose(a, b)

    def inv(self, a):
        self.check_element(a)
        return aut_inverse(a)

    def eq(self, a, b):
        self.check_element(a)
        self.check_element(b)
        return a.images == b.images

    def render(self, a):
        return "; ".join(f"x{i} -> {render_word(w)}" for i, w in enumerate(a.images, start=1))
