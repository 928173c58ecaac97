"""Per-family verification batteries.

Each battery assembles a concrete finitely generated subgroup, constructs
the family's witness, runs the commutation engine plus any family-specific
side checks (form preservation, parity, geometric supports), and returns a
plain report dictionary ready for JSON serialization.  Everything is
deterministic given the seed.
"""

from __future__ import annotations

from fractions import Fraction

from . import braid as braidmod
from . import freegroup as fg
from . import iet as ietmod
from . import matrixring as mat
from . import perm as permmod
from . import plhomeo as plmod
from . import wreath as wreathmod
from .core import (GeneratorSet, VerificationReport, Witness, ZMode,
                   commutator, conjugate, verify_ccc, verify_czc)


def _report_dict(family: str, params: dict, report: VerificationReport, seed: int) -> dict:
    d = report.to_dict()
    return {
        "family": family,
        "params": params,
        "checks": d["checks"],
        "bounded": d["bounded"],
        "seed": seed,
        # fixed at 0 so identical configs produce byte-identical reports
        "elapsed_ms": 0,
    }


# ---------------------------------------------------------------------------
# perm


def perm_battery(size: int, seed: int = 0, **_) -> dict:
    fam = permmod.PERM
    gens: tuple = ()
    if size >= 2:
        gens = (permmod.perm_from_cycles([list(range(1, size + 1))]),
                permmod.perm_from_cycles([[1, 2]]))
    H = GeneratorSet(fam, gens)
    w = permmod.block_swap_witness(size)
    report = verify_ccc(H, w, suite="perm")
    t = w.t
    report.record("witness^2 = id", fam.is_identity(fam.mul(t, t)), fam.render(fam.mul(t, t)), "e")
    report.record("witness parity even", permmod.parity(t) == "even", permmod.parity(t), "even")
    return _report_dict("perm", {"size": size}, report, seed)


# ---------------------------------------------------------------------------
# matrix families


def _matrix_generators(family: str, n: int, modulus):
    if family == "GL":
        gens = [mat.elementary(n, 1, 2, 1, modulus)] if n >= 2 else []
        if n >= 2:
            gens.append(mat.perm_to_matrix(permmod.perm_from_cycles([[1, 2]]), n, modulus))
        gens.append(mat.matrix([[(-1 if i == j == 0 else (1 if i == j else 0))
                                 for j in range(n)] for i in range(n)], modulus))
        return gens
    if family in ("SL", "E"):
        gens = []
        for i in range(1, n):
            gens.append(mat.elementary(n, i, i + 1, 1, modulus))
            gens.append(mat.elementary(n, i + 1, i, 1, modulus))
        return gens
    if family == "Sp":
        # generators of a subgroup of Sp_2n: the form matrix itself,
        # an upper unipotent with symmetric block, and diag(U, (U^T)^-1)
        j = mat.form_matrix(mat.FormTag("symplectic", 2 * n), modulus)
        sym = [[1 if (r == c == 0) else 0 for c in range(n)] for r in range(n)]
        upper = [[0] * (2 * n) for _ in range(2 * n)]
        for r in range(n):
            upper[r][r] = 1
            upper[n + r][n + r] = 1
            for c in range(n):
                upper[r][n + c] = sym[r][c]
        u = mat.elementary(n, 1, 2, 1) if n >= 2 else mat.identity_matrix(1)
        ut_inv = mat.mat_inv(mat.transpose(u))
        diag_u = [[0] * (2 * n) for _ in range(2 * n)]
        for r in range(n):
            for c in range(n):
                diag_u[r][c] = u.entries[r][c]
                diag_u[n + r][n + c] = ut_inv.entries[r][c]
        return [j, mat.matrix(upper, modulus), mat.matrix(diag_u, modulus)]
    if family == "Onn":
        size = 2 * n
        gens = []
        flip = [[(-1 if i == j == 1 else (1 if i == j else 0)) for j in range(size)]
                for i in range(size)]
        gens.append(mat.matrix(flip, modulus))
        if n >= 2:
            pair_swap = permmod.perm_from_cycles([[1, 3], [2, 4]])
            gens.append(mat.perm_to_matrix(pair_swap, size, modulus))
        if modulus is not None:
            # a hyperbolic element in the first (+, -) pair: [[a, b], [b, a]]
            # with a^2 - b^2 = 1 and b != 0, when one exists
            for a in range(modulus):
                for b in range(1, modulus):
                    if (a * a - b * b) % modulus == 1 % modulus:
                        rows = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
                        rows[0][0] = rows[1][1] = a
                        rows[0][1] = rows[1][0] = b
                        gens.append(mat.matrix(rows, modulus))
                        break
                else:
                    continue
                break
        return gens
    raise ValueError(f"unknown matrix family {family!r}")


def matrix_battery(family: str, size: int, seed: int = 0, moduli=(None, 5), **_) -> dict:
    combined = VerificationReport(f"matrix-{family.lower()}")
    for modulus in moduli:
        n = size
        gens = _matrix_generators(family, n, modulus)
        if family != "Onn" and n % 2 != 0:
            # one stabilization step keeps the witness inside Alt
            n = n + 1
            if family == "Sp":
                gens = [mat.sp_corner_embed(g) for g in gens]
            else:
                gens = [mat.corner_embed(g, n) for g in gens]
        ambient, w = mat.classical_witness(family, n, modulus)
        if family == "Sp":
            embedded = gens
            for _ in range(n):
                embedded = [mat.sp_corner_embed(g) for g in embedded]
        else:
            embedded = [mat.corner_embed(g, ambient.size) for g in gens]
        H = GeneratorSet(ambient, tuple(embedded))
        ring = f"Z/{modulus}" if modulus else "Z"
        part = verify_ccc(H, w, suite=f"{family}-{ring}")
        for c in part.checks:
            combined.checks.append(c)
        t = w.t
        combined.record(f"{ring}: witness^2 = I",
                        ambient.is_identity(ambient.mul(t, t)), "t^2", "I")
        combined.record(f"{ring}: det(witness) = 1", mat.det(t) == 1 % (modulus or 0) if modulus
                        else mat.det(t) == 1, str(mat.det(t)), "1")
        if family == "Sp":
            tag = mat.FormTag("symplectic", ambient.size)
            combined.record(f"{ring}: witness preserves symplectic form",
                            mat.preserves_form(t, tag), "t^T J t", "J")
            for i, g in enumerate(embedded):
                combined.record(f"{ring}: embedded generator {i + 1} symplectic",
                                mat.preserves_form(g, tag), "g^T J g", "J")
        if family == "Onn":
            tag = mat.FormTag("split-orthogonal", ambient.size)
            combined.record(f"{ring}: witness preserves split form",
                            mat.preserves_form(t, tag), "t^T J t", "J")
            for i, g in enumerate(embedded):
                combined.record(f"{ring}: embedded generator {i + 1} preserves split form",
                                mat.preserves_form(g, tag), "g^T J g", "J")
        combined.counterexample = combined.counterexample or part.counterexample
    return _report_dict(family.lower(), {"size": size, "moduli": [m or 0 for m in moduli]},
                        combined, seed)


# ---------------------------------------------------------------------------
# braid


def braid_battery(size: int, seed: int = 0, **_) -> dict:
    n = size
    fam = braidmod.BraidFamily(2 * n)
    w = braidmod.block_pass_witness(n)
    t = w.t
    report = VerificationReport("braid")
    sigma = permmod.render_cycles(braidmod.underlying_permutation(t))
    expected = permmod.render_cycles(permmod.block_swap(n))
    report.record("underlying permutation = block swap", sigma == expected, sigma, expected)
    gens = tuple(braidmod.braid(2 * n, (i,)) for i in range(1, n))
    H = GeneratorSet(fam, gens)
    report.extend(verify_ccc(H, w, suite="braid"))
    # braid relations at this strand count
    for i in range(1, 2 * n - 1):
        lhs = braidmod.braid(2 * n, (i, i + 1, i))
        rhs = braidmod.braid(2 * n, (i + 1, i, i + 1))
        report.record(f"sigma_{i} sigma_{i + 1} sigma_{i} = sigma_{i + 1} sigma_{i} sigma_{i + 1}",
                      braidmod.braids_equal(lhs, rhs), str(lhs), str(rhs))
    for i in range(1, 2 * n):
        for j in range(i + 2, 2 * n):
            lhs = braidmod.braid(2 * n, (i, j))
            rhs = braidmod.braid(2 * n, (j, i))
            report.record(f"sigma_{i} sigma_{j} = sigma_{j} sigma_{i}",
                          braidmod.braids_equal(lhs, rhs), str(lhs), str(rhs))
    return _report_dict("braid", {"size": size}, report, seed)


# ---------------------------------------------------------------------------
# free group automorphisms


def aut_free_battery(size: int, seed: int = 0, **_) -> dict:
    n = size
    rank = 2 * n
    fam = fg.FreeAutFamily(rank)
    w = fg.aut_block_swap_witness(n)
    gens = []
    if n >= 2:
        gens.append(fg.extend_rank(fg.nielsen_aut(n, 1, 2), rank))
        gens.append(fg.extend_rank(
            fg.permutation_aut(n, {i: i % n + 1 for i in range(1, n + 1)}), rank))
    elif n == 1:
        gens.append(fg.extend_rank(fg.inversion_aut(1, 1), rank))
    H = GeneratorSet(fam, tuple(gens))
    report = verify_ccc(H, w, suite="aut-free")
    t2 = fam.mul(w.t, w.t)
    report.record("witness^2 = id", fam.is_identity(t2), fam.render(t2), "identity assignment")
    return _report_dict("aut-free", {"size": size}, report, seed)


# ---------------------------------------------------------------------------
# interval exchanges


def iet_battery(size: int, seed: int = 0, **_) -> dict:
    report = VerificationReport("iet")
    fam = ietmod.IET
    for block in (Fraction(size), Fraction(size) / 2, Fraction(size) * 2):
        H = GeneratorSet(fam, (ietmod.rotation(block, block / 3),
                               ietmod.rotation(block, block / 2)))
        w = ietmod.block_exchange_witness(block)
        part = verify_ccc(H, w, suite=f"iet-{block}")
        for c in part.checks:
            report.checks.append(c)
        t2 = fam.mul(w.t, w.t)
        report.record(f"block {block}: witness^2 = id", fam.is_identity(t2),
                      fam.render(t2), "id")
        report.counterexample = report.counterexample or part.counterexample
    return _report_dict("iet", {"size": size}, report, seed)


# ---------------------------------------------------------------------------
# piecewise linear maps


def pl_battery(size: int, bound: int = 8, seed: int = 0, **_) -> dict:
    report = VerificationReport("pl", bounded=True)
    instances = [
        (Fraction(1, 4), Fraction(1, 2)),
        (Fraction(1, 8), Fraction(1, 4)),
        (Fraction(3, 8), Fraction(1, 2)),
    ][: max(1, min(3, size))]
    for a, b in instances:
        H = GeneratorSet(plmod.PL, (plmod.bump(a, b),))
        w = plmod.displacement_witness(a, b, bound)
        part = plmod.verify_displaced_supports(H, w.t, bound)
        for c in part.checks:
            report.checks.append(c)
        esc = plmod.displacement_escalates(w.t, a, b, bound)
        report.record(f"[{a},{b}]: displacement escalation", all(esc),
                      " ".join("ok" if e else "fail" for e in esc), "all ok")
        report.counterexample = report.counterexample or part.counterexample
    return _report_dict("pl", {"size": size, "bound": bound}, report, seed)


# ---------------------------------------------------------------------------
# wreath tower machinery


def iet_chain() -> wreathmod.WitnessChain:
    fam = ietmod.IET
    H = (ietmod.rotation(1, Fraction(1, 3)),)
    return wreathmod.WitnessChain(fam, H, (ietmod.block_exchange(1), ietmod.block_exchange(2)),
                                  (2, 2))


def perm_chain() -> wreathmod.WitnessChain:
    fam = permmod.PERM
    H = (permmod.perm_from_cycles([[1, 2, 3]]),)
    return wreathmod.WitnessChain(fam, H, (permmod.block_swap(4), permmod.block_swap(8)), (2, 2))


def wreath_tower_battery(depth: int = 2, samples: int = 50, seed: int = 0, **_) -> dict:
    if depth != 2:
        raise ValueError("only depth-2 towers are shipped")
    tower = wreathmod.TowerSpec((2,))
    report = VerificationReport("wreath-tower", bounded=True)
    for label, chain in (("iet", iet_chain()), ("perm", perm_chain())):
        f = wreathmod.build_f(tower, chain)
        H = GeneratorSet(chain.family, chain.generators)
        part = wreathmod.check_hom(f, H, sample_size=samples, seed=seed)
        for c in part.checks:
            report.checks.append(c.__class__(f"{label}: {c.name}", c.status, c.lhs, c.rhs,
                                             c.detail))
        report.counterexample = report.counterexample or part.counterexample
    return _report_dict("wreath-tower", {"depth": depth, "samples": samples}, report, seed)


# ---------------------------------------------------------------------------
# closure systems


def closure_battery(size: int = 2, seed: int = 0, **_) -> dict:
    report = VerificationReport("closure")
    batteries = [
        ("perm", GeneratorSet(permmod.PERM, (permmod.perm_from_cycles([[1, 2, 3]]),
                                             permmod.perm_from_cycles([[1, 2]])))),
        ("sl2", GeneratorSet(mat.MatrixFamily(2),
                             (mat.matrix([[1, 1], [0, 1]]), mat.matrix([[0, -1], [1, 0]])))),
        ("iet", GeneratorSet(ietmod.IET, (ietmod.rotation(1, Fraction(1, 3)),))),
    ]
    for label, H in batteries:
        part = wreathmod.closure_system_witness(H)
        for c in part.checks:
            report.checks.append(c.__class__(f"{label}: {c.name}", c.status, c.lhs, c.rhs,
                                             c.detail))
        report.counterexample = report.counterexample or part.counterexample
    return _report_dict("closure", {"size": size}, report, seed)


# ---------------------------------------------------------------------------
# registry


FAMILIES: dict[str, tuple] = {
    "perm": (perm_battery,
             "finite-support permutations; order-2 block-swap witness (finite mode, n = 2)"),
    "gl": (lambda **kw: matrix_battery("GL", **kw),
           "stable general linear group over Z and Z/5; block-swap permutation witness"),
    "sl": (lambda **kw: matrix_battery("SL", **kw),
           "stable special linear group over Z and Z/5; block-swap permutation witness"),
    "e": (lambda **kw: matrix_battery("E", **kw),
          "stable elementary matrix group over Z and Z/5; block-swap permutation witness"),
    "sp": (lambda **kw: matrix_battery("Sp", **kw),
           "stable symplectic group; paired block-swap witness preserving the symplectic form"),
    "onn": (lambda **kw: matrix_battery("Onn", **kw),
            "stable split orthogonal group; witness exchanging the first half of the basis"),
    "braid": (braid_battery,
              "stable braid group; block-pass witness validated through the free group action"),
    "aut-free": (aut_free_battery,
                 "stable automorphisms of free groups; generator block-swap witness"),
    "iet": (iet_battery,
            "interval exchanges of the half line; block-exchange witness (finite mode, n = 2)"),
    "pl": (pl_battery,
           "compactly supported piecewise linear maps; displacement witness, bounded Z-mode"),
    "wreath-tower": (wreath_tower_battery,
                     "iterated wreath tower homomorphism machinery; bounded seeded checks"),
    "closure": (closure_battery,
                "equation system [g_i, ^x g_j] = e, [g_i, x^2] = e solved in the index-2 wreath"),
}


def run_family(family: str, size: int = 2, depth: int = 2, bound: int = 8,
               samples: int = 50, seed: int = 0) -> dict:
    if family not in FAMILIES:
        raise KeyError(family)
    builder = FAMILIES[family][0]
    return builder(size=size, depth=depth, bound=bound, samples=samples, seed=seed)
