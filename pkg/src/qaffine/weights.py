"""Weight-space decompositions, types and diameters.

Every analyzer walks the spectrum of the K-type generator: the rational
eigenvalues must form a single q^2-ladder zeta, q^2 zeta, ..., q^(2d) zeta,
the generator must act semisimply, and the raising/lowering generators must
move each weight space to its neighbors. Irreducibility is never assumed;
all of these properties are verified directly and a WeightLadderError names
whichever one fails, because callers may feed non-irreducible or hand-edited
module files.

Inputs whose K-spectrum leaves the rationals are rejected with a diagnostic
rather than approximated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from .errors import WeightLadderError
from .linalg import Matrix, Subspace, char_poly, image, kernel, rational_roots
from .presentations import AFFINE_BOREL, AFFINE_FULL, UGEQ0
from .scalars import QParam

if TYPE_CHECKING:  # pragma: no cover
    from .factory import ModuleData


@dataclass(frozen=True)
class WeightLadder:
    """Type scalar, diameter and weight spaces of a ugeq0-style module:
    K acts on spaces[i] as alpha * q^(2i - d)."""

    alpha: Fraction
    diameter: int
    spaces: tuple[Subspace, ...]


@dataclass(frozen=True)
class FullWeightData:
    """Type signs, diameter and weight spaces of a full affine module:
    K0 acts on spaces[i] as eps0 * q^(2i - d), K1 as eps1 * q^(d - 2i)."""

    eps0: Fraction
    eps1: Fraction
    diameter: int
    spaces: tuple[Subspace, ...]


@dataclass(frozen=True)
class BorelWeightData:
    """Type pair (alpha, beta), diameter and weight spaces of a Borel module;
    K0 K1 acts as the scalar gamma = alpha * beta."""

    alpha: Fraction
    beta: Fraction
    diameter: int
    spaces: tuple[Subspace, ...]


def k_ladder(K: Matrix, q: QParam, label: str = "K") -> tuple[Fraction, list[Subspace]]:
    """Bottom eigenvalue and eigenspace ladder of a semisimple K action.

    Finds the rational eigenvalue zeta with zeta / q^2 not an eigenvalue and
    climbs zeta, q^2 zeta, ... as long as eigenvalues exist; the ladder must
    exhaust the spectrum and the eigenspace dimensions must fill the space.
    """
    n = K.rows
    roots = rational_roots(char_poly(K))
    if len(roots) < n:
        raise WeightLadderError(
            f"{label} has eigenvalues outside the rationals "
            f"({len(roots)} of {n} found)"
        )
    distinct = sorted(set(roots))
    if any(r == 0 for r in distinct):
        raise WeightLadderError(f"{label} is singular")
    q2 = q.pow(2)
    bottoms = [r for r in distinct if r / q2 not in set(distinct)]
    if len(bottoms) != 1:
        raise WeightLadderError(
            f"eigenvalues of {label} do not form a single q^2-ladder: "
            f"{len(bottoms)} ladder bottoms among {[str(r) for r in distinct]}"
        )
    zeta = bottoms[0]
    values = [zeta]
    while values[-1] * q2 in set(distinct):
        values.append(values[-1] * q2)
    if set(values) != set(distinct):
        raise WeightLadderError(
            f"eigenvalues of {label} do not form a single q^2-ladder"
        )
    spaces = [kernel(K - v * Matrix.identity(n)) for v in values]
    if sum(s.dim for s in spaces) != n:
        raise WeightLadderError(f"{label} does not act semisimply")
    return zeta, spaces


def _check_moves(
    name: str,
    mat: Matrix,
    spaces: list[Subspace],
    step: int,
) -> None:
    """Verify mat(spaces[i]) lies in spaces[i + step] (zero off the ends)."""
    n = spaces[0].ambient_dim
    d = len(spaces) - 1
    for i, space in enumerate(spaces):
        j = i + step
        target = spaces[j] if 0 <= j <= d else Subspace.zero(n)
        if not target.contains(image(mat, space)):
            raise WeightLadderError(
                f"{name} does not map weight space {i} into weight space {j}"
            )


def analyze_ugeq0(m: "ModuleData") -> WeightLadder:
    """Type, diameter and weight spaces of a ugeq0 module; verifies the
    direct-sum property and that R raises and L lowers along the ladder."""
    if m.kind != UGEQ0:
        raise WeightLadderError(f"expected a ugeq0 module, got {m.kind}")
    zeta, spaces = k_ladder(m.action["K"], m.q, "K")
    d = len(spaces) - 1
    alpha = zeta * m.q.pow(d)
    _check_moves("R", m.action["R"], spaces, +1)
    _check_moves("L", m.action["L"], spaces, -1)
    return WeightLadder(alpha, d, tuple(spaces))


def _scalar_action(mat: Matrix, label: str) -> Fraction:
    """The scalar c with mat = c I, or a WeightLadderError."""
    n = mat.rows
    c = mat.at(0, 0)
    if mat != c * Matrix.identity(n):
        raise WeightLadderError(f"{label} does not act as a scalar")
    return c


def analyze_full(m: "ModuleData") -> FullWeightData:
    """Type signs, diameter and weight spaces of a full affine module.

    The K0 ladder fixes eps0 and d; eps1 comes from the scalar action of
    K0 K1. Verifies the paired K1 eigenvalues and that e0p, e1m raise while
    e0m, e1p lower.
    """
    if m.kind != AFFINE_FULL:
        raise WeightLadderError(f"expected an affine_full module, got {m.kind}")
    zeta, spaces = k_ladder(m.action["K0"], m.q, "K0")
    d = len(spaces) - 1
    eps0 = zeta * m.q.pow(d)
    if eps0 * eps0 != 1:
        raise WeightLadderError(
            f"K0 ladder is not centered at a sign: alpha = {eps0}"
        )
    gamma = _scalar_action(m.action["K0"] @ m.action["K1"], "K0 K1")
    eps1 = gamma / eps0
    if eps1 * eps1 != 1:
        raise WeightLadderError(f"K0 K1 scalar is not a sign pair: gamma = {gamma}")
    K1 = m.action["K1"]
    n = m.dim
    for i, space in enumerate(spaces):
        shifted = K1 - (eps1 * m.q.pow(d - 2 * i)) * Matrix.identity(n)
        if not (shifted @ space.basis).is_zero():
            raise WeightLadderError(
                f"K1 does not act as eps1 q^(d-2i) on weight space {i}"
            )
    _check_moves("e0p", m.action["e0p"], spaces, +1)
    _check_moves("e1m", m.action["e1m"], spaces, +1)
    _check_moves("e0m", m.action["e0m"], spaces, -1)
    _check_moves("e1p", m.action["e1p"], spaces, -1)
    return FullWeightData(eps0, eps1, d, tuple(spaces))


def analyze_borel(m: "ModuleData") -> BorelWeightData:
    """Type pair (alpha, beta) and weight spaces of a Borel module: alpha from
    the K0 ladder, beta = gamma / alpha with gamma the scalar of K0 K1."""
    if m.kind != AFFINE_BOREL:
        raise WeightLadderError(f"expected an affine_borel module, got {m.kind}")
    zeta, spaces = k_ladder(m.action["K0"], m.q, "K0")
    d = len(spaces) - 1
    alpha = zeta * m.q.pow(d)
    gamma = _scalar_action(m.action["K0"] @ m.action["K1"], "K0 K1")
    beta = gamma / alpha
    K1 = m.action["K1"]
    n = m.dim
    for i, space in enumerate(spaces):
        shifted = K1 - (beta * m.q.pow(d - 2 * i)) * Matrix.identity(n)
        if not (shifted @ space.basis).is_zero():
            raise WeightLadderError(
                f"K1 does not act as beta q^(d-2i) on weight space {i}"
            )
    _check_moves("e0p", m.action["e0p"], spaces, +1)
    _check_moves("e1p", m.action["e1p"], spaces, -1)
    return BorelWeightData(alpha, beta, d, tuple(spaces))
