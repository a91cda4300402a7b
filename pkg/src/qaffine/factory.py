"""Constructors for concrete module data.

Every factory function validates its output against the defining relations of
the target presentation before returning; a construction that produces a
relation-violating module raises RelationError instead of returning data, so
a ModuleData in the wild can always be trusted.

Conventions fixed here (any consistent choice works, and the relation checker
enforces consistency at construction time):

* evaluation modules: e1p/e1m/K1 act as the finite ep/em/k, while
  e0p = a * em, e0m = a^-1 * ep, K0 = kinv, for a nonzero evaluation
  parameter a;
* tensor products use the coproduct
  e_ip -> e_ip x 1 + K_i x e_ip,
  e_im -> e_im x K_i^-1 + 1 x e_im,
  K_i  -> K_i x K_i,
  with tensor basis ordered lexicographically (left index, then right).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ModuleFormatError, RelationError
from .linalg import Matrix, kronecker
from .presentations import (
    AFFINE_BOREL,
    AFFINE_FULL,
    ALPHABETS,
    FINITE,
    UGEQ0,
    check_presentation,
)
from .scalars import QParam, as_scalar, qint


@dataclass(frozen=True)
class ModuleData:
    """A finite-dimensional module: a presentation tag plus one square matrix
    per generator of that presentation's alphabet."""

    kind: str
    dim: int
    q: QParam
    action: dict[str, Matrix]
    provenance: str


def build_module(
    kind: str,
    q: QParam,
    action: dict[str, Matrix],
    provenance: str,
    validate: bool = True,
) -> ModuleData:
    """Assemble ModuleData and verify every defining relation holds exactly."""
    dims = set()
    for gen, mat in action.items():
        if not mat.is_square:
            raise ModuleFormatError(f"action of {gen} is not square")
        dims.add(mat.rows)
    if len(dims) != 1:
        raise ModuleFormatError("all generator matrices must share one dimension")
    data = ModuleData(kind, dims.pop(), q, dict(action), provenance)
    if validate:
        report = check_presentation(kind, data)
        if not report.passed:
            failed = report.failing()[0]
            raise RelationError(
                failed.name,
                f"construction of {provenance!r} violates {failed.name}",
            )
    return data


@dataclass(frozen=True)
class EvalParams:
    """Diameter, sign and evaluation parameter of an evaluation module."""

    d: int
    eps: Fraction
    a: Fraction

    def __post_init__(self):
        object.__setattr__(self, "eps", as_scalar(self.eps))
        object.__setattr__(self, "a", as_scalar(self.a))
        if self.d < 0:
            raise ModuleFormatError("diameter must be nonnegative")
        if self.eps * self.eps != 1:
            raise ModuleFormatError(f"eps must be 1 or -1, got {self.eps}")
        if self.a == 0:
            raise ModuleFormatError("evaluation parameter a must be nonzero")


def finite_module(d: int, eps: int | str | Fraction, q: QParam) -> ModuleData:
    """The (d+1)-dimensional finite quantum sl2 module on v_0..v_d with

        k  v_i = eps q^(2i-d) v_i,
        ep v_i = [i+1] v_{i+1}   (ep v_d = 0),
        em v_i = eps [d-i+1] v_{i-1}   (em v_0 = 0).
    """
    eps = as_scalar(eps)
    if eps * eps != 1:
        raise ModuleFormatError(f"eps must be 1 or -1, got {eps}")
    if d < 0:
        raise ModuleFormatError("diameter must be nonnegative")
    n = d + 1
    k = Matrix.diagonal([eps * q.pow(2 * i - d) for i in range(n)])
    kinv = Matrix.diagonal([eps * q.pow(d - 2 * i) for i in range(n)])
    ep_entries = [[Fraction(0)] * n for _ in range(n)]
    em_entries = [[Fraction(0)] * n for _ in range(n)]
    for i in range(d):
        ep_entries[i + 1][i] = qint(i + 1, q)
    for i in range(1, n):
        em_entries[i - 1][i] = eps * qint(d - i + 1, q)
    action = {
        "ep": Matrix.from_rows(ep_entries),
        "em": Matrix.from_rows(em_entries),
        "k": k,
        "kinv": kinv,
    }
    return build_module(FINITE, q, action, f"finite(d={d},eps={eps})")


def evaluation_module(p: EvalParams, q: QParam) -> ModuleData:
    """A (d+1)-dimensional module for the full affine presentation built from
    the finite module of the same diameter and an evaluation parameter."""
    fin = finite_module(p.d, p.eps, q)
    act = fin.action
    ainv = 1 / p.a
    action = {
        "e1p": act["ep"],
        "e1m": act["em"],
        "K1": act["k"],
        "K1inv": act["kinv"],
        "e0p": p.a * act["em"],
        "e0m": ainv * act["ep"],
        "K0": act["kinv"],
        "K0inv": act["k"],
    }
    return build_module(
        AFFINE_FULL, q, action, f"eval(d={p.d},eps={p.eps},a={p.a})"
    )


def tensor_product(m1: ModuleData, m2: ModuleData) -> ModuleData:
    """Tensor product of two affine modules over the same q."""
    if m1.kind != AFFINE_FULL or m2.kind != AFFINE_FULL:
        raise ModuleFormatError("tensor product requires two affine_full modules")
    if m1.q != m2.q:
        raise ModuleFormatError("tensor factors must share the same q")
    id1 = Matrix.identity(m1.dim)
    id2 = Matrix.identity(m2.dim)
    a1, a2 = m1.action, m2.action
    action: dict[str, Matrix] = {}
    for i in (0, 1):
        action[f"K{i}"] = kronecker(a1[f"K{i}"], a2[f"K{i}"])
        action[f"K{i}inv"] = kronecker(a1[f"K{i}inv"], a2[f"K{i}inv"])
        action[f"e{i}p"] = kronecker(a1[f"e{i}p"], id2) + kronecker(
            a1[f"K{i}"], a2[f"e{i}p"]
        )
        action[f"e{i}m"] = kronecker(a1[f"e{i}m"], a2[f"K{i}inv"]) + kronecker(
            id1, a2[f"e{i}m"]
        )
    return build_module(
        AFFINE_FULL,
        m1.q,
        action,
        f"tensor({m1.provenance}, {m2.provenance})",
    )


def twist_full(
    m: ModuleData, eps0: int | str | Fraction, eps1: int | str | Fraction
) -> ModuleData:
    """Twist a full affine module by signs: K_i and e_im scale by eps_i,
    e_ip is unchanged. An involution for each sign pair."""
    if m.kind != AFFINE_FULL:
        raise ModuleFormatError("twist_full requires an affine_full module")
    signs = {0: as_scalar(eps0), 1: as_scalar(eps1)}
    for s in signs.values():
        if s * s != 1:
            raise ModuleFormatError(f"twist signs must be 1 or -1, got {s}")
    action = dict(m.action)
    for i, s in signs.items():
        action[f"K{i}"] = s * action[f"K{i}"]
        action[f"K{i}inv"] = s * action[f"K{i}inv"]
        action[f"e{i}m"] = s * action[f"e{i}m"]
    return build_module(
        AFFINE_FULL,
        m.q,
        action,
        f"twist({m.provenance}, {signs[0]}, {signs[1]})",
    )


def twist_borel(m: ModuleData, alpha: int | str | Fraction) -> ModuleData:
    """Rescale K of a ugeq0 module by a nonzero alpha; R and L unchanged.
    Multiplies the module type by alpha."""
    if m.kind != UGEQ0:
        raise ModuleFormatError("twist_borel requires a ugeq0 module")
    alpha = as_scalar(alpha)
    if alpha == 0:
        raise ModuleFormatError("twist scalar must be nonzero")
    action = dict(m.action)
    action["K"] = alpha * action["K"]
    action["Kinv"] = (1 / alpha) * action["Kinv"]
    return build_module(UGEQ0, m.q, action, f"ktwist({m.provenance}, {alpha})")


def restrict_to_ugeq0(m: ModuleData, alpha: int | str | Fraction) -> ModuleData:
    """View a full affine module through the three-generator presentation:
    R = e0p, L = e1p, K = eps0 * alpha * K0, where eps0 is the module's first
    type sign. The result has type alpha."""
    from .weights import analyze_full

    if m.kind != AFFINE_FULL:
        raise ModuleFormatError("restrict_to_ugeq0 requires an affine_full module")
    alpha = as_scalar(alpha)
    if alpha == 0:
        raise ModuleFormatError("alpha must be nonzero")
    eps0 = analyze_full(m).eps0
    action = {
        "R": m.action["e0p"],
        "L": m.action["e1p"],
        "K": (eps0 * alpha) * m.action["K0"],
        "Kinv": (eps0 / alpha) * m.action["K0inv"],
    }
    return build_module(
        UGEQ0, m.q, action, f"restrict_ugeq0({m.provenance}, alpha={alpha})"
    )


def restrict_to_borel(m: ModuleData) -> ModuleData:
    """Forget the lowering generators: keep only e0p, e1p and the K's."""
    if m.kind != AFFINE_FULL:
        raise ModuleFormatError("restrict_to_borel requires an affine_full module")
    action = {gen: m.action[gen] for gen in ALPHABETS[AFFINE_BOREL]}
    return build_module(
        AFFINE_BOREL, m.q, action, f"restrict_borel({m.provenance})"
    )
