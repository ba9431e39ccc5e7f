"""Shalika / linear model criterion for St_k(rho).

Two routes must agree: the closed criterion on the self-duality type of rho
(Ext2 type for k odd, Sym2 type for k even) and the pole at s = 0 of the
product formula for L(Ext2(phi(rho) (x) Sp(k)), s).  For explicit characters
the Euler factor gives a third, numeric route.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cuspidal import CuspidalDatum, SelfDual
from .errors import DomainError
from .lfactor import LFactor, euler_eval, euler_pole_at, has_pole_at, lgalois_product

MODEL_KINDS = ("Shalika", "local")


@dataclass(frozen=True)
class ShalikaVerdict:
    has_model: bool
    reason: str
    witnesses: tuple[LFactor, ...] = ()
    models: tuple[str, ...] = MODEL_KINDS


def shalika_criterion(rho: CuspidalDatum, k: int) -> ShalikaVerdict:
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    if not rho.unitary:
        raise DomainError(f"{rho.name}: the criterion needs a unitary central character")
    if (rho.dim * k) % 2:
        raise DomainError(f"St_{k}({rho.name}) lives on GL({rho.dim * k}); the group must be GL(2m)")

    wanted = SelfDual.EXT2 if k % 2 else SelfDual.SYM2
    direct = rho.self_dual is wanted

    expr = lgalois_product(rho, k)
    query = has_pole_at(expr, 0)
    if query.has_pole != direct:
        raise AssertionError(
            f"criterion and L-factor disagree for St_{k}({rho.name}): {direct} vs {query.has_pole}"
        )
    if rho.explicit is not None and euler_pole_at(euler_eval(expr), 0).has_pole != direct:
        raise AssertionError(f"explicit Euler factor disagrees for St_{k}({rho.name})")

    if direct:
        atoms = ", ".join(str(w.atom) for w in query.witnesses)
        reason = f"{atoms} pole at s=0"
    else:
        kind = "Ext2" if k % 2 else "Sym2"
        reason = f"no pole at s=0: {kind}({rho.name}) has none and k={k} is {'odd' if k % 2 else 'even'}"
    return ShalikaVerdict(direct, reason, query.witnesses)
