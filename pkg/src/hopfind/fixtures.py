"""Named example algebras used by the tests, demos and the ``hopfind fixture`` command."""
from __future__ import annotations

from functools import lru_cache

from .constructors import (
    abelian_lie,
    cyclic_group,
    direct_product,
    function_algebra,
    group_algebra,
    h_delta,
    heisenberg_lie,
    load_group,
    restricted_enveloping,
)
from .hopf_core import HopfAlgebraData, tensor

__all__ = ["P_GROUPS", "CONTROLS", "names", "fixture", "p_group"]


def _groups():
    c2, c3 = cyclic_group(2), cyclic_group(3)
    return {
        "C2": (c2, 2),
        "C4": (cyclic_group(4), 2),
        "C2xC2": (direct_product(c2, c2), 2),
        "C3": (c3, 3),
        "C9": (cyclic_group(9), 3),
        "C3xC3": (direct_product(c3, c3), 3),
        "Heis27": (load_group("heisenberg27"), 3),
    }


@lru_cache(maxsize=None)
def p_group(name: str):
    """(GroupTable, p) for the p-groups of the group-counting suite."""
    return _groups()[name]


P_GROUPS = ("C2", "C4", "C2xC2", "C3", "C9", "C3xC3", "Heis27")


def _u(L):
    return restricted_enveloping(L)


_BUILDERS = {}
for _g in P_GROUPS:
    _BUILDERS[f"k{_g}"] = lambda g=_g: group_algebra(*p_group(g))
    _BUILDERS[f"k^{_g}"] = lambda g=_g: function_algebra(*p_group(g))
for _p in (2, 3, 5):
    for _d in (0, 1):
        _BUILDERS[f"H{_p}({_d})"] = lambda p=_p, d=_d: h_delta(p, d)
_BUILDERS.update({
    "u(heis2)": lambda: _u(heisenberg_lie(2)),
    "u(heis3)": lambda: _u(heisenberg_lie(3)),
    # abelian restricted Lie algebras with assorted p-maps
    "u(ab2^2,nil)": lambda: _u(abelian_lie(2, [[0, 1], [0, 0]])),
    "u(ab2^3,tor)": lambda: _u(abelian_lie(2, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])),
    "u(ab3^2,mix)": lambda: _u(abelian_lie(3, [[0, 1], [0, 1]])),
    "u(ab3^3,zero)": lambda: _u(abelian_lie(3, 3)),
    # tensor products
    "kC2(x)H2(1)": lambda: tensor(fixture("kC2"), fixture("H2(1)")),
    "kC3(x)k^C3": lambda: tensor(fixture("kC3"), fixture("k^C3")),
    "H3(0)(x)H3(1)": lambda: tensor(fixture("H3(0)"), fixture("H3(1)")),
    "kC2(x)u(heis2)": lambda: tensor(fixture("kC2"), fixture("u(heis2)")),
    "kQ8@2": lambda: group_algebra(load_group("quaternion8"), 2),
    "kD8@2": lambda: group_algebra(load_group("dihedral8"), 2),
    # groups that are not p-groups for the chosen characteristic
    "kS3@2": lambda: group_algebra(load_group("symmetric6"), 2),
    "kS3@3": lambda: group_algebra(load_group("symmetric6"), 3),
    "kC3@2": lambda: group_algebra(cyclic_group(3), 2),
})

CONTROLS = ("kS3@2", "kS3@3", "kC3@2")


def names() -> list[str]:
    return list(_BUILDERS)


@lru_cache(maxsize=None)
def fixture(name: str) -> HopfAlgebraData:
    try:
        build = _BUILDERS[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(_BUILDERS)}") from None
    return build().renamed(name)
