import numpy as np
import pytest

from hopfind.constructors import (
    cyclic_group,
    direct_product,
    function_algebra,
    group_algebra,
    h_delta,
    load_group,
)
from hopfind.filtration import FiniteAlgebra, has_local_dual_chevalley, jacobson_radical
from hopfind.fixtures import fixture, names
from hopfind.gf_linear import Subspace
from hopfind.indicators import indicator, sweedler_power
from hopfind.oracle import (
    OracleCapError,
    group_indicator_count,
    grouplike_enumeration,
    radical_enumeration,
    sweedler_bruteforce,
)

C2xC2 = direct_product(cyclic_group(2), cyclic_group(2))


def basis(d, i):
    return np.eye(d, dtype=np.int64)[i]


# --- Sweedler powers ---------------------------------------------------------

def test_sweedler_examples():
    H = group_algebra(cyclic_group(3), 3)
    h = np.array([1, 2, 1], dtype=np.int64)
    assert np.array_equal(sweedler_bruteforce(H, h, 1), h)
    # g^3 = 1 in C_3
    assert sweedler_bruteforce(H, basis(3, 1), 3).tolist() == [1, 0, 0]
    x = basis(2, 1)
    for delta in (0, 1):
        assert not sweedler_bruteforce(h_delta(2, delta), x, 2).any()


def test_sweedler_negative_and_zero():
    H = fixture("u(heis2)")
    for i in range(H.dim):
        v = basis(H.dim, i)
        assert np.array_equal(sweedler_bruteforce(H, v, -1), H.antipode[i] % H.p)
        assert np.array_equal(sweedler_bruteforce(H, v, 0), H.counit[i] * H.unit % H.p)


@pytest.mark.parametrize("name", ["kC4", "H3(1)", "u(heis2)", "kS3@3", "kC2(x)H2(1)"])
def test_sweedler_matches_fast_path(name):
    H = fixture(name)
    for m in range(-4, 5):
        P = sweedler_power(H, m)
        for i in range(H.dim):
            assert np.array_equal(sweedler_bruteforce(H, basis(H.dim, i), m), P[:, i])


def test_sweedler_range_cap():
    with pytest.raises(OracleCapError):
        sweedler_bruteforce(fixture("kC2"), basis(2, 0), 9)


# --- radical -------------------------------------------------------------------

def test_radical_enumeration_examples():
    mult = np.zeros((2, 2, 2), dtype=np.int64)
    mult[0, 0, 0] = mult[0, 1, 1] = mult[1, 0, 1] = 1       # t^2 = 0
    assert radical_enumeration(FiniteAlgebra(2, mult)) == Subspace(2, 2, [[0, 1]])
    assert radical_enumeration(FiniteAlgebra.of(fixture("kC3@2"))).dim == 0
    J = radical_enumeration(FiniteAlgebra.of(group_algebra(C2xC2, 2)))
    assert J.dim == 3 and not J.contains(basis(4, 0))


@pytest.mark.parametrize("name", [n for n in names() if fixture(n).p ** fixture(n).dim <= 2**16])
def test_radical_enumeration_matches_trace_chain(name):
    A = FiniteAlgebra.of(fixture(name))
    assert radical_enumeration(A) == jacobson_radical(A)


def test_radical_cap():
    with pytest.raises(OracleCapError):
        radical_enumeration(FiniteAlgebra.of(fixture("u(heis3)")))


# --- grouplikes ------------------------------------------------------------------

def test_grouplike_examples():
    G = load_group("quaternion8")
    vs, table = grouplike_enumeration(group_algebra(G, 2))
    assert sorted(int(np.flatnonzero(v)[0]) for v in vs) == list(range(8))
    assert all(np.count_nonzero(v) == 1 for v in vs) and len(table) == 8
    for p in (2, 3, 5):
        vs, _ = grouplike_enumeration(h_delta(p, 0))
        assert [v.tolist() for v in vs] == [basis(p, 0).tolist()]
    vs, table = grouplike_enumeration(function_algebra(cyclic_group(2), 2))
    # grouplikes of k^{C_2} are the characters of kC_2; over GF(2) -1 = 1,
    # so only the trivial character delta_1 + delta_g survives
    assert [v.tolist() for v in vs] == [[1, 1]]


def test_grouplike_of_function_algebra_at_odd_prime():
    # characters of kC_2 over GF(3): g -> 1 and g -> -1
    vs, table = grouplike_enumeration(function_algebra(cyclic_group(2), 3))
    assert len(vs) == 2 and sorted(map(sorted, table)) == [[0, 1], [0, 1]]


def test_grouplike_cap():
    with pytest.raises(OracleCapError):
        grouplike_enumeration(fixture("kHeis27"))


@pytest.mark.parametrize("name", [n for n in names() if fixture(n).p ** fixture(n).dim <= 2**20])
def test_grouplikes_form_a_p_group_under_local_dual_chevalley(name):
    H = fixture(name)
    if not has_local_dual_chevalley(H):
        pytest.skip("no local dual Chevalley property")
    vs, table = grouplike_enumeration(H)
    order = len(vs)
    while order % H.p == 0:
        order //= H.p
    assert order == 1
    # closed under multiplication: the table is a Latin square
    assert all(sorted(row) == list(range(len(vs))) for row in table)


# --- group counting ----------------------------------------------------------------

def test_group_indicator_count_examples():
    assert group_indicator_count(cyclic_group(4), 2, 2) == 0
    for G in (cyclic_group(5), C2xC2, load_group("symmetric6")):
        assert group_indicator_count(G, 1, 7) == 1
    assert group_indicator_count(C2xC2, 2, 2) == 0
    assert group_indicator_count(load_group("symmetric6"), 2, 5) == 4


@pytest.mark.parametrize("G,p", [(cyclic_group(4), 2), (load_group("symmetric6"), 3), (load_group("dihedral8"), 2)])
def test_group_indicator_count_matches_trace(G, p):
    H = group_algebra(G, p)
    for n in range(-2 * p * p, 2 * p * p + 1):
        assert indicator(H, n) == group_indicator_count(G, n, p)
