import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hopfind.constructors import cyclic_group, direct_product, group_algebra, h_delta, load_group
from hopfind.fixtures import fixture, names
from hopfind.gf_linear import Subspace, inverse, matmul
from hopfind.hopf_core import (
    DimensionCapError,
    HopfAlgebraData,
    StructureError,
    antipode_map,
    co_opposite,
    convolution_inverse,
    convolution_power,
    convolve,
    dual,
    identity_map,
    is_cocommutative,
    is_commutative,
    opposite,
    subspace_is_coideal_two_sided,
    subspace_is_hopf_ideal,
    subspace_is_ideal,
    subspace_is_stable_under,
    subspace_is_subalgebra,
    tensor,
    unit_counit,
    validate,
)

SMALL = [n for n in names() if fixture(n).dim <= 16]


def kC(n, p):
    return group_algebra(cyclic_group(n), p)


def noncommutative_noncocommutative():
    return tensor(group_algebra(load_group("symmetric6"), 3), dual(group_algebra(load_group("symmetric6"), 3)))


# --- validation ---------------------------------------------------------------

def test_validate_examples():
    assert validate(kC(2, 2)) == []
    assert validate(h_delta(3, 0)) == []


def test_validate_names_broken_antipode_at_g():
    H = kC(3, 3)
    bad = HopfAlgebraData(H.field, H.mult, H.unit, H.comult, H.counit, np.eye(3, dtype=np.int64))
    failures = validate(bad)
    assert [f.axiom for f in failures] == ["antipode axiom (S * id)", "antipode axiom (id * S)"]
    # first offending basis element is g = e_1 (g * g = g^2 is not eps(g) 1)
    assert failures[0].index[0] == 1


def test_validate_reports_each_broken_axiom():
    H = kC(3, 3)
    m = H.mult.copy()
    m[1, 1] = [0, 1, 0]                   # g * g = g, so (g g) g^2 = 1 but g (g g^2) = g
    bad = HopfAlgebraData(H.field, m, H.unit, H.comult, H.counit, H.antipode)
    axioms = [f.axiom for f in validate(bad)]
    assert axioms[0] == "associativity"
    K = kC(2, 2)
    c = K.comult.copy()
    c[1] = [[0, 1], [0, 0]]               # Delta(g) = 1 (x) g
    bad = HopfAlgebraData(K.field, K.mult, K.unit, c, K.counit, K.antipode)
    assert [f.axiom for f in validate(bad)] == [
        "right counit law", "antipode axiom (S * id)", "antipode axiom (id * S)"]


def test_structure_errors():
    H = kC(2, 2)
    with pytest.raises(StructureError):
        HopfAlgebraData(H.field, H.mult[:, :, :1], H.unit, H.comult, H.counit, H.antipode)
    with pytest.raises(StructureError):
        tensor(kC(2, 2), kC(3, 3))


def test_dimension_cap(monkeypatch):
    monkeypatch.setenv("HOPFIND_DIM_CAP", "8")
    with pytest.raises(DimensionCapError):
        kC(9, 3)


def test_fast_validation_samples_without_false_alarms():
    H = fixture("u(heis3)")
    assert validate(H, sample=3, rng=1) == []


@pytest.mark.parametrize("name", SMALL)
def test_every_fixture_and_its_dual_validate(name):
    H = fixture(name)
    assert validate(H) == []
    assert validate(dual(H)) == []


# --- duality, tensor, op/cop --------------------------------------------------

@pytest.mark.parametrize("name", SMALL)
def test_double_dual_is_identity(name):
    H = fixture(name)
    assert dual(dual(H)).same_structure(H)
    assert dual(H).dim == H.dim


def test_dual_of_group_algebra_is_function_algebra():
    H = dual(kC(3, 3))
    assert is_commutative(H) and is_cocommutative(H)
    # delta_a * delta_b = [a = b] delta_a
    assert np.array_equal(H.mult, np.einsum("ij,jk->ijk", np.eye(3, dtype=np.int64), np.eye(3, dtype=np.int64)))


def test_tensor_examples():
    T = tensor(h_delta(2, 0), h_delta(2, 0))
    assert T.dim == 4 and validate(T) == []
    c2 = cyclic_group(2)
    assert tensor(kC(2, 2), kC(2, 2)).same_structure(group_algebra(direct_product(c2, c2), 2))


def test_opposite_of_commutative_is_itself():
    H = h_delta(3, 1)
    assert opposite(H).same_structure(H)
    assert co_opposite(kC(3, 3)).same_structure(kC(3, 3))


def test_op_and_cop_of_noncommutative_noncocommutative():
    H = noncommutative_noncocommutative()
    assert not is_commutative(H) and not is_cocommutative(H)
    for K in (opposite(H), co_opposite(H)):
        assert validate(K) == []
        assert np.array_equal(matmul(K.antipode, H.antipode, H.p), np.eye(H.dim, dtype=np.int64))


@pytest.mark.parametrize("name", SMALL)
def test_antipode_invertible_and_op_uses_inverse(name):
    H = fixture(name)
    assert np.array_equal(opposite(H).antipode, inverse(H.antipode, H.p))


# --- convolution --------------------------------------------------------------

def test_convolution_examples():
    H = kC(3, 3)
    f = np.arange(9).reshape(3, 3) % 3
    assert np.array_equal(convolve(unit_counit(H), f, H), f)
    sq = convolve(identity_map(H), identity_map(H), H)
    assert sq[:, 1].tolist() == [0, 0, 1]          # g -> g^2
    K = kC(2, 2)
    assert np.array_equal(convolution_power(identity_map(K), 3, K), identity_map(K))
    assert np.array_equal(convolution_power(identity_map(K), -1, K), antipode_map(K))
    assert np.array_equal(convolution_power(identity_map(K), 0, K), unit_counit(K))


def endomorphisms(H, count):
    return st.lists(st.integers(0, H.p - 1), min_size=count * H.dim ** 2, max_size=count * H.dim ** 2).map(
        lambda v: [np.array(v[i * H.dim ** 2:(i + 1) * H.dim ** 2], dtype=np.int64).reshape(H.dim, H.dim)
                   for i in range(count)])


@pytest.mark.parametrize("name", ["kC3", "H3(1)", "u(heis2)", "kS3@2"])
def test_convolution_is_associative_and_unital(name):
    H = fixture(name)

    @given(endomorphisms(H, 3))
    @settings(max_examples=25, deadline=None)
    def check(fs):
        f, g, h = fs
        assert np.array_equal(convolve(convolve(f, g, H), h, H), convolve(f, convolve(g, h, H), H))
        assert np.array_equal(convolve(unit_counit(H), f, H), f)
        assert np.array_equal(convolve(f, unit_counit(H), H), f)

    check()


@pytest.mark.parametrize("name", ["kC4", "H5(1)", "u(heis2)", "kS3@3", "u(ab3^2,mix)"])
@given(n=st.integers(-5, 5), m=st.integers(-5, 5))
@settings(max_examples=20, deadline=None)
def test_power_law(name, n, m):
    H = fixture(name)
    ident = identity_map(H)
    lhs = convolution_power(ident, n + m, H)
    rhs = convolve(convolution_power(ident, n, H), convolution_power(ident, m, H), H)
    assert np.array_equal(lhs, rhs)


def test_general_convolution_inverse():
    H = fixture("kS3@3")
    s = antipode_map(H)
    assert np.array_equal(convolution_inverse(s, H), identity_map(H))
    f = 2 * identity_map(H) % 3
    inv = convolution_inverse(f, H)
    assert np.array_equal(inv, 2 * s % 3)
    assert np.array_equal(convolve(f, inv, H), unit_counit(H))
    # 1 + id is a zero divisor: (1 + g)(1 - g) = 0 for an involution g
    with pytest.raises(ZeroDivisionError):
        convolution_inverse((identity_map(H) + unit_counit(H)) % 3, H)
    with pytest.raises(ZeroDivisionError):
        convolution_power(np.zeros((H.dim, H.dim), dtype=np.int64), -1, H)


# --- subspace predicates ------------------------------------------------------

@pytest.mark.parametrize("p", [2, 3, 5])
def test_augmentation_ideal_is_hopf_ideal(p):
    H = kC(p, p)
    aug = Subspace(p, p, [[(-1) % p if j == 0 else (1 if j == k else 0) for j in range(p)]
                          for k in range(1, p)])
    assert subspace_is_ideal(aug, H)
    assert subspace_is_coideal_two_sided(aug, H)
    assert subspace_is_stable_under(antipode_map(H), aug)
    assert subspace_is_hopf_ideal(aug, H)


def test_trivial_subspaces():
    H = kC(3, 3)
    zero = Subspace(3, 3)
    assert subspace_is_ideal(zero, H) and subspace_is_coideal_two_sided(zero, H)
    assert subspace_is_stable_under(antipode_map(H), zero)
    one = Subspace(3, 3, [H.unit])
    assert subspace_is_subalgebra(one, H) and not subspace_is_ideal(one, H)
