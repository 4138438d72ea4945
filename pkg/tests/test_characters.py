"""Character theory tests.

The heavyweight oracle here rebuilds the full character table of S_n
(n <= 5) without the recursive rule: permutation characters of coset
actions are counted by brute force, and irreducible characters are peeled
off top-down in lexicographic order, which refines dominance.
"""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fistab.characters import (
    ClassFunction,
    IrrDecomposition,
    decompose,
    inner_product,
    irreducible_character,
    mn_character,
    regular_character,
    sign_character,
    trivial_character,
)
from fistab.errors import ConsistencyError, DomainError
from fistab.partitions import dimension, partitions


def _cycle_type(perm):
    seen, lens = set(), []
    for start in perm:
        if start in seen:
            continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = perm[x - 1]
            length += 1
        lens.append(length)
    return tuple(sorted(lens, reverse=True))


def _ordered_set_partitions(universe, sizes):
    if not sizes:
        yield ()
        return
    first, rest = sizes[0], sizes[1:]
    for block in itertools.combinations(universe, first):
        remaining = tuple(x for x in universe if x not in block)
        for tail in _ordered_set_partitions(remaining, rest):
            yield (frozenset(block),) + tail


def _young_permutation_character(mu, n):
    """Character of S_n permuting ordered set partitions of block sizes mu,
    counted by brute force over one representative per class."""
    reps = {}
    for perm in itertools.permutations(range(1, n + 1)):
        reps.setdefault(_cycle_type(perm), perm)
    values = {}
    for ct, perm in reps.items():
        fixed = 0
        for blocks in _ordered_set_partitions(tuple(range(1, n + 1)), mu):
            if all(frozenset(perm[x - 1] for x in b) == b for b in blocks):
                fixed += 1
        values[ct] = fixed
    return ClassFunction(n, values)


@pytest.mark.parametrize("n", range(1, 6))
def test_character_table_against_coset_oracle(n):
    # peel irreducibles off the permutation characters, top lex first
    recovered = {}
    for mu in sorted(partitions(n), reverse=True):
        chi = _young_permutation_character(mu, n)
        for lam, known in recovered.items():
            mult = inner_product(chi, known)
            assert mult.denominator == 1 and mult >= 0
            chi = chi - int(mult) * known
        recovered[mu] = chi
    for lam, chi in recovered.items():
        for mu in partitions(n):
            assert chi.values[mu] == mn_character(lam, mu), (lam, mu)


def test_mn_character_examples():
    for n in range(1, 7):
        for mu in partitions(n):
            assert mn_character((n,), mu) == 1
    assert mn_character((1, 1, 1, 1), (2, 1, 1)) == -1
    assert mn_character((2, 1), (1, 1, 1)) == 2


def test_mn_character_size_mismatch():
    with pytest.raises(DomainError):
        mn_character((2, 1), (2, 2))


def test_mn_character_at_identity_is_dimension():
    for n in range(1, 8):
        e = (1,) * n
        for lam in partitions(n):
            assert mn_character(lam, e) == dimension(lam)


def test_sign_character_values():
    # sign of a class is (-1)**(n - number of cycles)
    for n in range(2, 7):
        chi = sign_character(n)
        for mu in partitions(n):
            assert chi.values[mu] == (-1) ** (n - len(mu))


@pytest.mark.parametrize("n", range(1, 9))
def test_row_orthogonality(n):
    chars = {lam: irreducible_character(lam) for lam in partitions(n)}
    for lam, chi_a in chars.items():
        for nu, chi_b in chars.items():
            expected = 1 if lam == nu else 0
            assert inner_product(chi_a, chi_b) == expected


def test_inner_product_requires_matching_group():
    with pytest.raises(DomainError):
        inner_product(trivial_character(3), trivial_character(4))


def test_regular_character_inner_products_are_dimensions():
    reg = regular_character(3)
    assert inner_product(reg, irreducible_character((2, 1))) == 2
    for n in range(1, 6):
        reg = regular_character(n)
        for lam in partitions(n):
            assert inner_product(reg, irreducible_character(lam)) == dimension(lam)


def test_decompose_trivial_and_regular():
    assert decompose(trivial_character(4)).to_mapping() == {"4": 1}
    reg = decompose(regular_character(3))
    assert reg.to_mapping() == {"1+1+1": 1, "2+1": 2, "3": 1}


def test_decompose_natural_permutation_character():
    # fixed points of the action on 3 letters: values 3, 1, 0
    chi = ClassFunction(3, {(1, 1, 1): 3, (2, 1): 1, (3,): 0})
    assert decompose(chi).to_mapping() == {"2+1": 1, "3": 1}


def test_decompose_rejects_non_representation():
    bad = ClassFunction(3, {(1, 1, 1): 1, (2, 1): Fraction(1, 2), (3,): 0})
    with pytest.raises(ConsistencyError):
        decompose(bad)
    with pytest.raises(ConsistencyError):
        decompose(trivial_character(3) - 2 * sign_character(3))


@st.composite
def small_decomposition(draw):
    n = draw(st.integers(min_value=1, max_value=5))
    mult = {
        lam: draw(st.integers(min_value=0, max_value=3)) for lam in partitions(n)
    }
    return IrrDecomposition(n, mult)


@given(small_decomposition(), small_decomposition())
@settings(max_examples=40, deadline=None)
def test_decompose_is_additive(u, v):
    if u.n != v.n:
        return
    total = decompose(u.character() + v.character())
    assert total == u + v


def test_class_function_validates_domain():
    with pytest.raises(DomainError):
        ClassFunction(3, {(1, 1, 1): 1})  # missing classes
    with pytest.raises(DomainError):
        ClassFunction(3, {(1, 1, 1): 1, (2, 1): 0, (3,): 0, (4,): 0})


def test_class_function_mapping_round_trip():
    chi = irreducible_character((3, 1))
    again = ClassFunction.from_mapping(4, chi.to_mapping())
    assert again == chi
    # non-integer rationals serialize as "p/q" strings
    half = ClassFunction(2, {(1, 1): Fraction(1, 2), (2,): 3})
    payload = half.to_mapping()
    assert payload == {"1+1": "1/2", "2": 3}
    assert ClassFunction.from_mapping(2, payload) == half


def test_decomposition_dimension_and_character():
    dec = IrrDecomposition(4, {(3, 1): 2, (4,): 1})
    assert dec.dimension() == 2 * 3 + 1
    assert dec.character().dimension() == 7
    assert decompose(dec.character()) == dec


def test_symmetric_group_of_size_zero():
    assert partitions(0) == ((),)
    assert trivial_character(0).values == {(): 1}
    assert decompose(trivial_character(0)).to_mapping() == {"": 1}
