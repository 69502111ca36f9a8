import random
from collections import Counter

import pytest

from cayley_spectra.errors import ShapeError
from cayley_spectra.lr import (
    AdmissibleTuple,
    SkewShape,
    SkewTableau,
    content,
    enumerate_admissible,
    enumerate_admissible_star,
    enumerate_lr_tableaux,
    enumerate_omega,
    in_omega,
    is_delta_nonincreasing,
    is_good_sequence,
    is_lattice_word,
    lr_coefficient,
    minimal_content,
    minimal_sequence,
    multi_lr_coefficient,
    reading_word,
    reconstruct_tableau,
    reduce_equal_rows,
    relax_admissible,
    running_multiplicity,
    skew_decomposition,
)
from cayley_spectra.partitions import (
    componentwise_leq,
    conjugate,
    dimension,
    dominance_leq,
    enumerate_partitions,
    enumerate_weak_compositions,
    sort_to_partition,
    subtract,
)

SKEW_6531_521_CONTENTS = {
    (6, 1): 1,
    (5, 2): 3,
    (5, 1, 1): 2,
    (4, 3): 3,
    (4, 2, 1): 4,
    (4, 1, 1, 1): 1,
    (3, 3, 1): 2,
    (3, 2, 2): 1,
    (3, 2, 1, 1): 1,
}

ADMISSIBLE_421_43_ROWS = [
    (((4,), (2, 1)), 1),
    (((3, 1), (3,)), 1),
    (((3, 1), (2, 1)), 2),
    (((3, 1), (1, 1, 1)), 1),
    (((2, 2), (3,)), 1),
    (((2, 2), (2, 1)), 1),
    (((2, 1, 1), (3,)), 1),
    (((2, 1, 1), (2, 1)), 1),
]


def skew_6531_521() -> SkewShape:
    return SkewShape((6, 5, 3, 1), (5, 2, 1))


def contained_pairs(n: int):
    for alpha in enumerate_partitions(n):
        for k in range(1, n):
            for beta in enumerate_partitions(k):
                if componentwise_leq(beta, alpha):
                    yield alpha, beta


def test_lattice_words_and_content():
    assert is_lattice_word((1, 1, 2, 1, 2, 3))
    assert not is_lattice_word((1, 2, 2))
    assert not is_lattice_word((2, 1))
    assert is_lattice_word(())
    assert content((1, 2, 1, 1, 3, 2, 4)).parts == (3, 2, 1, 1)
    assert content((1, 3)).parts == (1, 0, 1)


def test_lattice_words_with_three_symbols():
    assert is_lattice_word((1, 1, 2, 1, 3, 2, 2, 3, 1, 1, 2))
    # a third 3 arrives while only two 2's have been read
    assert not is_lattice_word((1, 1, 2, 1, 3, 2, 3, 3, 1, 1, 2))
    assert content((1, 3, 5, 6, 2, 1, 3, 1, 1, 2)).parts == (4, 2, 2, 0, 1, 1)


def test_reading_word_flips_rows():
    shape = SkewShape((7, 6, 4, 3), (4, 2, 1, 1))
    tableau = SkewTableau(shape=shape, rows=((1, 1, 1), (1, 1, 2, 2), (1, 2, 3), (3, 4)))
    word = reading_word(tableau)
    assert word == (1, 1, 1, 2, 2, 1, 1, 3, 2, 1, 4, 3)
    assert is_lattice_word(word)
    assert tableau.content.parts == (6, 3, 2, 1)
    first = enumerate_lr_tableaux(skew_6531_521())[0]
    assert reading_word(first) == (1, 1, 1, 1, 2, 1, 1)


def test_skew_shape_validation():
    with pytest.raises(ShapeError):
        SkewShape((2, 1), (3,))
    with pytest.raises(ShapeError):
        SkewShape((2, 1), (2, 1))
    shape = SkewShape((6, 5, 3, 1), (5, 2, 1))
    assert shape.box_count == 7
    assert shape.row_lengths == (1, 3, 2, 1)


def test_skew_tableau_rejects_bad_column():
    shape = SkewShape((2, 2), (1,))
    with pytest.raises(ShapeError):
        SkewTableau(shape=shape, rows=((1,), (1, 1)))
    tableau = SkewTableau(shape=shape, rows=((1,), (1, 2)))
    assert reading_word(tableau) == (1, 2, 1)


def test_lr_tableaux_of_6531_over_521():
    found = enumerate_lr_tableaux(skew_6531_521())
    assert len(found) == 18
    contents = Counter(tableau.content.parts for tableau in found)
    assert dict(contents) == SKEW_6531_521_CONTENTS
    words = [reading_word(tableau) for tableau in found]
    assert words == sorted(words)
    assert all(is_lattice_word(word) for word in words)
    assert found[0].render() == ":::::1\n::111\n:12\n1"


def test_minimal_content_of_6531_over_521():
    found = enumerate_lr_tableaux(skew_6531_521())
    minimal = minimal_content((6, 5, 3, 1), (5, 2, 1))
    assert minimal.parts == (3, 2, 1, 1)
    assert all(dominance_leq(minimal, tableau.content) for tableau in found)
    only = enumerate_lr_tableaux(skew_6531_521(), (3, 2, 1, 1))
    assert len(only) == 1
    assert only[0].render() == ":::::1\n::112\n:23\n4"


def test_lr_coefficient_values():
    assert lr_coefficient((4, 2, 1), (3, 1), (2, 1)) == 2
    assert lr_coefficient((2, 1), (1,), (1, 1)) == 1
    assert lr_coefficient((2, 1), (2,), (1,)) == 1
    assert lr_coefficient((2, 2), (3,), (1,)) == 0
    assert lr_coefficient((4, 2, 1), (4,), (2, 1)) == 1
    assert lr_coefficient((4, 2, 1), (4,), (3,)) == 0
    assert lr_coefficient((6, 1), (4,), (2, 1)) == 1
    with pytest.raises(ShapeError):
        lr_coefficient((2, 1), (1,), (1,))


def test_skew_decomposition_of_6531_over_521():
    decomposition = skew_decomposition((6, 5, 3, 1), (5, 2, 1))
    assert {gamma.parts: count for gamma, count in decomposition.items()} == SKEW_6531_521_CONTENTS


@pytest.mark.parametrize("n", range(2, 9))
def test_lr_symmetry(n):
    for alpha, beta in contained_pairs(n):
        for gamma in enumerate_partitions(n - beta.n):
            assert lr_coefficient(alpha, beta, gamma) == lr_coefficient(alpha, gamma, beta)


@pytest.mark.parametrize("n", range(2, 9))
def test_restriction_dimension_count(n):
    for alpha in enumerate_partitions(n):
        for k in range(1, n):
            total = 0
            for beta in enumerate_partitions(k):
                for gamma, count in skew_decomposition(alpha, beta).items():
                    total += count * dimension(beta) * dimension(gamma)
            assert total == dimension(alpha)


def test_admissible_pairs_421_on_43():
    rows = [
        (tuple(part.parts for part in tup.parts), tup.coefficient)
        for tup in enumerate_admissible((4, 2, 1), (4, 3))
    ]
    assert rows == ADMISSIBLE_421_43_ROWS


@pytest.mark.parametrize("n", range(1, 9))
def test_admissible_dimension_count(n):
    for eta in enumerate_partitions(n):
        for alpha in enumerate_partitions(n):
            tuples = enumerate_admissible(alpha, eta)
            assert sum(tup.multiplicity() for tup in tuples) == dimension(alpha)
            assert all(tup.coefficient > 0 for tup in tuples)


def test_admissible_parts_are_contained():
    for eta in enumerate_partitions(6):
        for alpha in enumerate_partitions(6):
            for tup in enumerate_admissible(alpha, eta):
                assert tup.sizes() == eta.parts
                for part in tup.parts:
                    assert componentwise_leq(part, alpha)


def test_multi_lr_coefficient_matches_pairs():
    assert multi_lr_coefficient((4, 2, 1), [(3, 1), (2, 1)]) == 2
    assert multi_lr_coefficient((2, 1), [(1,), (1,), (1,)]) == 2
    assert multi_lr_coefficient((6, 1), [(4,), (2, 1)]) == 1
    assert multi_lr_coefficient((3, 2), [(3, 2)]) == 1
    with pytest.raises(ShapeError):
        multi_lr_coefficient((2, 1), [(1,)])


def test_admissible_star_sums_to_alpha():
    tuples = enumerate_admissible_star((2, 1), (2, 1))
    assert [tuple(part.parts for part in tup.parts) for tup in tuples] == [
        ((2,), (0, 1)),
        ((1, 1), (1,)),
    ]
    tuples = enumerate_admissible_star((2, 2), (2, 2))
    assert [tuple(part.parts for part in tup.parts) for tup in tuples] == [
        ((2,), (0, 2)),
        ((1, 1), (1, 1)),
        ((0, 2), (2,)),
    ]


@pytest.mark.parametrize("eta", [(4, 3), (3, 3), (2, 2, 1), (3, 1, 1, 1), (1, 1, 1, 1)])
def test_admissible_star_of_standard_representation(eta):
    n = sum(eta)
    # the second-row box sits in exactly one block
    expected = []
    for i, size in enumerate(eta):
        parts = [(value,) for value in eta]
        parts[i] = (size - 1, 1)
        expected.append(tuple(parts))
    found = [tuple(part.parts for part in tup.parts) for tup in enumerate_admissible_star((n - 1, 1), eta)]
    assert sorted(found) == sorted(expected)
    assert len(found) == len(eta)


def test_relax_admissible_lowers_q_sum():
    for eta in [(3, 3), (2, 2, 2), (4, 1, 1), (3, 2, 1)]:
        for alpha in enumerate_partitions(6):
            for tup in enumerate_admissible(alpha, eta):
                relaxed = relax_admissible(alpha, tup.parts)
                assert relaxed.sizes() == tup.sizes()
                assert relaxed.q_sum() <= tup.q_sum()
                summed = [0] * len(alpha)
                for part in relaxed.parts:
                    for i, value in enumerate(part.parts):
                        summed[i] += value
                assert tuple(summed) == alpha.parts


def test_relax_admissible_two_factors():
    relaxed = relax_admissible((4, 2, 1), [(3, 1), (2, 1)])
    assert [part.parts for part in relaxed.parts] == [(3, 1), (1, 1, 1)]


def test_reduce_equal_rows():
    outer, inner = reduce_equal_rows((6, 5, 3, 1), (5, 5, 1))
    assert outer.parts == (6, 3, 1)
    assert inner.parts == (5, 1)


def test_delta_nonincreasing_and_omega():
    assert is_delta_nonincreasing((1, 2, 1), (1, 2))
    assert not is_delta_nonincreasing((1, 1, 2), (1, 2))
    assert is_delta_nonincreasing((1, 2), (1, 2))
    assert not is_delta_nonincreasing((1, 1, 1, 1), (1, 2))
    assert enumerate_omega((1, 2)) == [(1, 1, 1), (1, 2, 1)]
    assert in_omega((1, 2, 1), (1, 2))
    assert not in_omega((1, 2), (1, 2))
    with pytest.raises(ShapeError):
        enumerate_omega((1, 0, 2))


def test_minimal_sequence_goldens():
    word = minimal_sequence((1, 3, 2, 1))
    assert word == (1, 2, 1, 1, 3, 2, 4)
    assert content(word).parts == (3, 2, 1, 1)

    word = minimal_sequence((3, 4, 2, 4))
    assert word == (1, 1, 1, 2, 2, 2, 1, 3, 3, 4, 4, 3, 2)
    assert content(word).parts == (4, 4, 3, 2)
    with pytest.raises(ShapeError):
        minimal_sequence((1, 0, 2))


def test_reconstruct_tableau_golden():
    word = minimal_sequence((3, 4, 2, 4))
    tableau = reconstruct_tableau(word, (8, 7, 5, 4), (5, 3, 3))
    assert tableau.rows == ((1, 1, 1), (1, 2, 2, 2), (3, 3), (2, 3, 4, 4))
    assert reading_word(tableau) == word
    assert minimal_content((8, 7, 5, 4), (5, 3, 3)).parts == (4, 4, 3, 2)


def test_reconstruct_skips_equal_rows():
    alpha, beta = (6, 5, 3, 1), (5, 5, 1)
    outer, inner = reduce_equal_rows(alpha, beta)
    word = minimal_sequence(subtract(outer, inner))
    tableau = reconstruct_tableau(word, alpha, beta)
    assert tableau.rows[1] == ()
    assert tableau.content.parts == minimal_content(alpha, beta).parts


def test_good_sequences():
    assert is_good_sequence((1, 1), (2, 1), (1,))
    assert not is_good_sequence((1, 1, 1), (2, 2), (1,))
    assert is_good_sequence((1, 2, 1), (2, 2), (1,))
    assert not is_good_sequence((1, 2, 2), (2, 2), (1,))


def test_minimal_content_rejects_non_containment():
    with pytest.raises(ShapeError):
        minimal_content((2, 1), (3,))
    with pytest.raises(ShapeError):
        minimal_content((2, 1), (2, 1))


@pytest.mark.parametrize("n", range(2, 9))
def test_minimal_content_is_dominance_minimal(n):
    for alpha, beta in contained_pairs(n):
        minimal = minimal_content(alpha, beta)
        assert minimal == sort_to_partition(subtract(alpha, beta))
        decomposition = skew_decomposition(alpha, beta)
        assert decomposition.get(minimal, 0) > 0
        assert all(dominance_leq(minimal, gamma) for gamma in decomposition)


@pytest.mark.parametrize("n", range(2, 9))
def test_minimal_sequence_is_good(n):
    for alpha, beta in contained_pairs(n):
        outer, inner = reduce_equal_rows(alpha, beta)
        word = minimal_sequence(subtract(outer, inner))
        assert in_omega(word, subtract(outer, inner))
        assert is_good_sequence(word, alpha, beta)
        tableau = reconstruct_tableau(word, alpha, beta)
        assert tableau.content.parts == minimal_content(alpha, beta).parts


def test_running_multiplicity_is_dual_to_content():
    assert running_multiplicity((1, 2, 1, 1, 3, 2, 4)) == (1, 1, 2, 3, 1, 2, 1)
    for delta in [(1, 3, 2, 1), (2, 2, 1), (3, 1, 2), (1, 1, 1, 1)]:
        for word in enumerate_omega(delta):
            counts = content(word)
            assert content(running_multiplicity(word)).parts == conjugate(counts.parts).parts


def test_admissible_tuple_rendering():
    tup = AdmissibleTuple(parts=tuple(enumerate_admissible((2, 1), (1, 1, 1))[0].parts), coefficient=2)
    assert str(tup) == "(1) (1) (1)"
    assert tup.multiplicity() == 2


def compositions(n: int):
    for length in range(1, n + 1):
        for parts in enumerate_weak_compositions(n, length):
            if all(parts):
                yield parts


def random_composition(rng: random.Random, n: int):
    cuts = sorted(rng.sample(range(1, n), rng.randint(0, n - 1)))
    bounds = [0] + cuts + [n]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def assert_increasing_on_blocks(values, delta):
    start = 0
    for size in delta:
        block = values[start:start + size]
        assert all(a < b for a, b in zip(block, block[1:])), (values, delta)
        start += size


@pytest.mark.parametrize("n", range(2, 9))
def test_positive_coefficient_implies_containment(n):
    for alpha in enumerate_partitions(n):
        for k in range(1, n):
            for beta in enumerate_partitions(k):
                for gamma in enumerate_partitions(n - k):
                    if lr_coefficient(alpha, beta, gamma) > 0:
                        assert componentwise_leq(beta, alpha)
                        assert componentwise_leq(gamma, alpha)


@pytest.mark.parametrize("n", range(2, 9))
def test_reading_word_separates_tableaux(n):
    for alpha, beta in contained_pairs(n):
        found = enumerate_lr_tableaux(SkewShape(alpha, beta))
        words = {reading_word(tableau) for tableau in found}
        assert len(words) == len(found)
        assert len({tableau.rows for tableau in found}) == len(found)


@pytest.mark.parametrize("n", range(1, 10))
def test_minimal_sequence_block_structure(n):
    for delta in compositions(n):
        word = minimal_sequence(delta)
        start = 0
        for level, size in enumerate(delta, start=1):
            block = word[start:start + size]
            assert block[0] == level
            assert max(block) == level
            start += size
        for i in range(len(word) - 1):
            high, low = word[i], word[i + 1]
            if high > low:
                prefix = word[:i + 1]
                assert prefix.count(low) == prefix.count(high), (delta, word, i)
        expected = tuple(k for size in delta for k in range(1, size + 1))
        assert running_multiplicity(word) == expected


def test_running_multiplicity_increases_on_blocks():
    for n in range(1, 7):
        for delta in compositions(n):
            for word in enumerate_omega(delta):
                assert_increasing_on_blocks(running_multiplicity(word), delta)

    rng = random.Random(1729)
    for _ in range(40):
        delta = random_composition(rng, rng.randint(7, 9))
        words = enumerate_omega(delta)
        for word in rng.sample(words, min(10, len(words))) + [minimal_sequence(delta)]:
            assert_increasing_on_blocks(running_multiplicity(word), delta)
