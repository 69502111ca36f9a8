import json
import math
import random

import pytest

from cayley_spectra.config import EngineConfig
from cayley_spectra.errors import CapExceededError, ShapeError
from cayley_spectra.lr import AdmissibleTuple, enumerate_admissible, iter_admissible_star
from cayley_spectra.models import (
    ROUTE_COMPLETE_GRAPH,
    ROUTE_RELAXED_BOUND,
    AldousReport,
    MultipartiteShape,
    SpectrumMultiset,
    render_json,
)
from cayley_spectra.partitions import (
    Partition,
    WeakComposition,
    dimension,
    dominance_leq,
    enumerate_partitions,
    q_value,
)
from cayley_spectra.spectra import (
    b_bar,
    b_bar_enumerated,
    b_value,
    block_spectrum,
    cayley_spectrum,
    complete_graph_block,
    graph_spectrum,
    inner_product_form,
    lambda_max,
    relaxed_chain,
    restriction_n_minus_1,
    spectral_gap_cayley,
    spectral_gap_graph,
    verify_aldous,
)

BLOCK_421_ON_43 = {-3: 2, -2: 3, 0: 2, 1: 12, 2: 3, 3: 4, 4: 3, 5: 6}


def shapes(n: int, connected: bool = False):
    return [MultipartiteShape(eta) for eta in enumerate_partitions(n) if not connected or len(eta) >= 2]


def config(**changes) -> EngineConfig:
    return EngineConfig(**changes)


def test_shape_basics():
    shape = MultipartiteShape.from_text("4,3")
    assert shape.n == 7
    assert shape.p == 2
    assert shape.edge_count == 12
    assert shape.vertex_blocks() == [(1, 2, 3, 4), (5, 6, 7)]
    assert len(shape.edges()) == 12
    assert str(shape) == "K(4,3)"
    assert MultipartiteShape(Partition((1, 1, 1))).is_complete_graph


def test_block_421_on_43():
    spectrum = block_spectrum((4, 2, 1), (4, 3))
    assert spectrum.as_dict() == BLOCK_421_ON_43
    assert set(spectrum.distinct()) == {-3, -2, 1, 4, 0, 3, 2, 5}
    assert spectrum.total == 35
    assert lambda_max((4, 2, 1), (4, 3)) == 5


def test_b_value_both_paths():
    alpha = (4, 2, 1)
    exact = AdmissibleTuple(parts=(Partition((2, 1, 1)), Partition((2, 1))))
    assert b_value(alpha, exact) == 5
    relaxed = AdmissibleTuple(parts=(WeakComposition((2, 1, 1)), WeakComposition((2, 1, 0))))
    assert inner_product_form(relaxed) == 5
    assert b_value(alpha, relaxed) == 5
    assert b_value(alpha, AdmissibleTuple(parts=(Partition(alpha),))) == 0


@pytest.mark.parametrize("n", range(2, 9))
def test_b_value_paths_agree_on_relaxed_tuples(n):
    for eta in enumerate_partitions(n):
        for alpha in enumerate_partitions(n):
            for tup in iter_admissible_star(alpha, eta):
                assert b_value(alpha, tup) == inner_product_form(tup)


def random_relaxed_tuple(rng: random.Random, alpha: Partition, eta: Partition) -> AdmissibleTuple:
    # deal the boxes of alpha, labelled by row, into blocks of sizes eta
    labels = [row for row, size in enumerate(alpha.parts) for _ in range(size)]
    rng.shuffle(labels)
    parts, start = [], 0
    for size in eta.parts:
        chunk = labels[start:start + size]
        parts.append(WeakComposition(tuple(chunk.count(row) for row in range(len(alpha)))))
        start += size
    return AdmissibleTuple(parts=tuple(parts))


def test_b_value_paths_agree_on_random_relaxed_tuples():
    rng = random.Random(4096)
    for _ in range(2_000):
        n = rng.randint(2, 12)
        partitions = enumerate_partitions(n)
        alpha, eta = rng.choice(partitions), rng.choice(partitions)
        tup = random_relaxed_tuple(rng, alpha, eta)
        assert tup.sizes() == eta.parts
        value = inner_product_form(tup)
        assert b_value(alpha, tup) == value
        assert value <= b_bar(alpha, eta)


def test_small_shape_values():
    assert lambda_max((2, 1, 1), (3, 1)) == 1
    assert lambda_max((2, 2), (3, 1)) == 0
    assert lambda_max((2, 2), (2, 2)) == 2
    assert lambda_max((3, 1), (2, 2)) == 2
    assert 2 in block_spectrum((3, 1), (2, 2)).distinct()


def test_complete_graph_blocks():
    assert complete_graph_block((2, 1)).as_dict() == {0: 2}
    for n in range(1, 8):
        assert complete_graph_block((n,)).as_dict() == {n * (n - 1) // 2: 1}
        assert complete_graph_block((1,) * n).as_dict() == {-n * (n - 1) // 2: 1}
        for alpha in enumerate_partitions(n):
            assert block_spectrum(alpha, (1,) * n) == complete_graph_block(alpha)


def test_trivial_block_sees_edge_count():
    for n in range(1, 9):
        for shape in shapes(n):
            assert block_spectrum((n,), shape).as_dict() == {shape.edge_count: 1}
            assert b_bar((n,), shape) == shape.edge_count


def test_single_block_shape_is_degenerate():
    assert block_spectrum((2, 1), (3,)).as_dict() == {0: 2}
    with pytest.raises(ShapeError):
        spectral_gap_graph((3,))
    with pytest.raises(ShapeError):
        spectral_gap_cayley((3,))
    with pytest.raises(ShapeError):
        verify_aldous((3,))


def test_size_mismatch_is_rejected():
    with pytest.raises(ShapeError):
        block_spectrum((2, 1), (2, 2))
    with pytest.raises(ShapeError):
        lambda_max((3,), (1, 1))
    with pytest.raises(ShapeError):
        b_bar((3,), (2, 2))


@pytest.mark.parametrize("n", range(1, 9))
def test_block_totals_and_trace_identity(n):
    for shape in shapes(n):
        for alpha in enumerate_partitions(n):
            spectrum = block_spectrum(alpha, shape)
            f = dimension(alpha)
            assert spectrum.total == f
            assert n * (n - 1) * spectrum.trace() == 2 * shape.edge_count * q_value(alpha) * f


@pytest.mark.parametrize("n", range(2, 9))
def test_closed_form_gap(n):
    for shape in shapes(n):
        if shape.is_complete_graph:
            continue
        eta_1 = shape.eta.parts[0]
        assert lambda_max((n - 1, 1), shape) == shape.edge_count - n + eta_1
        if shape.p >= 2:
            assert spectral_gap_graph(shape) == n - eta_1


def test_gap_values():
    assert spectral_gap_graph((4, 3)) == 3
    assert spectral_gap_graph((1,) * 6) == 6
    assert spectral_gap_graph((5, 1)) == 1
    assert spectral_gap_cayley((4, 3)) == 3
    assert spectral_gap_cayley((2, 2)) == 2
    assert spectral_gap_cayley((1, 1)) == 2


@pytest.mark.parametrize("n", range(2, 9))
def test_relaxed_bound_properties(n):
    standard = (n - 1, 1)
    for shape in shapes(n):
        for alpha in enumerate_partitions(n):
            assert lambda_max(alpha, shape) <= b_bar(alpha, shape)
        if shape.is_complete_graph:
            assert b_bar(standard, shape) == lambda_max(standard, shape) + 1
            assert b_bar(standard, shape) == shape.edge_count - n + 1
        else:
            assert b_bar(standard, shape) == lambda_max(standard, shape)
            assert b_bar(standard, shape) == shape.edge_count - n + shape.eta.parts[0]


@pytest.mark.parametrize("n", range(2, 9))
def test_relaxed_bound_is_monotone(n):
    partitions = enumerate_partitions(n)
    for shape in shapes(n):
        values = {alpha: b_bar(alpha, shape) for alpha in partitions}
        for a in partitions:
            for b in partitions:
                if dominance_leq(a, b):
                    assert values[a] <= values[b]


@pytest.mark.parametrize("n", range(1, 7))
def test_relaxed_bound_matches_enumeration(n):
    for shape in shapes(n):
        for alpha in enumerate_partitions(n):
            assert b_bar(alpha, shape) == b_bar_enumerated(alpha, shape)


def test_relaxed_chain():
    chain = relaxed_chain((3, 1), (2, 2))
    assert chain.holds
    assert chain.b == 2
    assert chain.b_standard == chain.b_bar_standard == 2
    with pytest.raises(ShapeError):
        relaxed_chain((2, 1), (1, 1, 1))


def test_restriction_n_minus_1_of_43():
    rows = [(tuple(p.parts for p in tup.parts), tup.coefficient) for tup in restriction_n_minus_1((4, 3))]
    assert rows == [(((4,), (3,)), 1), (((4,), (2, 1)), 1), (((3, 1), (3,)), 1)]
    complete = restriction_n_minus_1((1, 1, 1, 1))
    assert len(complete) == 1
    assert complete[0].coefficient == 3


@pytest.mark.parametrize("n", range(2, 9))
def test_restriction_n_minus_1_matches_lr(n):
    for shape in shapes(n):
        closed = restriction_n_minus_1(shape)
        assert closed == enumerate_admissible((n - 1, 1), shape.eta)
        assert sum(tup.multiplicity() for tup in closed) == n - 1


def test_graph_spectrum():
    assert graph_spectrum((4, 3)).as_dict() == {0: 1, 3: 3, 4: 2, 7: 1}
    assert graph_spectrum((2, 2)).eigenvalues() == [0, 2, 2, 4]
    assert graph_spectrum((1,) * 5).as_dict() == {0: 1, 5: 4}
    assert graph_spectrum((1,)).as_dict() == {0: 1}
    for n in range(2, 9):
        for shape in shapes(n):
            spectrum = graph_spectrum(shape)
            assert spectrum.total == n
            assert spectrum.trace() == 2 * shape.edge_count


def test_cayley_spectrum_small():
    assert cayley_spectrum((1, 1)).as_dict() == {0: 1, 2: 1}
    path = cayley_spectrum((2, 1))
    assert path.total == 6
    assert path.min == 0
    assert path.trace() == 12


@pytest.mark.parametrize("n", range(2, 8))
def test_cayley_spectrum_totals(n):
    for shape in shapes(n, connected=True):
        spectrum = cayley_spectrum(shape)
        assert spectrum.total == math.factorial(n)
        assert spectrum.trace() == math.factorial(n) * shape.edge_count
        assert spectrum.multiplicity(0) == 1
        assert spectrum.distinct()[1] == spectral_gap_cayley(shape)


def test_caps_are_enforced():
    with pytest.raises(CapExceededError):
        cayley_spectrum((5, 4), config())
    with pytest.raises(CapExceededError):
        verify_aldous((3, 3), config(max_n=5))
    with pytest.raises(CapExceededError):
        spectral_gap_cayley((3, 3), config(max_n=5))
    assert block_spectrum((9,), (5, 4)).as_dict() == {20: 1}


def test_verify_aldous_k22_has_two_maximisers():
    report = verify_aldous((2, 2))
    assert report.verdict
    assert report.gap_graph == report.gap_cayley == 2
    assert set(report.argmax) == {Partition((3, 1)), Partition((2, 2))}
    assert not report.strict
    assert report.gap_multiplicity_graph == 2
    assert report.gap_multiplicity_cayley == 8
    assert report.route == ROUTE_RELAXED_BOUND
    assert report.chain_verified


def test_verify_aldous_k43():
    report = verify_aldous((4, 3))
    assert report.verdict
    assert report.gap_graph == report.gap_cayley == 3
    assert report.block((4, 2, 1)).lambda_max == 5
    assert Partition((7,)) not in [block.alpha for block in report.per_alpha]
    assert len(report.per_alpha) == len(enumerate_partitions(7)) - 1


@pytest.mark.parametrize("n", range(2, 9))
def test_complete_graph_uses_direct_route(n):
    report = verify_aldous((1,) * n)
    assert report.verdict
    assert report.gap_graph == report.gap_cayley == n
    assert report.route == ROUTE_COMPLETE_GRAPH
    assert report.chain_verified
    assert all(block.b_bar is None for block in report.per_alpha)


@pytest.mark.parametrize("n", range(2, 9))
def test_gap_sweep(n):
    for shape in shapes(n, connected=True):
        report = verify_aldous(shape)
        top = lambda_max((n - 1, 1), shape)
        assert report.verdict
        assert report.chain_verified
        assert report.gap_cayley == report.gap_graph
        assert all(block.lambda_max <= top for block in report.per_alpha)
        assert Partition((n - 1, 1)) in report.argmax


def test_report_payload_roundtrip():
    report = verify_aldous((3, 2))
    payload = report.to_payload()
    assert payload["eta"] == [3, 2]
    assert payload["gap_graph"] == "2"
    assert isinstance(payload["blocks"][0]["spectrum"][0][0], str)
    restored = AldousReport.from_payload(json.loads(render_json(payload)))
    assert restored.to_payload() == payload
    text = render_json(payload)
    assert render_json(json.loads(text)) == text


def test_spectrum_multiset_operations():
    spectrum = SpectrumMultiset(((2, 1), (0, 1), (2, 2)))
    assert spectrum.entries == ((0, 1), (2, 3))
    assert spectrum.reflected(4).as_dict() == {2: 3, 4: 1}
    assert spectrum.scaled(2).total == 8
    assert SpectrumMultiset.from_payload(spectrum.to_payload()) == spectrum
    with pytest.raises(ShapeError):
        SpectrumMultiset(((1, 0),))
