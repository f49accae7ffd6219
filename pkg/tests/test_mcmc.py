import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degseq import (
    ChainConfig,
    DegreeSequence,
    InvalidInput,
    NotGraphic,
    enumerate_realizations,
    havel_hakimi_graph,
    make_rng,
    sample,
    switch_connected,
    switch_step,
    tv_distance_to_uniform,
)


class TestHavelHakimi:
    def test_positional_degrees_match(self):
        for degs in ((2, 2, 2), (4, 4, 3, 1, 1, 1, 1, 1), (3, 2, 2, 1), (0, 0)):
            g = havel_hakimi_graph(DegreeSequence(degs))
            assert g.degrees() == degs

    def test_rejects_non_graphic(self):
        with pytest.raises(NotGraphic):
            havel_hakimi_graph(DegreeSequence([3, 3, 1, 1]))
        with pytest.raises(NotGraphic):
            havel_hakimi_graph(DegreeSequence([4, 1, 1]))


class TestSwitchStep:
    def test_unique_realization_is_fixed(self):
        triangle = havel_hakimi_graph(DegreeSequence([2, 2, 2]))
        rng = make_rng(1)
        for _ in range(50):
            assert switch_step(triangle, rng) == triangle
        # complete graph minus one edge is also uniquely realizable
        near_complete = havel_hakimi_graph(DegreeSequence([3, 3, 2, 2]))
        for _ in range(50):
            stepped = switch_step(near_complete, rng)
            assert stepped.degrees() == (3, 3, 2, 2)
            assert stepped == near_complete

    def test_fewer_than_two_edges_is_stationary(self):
        single = havel_hakimi_graph(DegreeSequence([1, 1]))
        rng = make_rng(1)
        assert switch_step(single, rng) == single

    def test_preserves_degrees_along_walk(self):
        g = havel_hakimi_graph(DegreeSequence([3, 2, 2, 2, 1]))
        want = g.degrees()
        rng = make_rng(99)
        for _ in range(300):
            g = switch_step(g, rng)
            assert g.degrees() == want

    @given(st.integers(min_value=0, max_value=2**63 - 1))
    @settings(max_examples=20, deadline=None)
    def test_degree_preservation_any_seed(self, seed):
        g = havel_hakimi_graph(DegreeSequence([2, 2, 1, 1, 1, 1]))
        rng = make_rng(seed)
        out = switch_step(g, rng)
        assert out.degree_sequence() == g.degree_sequence()

    def test_moves_are_reachable(self):
        # the two pairings of a fixed edge pair must both occur
        start = havel_hakimi_graph(DegreeSequence([1, 1, 1, 1]))
        rng = make_rng(5)
        seen = {start.edges()}
        g = start
        for _ in range(200):
            g = switch_step(g, rng)
            seen.add(g.edges())
        assert len(seen) == 3


class TestSample:
    def test_single_state_histogram(self):
        result = sample(DegreeSequence([2, 2, 2]), ChainConfig(seed=3, steps=100))
        assert len(result.histogram) == 1
        assert sum(result.histogram.values()) == 100

    def test_burn_in_excluded(self):
        result = sample(
            DegreeSequence([1, 1, 1, 1]), ChainConfig(seed=3, steps=50, burn_in=25)
        )
        assert sum(result.histogram.values()) == 50

    def test_deterministic_for_fixed_seed(self):
        cfg = ChainConfig(seed=1234, steps=400)
        a = sample(DegreeSequence([2, 2, 1, 1, 1, 1]), cfg)
        b = sample(DegreeSequence([2, 2, 1, 1, 1, 1]), cfg)
        assert a.histogram == b.histogram
        assert a.final == b.final
        assert a.metadata == b.metadata

    def test_metadata_records_rng(self):
        result = sample(DegreeSequence([1, 1]), ChainConfig(seed=9, steps=5))
        assert result.metadata["rng"] == "pcg64"
        assert result.metadata["seed"] == 9

    def test_rejects_non_graphic(self):
        with pytest.raises(NotGraphic):
            sample(DegreeSequence([3, 3, 1, 1]), ChainConfig(seed=0, steps=10))

    def test_config_validation(self):
        with pytest.raises(InvalidInput):
            ChainConfig(seed=0, steps=-1)


class TestStateSpace:
    def test_matchings_connected(self):
        assert switch_connected(DegreeSequence([1, 1, 1, 1]))

    def test_not_graphic_raises(self):
        with pytest.raises(NotGraphic):
            switch_connected(DegreeSequence([3, 3, 1, 1]))

    def test_tv_distance_uniform_histogram_is_zero(self):
        from collections import Counter

        states = [("a",), ("b",), ("c",)]
        hist = Counter({("a",): 10, ("b",): 10, ("c",): 10})
        assert tv_distance_to_uniform(hist, states, 30) == pytest.approx(0.0)

    def test_tv_distance_concentrated_histogram(self):
        from collections import Counter

        states = [("a",), ("b",)]
        hist = Counter({("a",): 30})
        assert tv_distance_to_uniform(hist, states, 30) == pytest.approx(0.5)

    def test_matching_frequencies_near_uniform_at_scale(self):
        seq = DegreeSequence([1, 1, 1, 1])
        steps = 100_000
        result = sample(seq, ChainConfig(seed=8, steps=steps))
        assert len(result.histogram) == 3
        for visits in result.histogram.values():
            assert abs(visits / steps - 1 / 3) < 0.05

    def test_tv_shrinks_with_more_steps(self):
        # instances spanning 3 to 18 realizations
        for degs in ((1, 1, 1, 1), (2, 2, 2, 2), (3, 2, 2, 2, 1), (2, 2, 1, 1, 1, 1)):
            seq = DegreeSequence(degs)
            states = [g.canonical_key() for g in enumerate_realizations(seq)]
            assert len(states) <= 50
            distances = []
            for steps in (40, 40000):
                result = sample(seq, ChainConfig(seed=11, steps=steps))
                distances.append(
                    tv_distance_to_uniform(result.histogram, states, steps)
                )
            assert distances[1] < distances[0], degs
            assert distances[1] < 0.05, degs
