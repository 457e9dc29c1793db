"""
Property-based tests: generation and inversion of meta-Fibonacci
sequences, ends, and the meta-Fibonacci structure of return times.
"""

import random
from itertools import accumulate

from hypothesis import given, settings
from hypothesis import strategies as st

from errors import BudgetExhausted, NotMetaFib
from metafib.generator import generate, infer_r
from metafib.models import MetaFibSeq, RSpec
from tree_models.random_model import RandomTreeModel
from tree_models.words import fibonacci_end, thue_morse_end
from twd.ends import PeriodicEnd
from twd.returns import ReturnAnalyzer, chain_r_values, verify_theorem

r_tables = st.lists(st.integers(min_value=1, max_value=8), min_size=1, max_size=48)
letters = st.lists(st.integers(min_value=0, max_value=2), max_size=8)


class TestMetaFibProperties:
    """Generation and inversion invariants."""

    @given(r_tables)
    @settings(max_examples=200, deadline=None)
    def test_generate_is_non_decreasing(self, values):
        seq = generate(RSpec.table(dict(enumerate(values, start=1))), len(values))
        assert seq.values[0] >= 1
        assert all(a <= b for a, b in zip(seq.values, seq.values[1:]))

    @given(r_tables)
    @settings(max_examples=200, deadline=None)
    def test_infer_inverts_generate(self, values):
        spec = RSpec.table(dict(enumerate(values, start=1)))
        K = len(values)
        assert infer_r(generate(spec, K)).values(K) == values

    @given(st.lists(st.integers(min_value=0, max_value=6), max_size=30))
    @settings(max_examples=200, deadline=None)
    def test_infer_or_reject(self, steps):
        """Either the sequence is meta-Fibonacci and regenerates, or NotMetaFib names the index."""
        values = list(accumulate([1] + steps))
        seq = MetaFibSeq.from_values(values)
        try:
            r = infer_r(seq)
        except NotMetaFib as e:
            assert 1 <= e.k <= len(values)
            assert e.undershoot < values[e.k - 1] < e.overshoot
        else:
            assert generate(r, seq.K).values == values

    def test_round_trip_seeded(self):
        rng = random.Random(1000)
        for _ in range(1000):
            K = rng.randint(1, 40)
            values = [rng.randint(1, 5) for _ in range(K)]
            spec = RSpec.table(dict(enumerate(values, start=1)))
            assert infer_r(generate(spec, K)).values(K) == values


class TestEndProperties:
    """Address normalisation."""

    @given(letters, letters.filter(bool))
    @settings(max_examples=200, deadline=None)
    def test_normalized_is_same_address(self, pre, period):
        end = PeriodicEnd(tuple(pre), tuple(period))
        normal = end.normalized()
        assert normal.word(40) == end.word(40)
        assert len(normal.preperiod) <= len(pre)
        assert len(normal.period) <= len(period)


class TestReturnTimesAreMetaFibonacci:
    """Minimal return chains on random trees have meta-Fibonacci times."""

    def random_end(self, rng: random.Random) -> PeriodicEnd:
        pre = tuple(rng.randrange(3) for _ in range(rng.randint(0, 6)))
        period = tuple(rng.randrange(3) for _ in range(rng.randint(1, 5)))
        return PeriodicEnd(pre, period)

    def test_random_trees(self):
        for seed in range(500):
            rng = random.Random(seed)
            model = RandomTreeModel(seed, 3, max_level=rng.randint(8, 24))
            # letters beyond a vertex's child count wrap around
            end = model.fit_end(self.random_end(rng))
            analyzer = ReturnAnalyzer(model)
            try:
                chain = analyzer.minimal_return_chain(end, K=12, k_lo=-4)
            except BudgetExhausted as e:
                chain = e.partial

            assert analyzer.is_return_chain(end, chain.levels), seed
            assert all(chain.time(k) == 1 for k in range(-4, 1)), seed
            assert all(a <= b for a, b in zip(chain.times, chain.times[1:])), seed
            if chain.K < 1:
                continue
            assert chain.level(1) == 1 and chain.time(1) == 1, seed

            table = verify_theorem(chain)
            assert sorted(table) == list(range(1, chain.K + 1))
            assert chain_r_values(chain)[:5] == [1] * 5
            regenerated = generate(RSpec.table(table), chain.K).values
            assert regenerated == chain.times[5:], seed

    def test_fitted_word_ends(self):
        bases = [fibonacci_end(), thue_morse_end(), PeriodicEnd((), (0, 1, 1))]
        for seed in range(100):
            model = RandomTreeModel(seed, 3, max_level=24)
            end = model.fit_end(bases[seed % len(bases)])
            analyzer = ReturnAnalyzer(model)
            try:
                chain = analyzer.minimal_return_chain(end, K=12, k_lo=0)
            except BudgetExhausted as e:
                chain = e.partial
            assert analyzer.is_return_chain(end, chain.levels), seed
            if chain.K >= 1:
                assert generate(RSpec.table(verify_theorem(chain)), chain.K).values == chain.times[1:], seed
