"""
Tests for the built-in models, the word generators and the border oracle.
"""

import json
import random

import pytest

from errors import AddressOutOfRange, BudgetExhausted, ModelFormatError, NonPositiveShift, NoSuchLevel
from tree_models.binary import BinaryModel
from tree_models.catalog import CATALOG, resolve_end, resolve_model
from tree_models.oracle import border_array, oracle_chain_times, oracle_first_return, oracle_minimal_chain
from tree_models.random_model import RandomTreeModel
from tree_models.table import TableTreeModel
from tree_models.words import (
    WordName,
    fibonacci,
    fibonacci_end,
    periodic,
    random_word,
    thue_morse,
    word_generators,
)
from tree_models.z2 import Z2Model, Z2Variant
from twd.ends import PeriodicEnd
from twd.models import VertexRef
from twd.returns import ReturnAnalyzer, verify_theorem
from twd.validator import check_polynomial_properties, validate

FIB_LEVELS = [0, 1, 3, 6, 11, 19, 32, 53, 87, 142, 231, 375, 608]

LINE_MODEL = {
    "levels": [-1, 2],
    "vertices": [
        {"id": "top", "level": -1},
        {"id": "root", "level": 0, "parent": "top"},
        {"id": "a", "level": 1, "parent": "root"},
        {"id": "b", "level": 1, "parent": "root"},
        {"id": "a0", "level": 2, "parent": "a"},
        {"id": "b0", "level": 2, "parent": "b"},
    ],
    "F": [
        {"from": "root", "to": "top"},
        {"from": "a", "to": "root"},
        {"from": "b", "to": "root"},
        {"from": "a0", "to": "b"},
        {"from": "b0", "to": "a"},
    ],
}


def as_end(word: str) -> PeriodicEnd:
    return PeriodicEnd(tuple(int(c) for c in word), (0,))


class TestBorderOracle:
    """Test the brute-force border array."""

    def test_examples(self):
        assert border_array("01001") == [0, 0, 1, 1, 2]
        assert border_array("00000") == [0, 1, 2, 3, 4]
        assert border_array("01") == [0, 0]

    def test_empty_word(self):
        with pytest.raises(ValueError):
            border_array("")

    def test_first_return_examples(self):
        assert oracle_first_return("01001", 5) == 3
        assert oracle_first_return(PeriodicEnd(), 17) == 1
        assert oracle_first_return(PeriodicEnd.parse("", "01"), 6) == 2

    def test_word_too_short(self):
        with pytest.raises(ValueError):
            oracle_first_return("010", 5)

    def test_chain_examples(self):
        assert oracle_minimal_chain(PeriodicEnd(), 5, scan=16) == [0, 1, 2, 3, 4, 5]
        levels = oracle_minimal_chain(PeriodicEnd.parse("", "01"), 5, scan=32)
        assert oracle_chain_times(levels)[1:] == [2, 2, 2, 2]

    def test_no_such_level(self):
        with pytest.raises(NoSuchLevel) as exc:
            oracle_minimal_chain("0111", 3)
        assert exc.value.levels == [0, 1]


class TestOracleEquivalence:
    """The engine on the binary model agrees with the border oracle."""

    def setup_method(self):
        self.analyzer = ReturnAnalyzer(BinaryModel())

    def test_random_words(self):
        rng = random.Random(2024)
        for case in range(500):
            word = random_word(case, rng.randint(1, 64))
            end = as_end(word)
            for level in range(1, len(word) + 1):
                assert oracle_first_return(word, level) == self.analyzer.first_return(end, level).n

            with pytest.raises(NoSuchLevel) as exc:
                oracle_minimal_chain(word, len(word) + 1)
            levels = exc.value.levels
            chain = self.analyzer.minimal_return_chain(end, K=len(levels) - 1, k_lo=0)
            assert chain.levels == levels, word

    def test_fibonacci_long_chain(self):
        """Chain times run through the Fibonacci numbers up to 233."""
        levels = oracle_minimal_chain(fibonacci(700), 12)
        assert levels == FIB_LEVELS
        times = oracle_chain_times(levels)
        assert times == [1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233]

        chain = self.analyzer.minimal_return_chain(fibonacci_end(), K=12, k_lo=0)
        assert chain.levels == FIB_LEVELS
        assert chain.times[1:] == times


class TestWords:
    """Test the deterministic word generators."""

    def test_fibonacci(self):
        assert fibonacci(8) == "01001010"
        assert word_generators(WordName.FIBONACCI, 8) == "01001010"

    def test_periodic(self):
        assert periodic("01", 4) == "0101"
        assert word_generators("periodic", 5, block="110") == "11011"

    def test_thue_morse(self):
        assert thue_morse(8) == "01101001"

    def test_random_reproducible(self):
        assert random_word(1, 16) == random_word(1, 16)
        assert len(word_generators(WordName.RANDOM, 16, seed=1)) == 16

    def test_invalid_length(self):
        with pytest.raises(ValueError):
            word_generators(WordName.FIBONACCI, 0)


class TestBinaryModel:
    """Test the disconnected quadratic tree."""

    def setup_method(self):
        self.model = BinaryModel()

    def test_shift_dynamics(self):
        assert self.model.image(VertexRef(3, "101")) == VertexRef(2, "01")
        assert self.model.parent(VertexRef(3, "101")) == VertexRef(2, "10")
        assert self.model.image(VertexRef(1, "1")) == VertexRef(0, "")

    def test_validate_deep(self):
        report = validate(self.model, 12)
        assert report.clean
        assert report.H == 1

    def test_polynomial_properties(self):
        assert check_polynomial_properties(self.model, 8).clean

    def test_rejects_foreign_vertices(self):
        with pytest.raises(AddressOutOfRange):
            self.model.children(VertexRef(2, "0"))

    def test_search_bound(self):
        assert self.model.return_search_bound(PeriodicEnd.parse("1", "0")) == 4
        assert self.model.return_search_bound(PeriodicEnd.parse("", "01")) is None
        assert self.model.return_search_bound(fibonacci_end()) is None


class TestZ2Model:
    """Test the Z^2 counter-example trees."""

    def test_children_of_zero(self):
        model = Z2Model(1, width=3)
        kids = model.children(Z2Model.vertex(0, 0))
        assert [int(v.id) for v in kids] == [0, 1, -1, -2, -3]
        assert model.children(Z2Model.vertex(0, -2)) == []

    def test_parent_rule(self):
        model = Z2Model(1)
        assert model.parent(Z2Model.vertex(3, 5)) == Z2Model.vertex(2, 2)
        assert model.parent(Z2Model.vertex(3, -5)) == Z2Model.vertex(2, 0)

    def test_variants(self):
        v = Z2Model.vertex(4, 6)
        assert Z2Model(2, Z2Variant.F).image(v) == Z2Model.vertex(2, 6)
        assert Z2Model(2, Z2Variant.G).image(v) == Z2Model.vertex(2, 0)

    def test_chain_is_meta_fibonacci(self):
        chain = ReturnAnalyzer(Z2Model(2)).minimal_return_chain(PeriodicEnd(), K=6, k_lo=0)
        assert chain.times == [1] * 7
        assert chain.levels == [0, 2, 4, 6, 8, 10, 12]
        assert verify_theorem(chain)

    def test_non_positive_shift_rejected(self):
        for H in (0, -1):
            with pytest.raises(NonPositiveShift):
                ReturnAnalyzer(Z2Model(H)).minimal_return_chain(PeriodicEnd(), K=2)


class TestTableModel:
    """Test JSON table models."""

    def setup_method(self):
        self.model = TableTreeModel.from_json(LINE_MODEL)

    def test_rooted_line(self):
        assert self.model.rooted
        assert self.model.anchor() == VertexRef(0, "root")
        top = VertexRef(-1, "top")
        assert self.model.parent(top).level == -2
        assert self.model.children(self.model.parent(top)) == [top]
        assert self.model.image(top).level == -2

    def test_validate_clean(self):
        report = validate(self.model, 3)
        assert report.clean, report.violations
        assert report.H == 1

    def test_chain(self):
        end = PeriodicEnd((0,), (0,))
        chain = ReturnAnalyzer(self.model).minimal_return_chain(end, K=1, k_lo=-2)
        assert chain.levels == [-2, -1, 0, 1]
        assert chain.times == [1, 1, 1, 1]

    def test_chain_runs_off_the_window(self):
        """x_2 = a0 returns onto x_0, so level 1 needs a level beyond the table."""
        with pytest.raises(BudgetExhausted) as exc:
            ReturnAnalyzer(self.model).minimal_return_chain(PeriodicEnd(), K=2, k_lo=0)
        assert exc.value.partial.levels == [0, 1]

    def test_file_round_trip(self, tmp_path):
        path = tmp_path / "model.json"
        path.write_text(json.dumps(self.model.to_json()))
        again = TableTreeModel.from_json(path)
        assert again.to_json() == self.model.to_json()
        assert again.name == f"json:{path}"

    def test_duplicate_id(self):
        data = dict(LINE_MODEL, vertices=LINE_MODEL["vertices"] + [{"id": "a", "level": 1}])
        with pytest.raises(ModelFormatError):
            TableTreeModel.from_json(data)

    def test_reserved_prefix(self):
        data = dict(LINE_MODEL, vertices=LINE_MODEL["vertices"] + [{"id": "~x", "level": 2}])
        with pytest.raises(ModelFormatError):
            TableTreeModel.from_json(data)

    def test_unknown_parent(self):
        data = dict(LINE_MODEL, vertices=LINE_MODEL["vertices"] + [{"id": "c", "level": 2, "parent": "zz"}])
        with pytest.raises(ModelFormatError):
            TableTreeModel.from_json(data)

    def test_unknown_image(self):
        data = dict(LINE_MODEL, F=LINE_MODEL["F"] + [{"from": "a0", "to": "nowhere"}])
        with pytest.raises(ModelFormatError):
            TableTreeModel.from_json(data)

    def test_periodic_extension_unsupported(self):
        with pytest.raises(ModelFormatError):
            TableTreeModel.from_json(dict(LINE_MODEL, periodic_extension={"period": 1}))

    def test_malformed(self, tmp_path):
        with pytest.raises(ModelFormatError):
            TableTreeModel.from_json({"vertices": []})
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        with pytest.raises(ModelFormatError):
            TableTreeModel.from_json(bad)

    def test_beyond_window(self):
        with pytest.raises(AddressOutOfRange):
            self.model.image(VertexRef(5, "a0"))

    def test_empty_bottom_level(self):
        data = {"levels": [1, 2], "vertices": [{"id": "a0", "level": 2}]}
        with pytest.raises(ModelFormatError):
            TableTreeModel.from_json(data)

    def test_window_above_zero(self):
        single = TableTreeModel.from_json({
            "levels": [1, 2],
            "vertices": [{"id": "a", "level": 1}, {"id": "a0", "level": 2, "parent": "a"}],
        })
        assert single.rooted
        assert single.anchor() == VertexRef(0, "~0")
        assert single.children(single.anchor()) == [VertexRef(1, "a")]

        two = {"levels": [1, 2], "vertices": [{"id": "a", "level": 1}, {"id": "b", "level": 1}]}
        assert not TableTreeModel.from_json(two).rooted
        with pytest.raises(ModelFormatError):
            TableTreeModel.from_json(dict(two, root_line=True))


class TestRandomModel:
    """Test seeded random trees."""

    def test_deterministic(self):
        a, b = RandomTreeModel(11), RandomTreeModel(11)
        for level in range(1, 5):
            va = a.level_vertices(level)
            assert va == b.level_vertices(level)
            assert [a.image(v) for v in va] == [b.image(v) for v in va]

    def test_order_independent(self):
        """Images do not depend on the exploration order."""
        a, b = RandomTreeModel(5), RandomTreeModel(5)
        deep = a.level_vertices(4)
        first = [a.image(v) for v in deep]
        b.level_vertices(2)
        assert [b.image(v) for v in reversed(deep)] == list(reversed(first))

    def test_root_branches(self):
        for seed in range(30):
            assert len(RandomTreeModel(seed).children(VertexRef(0, ""))) >= 2

    def test_is_tree_with_dynamics(self):
        for seed in range(10):
            model = RandomTreeModel(seed, 3)
            report = check_polynomial_properties(model, 6)
            assert report.clean, report.violations
            assert report.H == 1

    def test_bounded_depth(self):
        model = RandomTreeModel(3, 3, max_level=4)
        assert validate(model, 8).clean
        with pytest.raises(AddressOutOfRange):
            model.image(VertexRef(5, "00000"))

    def test_fit_end(self):
        model = RandomTreeModel(8)
        end = model.fit_end(fibonacci_end())
        trace_word = end.word(20)
        vid = ""
        for letter in trace_word:
            assert int(letter) < len(model.children(VertexRef(len(vid), vid)))
            vid += letter

    def test_invalid_branching(self):
        with pytest.raises(ValueError):
            RandomTreeModel(1, 1)


class TestCatalog:
    """Test model and end references."""

    def test_models(self):
        assert isinstance(resolve_model("binary"), BinaryModel)
        model = resolve_model("z2:G:3")
        assert isinstance(model, Z2Model)
        assert model.H == 3
        assert model.variant == Z2Variant.G
        random_model = resolve_model("random:5:3:10")
        assert random_model.max_branching == 3
        assert random_model.max_level == 10

    def test_json_model(self, tmp_path):
        path = tmp_path / "m.json"
        path.write_text(json.dumps(LINE_MODEL))
        assert resolve_model(f"json:{path}").anchor() == VertexRef(0, "root")

    def test_ends(self):
        assert resolve_end("periodic:01") == PeriodicEnd((), (0, 1))
        assert resolve_end("word:1:0") == PeriodicEnd((1,), (0,))
        assert resolve_end("word::10") == PeriodicEnd((), (1, 0))
        assert resolve_end("fib").word(8) == "01001010"
        assert resolve_end("tm").word(8) == "01101001"

    @pytest.mark.parametrize("ref", ["nope", "z2:F", "z2:X:1", "random:x", "random:1:1"])
    def test_bad_model_refs(self, ref):
        with pytest.raises(ModelFormatError):
            resolve_model(ref)

    @pytest.mark.parametrize("ref", ["periodic:", "periodic:0a", "word:1", "cantor"])
    def test_bad_end_refs(self, ref):
        with pytest.raises(ModelFormatError):
            resolve_end(ref)

    def test_listing(self):
        names = [m["name"] for m in CATALOG.get_all_models()]
        assert names == ["binary", "z2:F", "z2:G", "json", "random"]
        assert {e["name"] for e in CATALOG.get_all_ends()} == {"fib", "tm", "periodic", "word"}
