"""Ground sets, base matroids, views, greedy, and the instance file format."""

import io
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from matsec import (
    DomainError,
    GraphicMatroid,
    MatroidView,
    PreconditionError,
    UniformMatroid,
    WeightedGroundSet,
    dump_instance,
    parse_instance,
)
from matsec.matroid import format_weight


# -- weighted ground sets ------------------------------------------------------


class TestWeightedGroundSet:
    def test_order_and_ranks(self):
        ws = WeightedGroundSet.from_weights([3, 1, 4, 2])
        assert ws.count == 4
        assert ws.order() == (2, 0, 3, 1)
        assert [ws.rank_of(u) for u in range(4)] == [1, 3, 0, 2]
        assert ws.heavier(0, 1)
        assert not ws.heavier(1, 0)
        assert ws.sort_desc([1, 3]) == [3, 1]
        assert ws.total([0, 3]) == Fraction(5)
        assert ws.total([]) == Fraction(0)
        assert ws.weight(2) == Fraction(4)

    def test_default_labels(self):
        ws = WeightedGroundSet.from_weights([5, 7])
        assert ws.label(0) == "u0" and ws.label(1) == "u1"

    def test_fractional_weights(self):
        ws = WeightedGroundSet.from_weights([Fraction(1, 3), 0.5, "2/7"])
        assert ws.weight(0) == Fraction(1, 3)
        assert ws.weight(1) == Fraction(1, 2)
        assert ws.weight(2) == Fraction(2, 7)

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError, match="distinct"):
            WeightedGroundSet.from_weights([1, 2, 1])

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError, match="positive"):
            WeightedGroundSet.from_weights([0])
        with pytest.raises(ValueError, match="positive"):
            WeightedGroundSet.from_weights([2, -1])

    def test_rejects_label_mismatch(self):
        with pytest.raises(ValueError, match="equal length"):
            WeightedGroundSet((Fraction(1),), ("a", "b"))

    def test_rejects_raw_floats(self):
        with pytest.raises(ValueError, match="from_weights"):
            WeightedGroundSet((1.5,), ("a",))

    @given(st.lists(st.integers(1, 10**6), min_size=1, max_size=12, unique=True))
    def test_order_is_descending_permutation(self, raw):
        ws = WeightedGroundSet.from_weights(raw)
        order = ws.order()
        assert sorted(order) == list(range(len(raw)))
        values = [ws.weight(u) for u in order]
        assert values == sorted(values, reverse=True)
        for pos, u in enumerate(order):
            assert ws.rank_of(u) == pos


# -- base matroids and views ---------------------------------------------------


def triangle_base():
    return GraphicMatroid(3, ((0, 1), (1, 2), (2, 0)))


class TestUniformView:
    def test_independence_and_rank(self):
        view = MatroidView.full(UniformMatroid(4, 2))
        assert view.is_independent([])
        assert view.is_independent([0])
        assert view.is_independent([0, 3])
        assert not view.is_independent([0, 1, 2])
        assert view.rank([0, 1, 2]) == 2
        assert view.rank([]) == 0

    def test_span(self):
        view = MatroidView.full(UniformMatroid(4, 2))
        assert view.span([0, 1]) == frozenset(range(4))
        assert view.span([0]) == frozenset({0})
        assert view.span([]) == frozenset()

    def test_zero_capacity_spans_everything(self):
        view = MatroidView.full(UniformMatroid(3, 0))
        assert view.span([]) == frozenset(range(3))
        assert not view.is_independent([0])

    def test_greedy_takes_top_k(self):
        view = MatroidView.full(UniformMatroid(4, 2))
        ws = WeightedGroundSet.from_weights([3, 1, 4, 2])
        assert view.greedy_mwb(ws) == frozenset({2, 0})
        assert view.greedy_mwb(ws, [1, 3]) == frozenset({1, 3})

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            UniformMatroid(4, 5)
        with pytest.raises(ValueError):
            UniformMatroid(-1, 0)
        with pytest.raises(ValueError):
            UniformMatroid(3, -1)


class TestGraphicView:
    def test_cycle_is_dependent(self):
        view = MatroidView.full(triangle_base())
        assert view.is_independent([0, 1])
        assert not view.is_independent([0, 1, 2])
        assert view.rank([0, 1, 2]) == 2
        assert view.span([0, 1]) == frozenset({0, 1, 2})

    def test_self_loop(self):
        view = MatroidView.full(GraphicMatroid(1, ((0, 0),)))
        assert not view.is_independent([0])
        assert view.span([]) == frozenset({0})

    def test_parallel_edges(self):
        view = MatroidView.full(GraphicMatroid(2, ((0, 1), (0, 1))))
        assert view.is_independent([0])
        assert not view.is_independent([0, 1])
        assert view.span([1]) == frozenset({0, 1})

    def test_endpoint_validation(self):
        with pytest.raises(ValueError, match="out of range"):
            GraphicMatroid(2, ((0, 2),))

    def test_greedy_on_chorded_cycle(self):
        # 4-cycle 0-1-2-3 plus the chord (0, 2); the heavy chord and the two
        # heaviest cycle edges that avoid closing a triangle win
        base = GraphicMatroid(4, ((0, 1), (1, 2), (2, 3), (3, 0), (0, 2)))
        ws = WeightedGroundSet.from_weights([4, 3, 2, 1, 5])
        view = MatroidView.full(base)
        assert view.greedy_mwb(ws) == frozenset({4, 0, 2})
        assert view.greedy_mwb(ws, [1, 2, 3]) == frozenset({1, 2, 3})


class TestMinors:
    def p4_chord(self):
        # path 0-1-2-3 with chord (0, 2); edges a=0, b=1, c=2, d=3
        return MatroidView.full(
            GraphicMatroid(4, ((0, 1), (1, 2), (2, 3), (0, 2))))

    def test_contract_merges_endpoints(self):
        minor = self.p4_chord().contract([0])
        assert minor.ground == frozenset({1, 2, 3})
        assert not minor.is_independent([1, 3])   # b and d go parallel
        assert minor.rank([1, 2, 3]) == 2
        assert minor.span([1]) == frozenset({1, 3})

    def test_restrict_shrinks_ground(self):
        sub = self.p4_chord().restrict([0, 1, 3])
        assert sub.ground == frozenset({0, 1, 3})
        assert not sub.is_independent([0, 1, 3])
        with pytest.raises(DomainError):
            sub.is_independent([2])

    def test_minors_compose(self):
        view = self.p4_chord().restrict([0, 1, 2, 3]).contract([2])
        assert view.ground == frozenset({0, 1, 3})
        assert view.rank(view.ground) == 2

    def test_contract_requires_independent(self):
        with pytest.raises(PreconditionError):
            self.p4_chord().contract([0, 1, 3])
        with pytest.raises(PreconditionError):
            MatroidView(triangle_base(), frozenset({0, 1, 2}),
                        frozenset({0, 1, 2}))

    def test_domain_errors(self):
        minor = self.p4_chord().contract([0])
        with pytest.raises(DomainError):
            minor.rank([0])
        with pytest.raises(DomainError):
            minor.greedy_mwb(WeightedGroundSet.from_weights([1, 2, 3, 4]), [0, 1])
        with pytest.raises(DomainError):
            MatroidView(triangle_base(), frozenset({0, 5}), frozenset())

    def test_contracted_uniform_capacity(self):
        minor = MatroidView.full(UniformMatroid(5, 3)).contract([4])
        assert minor.rank(minor.ground) == 2
        assert minor.is_independent([0, 1])
        assert not minor.is_independent([0, 1, 2])
        ws = WeightedGroundSet.from_weights([1, 2, 3, 4, 5])
        assert minor.greedy_mwb(ws) == frozenset({2, 3})


# -- view properties under random small graphs ---------------------------------


small_graphs = st.builds(
    GraphicMatroid,
    st.just(4),
    st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)),
             min_size=1, max_size=6).map(tuple),
)


@given(small_graphs, st.data())
def test_span_is_monotone_idempotent_closure(base, data):
    view = MatroidView.full(base)
    elems = sorted(view.ground)
    S = frozenset(data.draw(st.sets(st.sampled_from(elems), max_size=len(elems))))
    T = frozenset(data.draw(st.sets(st.sampled_from(elems), max_size=len(elems))))
    span_s = view.span(S)
    assert S <= span_s
    assert view.span(span_s) == span_s
    if S <= T:
        assert span_s <= view.span(T)
    assert view.rank(span_s) == view.rank(S)


@given(small_graphs, st.data())
def test_independence_is_downward_closed(base, data):
    view = MatroidView.full(base)
    elems = sorted(view.ground)
    S = data.draw(st.sets(st.sampled_from(elems), max_size=len(elems)))
    sub = data.draw(st.sets(st.sampled_from(elems or [0]), max_size=len(S))) & S
    if view.is_independent(S):
        assert view.is_independent(sub)
    assert view.rank(S) <= len(S)


# -- file format ----------------------------------------------------------------


class TestFormatWeight:
    @pytest.mark.parametrize("w, text", [
        (Fraction(3), "3"),
        (Fraction(5, 4), "1.25"),
        (Fraction(7, 10), "0.7"),
        (Fraction(1, 8), "0.125"),
        (Fraction(1, 50), "0.02"),
        (Fraction(1, 3), "1/3"),
        (Fraction(22, 7), "22/7"),
    ])
    def test_examples(self, w, text):
        assert format_weight(w) == text
        assert Fraction(text) == w


class TestInstanceFiles:
    def test_graphic_golden_dump(self):
        buf = io.StringIO()
        dump_instance(triangle_base(),
                      WeightedGroundSet.from_weights([1, 2, 3]), buf)
        assert buf.getvalue() == (
            "matroid graphic 3 3\n"
            "edge 0 0 1 1\n"
            "edge 1 1 2 2\n"
            "edge 2 2 0 3\n")

    def test_uniform_golden_dump(self):
        buf = io.StringIO()
        dump_instance(UniformMatroid(3, 2),
                      WeightedGroundSet.from_weights([1, 2, 3]), buf)
        assert buf.getvalue() == (
            "matroid uniform 3 2\n"
            "elem 0 1\n"
            "elem 1 2\n"
            "elem 2 3\n")

    def test_graphic_round_trip(self):
        base = GraphicMatroid(4, ((0, 1), (1, 2), (2, 3), (0, 2)))
        ws = WeightedGroundSet.from_weights([Fraction(1, 3), 2, Fraction(5, 4), 7])
        buf = io.StringIO()
        dump_instance(base, ws, buf)
        buf.seek(0)
        base2, ws2 = parse_instance(buf)
        assert base2 == base
        assert ws2.weights == ws.weights

    def test_uniform_round_trip(self):
        buf = io.StringIO()
        dump_instance(UniformMatroid(4, 1),
                      WeightedGroundSet.from_weights([9, 5, 2, 11]), buf)
        buf.seek(0)
        base2, ws2 = parse_instance(buf)
        assert base2 == UniformMatroid(4, 1)
        assert ws2.weights == (Fraction(9), Fraction(5), Fraction(2), Fraction(11))

    def test_comments_and_blanks_ignored(self):
        text = ("# a comment\n\nmatroid uniform 2 1\n"
                "elem 0 3\n# another\nelem 1 4\n")
        base, ws = parse_instance(io.StringIO(text))
        assert base == UniformMatroid(2, 1)
        assert ws.weight(1) == Fraction(4)

    @pytest.mark.parametrize("text", [
        "",
        "matroid cograph 2 1\nelem 0 1\nelem 1 2\n",
        "matroid uniform 2\n",
        "matroid uniform 2 1\nelem 0 1\n",
        "matroid uniform 2 1\nelem 0 1\nelem 0 2\n",
        "matroid uniform 2 1\nelem 0 1\nelem 5 2\n",
        "matroid graphic 2 1\nedge 0 0 1\n",
        "matroid graphic 2 2\nedge 0 0 1 1\n",
    ])
    def test_parse_rejects_malformed(self, text):
        with pytest.raises(ValueError):
            parse_instance(io.StringIO(text))
