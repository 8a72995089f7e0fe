import random

import pytest
from hypothesis import given, settings, strategies as st

from nclce import CrossingError, NonCrossingLCE, State, Text, TextError, block_of, lyndon_tree
from nclce.noncrossing import BlockPair, CrossingLog
from nclce.oracle import gen_noncrossing_queries, is_noncrossing, naive_lce, shrink_pairs
from nclce.runs import compute_runs_report

from conftest import APPENDIX, LYNDON_EXAMPLE, binary_texts, periodic_text, random_text


def replay(t, queries, **kw):
    s = NonCrossingLCE(t, **kw)
    answers = [s.lce(a, b) for a, b in queries]
    assert answers == [naive_lce(t, a, b) for a, b in queries]
    return s


def assert_bounds(s):
    st_ = s.stats()
    assert st_.bound_violations() == []
    assert st_.forward_violations == 0
    assert all(m <= 4 for m in st_.max_forwarded_per_pair)


class RecordingBackend(NonCrossingLCE):
    def __init__(self, t, **kw):
        super().__init__(t, **kw)
        self.asked = []

    def lce(self, a, b):
        self.asked.append((a, b))
        return super().lce(a, b)


# -- construction and basic queries --------------------------------------------

def test_empty_text_answers_nothing():
    s = NonCrossingLCE(Text([]))
    with pytest.raises(TextError):
        s.lce(1, 1)


def test_single_letter():
    assert NonCrossingLCE(Text.from_string("a")).lce(1, 1) == 1


def test_appendix_queries():
    t = Text.from_string(APPENDIX)
    s = NonCrossingLCE(t)
    assert s.lce(1, 3) == 3
    for a in range(1, t.n + 1):
        assert s.lce(a, a) == t.n - a + 1


def test_argument_order_is_normalized():
    t = Text.from_string(APPENDIX)
    assert NonCrossingLCE(t).lce(3, 1) == 3


def test_out_of_range():
    s = NonCrossingLCE(Text.from_string("abc"))
    for a, b in ((0, 1), (1, 4), (4, 4)):
        with pytest.raises(TextError):
            s.lce(a, b)


def test_unary_long_lce():
    t = Text.from_string("a" * 100)
    assert NonCrossingLCE(t).lce(1, 2) == 99


def test_block_of():
    assert block_of(2, 5) == 2
    assert block_of(0, 7) == 7
    assert block_of(3, 8) == 1
    assert block_of(3, 9) == 2


def test_strict_replay_of_lyndon_queries():
    t = Text.from_string(APPENDIX)
    for order in (0, 1):
        rec = RecordingBackend(t)
        lyndon_tree(t, order, rec)
        strict = NonCrossingLCE(t, strict=True)
        for a, b in rec.asked:
            strict.lce(a, b)


def test_strict_mode_reports_both_pairs():
    s = NonCrossingLCE(Text.from_string(APPENDIX), strict=True)
    s.lce(1, 3)
    with pytest.raises(CrossingError) as exc:
        s.lce(2, 4)
    assert exc.value.pair == (2, 4)
    assert exc.value.witness == (1, 3)
    with pytest.raises(CrossingError) as exc:
        s.lce(4, 2)  # swapped arguments are normalized first
    assert exc.value.pair == (2, 4)
    # a rejected query leaves the structure usable
    assert s.lce(1, 2) == 0
    assert s.lce(3, 5) == naive_lce(Text.from_string(APPENDIX), 3, 5)


@settings(max_examples=200)
@given(st.integers(3, 30).flatmap(
    lambda n: st.lists(st.tuples(st.integers(1, n), st.integers(1, n)).map(lambda p: tuple(sorted(p))), max_size=30)))
def test_crossing_log_matches_pairwise_definition(pairs):
    n = max(b for _, b in pairs) if pairs else 3
    log = CrossingLog(n)
    accepted = []
    for a, b in pairs:
        witness = log.find_crossing(a, b)
        crossing_any = is_noncrossing(accepted + [(a, b)]) is not True
        assert (witness is not None) == crossing_any
        if witness is None:
            log.add(a, b)
            accepted.append((a, b))
        else:
            c, d = witness
            assert witness in log.pairs
            assert a < c < b < d or c < a < d < b


# -- level dispatch and block-pair states ----------------------------------------

def test_level_zero_relevant_query_dispatches():
    t = Text.from_string(APPENDIX)
    s = NonCrossingLCE(t)
    # LCE(1, 3) = 3 equals the level-0 cap, so the query is relevant
    assert s._level(0, 1, 3) == 3
    assert s.state_of(0, 1, 3).state == State.VISITED
    assert s.stats().queries_asked[:2] == [1, 1]


def test_short_queries_above_text_length():
    t = Text.from_string("ab" * 5)
    s = NonCrossingLCE(t)
    assert s._level(5, 1, 3) == 8  # cap 96 exceeds n
    assert s.levels[5] == {}


def test_unary_trace_is_relevant_until_cap_exceeds_answer():
    t = Text.from_string("a" * 100)
    s = NonCrossingLCE(t, trace=True)
    assert s.lce(1, 2) == 99
    seq = s.stats().working_sequence
    # relevant while 3 * 2**i <= 99, i.e. levels 0..5
    assert [lvl for lvl, *_ in seq] == [0, 1, 2, 3, 4, 5]
    assert all(state == "initial()" for *_, state in seq)
    assert s.stats().queries_asked == [1, 1, 1, 1, 1, 1, 1]


def test_initial_forwards_once():
    t = Text.from_string("a" * 30)
    s = NonCrossingLCE(t)
    assert s.lce(1, 2) == 29
    bp = s.state_of(0, 1, 2)
    assert bp.state == State.VISITED and bp.data() == (1, 2, 29)
    assert bp.forwarded == 1


def test_visited_aligned_shift():
    # LCE(1, 5) = 100 and LCE(3, 7) = 98; both in block-pair (1, 2) at level 2
    t = Text([0] * 104 + [1])
    s = NonCrossingLCE(t)
    assert s._level(2, 1, 5) == 100
    bp = s.state_of(2, 1, 5)
    assert bp.data() == (1, 5, 100)
    assert s._level(2, 3, 7) == 98
    assert bp.state == State.VISITED and bp.forwarded == 1


def test_visited_to_full_on_periodic_text():
    t = Text.from_string("abcd" * 16 + "x")
    s = NonCrossingLCE(t, debug=True)
    assert s.lce(1, 9) == 56
    assert s.lce(1, 13) == 52
    bp = s.state_of(3, 1, 13)
    assert bp.state == State.FULL
    assert bp.period == 4
    assert bp.forwarded == 3
    assert s.stats().forward_violations == 0


def test_full_state_answers_from_witness():
    # period-4 factors of lengths 14 and 18 starting at a = 1 and b = 16
    A = "abcdabcdabcdab" + "x"
    B = "abcdabcdabcdabcdab" + "y"
    t = Text.from_string(A + B)
    a, b = 1, 16
    dA, dB = a + 14, b + 18
    s = NonCrossingLCE(t)
    s._grow(2)
    bp = BlockPair()
    bp.state, bp.x, bp.y = State.FULL, dA, dB
    assert s._full(2, bp, a, b) == 14 == naive_lce(t, a, b)
    assert bp.state == State.FULL and bp.forwarded == 0


def test_full_state_aligned_case_goes_fullplus():
    # w[a', dA-1] and w[b', dB-1] both have length 8 and period 4
    A = "abcdabcd" + "xyzw"
    B = "abcdabcd" + "xyzq"
    t = Text.from_string(A + B)
    a, b = 1, 13
    dA, dB = 9, 21
    s = NonCrossingLCE(t)
    s._grow(2)
    bp = BlockPair()
    bp.state, bp.x, bp.y = State.FULL, dA, dB
    expected = 8 + naive_lce(t, dA, dB)
    assert expected == naive_lce(t, a, b) == 11
    assert s._full(1, bp, a, b) == expected
    assert bp.state == State.FULLPLUS and bp.data() == (dA, dB, 3)
    assert bp.forwarded == 1
    assert s._full(1, bp, a, b) == expected
    assert bp.forwarded == 1


def test_states_never_move_backwards():
    rng = random.Random(11)
    for it in range(30):
        t = periodic_text(rng, 200, 2)
        s = NonCrossingLCE(t)
        seen = {}
        for a, b in gen_noncrossing_queries(t.n, 3 * t.n, it):
            s.lce(a, b)
            for i, level in enumerate(s.levels):
                for key, bp in level.items():
                    prev = seen.get((i, key))
                    if prev is not None:
                        state, data = prev
                        assert bp.state >= state
                        if bp.state == state:
                            assert bp.data() == data
                    seen[(i, key)] = (bp.state, bp.data())


# -- stats ---------------------------------------------------------------------

def test_fresh_stats_are_zero():
    st_ = NonCrossingLCE(Text.from_string(APPENDIX)).stats()
    assert st_.queries_asked == [] and st_.total_comparisons == 0
    assert st_.top_level_queries == 0 and st_.forward_violations == 0


def test_level_zero_count_equals_off_diagonal_queries():
    t = Text.from_string(APPENDIX)
    qs = gen_noncrossing_queries(t.n, 30, 2)
    s = replay(t, qs)
    st_ = s.stats()
    assert st_.top_level_queries == len(qs)
    assert st_.queries_asked[0] == sum(1 for a, b in qs if a != b)


def test_level_bound_random_workload_4096():
    rng = random.Random(4096)
    n = 4096
    for t in (random_text(rng, n, 2), periodic_text(rng, n, 2), Text([0] * n)):
        s = replay(t, gen_noncrossing_queries(n, 3 * n, 1))
        assert_bounds(s)


# -- correctness sweeps --------------------------------------------------------

def test_exhaustive_small_binary():
    for t in binary_texts(10):
        s = replay(t, gen_noncrossing_queries(t.n, 3 * t.n, t.n), strict=True)
        assert_bounds(s)


def test_periodic_texts_debug():
    rng = random.Random(5)
    for it in range(150):
        n = rng.randint(20, 250)
        t = periodic_text(rng, n, rng.randint(2, 3))
        s = replay(t, gen_noncrossing_queries(n, 3 * n, it), debug=True)
        assert_bounds(s)
        for i, qs in enumerate(s.level_sets):
            assert is_noncrossing(shrink_pairs(qs, 2 ** i)) is True


def test_runs_pipeline_workloads_reach_every_state():
    rng = random.Random(8)
    totals = {"visited": 0, "full": 0, "fullplus": 0}
    for _ in range(60):
        t = periodic_text(rng, rng.randint(30, 300), rng.randint(2, 3))
        report = compute_runs_report(t, strict=True, debug=True)
        for backend in report.backends.values():
            assert_bounds(backend)
            for k, v in backend.stats().transitions.items():
                totals[k] += v
    assert all(v > 0 for v in totals.values()), totals


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=1, max_size=120), st.integers(0, 1000))
def test_matches_oracle_hypothesis(symbols, seed):
    t = Text(symbols)
    replay(t, gen_noncrossing_queries(t.n, 3 * t.n, seed), strict=True, debug=True)
