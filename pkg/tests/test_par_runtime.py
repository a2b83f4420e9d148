"""
Тесты ParRuntime: барьерная семантика, политики записи, учёт раундов.
"""

import pytest

from core.errors import EmptyReduction, ListCycleError, WriteConflict
from core.par_runtime import TERMINATOR, ParRuntime, RoundReport, WritePolicy, ceil_log2


def test_par_map_counts_one_round_per_step(par):
    out = par.par_map([3, 1, 2], lambda v: v * 10, name="scale")
    assert out == [30, 10, 20]
    assert par.report.total_rounds == 1
    assert par.report.total_work == 3


def test_par_map_with_width_passes_index(par):
    assert par.par_map(4, lambda i: i * i) == [0, 1, 4, 9]


def test_empty_step_still_costs_one_unit(par):
    assert par.par_map(0, lambda i: i) == []
    assert par.report.total_rounds == 1
    assert par.report.total_work == 1


def test_min_combine_keeps_smallest_value(par):
    target = [100, 100]
    par.par_write(3, lambda i: [(0, 7 - i)], target, WritePolicy.MIN_COMBINE)
    assert target == [5, 100]


def test_max_combine_keeps_largest_value(par):
    target = {}
    par.par_write(3, lambda i: [("x", i)], target, WritePolicy.MAX_COMBINE)
    assert target == {"x": 2}


def test_sum_combine_adds_to_old_value(par):
    counters = {"hits": 1}
    par.par_write(4, lambda i: [("hits", 1)], counters, WritePolicy.SUM_COMBINE)
    par.par_write(2, lambda i: [("miss", 2)], counters, WritePolicy.SUM_COMBINE)
    assert counters == {"hits": 5, "miss": 4}


def test_arbitrary_lowest_index_wins(par):
    target = [0]
    par.par_write(5, lambda i: [(0, 10 + i)], target, WritePolicy.ARBITRARY)
    assert target == [10]


def test_disjoint_conflict_raises(par):
    with pytest.raises(WriteConflict):
        par.par_write(2, lambda i: [(0, i)], [0, 0])


def test_disjoint_allows_same_processor_rewrite(par):
    target = [0]
    par.par_write(1, lambda i: [(0, 1), (0, 2)], target)
    assert target == [2]


def test_writes_visible_only_after_barrier(par):
    values = [1, 2, 3, 4]
    # каждый процессор читает соседа; снимок до шага
    par.par_write(4, lambda i: [(i, values[(i + 1) % 4])], values)
    assert values == [2, 3, 4, 1]


def test_par_reduce_rounds_and_errors(par):
    assert par.par_reduce([4, 9, 1, 7, 3], op="min") == 1
    assert par.report.total_rounds == ceil_log2(5)
    with pytest.raises(EmptyReduction):
        par.par_reduce([])
    with pytest.raises(ValueError):
        par.par_reduce([1], op="product")


def test_prefix_sum_exclusive(par):
    sums, total = par.prefix_sum([3, 1, 4, 1, 5])
    assert sums == [0, 3, 4, 8, 9]
    assert total == 14
    assert par.report.total_rounds == ceil_log2(5)


def test_list_rank_pointer_jumping(par):
    # два списка: 2 -> 0 -> 3 и 1
    succ = [3, TERMINATOR, 0, TERMINATOR]
    assert par.list_rank(succ) == [1, 0, 2, 0]
    assert par.report.total_rounds == 2


def test_list_rank_rejects_cycles(par):
    with pytest.raises(ListCycleError):
        par.list_rank([1, 0])
    with pytest.raises(ListCycleError):
        par.list_rank([5])


def test_par_sort_is_stable_permutation(par):
    keys = [(2, "b"), (1, "z"), (2, "a"), (0, "q"), (1, "z")]
    order = par.par_sort(keys)
    assert order == sorted(range(len(keys)), key=lambda i: (keys[i], i))
    p = ceil_log2(len(keys))
    assert par.report.total_rounds == p * (p + 1) // 2


def test_splice_inserts_chain_after_node(par):
    # список 0 -> 1, узлы 2 и 3 вставляются между ними
    nxt = [1, TERMINATOR, 0, 0]
    prv = [TERMINATOR, 0, 0, 0]
    par.splice(nxt, prv, [(0, [2, 3])])
    assert nxt[:4] == [2, TERMINATOR, 3, 1]
    assert prv == [TERMINATOR, 3, 0, 2]
    assert par.report.total_rounds == 1


def test_splice_twice_after_same_node_conflicts(par):
    nxt = [1, TERMINATOR, 0, 0]
    prv = [TERMINATOR, 0, 0, 0]
    with pytest.raises(WriteConflict):
        par.splice(nxt, prv, [(0, [2]), (0, [3])])


def test_phases_and_reset(par):
    with par.phase("alpha"):
        par.par_map(2, lambda i: i)
        with par.phase("beta"):
            par.par_map(3, lambda i: i)
    par.par_map(1, lambda i: i)
    report = par.reset()
    assert report.rounds("alpha") == 1
    assert report.work("beta") == 3
    assert report.rounds("default") == 1
    assert report.total_rounds == 3
    assert par.report.total_rounds == 0


def test_listeners_see_every_step(par):
    seen = []
    par.add_listener(seen.append)
    with par.phase("layout"):
        par.par_write(2, lambda i: [(i, i)], [0, 0], WritePolicy.MIN_COMBINE, name="extent_lo")
    par.remove_listener(seen.append)
    par.par_map(1, lambda i: i)
    assert len(seen) == 1
    assert seen[0].name == "extent_lo"
    assert seen[0].phase == "layout"
    assert seen[0].write_policy is WritePolicy.MIN_COMBINE
    assert seen[0].width == 2


def test_failing_listener_does_not_break_step(par):
    def broken(step):
        raise RuntimeError("listener down")

    par.add_listener(broken)
    assert par.par_map(2, lambda i: i + 1) == [1, 2]


def test_failing_listener_is_reported_on_stderr(par, capsys):
    def broken(step):
        raise RuntimeError("listener down")

    par.add_listener(broken)
    par.par_map(3, lambda i: i, name="edge_colors")
    err = capsys.readouterr().err
    assert "[ParRuntime] listener failed on step 'edge_colors': listener down" in err
    assert par.report.total_rounds == 1


def test_results_independent_of_worker_count():
    keys = [(i * 7919) % 101 for i in range(300)]
    with ParRuntime(workers=1) as single, ParRuntime(workers=4, parallel_threshold=1) as pool:
        assert single.par_sort(keys) == pool.par_sort(keys)
        assert single.prefix_sum(keys) == pool.prefix_sum(keys)
        assert single.report.as_dict() == pool.report.as_dict()


def test_invalid_workers():
    with pytest.raises(ValueError, match="workers must be positive"):
        ParRuntime(workers=0)


def test_round_report_rendering():
    report = RoundReport()
    report.add("quadrangulate", 5, 40)
    report.add("layout", 2, 10)
    table = report.to_table()
    assert table.splitlines()[0].split() == ["phase", "rounds", "work"]
    assert table.splitlines()[-1].split() == ["total", "7", "50"]
    assert report.to_csv().splitlines() == [
        "phase,rounds,work",
        "quadrangulate,5,40",
        "layout,2,10",
        "total,7,50",
    ]


def test_processor_bound_formula():
    assert RoundReport.processor_bound(16, 24) == pytest.approx(22.0)
