import threading

from tools.workers import chunk_bounds, map_chunks, resolve_jobs


def test_chunk_bounds_cover_the_range():
    assert chunk_bounds(10, 3) == [(0, 4), (4, 7), (7, 10)]
    assert chunk_bounds(2, 5) == [(0, 1), (1, 2)]
    assert chunk_bounds(0, 4) == []


def test_resolve_jobs():
    assert resolve_jobs(3) == 3
    assert resolve_jobs(0) >= 1


def test_results_keep_chunk_order():
    def work(begin, end):
        return list(range(begin, end))

    chunks = map_chunks(work, 100, jobs=4)
    assert [value for chunk in chunks for value in chunk] == list(range(100))


def test_single_worker_runs_in_the_calling_thread():
    threads = map_chunks(lambda begin, end: threading.get_ident(), 10, 1)
    assert threads == [threading.get_ident()]
