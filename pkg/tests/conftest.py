from hypothesis import strategies as st

from jordan.exact import HPoly, Mat, Q, SqrtRat

rationals = st.builds(Q, st.integers(-30, 30), st.integers(1, 12))
radicands = st.sampled_from([1, 2, 3, 5, 6, 7, 10, 12, 18])
sqrt_rats = st.lists(st.tuples(radicands, rationals), max_size=3).map(SqrtRat)
hpolys = st.lists(rationals, max_size=4).map(HPoly)
hpolys_sqrt = st.lists(sqrt_rats, max_size=3).map(HPoly)
twice_spins = st.integers(0, 6)


def square_mats(n, entries=hpolys):
    return st.lists(entries, min_size=n * n, max_size=n * n).map(lambda xs: Mat(n, n, xs))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
