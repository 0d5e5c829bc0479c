import pytest

CRITERIA = {
    1: "rank-1 F_4 example: chi = 3, lambda table, formula expansion, < 1 s",
    2: "U(n-2,n) family closed form, < 30 s",
    3: "closed formula equals chain census on >= 40 q-matroids",
    4: "|chi(U(k,n))| = q^(k(k+1)/2) [n-1 k]_q",
    5: "five alternating chain sums on the subspace lattice",
    6: "homology rank = |chi| in degree r-1 via restriction-fixed chains; chi = 0 iff U(n,n)",
    7: "classical chi(S_M) = (-1)^(r-1)|mu| on >= 100 matroids, both proof routes",
    8: "recursion mu = cross-cut mu on every cycle lattice of nullity >= 2",
    9: "subcode supports = q-cycles and two-route d_r on >= 5 codes, < 60 s",
    10: "basis intersection is zero and chi != 0 when 0 < rank < n",
    11: "q-binomial theorem and the q = 1 collapse",
}

_outcomes: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _outcomes.setdefault(marker.args[0], []).append(rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        results = _outcomes.get(n)
        status = "NOT RUN" if results is None else ("PASS" if all(results) else "FAIL")
        terminalreporter.write_line(f"criterion {n:2d}: {status:7s} {title}")
