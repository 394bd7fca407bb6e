import pytest

CRITERIA = {
    1: "oracle equivalence sweep (brute = expansion = duality)",
    2: "even orientations closed form",
    3: "Eulerian orientations of regular graphs via F_G(s)",
    4: "mixed Eulerian-even count and lower bound",
    5: "N-divisible colouring sum",
    6: "gauge-pair generalisation",
    7: "Monte Carlo estimator",
    8: "divisibility and shard determinism",
    9: "performance at |E| = 24",
}
_results: dict[int, list[tuple[str, str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion this test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _results.setdefault(mark.args[0], []).append((item.name, rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(CRITERIA):
        runs = _results.get(n)
        if not runs:
            continue
        failed = [name for name, outcome in runs if outcome != "passed"]
        status = "FAIL" if failed else "PASS"
        line = f"criterion {n}: {status}  {CRITERIA[n]}"
        if failed:
            line += "  [failing: " + ", ".join(failed) + "]"
        tr.write_line(line)
