import re

from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

CRITERIA = {
    1: "composite sends sx to c*s^(k-1)x, c = -1, for (k,n) in {(2,2),(2,3),(4,3)}",
    2: "coproduct dual vanishes on the S^4 and S^6 models through the default truncation",
    3: "closed-form product/coproduct formulas for Λx, k=2, through degree 12",
    4: "structural invariant suite on the fixture corpus",
    5: "degree shifts 2n-k+1 and 1-2n for Λx(2n)",
    6: "solver and explicit sections induce the same map on cohomology (Λx, k=2)",
    7: "two even generators: composite nontrivial, confirmed with solver sections",
}

_outcomes = {}


def pytest_runtest_logreport(report):
    mt = re.search(r"test_acceptance\.py::test_criterion_(\d+)", report.nodeid)
    if not mt:
        return
    n = int(mt.group(1))
    if report.when == "call" or report.outcome != "passed":
        ok = report.outcome == "passed"
        _outcomes[n] = _outcomes.get(n, True) and ok


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        if n in _outcomes:
            status = "PASS" if _outcomes[n] else "FAIL"
        else:
            status = "NOT RUN"
        terminalreporter.write_line(f"criterion {n}: {status}  {CRITERIA[n]}")
