import hypothesis
from hypothesis import strategies as st
from math import gcd

from compound_semigroups import SuitablePair

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=500, deadline=None)
hypothesis.settings.load_profile("default")


@st.composite
def suitable_pairs(draw, max_k=3, lo=1, hi=7):
    """Suitable pairs built directly: b_j is drawn among values coprime to a_j..a_k."""
    k = draw(st.integers(0, max_k))
    a = tuple(draw(st.integers(lo, hi)) for _ in range(k))
    b = []
    for j in range(k):
        choices = [v for v in range(lo, hi + 1) if all(gcd(x, v) == 1 for x in a[j:])]
        if not choices:
            hypothesis.reject()
        b.append(draw(st.sampled_from(choices)))
    return SuitablePair(a, tuple(b))


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py" in nodeid and getattr(rep, "when", "call") == "call":
                lines.append((nodeid.split("::")[-1], "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, verdict in sorted(lines):
            terminalreporter.write_line(f"{verdict}  {name}")
