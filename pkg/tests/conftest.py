import sys

import pytest

from prekmaps.partitions import enumerate_partitions
from prekmaps.prek import e2_sum


def check_search_bound_lemma(s_max=40):
    """e_2 >= s - 1 for every partition of weight s with at least two parts."""
    for s in range(2, s_max + 1):
        for lam in enumerate_partitions(s):
            if len(lam) >= 2 and e2_sum(lam) < s - 1:
                return lam
        if e2_sum((s - 1, 1)) != s - 1:
            return (s - 1, 1)
    return None


@pytest.fixture(scope="session")
def search_bound_lemma():
    # the census prunes at weight n + 1; refuse to trust it unless this holds
    bad = check_search_bound_lemma()
    assert bad is None, f"search-bound lemma fails at {bad}"
    return True


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod._summary_lines():
        terminalreporter.write_line(line)
