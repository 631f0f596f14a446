"""One check per acceptance criterion; each prints a PASS/FAIL line (run with -s to see them)."""
import time

import pytest

from hlcluster.cluster import exchange_graph
from hlcluster.height import enumerate_height_functions
from hlcluster.verify import run_suite

CRITERIA = [
    (1, "closed formula equals the mutation oracle", ["closedform"], 6),
    (2, "clusterind recursion", ["clusterind"], 6),
    (3, "Gamma counts, injections and p_map compatibility", ["gamma-bijections"], 6),
    (4, "local edges of the partially mutated quiver", ["lemma-edges"], 6),
    (5, "iota is a bijection onto pr", ["iota"], 6),
    (6, "tensor product identities", ["treduc"], 5),
    (7, "cluster representative identities", ["clusterrep"], 6),
    (8, "compatibility triple agreement", ["compat"], 5),
    (9, "positivity of cluster variables", ["positivity"], 6),
    (10, "wt_ell injectivity", ["wtell"], 4),
]


@pytest.mark.parametrize("num,title,suites,max_n", CRITERIA, ids=[f"criterion-{c[0]}" for c in CRITERIA])
def test_criterion(num, title, suites, max_n):
    t0 = time.time()
    reports = [run_suite(s, max_n) for s in suites]
    ok = all(r.ok for r in reports)
    detail = "; ".join(f"{r.checked} checked, {len(r.failures)} failures" for r in reports)
    print(f"criterion {num} ({title}, n<={max_n}): {'PASS' if ok else 'FAIL'} [{detail}, {time.time() - t0:.1f}s]")
    assert ok, [r.failures[:5] for r in reports]


def test_criterion_11():
    want = {2: 5, 3: 14, 4: 42, 5: 132}
    got = {n: {len(exchange_graph(xi).clusters) for xi in enumerate_height_functions(n)} for n in want}
    ok = all(got[n] == {c} for n, c in want.items())
    print(f"criterion 11 (exchange graph sizes 5/14/42/132 for n=2..5): {'PASS' if ok else 'FAIL'} {got}")
    assert ok


if __name__ == "__main__":
    import sys

    failed = 0
    for crit in CRITERIA:
        try:
            test_criterion(*crit)
        except AssertionError:
            failed += 1
    try:
        test_criterion_11()
    except AssertionError:
        failed += 1
    sys.exit(1 if failed else 0)
