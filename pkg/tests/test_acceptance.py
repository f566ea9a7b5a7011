"""Acceptance run: every claim at full size, one pass/fail line per criterion."""

import pytest

from quotp1.poly import QQ
from quotp1.verify import CLAIMS, run_claim

# largest sizes named by the criteria: t up to 5 for the coordinate charts
FULL_MAX_D = 5


@pytest.mark.parametrize("claim", CLAIMS, ids=[c.id for c in CLAIMS])
def test_acceptance(claim):
    res = run_claim(claim, max_d=FULL_MAX_D, field=QQ)
    print(f"\n{res.id} {res.status.upper()} {res.elapsed:.2f}s/{res.budget:.0f}s {res.anchor}")
    for line in res.details:
        print("   ", line)
    assert res.elapsed <= res.budget
    assert res.status == "pass", "\n".join(res.details)
    assert not any(d.startswith("note") and "not run" in d for d in res.details)
