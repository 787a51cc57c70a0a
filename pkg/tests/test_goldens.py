import re
from pathlib import Path

import pytest

from delpezzo import SURFACE_NAMES, surface_from_name
from delpezzo.goldens import golden_lines, run_verification

GOLDEN_DIR = Path(__file__).parent.parent / "golden"

LINE_RE = re.compile(r"^\d\t[0-9A-Za-z+\-]+\t\d+$")


@pytest.mark.parametrize("name", SURFACE_NAMES)
def test_shipped_golden_matches_enumeration(name):
    recorded = (GOLDEN_DIR / f"{name}.tsv").read_text().splitlines()
    assert recorded == golden_lines(surface_from_name(name))


@pytest.mark.parametrize("name", SURFACE_NAMES)
def test_golden_line_format(name):
    for line in (GOLDEN_DIR / f"{name}.tsv").read_text().splitlines():
        assert LINE_RE.match(line), line


def test_full_verification_passes():
    ok, report = run_verification(GOLDEN_DIR)
    assert ok, report
    assert len(report) == len(SURFACE_NAMES)
