import json

import pytest

from fideal import GeneratorSet, fixture_path


@pytest.fixture
def load():
    def _load(name):
        return GeneratorSet.from_json_obj(json.loads(fixture_path(name).read_text(encoding="utf-8")))
    return _load


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS, TITLES

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        ok, detail = RESULTS[num]
        terminalreporter.write_line(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {TITLES[num]}  [{detail}]")
