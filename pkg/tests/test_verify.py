"""Tests for the verification sweeps at toy scale."""

import random

import pytest

from kohnert.diagrams import is_southwest
from kohnert.verify import SUITES, SuiteResult, random_diagram, run_suite, southwest_in_box


def test_suite_result_summary_pass():
    result = SuiteResult("demo")
    result.checked = 7
    assert result.ok
    assert result.summary() == "PASS demo: 7 cases checked"


def test_suite_result_summary_failures():
    result = SuiteResult("demo", checked=3, failures=["a", "b"])
    assert not result.ok
    assert result.summary() == (
        "FAIL demo: 3 cases checked, 2 failures"
        "\n  counterexample: a"
        "\n  counterexample: b"
    )


def test_suite_result_summary_truncates():
    result = SuiteResult("demo", checked=9, failures=[str(k) for k in range(8)])
    text = result.summary()
    assert text.count("counterexample:") == 5
    assert text.endswith("... and 3 more")
    assert result.summary(max_dumped=8).count("counterexample:") == 8


def test_southwest_in_box():
    found = southwest_in_box(2, 2)
    assert len(found) == 14
    assert all(is_southwest(d) for d in found)
    assert all(d.max_col <= 2 and d.max_row <= 2 for d in found)
    sizes = [len(d) for d in found]
    assert sizes == sorted(sizes)
    assert len(southwest_in_box(2, 2, max_cells=1)) == 5


def test_random_diagram_is_seeded():
    a = random_diagram(random.Random(11), 4, 4)
    b = random_diagram(random.Random(11), 4, 4)
    assert a == b
    assert a.max_col <= 4 and a.max_row <= 4


TINY = {
    "kohnert-vs-pi": dict(max_parts=2, max_size=3),
    "schubert": dict(n=3),
    "closure": dict(box=(2, 2), max_cells=4),
    "commute": dict(samples=25, box=(3, 3)),
    "membership": dict(box=(2, 2), t_rows=3),
    "components": dict(box=(2, 2)),
    "yamanouchi": dict(box=(2, 2)),
    "slide": dict(box=(2, 2)),
    "vexillary": dict(box=(2, 2), n=3),
}


@pytest.mark.parametrize("name", SUITES)
def test_every_suite_passes_at_toy_scale(name):
    result = run_suite(name, **TINY[name])
    assert result.ok, result.summary()
    assert result.checked > 0
    assert result.summary().startswith(f"PASS {name}:")


def test_run_suite_can_fan_out():
    result = run_suite("kohnert-vs-pi", max_parts=2, max_size=3, jobs=2)
    assert result.ok
    assert result.checked == run_suite("kohnert-vs-pi", max_parts=2, max_size=3).checked


def test_run_suite_rejects_unknown_names():
    with pytest.raises(ValueError):
        run_suite("nonsense")


if __name__ == "__main__":
    pytest.main([__file__])
