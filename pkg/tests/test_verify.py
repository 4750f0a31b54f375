import json

import pytest

from ncolor.verify import (
    DEFAULT_GRID,
    bijection_cases,
    check_bijection,
    load_grid,
    run_bijections,
    run_matrix,
)


def cell(report, constraint, n):
    (found,) = [c for c in report.cells if c.constraint == constraint and c.n == n]
    return found


def test_small_matrix_examples():
    report = run_matrix(3)
    assert report.overall
    unrestricted = cell(report, "all", 3)
    assert (unrestricted.enum, unrestricted.rec, unrestricted.formula) == (8, 8, None)
    no2 = cell(report, "forbid=2", 3)
    assert no2.enum == no2.rec == no2.formula == 5
    assert cell(run_matrix(2), "allow=3", 2).enum == 0


def test_grid_covers_every_required_instance():
    texts = {e["constraint"] for e in DEFAULT_GRID}
    assert {"allow=1", "allow=5", "allow=1,2,3,4", "forbid=1,2,3", "forbid=2", "no11"} <= texts
    assert {"mod=2:1", "mod=2:2", "mod=3:1", "mod=3:2,3"} <= texts
    assert sum(t.startswith("allow=") and t.count(",") == 1 for t in texts) == 10


def test_report_is_deterministic():
    a = run_matrix(5).merge(run_bijections(4))
    b = run_matrix(5).merge(run_bijections(4))
    assert a.dumps() == b.dumps()


def test_json_schema():
    obj = json.loads(run_matrix(2).merge(run_bijections(2)).dumps())
    assert list(obj) == ["version", "overall", "cells", "identities", "bijections"]
    assert obj["version"] == 1
    assert list(obj["cells"][0]) == ["constraint", "n", "enum", "rec", "formula", "agree"]
    assert list(obj["bijections"][0]) == [
        "name", "params", "n", "domainSize", "imageSize", "roundTripFailures", "coversImage",
    ]


def test_disagreement_fails_overall():
    report = run_matrix(2)
    from ncolor.verify import Cell

    report.cells.append(Cell("fake", 0, 1, 2, None, False))
    assert not report.overall
    assert "FAIL" in report.summary()


def test_grid_file(tmp_path):
    path = tmp_path / "grid.json"
    path.write_text(json.dumps([{"constraint": "allow=2", "formula": "single-color"}]))
    grid = load_grid(path)
    report = run_matrix(6, grid)
    assert report.overall
    assert {c.constraint for c in report.cells} == {"allow=2"}


def named(name, params):
    (case,) = [c for c in bijection_cases() if c.name == name and c.params == params]
    return case


def test_binary_strings_at_twelve():
    result = check_bijection(named("prop14-binary", "m=2,i=2"), 12)
    assert result.ok and result.round_trip_failures == 0
    assert result.domain_size == result.image_size


def test_odd_colors_at_nine():
    result = check_bijection(named("prop15-odd", ""), 9)
    assert result.domain_size == 440 + 196 == result.image_size == 636
    assert result.ok


def test_rectangles_at_three():
    result = check_bijection(named("prop12-rect", ""), 3)
    assert result.domain_size == result.image_size == 5
    assert result.ok


def test_broken_inverse_is_caught():
    import dataclasses

    case = named("prop5-minparts", "c=2")
    first = next(iter(case.domain(6)))
    broken = dataclasses.replace(case, inverse=lambda y, n: first)
    result = check_bijection(broken, 6)
    assert result.round_trip_failures > 0 and not result.ok


@pytest.mark.parametrize("name", ["prop5-minparts", "prop11", "prop13-mod3"])
def test_run_bijections_by_name(name):
    report = run_bijections(5, names=[name])
    assert report.overall
    assert {b.name for b in report.bijections} == {name}
