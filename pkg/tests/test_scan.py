import numpy as np
import pytest

from naqc.coherence import bound_value
from naqc.scan import (
    SWEEP_HEADER,
    criterion,
    find_crossings,
    read_sweep_csv,
    sweep,
    sweep_csv_text,
    threshold,
    write_sweep_csv,
)


def test_find_crossings_on_known_function():
    g = lambda x: (x - 0.3) * (x - 0.71)
    roots = find_crossings(g, 0, 1, tol=1e-10)
    assert len(roots) == 2
    assert roots[0] == pytest.approx(0.3, abs=1e-9) and roots[1] == pytest.approx(0.71, abs=1e-9)
    assert find_crossings(lambda x: 1.0, 0, 1) == []


def test_sweep_rows_in_order():
    xs = np.linspace(0, 1, 11)
    rows = sweep("rho1", 2, "l1", xs, threads=4)
    assert [r.x for r in rows] == list(xs)
    for r in rows:
        assert r.c_na_tilde == pytest.approx(1 + abs(4 * r.x - 2), abs=1e-10)
        assert r.bound == pytest.approx(np.sqrt(6))


def test_sweep_thread_count_invariant(monkeypatch):
    xs = np.linspace(0, 1, 9)
    one = sweep("isotropic", 3, "re", xs, threads=1)
    monkeypatch.setenv("NAQC_THREADS", "3")
    many = sweep("isotropic", 3, "re", xs)
    assert [r.as_tuple() for r in one] == [r.as_tuple() for r in many]


def test_sweep_without_eur():
    rows = sweep("isotropic", 2, "l1", [0.5], with_eur=False)
    assert rows[0].e_t is None and rows[0].log_inv_c is None
    assert sweep_csv_text(rows).splitlines()[1].endswith(",,,,")


def test_csv_round_trip(tmp_path):
    rows = sweep("isotropic", 3, "l1", np.linspace(0, 1, 7))
    path = tmp_path / "s.csv"
    write_sweep_csv(rows, path)
    assert path.read_text().splitlines()[0] == ",".join(SWEEP_HEADER)
    back = read_sweep_csv(path)
    assert [r.as_tuple() for r in back] == [r.as_tuple() for r in rows]
    rows = sweep("rho1", 2, "l1", [0.5], with_eur=False)
    write_sweep_csv(rows, path)
    assert [r.as_tuple() for r in read_sweep_csv(path)] == [r.as_tuple() for r in rows]


def test_sweep_errors():
    with pytest.raises(ValueError):
        sweep("rho1", 3, "l1", [0.5])
    with pytest.raises(ValueError):
        sweep("werner", 2, "l1", [0.5])


def test_criterion_sign():
    g = criterion("rho1", 2, "l1")
    assert g(1.0) == pytest.approx(3 - np.sqrt(6))
    assert g(0.5) < 0
    g = criterion("rho1", 2, estimate="T")
    assert g(1.0) == pytest.approx(1.0, abs=1e-10)
    with pytest.raises(ValueError):
        criterion("rho1", 2, estimate="Q")
    with pytest.raises(ValueError):
        criterion("rho1", 2, "l1", framework="perm")


def test_threshold_result():
    res = threshold("rho1", 2, "l1", tol=1e-6)
    assert len(res.crossings) == 2
    # closed-form roots of 1 + |4x - 2| = sqrt 6
    lo = (3 - np.sqrt(6)) / 4
    assert res.crossings[0] == pytest.approx(lo, abs=1e-6)
    assert res.crossings[1] == pytest.approx(1 - lo, abs=1e-6)
    obj = res.to_json()
    assert obj["framework"] == "optimized" and obj["measure"] == "l1"
    res = threshold("rho1", 2, estimate="M", tol=1e-6)
    assert res.to_json()["framework"] == "eur-M" and res.measure is None
    with pytest.raises(ValueError):
        threshold("rho1", 2, "l1", tol=1e-9)


def test_threshold_empty_crossings():
    # the averaged l1 value of the qutrit isotropic family stays below the bound
    assert threshold("isotropic", 3, "l1", framework="averaged", tol=1e-6).crossings == []
    assert bound_value("l1", 3).value > 0
