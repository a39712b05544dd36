from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

import blrc

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def test_grid2_code():
    code = blrc.build_code(blrc.grid(2))
    assert (code.n, code.k, code.m) == (9, 4, 5)
    assert code.rate == Fraction(4, 9)
    assert code.rate == blrc.rate_lower(2, 2)
    g, h = code.generator, code.parity_check
    assert g.shape == (4, 9) and h.shape == (5, 9)
    assert not ((g.astype(int) @ h.T.astype(int)) % 2).any()
    assert (g[:, code.info_set] == np.eye(4, dtype=np.uint8)).all()


def test_validate_and_classes():
    pg = blrc.validate_pg(blrc.symplectic_gq(2))
    assert (pg.s, pg.t, pg.alpha, pg.num_points, pg.num_lines) == (2, 2, 1, 15, 15)
    assert pg.pg_class == "generalized-quadrangle"
    fano = blrc.load(FIXTURES / "fano.txt")
    assert blrc.validate_pg(fano).pg_class == "steiner-2-design"
    with pytest.raises(blrc.ValidationError):
        blrc.validate_pg(blrc.load(FIXTURES / "broken_grid.txt"))
    with pytest.raises(blrc.ParseError):
        blrc.load(FIXTURES / "bad_header.txt")
    with pytest.raises(ValueError):
        blrc.symplectic_gq(6)


def test_round_trip_text(tmp_path):
    g = blrc.dual(blrc.elliptic_quadric_gq(2))
    assert blrc.loads(blrc.dumps(g)) == g.canonical()
    path = tmp_path / "g.txt"
    blrc.save(g, path)
    assert blrc.load(path) == g.canonical()


def test_encode_reconstruct():
    rng = np.random.default_rng(3)
    code = blrc.build_code(blrc.symplectic_gq(2))
    for _ in range(20):
        msg = rng.integers(0, 2, code.k, dtype=np.uint8)
        c = blrc.encode(code, msg)
        assert not ((code.incidence.astype(int) @ c.astype(int)) % 2).any()
        back = blrc.reconstruct(code, code.info_set, c[code.info_set])
        assert (back == msg).all()


def test_profile_and_repair():
    code = blrc.build_code(blrc.symplectic_gq(2))
    prof = blrc.repair_profile(code, exhaustive=True, r=2)
    assert prof["overall"] == {"r": 2, "a": 3, "delta": 3}
    assert prof["balanced"]

    c = blrc.encode(code, [1, 0, 1, 1, 0])
    received = [int(x) for x in c]
    received[4] = None
    res = blrc.repair_symbol(code, received, 4)
    assert res["value"] == c[4]
    assert res["retrieved"] == 2

    blocking = prof["blocking_sets"][4]
    with pytest.raises(blrc.RepairError):
        blrc.repair_symbol(code, received, 4, unavailable=blocking)


def test_analyze_conformance():
    report = blrc.analyze(blrc.build_code(blrc.grid(2)))
    assert report["rate"] == "4/9"
    assert report["conformance"]["rate_within_bounds"] is True


def test_simulate_deterministic():
    code = blrc.build_code(blrc.grid(3))
    a = blrc.simulate(code, p=0.1, trials=200, seed=11)
    b = blrc.simulate(code, p=0.1, trials=200, seed=11)
    assert a == b
    assert blrc.simulate(code, u=1)["success_fraction"] == 1.0
    with pytest.raises(ValueError):
        blrc.simulate(code, p=0.1)


def test_bounds_and_catalog():
    assert blrc.vartheta(2, 2, 1) == 9
    assert blrc.rate_upper(2, 3) == Fraction(2, 5)
    assert blrc.rate_upper(2, 2) is None
    assert len(blrc.bounds_table()) == 81
    cat = blrc.catalog()
    pairs = {(p["r"], p["a"]) for p in cat["pairs"] if "r" in p}
    assert pairs == {(2, 3), (4, 3), (3, 4), (5, 4), (4, 5)}
    assert cat["pairs"][0] == {"family": "(r,2)", "r_min": 2, "r_max": 9}


def test_cli():
    code, out, err = blrc.run_cli(["validate", "-g", "grid", "--s", "3"])
    assert code == 0 and "pg(3,1,1)" in out
    code, _, err = blrc.run_cli(["validate", "-i", str(FIXTURES / "broken_grid.txt")])
    assert code == 2 and "validation error" in err
