import json

import pytest

import arquiver


def test_mckay_icosahedral():
    out = arquiver.mckay("icosahedral", p=7)
    assert out["result"]["affine_type"] == "E~8"
    assert sorted(out["result"]["fusion"]["dims"]) == [1, 2, 2, 3, 3, 4, 4, 5, 6]
    assert out["spec"]["family"] == "binary-icosahedral"


def test_tube_ranks():
    out = arquiver.tubes("icosahedral", p=7)
    assert out["result"]["tube_ranks"] == [2, 3, 5]
    assert out["result"]["generic_rank"] == 1
    assert out["result"]["riemann_hurwitz"]["residual"] == "0"

    thick = arquiver.tubes("cyclic", n=2, p=3, r=2)
    assert thick["result"]["tube_ranks"] == [6, 6]


def test_ar_component_window():
    out = arquiver.ar_component("cyclic", n=3, p=5, l=0, seed=0, nu_min=-2, nu_max=2)
    res = out["result"]
    assert res["psi_violations"] == []
    assert len(res["vertices"]) == 5 * 6  # 5 slices, |Q| = 6
    for seq in res["almost_split_sequences"]:
        total = sum(m["dim"] for m in seq["middle"])
        assert seq["left"]["dim"] + seq["right"]["dim"] == total


def test_check_and_determinism():
    report, ok = arquiver.check("dihedral", n=2, p=5)
    assert ok
    assert all(c["ok"] for c in report["result"]["checks"])

    a = arquiver._arquiver.mckay_json("octahedral", 1, 5, 1)
    b = arquiver._arquiver.mckay_json("octahedral", 1, 5, 1)
    assert a == b
    json.loads(a)  # valid JSON


def test_tube_window_shape():
    t = arquiver.tube_window(3, 2)
    assert t["e"] == 3 and t["L"] == 2
    assert len(t["tau"]) == 6
    # tau is a rotation of order 3
    perm = t["tau"]
    for v in range(6):
        assert perm[perm[perm[v]]] == v


def test_invalid_spec_raises():
    with pytest.raises(Exception):
        arquiver.mckay("cyclic", n=5, p=5)
