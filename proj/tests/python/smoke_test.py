"""Smoke tests for the pyschurq module: a handful of values pinned from the
C++ suite, exercised through the bindings."""

import pyschurq as sq


def test_dimensions():
    assert sq.weyl_dim("2,1,0,0") == 20
    assert sq.weyl_dim("3,2,1,0") == 64
    assert sq.weyl_dim6([2, 2, 1, 1, 0, 0]) == 189


def test_pieri_and_lr():
    assert sq.pieri("3,2,0,0", 1) == {"4,2,0,0": 1, "3,3,0,0": 1, "3,2,1,0": 1}
    lr = sq.littlewood_richardson("2,1,0,0", "2,2,1,0")
    assert lr["3,2,2,1"] == 2
    assert sum(lr.values()) == 8


def test_end_decomposition():
    end = sq.end_decomposition("2,1,0,0")
    assert len(end) == 7
    assert sum(rec["mult"] * rec["dim"] for rec in end) == 400


def test_bwb():
    r = sq.bwb("4,3,1,0|7,3")
    assert not r["acyclic"]
    assert r["degree"] == 4
    assert r["weight"] == "2,2,2,0,0,0"
    assert r["dim"] == 175
    assert sq.bwb("4,3,1,0|2,2")["acyclic"]


def test_chern_and_invariants():
    ch = sq.chern("2,1,0,0")
    assert ch == {"a0": "20", "a1": "15", "a2": "4", "a3": "13", "a4": "15", "a5": "-23"}
    assert sq.chern_oracle("3,2,1,0") == sq.chern("3,2,1,0")
    assert sq.delta("2,1,0,0") == "13/20"
    assert sq.chi("2,1,0,0") == 363
    assert sq.chi("3,2,1,0") == 35328


def test_atomicity():
    assert sq.is_atomic("4,0,0,0")
    assert not sq.is_atomic("2,1,0,0")
    assert sq.atomic_numeric_test("5,0,0,0") == "0"
    assert sq.atomic_numeric_test("2,1,0,0") == "3/5"


def test_ext_report():
    rep = sq.ext("2,1,0,0")
    assert rep["ext"] == [1, 20, 401, 20, 1]
    assert rep["chi"] == 363
    assert rep["exact"]


def test_k_machinery():
    assert sum(rec["mult"] for rec in sq.k_set("2,2,0,0")) == 12
    assert sq.k_cardinality(1, 1, 2) == 26
    assert sq.f_poly(2, 1) == 71
    assert sq.f_poly(1, 2) == 71


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok  {test.__name__}")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
