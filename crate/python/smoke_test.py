"""Smoke test for the w0engine extension. Run after installing crates/py."""

import json

import w0engine as w


def main():
    so15 = w.RealForm("so(1,5)")
    a = so15.w0_action("eps:1,1,0")
    assert (a.dim, a.verdict) == (1, "minus_id"), a

    r = w.query("sl(3,R)", [1, 1])
    assert (r.action.plus, r.action.minus) == (1, 1), r
    rec = json.loads(r.to_json())
    assert rec["verdict"] == "mixed" and rec["weight_fund"] == [1, 1]

    assert w.w0_action("so(1,4)", "eps:1/2,1/2").verdict == "zero"
    assert w.RealForm("sl(3,R)").oracle_w0("adjoint") == w.W0Action(1, 1)
    assert w.RealForm("so(1,4)").oracle_w0("sym2").verdict == "plus_id"

    rows = w.batch("so(1,4)", "eps:0..3;nonzero")
    assert len(rows) == 6
    for row in rows:
        assert row.action.minus == int(row.weight_eps[0]) % 2

    assert w.RealForm("EVI").s_decomposition() == "so(1,2)^4 + su(2)^3"
    assert w.so1n_dim(4, ["2", "0"]) == 1 and w.so1n_sign(4, ["3", "1"]) == -1
    assert w.invariant_tableau(1, 1) == ("1 2", "2̄ 1̄")
    assert w.weyl_dimension("E8", [0, 0, 0, 0, 0, 0, 0, 1]) == 248
    assert w.weight_multiplicity("A2", [1, 1], [0, 0]) == 2
    assert w.ortho_set("C2") == [["2", "0"], ["0", "2"]]

    ok, _ = w.verify_golden(max_rank=4)
    assert ok

    try:
        w.query("so(1,q)", [1])
    except KeyError:
        pass
    else:
        raise AssertionError("unknown algebra accepted")
    try:
        w.query("sp(2·2,R)", "eps:1,2")
    except ValueError:
        pass
    else:
        raise AssertionError("non-dominant weight accepted")

    print("w0engine smoke test passed")


if __name__ == "__main__":
    main()
