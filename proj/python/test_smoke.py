import stab3


def test_build_five_qubit_code():
    c = stab3.build(5)
    assert (c["n"], c["k"], c["s"], c["pure"]) == (5, 1, 4, True)
    assert c["provenance"] == "[4,4]_1>[1]_1"
    assert c["rows"] == ["XXXXI", "ZZZZI", "XYZIX", "YZXIZ"]


def test_verify_round_trip():
    rows = stab3.build(17)["rows"]
    r = stab3.verify(rows)
    assert r["green"] and r["optimal"]
    assert (r["n"], r["s"], r["k"]) == (17, 6, 11)


def test_degenerate_six():
    rows = stab3.build(6)["rows"]
    assert not stab3.verify(rows)["green"]
    assert stab3.verify(rows, degenerate=True)["green"]


def test_weight3_witness():
    assert stab3.weight3_witness(stab3.build(5)["rows"]) == "XZYII"


def test_certificate_20():
    cert = stab3.certificate(20)
    assert cert["family"] == "f_{m+2}-1"
    assert cert["bound"] == 7
    assert cert["all_pass"]
    assert all(c["ok"] for c in cert["checks"])


def test_classify():
    cls = stab3.classify(20)
    assert cls["family"] == "lp_l"
    assert cls["s_best"] == 7
    assert cls["optimal_proven"]
    assert stab3.classify(38)["optimal_proven"] is False
    assert stab3.hamming_s(341) == 10


def test_weight_distribution():
    assert stab3.weight_distribution(stab3.build(5)["rows"]) == [1, 0, 0, 0, 15, 0]


def test_paste_named_blocks():
    p = stab3.paste(stab3.named_block("[4,4]_1"), stab3.named_block("[1]_1"))
    assert p["e"] == 0
    assert p["rows"] == stab3.build(5)["rows"]
