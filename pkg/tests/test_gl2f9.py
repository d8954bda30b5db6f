import pytest

from octaq.gl2f9 import (F9_MUL, IDENTITY, I_UNIT, MINUS_ONE, ONE, S_MAT,
                         T_MAT, ZETA, ZETA_POW, classify_hjk, closure,
                         five_groups, gl2f9, group, h_jk, mat, mat_det,
                         mat_inv, mat_mul, mat_order, pgl2f9, scalar_mul,
                         verify_outer_involutions, verify_subgroup_classification)


def test_field_construction_table():
    # zeta generates the multiplicative group: zeta^8 = 1, zeta^4 = -1
    assert ZETA_POW[8] == ONE
    assert ZETA_POW[4] == MINUS_ONE
    assert len({ZETA_POW[k] for k in range(8)}) == 8
    assert F9_MUL[I_UNIT][I_UNIT] == MINUS_ONE
    # field axioms spot-check: distributivity over all triples
    from octaq.gl2f9 import F9_ADD
    for x in range(9):
        for y in range(9):
            for z in range(9):
                assert F9_MUL[x][F9_ADD[y][z]] == \
                    F9_ADD[F9_MUL[x][y]][F9_MUL[x][z]]


def test_matrix_basics():
    assert mat_mul(S_MAT, S_MAT) == IDENTITY
    assert mat_order(S_MAT) == 2
    assert mat_order(T_MAT) == 6
    m = mat(ONE, ZETA, MINUS_ONE, I_UNIT)
    assert mat_mul(m, mat_inv(m)) == IDENTITY
    with pytest.raises(ZeroDivisionError):
        mat_inv(mat(ONE, ONE, ONE, ONE))


def test_closure_examples():
    assert group([IDENTITY]).order == 1
    assert group([S_MAT, T_MAT]).order == 48
    assert group([S_MAT, scalar_mul(ZETA, T_MAT)]).order == 192


def test_classify_examples():
    assert classify_hjk(0, 0) == (48, 24, "2S4+")
    assert classify_hjk(1, 0) == (96, 24, "4S4+")
    assert classify_hjk(2, 0) == (48, 48, "2S4-")
    assert classify_hjk(0, 2) == (96, 48, "4S4-")
    assert classify_hjk(0, 1) == (192, 48, "8S4-")


def test_full_group_orders():
    g = gl2f9()
    assert g.order == 5760
    assert g.sl2_order() == 720
    assert len(pgl2f9()) == 720


def test_subgroup_classification_ledger_all_pass():
    led = verify_subgroup_classification()
    failed = [e["name"] for e in led.entries if not e["passed"]]
    assert not failed, failed
    assert len(led.entries) == 16


def test_hjk_reduction_to_nine_cases():
    # zeta^4 = -1 already lies in GL2(F3), so j and j+4 give equal groups
    for j in range(4):
        for k in range(4):
            assert h_jk(j, k).elements == h_jk(j + 4, k).elements
            assert h_jk(j, k).elements == h_jk(j, k + 4).elements


def test_classify_exhaustive_over_all_pairs():
    # every generated subgroup lands on one of the five labelled classes
    seen = set()
    for j in range(8):
        for k in range(8):
            order, sl2, label = classify_hjk(j, k)
            assert label in {"2S4+", "4S4+", "2S4-", "4S4-", "8S4-"}, (j, k)
            seen.add(label)
    assert seen == {"2S4+", "4S4+", "2S4-", "4S4-", "8S4-"}


def test_outer_involutions_per_group():
    expected_names = {"G1": ["f1"], "G2": ["f1", "f2"], "G3": ["phi"],
                      "G4": ["phi", "f1"], "G5": ["phi", "f1", "f2"]}
    for name, grp in five_groups().items():
        res = verify_outer_involutions(grp)
        for twist in expected_names[name]:
            r = res[twist]
            assert r["defined"] and r["closed"], (name, twist)
            assert r["automorphism"], (name, twist)
            assert r["square_inner"], (name, twist)


def test_f2_trivial_on_gl2f3():
    # determinants in GL2(F3) square to 1, so f2 is the identity there
    from octaq.gl2f9 import twist_f2
    g1 = five_groups()["G1"]
    assert all(twist_f2(m) == m for m in g1.elements)
