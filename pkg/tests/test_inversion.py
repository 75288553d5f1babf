"""Lattice paths, side classification, cycling maps, and the inversion
statistic, including its north-east (comaj) counterpart."""

import pytest

from tabinv import (
    ABOVE,
    BELOW,
    LatticePath,
    cinv_statistic,
    classify_side,
    comaj,
    comaj_map,
    descent_set,
    enumerate_syt,
    forward_blocks,
    inv_code,
    inv_statistic,
    inversion_pairs,
    inversion_path,
    inversion_path_set,
    maj,
    make_tableau,
    ne_inversion_path,
    parse_shape,
    phi,
    phi_k,
    phi_trace,
    psi,
    psi_k,
    psi_trace,
    rotate_complement,
    tableau_from_rows,
)

T22 = tableau_from_rows([[1, 2], [3, 4]])
T22B = tableau_from_rows([[1, 3], [2, 4]])
SKEW1 = make_tableau(parse_shape("2,2/1"), [[None, 1], [2, 3]])
SKEW2 = make_tableau(parse_shape("2,2/1"), [[None, 2], [1, 3]])


class TestInversionPath:
    def test_top_content_path(self):
        p = inversion_path(T22, 4)
        assert p.start == (1, 1)
        assert p.steps == "WS"

    def test_row_one_path_runs_straight(self):
        p = inversion_path(tableau_from_rows([[1, 2, 3]]), 3)
        assert p.start == (2, 0)
        assert p.steps == "WW"

    def test_column_one_path_runs_straight(self):
        p = inversion_path(tableau_from_rows([[1], [2], [3]]), 3)
        assert p.start == (0, 2)
        assert p.steps == "SS"

    def test_skew_path_uses_neighbor_comparison(self):
        assert inversion_path(SKEW1, 3).steps == "WS"
        assert inversion_path(SKEW2, 3).steps == "SW"

    def test_out_of_range_content(self):
        with pytest.raises(ValueError):
            inversion_path(T22, 5)


class TestSideClassification:
    def test_sides_around_a_path(self):
        p = inversion_path(T22, 4)  # WS from (1, 1)
        assert classify_side(p, (1, 1)) == BELOW
        assert classify_side(p, (1, 2)) == BELOW
        assert classify_side(p, (2, 1)) == ABOVE
        assert classify_side(p, (2, 2)) == BELOW  # the anchor cell itself

    def test_cells_east_of_start_are_below(self):
        p = LatticePath((0, 1), "S")
        assert classify_side(p, (1, 1)) == BELOW
        assert classify_side(p, (2, 1)) == BELOW
        assert classify_side(p, (3, 1)) == ABOVE


class TestBlocksAndPsi:
    def test_blocks_for_hook(self):
        t = tableau_from_rows([[1, 2], [3]])
        p = inversion_path(t, 3)
        bp = forward_blocks(t, 3, p)
        assert bp.content_blocks(t) == [[1], [2]]

    def test_blocks_for_2x2(self):
        p = inversion_path(T22B, 4)
        bp = forward_blocks(T22B, 4, p)
        assert bp.content_blocks(T22B) == [[1], [2, 3]]
        assert bp.anchor_side == ABOVE

    def test_psi_k_cycles_blocks(self):
        assert psi_k(T22B, 4) == T22
        assert psi_k(T22, 4) == T22B

    def test_psi_k_identity_on_single_row(self):
        t = tableau_from_rows([[1, 2, 3, 4]])
        for k in range(3, 5):
            assert psi_k(t, k) == t

    def test_psi_examples(self):
        t = tableau_from_rows([[1, 2], [3]])
        assert psi(t) == t
        assert maj(psi(t)) == 2 == inv_statistic(t)
        assert psi(T22B) == T22
        assert maj(psi(T22B)) == 2 == inv_statistic(T22B)
        assert psi(T22) == T22B
        assert maj(psi(T22)) == 4 == inv_statistic(T22)

    def test_phi_inverts_psi_k(self):
        assert phi_k(T22, 4) == T22B
        for shape_text in ("3,2", "2,2,1", "4,1"):
            for t in enumerate_syt(parse_shape(shape_text)):
                for k in range(3, t.n + 1):
                    assert phi_k(psi_k(t, k), k) == t

    def test_phi_inverts_psi_exhaustive_small(self):
        for shape_text in ("3,2", "2,2,1", "3,3/1", "2,2,2/1"):
            for t in enumerate_syt(parse_shape(shape_text)):
                assert phi(psi(t)) == t
                assert psi(phi(t)) == t

    def test_traces_are_consistent(self):
        result, stages = psi_trace(T22)
        assert result == psi(T22)
        assert [st.k for st in stages] == [4, 3]
        back, inv_stages = phi_trace(result)
        assert back == T22
        assert [st.k for st in inv_stages] == [3, 4]


class TestInvStatistic:
    def test_2x2_pairs(self):
        pairs = sorted(
            (T22.content(a), T22.content(b)) for a, b in inversion_pairs(T22)
        )
        assert pairs == [(3, 1), (3, 2), (4, 1), (4, 2)]
        assert inv_statistic(T22) == 4
        assert inv_code(T22) == [0, 0, 2, 2]

    def test_path_set_covers_all_but_one_cell(self):
        ips = inversion_path_set(T22)
        assert set(ips.paths) == {(1, 2), (2, 1), (2, 2)}
        assert ips.exempt == (1, 1)

    def test_code_sums_to_statistic(self):
        for t in enumerate_syt(parse_shape("3,2")):
            code = inv_code(t)
            assert sum(code) == inv_statistic(t)
            assert all(0 <= code[k - 1] <= k - 1 for k in range(1, t.n + 1))

    def test_skew_exempt_cell_anchors_pairs(self):
        # The exempt cell holds content 2 here; its weakly-SE neighbor with
        # content 1 still counts, matching the major index of the image.
        assert inv_statistic(SKEW1) == 2 == maj(psi(SKEW1))
        assert inv_statistic(SKEW2) == 1 == maj(psi(SKEW2))

    def test_matches_major_index_of_image(self):
        for shape_text in ("4,2", "3,2,1", "3,3/1", "4,3,1/2"):
            for t in enumerate_syt(parse_shape(shape_text)):
                assert inv_statistic(t) == maj(psi(t))


class TestNeVariant:
    def test_ne_path_is_rotated_sw_path(self):
        for t in (T22, T22B, SKEW1, SKEW2):
            r = rotate_complement(t)
            p = ne_inversion_path(t, 1)
            q = inversion_path(r, r.n)
            assert p.steps == q.steps.replace("W", "E").replace("S", "N")

    def test_comaj_map_is_rotation_conjugate(self):
        for shape_text in ("3,2", "2,2,1", "3,3/1", "2,2,2/1"):
            for t in enumerate_syt(parse_shape(shape_text)):
                expected = rotate_complement(psi(rotate_complement(t)))
                assert comaj_map(t) == expected

    def test_cinv_matches_comajor_index_of_image(self):
        for shape_text in ("3,2", "2,2,1", "3,3/1", "4,3,1/2"):
            for t in enumerate_syt(parse_shape(shape_text)):
                assert cinv_statistic(t) == inv_statistic(rotate_complement(t))
                assert cinv_statistic(t) == comaj(comaj_map(t))

    def test_comaj_map_fixes_cell_of_one(self):
        for t in enumerate_syt(parse_shape("3,2,1")):
            assert comaj_map(t).positions()[1] == t.positions()[1]
