import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latspec import (
    NotALatticeError,
    NotAPosetError,
    NotGradedError,
    ParseError,
    SizeBoundError,
    build_affine,
    build_boolean,
    build_product,
    build_projective,
    build_uniform,
    count_atoms_below,
    gaussian_binomial,
    parse_lattice,
    q_int,
    validate,
)

M3_DOCUMENT = {
    "elements": [
        {"id": 0, "label": "bot"},
        {"id": 1, "label": "a"},
        {"id": 2, "label": "b"},
        {"id": 3, "label": "c"},
        {"id": 4, "label": "top"},
    ],
    "covers": [[0, 1], [0, 2], [0, 3], [1, 4], [2, 4], [3, 4]],
}


class TestBoolean:
    def test_empty_ground_set(self):
        L = build_boolean(0)
        assert L.n == 1
        assert L.top_rank == 0
        assert L.atoms == ()

    def test_three_atoms(self, b3):
        assert b3.n == 8
        assert b3.layer_sizes() == (1, 3, 3, 1)
        assert len(b3.atoms) == 3

    def test_join_meet_are_union_intersection(self, b2):
        one = b2.labels.index("{1}")
        two = b2.labels.index("{2}")
        assert b2.labels[b2.join(one, two)] == "{1,2}"
        assert b2.join(one, two) == b2.top
        assert b2.meet(one, two) == 0

    def test_ground_set_bound(self):
        with pytest.raises(SizeBoundError):
            build_boolean(21)


class TestUniform:
    def test_m3_join_meet(self, m3):
        a, b = m3.atoms[0], m3.atoms[1]
        assert m3.join(a, b) == m3.top
        assert m3.meet(a, b) == 0
        assert m3.layer_sizes() == (1, 3, 1)

    def test_rank_one_chain(self):
        L = build_uniform(1, 1)
        assert L.n == 2
        assert L.rank == (0, 1)
        assert L.covers_up == ((1,), ())

    def test_two_four(self):
        L = build_uniform(2, 4)
        assert L.n == 6
        assert L.layer_sizes() == (1, 4, 1)


class TestProjective:
    def test_fano_layers(self, fano):
        assert fano.layer_sizes() == (1, 7, 7, 1)

    @pytest.mark.parametrize("q", [2, 3, 5])
    def test_rank_one_chain(self, q):
        L = build_projective(1, q)
        assert L.n == 2
        assert L.rank == (0, 1)

    def test_atom_count_is_q_int(self):
        assert len(build_projective(2, 3).atoms) == q_int(2, 3) == 4

    @pytest.mark.parametrize("r,q", [(2, 2), (3, 2), (2, 3), (3, 3)])
    def test_layers_are_gaussian_binomials(self, r, q):
        L = build_projective(r, q)
        assert L.layer_sizes() == tuple(gaussian_binomial(r, k, q) for k in range(r + 1))

    def test_composite_q_rejected(self):
        with pytest.raises(ValueError):
            build_projective(2, 4)


class TestAffine:
    def test_line_of_two_points(self):
        L = build_affine(1, 2)
        assert L.n == 4
        assert L.rank == (0, 1, 1, 2)

    def test_plane_layers(self, ag22):
        assert ag22.layer_sizes() == (1, 4, 6, 1)

    @pytest.mark.parametrize("r,q", [(1, 2), (2, 2), (1, 3), (2, 3), (3, 2)])
    def test_flat_counts(self, r, q):
        L = build_affine(r, q)
        expected = (1,) + tuple(
            q ** (r - k) * gaussian_binomial(r, k, q) for k in range(r + 1)
        )
        assert L.layer_sizes() == expected

    def test_parallel_lines_meet_at_adjoined_bottom(self, ag22):
        lines = ag22.layers[2]
        disjoint_pairs = [
            (x, y)
            for i, x in enumerate(lines)
            for y in lines[i + 1 :]
            if ag22.meet(x, y) == 0
        ]
        # three parallel classes of two lines each
        assert len(disjoint_pairs) == 3
        for x, y in disjoint_pairs:
            assert ag22.join(x, y) == ag22.top


class TestProduct:
    def test_square_of_b1_is_b2(self, b1, b2):
        assert build_product(b1, b1) == b2

    def test_atoms_are_bottom_pairs(self, m3, b1):
        P = build_product(m3, b1)
        expected = sorted(
            [a * b1.n + 0 for a in m3.atoms] + [0 * b1.n + b for b in b1.atoms]
        )
        assert list(P.atoms) == expected
        assert len(P.atoms) == 4

    def test_rank_additivity(self, m3, b1):
        P = build_product(m3, b1)
        assert P.rank[m3.top * b1.n + b1.top] == 3
        assert P.top_rank == m3.top_rank + b1.top_rank

    def test_layer_convolution(self, m3, b2):
        P = build_product(m3, b2)
        n1, n2 = m3.layer_sizes(), b2.layer_sizes()
        for k in range(P.top_rank + 1):
            expected = sum(
                n1[j] * n2[k - j]
                for j in range(len(n1))
                if 0 <= k - j < len(n2)
            )
            assert P.layer_sizes()[k] == expected


class TestParse:
    def test_m3_document_equals_uniform(self, m3):
        L = parse_lattice(json.dumps(M3_DOCUMENT))
        assert L == m3
        assert L.validation is not None and L.validation.passed()

    def test_shuffled_ids_are_canonicalized(self):
        doc = {
            "elements": [{"id": i, "label": f"x{i}"} for i in range(5)],
            # same diamond, with the top listed as id 0 and the bottom as id 2
            "covers": [[2, 1], [2, 3], [2, 4], [1, 0], [3, 0], [4, 0]],
        }
        L = parse_lattice(doc)
        assert L.rank == (0, 1, 1, 1, 2)
        assert L.labels[0] == "x2"

    def test_empty_elements(self):
        with pytest.raises(NotALatticeError):
            parse_lattice({"elements": [], "covers": []})

    def test_two_minimal_elements(self):
        doc = {
            "elements": [{"id": i} for i in range(4)],
            "covers": [[0, 1], [1, 3], [2, 3]],
        }
        with pytest.raises(NotALatticeError):
            parse_lattice(doc)

    def test_cycle_is_not_a_poset(self):
        doc = {
            "elements": [{"id": i} for i in range(3)],
            "covers": [[0, 1], [1, 2], [2, 1]],
        }
        with pytest.raises(NotAPosetError):
            parse_lattice(doc)

    def test_rank_jump_is_not_graded(self):
        doc = {
            "elements": [{"id": i} for i in range(4)],
            "covers": [[0, 1], [1, 2], [0, 2], [2, 3]],
        }
        with pytest.raises(NotGradedError):
            parse_lattice(doc)

    def test_missing_join_rejected(self):
        # two incomparable tops: no join for the atoms
        doc = {
            "elements": [{"id": i} for i in range(4)],
            "covers": [[0, 1], [0, 2], [1, 3], [2, 3]],
        }
        L = parse_lattice(doc)  # this one is fine (diamond)
        assert L.n == 4
        bad = {
            "elements": [{"id": i} for i in range(5)],
            "covers": [[0, 1], [0, 2], [1, 3], [2, 3], [1, 4], [2, 4]],
        }
        with pytest.raises(NotALatticeError):
            parse_lattice(bad)

    def test_malformed_json(self):
        with pytest.raises(ParseError):
            parse_lattice("{not json")

    def test_sparse_ids_rejected(self):
        doc = {"elements": [{"id": 0}, {"id": 2}], "covers": [[0, 2]]}
        with pytest.raises(ParseError):
            parse_lattice(doc)


class TestValidate:
    def test_boolean_is_geometric(self, b3):
        report = validate(b3)
        assert report.passed()
        assert report.is_geometric
        assert report.is_semimodular_atomic

    def test_affine_passes_with_note(self, ag22):
        report = validate(ag22)
        assert report.passed()
        assert report.is_semimodular_atomic
        assert any("affine" in note for note in report.notes)

    def test_hexagon_fails_semimodularity(self):
        # 0 < a, b; a < c; b < d; c, d < top -- ranks 0,1,1,2,2,3
        doc = {
            "elements": [{"id": i} for i in range(6)],
            "covers": [[0, 1], [0, 2], [1, 3], [2, 4], [3, 5], [4, 5]],
        }
        L = parse_lattice(doc)
        report = L.validation
        semi = next(c for c in report.checks if c.name == "semimodular")
        assert not semi.passed
        assert semi.counterexample is not None
        x, y = semi.counterexample
        assert L.rank[x] + L.rank[y] < L.rank[L.join(x, y)] + L.rank[L.meet(x, y)]

    def test_built_families_validate(self, small_lattices):
        for L in small_lattices:
            report = validate(L)
            assert report.passed(), (L.family_tag, report.failed_checks())


class TestAtomCounts:
    def test_m3_top(self, m3):
        assert count_atoms_below(m3, m3.top) == 3

    def test_bottom_has_none(self, small_lattices):
        for L in small_lattices:
            assert count_atoms_below(L, 0) == 0

    def test_fano_lines_have_three_points(self, fano):
        for x in fano.layers[2]:
            assert count_atoms_below(fano, x) == 3

    def test_out_of_range(self, m3):
        with pytest.raises(ValueError):
            count_atoms_below(m3, 99)


class TestSizeCap:
    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("LATTICE_SIZE_CAP", "10")
        with pytest.raises(SizeBoundError):
            build_boolean(4)
        monkeypatch.setenv("LATTICE_SIZE_CAP", "100")
        assert build_boolean(4).n == 16

    def test_explicit_cap_wins(self, monkeypatch):
        monkeypatch.setenv("LATTICE_SIZE_CAP", "10")
        assert build_boolean(4, cap=50).n == 16


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_order_laws_on_sampled_pairs(data):
    lattices = [
        build_boolean(3),
        build_uniform(2, 4),
        build_projective(2, 3),
        build_affine(2, 2),
    ]
    L = data.draw(st.sampled_from(lattices))
    x = data.draw(st.integers(0, L.n - 1))
    y = data.draw(st.integers(0, L.n - 1))
    j, m = L.join(x, y), L.meet(x, y)
    assert L.leq(m, x) and L.leq(m, y) and L.leq(x, j) and L.leq(y, j)
    assert L.join(x, x) == x and L.meet(x, x) == x
    assert L.join(x, m) == x and L.meet(x, j) == x
    assert L.rank[x] + L.rank[y] >= L.rank[j] + L.rank[m]
