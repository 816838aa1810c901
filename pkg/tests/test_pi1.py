import warnings
from fractions import Fraction

import pytest

from floparr import (
    BaseMismatch,
    BoundaryContactWarning,
    CheckReport,
    GroupoidEquality,
    GroupoidWord,
    MissingEdgeAssignment,
    Perm,
    PositivePath,
    atoms,
    base_chamber,
    check_representation,
    crossing_homomorphism,
    equal_in_groupoid,
    generators,
    loop_word,
    parse_perm,
    relations,
    word_concat,
    word_end,
    word_from_json,
    word_inverse,
    word_of_path,
    word_to_json,
)

from helpers import affine_graph, central_graph


def _s3_assignment(g):
    # send the wall crossings of the three lines to the transpositions
    # of S3 acting on three letters
    perms = {0: parse_perm("(0 1)"), 1: parse_perm("(1 2)"), 2: parse_perm("(0 2)")}
    return {e.id: perms[e.hyperplane].extend(3) for e in g.edges}


def test_base_chamber_is_all_positive():
    g = central_graph("A2:J={}")
    assert g.chamber(base_chamber(g)).signs == (1, 1, 1)


def test_word_algebra():
    g = central_graph("A2:J={}")
    p = atoms(g, 0, 5)[0]
    w = word_of_path(p)
    assert w.base == 0
    assert word_end(g, w) == 5
    inv = word_inverse(g, w)
    assert word_end(g, inv) == 0
    both = word_concat(g, w, inv)
    assert word_end(g, both) == 0
    assert len(both.letters) == 6


def test_single_line_generators():
    # base chamber has one wall, one atom to each chamber
    g = central_graph("A1:J={}")
    gens = generators(g)
    assert len(gens) == 2
    assert sorted(len(x.loop.letters) for x in gens) == [2, 4]
    for x in gens:
        assert word_end(g, x.loop) == 0


def test_a2_generator_count_and_order():
    g = central_graph("A2:J={}")
    gens = generators(g)
    # 6 chambers x 2 walls, with the far chamber contributing two atoms
    assert len(gens) == 14
    assert all(word_end(g, x.loop) == base_chamber(g) for x in gens)
    # ordering: chamber id ascending, then atom, then wall
    order = [(x.atom.edges, x.wall) for x in gens]
    targets = []
    for x in gens:
        end = x.atom.source
        for eid in x.atom.edges:
            end = g.edges[eid].target
        targets.append(end)
    assert targets == sorted(targets)


def test_loop_word_shape():
    g = central_graph("A2:J={}")
    p = atoms(g, 0, 1)[0]
    w = loop_word(g, p, 0)
    assert len(w.letters) == 2 * len(p) + 2
    assert word_end(g, w) == 0
    signs = [s for _, s in w.letters]
    assert signs == [1] * (len(p) + 2) + [-1] * len(p)


def test_a2_relation_count():
    g = central_graph("A2:J={}")
    rels = relations(g)
    assert len(rels) == 6
    for r in rels:
        assert r.p.source == r.q.source
        assert len(r.p.edges) == len(r.q.edges)


def test_relation_length_cap():
    g = central_graph("A2:J={}")
    assert relations(g, length_cap=2) == []
    assert len(relations(g, length_cap=3)) == 6


def test_affine_line_has_no_relations():
    g = affine_graph("A1:J={}", Fraction(5, 2))
    assert relations(g) == []


def test_generators_skip_boundary_atoms():
    g = affine_graph("A1:J={}", Fraction(5, 2))
    with pytest.warns(BoundaryContactWarning):
        gens = generators(g)
    for x in gens:
        assert not g.chamber(x.atom.source).boundary


def test_crossing_homomorphism_concat():
    g = central_graph("A2:J={}")
    p = word_of_path(atoms(g, 0, 5)[0])
    q = word_inverse(g, p)
    total = crossing_homomorphism(g, word_concat(g, p, q))
    assert total == (0, 0, 0)
    single = crossing_homomorphism(g, p)
    assert sorted(single) == [1, 1, 1]


def test_loops_cross_twice():
    # every generator loop crosses its wall net twice, others net zero
    for g in (central_graph("A1:J={}"), central_graph("A2:J={}")):
        for x in generators(g):
            nu = crossing_homomorphism(g, x.loop)
            expected = tuple(2 if h == x.wall else 0 for h in range(len(g.arrangement)))
            assert nu == expected


def test_loops_cross_twice_affine():
    g = affine_graph("A1:J={}", Fraction(5, 2))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", BoundaryContactWarning)
        gens = generators(g)
    assert gens
    for x in gens:
        nu = crossing_homomorphism(g, x.loop)
        assert nu == tuple(2 if h == x.wall else 0 for h in range(len(g.arrangement)))


def test_symmetric_group_representation_passes():
    g = central_graph("A2:J={}")
    report = check_representation(g, _s3_assignment(g), relations(g))
    assert isinstance(report, CheckReport)
    assert report.ok
    assert report.checked == 6
    assert report.failures == ()


def test_corrupted_representation_fails():
    g = central_graph("A2:J={}")
    assignment = _s3_assignment(g)
    assignment[0] = parse_perm("(0 1 2)")
    report = check_representation(g, assignment, relations(g))
    assert not report.ok
    assert report.failures == (0, 2, 4)
    again = check_representation(g, assignment, relations(g))
    assert again.failures == report.failures


def test_missing_edge_assignment():
    g = central_graph("A2:J={}")
    assignment = _s3_assignment(g)
    del assignment[3]
    with pytest.raises(MissingEdgeAssignment):
        check_representation(g, assignment, relations(g))


def test_equal_out_and_back_is_identity():
    g = central_graph("A2:J={}")
    e = g.out_edges(0)[0]
    back = g.edge_across(e.target, e.hyperplane)
    w = GroupoidWord(0, ((e.id, 1), (back.id, 1), (back.id, -1), (e.id, -1)))
    empty = GroupoidWord(0, ())
    assert equal_in_groupoid(g, [], w, empty, depth=2) is GroupoidEquality.PROVEN_EQUAL


def test_equal_antipodal_atoms():
    g = central_graph("A2:J={}")
    far = g.id_of_signs((-1, -1, -1))
    pair = atoms(g, 0, far)
    rels = relations(g)
    first = word_of_path(pair[0])
    second = word_of_path(pair[1])
    assert equal_in_groupoid(g, rels, first, second, depth=1) is GroupoidEquality.PROVEN_EQUAL


def test_unequal_words_stay_unknown():
    # distinct crossing vectors can never be proven equal
    g = central_graph("A2:J={}")
    a = word_of_path(atoms(g, 0, 1)[0])
    b_path = atoms(g, 0, 1)[0]
    b = word_concat(g, word_of_path(b_path), loop_word(g, PositivePath(1, ()), 0))
    # same endpoints, different net crossings
    assert word_end(g, a) == word_end(g, b)
    assert crossing_homomorphism(g, a) != crossing_homomorphism(g, b)
    assert equal_in_groupoid(g, relations(g), a, b, depth=3) is GroupoidEquality.UNKNOWN


def test_equal_requires_same_base():
    g = central_graph("A2:J={}")
    with pytest.raises(BaseMismatch):
        equal_in_groupoid(g, [], GroupoidWord(0, ()), GroupoidWord(1, ()), depth=1)


def test_equal_requires_same_end():
    g = central_graph("A2:J={}")
    e = g.out_edges(0)[0]
    with pytest.raises(BaseMismatch):
        equal_in_groupoid(g, [], GroupoidWord(0, ((e.id, 1),)), GroupoidWord(0, ()), depth=1)


def test_word_json_round_trip():
    g = central_graph("A2:J={}")
    w = generators(g)[3].loop
    assert word_from_json(word_to_json(w)) == w


def test_perm_parse_and_compose():
    a = parse_perm("(0 1)")
    b = parse_perm("(1 2)")
    # other-first composition: (a * b) applies b, then a
    assert (a * b).images == parse_perm("(0 1 2)").images
    assert str(parse_perm("(0 1 2)")) == "(0 1 2)"
    assert str(Perm.identity(3)) == "()"
    assert parse_perm("()").images == ()


def test_perm_inverse_and_extend():
    p = parse_perm("(0 2 1)")
    assert (p * p.inverse()).images == Perm.identity(3).images
    assert p.extend(5).images == (2, 0, 1, 3, 4)


def test_perm_rejects_garbage():
    for bad in ("(0 1", "(0 1)(1 2)", "0 1)", "(0 0)", "(0 1) x", "(-1 2)"):
        with pytest.raises(ValueError):
            parse_perm(bad)
