import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knotorder.errors import KnotFileSyntaxError
from knotorder.folding import FoldedGraph
from knotorder.homver import (
    Budget,
    HomCandidate,
    Move,
    SearchExhausted,
    TrivialityCertificate,
    apply_move,
    check_homomorphism,
    check_surjectivity,
    find_triviality_certificate,
    parse_hom_file,
    verify_candidate,
    verify_table,
)
from knotorder.replib import enumerate_reps, evaluate
from knotorder.words import concat, free_reduce, invert, substitute

SMALL = Budget(max_nodes=20_000)

MAP_11A6 = {1: (1,), 2: (1,), 3: (4,), 4: (3,), 5: (2, 1, -2), 6: (1, 2, -3),
            7: (1,), 8: (1,), 9: (1,), 10: (3,), 11: (2,)}


def identity(name, n):
    return HomCandidate(name, name, {g: (g,) for g in range(1, n + 1)})


def test_11a6_map_gives_ten_certificates(knots, homs):
    cand = HomCandidate("11a_6", "4_1", MAP_11A6)
    assert cand.images == next(h for h in homs if h.source == "11a_6").images
    certs = check_homomorphism(cand, knots)
    assert isinstance(certs, list) and len(certs) == 10
    for cert, r in zip(certs, knots["11a_6"].relators):
        assert cert.word == substitute(r, cand.images)
        assert cert.replay(knots["4_1"]) == ()


def test_identity_map(knots):
    cand = identity("3_1", 3)
    certs = check_homomorphism(cand, knots)
    assert all(c.verify(knots["3_1"]) for c in certs)
    surj = check_surjectivity(cand, knots)
    assert [w.expression for w in surj.witnesses] == [(1,), (2,), (3,)]


def test_commutator_image_exhausts_budget(knots):
    cand = HomCandidate("3_1", "3_1", {1: (1,), 2: (1,), 3: (2,)})
    assert substitute((1, 2, -1, -3), cand.images) == (1, -2)
    result = check_homomorphism(cand, knots, SMALL)
    assert result.cause == "budget-exhausted" and not result.definite


def test_exponent_sum_gate(knots):
    bad = HomCandidate("3_1", "3_1", {1: (1, 1), 2: (1,), 3: (1,)})
    result = check_homomorphism(bad, knots)
    assert result.cause == "exponent-sum" and result.definite


def test_11a5_fast_path(knots, homs):
    cand = next(h for h in homs if h.source == "11a_5")
    w = concat(concat(invert(cand.images[1]), cand.images[2]), cand.images[4])
    assert w == (2,)
    surj = check_surjectivity(cand, knots, fast_only=True)
    assert surj.verify(cand, knots["4_1"])


def test_cyclic_image_not_surjective(knots):
    cand = HomCandidate("3_1", "3_1", {1: (1,), 2: (1,), 3: (1,)})
    result = check_surjectivity(cand, knots, fast_only=True)
    assert result.where == "generator 2"


def test_move_replay(knots):
    P = knots["3_1"]
    r = P.relators[0]
    cert = TrivialityCertificate(invert(r), (Move(0, 0, 0, False),))
    assert cert.verify(P)
    assert apply_move(r, Move(0, 0, 0, False, "delete"), P) == ()
    with pytest.raises(ValueError):
        apply_move((1,), Move(5, 0, 0, False), P)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 1), st.integers(0, 3), st.booleans()), min_size=1, max_size=3),
       st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=3))
def test_search_finds_products_of_conjugated_relators(knots, pieces, u):
    P = knots["3_1"]
    w = ()
    for ri, rot, inv in pieces:
        r = P.relators[ri]
        r = r[rot:] + r[:rot]
        w = concat(w, invert(r) if inv else r)
    w = free_reduce(tuple(u) + w + invert(free_reduce(u)))
    try:
        cert = find_triviality_certificate(w, P, Budget(max_nodes=200_000))
    except SearchExhausted:
        return
    assert cert.replay(P) == ()


def test_certificates_never_for_nonzero_exponent(knots):
    with pytest.raises(SearchExhausted):
        find_triviality_certificate((1, 1, -2), knots["3_1"], Budget(max_nodes=5_000, max_depth=4))


def test_parse_hom_file_errors():
    assert parse_hom_file("") == []
    assert parse_hom_file("# nothing\n\n") == []
    for text, line in [
        ("map 1: 1\n", 1),
        ("hom a b\n", 1),
        ("hom a -> b\nmap 1 1\n", 2),
        ("hom a -> b\nmap 1: 0\n", 2),
        ("hom a -> b\nmap 1: 1\nmap 1: 2\n", 3),
        ("hom a -> b\nfoo\n", 2),
    ]:
        with pytest.raises(KnotFileSyntaxError) as info:
            parse_hom_file(text)
        assert info.value.line == line


def test_round_trip(homs):
    text = "".join(h.to_text() for h in homs)
    assert parse_hom_file(text) == homs


def test_bundled_table_all_pass(knots, homs):
    report = verify_table(knots, homs)
    assert len(report.results) == 20
    assert report.ok and report.exit_status == 0
    assert all(line.startswith("PASS ") for line in report.machine_lines())


def test_empty_hom_file(knots):
    report = verify_table(knots, "")
    assert report.results == [] and report.ok


def test_corrupted_entry(knots, homs):
    broken = HomCandidate(homs[0].source, homs[0].target, {**homs[0].images, 1: (1, 1)})
    report = verify_table(knots, [broken] + homs[1:4])
    lines = report.machine_lines()
    assert lines[0] == f"FAIL {broken.source} {broken.target} exponent-sum"
    assert all(x.startswith("PASS") for x in lines[1:])
    assert report.exit_status == 1


def test_unknown_presentation(knots):
    res = verify_candidate(HomCandidate("nope", "3_1", {1: (1,)}), knots)
    assert not res.passed and "unknown-presentation" in res.failure.cause


def test_images_kill_relators_in_representations(knots, homs):
    # independent check of the homomorphism property through finite quotients
    for cand in homs:
        tgt = knots[cand.target]
        for rho in enumerate_reps(tgt, 3):
            for r in knots[cand.source].relators:
                assert evaluate(substitute(r, cand.images), rho)[:4] == (1, 0, 0, 1)


# -- folding -------------------------------------------------------------------


def test_folding_membership():
    g = FoldedGraph({1: (1, 2), 2: (2,)})
    expr = g.read((1,))
    assert expr is not None
    assert free_reduce(substitute(expr, {1: (1, 2), 2: (2,)})) == (1,)
    assert FoldedGraph({1: (1, 1)}).read((1,)) is None
    assert FoldedGraph({1: (1, 2, -1)}).read((2,)) is None


words = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), min_size=1, max_size=6).map(free_reduce)


@settings(max_examples=80, deadline=None)
@given(st.lists(words, min_size=1, max_size=4), st.lists(st.integers(-4, 4).filter(bool), max_size=6))
def test_folding_reads_back_products(gens, picks):
    generators = {i + 1: w for i, w in enumerate(gens) if w}
    if not generators:
        return
    tokens = [t for t in picks if abs(t) in generators]
    target = free_reduce(x for t in tokens for x in (generators[t] if t > 0 else invert(generators[-t])))
    graph = FoldedGraph(generators)
    expr = graph.read(target)
    assert expr is not None
    assert free_reduce(substitute(expr, generators)) == target
