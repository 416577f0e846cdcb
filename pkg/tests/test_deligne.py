import json
import random
from collections import defaultdict

import pytest

import oracles
from conftest import WORKED_PATH, paths_upto, random_path, walls_of
from hyperdeligne import (
    Arrow,
    Atom,
    DeligneNF,
    GroupoidWord,
    NotAWall,
    PositivePath,
    Verdict,
    canonical_atom,
    deligne_nf,
    equivalence_class,
    extend_atom,
    fraction_form,
    groupoid_equal,
    is_atom,
    nf_validate,
    parse_path,
    target,
    word_problem,
)
from hyperdeligne.deligne import dumps_nf

WORKED = parse_path(WORKED_PATH)


# -- normal form ------------------------------------------------------------------

def test_worked_normal_form(g26):
    nf = deligne_nf(g26, WORKED)
    assert nf.k == 4 and nf.lengths == [4, 3, 2, 1]
    assert [t for _, t in nf.endpoints(g26)] == ["----", "+-++", "+---", "+-+-"]
    assert nf.source == "++++" and nf.target == "+-+-"
    assert nf_validate(g26, nf)
    assert word_problem(g26, WORKED, nf.path())
    assert nf.to_text(g26).startswith("++++ [0,2,3,1] ---- | ")


def test_normal_form_of_atoms_and_trivial_paths(g26):
    for c in g26.ids:
        for d in g26.ids:
            a = canonical_atom(g26, c, d)
            nf = deligne_nf(g26, a)
            assert nf.factors == ((a,) if a.crossings else ())
    assert deligne_nf(g26, parse_path("++++:0,0")).lengths == [1, 1]


def test_normal_form_json(g26):
    data = json.loads(dumps_nf(g26, deligne_nf(g26, WORKED)))
    assert data["source"] == "++++" and data["target"] == "+-+-"
    assert data["factors"][0] == {"crossings": [0, 2, 3, 1], "source": "++++", "target": "----"}


def test_every_normal_form_validates_and_is_greedy(g26):
    walls = walls_of(g26)
    for p in paths_upto(g26, 6, starts=["++++", "-+-+"]):
        nf = deligne_nf(g26, p)
        assert nf_validate(g26, nf)
        assert sum(nf.lengths) == len(p)
        # greedy: each factor is the longest atomic prefix over the oracle class of the remainder
        rest = p
        for f in nf.factors:
            cls = oracles.equivalence_class(walls, rest.start, rest.crossings)
            longest = max(_atomic_prefix(g26, rest.start, q) for q in cls)
            assert len(f) == longest
            member = min(q for q in cls if q[:len(f)] in {m for m in oracles.minimal_paths(
                walls, f.start, target(g26, f))})
            rest = PositivePath(target(g26, f), member[len(f):])


def _atomic_prefix(g, start, crossings):
    seen = set()
    for i, h in enumerate(crossings):
        if h in seen:
            return i
        seen.add(h)
    return len(crossings)


def test_nf_validate_rejects_bad_splits(g26):
    bad = DeligneNF("++++", "-+-+", (Atom("++++", (0,)), Atom("-+++", (2,))))
    assert not nf_validate(g26, bad)
    assert nf_validate(g26, DeligneNF("++++", "++++", ()))
    broken = DeligneNF("++++", "----", (Atom("++++", (0,)), Atom("+-++", (3,))))
    assert not nf_validate(g26, broken)


def test_factor_count_moves_by_at_most_one(g26):
    for p in paths_upto(g26, 5, starts=["++++", "+---"]):
        k = deligne_nf(g26, p).k
        t = target(g26, p)
        for h in g26.walls(t):
            assert abs(deligne_nf(g26, PositivePath(p.start, p.crossings + (h,))).k - k) <= 1


# -- word problem -----------------------------------------------------------------

def test_word_problem_examples(g26):
    assert word_problem(g26, WORKED, deligne_nf(g26, WORKED).path())
    assert word_problem(g26, parse_path("++++:0,2,3,1"), parse_path("++++:1,3,2,0"))
    assert not word_problem(g26, parse_path("++++:0,0"), parse_path("++++:0"))
    assert not word_problem(g26, parse_path("++++:0"), parse_path("----:0"))


def test_word_problem_matches_oracle_classes(g26):
    walls = walls_of(g26)
    groups = defaultdict(list)
    for p in paths_upto(g26, 5):
        groups[(p.start, target(g26, p))].append(p)
    for group in groups.values():
        for p in group:
            cls = oracles.equivalence_class(walls, p.start, p.crossings)
            for q in group:
                assert word_problem(g26, p, q) == (q.crossings in cls)


def test_word_problem_random_seven_plane(g23):
    rng = random.Random(5)
    walls = walls_of(g23)
    for _ in range(60):
        p = random_path(g23, rng, 6)
        cls = sorted(oracles.equivalence_class(walls, p.start, p.crossings))
        q = PositivePath(p.start, rng.choice(cls))
        assert word_problem(g23, p, q)
        t = target(g23, p)
        for h in sorted(g23.walls(t)):
            r = PositivePath(p.start, p.crossings + (h, h))
            for s in sorted(g23.walls(t)):
                other = PositivePath(p.start, p.crossings + (s, s))
                assert word_problem(g23, r, other) == (other.crossings in
                                                      oracles.equivalence_class(walls, r.start, r.crossings))


# -- extension lemma --------------------------------------------------------------

def test_extend_atom_examples(g26):
    a = parse_path("++++:0")
    ext = extend_atom(g26, a, 1, "prepend")
    assert ext is not None and ext.start == "+-++" and ext.crossings == (1, 0)
    assert extend_atom(g26, a, 0, "prepend") is None
    full = parse_path("++++:0,2,3,1")
    assert all(extend_atom(g26, full, h, "append") is None for h in g26.walls("----"))
    with pytest.raises(NotAWall):
        extend_atom(g26, a, 1, "append")
    with pytest.raises(ValueError):
        extend_atom(g26, a, 1, "sideways")


def test_extend_atom_agrees_with_literal_check(g26):
    walls = walls_of(g26)
    for c in g26.ids:
        for d in g26.ids:
            for a in (Atom(c, cr) for cr in oracles.minimal_paths(walls, c, d)):
                for h in sorted(g26.walls(d)):
                    lit = PositivePath(c, a.crossings + (h,))
                    assert (extend_atom(g26, a, h, "append") is not None) == is_atom(g26, lit)
                for h in sorted(g26.walls(c)):
                    lit = PositivePath(g26.step(c, h), (h,) + a.crossings)
                    assert (extend_atom(g26, a, h, "prepend") is not None) == is_atom(g26, lit)


# -- groupoid words ---------------------------------------------------------------

def _word(g, literal):
    return GroupoidWord.from_path(g, parse_path(literal))


def test_cancellation(g26):
    w = _word(g26, "++++:0")
    assert groupoid_equal(g26, w.then(w.inverse()), GroupoidWord("++++")) is Verdict.EQUAL
    assert groupoid_equal(g26, w.inverse().then(w), GroupoidWord("-+++")) is Verdict.EQUAL


def test_fraction_identity(g26):
    for c in g26.ids:
        for d in g26.ids:
            for e in g26.ids:
                a, b = canonical_atom(g26, c, e), canonical_atom(g26, d, e)
                p, q = fraction_form(g26, a, b)
                left = GroupoidWord.from_path(g26, a).then(GroupoidWord.from_path(g26, b).inverse())
                right = GroupoidWord.from_path(g26, p).inverse().then(GroupoidWord.from_path(g26, q))
                assert groupoid_equal(g26, left, right) is Verdict.EQUAL


def test_positive_words_agree_with_word_problem(g26):
    groups = defaultdict(list)
    for p in paths_upto(g26, 4, starts=["++++", "-+--"]):
        groups[(p.start, target(g26, p))].append(p)
    for group in groups.values():
        for p in group:
            for q in group:
                v = groupoid_equal(g26, GroupoidWord.from_path(g26, p), GroupoidWord.from_path(g26, q))
                assert v is not Verdict.INCONCLUSIVE
                assert (v is Verdict.EQUAL) == word_problem(g26, p, q)


def test_loops_are_not_trivial(g26):
    # crossing a wall twice is a nontrivial loop in the groupoid
    assert groupoid_equal(g26, _word(g26, "++++:0,0"), GroupoidWord("++++")) is Verdict.NOT_EQUAL
    full = _word(g26, "++++:0,2,3,1")
    back = _word(g26, "----:0,2,3,1")
    assert groupoid_equal(g26, full.then(back), GroupoidWord("++++")) is Verdict.NOT_EQUAL


def test_mixed_words_against_free_reduction(g26):
    # words that cancel letter by letter to the same reduced word are equal
    rng = random.Random(2)
    for _ in range(40):
        p = random_path(g26, rng, 4)
        w = GroupoidWord.from_path(g26, p)
        t = target(g26, p)
        h = rng.choice(sorted(g26.walls(t)))
        x = GroupoidWord(t, ((Arrow(t, g26.step(t, h), h), 1),))
        padded = w.then(x).then(x.inverse())
        assert groupoid_equal(g26, padded, w) is Verdict.EQUAL


def test_mismatched_endpoints(g26):
    assert groupoid_equal(g26, _word(g26, "++++:0"), _word(g26, "++++:1")) is Verdict.NOT_EQUAL
    bad = GroupoidWord("++++", ((Arrow("----", "+---", 1), 1),))
    assert groupoid_equal(g26, bad, bad) is Verdict.NOT_EQUAL


def test_class_of_worked_path_is_word_problem_class(g26):
    cls = equivalence_class(g26, WORKED)
    for p in cls:
        assert word_problem(g26, p, WORKED)
