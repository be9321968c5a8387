"""Words, multidegrees, linear combinations, the braided shuffle."""

import math
import random
from fractions import Fraction

from hopfmin.words import (
    Element,
    block_size,
    braid_at,
    concat,
    multidegree,
    multidegrees_up_to,
    shuffle,
    shuffle_words,
    total_degree,
    words_of_multidegree,
)


def _random_braiding(rng, m):
    pool = [Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2),
            Fraction(-1, 3), Fraction(3, 2)]
    return tuple(tuple(rng.choice(pool) for _ in range(m)) for _ in range(m))


def test_multidegree_and_total():
    assert multidegree((1, 3, 1, 2), 3) == (2, 1, 1)
    assert multidegree((), 2) == (0, 0)
    assert total_degree((1, 3, 1, 2)) == 4


def test_block_size_is_multinomial():
    assert block_size((0,)) == 1
    assert block_size((2, 1)) == 3
    assert block_size((2, 2)) == 6
    assert block_size((1, 1, 1)) == 6
    assert block_size((3, 2, 1)) == math.factorial(6) // (6 * 2)


def test_words_of_multidegree():
    words = words_of_multidegree((2, 1))
    assert words == ((1, 1, 2), (1, 2, 1), (2, 1, 1))
    assert words == tuple(sorted(words))
    for deg in ((0, 0), (3, 1), (2, 2, 1)):
        ws = words_of_multidegree(deg)
        assert len(ws) == block_size(deg)
        assert len(set(ws)) == len(ws)
        assert all(multidegree(w, len(deg)) == deg for w in ws)


def test_multidegrees_up_to_order_and_count():
    degs = multidegrees_up_to(2, 3)
    assert degs[0] == (0, 0)
    totals = [sum(d) for d in degs]
    assert totals == sorted(totals)
    for m, n in ((1, 5), (2, 4), (3, 3)):
        assert len(multidegrees_up_to(m, n)) == math.comb(n + m, m)


def test_braid_at():
    b = ((Fraction(1), Fraction(2)), (Fraction(3), Fraction(4)))
    scalar, word = braid_at(b, (1, 2, 2), 0)
    assert scalar == Fraction(2)
    assert word == (2, 1, 2)
    scalar, word = braid_at(b, (1, 2, 2), 1)
    assert scalar == Fraction(4)
    assert word == (1, 2, 2)


def test_element_algebra():
    x = Element.of_word((1, 2))
    y = Element.of_word((2, 1), Fraction(3))
    s = x + y
    assert s.coeff((1, 2)) == 1
    assert s.coeff((2, 1)) == 3
    assert s.coeff((1, 1)) == 0
    assert (s - s) == Element.zero()
    assert not Element.zero()
    assert s.scaled(Fraction(1, 3)).coeff((2, 1)) == 1
    assert Element([((1,), 1), ((1,), -1)]) == Element.zero()
    assert len(s) == 2
    assert hash(x + y) == hash(y + x)


def test_concat():
    x = Element.of_word((1,)) + Element.of_word((2,)).scaled(Fraction(2))
    y = Element.of_word((1,))
    z = concat(x, y)
    assert z.coeff((1, 1)) == 1
    assert z.coeff((2, 1)) == 2
    assert concat(Element.zero(), x) == Element.zero()


def test_shuffle_classical_counts():
    # with braiding 1 the shuffle of distinct letters lists interleavings
    one = ((Fraction(1), Fraction(1), Fraction(1)),) * 3
    out = shuffle_words(one, (1, 2), (3,))
    assert out == {(1, 2, 3): 1, (1, 3, 2): 1, (3, 1, 2): 1}
    # repeated letters pick up multiplicity
    out = shuffle_words(one, (1, 1), (1, 1))
    assert out == {(1, 1, 1, 1): 6}


def test_shuffle_single_letters_pick_up_braiding():
    q = Fraction(5, 7)
    b = ((q,),)
    out = shuffle_words(b, (1,), (1,))
    assert out == {(1, 1): 1 + q}


def test_shuffle_unit_and_bilinearity():
    rng = random.Random(5)
    b = _random_braiding(rng, 2)
    u = Element.of_word((1, 2), Fraction(2)) + Element.of_word((2, 2))
    e = Element.of_word(())
    assert shuffle(b, u, e) == u
    assert shuffle(b, e, u) == u
    v = Element.of_word((1,))
    w = Element.of_word((2,), Fraction(3))
    lhs = shuffle(b, u, v + w)
    assert lhs == shuffle(b, u, v) + shuffle(b, u, w)


def test_shuffle_associative_random():
    rng = random.Random(17)
    for _ in range(20):
        m = rng.choice((2, 3))
        b = _random_braiding(rng, m)
        words = [tuple(rng.randint(1, m) for _ in range(rng.randint(0, 3)))
                 for _ in range(3)]
        x, y, z = (Element.of_word(w) for w in words)
        assert shuffle(b, shuffle(b, x, y), z) == shuffle(b, x, shuffle(b, y, z))


def test_shuffle_degree_is_graded():
    rng = random.Random(29)
    b = _random_braiding(rng, 2)
    out = shuffle_words(b, (1, 2), (2, 1))
    for w in out:
        assert multidegree(w, 2) == (2, 2)
