"""Words in the letters 1..m and the two graded products on their span.

A word is a tuple of letters; its multidegree counts each letter. The free
algebra multiplies words by concatenation. The shuffle algebra interleaves
them, and each time a letter x from the left word ends up after a letter y
from the right word the coefficient picks up the braiding scalar b(x, y).
Both products are graded by multidegree and share the unit: the empty word.

The braiding matrix b is a nested tuple of scalars indexed by letters
(1-based letters, so entry b[x-1][y-1] is the scalar for the pair (x, y)).
"""

from __future__ import annotations

from math import comb


def multidegree(word, m):
    """Letter counts of a word, as a length-m tuple.

    >>> multidegree((1, 3, 1), 3)
    (2, 0, 1)
    """
    deg = [0] * m
    for letter in word:
        deg[letter - 1] += 1
    return tuple(deg)


def total_degree(word):
    return len(word)


def weight(datum, word):
    """Sum of the characters carried by the letters, a lattice vector."""
    acc = [0] * datum.rank
    for letter in word:
        for k, e in enumerate(datum.alphas[letter - 1]):
            acc[k] += e
    return tuple(acc)


def block_size(deg):
    """Number of words of the multidegree: the multinomial coefficient."""
    total = 0
    out = 1
    for d in deg:
        if d < 0:
            raise ValueError("multidegrees are componentwise nonnegative")
        total += d
        out *= comb(total, d)
    return out


def words_of_multidegree(deg):
    """All words with the given letter counts, in lexicographic order.

    >>> words_of_multidegree((1, 2))
    ((1, 2, 2), (2, 1, 2), (2, 2, 1))
    """
    m = len(deg)
    total = sum(deg)
    counts = list(deg)
    word = []
    out = []

    def rec():
        if len(word) == total:
            out.append(tuple(word))
            return
        for i in range(m):
            if counts[i]:
                counts[i] -= 1
                word.append(i + 1)
                rec()
                word.pop()
                counts[i] += 1

    rec()
    return tuple(out)


def multidegrees_up_to(m, max_total):
    """All multidegrees with total <= max_total, ordered by (total, lex)."""
    out = []

    def rec(prefix, remaining):
        if len(prefix) == m - 1:
            out.append(prefix + (remaining,))
            return
        for a in range(remaining + 1):
            rec(prefix + (a,), remaining - a)

    for total in range(max_total + 1):
        rec((), total)
    return tuple(out)


def braid_at(b, word, k):
    """Swap positions k and k+1 (0-based), returning (scalar, new word).

    The scalar is b(x, y) for the departing pair x = word[k], y = word[k+1].
    """
    x = word[k]
    y = word[k + 1]
    return b[x - 1][y - 1], word[:k] + (y, x) + word[k + 2:]


class Element:
    """Finite linear combination of words with exact scalar coefficients.

    Zero coefficients are dropped on construction, iteration is sorted by
    word, and equality is coefficientwise.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        data = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for word, coeff in items:
            if word in data:
                coeff = data[word] + coeff
            if coeff:
                data[word] = coeff
            else:
                data.pop(word, None)
        self._terms = data

    @classmethod
    def of_word(cls, word, coeff=1):
        el = cls.__new__(cls)
        el._terms = {tuple(word): coeff} if coeff else {}
        return el

    @classmethod
    def zero(cls):
        el = cls.__new__(cls)
        el._terms = {}
        return el

    def terms(self):
        """Sorted (word, coefficient) pairs."""
        return sorted(self._terms.items())

    def coeff(self, word):
        return self._terms.get(tuple(word), 0)

    def support(self):
        return sorted(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __add__(self, other):
        out = dict(self._terms)
        for word, coeff in other._terms.items():
            merged = out.get(word, 0) + coeff
            if merged:
                out[word] = merged
            else:
                out.pop(word, None)
        el = Element.__new__(Element)
        el._terms = out
        return el

    def __neg__(self):
        el = Element.__new__(Element)
        el._terms = {w: -c for w, c in self._terms.items()}
        return el

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, scalar):
        if not scalar:
            return Element.zero()
        el = Element.__new__(Element)
        el._terms = {w: c * scalar for w, c in self._terms.items()}
        return el

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self.terms()))

    def __repr__(self):
        if not self._terms:
            return "Element()"
        parts = [f"{coeff!r}*{''.join(map(str, word))}"
                 for word, coeff in self.terms()]
        return " + ".join(parts)


def concat(x, y):
    """Concatenation product, extended bilinearly to Elements."""
    out = {}
    for u, cu in x._terms.items():
        for v, cv in y._terms.items():
            w = u + v
            merged = out.get(w, 0) + cu * cv
            if merged:
                out[w] = merged
            else:
                out.pop(w, None)
    el = Element.__new__(Element)
    el._terms = out
    return el


def shuffle_words(b, u, v):
    """Braided shuffle of two words, as a word -> coefficient dict.

    Recursion on last letters, for u = u'a and v = v'y:

        u sh v = beta * (u' sh v) a  +  (u sh v') y

    where beta multiplies the braiding scalars b(a, z) over every letter z
    of v, since a ends up after all of v in the first group of terms.
    """
    memo = {}

    def rec(u, v):
        got = memo.get((u, v))
        if got is not None:
            return got
        if not u:
            out = {v: 1}
        elif not v:
            out = {u: 1}
        else:
            a = u[-1]
            beta = 1
            row = b[a - 1]
            for z in v:
                beta = beta * row[z - 1]
            out = {}
            for w, c in rec(u[:-1], v).items():
                out[w + (a,)] = c * beta
            y = v[-1]
            for w, c in rec(u, v[:-1]).items():
                key = w + (y,)
                merged = out.get(key, 0) + c
                if merged:
                    out[key] = merged
                else:
                    out.pop(key, None)
        memo[(u, v)] = out
        return out

    return rec(tuple(u), tuple(v))


def shuffle(b, x, y):
    """Braided shuffle product of Elements over the braiding matrix b."""
    out = Element.zero()
    for u, cu in x._terms.items():
        for v, cv in y._terms.items():
            c = cu * cv
            part = Element.__new__(Element)
            part._terms = {w: s * c for w, s in shuffle_words(b, u, v).items()}
            out = out + part
    return out
