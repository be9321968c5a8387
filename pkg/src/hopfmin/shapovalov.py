"""Blockwise pairing matrices between the free and shuffle algebras.

For each multidegree the canonical map from the free braided algebra to the
shuffle algebra sends a word w to its braided symmetrization Sh(w), the sum
over all permutations of the letter positions, each permutation lifted along
a reduced word of adjacent braided swaps (the lift is well defined because
adjacent swaps of a diagonal braiding satisfy the braid relations). The
matrix of Sh on a multidegree block, columns indexed by source words, is the
object of interest here: its rank is the dimension of the minimal quotient
in that multidegree, and its determinant generalizes the classical pairing
determinant of highest-weight theory.

Sh is computed by the recursion

    S_1 = id,   S_n = (id (x) S_{n-1}) o R_n,
    R_n = id + c_1 + c_1 c_2 + ... + c_1 c_2 ... c_{n-1},

whose j-th term moves letter w[j] to the front across everything before it,
picking up prod_{i<j} b(w[i], w[j]). The permutation-sum definition is kept
alongside as an independent oracle and the two are compared in the tests.

Ranks are exact. Over QQ and cyclotomic fields a fraction-free elimination
runs directly on the scalars. Over QQ(t) rows are cleared to integer
polynomials and evaluated at a single integer point B chosen larger than any
coefficient a relevant minor polynomial can have: a nonzero minor then stays
nonzero at t = B, so the integer rank equals the rank over QQ(t). B is grown
adaptively until it covers minors one larger than the rank it reports.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .scalars import QT, Poly, RatFunc, cyclotomic_polynomial, poly_gcd
from .words import block_size, braid_at, words_of_multidegree

DEFAULT_BLOCK_LIMIT = 3000

_P_ONE = Poly((1,))


class BlockSizeError(RuntimeError):
    """A multidegree block would exceed the configured word limit."""

    def __init__(self, deg, size, limit):
        self.multidegree = tuple(deg)
        self.size = size
        self.limit = limit
        super().__init__(
            f"block {tuple(deg)} has {size} words, over the limit of {limit}")


@dataclass(frozen=True)
class SymMatrix:
    """Matrix of Sh on one multidegree block.

    entries[i][j] is the coefficient of words[i] in Sh(words[j]); all
    entries are scalars of the field.
    """

    multidegree: tuple[int, ...]
    words: tuple[tuple[int, ...], ...]
    entries: tuple[tuple[object, ...], ...]
    field: object


@dataclass(frozen=True)
class DetReport:
    multidegree: tuple[int, ...]
    size: int
    rank: int
    determinant: object
    factors: tuple[tuple[int, int, int], ...]
    remainder: object


class SymEngine:
    """Memoized symmetrizer over one braiding matrix.

    Results are raw word -> coefficient dicts shared across calls, so all
    sub-multidegrees of a block are computed once. Integer-valued Fraction
    braidings are thinned to ints, which keeps coefficient arithmetic on
    classical (all-ones) braidings in plain int.
    """

    def __init__(self, braiding):
        def slim(x):
            if isinstance(x, Fraction) and x.denominator == 1:
                return x.numerator
            return x

        self.b = tuple(tuple(slim(x) for x in row) for row in braiding)
        self.memo = {(): {(): 1}}
        self._load = 0

    def sym(self, w):
        got = self.memo.get(w)
        if got is not None:
            return got
        b = self.b
        out = {}
        for j in range(len(w)):
            head = w[j]
            hcol = head - 1
            scalar = 1
            for i in range(j):
                scalar = scalar * b[w[i] - 1][hcol]
            if not scalar:
                continue
            sub = self.sym(w[:j] + w[j + 1:])
            for u, c in sub.items():
                key = (head,) + u
                prev = out.get(key)
                if prev is None:
                    out[key] = scalar * c
                else:
                    merged = prev + scalar * c
                    if merged:
                        out[key] = merged
                    else:
                        del out[key]
        self.memo[w] = out
        self._load += len(out)
        return out

    def trim(self, coeff_limit=400_000):
        """Drop the memo when it holds too many coefficients; called between
        blocks so in-flight recursions never lose entries they rely on."""
        if self._load > coeff_limit:
            self.memo = {(): {(): 1}}
            self._load = 0


def matrix_rows(datum, deg, engine=None):
    """Words of the block and the Sh matrix as row lists of field scalars."""
    words = words_of_multidegree(deg)
    if engine is None:
        engine = SymEngine(datum.braiding_matrix)
    cols = [engine.sym(w) for w in words]
    coerce = datum.field.coerce
    zero = datum.field.zero()
    rows = []
    for u in words:
        row = []
        for col in cols:
            c = col.get(u)
            row.append(zero if c is None else coerce(c))
        rows.append(row)
    return words, rows


def symmetrizer(datum, deg, block_limit=DEFAULT_BLOCK_LIMIT):
    """The Sh matrix of one multidegree block as a SymMatrix."""
    size = block_size(deg)
    if block_limit is not None and size > block_limit:
        raise BlockSizeError(deg, size, block_limit)
    words, rows = matrix_rows(datum, deg)
    return SymMatrix(tuple(deg), words, tuple(tuple(r) for r in rows),
                     datum.field)


# ---------------------------------------------------------------------------
# permutation-sum oracle


def bubble_word(perm):
    """One reduced swap sequence sorting the array, positions 0-based.

    The sequence length equals the inversion count, so the corresponding
    braided lift is length-minimal.
    """
    arr = list(perm)
    seq = []
    changed = True
    while changed:
        changed = False
        for i in range(len(arr) - 1):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                seq.append(i)
                changed = True
    return tuple(seq)


def all_reduced_words(perm):
    """Every reduced swap sequence sorting the array; exponential, keep small."""
    arr = tuple(perm)
    if all(arr[i] <= arr[i + 1] for i in range(len(arr) - 1)):
        return ((),)
    out = []
    for i in range(len(arr) - 1):
        if arr[i] > arr[i + 1]:
            swapped = arr[:i] + (arr[i + 1], arr[i]) + arr[i + 2:]
            for rest in all_reduced_words(swapped):
                out.append((i,) + rest)
    return tuple(out)


def apply_braid_word(b, word, positions):
    """Apply successive braided swaps, returning (scalar, final word)."""
    scalar = 1
    cur = tuple(word)
    for p in positions:
        s, cur = braid_at(b, cur, p)
        scalar = scalar * s
    return scalar, cur


def permutation_sum_oracle(datum, deg, total_bound=5):
    """Sh on a block straight from the definition: sum over all permutations
    of braided lifts along reduced words. Factorial cost; the bound guards it.
    """
    total = sum(deg)
    if total > total_bound:
        raise ValueError(
            f"oracle bound {total_bound} exceeded for multidegree {tuple(deg)}")
    words = words_of_multidegree(deg)
    b = datum.braiding_matrix
    cols = []
    for w in words:
        acc = {}
        for perm in itertools.permutations(range(total)):
            scalar, cur = apply_braid_word(b, w, bubble_word(perm))
            merged = acc.get(cur, 0) + scalar
            if merged:
                acc[cur] = merged
            else:
                acc.pop(cur, None)
        cols.append(acc)
    coerce = datum.field.coerce
    zero = datum.field.zero()
    entries = tuple(
        tuple(zero if cols[j].get(u) is None else coerce(cols[j][u])
              for j in range(len(words)))
        for u in words)
    return SymMatrix(tuple(deg), words, entries, datum.field)


# ---------------------------------------------------------------------------
# exact rank and determinant


def _eliminate(rows, div):
    """Fraction-free Bareiss elimination in place.

    Pivots are the first nonzero entry of each column scanning down from the
    current row; columns without one are skipped. Returns (rank, sign,
    last_pivot); entries of finished rows are left stale but are never read
    again. div performs the exact division by the previous pivot.
    """
    n = len(rows)
    if n == 0:
        return 0, 1, None
    ncols = len(rows[0])
    prev = None
    rank = 0
    sign = 1
    for col in range(ncols):
        piv = None
        for i in range(rank, n):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        if piv != rank:
            rows[rank], rows[piv] = rows[piv], rows[rank]
            sign = -sign
        prow = rows[rank]
        p = prow[col]
        for i in range(rank + 1, n):
            ri = rows[i]
            a = ri[col]
            if a:
                for j in range(col + 1, ncols):
                    val = p * ri[j] - a * prow[j]
                    ri[j] = div(val, prev) if prev is not None else val
            else:
                for j in range(col + 1, ncols):
                    v = ri[j]
                    if v:
                        val = p * v
                        ri[j] = div(val, prev) if prev is not None else val
        prev = p
        rank += 1
        if rank == n:
            break
    return rank, sign, prev


def _div_generic(v, p):
    return v / p


def _div_qt(v, p):
    # Bareiss guarantees divisibility in ZZ[t]; skip the gcd of a general
    # rational-function division when both operands sit over denominator 1
    if v.den.coeffs == (1,) and p.den.coeffs == (1,):
        try:
            return RatFunc(v.num.exact_div(p.num), _P_ONE)
        except ValueError:
            pass
    return v / p


def _int_eliminate(rows):
    """Bareiss rank of an integer matrix; divisions are exact by the minor
    identity, so floor division is safe."""
    n = len(rows)
    if n == 0:
        return 0
    ncols = len(rows[0])
    prev = None
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, n):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        if piv != rank:
            rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        p = prow[col]
        for i in range(rank + 1, n):
            ri = rows[i]
            a = ri[col]
            if a:
                if prev is None:
                    for j in range(col + 1, ncols):
                        ri[j] = p * ri[j] - a * prow[j]
                else:
                    for j in range(col + 1, ncols):
                        ri[j] = (p * ri[j] - a * prow[j]) // prev
            else:
                if prev is None:
                    for j in range(col + 1, ncols):
                        if ri[j]:
                            ri[j] = p * ri[j]
                else:
                    for j in range(col + 1, ncols):
                        if ri[j]:
                            ri[j] = (p * ri[j]) // prev
        prev = p
        rank += 1
        if rank == n:
            break
    return rank


def _row_to_int_polys(row):
    """Clear denominators and shared content of a RatFunc row; returns
    coefficient tuples. Row scalings leave the rank unchanged."""
    lcm = _P_ONE
    for e in row:
        if e.num.coeffs and e.den.coeffs != (1,):
            g = poly_gcd(lcm, e.den)
            lcm = lcm * e.den.exact_div(g) if g.coeffs != (1,) else lcm * e.den
    out = []
    for e in row:
        if not e.num.coeffs:
            out.append(())
            continue
        scaled = e * RatFunc(lcm, _P_ONE)
        out.append(scaled.num.coeffs)
    return out


def _rank_qt_certified(rows):
    """Exact rank over QQ(t) by integer evaluation with a height certificate.

    After clearing each row to integer polynomials, let H bound the
    coefficients and D the degrees. An s x s minor of the matrix is a
    polynomial of height at most s! * H**s * (D+1)**(s-1); evaluating at an
    integer B exceeding that bound plus one sends every nonzero minor to a
    nonzero integer. The integer rank then both lower-bounds the rank over
    QQ(t) (evaluation never raises rank) and upper-bounds it (all minors one
    size larger vanish identically). s starts small and grows until it
    covers rank + 1.
    """
    polys = [_row_to_int_polys(row) for row in rows]
    height = 0
    degree = 0
    for prow in polys:
        for coeffs in prow:
            if coeffs:
                degree = max(degree, len(coeffs) - 1)
                h = max(abs(c) for c in coeffs)
                if h > height:
                    height = h
    if height == 0:
        return 0
    dim = min(len(polys), len(polys[0]) if polys else 0)
    s = min(dim, 8)
    while True:
        bound = factorial(s) * height ** s * (degree + 1) ** max(s - 1, 0)
        base = bound + 2
        ints = []
        for prow in polys:
            row = []
            for coeffs in prow:
                acc = 0
                for c in reversed(coeffs):
                    acc = acc * base + c
                row.append(acc)
            ints.append(row)
        r = _int_eliminate(ints)
        if r == dim or r + 1 <= s:
            return r
        s = min(r + 1, dim)


def rank_rows(field, rows):
    """Exact rank of a block given as lists of field scalars."""
    if not rows:
        return 0
    if field == QT:
        return _rank_qt_certified(rows)
    work = [list(r) for r in rows]
    r, _, _ = _eliminate(work, _div_generic)
    return r


def rank(mat):
    """Exact rank of a SymMatrix over its field."""
    return rank_rows(mat.field, [list(r) for r in mat.entries])


def rank_symbolic(mat):
    """Rank by symbolic fraction-free elimination, for any field.

    Slower than rank() over QQ(t); kept as the independent second route and
    used by the tests to cross-check the evaluation certificate.
    """
    div = _div_qt if mat.field == QT else _div_generic
    work = [list(r) for r in mat.entries]
    r, _, _ = _eliminate(work, div)
    return r


def gram_determinant(datum, deg, factor_bound=24,
                     block_limit=DEFAULT_BLOCK_LIMIT):
    """Determinant of the block matrix, with cyclotomic factors split off.

    Over QQ(t) the numerator is probed by trial exact division against
    Phi_k(t**j) for k*j up to factor_bound, in ascending (j, k) order; the
    unfactored remainder keeps whatever is left, including the denominator.
    Symbolic elimination, so intended for moderate blocks.
    """
    mat = symmetrizer(datum, deg, block_limit=block_limit)
    n = len(mat.words)
    field = mat.field
    rows = [list(r) for r in mat.entries]
    factors_out = ()
    if field == QT:
        scale = field.one()
        for i, row in enumerate(rows):
            lcm = _P_ONE
            for e in row:
                if e.num.coeffs and e.den.coeffs != (1,):
                    g = poly_gcd(lcm, e.den)
                    lcm = lcm * e.den.exact_div(g) if g.coeffs != (1,) else lcm * e.den
            if lcm.coeffs != (1,):
                f = RatFunc(lcm, _P_ONE)
                rows[i] = [e * f for e in row]
                scale = scale * f
        r, sign, last = _eliminate(rows, _div_qt)
        if r < n:
            det = field.zero()
        else:
            det = (last if sign == 1 else -last) / scale
    else:
        r, sign, last = _eliminate(rows, _div_generic)
        det = field.zero() if r < n else (last if sign == 1 else -last)
    remainder = det
    if field == QT and det:
        num = det.num
        found = []
        for j in range(1, factor_bound + 1):
            for k in range(1, factor_bound // j + 1):
                cand = cyclotomic_polynomial(k).compose_power(j)
                mult = 0
                while True:
                    try:
                        num = num.exact_div(cand)
                    except ValueError:
                        break
                    mult += 1
                if mult:
                    found.append((k, j, mult))
        factors_out = tuple(found)
        remainder = RatFunc(num, det.den)
    return DetReport(tuple(deg), n, r, det, factors_out, remainder)
