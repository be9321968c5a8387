"""Exact coefficient arithmetic for the engine.

Three coefficient fields are supported, all with canonical internal forms so
that equal values compare equal structurally and render to identical strings:

* rational numbers, taken directly from ``fractions.Fraction``;
* rational functions QQ(t), stored as a reduced pair of integer-coefficient
  polynomials (``RatFunc``);
* cyclotomic fields QQ(zeta_N), stored as coordinate vectors modulo the N-th
  cyclotomic polynomial (``Cyclotomic``).

Every scalar supports +, -, *, ** with integer exponents (negative allowed
for invertible values), division, exact equality, hashing, and a falsy zero.
Python ints and Fractions mix freely with RatFunc and Cyclotomic values;
mixing the t-function field with a cyclotomic field raises FieldMismatchError
rather than guessing an embedding.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd


class FieldMismatchError(TypeError):
    """Raised when scalars from incompatible fields meet in one operation."""


class ScalarParseError(ValueError):
    """Raised when a scalar literal does not match the grammar."""


class SpecializationPoleError(ArithmeticError):
    """Raised when a rational function has a pole at the requested root of unity."""


# ---------------------------------------------------------------------------
# integer-coefficient polynomials


def _trim(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class Poly:
    """Polynomial in t over the integers, coefficients ascending, trimmed.

    The zero polynomial is the empty tuple and has degree -1.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = self.coeffs
        if not isinstance(c, tuple) or (c and not c[-1]):
            object.__setattr__(self, "coeffs", _trim(tuple(c)))

    @classmethod
    def const(cls, n):
        return cls((int(n),))

    @classmethod
    def monomial(cls, coeff, exp):
        if exp < 0:
            raise ValueError("Poly exponents must be nonnegative")
        return cls((0,) * exp + (int(coeff),))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(tuple(out))

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _P_ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return Poly(tuple(out))

    def scaled(self, n):
        if not n:
            return _P_ZERO
        return Poly(tuple(c * n for c in self.coeffs))

    def shifted(self, k):
        """Multiply by t**k, k >= 0."""
        if self.is_zero() or k == 0:
            return self
        return Poly((0,) * k + self.coeffs)

    def compose_power(self, j):
        """Substitute t -> t**j."""
        if j == 1 or self.is_zero():
            return self
        out = [0] * (self.degree * j + 1)
        for i, c in enumerate(self.coeffs):
            out[i * j] = c
        return Poly(tuple(out))

    @property
    def content(self):
        g = 0
        for c in self.coeffs:
            g = _int_gcd(g, c)
        return g

    def primitive_part(self):
        c = self.content
        if c in (0, 1):
            return self
        return Poly(tuple(x // c for x in self.coeffs))

    def trailing_zeros(self):
        k = 0
        for c in self.coeffs:
            if c:
                break
            k += 1
        return k

    def exact_div(self, other):
        """Exact quotient in ZZ[t]; raises ValueError when not divisible."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return _P_ZERO
        rem = list(self.coeffs)
        dc = other.coeffs
        dd = len(dc) - 1
        dl = dc[-1]
        qd = len(rem) - 1 - dd
        if qd < 0:
            raise ValueError("not divisible")
        q = [0] * (qd + 1)
        for k in range(qd, -1, -1):
            head = rem[k + dd]
            if head % dl:
                raise ValueError("not divisible")
            f = head // dl
            q[k] = f
            if f:
                for i, c in enumerate(dc):
                    rem[k + i] -= f * c
        if any(rem[:dd] if dd else []):
            raise ValueError("not divisible")
        return Poly(tuple(q))

    def divides(self, other):
        try:
            other.exact_div(self)
        except ValueError:
            return False
        return True

    def eval_at(self, x):
        """Horner evaluation; x may be any scalar with * and +."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        return poly_str(self.coeffs)

    __repr__ = __str__


_P_ZERO = Poly(())
_P_ONE = Poly((1,))
_P_T = Poly((0, 1))


def _pseudo_rem(a, b):
    """Pseudo-remainder of a by b over ZZ[t]: lc(b)**k * a mod b."""
    rem = list(a.coeffs)
    dc = b.coeffs
    dd = len(dc) - 1
    dl = dc[-1]
    while len(rem) - 1 >= dd and any(rem):
        while rem and not rem[-1]:
            rem.pop()
        if len(rem) - 1 < dd:
            break
        head = rem[-1]
        k = len(rem) - 1 - dd
        rem = [c * dl for c in rem]
        for i, c in enumerate(dc):
            rem[k + i] -= head * c
        rem.pop()
    return Poly(tuple(rem))


def poly_gcd(a, b):
    """Primitive gcd in ZZ[t] with positive leading coefficient.

    Runs the primitive polynomial remainder sequence, so contents never
    accumulate; gcd of the contents is intentionally not included.
    """
    a = a.primitive_part()
    b = b.primitive_part()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        a, b = b, _pseudo_rem(a, b).primitive_part()
    if a.lc < 0:
        a = -a
    return a


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """The n-th cyclotomic polynomial as an integer Poly.

    Computed by dividing t**n - 1 by the cyclotomic polynomials of all
    proper divisors of n.

    >>> str(cyclotomic_polynomial(4))
    't^2 + 1'
    >>> str(cyclotomic_polynomial(6))
    't^2 - t + 1'
    """
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    num = Poly((-1,) + (0,) * (n - 1) + (1,))
    den = _P_ONE
    for d in range(1, n):
        if n % d == 0:
            den = den * cyclotomic_polynomial(d)
    return num.exact_div(den)


# ---------------------------------------------------------------------------
# rational functions over QQ, canonical reduced pairs in ZZ[t]


def _canonical_pair(num, den):
    """Reduce to the unique form: coprime in QQ[t], coprime integer contents,
    positive leading coefficient on the denominator."""
    if den.is_zero():
        raise ZeroDivisionError("rational function with zero denominator")
    if num.is_zero():
        return _P_ZERO, _P_ONE
    k = min(num.trailing_zeros(), den.trailing_zeros())
    if k:
        num = Poly(num.coeffs[k:])
        den = Poly(den.coeffs[k:])
    cn = num.content
    cd = den.content
    c = _int_gcd(cn, cd)
    if c > 1:
        num = Poly(tuple(x // c for x in num.coeffs))
        den = Poly(tuple(x // c for x in den.coeffs))
    if den.degree > 0 and num.degree > 0:
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
    if den.lc < 0:
        num, den = -num, -den
    return num, den


@dataclass(frozen=True)
class RatFunc:
    """Element of QQ(t) in canonical reduced form."""

    num: Poly = _P_ZERO
    den: Poly = _P_ONE

    def __post_init__(self):
        if self.den.coeffs != (1,):
            n, d = _canonical_pair(self.num, self.den)
            object.__setattr__(self, "num", n)
            object.__setattr__(self, "den", d)

    @classmethod
    def const(cls, q):
        q = Fraction(q)
        return cls(Poly.const(q.numerator), Poly.const(q.denominator))

    @classmethod
    def t_power(cls, k):
        """The Laurent monomial t**k for any integer k."""
        if k >= 0:
            return cls(Poly.monomial(1, k), _P_ONE)
        return cls(_P_ONE, Poly.monomial(1, -k))

    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFunc.const(x)
        if isinstance(x, Cyclotomic):
            raise FieldMismatchError(
                "cannot mix rational functions in t with cyclotomic values")
        return None

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.coeffs == (1,) == o.den.coeffs:
            return RatFunc(self.num + o.num, _P_ONE)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError("scalar exponents must be integers")
        if n < 0:
            if self.num.is_zero():
                raise ZeroDivisionError("zero has no negative powers")
            base = RatFunc(self.den, self.num)
            n = -n
        else:
            base = self
        out = _RF_ONE
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.num.degree <= 0 and self.den.degree <= 0:
            return hash(Fraction(self.num.lc, self.den.lc or 1))
        return hash((self.num.coeffs, self.den.coeffs))

    def as_fraction(self):
        """The value as a Fraction when it is constant, else None."""
        if self.num.degree <= 0 and self.den.degree <= 0:
            return Fraction(self.num.lc, self.den.lc)
        return None

    def __str__(self):
        return render_ratfunc(self)

    __repr__ = __str__


_RF_ZERO = RatFunc(_P_ZERO, _P_ONE)
_RF_ONE = RatFunc(_P_ONE, _P_ONE)


# ---------------------------------------------------------------------------
# cyclotomic fields, coordinates modulo Phi_N


def _phi_degree(n):
    return cyclotomic_polynomial(n).degree


def _reduce_mod_phi(coeffs, n):
    """Reduce a Fraction-coefficient coordinate list modulo Phi_n."""
    phi = cyclotomic_polynomial(n).coeffs
    d = len(phi) - 1
    rem = list(coeffs)
    for k in range(len(rem) - 1, d - 1, -1):
        head = rem[k]
        if head:
            for i in range(d):
                rem[k - d + i] -= head * phi[i]
        rem.pop()
    rem += [Fraction(0)] * (d - len(rem))
    return tuple(Fraction(c) for c in rem)


def _frac_poly_divmod(a, b):
    """Quotient and remainder of Fraction-coefficient polynomial lists."""
    rem = list(a)
    while rem and not rem[-1]:
        rem.pop()
    db = len(b) - 1
    while db >= 0 and not b[db]:
        db -= 1
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(rem) - db, 0)
    while len(rem) - 1 >= db:
        head = rem[-1]
        k = len(rem) - 1 - db
        f = head / b[db]
        q[k] = f
        for i in range(db + 1):
            rem[k + i] -= f * b[i]
        while rem and not rem[-1]:
            rem.pop()
    return q, rem


@dataclass(frozen=True)
class Cyclotomic:
    """Element of QQ(zeta_N): Fraction coordinates in the power basis of zeta."""

    order: int
    coords: tuple[Fraction, ...]

    @classmethod
    def of(cls, order, coeffs):
        return cls(order, _reduce_mod_phi([Fraction(c) for c in coeffs], order))

    @classmethod
    def zeta(cls, order):
        return cls.of(order, [0, 1])

    @classmethod
    def const(cls, order, q):
        return cls.of(order, [Fraction(q)])

    def _coerce(self, x):
        if isinstance(x, Cyclotomic):
            if x.order != self.order:
                raise FieldMismatchError(
                    f"cannot mix cyclotomic orders {self.order} and {x.order}")
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.const(self.order, x)
        if isinstance(x, RatFunc):
            raise FieldMismatchError(
                "cannot mix cyclotomic values with rational functions in t")
        return None

    def is_zero(self):
        return not any(self.coords)

    def __bool__(self):
        return any(self.coords)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.order,
                          tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coords, o.coords
        out = [Fraction(0)] * (2 * len(a) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return Cyclotomic(self.order, _reduce_mod_phi(out, self.order))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("zero cyclotomic value has no inverse")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order).coeffs]
        # extended Euclid: s*self + t*phi = gcd = const
        r0, r1 = phi, [c for c in self.coords]
        while r1 and not r1[-1]:
            r1.pop()
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, r2 = _frac_poly_divmod(r0, r1)
            s2 = list(s0)
            s2 += [Fraction(0)] * (len(q) + len(s1) - 1 - len(s2))
            for i, qc in enumerate(q):
                if qc:
                    for j, sc in enumerate(s1):
                        s2[i + j] -= qc * sc
            r0, r1, s0, s1 = r1, r2, s1, s2
        unit = r0[-1]
        inv = [c / unit for c in s0]
        return Cyclotomic(self.order, _reduce_mod_phi(inv, self.order))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError("scalar exponents must be integers")
        if n < 0:
            return self.inverse() ** (-n)
        out = Cyclotomic.const(self.order, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.order == other.order and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return (self.coords[0] == other
                    and not any(self.coords[1:]))
        return NotImplemented

    def __hash__(self):
        if not any(self.coords[1:]):
            return hash(self.coords[0])
        return hash((self.order, self.coords))

    def __str__(self):
        return poly_str(self.coords)

    __repr__ = __str__


def specialize(f, n):
    """Evaluate a RatFunc at t = zeta_n inside QQ(zeta_n).

    Raises SpecializationPoleError when the denominator vanishes there,
    which happens exactly when Phi_n divides it.
    """
    zeta = Cyclotomic.zeta(n)
    den = f.den.eval_at(zeta)
    if isinstance(den, int):
        den = Cyclotomic.const(n, den)
    if den.is_zero():
        raise SpecializationPoleError(
            f"pole at t = zeta_{n}: denominator is divisible by Phi_{n}")
    num = f.num.eval_at(zeta)
    return num / den


# ---------------------------------------------------------------------------
# rendering


def _coeff_str(c):
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def poly_str(coeffs, var="t"):
    """Render ascending coefficients as a human-readable polynomial string.

    The output reparses to the same value: explicit '*', '^' for powers.

    >>> poly_str((1, 0, -2, 1))
    't^3 - 2*t^2 + 1'
    """
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        neg = c < 0
        mag = -c if neg else c
        if k == 0:
            body = _coeff_str(mag)
        else:
            pw = var if k == 1 else f"{var}^{k}"
            body = pw if mag == 1 else f"{_coeff_str(mag)}*{pw}"
        if not terms:
            terms.append(f"-{body}" if neg else body)
        else:
            terms.append(f" - {body}" if neg else f" + {body}")
    return "".join(terms) if terms else "0"


def render_ratfunc(f):
    num, den = f.num, f.den
    if den.coeffs == (1,):
        return poly_str(num.coeffs)
    nz = den.trailing_zeros()
    if den.coeffs == (0,) * nz + (1,):
        # pure power of t below the line; canonical form puts no shared
        # power of t above it, so the merged exponent k - nz is negative
        if len([c for c in num.coeffs if c]) == 1:
            k = num.trailing_zeros()
            c = num.coeffs[k]
            pw = f"t^{k - nz}"
            if c == 1:
                return pw
            if c == -1:
                return f"-{pw}"
            return f"{c}*{pw}"
        return f"({poly_str(num.coeffs)})/t^{nz}" if nz != 1 else f"({poly_str(num.coeffs)})/t"
    return f"({poly_str(num.coeffs)})/({poly_str(den.coeffs)})"


# ---------------------------------------------------------------------------
# scalar literal grammar
#
#   expr    := term (('+' | '-') term)*
#   term    := unary (('*' | '/') unary | unary-adjacent)*
#   unary   := '-' unary | primary
#   primary := (INT | 't' | '(' expr ')') ['^' ['-'] INT]
#
# Adjacency such as "2t^3" multiplies. Values are built in QQ(t); each field
# then narrows or maps the result (for cyclotomic fields t denotes zeta_N).


def _tokenize(text):
    toks = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("INT", int(text[i:j])))
            i = j
        elif ch == "t":
            toks.append(("T", None))
            i += 1
        elif ch in "+-*/^()":
            toks.append((ch, None))
            i += 1
        else:
            raise ScalarParseError(f"unexpected character {ch!r} at position {i}")
    return toks


class _Parser:
    def __init__(self, toks, text):
        self.toks = toks
        self.pos = 0
        self.text = text

    def peek(self):
        return self.toks[self.pos][0] if self.pos < len(self.toks) else None

    def take(self, kind=None):
        if self.pos >= len(self.toks):
            raise ScalarParseError(f"unexpected end of input in {self.text!r}")
        tok = self.toks[self.pos]
        if kind is not None and tok[0] != kind:
            raise ScalarParseError(
                f"expected {kind} but found {tok[0]} in {self.text!r}")
        self.pos += 1
        return tok

    def expr(self):
        val = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while True:
            nxt = self.peek()
            if nxt in ("*", "/"):
                op = self.take()[0]
                rhs = self.unary()
                val = val * rhs if op == "*" else val / rhs
            elif nxt in ("INT", "T", "("):
                val = val * self.unary()
            else:
                return val

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        return self.primary()

    def primary(self):
        kind, value = self.take()
        if kind == "INT":
            base = RatFunc.const(value)
        elif kind == "T":
            base = RatFunc.t_power(1)
        elif kind == "(":
            base = self.expr()
            self.take(")")
        else:
            raise ScalarParseError(f"unexpected token {kind} in {self.text!r}")
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            exp = sign * self.take("INT")[1]
            base = base ** exp
        return base


def parse_scalar(text):
    """Parse a scalar literal into a RatFunc value.

    >>> str(parse_scalar("(t^2-1)/(t+1)"))
    't - 1'
    >>> str(parse_scalar("t^-2"))
    't^-2'
    """
    toks = _tokenize(text)
    if not toks:
        raise ScalarParseError("empty scalar literal")
    p = _Parser(toks, text)
    try:
        val = p.expr()
    except ZeroDivisionError as exc:
        raise ScalarParseError(f"division by zero in {text!r}") from exc
    if p.pos != len(toks):
        raise ScalarParseError(f"trailing input in {text!r}")
    return val


# ---------------------------------------------------------------------------
# field objects


class RationalField:
    """The rational numbers; scalars are fractions.Fraction."""

    name = "rational"

    def one(self):
        return Fraction(1)

    def zero(self):
        return Fraction(0)

    def coerce(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        if isinstance(x, RatFunc):
            q = x.as_fraction()
            if q is not None:
                return q
        raise FieldMismatchError(f"{x!r} is not a rational number")

    def parse(self, text):
        val = parse_scalar(text)
        q = val.as_fraction()
        if q is None:
            raise ScalarParseError(f"{text!r} is not constant over the rational field")
        return q

    def render(self, s):
        return _coeff_str(Fraction(s))

    def __eq__(self, other):
        return type(other) is RationalField

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "RationalField()"


class RationalFunctionField:
    """QQ(t); scalars are RatFunc values."""

    name = "rational_function"

    def one(self):
        return _RF_ONE

    def zero(self):
        return _RF_ZERO

    def gen(self):
        return RatFunc.t_power(1)

    def coerce(self, x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFunc.const(x)
        raise FieldMismatchError(f"{x!r} is not a rational function in t")

    def parse(self, text):
        return parse_scalar(text)

    def render(self, s):
        return render_ratfunc(self.coerce(s))

    def __eq__(self, other):
        return type(other) is RationalFunctionField

    def __hash__(self):
        return hash("rational_function")

    def __repr__(self):
        return "RationalFunctionField()"


class CyclotomicField:
    """QQ(zeta_N); scalars are Cyclotomic values of order N.

    In literals for this field, t denotes zeta_N.
    """

    def __init__(self, order):
        if order < 1:
            raise ValueError("cyclotomic order must be positive")
        self.order = order
        self.name = f"cyclotomic({order})"

    def one(self):
        return Cyclotomic.const(self.order, 1)

    def zero(self):
        return Cyclotomic.const(self.order, 0)

    def zeta(self):
        return Cyclotomic.zeta(self.order)

    def coerce(self, x):
        if isinstance(x, Cyclotomic):
            if x.order != self.order:
                raise FieldMismatchError(
                    f"cyclotomic order {x.order} does not match field order {self.order}")
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.const(self.order, x)
        raise FieldMismatchError(f"{x!r} is not a cyclotomic({self.order}) value")

    def parse(self, text):
        val = parse_scalar(text)
        try:
            return specialize(val, self.order)
        except SpecializationPoleError as exc:
            raise ScalarParseError(f"{text!r} has a pole at zeta_{self.order}") from exc

    def render(self, s):
        return poly_str(self.coerce(s).coords)

    def __eq__(self, other):
        return type(other) is CyclotomicField and other.order == self.order

    def __hash__(self):
        return hash(("cyclotomic", self.order))

    def __repr__(self):
        return f"CyclotomicField({self.order})"


QQ = RationalField()
QT = RationalFunctionField()


def field_from_name(name):
    """Inverse of the field.name tag, e.g. 'cyclotomic(5)'."""
    if name == "rational":
        return QQ
    if name == "rational_function":
        return QT
    if name.startswith("cyclotomic(") and name.endswith(")"):
        inner = name[len("cyclotomic("):-1]
        if inner.isdigit():
            return CyclotomicField(int(inner))
    raise ValueError(f"unknown field tag {name!r}")
