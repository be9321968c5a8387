"""Input data for the engine: lattice characters evaluated at torus points.

A datum holds m characters alpha_i of the lattice ZZ**n (integer exponent
vectors) together with m points gamma_j of the n-torus over an exact field
(nonzero coordinate vectors). Everything downstream is derived from the
matrix q[i][j] = alpha_i(gamma_j) = prod_k gamma_j[k] ** alpha_i[k]; letter i
of the free algebra carries the pair (alpha_i, gamma_i), and the diagonal
braiding reads the matrix transposed: b[i][j] = alpha_j(gamma_i).

Datum files are JSON objects with keys rank, field, alphas, gammas; gamma
coordinates are scalar literals in the grammar of scalars.parse_scalar
(for cyclotomic fields the letter t denotes zeta_N).
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .scalars import (
    QQ,
    QT,
    CyclotomicField,
    FieldMismatchError,
    ScalarParseError,
    field_from_name,
    specialize,
)


class DatumValidationError(ValueError):
    """Invalid datum; .errors lists every problem found, with locations."""

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


@dataclass(frozen=True)
class Datum:
    rank: int
    alphas: tuple[tuple[int, ...], ...]
    gammas: tuple[tuple[object, ...], ...]
    field: object

    @property
    def m(self):
        """Number of letters (character/point pairs)."""
        return len(self.alphas)

    @cached_property
    def q_matrix(self):
        """q[i][j] = alpha_i(gamma_j), 0-indexed, computed once."""
        one = self.field.one()
        out = []
        for alpha in self.alphas:
            row = []
            for gamma in self.gammas:
                acc = one
                for exp, coord in zip(alpha, gamma):
                    if exp:
                        acc = acc * coord ** exp
                row.append(acc)
            out.append(tuple(row))
        return tuple(out)

    @cached_property
    def braiding_matrix(self):
        """b[i][j] = alpha_j(gamma_i): the q matrix transposed."""
        q = self.q_matrix
        m = len(q)
        return tuple(tuple(q[j][i] for j in range(m)) for i in range(m))


def make_datum(rank, alphas, gammas, field):
    """Build a datum, coercing coordinates into the field; no validation."""
    al = tuple(tuple(int(e) for e in a) for a in alphas)
    gm = tuple(tuple(field.coerce(c) for c in g) for g in gammas)
    return Datum(rank, al, gm, field)


def validate(datum):
    """All problems with the datum, as human-readable strings; empty when ok."""
    errors = []
    if datum.rank < 1:
        errors.append(f"rank must be positive, found {datum.rank}")
    if not datum.alphas:
        errors.append("datum has no characters")
    if len(datum.gammas) != len(datum.alphas):
        errors.append(
            f"{len(datum.alphas)} characters but {len(datum.gammas)} points")
    for i, alpha in enumerate(datum.alphas, start=1):
        if len(alpha) != datum.rank:
            errors.append(f"alpha[{i}] has length {len(alpha)}, expected {datum.rank}")
        elif not any(alpha):
            errors.append(f"alpha[{i}] is zero")
    for j, gamma in enumerate(datum.gammas, start=1):
        if len(gamma) != datum.rank:
            errors.append(f"gamma[{j}] has length {len(gamma)}, expected {datum.rank}")
            continue
        for k, coord in enumerate(gamma, start=1):
            try:
                value = datum.field.coerce(coord)
            except FieldMismatchError as exc:
                errors.append(f"gamma[{j}][{k}]: {exc}")
                continue
            if not value:
                errors.append(f"gamma[{j}][{k}] is zero")
    return errors


def require_valid(datum):
    errors = validate(datum)
    if errors:
        raise DatumValidationError(errors)
    return datum


def datum_from_q_matrix(q, field):
    """A datum realizing a given nonzero matrix as its q matrix.

    Characters are the standard basis of ZZ**m and point j is column j,
    so alpha_i(gamma_j) = gamma_j[i] = q[i][j] on the nose.
    """
    m = len(q)
    alphas = tuple(tuple(1 if k == i else 0 for k in range(m)) for i in range(m))
    gammas = tuple(tuple(field.coerce(q[i][j]) for i in range(m)) for j in range(m))
    return require_valid(Datum(m, alphas, gammas, field))


# ---------------------------------------------------------------------------
# presets

# Cartan matrix and symmetrizer d for each supported finite type, with the
# first simple root short where lengths differ.
CARTAN_TYPES = {
    "A1": (((2,),), (1,)),
    "A1XA1": (((2, 0), (0, 2)), (1, 1)),
    "A2": (((2, -1), (-1, 2)), (1, 1)),
    "B2": (((2, -2), (-1, 2)), (1, 2)),
    "G2": (((2, -3), (-1, 2)), (1, 3)),
}

# Positive roots in simple-root coordinates, matching CARTAN_TYPES.
POSITIVE_ROOTS = {
    "A1": ((1,),),
    "A1XA1": ((1, 0), (0, 1)),
    "A2": ((1, 0), (0, 1), (1, 1)),
    "B2": ((1, 0), (0, 1), (1, 1), (2, 1)),
    "G2": ((1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)),
}


def _type_key(name):
    key = name.upper()
    if key not in CARTAN_TYPES:
        known = ", ".join(sorted(CARTAN_TYPES))
        raise ValueError(f"unknown Cartan type {name!r} (known: {known})")
    return key


def positive_roots(name):
    return POSITIVE_ROOTS[_type_key(name)]


def check_symmetrizable(cartan, dvec):
    m = len(cartan)
    errors = []
    for i in range(m):
        if cartan[i][i] != 2:
            errors.append(f"cartan[{i + 1}][{i + 1}] must be 2")
        if dvec[i] < 1:
            errors.append(f"d[{i + 1}] must be a positive integer")
        for j in range(m):
            if i != j and cartan[i][j] > 0:
                errors.append(f"cartan[{i + 1}][{j + 1}] must be nonpositive")
            if dvec[i] * cartan[i][j] != dvec[j] * cartan[j][i]:
                errors.append(
                    f"not symmetrizable: d[{i + 1}]*a[{i + 1}][{j + 1}] != "
                    f"d[{j + 1}]*a[{j + 1}][{i + 1}]")
    if errors:
        raise DatumValidationError(errors)


def preset_cartan_matrix(cartan, dvec, base=None):
    """Datum with q[i][j] = base ** (d_i * a_ij); base defaults to t.

    Characters are the standard basis; gamma_j has coordinate i equal to
    base ** (d_i * a_ij), so alpha_i(gamma_j) lands on the symmetrized
    Cartan pairing.
    """
    check_symmetrizable(cartan, dvec)
    m = len(cartan)
    if base is None:
        field = QT
        base = QT.gen()
    else:
        field = QQ
        base = Fraction(base)
        if not base:
            raise DatumValidationError(["base must be nonzero"])
    alphas = tuple(tuple(1 if k == i else 0 for k in range(m)) for i in range(m))
    gammas = tuple(
        tuple(base ** (dvec[i] * cartan[i][j]) for i in range(m))
        for j in range(m))
    return require_valid(Datum(m, alphas, gammas, field))


def preset_cartan(name, base=None):
    cartan, dvec = CARTAN_TYPES[_type_key(name)]
    return preset_cartan_matrix(cartan, dvec, base=base)


def preset_reductive(name):
    """All roots of the type as characters, every point the identity.

    The braiding is identically 1, the shape of a classical coordinate ring.
    """
    pos = positive_roots(name)
    rank = len(pos[0])
    alphas = tuple(pos) + tuple(tuple(-e for e in root) for root in pos)
    one = Fraction(1)
    gammas = tuple((one,) * rank for _ in alphas)
    return require_valid(Datum(rank, alphas, gammas, QQ))


def preset_doubled(name, base=None):
    """Characters {alpha_i} and {-alpha_i} with points {gamma_i} and
    {gamma_i ** -1}, so q is the Cartan pairing of the signed roots."""
    half = preset_cartan(name, base=base)
    m = half.m
    alphas = half.alphas + tuple(tuple(-e for e in a) for a in half.alphas)
    inverted = tuple(tuple(1 / c for c in g) for g in half.gammas)
    gammas = half.gammas + inverted
    return require_valid(Datum(half.rank, alphas, gammas, half.field))


# ---------------------------------------------------------------------------
# specialization, serialization, hashing


def specialize_datum(datum, n):
    """Send t to zeta_n coordinatewise; only defined over the t-function field."""
    if datum.field != QT:
        raise FieldMismatchError(
            f"can only specialize rational-function data, not {datum.field.name}")
    field = CyclotomicField(n)
    gammas = tuple(
        tuple(specialize(QT.coerce(c), n) for c in g) for g in datum.gammas)
    return require_valid(Datum(datum.rank, datum.alphas, gammas, field))


def emit_datum(datum, indent=None):
    """Canonical JSON text for the datum; parse_datum inverts this."""
    doc = {
        "rank": datum.rank,
        "field": datum.field.name,
        "alphas": [list(a) for a in datum.alphas],
        "gammas": [[datum.field.render(c) for c in g] for g in datum.gammas],
    }
    return json.dumps(doc, indent=indent, sort_keys=True)


def parse_datum(text):
    """Parse and validate datum JSON; raises DatumValidationError on problems."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DatumValidationError([f"not valid JSON: {exc}"]) from exc
    if not isinstance(doc, dict):
        raise DatumValidationError(["datum file must be a JSON object"])
    errors = []
    for key in ("rank", "field", "alphas", "gammas"):
        if key not in doc:
            errors.append(f"missing key {key!r}")
    if errors:
        raise DatumValidationError(errors)
    if not isinstance(doc["rank"], int):
        raise DatumValidationError(["rank must be an integer"])
    try:
        field = field_from_name(doc["field"])
    except ValueError as exc:
        raise DatumValidationError([str(exc)]) from exc

    def scalar_in(entry, where):
        if isinstance(entry, bool) or isinstance(entry, float):
            errors.append(f"{where}: numbers must be integers or string literals")
            return field.one()
        if isinstance(entry, int):
            return field.coerce(entry)
        if isinstance(entry, str):
            try:
                return field.parse(entry)
            except ScalarParseError as exc:
                errors.append(f"{where}: {exc}")
                return field.one()
        errors.append(f"{where}: expected a scalar literal")
        return field.one()

    alphas = []
    for i, row in enumerate(doc["alphas"], start=1):
        if not isinstance(row, list) or not all(
                isinstance(e, int) and not isinstance(e, bool) for e in row):
            errors.append(f"alphas[{i}] must be a list of integers")
            continue
        alphas.append(tuple(row))
    gammas = []
    for j, row in enumerate(doc["gammas"], start=1):
        if not isinstance(row, list):
            errors.append(f"gammas[{j}] must be a list of scalar literals")
            continue
        gammas.append(tuple(
            scalar_in(entry, f"gamma[{j}][{k}]")
            for k, entry in enumerate(row, start=1)))
    if errors:
        raise DatumValidationError(errors)
    return require_valid(Datum(doc["rank"], tuple(alphas), tuple(gammas), field))


def datum_hash(datum):
    """sha256 over the canonical emit: field tag, characters, points."""
    return hashlib.sha256(emit_datum(datum).encode("utf-8")).hexdigest()
