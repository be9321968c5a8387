"""Batch front end: rank tables, block determinants, the sl2 mirror, selftest.

Exit codes: 0 success, 1 bad input, 2 block size guard, 3 specialization
pole, 4 selftest failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
import tempfile
import time
from fractions import Fraction

from . import __version__
from .datum import (
    DatumValidationError,
    datum_from_q_matrix,
    datum_hash,
    emit_datum,
    parse_datum,
    positive_roots,
    preset_cartan,
    preset_doubled,
    preset_reductive,
    specialize_datum,
)
from .growth import (
    BlockDim,
    HilbertTable,
    compute_blocks,
    dominance_label,
    growth_classify,
    hilbert_table,
    kostant_dims,
)
from .scalars import (
    QQ,
    FieldMismatchError,
    ScalarParseError,
    SpecializationPoleError,
)
from .shapovalov import (
    DEFAULT_BLOCK_LIMIT,
    BlockSizeError,
    SymEngine,
    gram_determinant,
    permutation_sum_oracle,
    symmetrizer,
)
from .sl2 import parallel_report
from .words import Element, block_size, concat, multidegrees_up_to, shuffle, words_of_multidegree

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BLOCK = 2
EXIT_POLE = 3
EXIT_SELFTEST = 4

CACHE_ENV = "HOPFMIN_CACHE"
SCHEMA_VERSION = 1

PRESET_KINDS = ("cartan", "reductive", "doubled")


class _Parser(argparse.ArgumentParser):
    """argparse maps usage errors to exit 2; this tool reserves 2 for the
    block guard, so reroute them to the input-error code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _load_datum(args):
    specialize_to = getattr(args, "specialize", None)
    base = getattr(args, "base", None)
    if base is not None and base != "t":
        base = QQ.parse(base)
    else:
        base = None
    if getattr(args, "preset", None):
        kind, _, type_name = args.preset.partition(":")
        kind = kind.lower()
        if kind not in PRESET_KINDS or not type_name:
            raise DatumValidationError(
                [f"preset must look like cartan:A2, reductive:B2 or doubled:G2, "
                 f"got {args.preset!r}"])
        try:
            if kind == "cartan":
                datum = preset_cartan(type_name, base=base)
            elif kind == "doubled":
                datum = preset_doubled(type_name, base=base)
            else:
                if base is not None:
                    raise DatumValidationError(
                        ["--base applies to cartan and doubled presets only"])
                datum = preset_reductive(type_name)
        except ValueError as exc:
            if isinstance(exc, DatumValidationError):
                raise
            raise DatumValidationError([str(exc)]) from exc
    else:
        path = args.datum
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise DatumValidationError([f"cannot read {path}: {exc}"]) from exc
        datum = parse_datum(text)
        if base is not None:
            raise DatumValidationError(["--base applies to presets only"])
    if specialize_to is not None:
        datum = specialize_datum(datum, specialize_to)
    return datum


def _deg_key(deg):
    return ",".join(str(d) for d in deg)


class _Cache:
    """Rank cache file: JSON keyed by datum hash, then by multidegree."""

    def __init__(self, path, ranks):
        self.path = path
        self.ranks = ranks
        self.dirty = False

    @classmethod
    def open(cls, path):
        try:
            with open(path, "r", encoding="utf-8") as fh:
                doc = json.load(fh)
            if (not isinstance(doc, dict)
                    or doc.get("schema_version") != SCHEMA_VERSION
                    or not isinstance(doc.get("ranks"), dict)):
                raise ValueError("unexpected cache layout")
            return cls(path, doc["ranks"])
        except FileNotFoundError:
            return cls(path, {})
        except (OSError, ValueError) as exc:
            print(f"warning: ignoring unreadable cache {path}: {exc}; "
                  f"recomputing", file=sys.stderr)
            return cls(path, {})

    def get(self, datum_key, deg):
        entry = self.ranks.get(datum_key, {}).get(_deg_key(deg))
        if (isinstance(entry, list) and len(entry) == 2
                and all(isinstance(x, int) for x in entry)):
            return entry[0], entry[1]
        return None

    def put(self, datum_key, deg, size, rank):
        self.ranks.setdefault(datum_key, {})[_deg_key(deg)] = [size, rank]
        self.dirty = True

    def save(self):
        if not self.dirty:
            return
        doc = {"schema_version": SCHEMA_VERSION, "ranks": self.ranks}
        directory = os.path.dirname(os.path.abspath(self.path))
        fd, tmp = tempfile.mkstemp(prefix=".hopfmin-cache-", dir=directory)
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(doc, fh, indent=2, sort_keys=True)
                fh.write("\n")
            os.replace(tmp, self.path)
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise


def _datum_doc(datum):
    return json.loads(emit_datum(datum))


def _q_matrix_doc(datum):
    render = datum.field.render
    return [[render(x) for x in row] for row in datum.q_matrix]


def _verdict_doc(verdict, max_total):
    return {
        "kind": verdict.kind,
        "degree": verdict.degree,
        "evidence": verdict.evidence,
        "dominance": dominance_label(verdict, max_total),
    }


def _emit_json(doc):
    print(json.dumps(doc, indent=2, sort_keys=True))


def cmd_analyze(args):
    t0 = time.monotonic()
    datum = _load_datum(args)
    degs = multidegrees_up_to(datum.m, args.max_total)
    for deg in degs:
        size = block_size(deg)
        if size > args.block_limit:
            raise BlockSizeError(deg, size, args.block_limit)
    cache_path = args.cache or os.environ.get(CACHE_ENV)
    cache = _Cache.open(cache_path) if cache_path else None
    datum_key = datum_hash(datum)
    found = {}
    missing = []
    hits = 0
    for deg in degs:
        got = cache.get(datum_key, deg) if cache else None
        if got is None:
            missing.append(deg)
        else:
            found[deg] = got
            hits += 1
    computed = compute_blocks(datum, missing,
                              block_limit=args.block_limit, jobs=args.jobs)
    for b in computed:
        found[b.deg] = (b.size, b.rank)
        if cache:
            cache.put(datum_key, b.deg, b.size, b.rank)
    if cache:
        cache.save()
    blocks = tuple(BlockDim(deg, *found[deg]) for deg in degs)
    table = HilbertTable(args.max_total, blocks)
    totals = table.totals()
    verdict = growth_classify(totals, window=args.window)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "command": "analyze",
        "datum": _datum_doc(datum),
        "hash": datum_key,
        "q_matrix": _q_matrix_doc(datum),
        "max_total": args.max_total,
        "window": args.window,
        "block_limit": args.block_limit,
        "blocks": [{"deg": list(b.deg), "size": b.size, "rank": b.rank}
                   for b in blocks],
        "totals": list(totals),
        "verdict": _verdict_doc(verdict, args.max_total),
        "timings": {
            "total_ms": int((time.monotonic() - t0) * 1000),
            "cache_hits": hits,
            "cache_misses": len(missing),
        },
    }
    if args.format == "json":
        _emit_json(doc)
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        m = datum.m
        writer.writerow([f"deg_{i + 1}" for i in range(m)] + ["size", "rank"])
        for b in blocks:
            writer.writerow(list(b.deg) + [b.size, b.rank])
    else:
        print(f"datum {datum_key[:12]}  field {datum.field.name}  "
              f"letters {datum.m}")
        width = max(len(str(b.deg)) for b in blocks)
        print(f"{'deg':<{width}}  size  rank")
        for b in blocks:
            print(f"{str(b.deg):<{width}}  {b.size:>4}  {b.rank:>4}")
        print("totals by degree:", " ".join(str(x) for x in totals))
        kind = verdict.kind + (
            f"({verdict.degree})" if verdict.degree is not None else "")
        print(f"growth: {kind}")
        print(dominance_label(verdict, args.max_total))
    return EXIT_OK


def cmd_det(args):
    t0 = time.monotonic()
    datum = _load_datum(args)
    try:
        deg = tuple(int(part) for part in args.deg.split(","))
    except ValueError as exc:
        raise DatumValidationError(
            [f"--deg expects comma-separated integers, got {args.deg!r}"]) from exc
    if len(deg) != datum.m or any(d < 0 for d in deg):
        raise DatumValidationError(
            [f"--deg must list {datum.m} nonnegative letter counts"])
    report = gram_determinant(datum, deg, factor_bound=args.factor_bound,
                              block_limit=args.block_limit)
    render = datum.field.render
    pretty = [f"Phi_{k}(t^{j})" + (f"^{mult}" if mult > 1 else "")
              for k, j, mult in report.factors]
    doc = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "command": "det",
        "datum": _datum_doc(datum),
        "hash": datum_hash(datum),
        "deg": list(deg),
        "size": report.size,
        "rank": report.rank,
        "determinant": render(report.determinant),
        "factors": [list(f) for f in report.factors],
        "factors_pretty": pretty,
        "remainder": render(report.remainder),
        "timings": {"total_ms": int((time.monotonic() - t0) * 1000)},
    }
    if args.format == "json":
        _emit_json(doc)
    else:
        print(f"block {deg}: size {report.size}, rank {report.rank}")
        print(f"determinant: {doc['determinant']}")
        if pretty:
            print("cyclotomic factors:", " * ".join(pretty))
            print(f"remainder: {doc['remainder']}")
    return EXIT_OK


def cmd_sl2(args):
    try:
        lam = Fraction(args.lam)
    except (ValueError, ZeroDivisionError) as exc:
        raise DatumValidationError(
            [f"--lam expects a rational number, got {args.lam!r}"]) from exc
    report = parallel_report(lam, depth=args.depth)
    if args.format == "json":
        doc = dict(report)
        doc.update({
            "schema_version": SCHEMA_VERSION,
            "tool_version": __version__,
            "command": "sl2",
        })
        _emit_json(doc)
    else:
        print(f"highest weight {report['highest_weight']}")
        print("depth  pairing value        verma  simple")
        for k, v in enumerate(report["pairing_values"]):
            print(f"{k:>5}  {v:<18}  {report['verma_graded_dims'][k]:>5}"
                  f"  {report['simple_graded_dims'][k]:>6}")
        print(f"simple module dimension: {report['simple_dim']}")
        print("correspondence:")
        for row in report["correspondence"]:
            print(f"  {row['classical']}  <->  {row['braided']}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# selftest


def _random_q_matrix(rng, m):
    pool = [Fraction(1), Fraction(-1), Fraction(2), Fraction(-2),
            Fraction(1, 2), Fraction(-1, 2), Fraction(2, 3), Fraction(3),
            Fraction(-3, 2)]
    return tuple(tuple(rng.choice(pool) for _ in range(m)) for _ in range(m))


def _random_words(rng, m, total):
    n1 = rng.randint(0, total)
    u = tuple(rng.randint(1, m) for _ in range(n1))
    v = tuple(rng.randint(1, m) for _ in range(total - n1))
    return u, v


def _hopf_mismatch(sym_braiding, shuffle_braiding, pairs):
    """First pair where Sh(u . v) != Sh(u) sh Sh(v), or None."""
    engine = SymEngine(sym_braiding)
    for u, v in pairs:
        lhs = Element(engine.sym(u + v))
        rhs = shuffle(shuffle_braiding,
                      Element(engine.sym(u)), Element(engine.sym(v)))
        if lhs != rhs:
            return (u, v)
    return None


def _selftest(quick):
    oracle_bound = 3 if quick else 4
    word_bound = 4 if quick else 5
    kostant_bound = 4 if quick else 5
    rng = random.Random(20240917)
    results = []

    # recursive symmetrizer against the permutation-sum definition
    count = 0
    detail = None
    data = [preset_cartan("A2"),
            datum_from_q_matrix(_random_q_matrix(rng, 2), QQ),
            datum_from_q_matrix(_random_q_matrix(rng, 3), QQ)]
    for d in data:
        for deg in multidegrees_up_to(d.m, oracle_bound):
            if sum(deg) < 2:
                continue
            a = symmetrizer(d, deg)
            b = permutation_sum_oracle(d, deg, total_bound=oracle_bound)
            count += 1
            if a.entries != b.entries:
                detail = f"mismatch at multidegree {deg}"
                break
        if detail:
            break
    results.append(("symmetrizer matches permutation sum", detail, count))

    # rank tables against root-multiset counts
    count = 0
    detail = None
    for name in ("A2", "B2"):
        d = preset_cartan(name)
        roots = positive_roots(name)
        for b in hilbert_table(d, kostant_bound).blocks:
            count += 1
            expected = kostant_dims(roots, b.deg)
            if b.rank != expected:
                detail = (f"{name} block {b.deg}: rank {b.rank}, "
                          f"expected {expected}")
                break
        if detail:
            break
    results.append(("rank tables match root multiset counts", detail, count))

    # transposing the q matrix must not change any dimension
    count = 0
    detail = None
    for m in (2, 3):
        q = _random_q_matrix(rng, m)
        qt = tuple(tuple(q[j][i] for j in range(m)) for i in range(m))
        t1 = hilbert_table(datum_from_q_matrix(q, QQ), oracle_bound)
        t2 = hilbert_table(datum_from_q_matrix(qt, QQ), oracle_bound)
        count += len(t1.blocks)
        if t1.dims() != t2.dims():
            detail = f"transposed table differs for m = {m}"
            break
    results.append(("transposition invariance of dimensions", detail, count))

    # Sh is multiplicative from concatenation to the braided shuffle
    count = 0
    detail = None
    for d in [preset_cartan("A1"), preset_cartan("A2"),
              datum_from_q_matrix(_random_q_matrix(rng, 2), QQ)]:
        b = d.braiding_matrix
        pairs = [_random_words(rng, d.m, rng.randint(2, word_bound))
                 for _ in range(25)]
        bad = _hopf_mismatch(b, b, pairs)
        count += len(pairs)
        if bad is not None:
            detail = f"Sh(u.v) != Sh(u) sh Sh(v) for u, v = {bad}"
            break
    results.append(("concatenation-to-shuffle morphism", detail, count))

    # negative control: a corrupted braiding must break the morphism
    d = preset_cartan("A2")
    good = d.braiding_matrix
    bad_braiding = tuple(
        tuple(-x if (i, j) == (0, 1) else x for j, x in enumerate(row))
        for i, row in enumerate(good))
    pairs = [_random_words(rng, d.m, rng.randint(2, word_bound))
             for _ in range(25)]
    mismatch = _hopf_mismatch(bad_braiding, good, pairs)
    detail = None if mismatch is not None else \
        "corrupted braiding went undetected"
    results.append(("negative control flags a corrupted braiding",
                    detail, len(pairs)))

    failed = False
    for name, detail, count in results:
        if detail is None:
            print(f"PASS {name} ({count} checks)")
        else:
            failed = True
            print(f"FAIL {name}: {detail}")
    return EXIT_SELFTEST if failed else EXIT_OK


def cmd_selftest(args):
    return _selftest(args.quick)


# ---------------------------------------------------------------------------
# argument wiring


def _add_datum_options(sub, with_specialize=True):
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--preset",
                       help="cartan:TYPE, reductive:TYPE or doubled:TYPE "
                            "with TYPE one of A1, A1xA1, A2, B2, G2")
    group.add_argument("--datum", help="path to a datum JSON file")
    sub.add_argument("--base", default="t",
                     help="evaluate cartan/doubled presets at this nonzero "
                          "rational instead of the formal t")
    if with_specialize:
        sub.add_argument("--specialize", type=int, metavar="N",
                         help="send t to a primitive N-th root of unity")
    sub.add_argument("--block-limit", type=int, default=DEFAULT_BLOCK_LIMIT,
                     help="refuse blocks with more words than this "
                          f"(default {DEFAULT_BLOCK_LIMIT})")


def _build_parser():
    parser = _Parser(prog="hopfmin",
                     description="exact rank tables for diagonal braidings")
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("analyze", help="rank every block up to a total degree")
    _add_datum_options(p)
    p.add_argument("--max-total", type=int, default=6,
                   help="largest total degree to table (default 6)")
    p.add_argument("--window", type=int, default=3,
                   help="trailing window for the growth verdict (default 3)")
    p.add_argument("--format", choices=("json", "csv", "table"),
                   default="table")
    p.add_argument("--cache", help="rank cache file "
                                   f"(default from ${CACHE_ENV})")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker processes for block computation")
    p.set_defaults(func=cmd_analyze)

    p = subs.add_parser("det", help="block determinant with cyclotomic factors")
    _add_datum_options(p)
    p.add_argument("--deg", required=True,
                   help="multidegree as comma-separated letter counts")
    p.add_argument("--factor-bound", type=int, default=24,
                   help="try Phi_k(t^j) factors for k*j up to this bound")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.set_defaults(func=cmd_det)

    p = subs.add_parser("sl2", help="classical highest-weight mirror")
    p.add_argument("--lam", required=True,
                   help="highest weight, a rational such as 3 or 1/2")
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.set_defaults(func=cmd_sl2)

    p = subs.add_parser("selftest", help="run the built-in oracle suites")
    p.add_argument("--quick", action="store_true",
                   help="reduce the degree bounds by one")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BlockSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BLOCK
    except SpecializationPoleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_POLE
    except DatumValidationError as exc:
        for line in exc.errors:
            print(f"error: {line}", file=sys.stderr)
        return EXIT_INPUT
    except (ScalarParseError, FieldMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BrokenPipeError:
        # the stdout consumer went away (e.g. piping into head); silence the
        # interpreter-shutdown flush as well
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK
