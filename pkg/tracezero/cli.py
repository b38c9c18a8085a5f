from __future__ import annotations

import argparse
import logging
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, Optional, Sequence, Tuple

from sympy import primerange

from . import __version__
from .client import MULTIPLIERS, Client
from .compress import compress, decompress, validate_line
from .curve import Point, SubgroupParams, search_curve
from .exceptions import (
    BoundExceeded, CurveException, InvalidLine, InvalidParameters, InvalidScalar, LineException, NoCandidate, NotPrimeOrder, ParamsFileError, SingularSystem,
)
from .objects import IdentityLine, Line
from .oracle import verify_formulas
from .paramsfile import dumps, load_params, loads
from .vectors import curve_one, curve_two, run_vectors, vector_names

__log__ = logging.getLogger(__name__)


DEFAULT_SEED = 1021

EXIT_OK = 0
EXIT_SEARCH_FAILED = 2
EXIT_BAD_INPUT = 3
EXIT_INTERNAL = 4

_BUILTINS = {'curve1': curve_one, 'curve2': curve_two}


#


def format_line(h: Line) -> str:
    return 'inf' if h.is_identity else f'{h.alpha0},{h.alpha1}'


def parse_line(text: str, q: int) -> Line:
    """
    Parses ``"a0,a1"`` or ``"inf"``.

    Raises
    ------
    :py:class:`ValueError`
        The text is neither.
    """

    text = text.strip()
    if text == 'inf':
        return IdentityLine

    parts = text.split(',')
    if len(parts) != 2:
        raise ValueError(f'Expected a line as \'a0,a1\' or \'inf\', got {text!r}.')

    return Line(int(parts[0]), int(parts[1]), modulus=q)


def format_point(point: Point) -> str:
    return 'inf' if point.is_infinity else ','.join(str(value) for value in (*point.x.coefficients, *point.y.coefficients))


def parse_point(text: str, params: SubgroupParams) -> Point:
    """
    Parses six comma separated decimals ``x0,x1,x2,y0,y1,y2`` or ``"inf"``.

    Raises
    ------
    :py:class:`ValueError`
        The text is malformed.
    :py:class:`PointNotOnCurve`
        The point is not on the curve.
    """

    text = text.strip()
    if text == 'inf':
        return Point.infinity()

    values = [int(part) for part in text.split(',')]
    if len(values) != 6:
        raise ValueError(f'Expected six comma separated coefficients, got {len(values)}.')

    ext = params.curve.ext
    return params.curve.point(ext(*values[:3]), ext(*values[3:]))


def resolve_seed(seed: Optional[int]) -> int:
    """
    Returns ``seed``, else the ``TRACEZERO_SEED`` environment variable, else ``DEFAULT_SEED``.
    """

    if seed is not None:
        return seed

    environment = os.environ.get('TRACEZERO_SEED')
    return int(environment) if environment else DEFAULT_SEED


def _load(args: argparse.Namespace) -> SubgroupParams:

    if getattr(args, 'params', None):
        return load_params(args.params)

    return _BUILTINS[getattr(args, 'builtin', None) or 'curve1']()


def _base_line(args: argparse.Namespace, params: SubgroupParams) -> Line:

    if getattr(args, 'line', None):

        h = parse_line(args.line, params.q)
        if not validate_line(h, params):
            raise InvalidLine(f'{args.line} is not the line of a point of T₃.')

        return h

    return compress(params.generator, params)


#


def cmd_params(args: argparse.Namespace) -> int:

    rng = random.Random(args.seed)

    if args.builtin:
        params = _BUILTINS[args.builtin]()

    elif args.search:

        candidates = [int(q) for q in primerange(args.qmin, args.qmax + 1) if q % 3 == 1]
        if not candidates:
            raise InvalidParameters(f'No prime q ≡ 1 (mod 3) in [{args.qmin}, {args.qmax}].')

        rng.shuffle(candidates)
        for q in candidates:
            try:
                params = search_curve(q, rng=rng, attempts=args.attempts)
            except NotPrimeOrder:
                continue
            break
        else:
            raise NotPrimeOrder(f'No usable curve found for q in [{args.qmin}, {args.qmax}].')

    elif args.q is not None:
        params = search_curve(args.q, rng=rng, attempts=args.attempts)

    else:
        raise ValueError('Give --q, --search or --builtin.')

    text = dumps(params)
    if args.out:
        with open(args.out, encoding='utf-8', mode='w') as file:
            file.write(text)
    else:
        sys.stdout.write(text)

    return EXIT_OK


def cmd_mul(args: argparse.Namespace) -> int:

    params = _load(args)
    client = Client(params=params)

    multiplier = client.create_multiplier(cls=MULTIPLIERS[args.algo], identifier=args.algo, line=_base_line(args, params))
    print(format_line(multiplier.multiply(args.scalar)))

    __log__.info(f'CLI | Multiplied. | Algorithm: {args.algo} | Counts: {multiplier.last_counter.as_dict()}')
    return EXIT_OK


def cmd_compress(args: argparse.Namespace) -> int:

    params = _load(args)
    print(format_line(compress(parse_point(args.point, params), params)))
    return EXIT_OK


def cmd_decompress(args: argparse.Namespace) -> int:

    params = _load(args)
    print(format_point(decompress(parse_line(args.line, params.q), params, seed=args.seed)))
    return EXIT_OK


def cmd_dh(args: argparse.Namespace) -> int:

    params = _load(args)
    rng = random.Random(args.seed)
    client = Client(params=params)
    cls = MULTIPLIERS[args.algo]

    base = client.create_multiplier(cls=cls, identifier='base', line=compress(params.generator, params))
    a, b = rng.randrange(1, params.p), rng.randrange(1, params.p)
    sent_a, sent_b = base.multiply(a), base.multiply(b)

    shared_a = client.create_multiplier(cls=cls, identifier='alice', line=sent_b).multiply(a)
    shared_b = client.create_multiplier(cls=cls, identifier='bob', line=sent_a).multiply(b)

    print(f'alice sends {format_line(sent_a)}')
    print(f'bob sends {format_line(sent_b)}')
    print(f'shared {format_line(shared_a)}')

    if shared_a != shared_b:
        print(f'mismatch: bob derived {format_line(shared_b)}', file=sys.stderr)
        return EXIT_INTERNAL

    return EXIT_OK


def cmd_selftest(args: argparse.Namespace) -> int:

    failed = 0
    for result in run_vectors(args.vector or None):

        if result.passed:
            print(f'ok   {result.name}')
            continue

        failed += 1
        print(f'FAIL {result.name}: expected {result.expected!r}, got {result.actual!r}')

    return EXIT_INTERNAL if failed else EXIT_OK


def _difftest_curve(job: Tuple[str, int, int, Tuple[str, ...]]) -> Dict[str, Any]:

    text, trials, seed, algos = job
    params = loads(text)
    rng = random.Random(seed)

    client = Client(params=params)
    base = compress(params.generator, params)
    oracle = client.create_multiplier(cls=MULTIPLIERS['oracle'], identifier='oracle', line=base)
    multipliers = [client.create_multiplier(cls=MULTIPLIERS[algo], identifier=algo, line=base) for algo in algos if algo != 'oracle']

    mismatches = []
    calls = {multiplier.identifier: 0 for multiplier in multipliers}

    for _ in range(trials):

        m = rng.randrange(1, params.p)
        expected = oracle.multiply(m)

        for multiplier in multipliers:
            try:
                actual = multiplier.multiply(m)
            except (NoCandidate, SingularSystem) as error:
                actual = error

            calls[multiplier.identifier] += multiplier.last_counter.subalg_calls
            if actual != expected:
                mismatches.append(f'q={params.q} A={params.curve.A} B={params.curve.B} m={m} {multiplier.identifier}: {actual if isinstance(actual, Exception) else format_line(actual)} != {format_line(expected)}')

    return {
        'q': params.q,
        'p': params.p,
        'trials': trials,
        'mismatches': mismatches,
        'calls': calls,
        'formula_failures': verify_formulas(params, trials=min(trials, 5), rng=rng),
    }


def cmd_difftest(args: argparse.Namespace) -> int:

    rng = random.Random(args.seed)

    if args.random_curves:
        texts = []
        primes = [int(q) for q in primerange(args.qmin, args.qmax + 1) if q % 3 == 1]
        while len(texts) < args.random_curves:
            try:
                texts.append(dumps(search_curve(rng.choice(primes), rng=rng, attempts=args.attempts)))
            except NotPrimeOrder:
                continue
    else:
        texts = [dumps(_load(args))]

    jobs = [(text, args.trials, rng.getrandbits(32), tuple(args.algos)) for text in texts]

    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as executor:
            reports = list(executor.map(_difftest_curve, jobs))
    else:
        reports = [_difftest_curve(job) for job in jobs]

    failures = 0
    for report in reports:

        average = ' '.join(f'{name}={total / report["trials"]:.2f}' for name, total in report['calls'].items())
        print(f'q={report["q"]} p={report["p"]} trials={report["trials"]} mismatches={len(report["mismatches"])} subalg-calls/mul: {average}')

        for line in report['mismatches'] + report['formula_failures']:
            print(f'  {line}')

        failures += len(report['mismatches']) + len(report['formula_failures'])

    return EXIT_INTERNAL if failures else EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:

    params = _load(args)
    rng = random.Random(args.seed)
    client = Client(params=params)
    base = compress(params.generator, params)

    scalars = [rng.randrange(1, params.p) for _ in range(args.trials)]

    for algo in args.algos:

        multiplier = client.create_multiplier(cls=MULTIPLIERS[algo], identifier=algo, line=base)

        start = time.perf_counter()
        for m in scalars:
            multiplier.multiply(m)
        elapsed = time.perf_counter() - start

        counts = multiplier.counter.as_dict()
        averages = ' '.join(f'{name}={value / args.trials:.2f}' for name, value in counts.items())
        print(f'{algo:<10} {elapsed / args.trials * 1000:.2f} ms/mul  {averages}')

    print('size: compressed 2 F_q elements, affine point 6, x-only 3 (ratio 1/3 of affine)')
    return EXIT_OK


#


def _add_source(parser: argparse.ArgumentParser) -> None:

    source = parser.add_mutually_exclusive_group()
    source.add_argument('--params', help='Parameter file written by the params command.')
    source.add_argument('--builtin', choices=sorted(_BUILTINS), help='One of the built-in worked curves (default: curve1).')


def build_parser() -> argparse.ArgumentParser:

    parser = argparse.ArgumentParser(prog='tracezero', description='Scalar multiplication in compressed trace-zero subgroups.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('-v', '--verbose', action='count', default=0, help='Log to stderr, -v for info and -vv for debug.')
    parser.add_argument('--seed', type=int, default=None, help='Seed for every random choice. Falls back to TRACEZERO_SEED.')

    commands = parser.add_subparsers(dest='command', required=True)

    params = commands.add_parser('params', help='Find a curve and write its parameter file.')
    params.add_argument('--q', type=int, help='Search curves over this prime field.')
    params.add_argument('--search', action='store_true', help='Search over random primes in [--qmin, --qmax].')
    params.add_argument('--qmin', type=int, default=200)
    params.add_argument('--qmax', type=int, default=2000)
    params.add_argument('--attempts', type=int, default=200, help='Curves to try per prime.')
    params.add_argument('--builtin', choices=sorted(_BUILTINS))
    params.add_argument('--out', help='Write to this file instead of stdout.')
    params.set_defaults(function=cmd_params)

    mul = commands.add_parser('mul', help='Multiply a compressed point by a scalar.')
    _add_source(mul)
    mul.add_argument('--line', help='The base line as a0,a1 or inf (default: the generator).')
    mul.add_argument('--scalar', type=int, required=True)
    mul.add_argument('--algo', choices=sorted(MULTIPLIERS), default='ladder')
    mul.set_defaults(function=cmd_mul)

    compress_parser = commands.add_parser('compress', help='Compress a point given as x0,x1,x2,y0,y1,y2.')
    _add_source(compress_parser)
    compress_parser.add_argument('--point', required=True)
    compress_parser.set_defaults(function=cmd_compress)

    decompress_parser = commands.add_parser('decompress', help='Decompress a line given as a0,a1.')
    _add_source(decompress_parser)
    decompress_parser.add_argument('--line', required=True)
    decompress_parser.set_defaults(function=cmd_decompress)

    dh = commands.add_parser('dh', help='Run a Diffie-Hellman exchange of compressed points.')
    _add_source(dh)
    dh.add_argument('--algo', choices=sorted(MULTIPLIERS), default='frobenius')
    dh.set_defaults(function=cmd_dh)

    selftest = commands.add_parser('selftest', help='Check the built-in worked-example vectors.')
    selftest.add_argument('--vector', action='append', choices=vector_names(), help='Run only this vector. May be repeated.')
    selftest.set_defaults(function=cmd_selftest)

    difftest = commands.add_parser('difftest', help='Compare compressed multiplication with the full-coordinate oracle.')
    _add_source(difftest)
    difftest.add_argument('--random-curves', type=int, default=0, help='Search this many random curves instead of using --params.')
    difftest.add_argument('--qmin', type=int, default=200)
    difftest.add_argument('--qmax', type=int, default=2000)
    difftest.add_argument('--attempts', type=int, default=200)
    difftest.add_argument('--trials', type=int, default=100)
    difftest.add_argument('--algos', nargs='+', choices=sorted(MULTIPLIERS), default=['ladder', 'frobenius'])
    difftest.add_argument('--jobs', type=int, default=1, help='Worker processes, one curve each.')
    difftest.set_defaults(function=cmd_difftest)

    bench = commands.add_parser('bench', help='Time the multipliers and count their operations.')
    _add_source(bench)
    bench.add_argument('--trials', type=int, default=20)
    bench.add_argument('--algos', nargs='+', choices=sorted(MULTIPLIERS), default=['oracle', 'ladder', 'frobenius'])
    bench.set_defaults(function=cmd_bench)

    return parser


def _configure_logging(verbosity: int) -> None:

    if not verbosity:
        return

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(asctime)s | %(levelname)s | %(name)s | %(message)s'))

    logger = logging.getLogger('tracezero')
    logger.addHandler(handler)
    logger.setLevel(logging.DEBUG if verbosity > 1 else logging.INFO)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Runs the command line interface and returns its exit code: 0 on success, 2 when a search finds nothing, 3 on bad input and 4 when an internal check
    fails.
    """

    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    args.seed = resolve_seed(args.seed)

    try:
        return args.function(args)

    except (NotPrimeOrder, BoundExceeded) as error:
        print(f'error: {error}', file=sys.stderr)
        return EXIT_SEARCH_FAILED

    except (LineException, CurveException, ParamsFileError, InvalidScalar, InvalidParameters, ValueError, OSError) as error:
        print(f'error: {error}', file=sys.stderr)
        return EXIT_BAD_INPUT

    except (NoCandidate, SingularSystem) as error:
        print(f'internal error: {error}', file=sys.stderr)
        return EXIT_INTERNAL
