"""Command line front end.

Exit codes: 0 success, 2 usage or parse problems, 3 a requested
verification failed, 4 a capacity limit was hit, 5 file I/O failed.
"""

from __future__ import annotations

import functools
import sys
from pathlib import Path

import click

from .adversary import iter_hardness_trials, stats_from_trials
from .bench import BRUTE_MAX_N, adversary_csv, run_bench, to_csv
from .brute import cert_complexity, cert_complexity_at, is_certificate, is_minimal
from .certify import angluin_certify, certify_binary, certify_real
from .errors import (
    CapacityError,
    ExhaustionError,
    FormatError,
    KindError,
    SearchError,
    VerificationError,
)
from .funcfile import load_function
from .model import Certificate, IndexSet, Point
from .oracle import CountingOracle


def _fail(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def guarded(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (VerificationError, SearchError, ExhaustionError) as exc:
            _fail(3, str(exc))
        except CapacityError as exc:
            _fail(4, str(exc))
        except (FormatError, KindError, ValueError) as exc:
            _fail(2, str(exc))
        except OSError as exc:
            _fail(5, str(exc))

    return wrapper


def _parse_point(text: str, n: int) -> Point:
    x = Point.parse(text)
    if x.n != n:
        raise FormatError(f"input has {x.n} bits, the function takes {n}")
    return x


def _parse_indices(text: str, n: int) -> IndexSet:
    body = text.strip().strip("{}").strip()
    if not body:
        return IndexSet.empty(n)
    try:
        members = [int(part) for part in body.split(",")]
    except ValueError as exc:
        raise FormatError(f"bad index list {text!r}: {exc}") from exc
    return IndexSet.of(members, n)


def _verify_mode(n: int) -> str:
    return "exhaustive" if n <= BRUTE_MAX_N else "monotone_fast"


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


@click.group()
def main():
    """Certificates for monotone functions, with query counting."""


@main.command()
@click.argument("function_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("point")
@click.option("--algorithm", type=click.Choice(["binary", "angluin"]),
              default="binary", show_default=True)
@click.option("--real", "use_real", is_flag=True,
              help="Certify the exact value of a real-valued function.")
@click.option("--verify", "do_verify", is_flag=True,
              help="Check the output against the brute-force verifier.")
@click.option("--debug", is_flag=True,
              help="Assert internal invariants with extra queries.")
@guarded
def certify(function_file, point, algorithm, use_real, do_verify, debug):
    """Certify the function's value at POINT (a bitstring like 10110)."""
    f = load_function(function_file)
    x = _parse_point(point, f.n)
    oracle = CountingOracle(f)
    if use_real:
        if algorithm == "angluin":
            raise FormatError("--real works with the binary certifier only")
        result = certify_real(oracle, x, debug=debug)
    elif algorithm == "binary":
        result = certify_binary(oracle, x, debug=debug)
    else:
        result = angluin_certify(oracle, x)
    cert = result.certificate
    click.echo(f"certificate: {cert.render()}, value: {cert.value}")
    click.echo(f"queries: {result.queries_used}")
    click.echo(f"iterations: {result.iterations}")
    click.echo(f"algorithm: {result.algorithm}")
    if do_verify:
        mode = _verify_mode(f.n)
        valid = is_certificate(f, x, cert.indices, mode)
        minimal = valid and is_minimal(f, x, cert.indices, mode)
        click.echo(f"verify: valid={_yesno(valid)} minimal={_yesno(minimal)} "
                   f"mode={mode}")
        if not valid or not minimal:
            raise VerificationError("certifier output failed verification")


@main.command()
@click.argument("function_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("point")
@click.argument("indices")
@guarded
def verify(function_file, point, indices):
    """Check whether INDICES (like 2,4) certify the value at POINT.

    Exits 3 when the set is not a certificate.
    """
    f = load_function(function_file)
    x = _parse_point(point, f.n)
    s = _parse_indices(indices, f.n)
    mode = _verify_mode(f.n)
    valid = is_certificate(f, x, s, mode)
    click.echo(f"certificate: {_yesno(valid)}")
    click.echo(f"minimal: {_yesno(is_minimal(f, x, s, mode)) if valid else 'n/a'}")
    click.echo(f"mode: {mode}")
    if not valid:
        raise VerificationError(f"{s!r} does not certify the value at {point}")


@main.command()
@click.argument("function_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("point", required=False)
@guarded
def complexity(function_file, point):
    """Exact certificate complexity, at POINT or over all inputs."""
    f = load_function(function_file)
    if point is not None:
        x = _parse_point(point, f.n)
        report = cert_complexity_at(f, x)
        click.echo(f"C(f,x) = {report.value}")
    else:
        report = cert_complexity(f)
        click.echo(f"C(f) = {report.value}")
        click.echo(f"at: {report.at.to01()}")
    witness = Certificate(report.witness, report.at, f.evaluate_mask(report.at.mask))
    click.echo(f"witness: {witness.render()}")


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise FormatError(f"bad {what} {text!r}: {exc}") from exc


@main.command()
@click.option("--n-list", default="8,10,12", show_default=True,
              help="Comma-separated dimensions to sweep.")
@click.option("--trials", default=5, show_default=True)
@click.option("--seed", default=1, show_default=True)
@click.option("--minterms", default=4, show_default=True,
              help="Minterm draws per random function.")
@click.option("--width", default=4, show_default=True,
              help="Largest minterm width (clamped to n).")
@click.option("--algorithms", default="binary,angluin", show_default=True,
              help="Comma-separated subset of binary,angluin.")
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Write CSV here instead of stdout.")
@guarded
def bench(n_list, trials, seed, minterms, width, algorithms, out):
    """Sweep random instances; every emitted row is verified."""
    ns = _parse_int_list(n_list, "dimension list")
    if not ns:
        raise FormatError("the dimension list is empty")
    algos = [a.strip() for a in algorithms.split(",") if a.strip()]
    records = run_bench(ns, trials, seed, minterms, width, algos)
    csv = to_csv(records)
    if out is None:
        click.echo(csv, nl=False)
        click.echo(f"wrote {len(records)} records", err=True)
    else:
        Path(out).write_text(csv)
        click.echo(f"wrote {len(records)} records to {out}")


@main.command()
@click.option("--n", required=True, type=int)
@click.option("--k", required=True, type=int)
@click.option("--trials", default=1000, show_default=True)
@click.option("--seed", default=1, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Write per-trial CSV here.")
@guarded
def adversary(n, k, trials, seed, out):
    """Measure shuffled shortest-certificate scans on planted instances."""
    records = list(iter_hardness_trials(n, k, trials, seed))
    stats = stats_from_trials(n, k, seed, records)
    click.echo(f"n={stats.n} k={stats.k} trials={stats.trials} seed={stats.seed}")
    click.echo(f"total size-k subsets: {stats.total_subsets}")
    click.echo(f"mean queries: {stats.mean_queries:.3f}")
    click.echo(f"min queries: {stats.min_queries}")
    click.echo(f"max queries: {stats.max_queries}")
    click.echo(f"analytic mean for a uniform hit: "
               f"{(stats.total_subsets + 1) / 2:.1f}")
    if out is not None:
        Path(out).write_text(adversary_csv(records))
        click.echo(f"wrote {trials} trials to {out}")


if __name__ == "__main__":
    main()
