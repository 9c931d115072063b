"""Command-line front end: ``dpcomb spectrum|resonances|envelope|verify``.

Exit codes: 0 ok, 1 verification failure, 2 usage or domain error,
3 I/O error.
"""
import argparse
import logging
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone

import numpy as np

from . import __version__, comb, oracle, regularized, transfer, verify
from .errors import ConstructionError, DomainError, IntegrationError, NumericalCorruptionError
from .spectrum import SpectrumTable

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
MODES = ("ideal", "regularized", "oracle")
REFINE_POINTS = 50

log = logging.getLogger("dpcomb")


class UsageError(ValueError):
    pass


@dataclass
class SweepConfig:
    theta: float
    n: int
    k_min: float = 0.0
    k_max: float = math.pi
    k_points: int = 2001
    mode: str = "ideal"
    epsilon: float = None
    h: float = 1.0
    output_path: str = None
    potential_path: str = None

    def validate(self):
        if self.k_points < 2:
            raise UsageError("--points must be at least 2")
        if not self.k_min < self.k_max:
            raise UsageError("--k-min must be smaller than --k-max")
        if self.mode not in MODES:
            raise UsageError(f"--mode must be one of {', '.join(MODES)}")
        if (self.epsilon is not None) != (self.mode != "ideal"):
            raise UsageError("--epsilon is required for regularized/oracle modes and not allowed for ideal")
        if self.potential_path and self.mode == "ideal":
            raise UsageError("--potential only applies to regularized/oracle modes")
        if self.n < 1:
            raise UsageError("--n must be positive")
        if not self.h > 0:
            raise UsageError("--spacing must be positive")
        return self


def thread_count(requested=None):
    if requested:
        return max(1, int(requested))
    env = os.environ.get("DPCOMB_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"DPCOMB_THREADS must be an integer, got {env!r}")
    return os.cpu_count() or 1


def parallel_map(fn, ks, threads):
    """Evaluate ``fn`` on contiguous chunks of ``ks``; output keeps grid order."""
    if threads <= 1 or ks.size < 2 * threads:
        return fn(ks)
    chunks = np.array_split(ks, threads)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return np.concatenate(list(pool.map(fn, chunks)))


def k_grid(k_min, k_max, points, refine_at=(), endpoint=True):
    ks = np.linspace(k_min, k_max, points, endpoint=endpoint)
    if len(refine_at):
        step = (k_max - k_min) / (points - 1)
        offsets = step * np.arange(-REFINE_POINTS // 2, REFINE_POINTS // 2) / (REFINE_POINTS // 2)
        extra = [kj + offsets for kj in refine_at]
        ks = np.concatenate([ks, *extra])
        ks = ks[(ks >= k_min) & (ks <= k_max) if endpoint else (ks >= k_min) & (ks < k_max)]
        ks = np.unique(ks)
    return ks


def resonance_images(theta, n, k_min, k_max, h=1.0):
    """Resonances of the ideal comb (in physical k) and their period images in range."""
    base = np.array(comb.resonances(theta, n).points) / h
    period = math.pi / h
    out = []
    for m in range(math.floor(k_min / period) - 1, math.ceil(k_max / period) + 1):
        out.extend(kj + m * period for kj in base if k_min <= kj + m * period <= k_max)
    return sorted(out)


def _metadata(extra, stamp):
    meta = dict(extra)
    meta["version"] = __version__
    if stamp:
        meta["stamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return meta


def _potential(cfg):
    if cfg.potential_path:
        return regularized.load_potential(cfg.potential_path)
    return regularized.example_potential(cfg.theta)


def cmd_spectrum(cfg, threads=1, refine=False, alt=False, stamp=False):
    cfg.validate()
    refine_at = resonance_images(cfg.theta, cfg.n, cfg.k_min, cfg.k_max, cfg.h) if refine else ()
    ks = k_grid(cfg.k_min, cfg.k_max, cfg.k_points, refine_at)
    theta = cfg.theta
    T_alt = None
    if cfg.mode == "ideal":
        primary = lambda k: comb.transmission_closed_form(theta, cfg.h * k, cfg.n)
        secondary = lambda k: transfer.transmission_from_products(theta, cfg.n, k, cfg.h)
    else:
        pot = _potential(cfg)
        theta = pot.theta
        spec = regularized.DipoleArraySpec(pot, cfg.n, cfg.epsilon, cfg.h)
        analytic = lambda k: regularized.regularized_transmission_grid(spec, k)
        numeric = lambda k: oracle.array_transmission_numeric_grid(spec, k)
        primary, secondary = (analytic, numeric) if cfg.mode == "regularized" else (numeric, analytic)
    T = parallel_map(primary, ks, threads)
    if alt:
        T_alt = parallel_map(secondary, ks, threads)
    meta = _metadata({"theta": repr(float(theta)), "n": cfg.n, "mode": cfg.mode,
                      "epsilon": "" if cfg.epsilon is None else repr(float(cfg.epsilon)),
                      "spacing": repr(float(cfg.h))}, stamp)
    table = SpectrumTable(ks, T, T_alt, meta)
    _emit(table, cfg.output_path)
    return table


def cmd_resonances(theta, n, out=None):
    if not 0.0 < theta < 1.0:
        raise DomainError(f"resonances expects canonical theta in (0, 1), got {theta}")
    if n < 2:
        raise DomainError("a comb needs n >= 2 interactions to have resonances")
    rs = comb.resonances(theta, n)
    lines = [f"# theta={theta!r} n={n}", f"{'j':>4}  {'k_j':>20}  {'T(k_j)':>12}"]
    for j, kj in enumerate(rs, start=1):
        lines.append(f"{j:>4}  {kj:>20.15f}  {comb.transmission_closed_form(theta, kj, n):>12.9f}")
    text = "\n".join(lines) + "\n"
    (out or sys.stdout).write(text)
    return text


def cmd_envelope(theta, k_points=2001, min_n=None, output_path=None, threads=1, stamp=False,
                 k_min=0.0, k_max=math.pi):
    if not 0.0 < theta < 1.0:
        raise DomainError(f"envelope expects theta in (0, 1), got {theta}")
    if k_points < 2:
        raise UsageError("--points must be at least 2")
    ks = k_grid(k_min, k_max, k_points, endpoint=False)
    zeta = comb.envelope(theta, ks)
    lowest = None
    if min_n:
        def family_min(chunk):
            out = np.ones_like(chunk)
            for n in range(1, min_n + 1):
                out = np.minimum(out, comb.transmission_closed_form(theta, chunk, n))
            return out
        lowest = parallel_map(family_min, ks, threads)
    meta = _metadata({"theta": repr(float(theta)), "quantity": "envelope",
                      "min_n": "" if not min_n else min_n}, stamp)
    table = SpectrumTable(ks, zeta, lowest, meta)
    _emit(table, output_path)
    return table


def cmd_verify(level="fast", out=None):
    out = out or sys.stdout
    checks = verify.run(level)
    for c in checks:
        out.write(c.line() + "\n")
    failed = [c.name for c in checks if not c.passed]
    if failed:
        out.write(f"FAILED: {', '.join(failed)}\n")
        return EXIT_VERIFY
    out.write(f"all {len(checks)} checks passed\n")
    return EXIT_OK


def _emit(table, path):
    if path:
        table.save(path)
    else:
        table.write(sys.stdout)


def build_parser():
    parser = argparse.ArgumentParser(prog="dpcomb", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"dpcomb {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="transmission T(k) over a k-grid as CSV")
    sp.add_argument("--theta", type=float)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k-min", type=float, default=0.0)
    sp.add_argument("--k-max", type=float, default=math.pi)
    sp.add_argument("--points", type=int, default=2001)
    sp.add_argument("--mode", choices=MODES, default="ideal")
    sp.add_argument("--epsilon", type=float)
    sp.add_argument("--spacing", type=float, default=1.0)
    sp.add_argument("--potential", help="half-bound-state sample file (regularized/oracle modes)")
    sp.add_argument("--out")
    sp.add_argument("--threads", type=int)
    sp.add_argument("--refine", action="store_true", help=f"add {REFINE_POINTS} points around each resonance")
    sp.add_argument("--alt", action="store_true", help="add a T_alt column from the independent path")
    sp.add_argument("--stamp", action="store_true")

    rp = sub.add_parser("resonances", help="table of resonance points k_j")
    rp.add_argument("--theta", type=float, required=True)
    rp.add_argument("--n", type=int, required=True)

    ep = sub.add_parser("envelope", help="envelope inf_n T_n(theta, k) as CSV")
    ep.add_argument("--theta", type=float, required=True)
    ep.add_argument("--points", type=int, default=2001)
    ep.add_argument("--min-n", type=int, help="add min over n <= MIN_N of T_n as T_alt")
    ep.add_argument("--out")
    ep.add_argument("--threads", type=int)
    ep.add_argument("--stamp", action="store_true")

    vp = sub.add_parser("verify", help="run the cross-path verification suite")
    vp.add_argument("--level", choices=("fast", "full"), default="fast")
    return parser


def main(argv=None):
    logging.basicConfig(level=logging.WARNING, format="dpcomb: %(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        if args.command == "spectrum":
            if args.theta is None and not args.potential:
                raise UsageError("--theta is required unless --potential is given")
            cfg = SweepConfig(theta=args.theta if args.theta is not None else 1.0, n=args.n,
                              k_min=args.k_min, k_max=args.k_max, k_points=args.points,
                              mode=args.mode, epsilon=args.epsilon, h=args.spacing,
                              output_path=args.out, potential_path=args.potential)
            cmd_spectrum(cfg, threads=thread_count(args.threads), refine=args.refine,
                         alt=args.alt, stamp=args.stamp)
        elif args.command == "resonances":
            cmd_resonances(args.theta, args.n)
        elif args.command == "envelope":
            cmd_envelope(args.theta, args.points, args.min_n, args.out,
                         threads=thread_count(args.threads), stamp=args.stamp)
        else:
            return cmd_verify(args.level)
    except (UsageError, DomainError, ConstructionError) as exc:
        print(f"dpcomb: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"dpcomb: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (NumericalCorruptionError, IntegrationError) as exc:
        print(f"dpcomb: numerical failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
