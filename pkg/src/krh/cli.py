"""``krh`` command line: compute tables, check stabilization, run suites.

Exit codes: 0 success, 1 a verification failed, 2 bad input, 3 resource
limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass

from .hecke import homfly
from .hochschild import hochschild_full
from .homology import (
    WindowError,
    compare_consecutive,
    compare_stable,
    default_window,
    hhh,
    normalize,
    parse_window,
)
from .rouquier import BraidParseError, ResourceLimit, parse_braid, rouquier_complex, stable_range, torus_braid
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    braid: str = ""
    strands: int | None = None
    window: tuple[int, int] | None = None
    coeff: str = "Z"
    mode: str = "iterated"
    normalize: bool = False
    fmt: str = "json"
    workers: int = 1
    depth: int = 6
    max_generators: int | None = None

    def __post_init__(self):
        if self.window is not None and self.window[0] > self.window[1]:
            raise WindowError("window lo must be <= hi")
        if self.workers < 1:
            raise ValueError("worker count must be >= 1")


def _env_workers() -> int:
    try:
        return max(1, int(os.environ.get("KRH_WORKERS", "1")))
    except ValueError:
        return 1


def _config(ns: argparse.Namespace) -> RunConfig:
    window = parse_window(ns.window) if getattr(ns, "window", None) else None
    if window is None and os.environ.get("KRH_WINDOW"):
        window = parse_window(os.environ["KRH_WINDOW"])
    workers = ns.workers if getattr(ns, "workers", None) is not None else _env_workers()
    return RunConfig(
        command=ns.command,
        braid=getattr(ns, "braid", "") or "",
        strands=getattr(ns, "strands", None),
        window=window,
        coeff=getattr(ns, "coeff", "Z"),
        mode=getattr(ns, "mode", "iterated"),
        normalize=getattr(ns, "normalize", False),
        fmt=getattr(ns, "format", "json"),
        workers=workers,
        depth=getattr(ns, "depth", 6),
        max_generators=getattr(ns, "max_generators", None),
    )


def cmd_hhh(cfg: RunConfig, out) -> int:
    b = parse_braid(cfg.braid, cfg.strands)
    c = rouquier_complex(b, max_generators=cfg.max_generators)
    fc = hochschild_full(c)
    window = cfg.window or default_window(fc)
    if cfg.mode == "total":
        tt = hhh(fc, window, cfg.coeff, mode="total", workers=cfg.workers)
        if cfg.fmt == "json":
            obj = {
                "strands": b.strands,
                "braid": str(b),
                "window": list(tt.q_window),
                "entries": [
                    {"q": q, "d": d, "rank": r, "torsion": list(tor)}
                    for (q, d), (r, tor) in sorted(tt.entries.items())
                ],
            }
            print(json.dumps(obj, separators=(",", ":")), file=out)
        else:
            print(f"# strands={b.strands} braid={str(b)!r} total degree d = a + t", file=out)
            for (q, d), (r, tor) in sorted(tt.entries.items()):
                print(f"{q:>5} {d:>3} {r:>4}  {','.join(map(str, tor)) or '-'}", file=out)
        return EXIT_OK
    table = hhh(fc, window, cfg.coeff, workers=cfg.workers)
    table.braid = str(b)
    if cfg.normalize:
        table = normalize(table, b.exponent, b.strands)
    print(table.to_json() if cfg.fmt == "json" else table.to_text(), file=out)
    return EXIT_OK


def cmd_stable(cfg: RunConfig, n: int, k_max: int, out) -> int:
    ok = True
    prev = None
    for k in range(1, k_max + 1):
        b = torus_braid(n, k)
        c = rouquier_complex(b, max_generators=cfg.max_generators)
        fc = hochschild_full(c)
        window = cfg.window or default_window(fc)
        table = normalize(hhh(fc, window, cfg.coeff, workers=cfg.workers), b.exponent, n)
        sr = stable_range(n, k)
        outside = [key for key in table.doubled() if not sr.in_support(key[2])]
        rep = compare_stable(table, n, k)
        line = {
            "n": n,
            "k": k,
            "stable_t2": [sr.stable_lo2, sr.support_hi2],
            "checked": rep.checked,
            "mismatches": [list(map(_plain, m)) for m in rep.mismatches],
            "torsion": [list(map(_plain, t)) for t in rep.torsion],
            "outside_support": len(outside),
            "ok": rep.ok and not outside,
        }
        if prev is not None:
            line["consecutive_ok"] = not compare_consecutive(prev, table, n, k)
            line["ok"] = line["ok"] and line["consecutive_ok"]
        ok &= line["ok"]
        prev = table
        if cfg.fmt == "json":
            print(json.dumps(line, separators=(",", ":")), file=out)
        else:
            status = "PASS" if line["ok"] else "FAIL"
            print(f"{status} T({n},{k}): {rep.checked} tridegrees checked, {len(rep.mismatches)} mismatches", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def _plain(x):
    if isinstance(x, tuple):
        return [_plain(y) for y in x]
    return x


def cmd_verify(name: str, cfg: RunConfig, out) -> int:
    kw = {"depth": cfg.depth} if name == "absorption" else {}
    checks = run_suite(name, **kw)
    for c in checks:
        print(f"{'PASS' if c.ok else 'FAIL'} {name}: {c.name}" + (f"  [{c.detail}]" if c.detail and not c.ok else ""), file=out)
    return EXIT_OK if all(c.ok for c in checks) else EXIT_FAIL


def cmd_homfly(cfg: RunConfig, out) -> int:
    b = parse_braid(cfg.braid, cfg.strands)
    print(str(homfly(b)), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="krh", description="Triply graded link homology of braid closures.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, braid=True):
        if braid:
            sp.add_argument("braid_pos", nargs="?", metavar="BRAID", help="braid word, e.g. 's1 -s2' or 'torus(2,3)'")
            sp.add_argument("--braid", dest="braid_opt", default=None)
            sp.add_argument("--strands", type=int, default=None)
        sp.add_argument("--window", default=None, help="raw q-window LO:HI")
        sp.add_argument("--coeff", default="Z", help="Z, Q or a prime p")
        sp.add_argument("--workers", type=int, default=None)
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--max-generators", type=int, default=None)

    h = sub.add_parser("hhh", help="homology table of a braid closure")
    common(h)
    h.add_argument("--mode", choices=("iterated", "total"), default="iterated")
    h.add_argument("--normalize", action="store_true")

    s = sub.add_parser("stable", help="compare T(n,k) with the stable series")
    common(s, braid=False)
    s.add_argument("n", type=int)
    s.add_argument("k_max", type=int)

    v = sub.add_parser("verify", help="run a named property suite")
    v.add_argument("suite", help=", ".join(SUITES))
    v.add_argument("--depth", type=int, default=6, help="projector truncation depth")

    f = sub.add_parser("homfly", help="HOMFLY value from the Hecke algebra")
    f.add_argument("braid_pos", nargs="?", metavar="BRAID")
    f.add_argument("--braid", dest="braid_opt", default=None)
    f.add_argument("--strands", type=int, default=None)
    return p


_VALUE_FLAGS = ("--window", "--braid")


_NEG_BRAID = re.compile(r"-s\d")


def _glue_values(argv: list[str]) -> list[str]:
    """Turn ``--window -2:6`` into ``--window=-2:6`` and a bare ``-s1 ...``
    braid into ``--braid=-s1 ...`` so argparse does not mistake a leading
    minus for an option."""
    out, i = [], 0
    while i < len(argv):
        a = argv[i]
        if _NEG_BRAID.match(a) and "--" not in out:
            out.append(f"--braid={a}")
            i += 1
        elif a in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
        else:
            out.append(a)
            i += 1
    return out


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        ns = parser.parse_args(_glue_values(sys.argv[1:] if argv is None else list(argv)))
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if hasattr(ns, "braid_opt"):
        ns.braid = ns.braid_opt if ns.braid_opt is not None else (ns.braid_pos or "")
    try:
        cfg = _config(ns)
        if ns.command == "hhh":
            return cmd_hhh(cfg, out)
        if ns.command == "stable":
            if ns.n < 1 or ns.k_max < 1:
                raise ValueError("need n >= 1 and k_max >= 1")
            return cmd_stable(cfg, ns.n, ns.k_max, out)
        if ns.command == "verify":
            if ns.suite not in SUITES:
                print(f"krh: unknown suite {ns.suite!r}; choose from {', '.join(SUITES)}", file=sys.stderr)
                return EXIT_USAGE
            return cmd_verify(ns.suite, cfg, out)
        return cmd_homfly(cfg, out)
    except (BraidParseError, WindowError, ValueError) as e:
        print(f"krh: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimit as e:
        print(f"krh: resource limit: {e}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
