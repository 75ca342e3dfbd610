"""Command line front end: JSON config in, basis on stdout, JSON report out.

    python -m tropf5 --config bench_row1 --algorithm both --verify --stats-json out.json

``--config`` takes a path or the name of a shipped corpus file.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import List, Optional, Sequence

from .buchberger import buchberger, same_leading_ideal, verify_groebner
from .orders import ModMono, OrderConfig
from .parser import ParseError, parse_operator  # re-exported: the grammar is part of the CLI surface
from .sigengine import f5_groebner
from .weylcore import Operator, format_mono, format_operator

ALGORITHMS = ("f5", "buchberger", "both")

EXIT_OK = 0
EXIT_UNVERIFIED = 1
EXIT_CONFIG = 2


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    name: str
    order: OrderConfig
    generators: List[str]
    operators: List[Operator]
    algorithm: str = "f5"
    verify: bool = False
    completion: bool = True


def corpus_names() -> List[str]:
    root = resources.files("tropf5") / "corpus"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def _read_config(ref: str) -> dict:
    path = Path(ref)
    if path.is_file():
        text = path.read_text()
    else:
        name = ref[:-5] if ref.endswith(".json") else ref
        if name not in corpus_names():
            raise ConfigError(f"no config file or corpus entry named {ref!r}")
        text = (resources.files("tropf5") / "corpus" / f"{name}.json").read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"config is not valid JSON: {e}") from None
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    return data


def load_config(data: dict, algorithm: Optional[str] = None,
                verify: Optional[bool] = None) -> RunConfig:
    """Validate a config document; nothing is computed here."""
    for key in ("n", "w", "omega", "generators"):
        if key not in data:
            raise ConfigError(f"config is missing {key!r}")
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ConfigError("n must be a positive integer")
    try:
        order = OrderConfig(n, data["w"], data["omega"], data.get("tiebreak", "lex"),
                            data.get("precedence"), data.get("prime", 2))
    except (ValueError, TypeError, ZeroDivisionError) as e:
        raise ConfigError(f"bad order settings: {e}") from None
    gens = data["generators"]
    if not isinstance(gens, list) or not gens or not all(isinstance(g, str) for g in gens):
        raise ConfigError("generators must be a nonempty list of strings")
    ops = []
    for k, src in enumerate(gens):
        try:
            op = parse_operator(src, n)
        except ParseError as e:
            raise ConfigError(f"generator {k + 1} {src!r}: {e}") from None
        ops.append(op)
    if not any(ops):
        raise ConfigError("all generators are zero")
    alg = algorithm or data.get("algorithm", "f5")
    if alg not in ALGORITHMS:
        raise ConfigError(f"algorithm must be one of {', '.join(ALGORITHMS)}")
    ver = data.get("verify", False) if verify is None else verify
    return RunConfig(str(data.get("name", "")), order, list(gens), ops, alg, bool(ver))


def format_modmono(m: ModMono) -> str:
    body = format_mono(m.mono)
    return f"e{m.idx}" if body == "1" else f"{body}*e{m.idx}"


def _basis_block(basis, basis_dehom, cfg: OrderConfig) -> dict:
    return {
        "basis": [format_operator(g, cfg.term_key) for g in basis],
        "basis_dehomogenized": [format_operator(g, cfg.term_key) for g in basis_dehom],
    }


def run(rc: RunConfig) -> dict:
    """Compute and return the report."""
    cfg = rc.order
    report = {"name": rc.name, "order": cfg.to_dict(), "generators": rc.generators,
              "algorithm": rc.algorithm, "completion": rc.completion, "results": {}}
    bases = {}
    if rc.algorithm in ("f5", "both"):
        res = f5_groebner(rc.operators, cfg, completion=rc.completion)
        block = _basis_block(res.basis, res.basis_dehom, cfg)
        block["syzygy_leading_monomials"] = [format_modmono(m) for m in res.S]
        block["stats"] = res.stats.to_dict()
        report["results"]["f5"] = block
        bases["f5"] = res.basis
    if rc.algorithm in ("buchberger", "both"):
        res = buchberger(rc.operators, cfg)
        block = _basis_block(res.basis, res.basis_dehom, cfg)
        block["stats"] = res.stats.to_dict()
        report["results"]["buchberger"] = block
        bases["buchberger"] = res.basis
    if rc.verify:
        for alg, basis in bases.items():
            report["results"][alg]["verified"] = verify_groebner(basis, cfg)
        if len(bases) == 2:
            report["same_leading_ideal"] = same_leading_ideal(bases["f5"], bases["buchberger"], cfg)
    return report


def report_ok(report: dict) -> bool:
    ok = all(b.get("verified", True) for b in report["results"].values())
    return ok and report.get("same_leading_ideal", True)


def render(report: dict) -> str:
    lines = []
    for alg, block in report["results"].items():
        st = block["stats"]
        lines.append(f"[{alg}] basis ({len(block['basis'])} elements, homogenized):")
        lines.extend(f"  {g}" for g in block["basis"])
        lines.append(f"[{alg}] dehomogenized:")
        lines.extend(f"  {g}" for g in block["basis_dehomogenized"])
        if "syzygy_leading_monomials" in block:
            lines.append(f"[{alg}] syzygy leading monomials: {len(block['syzygy_leading_monomials'])}")
        lines.append(f"[{alg}] pairs processed {st['normal_pairs_processed']}, "
                     f"zero reductions {st['zero_reductions']}, "
                     f"ratio {st['zero_ratio']:.3f}, {st['elapsed']:.2f}s")
        if "verified" in block:
            lines.append(f"[{alg}] verified: {str(block['verified']).lower()}")
    if "same_leading_ideal" in report:
        lines.append(f"same leading ideal: {str(report['same_leading_ideal']).lower()}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tropf5", description=__doc__.splitlines()[0])
    ap.add_argument("--config", help="JSON config path or corpus name")
    ap.add_argument("--algorithm", choices=ALGORITHMS, help="overrides the config")
    ap.add_argument("--verify", action="store_true", default=None,
                    help="check the output with Buchberger's criterion")
    ap.add_argument("--stats-json", metavar="PATH", help="write the JSON report here ('-' for stdout)")
    ap.add_argument("--no-completion", action="store_true",
                    help="run F5 without the completion check (may not terminate)")
    ap.add_argument("--list-corpus", action="store_true", help="list shipped configs and exit")
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.list_corpus:
        print("\n".join(corpus_names()))
        return EXIT_OK
    if not args.config:
        print("error: --config is required", file=sys.stderr)
        return EXIT_CONFIG
    try:
        rc = load_config(_read_config(args.config), args.algorithm, args.verify)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    rc.completion = not args.no_completion
    report = run(rc)
    text = json.dumps(report, indent=2)
    if args.stats_json == "-":
        print(text)
    else:
        print(render(report))
        if args.stats_json:
            Path(args.stats_json).write_text(text + "\n")
    return EXIT_OK if report_ok(report) else EXIT_UNVERIFIED


if __name__ == "__main__":
    sys.exit(main())
