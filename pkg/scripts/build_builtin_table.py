#!/usr/bin/env python3
"""Regenerate src/dgahunt/_builtin_table.py from src/dgahunt/data/seed_domains.txt.

Usage: python scripts/build_builtin_table.py [--check]
"""

import argparse
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from dgahunt.freqmodel import ModelSource, build_model  # noqa: E402
from dgahunt.fqdn import validate_fqdn  # noqa: E402

SEED = ROOT / "src" / "dgahunt" / "data" / "seed_domains.txt"
TABLE = ROOT / "src" / "dgahunt" / "_builtin_table.py"
EPSILON = 1.0


def read_seed(path=SEED):
    names = []
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            names.append(validate_fqdn(line, strict=True))
    return names


def render(model) -> str:
    lines = [
        '"""Generated by scripts/build_builtin_table.py from data/seed_domains.txt. Do not edit."""',
        "",
        f"EPSILON = {model.smoothing_epsilon!r}",
        f"SAMPLE_SIZE = {model.sample_size!r}",
        "",
        "PROBABILITIES = {",
    ]
    lines += [f"    {c!r}: {p!r}," for c, p in model.probabilities.items()]
    lines += ["}", ""]
    return "\n".join(lines)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="fail if the committed table is stale")
    args = ap.parse_args()

    model = build_model(read_seed(), epsilon=EPSILON, source=ModelSource("builtin"))
    text = render(model)
    if args.check:
        if TABLE.read_text(encoding="utf-8") != text:
            print(f"{TABLE} is out of date", file=sys.stderr)
            return 1
        return 0
    TABLE.write_text(text, encoding="utf-8")
    print(f"wrote {TABLE} ({model.sample_size} domains, {len(model.probabilities)} characters)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
