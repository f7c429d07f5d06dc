"""Render every preset's figure (SVG plus per-series CSVs) into one directory.

    python scripts/reproduce_figures.py --out figures
"""
import argparse
import sys

from ichannel.cli import main as cli_main
from ichannel.presets import PRESETS


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="figures")
    parser.add_argument("--family", choices=("matched", "independent"), default="matched")
    args = parser.parse_args(argv)
    for name in PRESETS:
        code = cli_main(["figure", "--config", name, "--out", args.out, "--family", args.family])
        if code:
            return code
    return 0


if __name__ == "__main__":
    sys.exit(main())
