"""Compare single-split Han-Kobayashi regions with their hull over a split grid.

    python scripts/split_sweep.py --preset fig3 --grid 11
"""
import argparse

from ichannel.geometry import area, is_subset
from ichannel.han_kobayashi import HK_BUILDERS, PowerSplit, sweep_splits
from ichannel.presets import FIG3_SPLIT, PRESETS


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--preset", default="fig3", choices=sorted(PRESETS))
    parser.add_argument("--grid", type=int, default=11)
    parser.add_argument("--split", type=float, nargs=2, default=FIG3_SPLIT)
    args = parser.parse_args(argv)

    params = PRESETS[args.preset]
    split = PowerSplit(*args.split)
    print(f"{'strategy':<20} {'single':>10} {'swept':>10} {'gain':>8}")
    for name, builder in HK_BUILDERS.items():
        single = builder(params, split)
        swept = sweep_splits(params, name, args.grid)
        assert is_subset(single, swept)
        a, b = area(single), area(swept)
        gain = b / a if a > 0 else float("inf")
        print(f"{name:<20} {a:>10.4f} {b:>10.4f} {gain:>8.3f}")


if __name__ == "__main__":
    main()
