#!/usr/bin/env python3
"""Dump DOT files of the weak/strong tableau posets for all shapes of size n."""
import argparse
from pathlib import Path

from sytmaj.mutations import build_poset, verify_ranked
from sytmaj.shapes import partitions


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("n", type=int, help="number of cells")
    ap.add_argument("--order", choices=("weak", "strong", "both"), default="both")
    ap.add_argument("--out", default="posets", help="output directory")
    args = ap.parse_args()
    orders = ("weak", "strong") if args.order == "both" else (args.order,)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    for p in partitions(args.n):
        for order in orders:
            poset = build_poset(p, order)
            report = verify_ranked(poset)
            name = f"{'-'.join(map(str, p.parts))}_{order}.dot"
            (outdir / name).write_text(poset.to_dot())
            print(f"{name}: {report.size} nodes, ranked={report.ok()}")


if __name__ == "__main__":
    main()
