#!/usr/bin/env python3
"""Print fake-degree polynomials for every irreducible of G(m,d,n)."""
import argparse

from sytmaj.genfun import gmdn_fake_degree
from sytmaj.verify import block_shapes


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("n", type=int)
    ap.add_argument("m", type=int)
    ap.add_argument("d", type=int)
    args = ap.parse_args()
    if args.d <= 0 or args.m % args.d:
        ap.error("d must divide m")
    seen = set()
    for blocks in block_shapes(args.n, args.m):
        orbit = frozenset(b.blocks for b in blocks.orbit(args.d))
        if orbit in seen:
            continue
        seen.add(orbit)
        poly = gmdn_fake_degree(blocks, args.m, args.d)
        print(f"{str(blocks):>20}  {poly.to_json_str()}")
    print(f"# {len(seen)} orbits")


if __name__ == "__main__":
    main()
