#!/usr/bin/env python3
"""Regenerate the fixture directory from the brute-force oracles."""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from minbasis.fixtures import generate_fixtures


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--out", default="fixtures")
    args = parser.parse_args()
    manifests = generate_fixtures(args.seed, args.out)
    for m in manifests:
        print(f"wrote {args.out}/{m['input']} ({m['kind']})")
    print(f"{len(manifests)} fixtures written to {args.out}/ with seed {args.seed}")


if __name__ == "__main__":
    main()
