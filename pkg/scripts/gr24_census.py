"""Census of the F1 model of Gr(2,4): points of Proj by rank, the cone's
primes, and agreement with the complementary-pair description.

    python scripts/gr24_census.py [--budget K] [--dot out.dot]
"""
import argparse
from collections import Counter
from pathlib import Path

from bluescheme.models import GR24_GENERATORS, PLUCKER_PAIRS, grassmannian_2_4_presentation
from bluescheme.poset_doc import PosetDocument
from bluescheme.proj import build_proj
from bluescheme.spectra import closed_points, spectrum


def describe(names) -> str:
    s = set(names)
    if any(s <= set(pair) for pair in PLUCKER_PAIRS):
        return "inside a pair"
    if all(s & set(pair) for pair in PLUCKER_PAIRS):
        return "meets all pairs"
    return "?"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--budget", type=int, default=3)
    ap.add_argument("--dot", type=Path)
    args = ap.parse_args()

    pres = grassmannian_2_4_presentation()
    cone = spectrum(pres, budget=args.budget)
    proj = build_proj(pres, budget=args.budget)
    print(f"cone primes: {len(cone)} of 64 subsets")
    print(f"Proj points: {len(proj.points)}  ranks {proj.points.rank_histogram()}")

    by_rank = Counter()
    for p in proj.points:
        by_rank[(proj.points.ranks[p], describe(p.names))] += 1
    for (r, kind), c in sorted(by_rank.items()):
        print(f"  rank {r:>2}  {kind:<16} {c}")

    print("closed points (the coordinate left out):")
    for p in closed_points(proj.points):
        (missing,) = set(GR24_GENERATORS) - set(p.names)
        print(f"  {p.format():<32} misses {missing}")

    if args.dot:
        doc = PosetDocument.from_poset(proj.points, pres.name, "proj", pres.generators)
        args.dot.write_text(doc.to_dot())
        print(f"wrote {args.dot}")


if __name__ == "__main__":
    main()
