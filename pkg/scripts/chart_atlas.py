"""Degree-zero charts of a graded built-in: presentation, size of U_h against
Spec of the chart, and which 2x2-matrix model each chart is.

    python scripts/chart_atlas.py [gr24|p1|p2|...]
"""
import argparse

from bluescheme.dsl import to_dsl
from bluescheme.models import chart_matches_model, get_builtin
from bluescheme.proj import basic_open, build_proj, chart
from bluescheme.spectra import spectrum


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("model", nargs="?", default="gr24")
    args = ap.parse_args()

    proj = build_proj(get_builtin(args.model))
    split = {True: 0, False: 0}
    for h in proj.degree_one_generators():
        ch = chart(proj, h)
        n_open, n_spec = len(basic_open(proj, h)), len(spectrum(ch))
        print(to_dsl(ch), end="")
        line = f"  |U_{h}| = {n_open}, |Spec| = {n_spec}"
        if ch.relations:
            m = chart_matches_model(proj, h)
            if m:
                split[m.twisted] += 1
                line += f", {'twisted' if m.twisted else 'untwisted'} M2"
        print(line)
    if any(split.values()):
        print(f"untwisted/twisted: {split[False]}/{split[True]}")


if __name__ == "__main__":
    main()
