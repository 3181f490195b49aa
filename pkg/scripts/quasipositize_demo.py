#!/usr/bin/env python3
"""Quasipositize random handle subsets of the fiber model S(q_n).

Each trial marks a random set of fine 1-handles, takes the spine, runs the
reduction and the local move, and reports the output representation next to
the neighborhood summary it must (and does) reproduce.
"""

import argparse
import random

from qpfiber.graphcalc import neighborhood_summary
from qpfiber.qpize import quasipositize
from qpfiber.sampling import random_fine_handle_subset
from qpfiber.constructions import q_rep
from qpfiber.surface import BraidedSurface, handle_spine


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--trials", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    host = BraidedSurface(q_rep(args.n))
    band_count = len(host.bands)
    for trial in range(args.trials):
        subset = random_fine_handle_subset(rng, band_count)
        spine = handle_spine(host, subset)
        want = neighborhood_summary(spine)
        result = quasipositize(args.n, spine)
        print(f"trial {trial}: handles {subset or '{}'}")
        print(f"  summary  {want.to_json()}")
        print(f"  output   {result.output.to_json()}")
        assert result.output_summary == want


if __name__ == "__main__":
    main()
