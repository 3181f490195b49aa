#!/usr/bin/env python3
"""Sweep the two Alexander routes against each other on random surfaces.

Seifert-matrix route (exact PL linking numbers of pushed-off basis cycles)
versus reduced-Burau route, on random band representations with connected
surfaces.  Any disagreement would indicate a convention error in one of the
oracles; none is expected.
"""

import argparse
import random
import time

from qpfiber.braidcore import beta
from qpfiber.invariants import (
    alexander_from_braid,
    alexander_from_seifert,
    eq_up_to_units,
    seifert_matrix,
)
from qpfiber.sampling import random_band_representation
from qpfiber.surface import BraidedSurface, summary


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=200)
    parser.add_argument("--max-strands", type=int, default=4)
    parser.add_argument("--max-bands", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--allow-negative", action="store_true")
    args = parser.parse_args()

    rng = random.Random(args.seed)
    started = time.monotonic()
    done = disagreements = 0
    while done < args.trials:
        rep = random_band_representation(
            rng,
            args.max_strands,
            args.max_bands,
            positive_only=not args.allow_negative,
            min_strands=2,
            min_bands=1,
        )
        if len(summary(BraidedSurface(rep)).components) != 1:
            continue
        done += 1
        via_seifert = alexander_from_seifert(seifert_matrix(rep))
        via_burau = alexander_from_braid(beta(rep))
        if not eq_up_to_units(via_seifert, via_burau):
            disagreements += 1
            print(f"DISAGREE {rep.to_json()}: seifert {via_seifert} vs burau {via_burau}")
    elapsed = time.monotonic() - started
    print(f"{done} connected samples, {disagreements} disagreements, {elapsed:.2f}s")


if __name__ == "__main__":
    main()
