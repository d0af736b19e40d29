#!/usr/bin/env python3
"""Generate a deterministic filler-text background corpus.

The vocabulary is everyday non-medical English so the background shares no
characteristic terms with a dermatology crawl, which is what makes the
corpus-label trick separate the two.
"""

import argparse
import random

WORDS = """
market garden river travel music stone window bread cloud engine letter
mountain harbor candle forest ladder bottle carpet bridge signal copper
meadow anchor barrel circus dinner editor fabric gravel hammer island
jacket kettle lantern magnet needle orchard pencil quarry ribbon saddle
tailor umbrella valley wagon xylophone yonder zipper apron basket cellar
drawer estate fiddle goblet hinge ingot jigsaw kayak lumber marble nickel
oyster parlor quilt rudder shovel timber urchin vessel walnut yarn
"""


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--tokens", type=int, default=100000)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--per-line", type=int, default=12)
    parser.add_argument("--out", default="background.txt")
    args = parser.parse_args()

    words = WORDS.split()
    rng = random.Random(args.seed)
    with open(args.out, "w", encoding="ascii") as f:
        written = 0
        while written < args.tokens:
            n = min(args.per_line, args.tokens - written)
            f.write(" ".join(rng.choices(words, k=n)) + "\n")
            written += n
    print(f"wrote {args.tokens} tokens to {args.out}")


if __name__ == "__main__":
    main()
