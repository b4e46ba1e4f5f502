"""Signs of P_n^pk(-1) and D_n^cpk(-1) far beyond brute-force range.

The values come from G'/G and 1/G; for small n they are cross-checked
against enumeration.  Prints each sequence with its sign pattern.
"""

import argparse
from dataclasses import dataclass

from permcheb.cheb import sequence_terms
from permcheb.perms import distribution


@dataclass
class Config:
    count: int = 30
    brute_max_n: int = 8


def sign(x: int) -> str:
    return "+" if x > 0 else "-" if x < 0 else "0"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=Config.count)
    ap.add_argument("--brute-max-n", type=int, default=Config.brute_max_n)
    cfg = Config(**vars(ap.parse_args()))

    for name, subset, stat in (("pk-neg1", "all", "pk"), ("cpk-neg1", "derangements", "cpk")):
        first, terms = sequence_terms(name, cfg.count)
        for n in range(first, min(cfg.brute_max_n, cfg.count) + 1):
            brute = distribution(n, subset, [stat], ["t"]).substitute({"t": -1}).as_constant()
            assert brute == terms[n - first], (name, n, brute, terms[n - first])
        print(f"{name} (n = {first}..{first + cfg.count - 1}; brute force agrees for n <= {cfg.brute_max_n})")
        print("  signs: " + "".join(sign(a) for a in terms))
        for n, a in enumerate(terms, first):
            print(f"  {n:>3} {a}")


if __name__ == "__main__":
    main()
