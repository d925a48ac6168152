"""Expand products of domino functions at generic q in the domino basis.

At q = 1 the expansion coefficients are products of two LR coefficients.  At
generic q no such rule is claimed; this script records what the exact solver
finds, block by block (fixed minus-quotient weight), and whether the block
answer is unique.
"""
import argparse
import json
import logging
from itertools import combinations_with_replacement

from qsymb.combinat import empty_two_core, format_partition
from qsymb.expand import NotExpandable, expand_in_domino_basis, from_domino_expansion
from qsymb.qpoly import domino_function
from qsymb.tableaux import two_quotient_shape

log = logging.getLogger("explore_generic_q")


def minus_weight(shape) -> int:
    return sum(two_quotient_shape(shape)[0])


def explore(total: int, M: int) -> list[dict]:
    rows = []
    for a in range(1, total):
        b = total - a
        if a > b:
            continue
        pairs = [(l, m) for l in empty_two_core(a) for m in empty_two_core(b)]
        if a == b:
            shapes = empty_two_core(a)
            pairs = list(combinations_with_replacement(shapes, 2))
        for lam, mu in pairs:
            prod = domino_function(lam, M) * domino_function(mu, M)
            k = minus_weight(lam) + minus_weight(mu)
            block = expand_in_domino_basis(prod, total, M, "generic", minus_weight=k)
            row = {"lambda": format_partition(lam), "mu": format_partition(mu), "minus_weight": k}
            if isinstance(block, NotExpandable):
                free = expand_in_domino_basis(prod, total, M, "generic")
                row["block"] = "not-expandable"
                row["fallback"] = ({format_partition(nu): str(c) for nu, c in free.items()}
                                   if not isinstance(free, NotExpandable) else "not-expandable")
                if not isinstance(free, NotExpandable):
                    row["fallback_reconstructs"] = from_domino_expansion(free, M, "generic") == prod
            else:
                row["block"] = {format_partition(nu): str(c) for nu, c in block.items()}
            log.info("%s * %s -> %s", row["lambda"], row["mu"], row.get("block"))
            rows.append(row)
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--total", type=int, default=2, help="n + m")
    ap.add_argument("--alphabet", type=int, default=None, help="M (defaults to n + m)")
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    rows = explore(args.total, args.alphabet or args.total)
    print(json.dumps(rows, indent=2))


if __name__ == "__main__":
    main()
