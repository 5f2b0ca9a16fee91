#!/usr/bin/env python3
"""Reference avoidance counts by exhaustive filtering.

Shares no code with the C++ library. Patterns are written out by hand from
the insertion rule and every candidate permutation is checked against every
subsequence, so the only thing this trusts is itertools.
"""
import argparse
import itertools
import sys


def standardize(seq):
    order = sorted(seq)
    return tuple(order.index(x) + 1 for x in seq)


def contains(p, q):
    k = len(q)
    return any(standardize(sub) == q for sub in itertools.combinations(p, k))


def monotone(k, j, removed):
    """Expansion of 1..(j-1) [gap] j..k minus the pattern with `removed` at the gap."""
    out = []
    for v in range(1, k + 2):
        if v == removed:
            continue
        base = [x + 1 if x >= v else x for x in range(1, k + 1)]
        out.append(tuple(base[: j - 1] + [v] + base[j - 1 :]))
    return out


def parse(spec):
    if spec.startswith("M(") and spec.endswith(")"):
        k, j, i = (int(t) for t in spec[2:-1].split(","))
        return monotone(k, j, i)
    return [tuple(int(c) for c in term) for term in spec.split(";")]


def counts(basis, max_n):
    yield 1
    for n in range(1, max_n + 1):
        yield sum(
            1
            for p in itertools.permutations(range(1, n + 1))
            if not any(contains(p, q) for q in basis)
        )


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--class", dest="spec", required=True)
    ap.add_argument("--n", type=int, required=True)
    args = ap.parse_args()
    basis = parse(args.spec)
    sys.stdout.write("n,count\n")
    for n, c in enumerate(counts(basis, args.n)):
        sys.stdout.write(f"{n},{c}\n")


if __name__ == "__main__":
    main()
