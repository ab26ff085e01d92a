#!/usr/bin/env python3
"""Writes data/nordstrom_robinson16.txt: the Gray image of the octacode.

The octacode is the Z4-cyclic code of length 7 generated by the Hensel lift
g(x) = x^3 + 2x^2 + x + 3 of x^3 + x + 1, extended by a coordinate holding the
negated sum. Gray map: 0->00, 1->01, 2->11, 3->10.
"""
import itertools
import sys
from pathlib import Path

G = [3, 1, 2, 1]  # low to high
N = 7


def polymul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % 4
    return out


def divides_x7_minus_1():
    # long division of x^7 - 1 by g over Z4 (g is monic)
    rem = [3] + [0] * 6 + [1]
    for d in range(len(rem) - 1, len(G) - 2, -1):
        c = rem[d]
        if c:
            for i, gi in enumerate(G):
                rem[d - len(G) + 1 + i] = (rem[d - len(G) + 1 + i] - c * gi) % 4
    return not any(rem)


def main():
    assert divides_x7_minus_1()
    gray = {0: "00", 1: "01", 2: "11", 3: "10"}
    words = set()
    for coeffs in itertools.product(range(4), repeat=N - 3):
        c = polymul(list(coeffs), G)
        c += [0] * (N - len(c))
        c = c[:N]
        c.append((-sum(c)) % 4)
        words.add("".join(gray[x] for x in c))
    words = sorted(words)
    assert len(words) == 256
    dmin = min(sum(a != b for a, b in zip(u, v)) for u, v in itertools.combinations(words, 2))
    assert dmin == 6, dmin
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "nordstrom_robinson16.txt"
    out.write_text("".join(w + "\n" for w in words))


if __name__ == "__main__":
    main()
