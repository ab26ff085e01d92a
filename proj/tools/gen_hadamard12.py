#!/usr/bin/env python3
"""Writes data/hadamard12.txt: a normalized Paley (type I) Hadamard matrix of order 12.

H = I + S with S = [[0, 1^T], [-1, Q]], Q the Jacobsthal matrix of F_11;
rows and columns are then negated so that the first row and column are +1.
"""
import sys
from pathlib import Path

P = 11


def chi(a):
    a %= P
    if a == 0:
        return 0
    return 1 if pow(a, (P - 1) // 2, P) == 1 else -1


def main():
    n = P + 1
    s = [[0] * n for _ in range(n)]
    for j in range(1, n):
        s[0][j] = 1
        s[j][0] = -1
    for i in range(P):
        for j in range(P):
            s[i + 1][j + 1] = chi(j - i)
    h = [[s[i][j] + (1 if i == j else 0) for j in range(n)] for i in range(n)]
    for j in range(n):
        if h[0][j] < 0:
            for i in range(n):
                h[i][j] = -h[i][j]
    for i in range(n):
        if h[i][0] < 0:
            h[i] = [-x for x in h[i]]
    for i in range(n):
        for k in range(n):
            dot = sum(h[i][j] * h[k][j] for j in range(n))
            assert dot == (n if i == k else 0)
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "hadamard12.txt"
    out.write_text("".join(" ".join("+" if x > 0 else "-" for x in row) + "\n" for row in h))


if __name__ == "__main__":
    main()
