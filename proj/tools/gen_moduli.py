#!/usr/bin/env python3
"""Regenerate core/data/moduli.txt.

For every prime power q = p^m with m >= 2 and q <= 2^16, emits the primitive
monic polynomial of degree m whose low coefficients, read as the base-p
integer sum(c_i p^i), are smallest. Lines: "p m c_0 c_1 ... c_m".
"""
import sys

CAP = 1 << 16


def primes(limit):
    sieve = [True] * (limit + 1)
    sieve[0] = sieve[1] = False
    for i in range(2, int(limit ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i::i] = [False] * len(sieve[i * i::i])
    return [i for i, v in enumerate(sieve) if v]


def x_has_full_order(p, m, low):
    # low: coefficients c_0..c_{m-1} of x^m + sum c_i x^i
    q = p ** m
    cur = [0] * m
    cur[0] = 1
    for step in range(1, q):
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [(cur[i] - top * low[i]) % p for i in range(m)]
        if cur[0] == 1 and not any(cur[1:]):
            return step == q - 1
    return False


def main():
    out = []
    for p in primes(256):
        m = 2
        while p ** m <= CAP:
            for v in range(p ** m):
                low = [(v // p ** i) % p for i in range(m)]
                if low[0] == 0:
                    continue
                if x_has_full_order(p, m, low):
                    out.append(f"{p} {m} " + " ".join(map(str, low + [1])))
                    break
            m += 1
    sys.stdout.write("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
