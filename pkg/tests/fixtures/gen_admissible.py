"""Regenerate admissible_1000.txt by brute force.

A degree n >= 5 qualifies when n or n - 1 equals q**m for a prime power
q = p**k with every prime divisor of m dividing q - 1, q = 3 (mod 4),
and m = 2 (mod 4).  This script shares no code with the package; it is
the independent cross-check the tests compare against.

Usage: python3 gen_admissible.py > admissible_1000.txt
"""

from sympy import factorint, isprime


def prime_powers_upto(limit):
    out = {}
    for q in range(2, limit + 1):
        f = factorint(q)
        if len(f) == 1:
            out[q] = next(iter(f))
    return out


def qualifying(v, prime_power_map):
    hits = []
    for q, p in prime_power_map.items():
        m = 0
        t = v
        while t % q == 0:
            t //= q
            m += 1
        if t != 1 or q**m != v:
            continue
        if q % 4 != 3 or m % 4 != 2:
            continue
        if all((q - 1) % r == 0 for r in factorint(m)):
            hits.append((q, m))
    return hits


def main():
    limit = 1000
    pps = prime_powers_upto(limit)
    for n in range(5, limit + 1):
        for v, case in ((n, "a"), (n - 1, "b")):
            hits = qualifying(v, pps)
            if hits:
                q, m = max(hits, key=lambda qm: qm[0])
                print(f"{n} {case} q={q} m={m}")
                break


if __name__ == "__main__":
    main()
