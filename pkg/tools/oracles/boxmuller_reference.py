"""Golden values for the counter-based generator and its normal stream.

Re-implements the 64-bit mixer in plain Python integers (independent of
both kernel backends), then evaluates the Box-Muller transform of the
first words at 50 decimal digits.  The frozen literals in
tests/test_kernels.py come from running this script.

The seed-1234567 word triple doubles as an external cross-check: it
matches the published output of the reference splitmix64 mixer.
"""

import mpmath as mp

mp.mp.dps = 50

MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    z &= MASK
    z = ((z ^ (z >> 30)) * MIX1) & MASK
    z = ((z ^ (z >> 27)) * MIX2) & MASK
    return (z ^ (z >> 31)) & MASK


def word(seed: int, j: int) -> int:
    return mix64((seed + (j + 1) * GOLDEN) & MASK)


def normals(seed: int, n_pairs: int) -> list[float]:
    out: list[float] = []
    scale = mp.mpf(2) ** -53
    for k in range(n_pairs):
        u1 = mp.mpf((word(seed, 2 * k) >> 11) + 1) * scale
        u2 = mp.mpf(word(seed, 2 * k + 1) >> 11) * scale
        r = mp.sqrt(-2 * mp.log(u1))
        theta = 2 * mp.pi * u2
        out.append(float(r * mp.cos(theta)))
        out.append(float(r * mp.sin(theta)))
    return out


if __name__ == "__main__":
    print("# seed 1234567, words for counters 0..2 (reference mixer check)")
    print([word(1234567, j) for j in range(3)])
    print("# seed 12345, words for counters 0..3")
    print([word(12345, j) for j in range(4)])
    print("# seed 12345, first 8 normals (nearest doubles of exact transform)")
    print(normals(12345, 4))
