"""Pure-Python kernel backend, vectorized with numpy.

Implements the same contract as the compiled backend: a SplitMix64
counter-based generator (every 64-bit word is a pure function of seed
and counter, so any subsequence can be generated independently), a
Box-Muller normal stream on top of it, and the Marcum exceedance
counter.  Long requests stream through fixed-size chunks to bound
memory.
"""

from __future__ import annotations

import numpy as np

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_TWO_NEG53 = float.fromhex("0x1.0p-53")
_CHUNK_PAIRS = 1 << 20


def backend_name() -> str:
    return "python"


def _mix64(z: np.ndarray) -> np.ndarray:
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def u64_stream(seed: int, start: int, count: int) -> np.ndarray:
    """64-bit words for counters start .. start+count-1.

    Word j is mix64(seed + (j+1) * golden), all arithmetic mod 2^64.
    """
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    j = np.arange(int(start) + 1, int(start) + int(count) + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(int(seed) & 0xFFFFFFFFFFFFFFFF) + j * _GOLDEN
        return _mix64(z)


def _pairs_chunk(seed: int, start_pair: int, n_pairs: int) -> np.ndarray:
    x = u64_stream(seed, 2 * int(start_pair), 2 * int(n_pairs))
    # (x >> 11) + 1 <= 2^53: the conversion to float64 is exact, so u1 lands
    # in (0, 1] and u2 in [0, 1) with no rounding.
    u1 = ((x[0::2] >> np.uint64(11)) + np.uint64(1)).astype(np.float64) * _TWO_NEG53
    u2 = (x[1::2] >> np.uint64(11)).astype(np.float64) * _TWO_NEG53
    r = np.sqrt(-2.0 * np.log(u1))
    theta = (2.0 * np.pi) * u2
    out = np.empty(2 * int(n_pairs), dtype=np.float64)
    out[0::2] = r * np.cos(theta)
    out[1::2] = r * np.sin(theta)
    return out


def normal_pairs(seed: int, start_pair: int, n_pairs: int) -> np.ndarray:
    """2*n_pairs standard normals; pair k consumes counters 2k and 2k+1."""
    if n_pairs < 0:
        raise ValueError(f"n_pairs must be >= 0, got {n_pairs}")
    n_pairs = int(n_pairs)
    if n_pairs <= _CHUNK_PAIRS:
        return _pairs_chunk(seed, start_pair, n_pairs)
    out = np.empty(2 * n_pairs, dtype=np.float64)
    done = 0
    while done < n_pairs:
        n = min(_CHUNK_PAIRS, n_pairs - done)
        out[2 * done : 2 * (done + n)] = _pairs_chunk(seed, int(start_pair) + done, n)
        done += n
    return out


def exceed_count(seed: int, start_pair: int, n_trials: int, a: float, b: float) -> int:
    """Trials with (a + z0)^2 + z1^2 >= b^2; trial k uses pair start_pair+k."""
    if n_trials < 0:
        raise ValueError(f"n_trials must be >= 0, got {n_trials}")
    n_trials = int(n_trials)
    b2 = float(b) * float(b)
    total = 0
    done = 0
    while done < n_trials:
        n = min(_CHUNK_PAIRS, n_trials - done)
        z = _pairs_chunk(seed, int(start_pair) + done, n)
        s = float(a) + z[0::2]
        total += int(np.count_nonzero(s * s + z[1::2] * z[1::2] >= b2))
        done += n
    return total
