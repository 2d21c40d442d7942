"""Golden values for the covariance closed form and the Pearson coefficient.

Evaluates cosh 2r, sinh 2r and tanh 2r at 50 decimal digits and prints
the nearest doubles.  The frozen literals in tests/test_quantum_gaussian.py
and tests/test_acceptance.py come from running this script.
"""

import mpmath as mp

mp.mp.dps = 50

R_GRID = (0.1, 0.3, 0.5, 1.0, 2.0, 3.0)

if __name__ == "__main__":
    print("# r: (cosh 2r, sinh 2r, tanh 2r) as nearest doubles")
    for r in R_GRID:
        rr = mp.mpf(r)
        print(
            f"{r!r}: ({float(mp.cosh(2 * rr))!r}, "
            f"{float(mp.sinh(2 * rr))!r}, {float(mp.tanh(2 * rr))!r}),"
        )
