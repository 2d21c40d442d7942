"""Golden values for the receiver moment chain, term by term.

Re-evaluates the documented photon-count formulas at 50 decimal digits,
independently of the package implementation, at one pinned parameter
set.  Inputs are taken as the exact doubles the tests will pass, so the
only difference from the package is arithmetic precision.  The frozen
literals in tests/test_receiver_model.py come from running this script.

Formula chain (signal port detected against the retained idler):

  bracket_h1 = G_s eta (N_s + 1)
             + G_s eta n_as (G_as - 1)/G_as
             + G_s (n_e + 1)(1 - eta)/G_as
             + (G_ds - 1) n_ds
  bracket_h0 = G_ds (n_e + 1) + n_ds G_ds (1 - 1/G_ds)
  idler      = G_i N_i / 2 + G_i (n_add_i + 1)/2
  mean_h1_pm = N_v + bracket_h1/2 + idler +- sqrt(G_s G_i eta) C / 2
  mean_h0    = N_v + bracket_h0/2 + idler            (both ports)
  inten_h1   = 2 N_v + bracket_h1
  inten_h0   = 2 N_v + bracket_h0 + G_i N_i / 2 + (n_add_i + 1)/2
  variance   = m+ (m+ + 1) + m- (m- + 1) - (inten - N_i)^2 / 2
  snr        = M * 4 (|d1| - |d0|)^2 / (sqrt(v0) + sqrt(v1))^2
"""

import mpmath as mp

mp.mp.dps = 50

# Pinned inputs (exact doubles; mirror tests/test_receiver_model.py).
G_DS = mp.mpf(6.0)
G_AS = mp.mpf(8.0)
G_S = G_DS * G_AS
G_DI = mp.mpf(6.0)
G_AI = mp.mpf(8.0)
G_I = G_DI * G_AI
N_AS = mp.mpf(2.0)
N_DS = mp.mpf(30.0)
N_E = mp.mpf(40.0)
N_ADD_I = mp.mpf(2.2)
N_V = mp.mpf(0.5)
N_S = mp.mpf(0.1)
N_I = mp.mpf(0.1)
ETA = mp.mpf(0.05)
M_MODES = 7
CROSS = mp.sqrt(N_S * (N_S + 1))


def main() -> None:
    bracket_h1 = (
        G_S * ETA * (N_S + 1)
        + G_S * ETA * N_AS * (G_AS - 1) / G_AS
        + G_S * (N_E + 1) * (1 - ETA) / G_AS
        + (G_DS - 1) * N_DS
    )
    bracket_h0 = G_DS * (N_E + 1) + N_DS * G_DS * (1 - 1 / G_DS)
    idler = G_I * N_I / 2 + G_I * (N_ADD_I + 1) / 2
    delta = mp.sqrt(G_S * G_I * ETA) * CROSS / 2
    mean_p_h1 = N_V + bracket_h1 / 2 + idler + delta
    mean_m_h1 = N_V + bracket_h1 / 2 + idler - delta
    mean_h0 = N_V + bracket_h0 / 2 + idler
    inten_h1 = 2 * N_V + bracket_h1
    inten_h0 = 2 * N_V + bracket_h0 + G_I * N_I / 2 + (N_ADD_I + 1) / 2

    def variance(mp_, mm_, inten):
        return mp_ * (mp_ + 1) + mm_ * (mm_ + 1) - (inten - N_I) ** 2 / 2

    v1 = variance(mean_p_h1, mean_m_h1, inten_h1)
    v0 = variance(mean_h0, mean_h0, inten_h0)
    d1 = abs(mean_p_h1 - mean_m_h1)
    d0 = mp.mpf(0)
    snr = M_MODES * (4 * (d1 - d0) ** 2 / (mp.sqrt(v0) + mp.sqrt(v1)) ** 2)

    for name, val in (
        ("bracket_h1", bracket_h1),
        ("bracket_h0", bracket_h0),
        ("idler", idler),
        ("mean_plus_h1", mean_p_h1),
        ("mean_minus_h1", mean_m_h1),
        ("mean_h0", mean_h0),
        ("intensity_h1", inten_h1),
        ("intensity_h0", inten_h0),
        ("var_h1", v1),
        ("var_h0", v0),
        ("snr_m7", snr),
    ):
        print(f"{name} = {float(val)!r}")


if __name__ == "__main__":
    main()
