"""Performance model for a quantum two-mode-squeezing (QTMS) radar.

The package covers the full analytic chain of such a radar and the tooling
around it:

- ``quantum_gaussian``: two-mode squeezed vacuum covariance structure and
  its symplectic factorization.
- ``receiver_model``: photon-counting receiver moments under the
  target-absent/target-present hypotheses and the quantum SNR.
- ``detection``: error probability, effective correlation, Marcum Q and
  ROC curves.
- ``radar_range``: the fourth-root range equation and its inverse.
- ``scenarios``: hardware presets, unit conversions and the scenario file
  format.
- ``oracle_mc``: seeded Monte Carlo validators for the analytic formulas.
- ``cli_report``: the ``qtms-radar`` command line front end.
"""

from __future__ import annotations

__version__ = "0.1.0"

__all__ = [
    "quantum_gaussian",
    "receiver_model",
    "detection",
    "radar_range",
    "scenarios",
    "oracle_mc",
    "cli_report",
]
