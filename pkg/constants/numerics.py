"""Numeric constants shared across the library.

Tolerances that users may tune live in ``configs``; the values here are fixed
parts of the algorithms.
"""

# Multistart margins for sup-norm probing, cycled over the random samples.
PROBE_MARGINS = (0.5, 0.1, 0.01, 0.001)

# Hill climbing: step 0.1 * (1/2)^k, stopped once below the floor.
HILL_INITIAL_STEP = 0.1
HILL_STEP_FLOOR = 1e-6

# Minimal boundary distance kept by the hill climbing projection.
INTERIOR_MARGIN = 1e-6

# Dichotomy classification threshold: s < 1 - DICHOTOMY_GAP is interior.
DICHOTOMY_GAP = 1e-6

# Degenerate (all-zero) Gaussian draws are retried this many times.
MAX_DEGENERATE_DRAWS = 100

# Below this separation difference quotients switch to block evaluation.
COINCIDENCE_TOL = 1e-12

# Relative growth between budget halves that marks a probe as not settled.
NONCONVERGENCE_GROWTH = 1.05

# Significant digits of floats written to CSV.
CSV_DIGITS = 17
