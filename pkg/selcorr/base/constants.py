"""
This file holds the numerical constants that are applicable across
the selcorr library
"""

# Propensity clipping range
CLIP_LO = 0.001
CLIP_HI = 0.999

# Solves whose condition number exceeds this are degenerate
CONDITION_LIMIT = 1e12

# Kernel regression
BANDWIDTH_CONSTANT = 1.06
BANDWIDTH_FLOOR = 1e-3
KERNEL_DENOMINATOR_FLOOR = 1e-300

# Cross-fitting and tuning
DEFAULT_FOLDS = 5
DEFAULT_CV_FOLDS = 5
DEFAULT_N_TREES = 200
DEFAULT_MIN_LEAF_GRID = (1, 5, 10, 25)

# Simulation designs
DIM_X = 10
ADJACENT_CORRELATION = 0.5
CALIBRATION_DRAWS = 10 ** 6
CALIBRATION_TOLERANCE = 0.002
CALIBRATION_MAX_ITER = 200
LOG_OF_ZERO = -1e10

# Identification oracle
DET_TOLERANCE = 1e-8
# pi0 range: grid points per continuous axis, and the half width used
# for an axis with unbounded support
SUPPORT_GRID_POINTS = 32
SUPPORT_HALF_WIDTH = 8.0

# Monte Carlo
DEFAULT_REPS = 100
COVERAGE_Z = 1.96
