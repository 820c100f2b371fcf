"""Numerical thresholds shared across the library.

All algebra runs in double precision on polynomials of degree at most six,
which fixes the achievable accuracy of identities and the point at which a
quantity should be treated as zero.
"""

# Relative tolerance for algebraic identities (Study condition, reconstruction
# of products, basis conversions).
TAU_ALG = 1e-9

# Absolute threshold on the algebraic norm q q* below which a quaternion or a
# dual-quaternion primal part is considered non-invertible.
TAU_SING = 1e-12

# Relative tolerance for factorization reconstruction; looser than TAU_ALG
# because quadratic factors come out of an eigenvalue solve.
TAU_FACT = 1e-8

# Default tolerance for reporting interpolation residuals as satisfied.
TAU_FIT = 1e-9
