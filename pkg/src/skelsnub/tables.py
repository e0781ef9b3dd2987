"""Embedded reference tables used by the reproduce command.

Section 7 covers the nine genuine snubs built from an interior seed point:
two achievable vertex symbols each (the realized one depends on the seed),
the full f-vector by type, and the Euler characteristic.  Section 8 covers
the nine degenerate snubs from an s0-fixed vertex: the representative
vertex, the expected symbol, total vertex and edge counts, and the two face
orbit sizes as a multiset (the published slot order is not consistent, so
orbit sizes are compared unordered).
"""

import math

R2 = math.sqrt(2.0)
R5 = math.sqrt(5.0)

# name -> (alternative symbols, (f0, f1^0, f1^1, f1^2, f2^0, f2^1, f2^2), chi)
SECTION7_ROWS = {
    "{4,3}_3": (
        ("4_s.3.3.3.3", "4_c.3.3.3.3"),
        (24, 12, 24, 24, 24, 6, 8),
        2,
    ),
    "{6,3}_4": (
        ("6_s.3.3.3.3", "6_c.3.3.3.3"),
        (24, 12, 24, 24, 24, 4, 8),
        0,
    ),
    "{6,4}_3": (
        ("6_s.3.3.4_c.3", "6_c.3.3.4_c.3"),
        (48, 24, 48, 48, 48, 8, 12),
        -4,
    ),
    "{10,5}_3": (
        ("10_s.3.3.5_c.3", "10_c.3.3.5_c.3"),
        (120, 60, 120, 120, 120, 12, 24),
        -24,
    ),
    "{10,3}_5": (
        ("10_s.3.3.3.3", "10_c.3.3.3.3"),
        (120, 60, 120, 120, 120, 12, 40),
        -8,
    ),
    "{6,5/2}": (
        ("6_s.3.3.5/2.3", "6_c.3.3.5/2.3"),
        (120, 60, 120, 120, 120, 20, 24),
        -16,
    ),
    "{6,5}": (
        ("6_s.3.3.5_c.3", "6_c.3.3.5_c.3"),
        (120, 60, 120, 120, 120, 20, 24),
        -16,
    ),
    "{10/3,5/2}": (
        ("(10/3)_s.3.3.5/2.3", "10/3.3.3.5/2.3"),
        (120, 60, 120, 120, 120, 12, 24),
        -24,
    ),
    "{10/3,3}": (
        ("(10/3)_s.3.3.3.3", "10/3.3.3.3.3"),
        (120, 60, 120, 120, 120, 12, 40),
        -8,
    ),
}

# name -> (vertex, symbol, f0, f1, {face orbit sizes})
SECTION8_ROWS = {
    "{4,3}_3": ((0.5, 0.3, R2 / 10), "4_s.3.4_s.3", 12, 24, (8, 6)),
    "{6,3}_4": ((0.5, 0.0, R2 / 10), "6_s.3.6_s.3", 12, 24, (4, 8)),
    "{6,4}_3": ((0.5, 0.1, -0.5), "6_s.4_c.6_s.4_c", 24, 48, (8, 12)),
    "{10,5}_3": (((1 + R5) / 2, 0.3, 0.0), "10_s.5_c.10_s.5_c", 60, 120, (12, 24)),
    "{10,3}_5": ((1.0, 0.0, 0.1), "10_s.3.10_s.3", 60, 120, (12, 40)),
    "{6,5/2}": ((1.0, 0.1, 0.0), "6_s.5/2.6_s.5/2", 60, 120, (20, 24)),
    "{6,5}": ((1.0, 0.0, 0.1), "6_s.5_c.6_s.5_c", 60, 120, (20, 24)),
    "{10/3,5/2}": ((1.0, 0.0, 0.1), "(10/3)_s.5/2.(10/3)_s.5/2", 60, 120, (12, 24)),
    "{10/3,3}": ((1.0, 0.1, 0.0), "(10/3)_s.3.(10/3)_s.3", 60, 120, (12, 40)),
}
