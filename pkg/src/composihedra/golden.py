"""Reference values for verification runs."""
from fractions import Fraction

# a_0 .. a_9; a_9 = 12235
VERTEX_SEQUENCE = (0, 1, 2, 5, 15, 51, 188, 731, 2950, 12235)

# binary painted trees with 3 and 4 leaves
BINARY_PAINTED_COUNTS = {3: 6, 4: 21}

CK3_POINTS = frozenset({(1, 2), (2, 1), (0, 2), (2, 0), (0, 0)})

# Loday's coordinates for the five 4-leaf binary trees
K4_LODAY_POINTS = frozenset({(1, 2, 3), (2, 1, 3), (3, 1, 2), (3, 2, 1), (1, 4, 1)})

# one row per 4-leaf shape, from fully painted down; first entry is the Loday point
CK4_TABLE = (
    ((1, 2, 3), (0, 2, 3), (0, 0, 3), (0, 0, 0)),
    ((2, 1, 3), (2, 0, 3), (0, 0, 3), (0, 0, 0)),
    ((3, 1, 2), (3, 0, 2), (3, 0, 0), (0, 0, 0)),
    ((3, 2, 1), (3, 2, 0), (3, 0, 0), (0, 0, 0)),
    ((1, 4, 1), (0, 4, 1), (1, 4, 0), (0, 4, 0), (0, 0, 0)),
)

CK4_POLYMAKE = """\
POINTS
1 1 2 3
1 0 2 3
1 0 0 3
1 0 0 0
1 2 1 3
1 2 0 3
1 3 1 2
1 3 0 2
1 3 0 0
1 3 2 1
1 3 2 0
1 1 4 1
1 0 4 1
1 1 4 0
1 0 4 0
"""

_h = Fraction(1, 2)
# range-quotient images of the 4-leaf painted trees at q = 1/2
K5_RANGE_QUOTIENT_TABLE = (
    ((3, 4, 3), (_h, 4, 3), (_h, 1, 3), (_h, 1, Fraction(3, 2))),
    ((3, 4, 3), (3, _h, 3), (1, _h, 3), (1, _h, Fraction(3, 2))),
    ((3, 4, 3), (3, _h, 3), (3, _h, 1), (Fraction(3, 2), _h, 1)),
    ((3, 4, 3), (3, 4, _h), (3, 1, _h), (Fraction(3, 2), 1, _h)),
    ((3, 4, 3), (_h, 4, 3), (3, 4, _h), (_h, 4, _h), (_h, 2, _h)),
)
K5_VERTEX_COUNT = 14

CK4_F_VECTOR = (15, 23, 10)
K5_F_VECTOR = (14, 21, 9)
