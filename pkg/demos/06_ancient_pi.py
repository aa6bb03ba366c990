"""
Two ancient values of pi
========================

The decoration of a First Dynasty game disk gives the ratio 66/21, which
reduces to 22/7.  The Rhind papyrus replaces a circle of diameter 9 by an
octagon cut from its square, whose area 63 is rounded to the square 64.
"""
from compass_grid.ancient_ratios import APPROXIMATIONS, PI_50, machin_pi

for name, make in APPROXIMATIONS.items():
    print("\n".join(make().describe()))
    print()

# the reference value is checked against Machin's formula
print(PI_50 == machin_pi(50))
