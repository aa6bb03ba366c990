"""
Exact constructible numbers
===========================

Every coordinate a compass and straightedge can reach is built from
rationals with + - * / and square roots.  ``Constructible`` keeps such
numbers exactly, so equality and sign are decided without rounding.
"""
from fractions import Fraction

from compass_grid import Constructible, approx, parse_expr, to_expr

root2 = Constructible(2).sqrt()
root8 = Constructible(8).sqrt()

# sqrt(2) * sqrt(8) is exactly 4, not 3.9999999999999996
print(root2 * root8 == 4)

# square roots are simplified inside the current field
print(Constructible(12).sqrt())

# nested radicals denest when they can: sqrt(3 + 2 sqrt 2) = 1 + sqrt 2
print(Constructible(3 + 2 * root2).sqrt() == 1 + root2)

# ...and stay nested when they cannot
x = (2 + Constructible(3).sqrt()).sqrt()
print("depth of sqrt(2 + sqrt 3):", x.depth)

# signs of very close numbers are exact; 665857/470832 is a Pell convergent of sqrt 2
print((root2 - Fraction(665857, 470832)).sign())

# decimals are produced on demand, correctly rounded
print(approx(root2, 30))

# the text form round-trips exactly
text = to_expr(x)
print(text, parse_expr(text) == x)
