"""Tangent balls, levels, and the separating function, all in exact rationals.

Run: python demos/01_tangent_geometry.py
"""

from fractions import Fraction as Fr

from niemytzki import (
    Point,
    in_tangent_ball,
    separating_f,
    t_level,
)
from niemytzki.geometry import tangent_gauge, tangent_sphere_point

a = Point.boundary(0)  # the origin of the boundary line L_2

print("The tangent ball B~(a, 1) at a = (0,0): the open unit ball tangent to")
print("the boundary at a, centered at (0,1), together with a itself.\n")

for coords in [(0, 1), (Fr(1, 2), Fr(1, 2)), (1, 1), (Fr(3, 2), 1), (0, 2)]:
    x = Point.of(*coords)
    inside = in_tangent_ball(x, a, 1)
    level = t_level(x, a, 1)
    print(f"  x = {x.to_json()}:  inside = {inside},  level t(x) = {level}")

print(
    "\nThe level t(x) = (sum (x_i - a_i)^2 + x_n^2) / (2 eps x_n) is the unique"
    "\nt with x on the bounding sphere of B~(a, t*eps): note (1,1) has t = 1 —"
    "\nit sits exactly on the sphere and is excluded (open sets are strict)."
)

print("\nThe separating function f: 0 at a, t(x) inside, 1 outside:")
for coords in [(0, 0), (0, 1), (0, Fr(1, 2)), (3, 3)]:
    x = Point.of(*coords)
    print(f"  f({x.to_json()}) = {separating_f(x, a, 1)}")

print(
    "\nSublevel identity (what makes f continuous): f(x) < s iff x lies in the"
    "\ntangent ball shrunk to parameter s:"
)
x = Point.of(0, Fr(1, 2))
for s in (Fr(1, 8), Fr(1, 4), Fr(1, 2), Fr(3, 4)):
    print(
        f"  s = {s}:  f(x) < s is {separating_f(x, a, 1) < s},  "
        f"x in B~(a, s) is {in_tangent_ball(x, a, s)}"
    )

print("\nRational points on the bounding sphere come from the parameterization")
print("x = a + (2 eps v_n / |v|^2) v; the gauge equality is then exact:")
for v in [(1, 1), (3, 2), (-5, 1)]:
    x = tangent_sphere_point(a, 1, v)
    print(
        f"  v = {v}: x = {x.to_json()}, gauge = {tangent_gauge(x, a)}"
        f" = 2*eps*x_n = {2 * x.coords[-1]}"
    )
