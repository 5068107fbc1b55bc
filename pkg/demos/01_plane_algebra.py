"""Tour of the plane algebra: quarter-turn, two products, angles, similarities."""

import math
import random

from sympgeo import (
    Vec2,
    directed_angle,
    dot,
    from_polar,
    identity_residuals,
    norm,
    similarity,
    similarity_div,
    symp,
    tilde,
    to_polar,
)

## The quarter-turn operator and the two products

a = Vec2(3.0, -2.0)
b = Vec2(4.0, 5.0)

print("a          =", a)
print("tilde(a)   =", tilde(a), "(rotated 90 degrees counterclockwise)")
print("dot(a, b)  =", dot(a, b))
print("symp(a, b) =", symp(a, b), "(signed parallelogram area)")

# symp is dot against the rotated first factor, and a vector never has
# area against itself.
assert symp(a, b) == dot(tilde(a), b)
assert symp(a, a) == 0.0
assert tilde(tilde(a)) == -a

## Directed angles and the polar form

u = Vec2(1.0, 0.0)
v = Vec2(1.0, 1.0)
print("\nangle from +x to (1,1):", directed_angle(u, v), "rad",
      "(expect pi/4 =", math.pi / 4.0, ")")

p = to_polar(Vec2(0.0, 2.0))
print("polar form of (0, 2):  magnitude", p.magnitude, "angle", p.angle)
back = from_polar(p)
print("round trip:           ", back)

## Similarities multiply like complex numbers

z = Vec2(2.0, 1.0)
w_scale, w_rot = 3.0, 2.0  # acts like multiplying by 3 + 2i
prod = similarity(z, w_scale, w_rot)
quot = similarity_div(prod, w_scale, w_rot)
print("\n(2 + 1i) * (3 + 2i) =", prod)
print("divide back:          ", quot)
assert quot == z

## Residuals of the five product identities over random inputs

rng = random.Random(20240817)


def rand_vec():
    return Vec2(rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0))


worst = {}
for _ in range(2000):
    va, vb, vc, vd = rand_vec(), rand_vec(), rand_vec(), rand_vec()
    for name, mag in identity_residuals(va, vb, vc, vd).magnitudes().items():
        if mag > worst.get(name, 0.0):
            worst[name] = mag

print("\nworst identity residuals over 2000 random quadruples in [-10, 10]^2:")
for name, mag in worst.items():
    print(f"  {name:18s} {mag:.3e}")

zero = identity_residuals(Vec2(0, 0), Vec2(0, 0), Vec2(0, 0), Vec2(0, 0))
assert all(m == 0.0 for m in zero.magnitudes().values())
print("\nall residuals vanish exactly on the zero quadruple")
