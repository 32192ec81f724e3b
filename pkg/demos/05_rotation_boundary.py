"""The rotation-group parameterization of the positivity boundary.

Proper rotations T(alpha) embedded as diag(T, -I_6) over the Gell-Mann basis
generate exactly the circulant family along the ellipse bc = (1-a)^2;
reflections generate the improper family on the same ellipse.  This demo
sweeps the angle, verifies the identities, and prints the figure geometry
(ellipse, decomposable line, special points) in the (b, c) plane.

Run:  python demos/05_rotation_boundary.py
"""

import numpy as np

from qutritwit import (
    apply_phi,
    improper_coeffs,
    improper_rotation,
    phi_from_rotation,
    rotation_block,
    so2_coeffs,
    so2_rotation,
)

rng = np.random.default_rng(3)
X = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))

print("angle sweep: coefficients, identities, and rotation-vs-closed-form gap")
print(f"{'alpha':>8} {'a':>8} {'b':>8} {'c':>8} {'a+b+c':>8} {'bc-(1-a)^2':>12} {'gap':>10}")
for alpha in np.linspace(0, 2 * np.pi, 12, endpoint=False):
    p = so2_coeffs(alpha)
    a, b, c = p.asfloats()
    built = phi_from_rotation(rotation_block(so2_rotation(alpha)))
    gap = np.linalg.norm(built(X) - apply_phi(p, X))
    print(f"{alpha:8.3f} {a:8.4f} {b:8.4f} {c:8.4f} {a+b+c:8.4f} {b*c-(1-a)**2:12.2e} {gap:10.2e}")

print("\nlandmarks on the proper-rotation circle:")
for alpha, note in [(np.pi, "reduction map"), (0.0, "decomposable boundary point"),
                    (np.pi / 3, "Choi map (1,0,1)"), (5 * np.pi / 3, "Choi map (1,1,0)")]:
    print(f"  alpha = {alpha:6.3f}: (a,b,c) = {tuple(round(x, 6) for x in so2_coeffs(alpha).asfloats())}  <- {note}")

print("\nreflections give the improper family on the same ellipse:")
for alpha in (0.0, np.pi / 2, np.pi):
    p = improper_coeffs(alpha)
    built = phi_from_rotation(rotation_block(improper_rotation(alpha)))
    a, b, c = p.asfloats()
    print(f"  alpha = {alpha:6.3f}: (a,b,c) = ({a:.4f}, {b:.4f}, {c:.4f}), bc - (1-a)^2 = {b*c-(1-a)**2:+.1e}")

print("\nfigure geometry in the (b, c) plane:")
print("  ellipse: (9/4)(b+c - 4/3)^2 + (3/4)(b-c)^2 = 1, sampled at 6 points:")
for t in np.linspace(0, 2 * np.pi, 6, endpoint=False):
    x = 4 / 3 + (2 / 3) * np.cos(t)
    y = (2 / np.sqrt(3)) * np.sin(t)
    print(f"    (b, c) = ({(x+y)/2:7.4f}, {(x-y)/2:7.4f})")
print("  decomposable line: b = c from (0,0) to (1,1)")
print("  special points: (1,0) and (0,1) Choi pair, (1,1) reduction,")
print("                  (1/3,1/3) decomposable boundary point, (0,0) completely positive corner")
