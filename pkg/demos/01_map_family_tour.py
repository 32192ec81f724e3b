"""Tour of the two-parameter map family: special members, classification,
duality, and the doubly stochastic matrices behind the diagonal action.

Run:  python demos/01_map_family_tour.py
"""

import numpy as np

from qutritwit import (
    MapParams,
    apply_phi,
    classify,
    dual,
    n_abc,
    on_ellipse,
    slice_params,
    stochastic_matrix,
    trace_pair,
)

np.set_printoptions(precision=4, suppress=True)

print("=" * 70)
print("Special members of the family Phi[a,b,c] = N (D[a,b,c] - id)")
print("=" * 70)

X = np.array([[1, 2j, 0], [-2j, 3, 1], [0, 1, 5]], dtype=complex)

reduction = MapParams(0, 1, 1)
print("\nPhi[0,1,1] is the reduction map (Tr X I - X)/2:")
print(apply_phi(reduction, X))
print("direct formula:")
print((np.trace(X) * np.eye(3) - X) / 2)

choi = MapParams(1, 1, 0)
print("\nPhi[1,1,0] is the Choi map; acting on |1><1| it gives diag(1/2, 0, 1/2):")
E11 = np.diag([1.0, 0.0, 0.0]).astype(complex)
print(apply_phi(choi, E11))

print("\nNormalizations:", [float(n_abc(p)) for p in (reduction, choi, MapParams(2, 0, 0))])

print("\n" + "=" * 70)
print("Classification on and off the plane a+b+c = 2")
print("=" * 70)
for abc in [(1, 1, 0), (0, 1, 1), (2, 0, 0), (4 / 3, 1 / 3, 1 / 3), (0.5, 0.1, 0.1), (0.9, 0.5, 0.7)]:
    p = MapParams(*abc)
    cls = classify(p)
    tags = [cls.positivity.value, cls.decomposability.value]
    if p.on_slice():
        tags.append("ellipse" if on_ellipse(p) else "interior")
    print(f"  ({abc[0]:.3g}, {abc[1]:.3g}, {abc[2]:.3g}): " + ", ".join(tags))

print("\n" + "=" * 70)
print("Duality: Tr[X Phi(Y)] = Tr[Phi#(X) Y] with Phi#[a,b,c] = Phi[a,c,b]")
print("=" * 70)
rng = np.random.default_rng(0)
p = slice_params(0.9, 0.4)
Y = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
lhs = trace_pair(X, apply_phi(p, Y))
rhs = trace_pair(apply_phi(dual(p), X), Y)
print(f"  params {p.asfloats()},  dual {dual(p).asfloats()}")
print(f"  |lhs - rhs| = {abs(lhs - rhs):.2e}")
print("  on the plane, the map is decomposable exactly when it is self-dual (b = c)")

print("\n" + "=" * 70)
print("Doubly stochastic matrices characterizing the diagonal action")
print("=" * 70)
print("\ncirculant (reduction map):")
print(stochastic_matrix(MapParams(0, 1, 1), "circulant"))
print("\nnon-circulant (improper family at (1,0,1)):")
print(stochastic_matrix(MapParams(1, 0, 1), "improper"))
