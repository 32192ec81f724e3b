"""Detecting PPT (bound) entanglement with the indecomposable witnesses.

The probe family rho_eps is PPT for every eps and entangled for eps != 1.
A witness with b != c on the plane a+b+c = 2 catches part of the family:
Tr(rho_eps W[a,b,c]) = N (b eps^2 + (a-2) eps + c)/eps dips negative on an
interval of eps.  Decomposable witnesses (b = c) never go negative.

Run:  python demos/03_detecting_ppt_entanglement.py
"""

import numpy as np

from qutritwit import (
    MapParams,
    detection_value,
    detects_rho_family,
    indecomposability_certificate,
    is_ppt,
    rho_eps,
    trace_pair,
    witness_tilde_matrix,
)

print("The probe states are PPT everywhere:")
for eps in (0.1, 0.5, 1.0, 2.0, 10.0):
    state = rho_eps(eps)
    print(f"  eps = {eps:5.2f}: trace {state.trace():7.3f}, PPT = {is_ppt(state.matrix)}")

print("\nDetection scan, Tr(rho_eps W) over eps:")
grid = np.linspace(0.2, 2.4, 12)
witnesses = {
    "W[1,1,0] (Choi)": MapParams(1, 1, 0),
    "W[1,0,1] (dual Choi)": MapParams(1, 0, 1),
    "W[0,1,1] (reduction)": MapParams(0, 1, 1),
}
header = "  eps:    " + "".join(f"{e:8.2f}" for e in grid)
print(header)
for label, p in witnesses.items():
    row = "".join(f"{detection_value(p, e):8.3f}" for e in grid)
    print(f"  {label:22s}" + row)

print("\nDetection intervals (eps range with negative expectation):")
for label, p in witnesses.items():
    print(f"  {label:22s} -> {detects_rho_family(p)}")

print("\nConstructive indecomposability certificates (eps, value):")
for label, p in witnesses.items():
    print(f"  {label:22s} -> {indecomposability_certificate(p)}")

print("\nImproper-family witnesses are decomposable, and the probe family")
print("never sees them below zero; the pairing equals (eps-1)^2/(3 eps):")
p = MapParams(1, 0, 1)
for eps in (0.5, 1.0, 3.0):
    value = trace_pair(rho_eps(eps).matrix, witness_tilde_matrix(p).matrix).real
    print(f"  eps = {eps:4.1f}: value = {value:9.6f}   closed form = {(eps-1)**2/(3*eps):9.6f}")
