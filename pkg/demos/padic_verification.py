"""Genus-2 Jacobian arithmetic in Mumford coordinates and the p-adic distance
of torsion classes to the embedded curve, checked against the explicit bound.

The curve is z^2 = t^5 + 1 (the odd-degree model of y^2 + y = x^5), embedded
in its Jacobian through the point at infinity.

Run:  python demos/padic_verification.py
"""

import thetadist as td

curve = td.HyperellipticCurve((1, 0, 0, 0, 0, 1))
print(curve, " disc(f) =", curve.disc_f)

# --- the rational torsion subgroup ----------------------------------------
D1 = td.make_divisor(curve, (0, 1), (1,))     # class of (0, 1) - infinity
W = td.make_divisor(curve, (1, 1), ())        # Weierstrass point (-1, 0)
print("\norder of [(0,1) - inf] :", td.order_of(curve, D1))
print("order of [(-1,0) - inf]:", td.order_of(curve, W))

print("\nmultiples of D1 (Mumford pairs u, v):")
for k in range(5):
    Dk = td.scalar_mul(curve, k, D1)
    print(f"  {k}*D1: u = {tuple(map(str, Dk.u))}, v = {tuple(map(str, Dk.v))}")

# --- reduction mod p and point counts -------------------------------------
for p in (3, 7):
    pts = td.enumerate_curve_points_mod(curve, p, 1)
    print(f"\n#C(F_{p}) = {len(pts)} (including the point at infinity)")
    print(f"#Jac(F_{p}) = {td.jacobian_order_mod_p(curve, p)}")
    D1p = td.reduce_mod(curve, D1, p, 1)
    print(f"order of D1 mod {p}: {td.order_of(curve, D1p)}")

# --- p-adic distance -------------------------------------------------------
two_D1 = td.scalar_mul(curve, 2, D1)
res = td.vp_distance(curve, two_D1, 3, j_max=4)
print("\nv_3(2*D1) =", res.v_p, "-> d_3 exponent", res.d_p_exponent())
res_inf = td.vp_distance(curve, D1, 3, j_max=4)
print("v_3(D1): the class is itself a curve point (distance 0):", res_inf.infinite)

# --- the verification table ------------------------------------------------
preset = td.bost_mestre_preset()
preset.data.theta_max = 1.06639277369136206671054075
mults = [td.scalar_mul(curve, k, D1) for k in range(1, 5)]
print("\nbound verification on the off-curve multiples of D1:")
for p, jmax in ((3, 4), (7, 4), (11, 4), (13, 3)):
    rows = td.verify_bound(curve, preset.data, mults, p, jmax)
    for r in rows:
        print(f"  p={p:>2}: order {r.order}, v_p = {r.v_p}, "
              f"log10(bound exponent) = {float(r.bound_exponent_log10):.2f}, "
              f"inequality holds: {r.inequality_holds}")

# inadmissible primes are refused outright
try:
    td.verify_bound(curve, preset.data, mults, 5, 2)
except td.HypothesisViolated as exc:
    print("\np = 5 refused:", exc)
