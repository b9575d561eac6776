"""Refined 3-enumeration: B coefficients, the correlator and the integer rows."""
from squareice.refined3 import B_ROUTES, assemble, b_coefficients

for m in range(4):
    rows = {route: b_coefficients(m, route).B for route in B_ROUTES}
    same = len(set(rows.values())) == 1
    print(f"m={m}  B={[str(b) for b in rows['closed']]}  routes agree: {same}")

print()
for N in range(1, 13):
    t = assemble(N)
    print(f"N={N:2d}  {list(t.A)}")
