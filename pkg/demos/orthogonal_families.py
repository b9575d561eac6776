"""Gram matrices of the four orthogonal families under their moment functionals."""
from squareice.moments import cot_derivative_moments
from squareice.orthopoly import Family, family_polynomials, moment_functional

n = 4
for tag in (Family.MP, Family.CH, Family.CDH0, Family.CDH1):
    fam = family_polynomials(tag, n)
    ms = cot_derivative_moments(fam.point, 4 * n + 2)
    print(f"{tag.value}:")
    for j in range(n + 1):
        row = [moment_functional(ms, fam.polys[j], fam.polys[k], fam.sigma) for k in range(n + 1)]
        print("   ", "  ".join(str(v) for v in row))
    print("    p_2 =", fam.polys[2])
