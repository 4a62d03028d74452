"""
Restricted matrix equations by Cramer-style formulas
====================================================

AX = B has no solution for singular A in general, but restricted to the
range of A^k it has exactly one, and every entry of that solution is a
ratio of two minor sums: no inverse is ever formed.  The same goes for
XA = B and the two-sided AXB = D.
"""

from drazin import CMatrix, solve_ax, solve_axb, solve_xa

a = CMatrix([[2, 0, 0], ["-1*i", "1*i", "1*i"], ["-1*i", "-1*i", "-1*i"]])
b = CMatrix([[1, -1, 1], ["1*i", "-1*i", "1*i"], [-1, 1, 2]])
d = CMatrix([[1, "1*i", 1], ["1*i", 0, 1], [1, "1*i", 0]])

# one-sided: the solution is (Drazin inverse of B) D, entry by entry
report = solve_ax(b, d)
print("solution of B X = D:")
print(report.x)
print("denominator of every entry:", report.denominator)
print("restriction satisfied:", report.restriction_satisfied)

# the flag above is honest: this right-hand side leaves the range of B,
# so substituting back does not reproduce D
print("\nB @ X == D:", b @ report.x == d)

# build a right-hand side inside the range and the equation holds exactly
k = report.profile_a.k
inside = (b ** k) @ d
good = solve_ax(b, inside)
print("with D' = B^k D: restriction", good.restriction_satisfied,
      " and B @ X' == D':", b @ good.x == inside)

# two-sided: both reduction orders are evaluated and compared internally
two = solve_axb(a, b, d)
print("\nsolution of A X B = D:")
print(two.x)
print("index profiles:", two.profile_a, two.profile_b)
print("denominator (product of two minor sums):", two.denominator)

# the intermediate vectors are exposed for inspection
print("\nintermediate columns from the B-side reduction:")
for column in two.db_columns:
    print("  ", [str(v) for v in column])

# mirrored equation X A = B works on rows instead of columns
rows = solve_xa(b, d)
print("\nsolution of X B = D:")
print(rows.x)
