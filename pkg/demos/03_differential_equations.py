"""
Polynomial solutions of X' + AX = B
===================================

When A is singular with index k, the equation X' + AX = B has a partial
solution that is a plain polynomial in t of degree at most k; its
coefficients come out of the same minor-sum machinery as the inverses.
Substituting the polynomial back into the equation is an exact symbolic
check, and it comes out identically zero.
"""

from drazin import (
    CMatrix,
    index_of,
    ode_left_partial,
    ode_right_partial,
    residual_left,
    residual_right,
)

a = CMatrix([[1, -1, 1], ["1*i", "-1*i", "1*i"], [-1, 1, 2]])
b = CMatrix([[1, "1*i", 1], ["1*i", 0, 1], [1, "1*i", 0]])

print("A has index", index_of(a).k)
solution = ode_left_partial(a, b)
print("\nX(t) solving X' + AX = B:")
print(solution)
print("\ndegree:", solution.degree)

# the residual X'(t) + A X(t) - B collapses to the zero polynomial
residual = residual_left(a, b, solution)
print("residual is zero:", residual.is_zero)

# a single entry can be pulled out as a scalar polynomial
print("entry (1, 2):", solution.entry_poly(1, 2))

# nilpotent coefficient, right-hand version: X' + XA = B
nil = CMatrix([[0, 1], [0, 0]])
eye = CMatrix.identity(2)
right = ode_right_partial(nil, eye)
print("\nX(t) solving X' + XA = I for nilpotent A:")
print(right)
print("residual is zero:", residual_right(nil, eye, right).is_zero)

# evaluating the polynomial at a rational time point stays exact
print("\nX(1/2) =")
print(right.evaluate("1/2"))
