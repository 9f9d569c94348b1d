"""Numeric homomorphism check for the rotation-branch 5x5 representation.

Evaluates the derived 5x5 matrix at two numeric group elements, composes
the 4x4 transformations, and checks rep(M1 . M2) = rep(M1) . rep(M2).
Also shows the check FAILS if the two middle-term signs in rows 4/5 are
flipped (the alternative reading of the table).
"""
import time
from fractions import Fraction

from affeq.algebra import Polynomial, RationalExpression, NonvanishingSet
from affeq.parser import parse_expression, var
from affeq.equivalence import BranchState

t0 = time.time()

st = BranchState(order=4)
for key, v in (((1, 0, 0), "c[1]"), ((0, 1, 0), "c[2]"), ((0, 0, 1), "c[3]")):
    st.solve_fg(key, var(v))
for name, val in (("F[2,0,0]", 1), ("F[1,1,0]", 0), ("F[1,0,1]", 0),
                  ("F[0,2,0]", 1), ("F[0,1,1]", 0), ("F[0,0,2]", 0)):
    st.assign(var(name), val)
st.certify(parse_expression("a[1,1]^2 + a[2,1]^2"))
st.certify(parse_expression("a[3,3]"))
st.solve_fg((2, 0, 0), var("d"))
st.assign(var("a[1,2]"), parse_expression("-a[2,1]"))
st.assign(var("a[2,2]"), parse_expression("a[1,1]"))
st.solve_fg_system([(var("a[1,3]"), (1, 0, 1)), (var("a[2,3]"), (0, 1, 1))])
st.check_stabilize(2)
for name in ("F[1,0,2]", "F[0,1,2]", "F[0,0,3]", "F[2,1,0]", "F[1,2,0]"):
    st.assign(var(name), 0)
labels5 = [(2, 0, 1), (1, 1, 1), (0, 2, 1), (3, 0, 0), (0, 3, 0)]
rep5 = st.derive_representation(
    3, labels5, normalize_with=[(var("b[1]"), (2, 1, 0)), (var("b[2]"), (1, 2, 0))])

GROUP = [var(n) for n in ("a[1,1]", "a[2,1]", "a[3,1]", "a[3,2]", "a[3,3]")]


def ev(expr, vals):
    mapping = {v: Polynomial.constant(c) for v, c in vals.items()}
    num = expr.num.substitute(mapping)
    den = expr.den_product().substitute(mapping)
    return num.constant_value() / den.constant_value()


def numeric_matrix(rows, vals):
    return [[ev(RationalExpression.coerce(e), vals) for e in row] for row in rows]


def matmul(A, B):
    n, m, k = len(A), len(B[0]), len(B)
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)]
            for i in range(n)]


def group_matrix(vals):
    a11, a21, a31, a32, a33 = (vals[v] for v in GROUP)
    s = a11 * a11 + a21 * a21
    return [[a11, -a21, Fraction(0), Fraction(0)],
            [a21, a11, Fraction(0), Fraction(0)],
            [a31, a32, a33, Fraction(0)],
            [Fraction(0)] * 3 + [s]]


g1 = dict(zip(GROUP, map(Fraction, (2, 1, 3, -1, 5))))
g2 = dict(zip(GROUP, map(Fraction, (1, -2, 0, 4, 3))))
M12 = matmul(group_matrix(g1), group_matrix(g2))
comp = dict(zip(GROUP, (M12[0][0], M12[1][0], M12[2][0], M12[2][1], M12[2][2])))
shape_ok = (M12[0][1] == -M12[1][0] and M12[1][1] == M12[0][0]
            and M12[3][3] == M12[0][0] ** 2 + M12[1][0] ** 2)
print("composite stays in reduced form:", shape_ok)
assert group_matrix(comp) == M12

R1 = numeric_matrix([[rep5.entry(r, c) for c in range(5)] for r in range(5)], g1)
R2 = numeric_matrix([[rep5.entry(r, c) for c in range(5)] for r in range(5)], g2)
R12 = numeric_matrix([[rep5.entry(r, c) for c in range(5)] for r in range(5)], comp)
print("rep(M1.M2) == rep(M2).rep(M1):", matmul(R2, R1) == R12)
print("rep(M1.M2) == rep(M1).rep(M2):", matmul(R1, R2) == R12)

# the printed reading of Q41/Q53 flips two middle-term signs and breaks it
S = "(a[1,1]^2 + a[2,1]^2)"
print("derived Q41:", rep5.entry(3, 0))
print("derived Q53:", rep5.entry(4, 2))
alt = [[rep5.entry(r, c) for c in range(5)] for r in range(5)]
alt[3][0] = parse_expression(
    f"(-a[1,1]^3*a[3,1] - 3*a[1,1]^2*a[2,1]*a[3,2] - 3*a[1,1]*a[2,1]^2*a[3,1]"
    f" + a[2,1]^3*a[3,2])/({S}^2*a[3,3])")
alt[4][2] = parse_expression(
    f"(-a[1,1]^3*a[3,2] + 3*a[1,1]^2*a[2,1]*a[3,1] - 3*a[1,1]*a[2,1]^2*a[3,2]"
    f" - a[2,1]^3*a[3,1])/({S}^2*a[3,3])")
print("alt Q41 differs:", not alt[3][0].rf_equal(rep5.entry(3, 0)))
print("alt Q53 differs:", not alt[4][2].rf_equal(rep5.entry(4, 2)))
A1 = numeric_matrix(alt, g1)
A2 = numeric_matrix(alt, g2)
A12 = numeric_matrix(alt, comp)
print("alt-sign homomorphism (should be False):",
      matmul(A2, A1) == A12 or matmul(A1, A2) == A12)

print(f"elapsed: {time.time() - t0:.2f}s")
