"""Replay the diagonal-quadric branch by hand and check the order-3 matrix."""

import time

from affeq.algebra import var, poly
from affeq.equivalence import BranchState, case_c2_certificate
from affeq.parser import parse_expression

t0 = time.time()
st = BranchState(order=3)

# order-1: the three translations
for key, v in (((1, 0, 0), "c[1]"), ((0, 1, 0), "c[2]"), ((0, 0, 1), "c[3]")):
    rhs = st.solve_fg(key, var(v))
    print(f"{v} := {rhs}")

# the quadric xy on both sides
quad = {(2, 0, 0): 0, (1, 1, 0): 1, (1, 0, 1): 0, (0, 2, 0): 0, (0, 1, 1): 0, (0, 0, 2): 0}
for (i, j, k), val in quad.items():
    st.assign(var(f"F[{i},{j},{k}]"), val)

print("after quadric, order-2 residual keys:",
      {k: str(v) for k, v in st.stabilization_residuals(2).items()})

# branch entry: the diagonal case
for name in ("a[1,1]", "a[2,2]", "a[3,3]"):
    st.certify(poly(var(name)))

for key, v in (((2, 0, 0), "a[2,1]"), ((0, 2, 0), "a[1,2]"),
               ((1, 0, 1), "a[2,3]"), ((0, 1, 1), "a[1,3]"),
               ((1, 1, 0), "d")):
    rhs = st.solve_fg(key, var(v))
    print(f"{v} := {rhs}")

st.check_stabilize(2)
print("order-2 stabilized")

# tangency: order 0 and 1
for key, v in (((0, 0, 0), "U0"), ((1, 0, 0), "C[1]"),
               ((0, 1, 0), "C[2]"), ((0, 0, 1), "C[3]")):
    rhs = st.solve_lf(key, var(v))
    print(f"{v} := {rhs}")

# order 2: five solves, then the pure-T equation forces three jet coefficients
for key, v in (((1, 1, 0), "D"), ((2, 0, 0), "A[2,1]"), ((0, 2, 0), "A[1,2]"),
               ((1, 0, 1), "A[2,3]"), ((0, 1, 1), "A[1,3]")):
    rhs = st.solve_lf(key, var(v))
    print(f"{v} := {rhs}")

e = st.eqlf_coefficient((0, 0, 2))
print("eqLF(0,0,2) =", e)
for slot, v in ((1, "F[1,0,2]"), (2, "F[0,1,2]"), (3, "F[0,0,3]")):
    rhs = st.force_lf((0, 0, 2), slot, var(v))
    print(f"{v} := {rhs}")
assert st.eqlf_coefficient((0, 0, 2)).is_zero()

# cubic shear normal form on both sides
st.assign(var("F[2,1,0]"), 0)
st.assign(var("F[1,2,0]"), 0)

labels = [(2, 0, 1), (1, 1, 1), (0, 2, 1), (3, 0, 0), (0, 3, 0)]
rep = st.derive_representation(
    3, labels,
    normalize_with=[(var("b[2]"), (2, 1, 0)), (var("b[1]"), (1, 2, 0))])

print("b[1] :=", st.subs[var("b[1]")])
print("b[2] :=", st.subs[var("b[2]")])
for r in range(5):
    print([str(rep.entry(r, c)) for c in range(5)])

expected = [
    ["(a[2,2])/(a[1,1]*a[3,3])", "0", "0", "0", "0"],
    ["0", "(1)/(a[3,3])", "0", "0", "0"],
    ["0", "0", "(a[1,1])/(a[2,2]*a[3,3])", "0", "0"],
    ["(-a[2,2]*a[3,1])/((a[1,1])^2*a[3,3])", "0", "0", "(a[2,2])/((a[1,1])^2)", "0"],
    ["0", "0", "(-a[1,1]*a[3,2])/((a[2,2])^2*a[3,3])", "0", "(a[1,1])/((a[2,2])^2)"],
]
ok = all(rep.entry(r, c).rf_equal(parse_expression(expected[r][c]))
         for r in range(5) for c in range(5))
print("matrix matches hand derivation:", ok)
print("identity at identity:", rep.is_identity_at_identity())
print("det:", rep.determinant())
print("b1 expected:", st.subs[var("b[1]")].rf_equal(
    parse_expression("-a[2,2]*a[3,1]*G[0,2,1] - a[1,1]*a[3,2]*G[1,1,1]")))
print("b2 expected:", st.subs[var("b[2]")].rf_equal(
    parse_expression("-a[1,1]*a[3,2]*G[2,0,1] - a[2,2]*a[3,1]*G[1,1,1]")))

print("c2 certificate:", case_c2_certificate())
print(f"elapsed: {time.time() - t0:.2f}s")
