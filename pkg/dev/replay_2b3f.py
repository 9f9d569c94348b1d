"""Replay the hypothesis branch 2b3f: collapses onto 2b3e after x<->y swap."""

import time

from affeq.algebra import var, poly
from affeq.equivalence import BranchState
from affeq.parser import parse_expression, parse_polynomial

t0 = time.time()
st = BranchState(order=5)

for key, v in (((1, 0, 0), "c[1]"), ((0, 1, 0), "c[2]"), ((0, 0, 1), "c[3]")):
    st.solve_fg(key, var(v))
quad = {(2, 0, 0): 1, (1, 1, 0): 0, (1, 0, 1): 0, (0, 2, 0): 1, (0, 1, 1): 0, (0, 0, 2): 0}
for (i, j, k), val in quad.items():
    st.assign(var(f"F[{i},{j},{k}]"), val)
st.certify(parse_polynomial("a[1,1]^2 + a[2,1]^2"))
st.certify(poly(var("a[3,3]")))
st.solve_fg((2, 0, 0), var("d"))
st.assign(var("a[1,2]"), parse_expression("-a[2,1]"))
st.assign(var("a[2,2]"), parse_expression("a[1,1]"))
st.solve_fg_system([(var("a[1,3]"), (1, 0, 1)), (var("a[2,3]"), (0, 1, 1))])
st.check_stabilize(2)

for key, v in (((0, 0, 0), "U0"), ((1, 0, 0), "C[1]"),
               ((0, 1, 0), "C[2]"), ((0, 0, 1), "C[3]")):
    st.solve_lf(key, var(v))
for key, v in (((0, 1, 1), "A[2,3]"), ((1, 0, 1), "A[1,3]"), ((0, 2, 0), "D"),
               ((1, 1, 0), "A[1,2]"), ((2, 0, 0), "A[2,2]")):
    st.solve_lf(key, var(v))
for slot, v in ((1, "F[1,0,2]"), (2, "F[0,1,2]"), (3, "F[0,0,3]")):
    st.force_lf((0, 0, 2), slot, var(v))
st.assign(var("F[2,1,0]"), 0)
st.assign(var("F[1,2,0]"), 0)
labels5 = [(2, 0, 1), (1, 1, 1), (0, 2, 1), (3, 0, 0), (0, 3, 0)]
rep5 = st.derive_representation(
    3, labels5, normalize_with=[(var("b[1]"), (2, 1, 0)), (var("b[2]"), (1, 2, 0))])
print("2b base rebuilt")
base = st.copy()

# --- child 2b3f: F201 := 1, F111 := 0, F300 := 0, F030 := 0; F021 free != 1
st.certify(parse_polynomial("F[0,2,1] - 1"))
for name, val in (("F[2,0,1]", 1), ("F[1,1,1]", 0), ("F[3,0,0]", 0), ("F[0,3,0]", 0)):
    st.assign(var(name), val)

print("order-3 equations:", {k: str(v) for k, v in st.stabilization_residuals(3).items()})

st.assign(var("G[0,2,1]"), parse_expression("F[0,2,1]"))
for name, val in (("a[2,1]", 0), ("a[3,1]", 0), ("a[3,2]", 0), ("a[3,3]", 1)):
    st.assign(var(name), parse_expression(str(val)))
st.check_stabilize(3)
print("order-3 stabilized; M:", [[str(e) for e in row] for row in st.M.matrix])

print("order-3 eqLF coefficients:")
for key in sorted(st.eqlf_jet(3).coeffs, key=lambda k: (-sum(k), k)):
    if sum(key) == 3:
        c = st.eqlf_coefficient(key)
        if not c.is_zero():
            print(" ", key, "=", c)

for key, v in (((1, 2, 0), "B[1]"), ((2, 1, 0), "B[2]")):
    rhs = st.solve_lf(key, var(v))
    print(f"{v} := {rhs}")
for key, v in (((2, 0, 1), "A[3,3]"), ((0, 3, 0), "A[3,2]"),
               ((3, 0, 0), "A[3,1]"), ((1, 1, 1), "A[2,1]")):
    rhs = st.solve_lf(key, var(v))
    print(f"{v} := {rhs}")

a_oracles = {
    "A[3,3]": "-3*F[3,0,1]*T[1] - F[2,1,1]*T[2] + (1 - 2*F[2,0,2])*T[3]",
    "A[3,2]": "((3*F[3,1,0] - F[1,3,0])*T[1] + (2*F[2,2,0] - 4*F[0,4,0])*T[2]"
              " + (F[2,1,1] - F[0,3,1])*T[3])/(F[0,2,1] - 1)",
    "A[3,1]": "((4*F[4,0,0] - 2*F[2,2,0])*T[1] + (F[3,1,0] - 3*F[1,3,0])*T[2]"
              " + (F[3,0,1] - F[1,2,1])*T[3])/(F[0,2,1] - 1)",
    "A[2,1]": "(-F[2,1,1]*T[1] - F[1,2,1]*T[2] - F[1,1,2]*T[3])/(F[0,2,1] - 1)",
}
for name, txt in a_oracles.items():
    got = st.field_subs[var(name)]
    print(f"{name} oracle ok:", got.rf_equal(parse_expression(txt)))

resid = st.eqlf_coefficient((0, 2, 1))
printed_resid = parse_expression(
    "(F[1,2,1] - 3*F[0,2,1]*F[3,0,1])*T[1] + (3*F[0,3,1] - F[0,2,1]*F[2,1,1])*T[2]"
    " + (F[0,2,1] + 2*F[0,2,2] - F[0,2,1]^2 - 2*F[0,2,1]*F[2,0,2])*T[3]")
print("(0,2,1) residual ok:", resid.rf_equal(printed_resid))

forces = (((1, 0, 2), 1, "F[2,0,2]"), ((1, 0, 2), 2, "F[1,1,2]"), ((1, 0, 2), 3, "F[1,0,3]"),
          ((0, 1, 2), 2, "F[0,2,2]"), ((0, 1, 2), 3, "F[0,1,3]"),
          ((0, 0, 3), 3, "F[0,0,4]"),
          ((0, 2, 1), 1, "F[1,2,1]"), ((0, 2, 1), 2, "F[0,3,1]"))
for key, slot, v in forces:
    rhs = st.force_lf(key, slot, var(v))
    print(f"{v} := {rhs}")

resid2 = st.eqlf_coefficient((0, 2, 1))
print("final residual:", resid2)
print("residual = F021*(F021-1)*T3:",
      resid2.rf_equal(parse_expression("F[0,2,1]*(F[0,2,1] - 1)*T[3]")))
rhs = st.force_lf((0, 2, 1), 3, var("F[0,2,1]"))
print("F[0,2,1] :=", rhs)
assert st.eqlf_coefficient((0, 2, 1)).is_zero()

st.assign(var("F[2,2,0]"), 0)
labels6 = [(4, 0, 0), (3, 1, 0), (3, 0, 1), (2, 1, 1), (1, 3, 0), (0, 4, 0)]
rep6 = st.derive_representation(4, labels6, normalize_with=[(var("b[3]"), (2, 2, 0))])
print("b[3] :=", st.subs[var("b[3]")])
exp_diag = ["(1)/(a[1,1]^2)", "(1)/(a[1,1]^2)", "(1)/(a[1,1])",
            "(1)/(a[1,1])", "(1)/(a[1,1]^2)", "(1)/(a[1,1]^2)"]
ok = all(rep6.entry(r, c).rf_equal(parse_expression(exp_diag[r]) if r == c
                                   else parse_expression("0"))
         for r in range(6) for c in range(6))
print("2b3f 6x6 diagonal ok:", ok)

# --- rebuild 2b3e on a fresh copy and compare final jets under x <-> y
from affeq.jets import swap_xy

st3 = base.copy()
for name, val in (("F[2,0,1]", 0), ("F[1,1,1]", 0), ("F[0,2,1]", 1),
                  ("F[3,0,0]", 0), ("F[0,3,0]", 0)):
    st3.assign(var(name), val)
for name in ("a[2,1]", "a[3,1]", "a[3,2]"):
    st3.assign(var(name), 0)
st3.assign(var("a[3,3]"), 1)
st3.check_stabilize(3)
for key, v in (((1, 1, 1), "A[2,1]"), ((3, 0, 0), "B[1]"), ((1, 2, 0), "A[3,1]"),
               ((2, 1, 0), "B[2]"), ((0, 3, 0), "A[3,2]"), ((0, 2, 1), "A[3,3]")):
    st3.solve_lf(key, var(v))
for key, slot, v in (((2, 0, 1), 1, "F[3,0,1]"), ((2, 0, 1), 2, "F[2,1,1]"),
                     ((2, 0, 1), 3, "F[2,0,2]"), ((1, 0, 2), 2, "F[1,1,2]"),
                     ((1, 0, 2), 3, "F[1,0,3]"), ((0, 1, 2), 2, "F[0,2,2]"),
                     ((0, 1, 2), 3, "F[0,1,3]"), ((0, 0, 3), 3, "F[0,0,4]")):
    st3.force_lf(key, slot, var(v))
st3.assign(var("F[2,2,0]"), 0)
rep6e = st3.derive_representation(
    4, [(4, 0, 0), (3, 1, 0), (1, 3, 0), (1, 2, 1), (0, 4, 0), (0, 3, 1)],
    normalize_with=[(var("b[3]"), (2, 2, 0))])

swapped = swap_xy(st.F)
same = all(swapped.coeffs.get(k, parse_expression("0")).rf_equal(
               st3.F.coeffs.get(k, parse_expression("0")))
           for k in set(swapped.coeffs) | set(st3.F.coeffs) if sum(k) <= 4)
print("swap_xy(2b3f final jet) == 2b3e final jet through order 4:", same)

print(f"elapsed: {time.time() - t0:.2f}s")
