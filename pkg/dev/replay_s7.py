"""Replay branch 2b3e4a end to end: forces, stabilization, model, Lie table."""

import time

from affeq.algebra import var, poly, Polynomial, RationalExpression
from affeq.equivalence import BranchState, is_jet_variable
from affeq.jets import HypersurfaceGraph, AffineVectorField
from affeq.liealg import (
    origin_span_rank, structure_constants, jacobi_residuals, tangency_residuals,
)
from affeq.parser import parse_expression, parse_polynomial

t0 = time.time()
st = BranchState(order=6)

# ---- branch 2b -------------------------------------------------------------
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
               ((0, 1, 0), "C[2]"), ((0, 0, 1), "C[3]"),
               ((0, 1, 1), "A[2,3]"), ((1, 0, 1), "A[1,3]"), ((0, 2, 0), "D"),
               ((1, 1, 0), "A[1,2]"), ((2, 0, 0), "A[2,2]")):
    st.solve_lf(key, var(v))
for slot, v in ((1, "F[1,0,2]"), (2, "F[0,1,2]"), (3, "F[0,0,3]")):
    st.force_lf((0, 0, 2), slot, var(v))
st.assign(var("F[2,1,0]"), 0)
st.assign(var("F[1,2,0]"), 0)
st.derive_representation(
    3, [(2, 0, 1), (1, 1, 1), (0, 2, 1), (3, 0, 0), (0, 3, 0)],
    normalize_with=[(var("b[1]"), (2, 1, 0)), (var("b[2]"), (1, 2, 0))])
print(f"2b base done ({time.time() - t0:.2f}s)")

# ---- child 2b3e ------------------------------------------------------------
for name, val in (("F[2,0,1]", 0), ("F[1,1,1]", 0), ("F[0,2,1]", 1),
                  ("F[3,0,0]", 0), ("F[0,3,0]", 0)):
    st.assign(var(name), val)
for name in ("a[2,1]", "a[3,1]", "a[3,2]"):
    st.assign(var(name), 0)
st.assign(var("a[3,3]"), 1)
st.check_stabilize(3)
for key, v in (((1, 1, 1), "A[2,1]"), ((3, 0, 0), "B[1]"), ((1, 2, 0), "A[3,1]"),
               ((2, 1, 0), "B[2]"), ((0, 3, 0), "A[3,2]"), ((0, 2, 1), "A[3,3]")):
    st.solve_lf(key, var(v))
for key, slot, v in (((2, 0, 1), 1, "F[3,0,1]"), ((2, 0, 1), 2, "F[2,1,1]"),
                     ((2, 0, 1), 3, "F[2,0,2]"), ((1, 0, 2), 2, "F[1,1,2]"),
                     ((1, 0, 2), 3, "F[1,0,3]"), ((0, 1, 2), 2, "F[0,2,2]"),
                     ((0, 1, 2), 3, "F[0,1,3]"), ((0, 0, 3), 3, "F[0,0,4]")):
    st.force_lf(key, slot, var(v))
st.assign(var("F[2,2,0]"), 0)
st.derive_representation(
    4, [(4, 0, 0), (3, 1, 0), (1, 3, 0), (1, 2, 1), (0, 4, 0), (0, 3, 1)],
    normalize_with=[(var("b[3]"), (2, 2, 0))])
print(f"2b3e done ({time.time() - t0:.2f}s)")

# ---- child 2b3e4a ----------------------------------------------------------
for name in ("F[4,0,0]", "F[3,1,0]", "F[1,3,0]", "F[1,2,1]", "F[0,4,0]", "F[0,3,1]"):
    st.assign(var(name), 0)
st.check_stabilize(4)
st.solve_lf((2, 2, 0), var("B[3]"))
print("B[3] :=", st.field_subs[var("B[3]")])

forces4 = (((4, 0, 0), 1, "F[5,0,0]"), ((4, 0, 0), 2, "F[4,1,0]"), ((4, 0, 0), 3, "F[4,0,1]"),
           ((0, 4, 0), 1, "F[1,4,0]"),
           ((3, 1, 0), 2, "F[3,2,0]"), ((3, 1, 0), 3, "F[3,1,1]"),
           ((3, 0, 1), 3, "F[3,0,2]"),
           ((1, 3, 0), 1, "F[2,3,0]"), ((1, 3, 0), 3, "F[1,3,1]"),
           ((0, 4, 0), 2, "F[0,5,0]"),
           ((2, 1, 1), 2, "F[2,2,1]"), ((2, 1, 1), 3, "F[2,1,2]"),
           ((2, 0, 2), 3, "F[2,0,3]"),
           ((1, 2, 1), 3, "F[1,2,2]"),
           ((0, 3, 1), 2, "F[0,4,1]"), ((0, 3, 1), 3, "F[0,3,2]"),
           ((1, 1, 2), 3, "F[1,1,3]"),
           ((0, 2, 2), 3, "F[0,2,3]"),
           ((1, 0, 3), 3, "F[1,0,4]"),
           ((0, 1, 3), 3, "F[0,1,4]"),
           ((0, 0, 4), 3, "F[0,0,5]"))
recorded = []
for key, slot, v in forces4:
    rhs = st.force_lf(key, slot, var(v))
    recorded.append((v, str(rhs)))
    print(f"{v} := {rhs}")
for key in {k for k, _, _ in forces4}:
    assert st.eqlf_coefficient(key).is_zero(), key

printed = {("F[5,0,0]", "0"), ("F[4,1,0]", "0"), ("F[4,0,1]", "0"),
           ("F[3,2,0]", "0"), ("F[3,1,1]", "0"), ("F[3,0,2]", "0"),
           ("F[2,3,0]", "0"), ("F[2,2,1]", "0"), ("F[2,1,2]", "0"),
           ("F[2,0,3]", "0"), ("F[1,3,1]", "0"), ("F[1,2,2]", "0"),
           ("F[1,1,3]", "0"), ("F[1,0,4]", "0"), ("F[0,5,0]", "0"),
           ("F[0,4,1]", "0"), ("F[0,3,2]", "0"), ("F[0,2,3]", "1"),
           ("F[0,1,4]", "0"), ("F[0,0,5]", "0"), ("F[1,4,0]", "3*F[3,2,0]")}
print("forced set matches printed list (with F023 := 1):",
      set(recorded) == printed)

st.check_stabilize(5)
print(f"order-5 stabilized ({time.time() - t0:.2f}s)")

# ---- push one more order: every order-5 equation forces order-6 values -----
forced6 = st.force_order(5)
nonzero6 = {str(w): str(r) for w, r in forced6 if not r.is_zero()}
print("order-6 nonzero forces:", nonzero6)
for key in sorted(st.eqlf_jet(5).coeffs):
    if sum(key) == 5:
        assert st.eqlf_coefficient(key).is_zero(), key
st.check_stabilize(6)
print(f"order-6 stabilized ({time.time() - t0:.2f}s)")

model_keys = {k: c for k, c in st.F.coeffs.items() if not c.is_zero()}
print("model jet:", {k: str(c) for k, c in sorted(model_keys.items())})

# ---- the model and its algebra ---------------------------------------------
model = HypersurfaceGraph(7, {(2, 0, 0): poly(1), (0, 2, 0): poly(1),
                              (0, 2, 1): poly(1), (0, 2, 2): poly(1),
                              (0, 2, 3): poly(1), (0, 2, 4): poly(1),
                              (0, 2, 5): poly(1)})
zero = RationalExpression.zero()


def field(tx=0, ty=0, tz=0, tu=0, **q):
    Q = [[zero] * 4 for _ in range(4)]
    names = {"x": 0, "y": 1, "z": 2, "u": 3}
    for k, val in q.items():
        r, c = names[k[0]], names[k[1]]
        Q[r][c] = RationalExpression.coerce(parse_expression(str(val)))
    t = [RationalExpression.coerce(parse_expression(str(s))) for s in (tx, ty, tz, tu)]
    return AffineVectorField(Q, t)


e1 = field(tx=1, ux=2)
e2 = field(ty=1, yz=-1, uy=2)
e3 = field(tz=1, yy="-1/2", zz=-1)
e4 = field(xx=1, yy=1, uu=2)
fields = [e1, e2, e3, e4]
for i, e in enumerate(fields, start=1):
    res = tangency_residuals(model, e, 6)
    print(f"e{i} tangent through 6:", not res, "" if not res else res)
print("origin rank:", origin_span_rank(fields))
sc = structure_constants(fields)
print("structure constants:")
for i in range(4):
    for j in range(i + 1, 4):
        row = [str(sc.coefficient(i, j, r)) for r in range(4)]
        if any(x != "0" for x in row):
            print(f"  [e{i+1},e{j+1}] ->", row)
jr = jacobi_residuals(sc)
print("jacobi residuals all zero:", all(
    all(x.is_zero() for x in v) for v in jr.values()))
print(f"elapsed: {time.time() - t0:.2f}s")
