"""Replay the circle-quadric branch and its child 2b3e against printed values."""

import time

from affeq.algebra import var, poly, Polynomial
from affeq.equivalence import (
    BranchState, LinearRepresentation, representation_generators,
    minor_rank_ideal,
)
from affeq.groebner import radical_member, buchberger
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

print("order-2 equations:", {k: str(v) for k, v in st.stabilization_residuals(2).items()})

st.solve_fg((2, 0, 0), var("d"))
print("d :=", st.subs[var("d")])
st.assign(var("a[1,2]"), parse_expression("-a[2,1]"))
st.assign(var("a[2,2]"), parse_expression("a[1,1]"))
sol = st.solve_fg_system([(var("a[1,3]"), (1, 0, 1)), (var("a[2,3]"), (0, 1, 1))])
print("a13, a23 :=", {str(v): str(r) for v, r in sol.items()})
st.check_stabilize(2)
print("order-2 stabilized")

for key, v in (((0, 0, 0), "U0"), ((1, 0, 0), "C[1]"),
               ((0, 1, 0), "C[2]"), ((0, 0, 1), "C[3]")):
    rhs = st.solve_lf(key, var(v))
    print(f"{v} := {rhs}")

for key, v in (((0, 1, 1), "A[2,3]"), ((1, 0, 1), "A[1,3]"), ((0, 2, 0), "D"),
               ((1, 1, 0), "A[1,2]"), ((2, 0, 0), "A[2,2]")):
    rhs = st.solve_lf(key, var(v))
    print(f"{v} := {rhs}")

for slot, v in ((1, "F[1,0,2]"), (2, "F[0,1,2]"), (3, "F[0,0,3]")):
    st.force_lf((0, 0, 2), slot, var(v))
assert st.eqlf_coefficient((0, 0, 2)).is_zero()

st.assign(var("F[2,1,0]"), 0)
st.assign(var("F[1,2,0]"), 0)

labels5 = [(2, 0, 1), (1, 1, 1), (0, 2, 1), (3, 0, 0), (0, 3, 0)]
rep5 = st.derive_representation(
    3, labels5, normalize_with=[(var("b[1]"), (2, 1, 0)), (var("b[2]"), (1, 2, 0))])
print("b[1] :=", st.subs[var("b[1]")])
print("b[2] :=", st.subs[var("b[2]")])

S = "(a[1,1]^2 + a[2,1]^2)"
expected5 = [
    [f"(a[1,1]^2)/({S}*a[3,3])", f"(-a[1,1]*a[2,1])/({S}*a[3,3])",
     f"(a[2,1]^2)/({S}*a[3,3])", "0", "0"],
    [f"(2*a[1,1]*a[2,1])/({S}*a[3,3])", f"(a[1,1]^2 - a[2,1]^2)/({S}*a[3,3])",
     f"(-2*a[1,1]*a[2,1])/({S}*a[3,3])", "0", "0"],
    [f"(a[2,1]^2)/({S}*a[3,3])", f"(a[1,1]*a[2,1])/({S}*a[3,3])",
     f"(a[1,1]^2)/({S}*a[3,3])", "0", "0"],
    [f"(-a[1,1]^3*a[3,1] - 3*a[1,1]^2*a[2,1]*a[3,2] - 3*a[1,1]*a[2,1]^2*a[3,1] + a[2,1]^3*a[3,2])/({S}^2*a[3,3])",
     f"(a[1,1]^3*a[3,2] + 3*a[1,1]^2*a[2,1]*a[3,1] - 3*a[1,1]*a[2,1]^2*a[3,2] - a[2,1]^3*a[3,1])/({S}^2*a[3,3])",
     f"(a[1,1]^3*a[3,1] - 3*a[1,1]^2*a[2,1]*a[3,2] - 3*a[1,1]*a[2,1]^2*a[3,1] + a[2,1]^3*a[3,2])/({S}^2*a[3,3])",
     f"(a[1,1]*(a[1,1]^2 - 3*a[2,1]^2))/({S}^2)",
     f"(a[2,1]*(3*a[1,1]^2 - a[2,1]^2))/({S}^2)"],
    [f"(a[1,1]^3*a[3,2] + 3*a[1,1]^2*a[2,1]*a[3,1] - 3*a[1,1]*a[2,1]^2*a[3,2] - a[2,1]^3*a[3,1])/({S}^2*a[3,3])",
     f"(a[1,1]^3*a[3,1] - 3*a[1,1]^2*a[2,1]*a[3,2] - 3*a[1,1]*a[2,1]^2*a[3,1] + a[2,1]^3*a[3,2])/({S}^2*a[3,3])",
     f"(-a[1,1]^3*a[3,2] + 3*a[1,1]^2*a[2,1]*a[3,1] - 3*a[1,1]*a[2,1]^2*a[3,2] - a[2,1]^3*a[3,1])/({S}^2*a[3,3])",
     f"(-a[2,1]*(3*a[1,1]^2 - a[2,1]^2))/({S}^2)",
     f"(a[1,1]*(a[1,1]^2 - 3*a[2,1]^2))/({S}^2)"],
]
bad = [(r, c) for r in range(5) for c in range(5)
       if not rep5.entry(r, c).rf_equal(parse_expression(expected5[r][c]))]
print("5x5 mismatches:", bad)
for (r, c) in bad:
    print("  got ", r, c, rep5.entry(r, c))
print("5x5 det ok:", rep5.determinant().rf_equal(
    parse_expression(f"(1)/({S}*a[3,3]^3)")))
print("identity at identity:", rep5.is_identity_at_identity())

# 3D sub-representation and its infinitesimal generators
labels3 = labels5[:3]
rep3 = LinearRepresentation(labels3, [[rep5.entry(r, c) for c in range(3)] for r in range(3)])
print("3D det ok:", rep3.determinant().rf_equal(parse_expression("(1)/(a[3,3]^3)")))

eps = parse_expression("eps")
one = parse_expression("1")
curves = [
    {var("a[1,1]"): one + eps, var("a[2,1]"): 0, var("a[3,3]"): 1},
    {var("a[1,1]"): 1, var("a[2,1]"): eps, var("a[3,3]"): 1},
    {var("a[1,1]"): 1, var("a[2,1]"): 0, var("a[3,3]"): one + eps},
]
gens = representation_generators(rep3, curves)
for i, g in enumerate(gens, start=1):
    print(f"L{i}:", g)
assert gens[0].is_zero()
exp_l2 = {"F[2,0,1]": "-F[1,1,1]", "F[1,1,1]": "2*F[2,0,1] - 2*F[0,2,1]",
          "F[0,2,1]": "F[1,1,1]"}
exp_l3 = {"F[2,0,1]": "-F[2,0,1]", "F[1,1,1]": "-F[1,1,1]", "F[0,2,1]": "-F[0,2,1]"}
ok2 = all(gens[1].components[var(k)] == parse_polynomial(v) for k, v in exp_l2.items())
ok3 = all(gens[2].components[var(k)] == parse_polynomial(v) for k, v in exp_l3.items())
print("L2 ok:", ok2, "L3 ok:", ok3)

minors = minor_rank_ideal(gens, 2)
print("minors:", [str(m) for m in minors])
printed = [parse_polynomial("(F[2,0,1] - F[0,2,1])*(F[2,0,1] + F[0,2,1])"),
           parse_polynomial("F[1,1,1]*(F[2,0,1] + F[0,2,1])"),
           parse_polynomial("F[1,1,1]^2 + 2*F[0,2,1]*(-F[2,0,1] + F[0,2,1])")]
gb_m = buchberger(minors)
gb_p = buchberger(printed)
both = (all(radical_member(p, minors) for p in printed)
        and all(radical_member(m, printed) for m in minors))
print("rank locus radical-equal:", both)

# invariance of the rank-locus equations under the 3x3 block
g_diff = rep3.entry(0, 0) - rep3.entry(2, 0)  # not meaningful alone; do it properly
f201, f111, f021 = (poly(var(k)) for k in ("F[2,0,1]", "F[1,1,1]", "F[0,2,1]"))
row_diff = [rep3.entry(0, c) - rep3.entry(2, c) for c in range(3)]
g201_m_g021 = sum((row_diff[c] * parse_expression(k) for c, k in
                   enumerate(("F[2,0,1]", "F[1,1,1]", "F[0,2,1]"))),
                  parse_expression("0"))
exp_diff = parse_expression(
    f"((a[1,1]^2 - a[2,1]^2)*(F[2,0,1] - F[0,2,1]) - 2*a[1,1]*a[2,1]*F[1,1,1])/({S}*a[3,3])")
print("G201-G021 formula ok:", g201_m_g021.rf_equal(exp_diff))
inv_det = parse_polynomial(
    "(a[1,1]^2 - a[2,1]^2)*(a[1,1]^2 - a[2,1]^2) + 2*a[1,1]*a[2,1]*2*a[1,1]*a[2,1]")
print("invariance det ok:", inv_det == parse_polynomial(f"{S}^2"))

# Assertion 5.4: with F111 := 0 on both sides, the (1,1,1) coefficient of the
# solved G111 row is the printed obstruction
g111_row = sum((rep5.entry(1, c) * parse_expression(k) for c, k in
                enumerate(("F[2,0,1]", "F[1,1,1]", "F[0,2,1]"))), parse_expression("0"))
obstruction = g111_row.substitute({var("F[1,1,1]"): 0})
print("assertion 5.4 ok:", obstruction.rf_equal(parse_expression(
    f"(2*a[1,1]*a[2,1]*(F[2,0,1] - F[0,2,1]))/({S}*a[3,3])")))

# ---- child branch 2b3e ----------------------------------------------------
st3 = st.copy()
for name, val in (("F[2,0,1]", 0), ("F[1,1,1]", 0), ("F[0,2,1]", 1),
                  ("F[3,0,0]", 0), ("F[0,3,0]", 0)):
    st3.assign(var(name), val)

print("2b3e order-3 equations:",
      {k: str(v) for k, v in st3.stabilization_residuals(3).items()})
print("M after values:", [[str(e) for e in row] for row in st3.M.matrix])

for name, val in (("a[2,1]", 0), ("a[3,1]", 0), ("a[3,2]", 0), ("a[3,3]", 1)):
    st3.assign(var(name), val)
st3.check_stabilize(3)
print("2b3e order-3 stabilized; M:", [[str(e) for e in row] for row in st3.M.matrix])

print("order-3 eqLF coefficients:")
for key in sorted(st3.eqlf_jet(3).coeffs, key=lambda k: (-sum(k), k)):
    if sum(key) == 3:
        c = st3.eqlf_coefficient(key)
        if not c.is_zero():
            print(" ", key, "=", c)

solves = (((1, 1, 1), "A[2,1]"), ((3, 0, 0), "B[1]"), ((1, 2, 0), "A[3,1]"),
          ((2, 1, 0), "B[2]"), ((0, 3, 0), "A[3,2]"), ((0, 2, 1), "A[3,3]"))
for key, v in solves:
    rhs = st3.solve_lf(key, var(v))
    print(f"{v} := {rhs}")

a_oracles = {
    "A[2,1]": "-F[2,1,1]*T[1] - F[1,2,1]*T[2] - F[1,1,2]*T[3]",
    "A[3,1]": "(-2*F[2,2,0] + 4*F[4,0,0])*T[1] + (-3*F[1,3,0] + F[3,1,0])*T[2] + (-F[1,2,1] + F[3,0,1])*T[3]",
    "A[3,2]": "(-F[1,3,0] + 3*F[3,1,0])*T[1] + (-4*F[0,4,0] + 2*F[2,2,0])*T[2] + (-F[0,3,1] + F[2,1,1])*T[3]",
    "A[3,3]": "-F[1,2,1]*T[1] - 3*F[0,3,1]*T[2] + (-2*F[0,2,2] + 1)*T[3]",
}
for name, txt in a_oracles.items():
    got = st3.field_subs[var(name)]
    print(f"{name} oracle ok:", got.rf_equal(parse_expression(txt)))

forces = (((2, 0, 1), 1, "F[3,0,1]"), ((2, 0, 1), 2, "F[2,1,1]"), ((2, 0, 1), 3, "F[2,0,2]"),
          ((1, 0, 2), 2, "F[1,1,2]"), ((1, 0, 2), 3, "F[1,0,3]"),
          ((0, 1, 2), 2, "F[0,2,2]"), ((0, 1, 2), 3, "F[0,1,3]"),
          ((0, 0, 3), 3, "F[0,0,4]"))
for key, slot, v in forces:
    rhs = st3.force_lf(key, slot, var(v))
    print(f"{v} := {rhs}")
for key in ((2, 0, 1), (1, 0, 2), (0, 1, 2), (0, 0, 3)):
    assert st3.eqlf_coefficient(key).is_zero(), key

st3.assign(var("F[2,2,0]"), 0)
print("eqFG(2,2,0):", st3.eqfg_coefficient((2, 2, 0)))

labels6 = [(4, 0, 0), (3, 1, 0), (1, 3, 0), (1, 2, 1), (0, 4, 0), (0, 3, 1)]
rep6 = st3.derive_representation(4, labels6, normalize_with=[(var("b[3]"), (2, 2, 0))])
print("b[3] :=", st3.subs[var("b[3]")])
exp_diag = ["(1)/(a[1,1]^2)", "(1)/(a[1,1]^2)", "(1)/(a[1,1]^2)",
            "(1)/(a[1,1])", "(1)/(a[1,1]^2)", "(1)/(a[1,1])"]
ok = all(rep6.entry(r, c).rf_equal(parse_expression(exp_diag[r]) if r == c
                                   else parse_expression("0"))
         for r in range(6) for c in range(6))
print("2b3e 6x6 diagonal ok:", ok)
print("M final:", [[str(e) for e in row] for row in st3.M.matrix])

b3_rhs = st3.solve_lf((2, 2, 0), var("B[3]"))
print("B[3] :=", b3_rhs)
b3_oracle = parse_expression(
    "(-4*F[1,2,1]*F[4,0,0] - 3*F[3,2,0])*T[1]"
    " + (6*F[1,2,1]*F[1,3,0] - 4*F[1,2,1]*F[3,1,0] - 3*F[2,3,0])*T[2]"
    " + (F[1,2,1]^2 - F[2,2,1])*T[3]")
print("B[3] oracle ok:", b3_rhs.rf_equal(b3_oracle))

print(f"elapsed: {time.time() - t0:.2f}s")

# ---- case C1: F111 = 0 with F021 = F201 ------------------------------------
stc1 = st.copy()
stc1.assign(var("F[1,1,1]"), 0)
stc1.assign(var("F[0,2,1]"), parse_expression("F[2,0,1]"))
rep3c1 = stc1.derive_representation(3, [(2, 0, 1), (3, 0, 0), (0, 3, 0)])
expected_c1 = [
    ["(1)/(a[3,3])", "0", "0"],
    ["0", f"(a[1,1]*(a[1,1]^2 - 3*a[2,1]^2))/({S}^2)",
     f"(a[2,1]*(3*a[1,1]^2 - a[2,1]^2))/({S}^2)"],
    ["0", f"(-a[2,1]*(3*a[1,1]^2 - a[2,1]^2))/({S}^2)",
     f"(a[1,1]*(a[1,1]^2 - 3*a[2,1]^2))/({S}^2)"],
]
okc1 = all(rep3c1.entry(r, c).rf_equal(parse_expression(expected_c1[r][c]))
           for r in range(3) for c in range(3))
print("C1 3x3 ok:", okc1)
print("C1 det ok:", rep3c1.determinant().rf_equal(parse_expression(f"(1)/({S}*a[3,3])")))
curves_c1 = [
    {var("a[1,1]"): one + eps, var("a[2,1]"): 0, var("a[3,3]"): 1},
    {var("a[1,1]"): 1, var("a[2,1]"): eps, var("a[3,3]"): 1},
]
g1, g2 = representation_generators(rep3c1, curves_c1)
exp_g1 = {"F[3,0,0]": "-F[3,0,0]", "F[0,3,0]": "-F[0,3,0]"}
exp_g2 = {"F[3,0,0]": "3*F[0,3,0]", "F[0,3,0]": "-3*F[3,0,0]"}
okg1 = (not g1.components.get(var("F[2,0,1]"), Polynomial.zero())
        and all(g1.components[var(k)] == parse_polynomial(v) for k, v in exp_g1.items()))
okg2 = (not g2.components.get(var("F[2,0,1]"), Polynomial.zero())
        and all(g2.components[var(k)] == parse_polynomial(v) for k, v in exp_g2.items()))
print("C1 similitude generators ok:", okg1, okg2)

# ---- case C2: F111 := 0 by the biquadratic, then a21 := 0 ------------------
stc2 = st.copy()
stc2.assign(var("F[1,1,1]"), 0)
stc2.assign(var("a[2,1]"), 0)
rep4c2 = stc2.derive_representation(3, [(2, 0, 1), (0, 2, 1), (3, 0, 0), (0, 3, 0)])
expected_c2 = [
    ["(1)/(a[3,3])", "0", "0", "0"],
    ["0", "(1)/(a[3,3])", "0", "0"],
    ["(-a[3,1])/(a[1,1]*a[3,3])", "(a[3,1])/(a[1,1]*a[3,3])", "(1)/(a[1,1])", "0"],
    ["(a[3,2])/(a[1,1]*a[3,3])", "(-a[3,2])/(a[1,1]*a[3,3])", "0", "(1)/(a[1,1])"],
]
okc2 = all(rep4c2.entry(r, c).rf_equal(parse_expression(expected_c2[r][c]))
           for r in range(4) for c in range(4))
print("C2 4x4 ok:", okc2)
