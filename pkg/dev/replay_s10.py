"""Replay the order>=4 linear representations, branch by branch."""

import sys
import time

from affeq.algebra import RationalExpression, poly, rf_equal, var
from affeq.equivalence import BranchState, is_jet_variable
from affeq.parser import parse_expression, parse_polynomial

t0 = time.time()


def base_2a(order: int) -> BranchState:
    st = BranchState(order=order)
    for key, v in (((1, 0, 0), "c[1]"), ((0, 1, 0), "c[2]"), ((0, 0, 1), "c[3]")):
        st.solve_fg(key, var(v))
    quad = {(2, 0, 0): 0, (1, 1, 0): 1, (1, 0, 1): 0,
            (0, 2, 0): 0, (0, 1, 1): 0, (0, 0, 2): 0}
    for (i, j, k), val in quad.items():
        st.assign(var(f"F[{i},{j},{k}]"), val)
    for name in ("a[1,1]", "a[2,2]", "a[3,3]"):
        st.certify(poly(var(name)))
    for key, v in (((2, 0, 0), "a[2,1]"), ((0, 2, 0), "a[1,2]"),
                   ((1, 0, 1), "a[2,3]"), ((0, 1, 1), "a[1,3]"),
                   ((1, 1, 0), "d")):
        st.solve_fg(key, var(v))
    st.check_stabilize(2)
    for key, v in (((0, 0, 0), "U0"), ((1, 0, 0), "C[1]"),
                   ((0, 1, 0), "C[2]"), ((0, 0, 1), "C[3]")):
        st.solve_lf(key, var(v))
    for key, v in (((1, 1, 0), "D"), ((2, 0, 0), "A[2,1]"), ((0, 2, 0), "A[1,2]"),
                   ((1, 0, 1), "A[2,3]"), ((0, 1, 1), "A[1,3]")):
        st.solve_lf(key, var(v))
    for slot, v in ((1, "F[1,0,2]"), (2, "F[0,1,2]"), (3, "F[0,0,3]")):
        st.force_lf((0, 0, 2), slot, var(v))
    st.assign(var("F[2,1,0]"), 0)
    st.assign(var("F[1,2,0]"), 0)
    st.derive_representation(
        3, [(2, 0, 1), (1, 1, 1), (0, 2, 1), (3, 0, 0), (0, 3, 0)],
        normalize_with=[(var("b[2]"), (2, 1, 0)), (var("b[1]"), (1, 2, 0))])
    return st


def base_2b(order: int) -> BranchState:
    st = BranchState(order=order)
    for key, v in (((1, 0, 0), "c[1]"), ((0, 1, 0), "c[2]"), ((0, 0, 1), "c[3]")):
        st.solve_fg(key, var(v))
    quad = {(2, 0, 0): 1, (1, 1, 0): 0, (1, 0, 1): 0,
            (0, 2, 0): 1, (0, 1, 1): 0, (0, 0, 2): 0}
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
    return st


def dump_lf(st, n):
    print(f"-- eqLF order {n}:")
    for k in sorted(st.eqlf_jet(n).coeffs):
        if sum(k) != n:
            continue
        c = st.eqlf_coefficient(k)
        if not c.is_zero():
            print("  ", k, "=", c)


def dump_fg(st, n):
    print(f"-- eqFG order {n} residuals:")
    for k, c in st.stabilization_residuals(n).items():
        print("  ", k, "=", c)


def check_rep(rep, expected, tag):
    n = len(expected)
    ok = all(rf_equal(rep.entry(r, c),
                      RationalExpression.coerce(parse_expression(expected[r][c])))
             for r in range(n) for c in range(n))
    print(f"{tag} matches printed: {ok}")
    if not ok:
        for r in range(n):
            print("  ", [str(rep.entry(r, c)) for c in range(n)])
    return ok


def explore_2a3a():
    st = base_2a(5)
    for name in ("F[2,0,1]", "F[1,1,1]", "F[0,2,1]", "F[3,0,0]", "F[0,3,0]"):
        st.assign(var(name), 0)
    st.check_stabilize(3)
    print("order-3 stabilized with no group reduction")
    st.solve_lf((1, 2, 0), var("B[1]"))
    st.solve_lf((2, 1, 0), var("B[2]"))
    forced = st.force_order(3)
    print("forces:", {str(w): str(r) for w, r in forced})
    rep = st.derive_representation(4, [(2, 2, 0)])
    check_rep(rep, [["1/(a[1,1]*a[2,2])"]], "2a3a rep")


def explore_2a3b():
    st = base_2a(5)
    for name, val in (("F[2,0,1]", 0), ("F[1,1,1]", 0), ("F[0,2,1]", 0),
                      ("F[3,0,0]", 0), ("F[0,3,0]", 1)):
        st.assign(var(name), val)
    st.assign(var("a[1,1]"), parse_expression("a[2,2]^2"))
    st.check_stabilize(3)
    print("order-3 stabilized with a[1,1] := a[2,2]^2")
    st.solve_lf((0, 3, 0), var("A[1,1]"))
    st.solve_lf((1, 2, 0), var("B[1]"))
    st.solve_lf((2, 1, 0), var("B[2]"))
    forced = st.force_order(3)
    print("forces:", {str(w): str(r) for w, r in forced})
    rep = st.derive_representation(4, [(0, 4, 0), (1, 3, 0), (2, 2, 0)])
    check_rep(rep, [["1/a[2,2]", "0", "0"],
                    ["0", "1/a[2,2]^2", "0"],
                    ["0", "0", "1/a[2,2]^3"]], "2a3b rep")


def explore_2a3d():
    st = base_2a(5)
    for name, val in (("F[2,0,1]", 0), ("F[1,1,1]", 0), ("F[0,2,1]", 1),
                      ("F[3,0,0]", 0), ("F[0,3,0]", 0)):
        st.assign(var(name), val)
    st.assign(var("a[1,1]"), parse_expression("a[2,2]*a[3,3]"))
    st.assign(var("a[3,2]"), 0)
    st.check_stabilize(3)
    print("order-3 stabilized with a[1,1] := a[2,2]*a[3,3], a[3,2] := 0")
    st.solve_lf((0, 2, 1), var("A[1,1]"))
    st.solve_lf((0, 3, 0), var("A[3,2]"))
    st.solve_lf((1, 2, 0), var("B[1]"))
    st.solve_lf((2, 1, 0), var("B[2]"))
    forced = st.force_order(3)
    print("forces:", {str(w): str(r) for w, r in forced})
    st.assign(var("F[0,3,1]"), 0)
    st.assign(var("F[1,3,0]"), 0)
    rep = st.derive_representation(
        4, [(2, 2, 0), (0, 4, 0)],
        normalize_with=[(var("a[3,1]"), (0, 3, 1)), (var("b[3]"), (1, 3, 0))])
    check_rep(rep, [["1/(a[2,2]^2*a[3,3])", "0"],
                    ["0", "a[3,3]/a[2,2]^2"]], "2a3d rep")
    print("a[3,1] :=", st.subs[var("a[3,1]")], "  b[3] :=", st.subs[var("b[3]")])
    return st


def explore_2a3d4c():
    st = explore_2a3d()
    st.assign(var("F[2,2,0]"), 1)
    st.assign(var("F[0,4,0]"), 0)
    st.assign(var("a[3,3]"), parse_expression("1/a[2,2]^2"))
    st.check_stabilize(4)
    print("order-4 stabilized with a[3,3] := 1/a[2,2]^2")
    st.solve_lf((0, 3, 1), var("A[3,1]"))
    st.solve_lf((1, 3, 0), var("B[3]"))
    st.solve_lf((2, 2, 0), var("A[3,3]"))
    forced = st.force_order(4)
    print("forces:", {str(w): str(r) for w, r in forced})
    rep = st.derive_representation(5, [(2, 3, 0)])
    check_rep(rep, [["1/a[2,2]"]], "2a3d4c")


def explore_2a3d4d():
    st = explore_2a3d()
    st.assign(var("F[2,2,0]"), 0)
    st.assign(var("F[0,4,0]"), 1)
    st.assign(var("a[3,3]"), parse_expression("a[2,2]^2"))
    st.check_stabilize(4)
    print("order-4 stabilized with a[3,3] := a[2,2]^2")
    st.solve_lf((0, 3, 1), var("A[3,1]"))
    st.solve_lf((0, 4, 0), var("A[3,3]"))
    st.solve_lf((1, 3, 0), var("B[3]"))
    forced = st.force_order(4)
    print("forces:", {str(w): str(r) for w, r in forced})
    rep = st.derive_representation(5, [(0, 5, 0), (0, 4, 1), (1, 4, 0)])
    check_rep(
        rep,
        [
            ["1/a[2,2]", "0", "0"],
            ["0", "1/a[2,2]^2", "0"],
            ["0", "0", "1/a[2,2]^3"],
        ],
        "2a3d4d",
    )


def explore_2a3g():
    st = base_2a(6)
    st.assign(var("F[2,0,1]"), 0)
    st.assign(var("F[1,1,1]"), 1)
    st.assign(var("F[0,2,1]"), 0)
    st.assign(var("F[3,0,0]"), 0)
    st.assign(var("F[0,3,0]"), 1)
    st.assign(var("a[1,1]"), parse_expression("a[2,2]^2"))
    st.assign(var("a[3,3]"), 1)
    st.check_stabilize(3)
    print("order-3 stabilized with a[1,1] := a[2,2]^2, a[3,3] := 1")
    st.solve_lf((0, 3, 0), var("A[1,1]"))
    st.solve_lf((1, 1, 1), var("A[3,3]"))
    st.solve_lf((1, 2, 0), var("B[1]"))
    st.solve_lf((2, 1, 0), var("B[2]"))
    forced = st.force_order(3)
    print("forces:", {str(w): str(r) for w, r in forced})
    st.assign(var("F[0,4,0]"), 0)
    st.assign(var("F[1,3,0]"), 0)
    st.assign(var("F[2,2,0]"), 0)
    st.solve_fg((0, 4, 0), var("a[3,2]"))
    st.solve_fg((1, 3, 0), var("a[3,1]"))
    st.solve_fg((2, 2, 0), var("b[3]"))
    print("a[3,2] :=", st.subs[var("a[3,2]")], "  a[3,1] :=",
          st.subs[var("a[3,1]")], "  b[3] :=", st.subs[var("b[3]")])
    st.check_stabilize(4)
    print("order-4 stabilized")
    st.solve_lf((0, 4, 0), var("A[3,2]"))
    st.solve_lf((1, 3, 0), var("A[3,1]"))
    st.solve_lf((2, 2, 0), var("B[3]"))
    forced = st.force_order(4)
    print("forces:", {str(w): str(r) for w, r in forced})
    rep = st.derive_representation(5, [(1, 4, 0), (0, 5, 0), (2, 3, 0)])
    check_rep(
        rep,
        [
            ["1/a[2,2]^3", "0", "0"],
            ["0", "1/a[2,2]^2", "0"],
            ["0", "0", "1/a[2,2]^4"],
        ],
        "2a3g",
    )
    return st


def explore_2a3i():
    st = base_2a(5)
    st.assign(var("F[2,0,1]"), 0)
    st.assign(var("F[1,1,1]"), 1)
    st.assign(var("F[0,2,1]"), 1)
    st.assign(var("F[3,0,0]"), 0)
    st.assign(var("F[0,3,0]"), 0)
    st.assign(var("a[3,3]"), 1)
    st.assign(var("a[1,1]"), parse_expression("a[2,2]"))
    st.assign(var("a[3,2]"), 0)
    st.check_stabilize(3)
    print("order-3 stabilized with a[3,3] := 1, a[1,1] := a[2,2], a[3,2] := 0")
    st.solve_lf((0, 2, 1), var("A[1,1]"))
    st.solve_lf((0, 3, 0), var("A[3,2]"))
    st.solve_lf((1, 1, 1), var("A[3,3]"))
    st.solve_lf((1, 2, 0), var("B[1]"))
    st.solve_lf((2, 1, 0), var("B[2]"))
    forced = st.force_order(3)
    print("forces:", {str(w): str(r) for w, r in forced})
    st.assign(var("F[0,3,1]"), 0)
    st.assign(var("F[1,3,0]"), 0)
    # printed entries use a[1,1]; identical here after a[1,1] := a[2,2]
    rep = st.derive_representation(
        4, [(1, 2, 1), (0, 4, 0), (2, 2, 0)],
        normalize_with=[(var("a[3,1]"), (0, 3, 1)), (var("b[3]"), (1, 3, 0))])
    check_rep(
        rep,
        [
            ["1/a[2,2]", "0", "0"],
            ["0", "1/a[2,2]^2", "0"],
            ["0", "0", "1/a[2,2]^2"],
        ],
        "2a3i",
    )
    return st


def explore_2a3m():
    st = base_2a(5)
    st.assign(var("F[2,0,1]"), 1)
    st.assign(var("F[1,1,1]"), 1)
    st.assign(var("F[3,0,0]"), 0)
    st.assign(var("F[0,3,0]"), 0)
    st.certify(parse_expression("F[0,2,1]").num)
    st.assign(var("a[3,3]"), 1)
    st.assign(var("a[2,2]"), parse_expression("a[1,1]"))
    st.assign(var("a[3,1]"), 0)
    st.assign(var("a[3,2]"), 0)
    st.assign(var("G[0,2,1]"), var("F[0,2,1]"))
    st.check_stabilize(3)
    print("order-3 stabilized; declared a[3,3]:=1 a[2,2]:=a[1,1] "
          "a[3,1]:=0 a[3,2]:=0, carried G[0,2,1]:=F[0,2,1]")
    st.solve_lf((1, 1, 1), var("A[3,3]"))
    st.solve_lf((0, 2, 1), var("A[1,1]"))
    st.solve_lf((3, 0, 0), var("A[3,1]"))
    st.solve_lf((0, 3, 0), var("A[3,2]"))
    st.solve_lf((1, 2, 0), var("B[1]"))
    st.solve_lf((2, 1, 0), var("B[2]"))
    forced, leftover = st.force_order(3, allow_residual=True)
    print("forces:", {str(w): str(r) for w, r in forced})
    print("leftover:", {k: str(e) for k, e in leftover.items()})
    st.assign(var("F[3,1,0]"), 0)
    rep = st.derive_representation(
        4, [(3, 0, 1), (2, 1, 1), (0, 4, 0), (1, 3, 0), (2, 2, 0), (4, 0, 0)],
        normalize_with=[(var("b[3]"), (3, 1, 0))])
    expected = [["0"] * 6 for _ in range(6)]
    for idx, e in enumerate(["1/a[1,1]", "1/a[1,1]", "1/a[1,1]^2",
                             "1/a[1,1]^2", "1/a[1,1]^2", "1/a[1,1]^2"]):
        expected[idx][idx] = e
    check_rep(rep, expected, "2a3m")
    return st


def explore_2b3a():
    st = base_2b(5)
    st.assign(var("F[2,0,1]"), 0)
    st.assign(var("F[1,1,1]"), 0)
    st.assign(var("F[0,2,1]"), 0)
    st.assign(var("F[3,0,0]"), 0)
    st.assign(var("F[0,3,0]"), 0)
    st.check_stabilize(3)
    print("order-3 stabilized with no group reduction")
    st.solve_lf((0, 3, 0), var("B[2]"))
    st.solve_lf((1, 2, 0), var("B[1]"))
    forced = st.force_order(3, keep=[var("F[2,2,0]")])
    print("forces:", {str(w): str(r) for w, r in forced})
    rep = st.derive_representation(4, [(2, 2, 0)])
    check_rep(rep, [["1/(a[1,1]^2+a[2,1]^2)"]], "2b3a")
    return st


if __name__ == "__main__":
    globals()["explore_" + sys.argv[1]]()
    print(f"elapsed: {time.time() - t0:.2f}s")
