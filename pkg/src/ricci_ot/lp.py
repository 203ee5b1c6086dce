"""Exact rational linear programming.

solve() runs a two-phase primal simplex with Bland's rule on an all-integer
tableau (see _simplex_py for the pivoting scheme) and converts the result
back to Fractions.  Every optimal solve is re-verified against the original
integer data: primal feasibility, dual feasibility over all real columns,
and strong duality, all as exact integer identities.  A failed check raises
InternalCheckError; there is no tolerance anywhere.

The compiled kernel (ricci_ot._simplex_fast, built from Cython) is used when
available; set RICCI_OT_KERNEL=pure or =compiled to force a choice, or pass
kernel= to solve() for a one-off override.
"""

import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from . import _simplex_py
from .errors import InternalCheckError, RicciOtError

try:
    from . import _simplex_fast
except ImportError:  # pragma: no cover - depends on the build environment
    _simplex_fast = None

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

_ZERO = Fraction(0)


def _pick_default_kernel():
    forced = os.environ.get("RICCI_OT_KERNEL", "").strip().lower()
    if forced == "pure":
        return _simplex_py
    if forced == "compiled":
        if _simplex_fast is None:
            raise RicciOtError("RICCI_OT_KERNEL=compiled but the extension is not built")
        return _simplex_fast
    return _simplex_fast if _simplex_fast is not None else _simplex_py


_default_kernel = _pick_default_kernel()


def active_kernel_name():
    """Name of the pivoting kernel solve() uses by default."""
    return _default_kernel.KERNEL_NAME


def available_kernels():
    names = [_simplex_py.KERNEL_NAME]
    if _simplex_fast is not None:
        names.append(_simplex_fast.KERNEL_NAME)
    return tuple(names)


def _kernel_by_name(name):
    if name is None:
        return _default_kernel
    if name == "pure":
        return _simplex_py
    if name == "compiled":
        if _simplex_fast is None:
            raise RicciOtError("compiled kernel requested but not built")
        return _simplex_fast
    raise RicciOtError(f"unknown kernel {name!r}")


@dataclass(frozen=True)
class LpConstraint:
    coeffs: tuple
    rel: str           # "<=", "=" or ">="
    rhs: Fraction


@dataclass
class LinearProgram:
    """A finite LP over exact rationals.

    Variables default to lower bound 0 and no upper bound; mark_free()
    removes both bounds.  Finite bounds are handled internally by shifting
    (lower) and by an extra row (upper).
    """

    num_vars: int
    objective: tuple
    maximize: bool = False
    constraints: list = field(default_factory=list)
    lower: list = None
    upper: list = None

    def __post_init__(self):
        self.objective = tuple(Fraction(c) for c in self.objective)
        if len(self.objective) != self.num_vars:
            raise RicciOtError("objective length != num_vars")
        if self.lower is None:
            self.lower = [_ZERO] * self.num_vars
        if self.upper is None:
            self.upper = [None] * self.num_vars

    def add_constraint(self, coeffs, rel, rhs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != self.num_vars:
            raise RicciOtError("constraint length != num_vars")
        if rel not in ("<=", "=", ">="):
            raise RicciOtError(f"bad relation {rel!r}")
        self.constraints.append(LpConstraint(coeffs, rel, Fraction(rhs)))

    def mark_free(self, j):
        self.lower[j] = None
        self.upper[j] = None

    def set_lower(self, j, value):
        self.lower[j] = None if value is None else Fraction(value)

    def set_upper(self, j, value):
        self.upper[j] = None if value is None else Fraction(value)


@dataclass(frozen=True)
class LpSolution:
    """Exact solve result.

    For status "optimal", assignment satisfies every constraint exactly and
    duals certify optimality: value == sum(duals[i] * rhs[i]) + the shift
    terms from finite nonzero lower bounds (zero for the common case), with
    dual feasibility in the orientation of the stated program.
    """

    status: str
    value: Fraction = None
    assignment: tuple = None
    duals: tuple = None


def _scale_row(coeffs, rhs):
    """Return (integer coeffs, integer rhs, scale) with scale > 0."""
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    if rhs is not None:
        den = lcm(den, rhs.denominator)
    ints = [int(c * den) for c in coeffs]
    irhs = None if rhs is None else int(rhs * den)
    return ints, irhs, den


def solve(lp, kernel=None):
    """Solve exactly; returns LpSolution with status/value/assignment/duals."""
    kern = _kernel_by_name(kernel)
    n = lp.num_vars

    # ------------------------------------------------------------------
    # Structural columns: shift finite lower bounds to 0, split free vars.
    # col_map[user var] = ("shift", col, lower) or ("free", col+, col-)
    # ------------------------------------------------------------------
    col_map = []
    ncol_struct = 0
    for j in range(n):
        lo, up = lp.lower[j], lp.upper[j]
        if lo is None and up is not None:
            # Only "free below, bounded above" would need mirroring; none of
            # our programs use it and supporting it would be dead code.
            raise RicciOtError("upper bound without lower bound is unsupported")
        if lo is None:
            col_map.append(("free", ncol_struct, ncol_struct + 1))
            ncol_struct += 2
        else:
            col_map.append(("shift", ncol_struct, lo))
            ncol_struct += 1

    # Rows: user constraints (shift-adjusted), then upper-bound rows.
    rows = []           # (dense struct coeffs as Fractions, rel, rhs, user_idx)
    for idx, con in enumerate(lp.constraints):
        dense = [_ZERO] * ncol_struct
        shift = _ZERO
        for j, c in enumerate(con.coeffs):
            if not c:
                continue
            kind = col_map[j]
            if kind[0] == "shift":
                dense[kind[1]] += c
                shift += c * kind[2]
            else:
                dense[kind[1]] += c
                dense[kind[2]] -= c
        rows.append((dense, con.rel, con.rhs - shift, idx))
    for j in range(n):
        up = lp.upper[j]
        if up is not None:
            kind = col_map[j]
            dense = [_ZERO] * ncol_struct
            dense[kind[1]] = Fraction(1)
            rows.append((dense, "<=", up - kind[2], None))

    m = len(rows)

    # ------------------------------------------------------------------
    # Integerize rows (scale by the lcm of denominators, flip to rhs >= 0)
    # and lay out columns: structural | slack/surplus | artificial | rhs.
    # ------------------------------------------------------------------
    int_rows = []
    row_scale = []      # Fraction multiplier applied to the user row
    n_slack = sum(1 for r in rows if r[1] != "=")
    slack_base = ncol_struct
    art_cols = {}
    reader = [None] * m  # column whose reduced cost reads off the row dual
    slack_at = {}
    k = 0
    for i, (dense, rel, rhs, _) in enumerate(rows):
        ints, irhs, den = _scale_row(dense, rhs)
        sigma = 1
        if irhs < 0:
            ints = [-v for v in ints]
            irhs = -irhs
            sigma = -1
            rel = {"<=": ">=", ">=": "<=", "=": "="}[rel]
        int_rows.append((ints, irhs, rel))
        row_scale.append(Fraction(sigma * den))
        if rel != "=":
            slack_at[i] = slack_base + k
            k += 1
    art_base = slack_base + n_slack
    n_art = 0
    basis = [None] * m
    for i, (ints, irhs, rel) in enumerate(int_rows):
        if rel == "<=":
            basis[i] = slack_at[i]
            reader[i] = slack_at[i]
        else:
            art_cols[i] = art_base + n_art
            basis[i] = art_base + n_art
            reader[i] = art_base + n_art
            n_art += 1

    ncols = art_base + n_art + 1
    rhs_col = ncols - 1

    tab = [[0] * ncols]
    for i, (ints, irhs, rel) in enumerate(int_rows):
        row = list(ints) + [0] * (ncols - ncol_struct)
        row[rhs_col] = irhs
        if rel == "<=":
            row[slack_at[i]] = 1
        elif rel == ">=":
            row[slack_at[i]] = -1
        if i in art_cols:
            row[art_cols[i]] = 1
        tab.append(row)

    # Keep pristine copies for post-solve verification.
    orig = [list(r) for r in tab[1:]]

    allowed = [1] * (ncols - 1)
    for c in art_cols.values():
        allowed[c] = 0

    def rebuild(costs, delta):
        row0 = [0] * ncols
        for j in range(ncols - 1):
            cj = costs[j]
            if cj:
                row0[j] = cj * delta
        for i, b in enumerate(basis):
            cb = costs[b]
            if cb:
                row = tab[i + 1]
                for j in range(ncols):
                    row0[j] -= cb * row[j]
        tab[0] = row0

    delta = 1

    # Phase I: drive the artificial variables to zero.
    if n_art:
        costs1 = [0] * (ncols - 1)
        for c in art_cols.values():
            costs1[c] = 1
        rebuild(costs1, delta)
        status, delta = kern.run_pivots(tab, basis, delta, allowed)
        if status == _simplex_py.STATUS_STALLED:
            raise InternalCheckError("phase I exceeded the pivot cap")
        if status == _simplex_py.STATUS_UNBOUNDED:
            raise InternalCheckError("phase I cannot be unbounded")
        if tab[0][rhs_col] != 0:  # -delta * (sum of artificials) != 0
            return LpSolution(status=INFEASIBLE)

    # Phase II on the real objective (internally always minimize).
    s_obj = 1
    for c in lp.objective:
        s_obj = lcm(s_obj, c.denominator)
    sign = -1 if lp.maximize else 1
    costs2 = [0] * (ncols - 1)
    for j, c in enumerate(lp.objective):
        if not c:
            continue
        ic = int(c * s_obj) * sign
        kind = col_map[j]
        if kind[0] == "shift":
            costs2[kind[1]] += ic
        else:
            costs2[kind[1]] += ic
            costs2[kind[2]] -= ic
    rebuild(costs2, delta)
    status, delta = kern.run_pivots(tab, basis, delta, allowed)
    if status == _simplex_py.STATUS_STALLED:
        raise InternalCheckError("phase II exceeded the pivot cap")
    if status == _simplex_py.STATUS_UNBOUNDED:
        return LpSolution(status=UNBOUNDED)

    # ------------------------------------------------------------------
    # Extract the scaled-integer solution and verify it exactly.
    # ------------------------------------------------------------------
    xhat = [0] * (ncols - 1)          # delta * internal variable values
    for i, b in enumerate(basis):
        xhat[b] = tab[i + 1][rhs_col]
    for c in art_cols.values():
        if xhat[c] != 0:
            raise InternalCheckError("artificial variable left at a nonzero level")

    yhat = [-tab[0][reader[i]] for i in range(m)]   # delta * row duals

    for i in range(m):
        ints, irhs, rel = int_rows[i]
        acc = 0
        for j, a in enumerate(ints):
            if a:
                acc += a * xhat[j]
        if i in slack_at:
            col = slack_at[i]
            acc += xhat[col] if rel == "<=" else -xhat[col]
        if acc != irhs * delta:
            raise InternalCheckError("primal feasibility lost")
    if any(v < 0 for v in xhat):
        raise InternalCheckError("negative variable in the final basis")

    # Dual feasibility (reduced cost >= 0) for every real column, computed
    # from the pristine data rather than the pivoted tableau.
    for j in range(art_base):
        acc = costs2[j] * delta
        for i in range(m):
            a = orig[i][j]
            if a:
                acc -= yhat[i] * a
        if acc < 0:
            raise InternalCheckError("dual infeasibility at optimum")

    lhs = sum(costs2[j] * xhat[j] for j in range(art_base) if costs2[j])
    rhs_val = sum(yhat[i] * int_rows[i][1] for i in range(m))
    if lhs != rhs_val:
        raise InternalCheckError("strong duality failed")

    # Map back to user space.
    assign = []
    for j in range(n):
        kind = col_map[j]
        if kind[0] == "shift":
            assign.append(Fraction(xhat[kind[1]], delta) + kind[2])
        else:
            assign.append(Fraction(xhat[kind[1]] - xhat[kind[2]], delta))
    value = sum((c * x for c, x in zip(lp.objective, assign)), _ZERO)

    duals = []
    for i in range(m):
        user_idx = rows[i][3]
        if user_idx is None:
            continue
        y = Fraction(yhat[i], delta) * row_scale[i] / s_obj
        duals.append(-y if lp.maximize else y)

    return LpSolution(
        status=OPTIMAL,
        value=value,
        assignment=tuple(assign),
        duals=tuple(duals),
    )
