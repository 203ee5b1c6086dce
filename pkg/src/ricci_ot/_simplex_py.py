"""Pure-Python pivoting kernel for the exact simplex.

The tableau is all-integer: row 0 holds delta * (reduced costs) with
tab[0][-1] = -delta * objective, rows 1..m hold the constraints with the
right-hand side in the last column, and the true rational tableau is
tab / delta.  Pivoting uses the fraction-free update

    tab'[i][j] = (pivot * tab[i][j] - tab[i][enter] * tab[r][j]) // delta

whose divisions are exact (every entry stays a determinant of a bordered
submatrix of the original integer data), so no rationals and no gcd work
appear in the inner loop.

ricci_ot._simplex_fast is a compiled twin of this module; both must produce
bit-identical tableaus.  Keep the two in sync.
"""

STATUS_OPTIMAL = 0
STATUS_UNBOUNDED = 1
STATUS_STALLED = 2

KERNEL_NAME = "pure"


def run_pivots(tab, basis, delta, allowed, max_pivots=1_000_000):
    """Run Bland-rule pivots in place until optimality or unboundedness.

    tab:     list of integer rows, row 0 = objective, last column = rhs.
    basis:   basis[i] = column index of the basic variable of row i + 1.
    delta:   current positive pivot denominator (1 for a fresh tableau).
    allowed: per-column flags (0/1); columns with 0 never enter the basis.

    Returns (status, delta).  Bland's rule (smallest eligible entering
    column, smallest basic variable among ratio ties) guarantees
    termination; max_pivots is a defensive cap only.
    """
    m = len(tab) - 1
    ncols = len(tab[0])
    rhs = ncols - 1

    for _ in range(max_pivots):
        row0 = tab[0]
        enter = -1
        for j in range(rhs):
            if allowed[j] and row0[j] < 0:
                enter = j
                break
        if enter < 0:
            return STATUS_OPTIMAL, delta

        # Ratio test: min tab[i][rhs] / tab[i][enter] over rows with a
        # positive pivot entry, compared by cross-multiplication.
        leave = -1
        best_num = best_den = 0
        for i in range(1, m + 1):
            a = tab[i][enter]
            if a > 0:
                b = tab[i][rhs]
                if leave < 0:
                    leave, best_num, best_den = i, b, a
                else:
                    lhs = b * best_den
                    rht = best_num * a
                    if lhs < rht or (lhs == rht and basis[i - 1] < basis[leave - 1]):
                        leave, best_num, best_den = i, b, a
        if leave < 0:
            return STATUS_UNBOUNDED, delta

        prow = tab[leave]
        piv = prow[enter]
        for i in range(m + 1):
            if i == leave:
                continue
            row = tab[i]
            f = row[enter]
            if f == 0:
                for j in range(ncols):
                    row[j] = piv * row[j] // delta
            else:
                for j in range(ncols):
                    row[j] = (piv * row[j] - f * prow[j]) // delta
        basis[leave - 1] = enter
        delta = piv

    return STATUS_STALLED, delta
