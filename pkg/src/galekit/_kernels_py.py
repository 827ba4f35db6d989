"""Pure-Python integer kernels (reference implementation).

Both kernels work on integer matrices stored as lists of Python int lists
and use fraction-free (integer-preserving) elimination: after every pivot
each entry equals a minor of the starting matrix, so the division by the
previous pivot is exact and no rational arithmetic is needed.

The compiled module ``_kernels_c`` implements the same three functions with
identical semantics; ``kernels`` picks one at import time.
"""

OPTIMAL = 0
UNBOUNDED = 1


def integer_rank(rows, ncols):
    """Rank of an integer matrix (rows are copied, not mutated)."""
    work = [list(r) for r in rows if any(r)]
    return bareiss_rank(work, ncols, 0, 0, 1)


def bareiss_rank(work, ncols, rank, start, prev):
    """Continue fraction-free elimination of ``work`` from column ``start``.

    ``rank`` rows are already reduced and ``prev`` is the last pivot used.
    """
    nrows = len(work)
    for col in range(start, ncols):
        if rank == nrows:
            break
        piv = None
        for i in range(rank, nrows):
            if work[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        prow = work[rank]
        p = prow[col]
        for i in range(rank + 1, nrows):
            row = work[i]
            f = row[col]
            if f:
                for j in range(col, ncols):
                    row[j] = (row[j] * p - f * prow[j]) // prev
            else:
                for j in range(col, ncols):
                    row[j] = row[j] * p // prev
        prev = p
        rank += 1
    return rank


def pivot(rows, r, c, denom):
    """Integer-preserving pivot on entry (r, c); returns the new denominator.

    The tableau represents ``rows / denom``.  The denominator is kept
    positive by negating everything after a negative pivot.
    """
    prow = rows[r]
    p = prow[c]
    for i, row in enumerate(rows):
        if i == r:
            continue
        f = row[c]
        if f:
            for j, y in enumerate(prow):
                row[j] = (row[j] * p - f * y) // denom
        elif p != denom:
            for j in range(len(row)):
                row[j] = row[j] * p // denom
    if p < 0:
        for row in rows:
            for j in range(len(row)):
                row[j] = -row[j]
        p = -p
    return p


def simplex_iterate(rows, basis, denom, enter_limit):
    """Run Bland's-rule primal simplex on an integer tableau in place.

    ``rows[0]`` is the objective row (negative entry = improving column),
    ``rows[1:]`` are constraints with basic column ``basis[i - 1]``; the last
    column holds right-hand sides.  Only columns below ``enter_limit`` may
    enter.  Returns ``(status, denom)``.
    """
    rhs = len(rows[0]) - 1
    nrows = len(rows)
    while True:
        obj = rows[0]
        enter = -1
        for j in range(enter_limit):
            if obj[j] < 0:
                enter = j
                break
        if enter < 0:
            return OPTIMAL, denom
        leave = -1
        best_num = best_den = 0
        for i in range(1, nrows):
            a = rows[i][enter]
            if a <= 0:
                continue
            b = rows[i][rhs]
            if leave < 0:
                leave, best_num, best_den = i, b, a
                continue
            lhs = b * best_den
            rhs_cmp = best_num * a
            if lhs < rhs_cmp or (lhs == rhs_cmp and basis[i - 1] < basis[leave - 1]):
                leave, best_num, best_den = i, b, a
        if leave < 0:
            return UNBOUNDED, denom
        denom = pivot(rows, leave, enter, denom)
        basis[leave - 1] = enter
