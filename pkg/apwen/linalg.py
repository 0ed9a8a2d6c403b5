"""
Determinants over the integers, over GF(q) and over GF(2).

GF(2) matrices are lists of Python ints, one int per row, bit j of a row
holding column j.
"""


def bareiss_det(matrix):
    """Exact determinant by fraction-free elimination with row pivoting."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            factor = row_i[k]
            for j in range(k + 1, n):
                # exact division
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def bareiss_leading_minors(matrix):
    """
    All leading principal minors of a square matrix from one elimination pass.

    Without pivoting, the k-th Bareiss pivot is the k x k leading minor. The
    returned list stops before the first vanishing minor.
    """
    a = [list(row) for row in matrix]
    n = len(a)
    minors = []
    prev = 1
    for k in range(n):
        pivot = a[k][k]
        if pivot == 0:
            break
        minors.append(pivot)
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return minors


def det_mod(matrix, q):
    """Determinant modulo a prime q by Gaussian elimination over GF(q)."""
    a = [[x % q for x in row] for row in matrix]
    n = len(a)
    det = 1
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if a[r][k]), None)
        if pivot_row is None:
            return 0
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            det = -det
        pivot = a[k][k]
        det = det * pivot % q
        inverse = pow(pivot, q - 2, q)
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            factor = row_i[k] * inverse % q
            if factor:
                for j in range(k, n):
                    row_i[j] = (row_i[j] - factor * row_k[j]) % q
    return det % q


def leading_minors_mod(matrix, q):
    """Leading principal minors modulo q, stopping before the first zero one."""
    a = [[x % q for x in row] for row in matrix]
    n = len(a)
    minors = []
    det = 1
    for k in range(n):
        pivot = a[k][k]
        if pivot == 0:
            break
        det = det * pivot % q
        minors.append(det)
        inverse = pow(pivot, q - 2, q)
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            factor = row_i[k] * inverse % q
            if factor:
                for j in range(k, n):
                    row_i[j] = (row_i[j] - factor * row_k[j]) % q
    return minors


def gf2_det(rows, size):
    """Determinant over GF(2) of a size x size matrix of bit rows."""
    rows = list(rows)
    for col in range(size):
        bit = 1 << col
        pivot = next((r for r in range(col, size) if rows[r] & bit), None)
        if pivot is None:
            return 0
        rows[col], rows[pivot] = rows[pivot], rows[col]
        pivot_row = rows[col]
        for r in range(col + 1, size):
            if rows[r] & bit:
                rows[r] ^= pivot_row
    return 1


def bit_rows(matrix):
    """Pack a 0/1 matrix into bit rows."""
    return [sum(1 << j for j, x in enumerate(row) if x & 1) for row in matrix]
