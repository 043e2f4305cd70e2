"""Dense exact linear algebra over a pluggable field.

Vectors are lists of field elements; matrices are lists of row vectors.
Everything here is small (a few hundred rows at most), so plain Gaussian
elimination with exact arithmetic is the right tool.
"""

from .errors import GorlabError


class Span:
    """Incremental row space in reduced echelon form.

    Rows are kept normalized with leading coefficient 1; `add` returns True
    when the vector enlarged the span.
    """

    def __init__(self, field, width):
        self.field = field
        self.width = width
        self.rows = []    # echelon rows, sorted by pivot
        self.pivots = []  # pivot column per row

    def reduce(self, vec):
        F = self.field
        v = list(vec)
        for row, piv in zip(self.rows, self.pivots):
            c = v[piv]
            if not F.is_zero(c):
                for k in range(piv, self.width):
                    v[k] = F.sub(v[k], F.mul(c, row[k]))
        return v

    def add(self, vec):
        F = self.field
        v = self.reduce(vec)
        piv = next((k for k in range(self.width) if not F.is_zero(v[k])), None)
        if piv is None:
            return False
        lead = F.inv(v[piv])
        v = [F.mul(lead, c) for c in v]
        # back-substitute into existing rows to stay fully reduced
        for row in self.rows:
            c = row[piv]
            if not F.is_zero(c):
                for k in range(piv, self.width):
                    row[k] = F.sub(row[k], F.mul(c, v[k]))
        idx = next((i for i, p in enumerate(self.pivots) if p > piv), len(self.pivots))
        self.rows.insert(idx, v)
        self.pivots.insert(idx, piv)
        return True

    def contains(self, vec):
        F = self.field
        return all(F.is_zero(c) for c in self.reduce(vec))

    @property
    def rank(self):
        return len(self.rows)


def rank(matrix, field):
    if not matrix:
        return 0
    span = Span(field, len(matrix[0]))
    for row in matrix:
        span.add(row)
    return span.rank


def rref(matrix, field):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    if not matrix:
        return [], []
    span = Span(field, len(matrix[0]))
    for row in matrix:
        span.add(row)
    return [list(r) for r in span.rows], list(span.pivots)


def kernel_basis(matrix, field, ncols=None):
    """Basis of {v : matrix . v = 0}; matrix given as rows."""
    if ncols is None:
        if not matrix:
            raise GorlabError("kernel of empty matrix needs explicit ncols")
        ncols = len(matrix[0])
    rows, pivots = rref(matrix, field)
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    basis = []
    for j in free:
        v = [field.zero] * ncols
        v[j] = field.one
        for row, piv in zip(rows, pivots):
            v[piv] = field.neg(row[j])
        basis.append(v)
    return basis


def solve_many(matrix, rhs_columns, field):
    """Solve matrix . x = b for each b in rhs_columns (given as columns).

    Returns a list with one particular solution (free variables set to 0)
    per column, or None at positions where the system is inconsistent.
    """
    nrows = len(matrix)
    ncols = len(matrix[0]) if matrix else 0
    nrhs = len(rhs_columns)
    aug = []
    for i in range(nrows):
        aug.append(list(matrix[i]) + [rhs_columns[k][i] for k in range(nrhs)])
    rows, pivots = rref(aug, field)
    solutions = []
    for k in range(nrhs):
        col = ncols + k
        ok = True
        sol = [field.zero] * ncols
        for row, piv in zip(rows, pivots):
            if piv >= ncols:
                if piv == col and not field.is_zero(row[col]):
                    ok = False
                continue
            sol[piv] = row[col]
        # rows with pivot in a different rhs column never obstruct column k,
        # but a pivot in column k itself means 0 = 1
        if ok and any(piv == col for piv in pivots):
            ok = False
        solutions.append(sol if ok else None)
    return solutions


def invert(matrix, field):
    """Inverse of a square matrix, or None if singular."""
    n = len(matrix)
    cols = [[field.one if i == j else field.zero for i in range(n)] for j in range(n)]
    sols = solve_many(matrix, cols, field)
    if any(s is None for s in sols):
        return None
    if rank(matrix, field) < n:
        return None
    return [[sols[j][i] for j in range(n)] for i in range(n)]


def determinant(matrix, field):
    """Determinant by exact Gaussian elimination with row pivoting."""
    n = len(matrix)
    m = [list(row) for row in matrix]
    det = field.one
    for k in range(n):
        piv = next((i for i in range(k, n) if not field.is_zero(m[i][k])), None)
        if piv is None:
            return field.zero
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = field.neg(det)
        det = field.mul(det, m[k][k])
        inv = field.inv(m[k][k])
        for i in range(k + 1, n):
            c = field.mul(m[i][k], inv)
            if field.is_zero(c):
                continue
            for j in range(k, n):
                m[i][j] = field.sub(m[i][j], field.mul(c, m[k][j]))
    return det
