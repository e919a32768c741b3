# Matrices - Sparse exact matrices over the scalar field

from functools import reduce

from sympy.polys.matrices import DomainMatrix

from .errors import SchemaError
from .scalar import DOMAIN, ONE, coerce, ratfunc_from_json, ratfunc_to_json, specialize


def build(entries, rows, cols=None):
    """
    Build a sparse matrix from {(i, j): value}, dropping zero entries.

    Args:
        entries: Map from 0-based (row, column) pairs to scalars
        rows: Number of rows
        cols: Number of columns (defaults to rows)

    Returns:
        Sparse DomainMatrix over the scalar field
    """
    cols = rows if cols is None else cols
    dod = {}
    for (i, j), value in entries.items():
        value = coerce(value)
        if value:
            dod.setdefault(i, {})[j] = value
    return DomainMatrix(dod, (rows, cols), DOMAIN)


def from_rows(rows):
    """Build a sparse matrix from a dense list of rows."""
    height = len(rows)
    width = len(rows[0]) if rows else 0
    return build({(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row)}, height, width)


def identity(size):
    return build({(i, i): ONE for i in range(size)}, size)


def zeros(rows, cols=None):
    return build({}, rows, cols)


def diagonal(values):
    values = list(values)
    return build({(i, i): v for i, v in enumerate(values)}, len(values))


def unit(size, i, j, value=ONE):
    """The matrix unit value*E_ij (0-based indices)."""
    return build({(i, j): value}, size)


def entries(matrix):
    """Non-zero entries as {(i, j): value}."""
    return {(i, j): v for i, row in matrix.to_dod().items() for j, v in row.items() if v}


def mul(*matrices):
    """Left-to-right matrix product."""
    return reduce(lambda left, right: left.matmul(right), matrices)


def add(*matrices):
    return reduce(lambda left, right: left.add(right), matrices)


def sub(left, right):
    return left.sub(right)


def scale(matrix, scalar):
    scalar = coerce(scalar)
    if not scalar:
        return zeros(*matrix.shape)
    return build({key: v * scalar for key, v in entries(matrix).items()}, *matrix.shape)


def commutator(left, right, factor=ONE):
    """left*right - factor*right*left."""
    return sub(left.matmul(right), scale(right.matmul(left), factor))


def kron(left, right):
    """Kronecker product with the left factor as the outer (slow) index."""
    rows_r, cols_r = right.shape
    right_entries = entries(right)
    product = {}
    for (i, j), x in entries(left).items():
        for (k, m), y in right_entries.items():
            product[(i * rows_r + k, j * cols_r + m)] = x * y
    return build(product, left.shape[0] * rows_r, left.shape[1] * cols_r)


def kron_all(matrices):
    return reduce(kron, matrices)


def is_zero(matrix):
    return not entries(matrix)


def equal(left, right):
    return left.shape == right.shape and is_zero(sub(left, right))


def is_diagonal(matrix):
    return all(i == j for i, j in entries(matrix))


def diagonal_entries(matrix):
    size = matrix.shape[0]
    found = entries(matrix)
    return [found.get((i, i), coerce(0)) for i in range(size)]


def specialize_matrix(matrix, bindings):
    """Specialize every entry; SingularSpecialization propagates."""
    return build({key: specialize(v, bindings) for key, v in entries(matrix).items()}, *matrix.shape)


def transpose(matrix):
    return build({(j, i): v for (i, j), v in entries(matrix).items()}, matrix.shape[1], matrix.shape[0])


def row_reduce(matrix):
    """
    Reduced row echelon form over the function field.

    Returns:
        Tuple (list of non-zero rows as {column: value}, list of pivot columns)
    """
    reduced, pivots = matrix.rref()
    dod = reduced.to_dod()
    rows = []
    for index in range(len(pivots)):
        rows.append({j: v for j, v in dod.get(index, {}).items() if v})
    return rows, list(pivots)


def rank(matrix):
    return len(row_reduce(matrix)[1])


def to_json(matrix):
    """Dense row-major rows of RatFunc JSON."""
    rows, cols = matrix.shape
    found = entries(matrix)
    zero = coerce(0)
    return [[ratfunc_to_json(found.get((i, j), zero)) for j in range(cols)] for i in range(rows)]


def from_json(doc):
    if not isinstance(doc, list) or any(not isinstance(row, list) for row in doc):
        raise SchemaError("Matrix JSON must be a list of rows")
    widths = {len(row) for row in doc}
    if len(widths) > 1:
        raise SchemaError(f"Matrix rows have inconsistent widths {sorted(widths)}")
    return from_rows([[ratfunc_from_json(cell) for cell in row] for row in doc])
