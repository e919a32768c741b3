# Functor - Balanced tensor product M (x)_H V^{(x)l} carrying the Drinfeldian action

import logging
import random
from fractions import Fraction

from . import matrices, qrep
from .drinfeld import DrinfeldianRep, natural_xi_rep, xi_coproduct
from .errors import NotWellDefined, RankTooSmall, SchemaError, SingularSpecialization
from .heckealg import DEFAULT_SEED, AhaElement, HeckeAlgebra, enumerate_basis
from .qrep import GenWord
from .report import VerificationReport, matrix_check, run_checks
from .scalar import A, ETA, ONE, Q, ZERO, coerce, invert, parse_rational, specialize

_logger = logging.getLogger(__name__)

GENERIC_GUARD_POINTS = 3  # Random specializations used to re-check the quotient rank
MIN_MODULE_RANK = 2
MIN_FUNCTOR_RANK = 2
MODULE_KINDS = ("trivial", "sign")


class HeckeModule:
    """
    A finite-dimensional right module of the modified affine Hecke algebra.

    Matrices act on column coordinate vectors: the coordinates of m.x are
    X @ [m]. A right action composes in reverse, so m.(x y) has matrix Y @ X.
    bindings records parameters already fixed in the entries (for example eta = 0).
    """

    def __init__(self, l, sigma, u, bindings=None):
        self.l = l
        self.sigma = list(sigma)
        self.u = list(u)
        self.bindings = dict(bindings or {})
        if len(self.sigma) != l - 1 or len(self.u) != l:
            raise RankTooSmall(f"A rank {l} module needs {l - 1} sigma and {l} u matrices")
        dims = {m.shape for m in self.sigma + self.u}
        if len(dims) != 1 or any(rows != cols for rows, cols in dims):
            raise RankTooSmall(f"Module matrices must share one square shape, got {sorted(dims)}")

    @property
    def dim(self):
        return self.u[0].shape[0]

    def coefficient(self, value):
        return specialize(value, self.bindings)

    def specialize(self, bindings):
        return HeckeModule(
            self.l,
            [matrices.specialize_matrix(m, bindings) for m in self.sigma],
            [matrices.specialize_matrix(m, bindings) for m in self.u],
            {**self.bindings, **bindings},
        )

    def to_json(self):
        return {
            "l": self.l,
            "dim": self.dim,
            "sigma": [matrices.to_json(m) for m in self.sigma],
            "u": [matrices.to_json(m) for m in self.u],
            "bindings": {name: str(parse_rational(value)) for name, value in self.bindings.items()},
        }

    @classmethod
    def from_json(cls, doc):
        try:
            l = int(doc["l"])
            sigma = [matrices.from_json(rows) for rows in doc["sigma"]]
            u = [matrices.from_json(rows) for rows in doc["u"]]
            bindings = dict(doc.get("bindings", {}))
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"HeckeModule JSON needs l, sigma and u: {exc}") from exc
        try:
            module = cls(l, sigma, u, bindings)
        except RankTooSmall as exc:
            raise SchemaError(str(exc)) from exc
        if "dim" in doc and int(doc["dim"]) != module.dim:
            raise SchemaError(f"Declared dim {doc['dim']} does not match matrix size {module.dim}")
        return module


def specialize_module(module, bindings):
    return module.specialize(bindings)


def builtin_module(kind, l, a=A):
    """
    One-dimensional modules with sigma acting as q (trivial) or -q^{-1} (sign).

    Args:
        kind: "trivial" or "sign"
        l: Rank, at least 2
        a: Eigenvalue of u_1

    Returns:
        HeckeModule, validated before return
    """
    if l < MIN_MODULE_RANK:
        raise RankTooSmall(f"builtin_module needs l >= {MIN_MODULE_RANK}, got {l}")
    if kind == "trivial":
        sigma, ratio, offset = Q, Q * Q, -Q * ETA
    elif kind == "sign":
        sigma, ratio, offset = -invert(Q), invert(Q * Q), invert(Q) * ETA
    else:
        raise SchemaError(f"Unknown module kind {kind!r}; expected one of {MODULE_KINDS}")
    values = [coerce(a)]
    for _ in range(l - 1):
        values.append(ratio * values[-1] + offset)
    module = HeckeModule(
        l,
        [matrices.diagonal([sigma]) for _ in range(l - 1)],
        [matrices.diagonal([value]) for value in values],
    )
    report = validate_module(module)
    if not report.passed:
        raise NotWellDefined(f"Builtin {kind} module fails {[e.relation_id for e in report.failures()]}")
    return module


def regular_hecke_module(l):
    """
    Right regular representation of the finite Hecke algebra H_q(l).

    The affine generators act as zero, which satisfies the cross relation
    exactly when eta = 0, so the module is recorded with that binding.
    """
    algebra = HeckeAlgebra(l, Q, ZERO)
    basis = enumerate_basis(l, 0)
    index = {mono: k for k, mono in enumerate(basis)}
    size = len(basis)
    sigma = []
    for i in range(1, l):
        entries = {}
        for col, mono in enumerate(basis):
            product = AhaElement(algebra, {mono: ONE}) * algebra.sigma(i)
            for target, coeff in product.terms.items():
                entries[(index[target], col)] = coeff
        sigma.append(matrices.build(entries, size))
    u = [matrices.zeros(size) for _ in range(l)]
    return HeckeModule(l, sigma, u, {"eta": 0})


def validate_module(module):
    """
    Check the defining relations on the module matrices (right action, reversed products).

    Args:
        module: HeckeModule

    Returns:
        VerificationReport with quadratic, braid, distant-commutation,
        affine-commutativity, affine-commutation and cross entries
    """
    l, dim = module.l, module.dim
    q = module.coefficient(Q)
    eta = module.coefficient(ETA)
    gap = q - invert(q)
    identity = matrices.identity(dim)
    s, u = module.sigma, module.u
    s_inv = [matrices.sub(m, matrices.scale(identity, gap)) for m in s]

    def quadratic():
        pairs = []
        for i, m in enumerate(s, start=1):
            pairs.append((f"s{i}*s{i}", m.matmul(m), matrices.add(matrices.scale(m, gap), identity)))
            pairs.append((f"s{i}*s{i}^-1", m.matmul(s_inv[i - 1]), identity))
        return matrix_check("quadratic", pairs)

    def braid():
        pairs = [
            (f"s{i}s{i + 1}s{i}", matrices.mul(s[i - 1], s[i], s[i - 1]), matrices.mul(s[i], s[i - 1], s[i]))
            for i in range(1, l - 1)
        ]
        return matrix_check("braid", pairs)

    def distant():
        pairs = [
            (f"s{i}s{j}", s[i - 1].matmul(s[j - 1]), s[j - 1].matmul(s[i - 1]))
            for i in range(1, l)
            for j in range(i + 2, l)
        ]
        return matrix_check("distant-commutation", pairs)

    def affine_commutativity():
        pairs = [
            (f"u{j}u{k}", u[j - 1].matmul(u[k - 1]), u[k - 1].matmul(u[j - 1]))
            for j in range(1, l + 1)
            for k in range(j + 1, l + 1)
        ]
        return matrix_check("affine-commutativity", pairs)

    def affine_commutation():
        pairs = [
            (f"s{i}u{j}", u[j - 1].matmul(s[i - 1]), s[i - 1].matmul(u[j - 1]))
            for i in range(1, l)
            for j in range(1, l + 1)
            if j not in (i, i + 1)
        ]
        return matrix_check("affine-commutation", pairs)

    def cross():
        # sigma_i u_i = u_{i+1} sigma_i^{-1} + eta, products reversed for the right action
        pairs = []
        for i in range(1, l):
            lhs = u[i - 1].matmul(s[i - 1])
            rhs = matrices.add(s_inv[i - 1].matmul(u[i]), matrices.scale(identity, eta))
            pairs.append((f"s{i}u{i}", lhs, rhs))
        return matrix_check("cross", pairs)

    tasks = [quadratic, braid, distant, affine_commutativity, affine_commutation, cross]
    return VerificationReport("module", run_checks(tasks), {"l": l, "dim": dim})


class QuotientSpace:
    """
    The quotient of M (x) V^{(x)l} by the span R of (m.sigma_i) (x) v - m (x) (sigma_i v).

    Ambient coordinates are indexed a*(n+1)^l + beta. The quotient basis is
    the set of non-pivot coordinates of the reduced relation rows.
    """

    def __init__(self, ambient_dim, relation_rows, pivots):
        self.ambient_dim = ambient_dim
        self.relation_rows = relation_rows
        self.pivots = list(pivots)
        pivot_set = set(self.pivots)
        self.basis = [k for k in range(ambient_dim) if k not in pivot_set]
        column = {k: j for j, k in enumerate(self.basis)}
        proj = {}
        for k, j in column.items():
            proj[(j, k)] = ONE
        for p, row in zip(self.pivots, self.relation_rows):
            for k, value in row.items():
                if k in column:
                    proj[(column[k], p)] = -value
        self.projection = matrices.build(proj, self.dim, ambient_dim)
        self.section = matrices.build({(k, j): ONE for j, k in enumerate(self.basis)}, ambient_dim, self.dim)
        self.relation_basis = matrices.build(
            {(k, index): value for index, row in enumerate(self.relation_rows) for k, value in row.items()},
            ambient_dim,
            len(self.relation_rows),
        )

    @property
    def dim(self):
        return len(self.basis)

    @property
    def rank(self):
        return len(self.pivots)

    def preserves(self, operator):
        """Image of R under operator, projected to the quotient; zero when R is invariant."""
        if not self.relation_rows:
            return matrices.zeros(self.dim, 0)
        return matrices.mul(self.projection, operator, self.relation_basis)

    def push(self, operator):
        return matrices.mul(self.projection, operator, self.section)

    def to_json(self):
        return {
            "ambient_dim": self.ambient_dim,
            "dim": self.dim,
            "basis": self.basis,
            "pivots": self.pivots,
            "projection": matrices.to_json(self.projection),
            "section": matrices.to_json(self.section),
        }


def _relation_matrix(module, n, bindings):
    """Stack the transposed generators of R, one block per sigma_i."""
    legs = module.l
    v_dim = (n + 1) ** legs
    identity_m = matrices.identity(module.dim)
    identity_v = matrices.identity(v_dim)
    blocks = []
    for i in range(1, legs):
        t = matrices.specialize_matrix(qrep.sigma_on_tensor(n, legs, i).matrix, bindings)
        generator = matrices.sub(matrices.kron(module.sigma[i - 1], identity_v), matrices.kron(identity_m, t))
        blocks.append(matrices.entries(matrices.transpose(generator)))
    amb = module.dim * v_dim
    stacked = {}
    for offset, block in enumerate(blocks):
        for (row, col), value in block.items():
            stacked[(offset * amb + row, col)] = value
    return matrices.build(stacked, amb * len(blocks), amb)


def _guard_point(rng, bindings):
    point = {
        "q": Fraction(rng.randint(2, 12), rng.randint(13, 29)),
        "eta": Fraction(rng.randint(-20, 20), rng.randint(1, 9)),
        "a": Fraction(rng.randint(-20, 20), rng.randint(1, 9)),
    }
    return {name: value for name, value in point.items() if name not in bindings}


def _genericity_guard(relations, rank, bindings, seed):
    """Recompute the rank at random rational points; raise NotWellDefined on disagreement."""
    rng = random.Random(seed)
    for _ in range(GENERIC_GUARD_POINTS):
        point = _guard_point(rng, bindings)
        try:
            specialized = matrices.specialize_matrix(relations, point)
        except SingularSpecialization:
            _logger.debug("Guard point %s is singular, skipped", point)
            continue
        found = matrices.rank(specialized)
        if found != rank:
            raise NotWellDefined(f"Quotient rank {rank} drops to {found} at {point}; the parameters are not generic")


def _xi_operator(module, n, bindings):
    """Sum over the summands of Delta^{(l)}(xi), with u_i acting on M in the xi slot."""
    legs = module.l
    leg_rep = natural_xi_rep(n).specialize(bindings) if bindings else natural_xi_rep(n)
    identity_m = matrices.identity(module.dim)
    total = matrices.zeros(module.dim * (n + 1) ** legs)
    for summand in xi_coproduct(n, legs).summands():
        value = module.coefficient(summand.coeff)
        if not value:
            continue
        factors = [leg_rep.word_image(GenWord(n, {leg: ONE})) for leg in summand.legs]
        slot = summand.xi_slot
        left = identity_m if slot is None else module.u[slot - 1]
        total = total.add(matrices.scale(matrices.kron(left, matrices.kron_all(factors)), value))
    return total


def build_functor(module, n, seed=DEFAULT_SEED):
    """
    Construct W_M = M (x)_{H_q(l)} V^{(x)l} with its Drinfeldian action.

    Args:
        module: HeckeModule of rank l >= 2
        n: Rank of sl(n+1), at least 2
        seed: Seed for the genericity guard

    Returns:
        Tuple (QuotientSpace, DrinfeldianRep on the quotient)

    Raises:
        NotWellDefined: An installed operator does not preserve R, or the rank is not generic
    """
    if n < MIN_FUNCTOR_RANK:
        raise RankTooSmall(f"build_functor needs n >= {MIN_FUNCTOR_RANK}, got {n}")
    if module.l < MIN_MODULE_RANK:
        raise RankTooSmall(f"build_functor needs l >= {MIN_MODULE_RANK}, got {module.l}")
    legs = module.l
    if legs > n:
        _logger.warning("Level %d exceeds n = %d; the functor is outside its equivalence range", legs, n)
    bindings = module.bindings

    relations = _relation_matrix(module, n, bindings)
    # sympy rref picks the pivots; the span of R and the quotient dimension do not depend on them
    rows, pivots = matrices.row_reduce(relations)
    _genericity_guard(relations, len(pivots), bindings, seed)
    quotient = QuotientSpace(relations.shape[1], rows, pivots)
    _logger.debug("Ambient %d, relation rank %d, quotient %d", quotient.ambient_dim, quotient.rank, quotient.dim)

    tensor = qrep.tensor_rep(n, legs)
    if bindings:
        tensor = tensor.specialize(bindings)
    identity_m = matrices.identity(module.dim)
    operators = {}
    for label, image in tensor.generator_matrices().items():
        operators[label] = matrices.kron(identity_m, image)
    operators["xi"] = _xi_operator(module, n, bindings)

    for label, operator in operators.items():
        image = quotient.preserves(operator)
        if not matrices.is_zero(image):
            raise NotWellDefined(f"Operator {label} does not preserve the balanced tensor relations")

    v_dim = (n + 1) ** legs
    weights = [tensor.weights[k % v_dim] for k in quotient.basis]
    raising = [quotient.push(operators[f"e{i}{i + 1}"]) for i in range(1, n + 1)]
    lowering = [quotient.push(operators[f"e{i + 1}{i}"]) for i in range(1, n + 1)]
    rep = DrinfeldianRep(n, weights, raising, lowering, quotient.push(operators["xi"]), bindings)
    return quotient, rep


def level_check(rep, l):
    """
    True when every weight of rep occurs among the weights of V^{(x)l}.

    Weights are the exponents on the diagonal of the q^{e_kk} images; those of
    V^{(x)l} are the non-negative vectors with entries summing to l.
    """
    for weight in rep.weights:
        if min(weight) < 0 or sum(weight) != l:
            _logger.debug("Weight %s does not occur in V^(x)%d", weight, l)
            return False
    return True
