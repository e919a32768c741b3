# Qrep - U_q(sl(n+1)) in weight representations: generator words, tensor powers and Hopf maps

import itertools
import logging

from . import matrices
from .errors import HeckeForgeError, IndexOutOfRange, PositionOutOfRange, RankTooSmall, SchemaError, XiNotAllowed
from .report import VerificationReport, matrix_check, run_checks
from .scalar import ONE, Q, ZERO, coerce, invert, normalize_bindings, q_power, specialize

_logger = logging.getLogger(__name__)

MAX_VERIFY_RANK = 4  # Largest n accepted by verify_uq
HOPF_LEGS = 3  # Tensor power used for coassociativity checks


class RootData:
    """Roots and weights of sl(n+1) written in the basis eps_1..eps_{n+1}."""

    def __init__(self, n):
        if n < 1:
            raise RankTooSmall(f"sl(n+1) needs n >= 1, got {n}")
        self.n = n
        self.size = n + 1

    def unit(self, k):
        """eps_k as a coefficient vector (1-based k)."""
        if not 1 <= k <= self.size:
            raise IndexOutOfRange(f"Index {k} outside 1..{self.size}")
        return tuple(1 if m == k else 0 for m in range(1, self.size + 1))

    def root(self, i, j):
        """eps_i - eps_j."""
        return tuple(a - b for a, b in zip(self.unit(i), self.unit(j)))

    def simple_root(self, i):
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"Simple root index {i} outside 1..{self.n}")
        return self.root(i, i + 1)

    def positive_roots(self):
        return [self.root(i, j) for i, j in itertools.combinations(range(1, self.size + 1), 2)]

    def theta(self):
        return self.root(1, self.size)

    def cartan_matrix(self):
        return [[pairing(self.simple_root(i), self.simple_root(j)) for j in range(1, self.n + 1)] for i in range(1, self.n + 1)]


def pairing(left, right):
    """(eps_i, eps_j) = delta_ij extended bilinearly; delta pairs to zero."""
    return sum(a * b for a, b in zip(left, right))


def _power(base, exponent):
    if exponent >= 0:
        return base**exponent
    return invert(base) ** (-exponent)


class GenSymbol:
    """A generator letter of U_q(sl(n+1)) or the affine generator, with its rank."""

    def __init__(self, n):
        self.n = n

    def key(self):
        raise NotImplementedError

    def weight(self):
        return (0,) * (self.n + 1)

    def __eq__(self, other):
        return type(self) is type(other) and self.n == other.n and self.key() == other.key()

    def __hash__(self):
        return hash((type(self).__name__, self.n, self.key()))


class CartanPower(GenSymbol):
    """q^{sum_k c_k e_kk}."""

    def __init__(self, n, coeffs):
        super().__init__(n)
        self.coeffs = tuple(int(c) for c in coeffs)
        if len(self.coeffs) != n + 1:
            raise RankTooSmall(f"Cartan word needs {n + 1} coefficients, got {len(self.coeffs)}")

    def key(self):
        return self.coeffs

    def __repr__(self):
        return f"q^{_cartan_label(self.coeffs)}"


class CartanBracket(GenSymbol):
    """The q-number [sum_k c_k e_kk + shift]_q."""

    def __init__(self, n, coeffs, shift=0):
        super().__init__(n)
        self.coeffs = tuple(int(c) for c in coeffs)
        self.shift = int(shift)
        if len(self.coeffs) != n + 1:
            raise RankTooSmall(f"Cartan bracket needs {n + 1} coefficients, got {len(self.coeffs)}")

    def key(self):
        return (self.coeffs, self.shift)

    def __repr__(self):
        shift = f"{self.shift:+d}" if self.shift else ""
        return f"[{_cartan_label(self.coeffs)}{shift}]"


class RootGenerator(GenSymbol):
    """e_ij for i != j; Chevalley when |i - j| = 1."""

    def __init__(self, n, i, j):
        super().__init__(n)
        size = n + 1
        if not (1 <= i <= size and 1 <= j <= size) or i == j:
            raise IndexOutOfRange(f"Root generator e_{i}{j} needs distinct indices in 1..{size}")
        self.i = i
        self.j = j

    def key(self):
        return (self.i, self.j)

    def weight(self):
        return RootData(self.n).root(self.i, self.j)

    def is_chevalley(self):
        return abs(self.i - self.j) == 1

    def __repr__(self):
        return f"e{self.i},{self.j}"


class Xi(GenSymbol):
    """The affine generator of weight delta - theta."""

    def key(self):
        return ()

    def weight(self):
        return tuple(-c for c in RootData(self.n).theta())

    def __repr__(self):
        return "xi"


def _cartan_label(coeffs):
    parts = []
    for k, c in enumerate(coeffs, start=1):
        if c:
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            parts.append(f"{sign}{mag}e{k}{k}")
    label = "".join(parts).lstrip("+")
    return label or "0"


class GenWord:
    """Formal linear combination of generator words; never simplified symbolically."""

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        for word, coeff in (terms or {}).items():
            self._add_term(tuple(word), coerce(coeff))

    def _add_term(self, word, coeff):
        for sym in word:
            if sym.n != self.n:
                raise RankTooSmall(f"Symbol {sym!r} has rank {sym.n}, word has rank {self.n}")
        total = self.terms.get(word, ZERO) + coeff
        if total:
            self.terms[word] = total
        else:
            self.terms.pop(word, None)

    @classmethod
    def of(cls, *symbols, coeff=ONE):
        """A single word made of the given symbols."""
        return cls(symbols[0].n, {tuple(symbols): coeff})

    @classmethod
    def scalar(cls, n, value):
        return cls(n, {(): value})

    def is_zero(self):
        return not self.terms

    def has_xi(self):
        return any(isinstance(sym, Xi) for word in self.terms for sym in word)

    def scale(self, value):
        value = coerce(value)
        return GenWord(self.n, {word: c * value for word, c in self.terms.items()})

    def __add__(self, other):
        merged = GenWord(self.n, self.terms)
        for word, c in other.terms.items():
            merged._add_term(word, c)
        return merged

    def __sub__(self, other):
        return self + other.scale(-ONE)

    def __neg__(self):
        return self.scale(-ONE)

    def __mul__(self, other):
        if not isinstance(other, GenWord):
            return self.scale(other)
        product = GenWord(self.n)
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                product._add_term(w1 + w2, c1 * c2)
        return product

    def __rmul__(self, other):
        return self.scale(other)

    def weight(self):
        """Common weight of all words; raises when the word is not homogeneous."""
        weights = {_word_weight(word, self.n) for word in self.terms}
        if len(weights) > 1:
            raise HeckeForgeError(f"GenWord is not weight-homogeneous: {sorted(weights)}")
        return weights.pop() if weights else (0,) * (self.n + 1)

    def expand(self):
        """Replace composite root generators by their Chevalley q-commutator expansions."""
        out = GenWord(self.n)
        for word, coeff in self.terms.items():
            piece = GenWord.scalar(self.n, coeff)
            for sym in word:
                if isinstance(sym, RootGenerator) and not sym.is_chevalley():
                    piece = piece * root_vector(self.n, sym.i, sym.j)
                else:
                    piece = piece * GenWord.of(sym)
            out = out + piece
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for word, coeff in self.terms.items():
            letters = "*".join(repr(sym) for sym in word) or "1"
            parts.append(f"({coeff})*{letters}")
        return " + ".join(parts)


def _word_weight(word, n):
    total = [0] * (n + 1)
    for sym in word:
        for k, w in enumerate(sym.weight()):
            total[k] += w
    return tuple(total)


def q_commutator(x, y, base=Q):
    """
    [x, y]_p = x*y - p^{(wt x, wt y)} * y*x for weight-homogeneous words.

    Args:
        x: Left GenWord
        y: Right GenWord
        base: The deformation parameter p (q by default)

    Returns:
        GenWord
    """
    exponent = pairing(x.weight(), y.weight())
    return x * y - (y * x).scale(_power(coerce(base), exponent))


def commutator(x, y):
    return x * y - y * x


# Named symbols


def e(n, i, j):
    return GenWord.of(RootGenerator(n, i, j))


def unit_coeffs(n, k):
    return RootData(n).unit(k)


def h_coeffs(n, i):
    """Coefficients of h_{alpha_i} = e_ii - e_{i+1,i+1}."""
    return RootData(n).simple_root(i)


def cartan_power(n, coeffs, sign=1):
    return GenWord.of(CartanPower(n, [sign * c for c in coeffs]))


def cartan_bracket(n, coeffs, shift=0):
    return GenWord.of(CartanBracket(n, coeffs, shift))


def chevalley_generators(n):
    """
    Labelled Chevalley generators q^{+-h_i}, e_{i,i+1}, e_{i+1,i}.

    Returns:
        List of (label, GenWord)
    """
    gens = []
    for i in range(1, n + 1):
        gens.append((f"q^h{i}", cartan_power(n, h_coeffs(n, i))))
        gens.append((f"q^-h{i}", cartan_power(n, h_coeffs(n, i), -1)))
        gens.append((f"e{i}{i + 1}", e(n, i, i + 1)))
        gens.append((f"e{i + 1}{i}", e(n, i + 1, i)))
    return gens


def root_vector(n, i, j, k=None):
    """
    Composite root vector e_ij built from Chevalley generators.

    e_ij = [e_ik, e_kj]_{q^-1} for i < k < j and e_ij = [e_ik, e_kj]_q for
    i > k > j. Without k the splitting index next to i is used.

    Args:
        n: Rank
        i: Row index in 1..n+1
        j: Column index in 1..n+1, distinct from i
        k: Optional splitting index strictly between i and j

    Returns:
        GenWord in Chevalley generators only
    """
    sym = RootGenerator(n, i, j)
    if sym.is_chevalley():
        if k is not None:
            raise IndexOutOfRange(f"e_{i}{j} is a Chevalley generator and has no splitting index")
        return GenWord.of(sym)
    step = 1 if j > i else -1
    k = i + step if k is None else k
    if not min(i, j) < k < max(i, j):
        raise IndexOutOfRange(f"Splitting index {k} must lie strictly between {i} and {j}")
    base = invert(Q) if j > i else Q
    return q_commutator(root_vector(n, i, k), root_vector(n, k, j), base)


# Representations


class RepMatrix:
    """A matrix acting on M (x) V^{(x) legs} for V the natural representation."""

    def __init__(self, matrix, n, legs, outer_dim=1):
        self.matrix = matrix
        self.n = n
        self.legs = legs
        self.outer_dim = outer_dim
        expected = outer_dim * (n + 1) ** legs
        if matrix.shape != (expected, expected):
            raise RankTooSmall(f"Matrix shape {matrix.shape} does not match (n={n}, legs={legs}, outer={outer_dim})")

    @property
    def dim(self):
        return self.matrix.shape[0]

    def to_json(self):
        doc = {"n": self.n, "legs": self.legs, "rows": matrices.to_json(self.matrix)}
        if self.outer_dim != 1:
            doc["outer_dim"] = self.outer_dim
        return doc

    @classmethod
    def from_json(cls, doc):
        try:
            return cls(matrices.from_json(doc["rows"]), int(doc["n"]), int(doc["legs"]), int(doc.get("outer_dim", 1)))
        except (KeyError, TypeError) as exc:
            raise SchemaError(f"RepMatrix JSON needs n, legs and rows: {exc}") from exc
        except RankTooSmall as exc:
            raise SchemaError(str(exc)) from exc


class WeightRepresentation:
    """
    A finite-dimensional weight representation of U_q(sl(n+1)).

    Basis vectors carry integer weights (eigenvalues of e_11..e_{n+1,n+1});
    Cartan words act diagonally through them. Matrices act on column vectors,
    so the image of x*y is image(x) @ image(y).
    """

    def __init__(self, n, weights, raising, lowering, bindings=None):
        self.n = n
        self.weights = [tuple(int(c) for c in w) for w in weights]
        self.raising = list(raising)
        self.lowering = list(lowering)
        self.bindings = dict(bindings or {})
        normalize_bindings(self.bindings)
        self.q = specialize(Q, self.bindings)
        self._cache = {}
        if len(self.raising) != n or len(self.lowering) != n:
            raise RankTooSmall(f"Need {n} raising and lowering matrices")
        for matrix in self.raising + self.lowering:
            if matrix.shape != (self.dim, self.dim):
                raise RankTooSmall(f"Generator matrix shape {matrix.shape} does not match dimension {self.dim}")

    @property
    def dim(self):
        return len(self.weights)

    def coefficient(self, value):
        """Evaluate a GenWord coefficient under this representation's bindings."""
        return specialize(value, self.bindings)

    def cartan_power(self, coeffs):
        return matrices.diagonal(_power(self.q, pairing(coeffs, w)) for w in self.weights)

    def cartan_bracket(self, coeffs, shift=0):
        return matrices.diagonal(self._qnum(pairing(coeffs, w) + shift) for w in self.weights)

    def _qnum(self, m):
        sign = 1 if m >= 0 else -1
        size = abs(m)
        total = ZERO
        for k in range(size):
            total += _power(self.q, size - 1 - 2 * k)
        return total * sign

    def xi_image(self):
        raise XiNotAllowed("This representation carries no image for the affine generator")

    def symbol_image(self, sym):
        cached = self._cache.get(sym)
        if cached is not None:
            return cached
        if isinstance(sym, CartanPower):
            image = self.cartan_power(sym.coeffs)
        elif isinstance(sym, CartanBracket):
            image = self.cartan_bracket(sym.coeffs, sym.shift)
        elif isinstance(sym, RootGenerator):
            if sym.j == sym.i + 1:
                image = self.raising[sym.i - 1]
            elif sym.i == sym.j + 1:
                image = self.lowering[sym.j - 1]
            else:
                image = self.word_image(root_vector(self.n, sym.i, sym.j))
        elif isinstance(sym, Xi):
            image = self.xi_image()
        else:
            raise HeckeForgeError(f"Unknown generator symbol {sym!r}")
        self._cache[sym] = image
        return image

    def word_image(self, word):
        """
        Matrix of a GenWord in this representation.

        Args:
            word: GenWord of matching rank

        Returns:
            DomainMatrix of size dim x dim
        """
        if word.n != self.n:
            raise RankTooSmall(f"Word of rank {word.n} evaluated in a rank {self.n} representation")
        total = matrices.zeros(self.dim)
        for letters, coeff in word.terms.items():
            value = self.coefficient(coeff)
            if not value:
                continue
            if letters:
                product = matrices.mul(*(self.symbol_image(sym) for sym in letters))
            else:
                product = matrices.identity(self.dim)
            total = total.add(matrices.scale(product, value))
        return total

    def generator_matrices(self):
        """Labelled images of q^{+-e_kk}, e_{i,i+1} and e_{i+1,i}."""
        out = {}
        for k in range(1, self.n + 2):
            out[f"q^e{k}{k}"] = self.cartan_power(unit_coeffs(self.n, k))
            out[f"q^-e{k}{k}"] = self.cartan_power(tuple(-c for c in unit_coeffs(self.n, k)))
        for i in range(1, self.n + 1):
            out[f"e{i}{i + 1}"] = self.raising[i - 1]
            out[f"e{i + 1}{i}"] = self.lowering[i - 1]
        return out

    def specialize(self, bindings):
        """Specialize every matrix entry; SingularSpecialization propagates."""
        merged = {**self.bindings, **bindings}
        return WeightRepresentation(
            self.n,
            self.weights,
            [matrices.specialize_matrix(m, bindings) for m in self.raising],
            [matrices.specialize_matrix(m, bindings) for m in self.lowering],
            merged,
        )


def natural_rep(n):
    """
    The natural (n+1)-dimensional representation, e_ij v_k = delta_jk v_i.

    Args:
        n: Rank, at least 1

    Returns:
        WeightRepresentation with basis weights eps_1..eps_{n+1}
    """
    data = RootData(n)
    size = data.size
    raising = [matrices.unit(size, i - 1, i) for i in range(1, n + 1)]
    lowering = [matrices.unit(size, i, i - 1) for i in range(1, n + 1)]
    return WeightRepresentation(n, [data.unit(k) for k in range(1, size + 1)], raising, lowering)


def tensor_product(left, right):
    """
    Representation on left (x) right through the coproduct.

    Delta(e_i) = e_i (x) 1 + q^{-h_i} (x) e_i, Delta(f_i) = f_i (x) q^{h_i} + 1 (x) f_i.
    """
    if left.n != right.n:
        raise RankTooSmall(f"Cannot tensor ranks {left.n} and {right.n}")
    n = left.n
    id_left, id_right = matrices.identity(left.dim), matrices.identity(right.dim)
    raising, lowering = [], []
    for i in range(1, n + 1):
        h = h_coeffs(n, i)
        k_inv_left = left.cartan_power(tuple(-c for c in h))
        k_right = right.cartan_power(h)
        raising.append(
            matrices.add(matrices.kron(left.raising[i - 1], id_right), matrices.kron(k_inv_left, right.raising[i - 1]))
        )
        lowering.append(
            matrices.add(matrices.kron(left.lowering[i - 1], k_right), matrices.kron(id_left, right.lowering[i - 1]))
        )
    weights = [tuple(a + b for a, b in zip(wl, wr)) for wl in left.weights for wr in right.weights]
    return WeightRepresentation(n, weights, raising, lowering, {**right.bindings, **left.bindings})


def tensor_rep(n, legs, bracketing="left", base=None):
    """
    The representation Delta^{(legs)} on V^{(x) legs}.

    Args:
        n: Rank
        legs: Number of tensor factors, at least 1
        bracketing: "left" for ((V V) V)..., "right" for V (V (V ...))
        base: Optional single-leg representation (natural by default)

    Returns:
        WeightRepresentation of dimension (n+1)^legs
    """
    if legs < 1:
        raise PositionOutOfRange(f"Tensor power needs at least one leg, got {legs}")
    base = base or natural_rep(n)
    if bracketing == "left":
        rep = base
        for _ in range(legs - 1):
            rep = tensor_product(rep, base)
        return rep
    if bracketing == "right":
        rep = base
        for _ in range(legs - 1):
            rep = tensor_product(base, rep)
        return rep
    raise HeckeForgeError(f"Unknown bracketing {bracketing!r}")


def closed_form_coproduct(n, legs, label):
    """
    Delta^{(legs)} of a Chevalley generator from the summed-position closed form.

    Args:
        n: Rank
        legs: Number of legs
        label: Label from chevalley_generators

    Returns:
        DomainMatrix on V^{(x) legs}
    """
    base = natural_rep(n)
    identity = matrices.identity(base.dim)
    for i in range(1, n + 1):
        h = h_coeffs(n, i)
        if label in (f"q^h{i}", f"q^-h{i}"):
            sign = 1 if label == f"q^h{i}" else -1
            k = base.cartan_power(tuple(sign * c for c in h))
            return matrices.kron_all([k] * legs)
        if label == f"e{i}{i + 1}":
            k_inv = base.cartan_power(tuple(-c for c in h))
            terms = [
                matrices.kron_all([k_inv] * p + [base.raising[i - 1]] + [identity] * (legs - p - 1))
                for p in range(legs)
            ]
            return matrices.add(*terms)
        if label == f"e{i + 1}{i}":
            k = base.cartan_power(h)
            terms = [
                matrices.kron_all([identity] * p + [base.lowering[i - 1]] + [k] * (legs - p - 1))
                for p in range(legs)
            ]
            return matrices.add(*terms)
    raise HeckeForgeError(f"Unknown generator label {label!r}")


def t_operator(n):
    """
    The operator T on V (x) V.

    T(v_r v_r) = q v_r v_r, T(v_r v_s) = v_s v_r for r < s and
    T(v_r v_s) = v_s v_r + (q - q^{-1}) v_r v_s for r > s.

    Returns:
        RepMatrix with legs=2
    """
    size = RootData(n).size
    gap = Q - invert(Q)
    entries = {}
    for r in range(size):
        for s in range(size):
            column = r * size + s
            if r == s:
                entries[(column, column)] = Q
            else:
                entries[(s * size + r, column)] = ONE
                if r > s:
                    entries[(column, column)] = gap
    return RepMatrix(matrices.build(entries, size * size), n, 2)


def sigma_on_tensor(n, legs, i):
    """
    sigma_i acting on V^{(x) legs} as T on legs (i, i+1).

    Args:
        n: Rank
        legs: Number of tensor factors
        i: Position in 1..legs-1

    Returns:
        RepMatrix
    """
    if not 1 <= i <= legs - 1:
        raise PositionOutOfRange(f"sigma_{i} needs 1 <= i <= {legs - 1}")
    size = n + 1
    before = matrices.identity(size ** (i - 1))
    after = matrices.identity(size ** (legs - i - 1))
    return RepMatrix(matrices.kron_all([before, t_operator(n).matrix, after]), n, legs)


# Hopf structure


def _symbol_coproduct(sym, xi_rule):
    """Two-leg expansion of one symbol as {(left word, right word): coeff}."""
    n = sym.n
    if isinstance(sym, CartanPower):
        return {((sym,), (sym,)): ONE}
    if isinstance(sym, CartanBracket):
        # [a + b]_q = [a]_q q^{-b} + q^{a} [b]_q, regular at q = 1
        negative = CartanPower(n, [-c for c in sym.coeffs])
        positive = CartanPower(n, sym.coeffs)
        return {
            ((sym,), (negative,)): ONE,
            ((positive,), (CartanBracket(n, sym.coeffs),)): q_power(sym.shift),
        }
    if isinstance(sym, RootGenerator):
        if sym.j == sym.i + 1:
            k_inv = CartanPower(n, [-c for c in h_coeffs(n, sym.i)])
            return {((sym,), ()): ONE, ((k_inv,), (sym,)): ONE}
        if sym.i == sym.j + 1:
            k = CartanPower(n, h_coeffs(n, sym.j))
            return {((sym,), (k,)): ONE, ((), (sym,)): ONE}
        raise HeckeForgeError(f"Composite {sym!r} must be expanded before splitting")
    if isinstance(sym, Xi):
        if xi_rule is None:
            raise XiNotAllowed("The U_q coproduct cannot split the affine generator")
        return xi_rule(n)
    raise HeckeForgeError(f"Unknown generator symbol {sym!r}")


def coproduct_terms(word, xi_rule=None):
    """
    Two-leg coproduct of a GenWord, multiplied out symbol by symbol.

    Args:
        word: GenWord (composite root generators are expanded first)
        xi_rule: Optional callable n -> two-leg expansion of the affine generator

    Returns:
        Dict {(left letters, right letters): coeff}
    """
    result = {}
    for letters, coeff in word.expand().terms.items():
        partial = {((), ()): coeff}
        for sym in letters:
            split = _symbol_coproduct(sym, xi_rule)
            nxt = {}
            for (l1, r1), c1 in partial.items():
                for (l2, r2), c2 in split.items():
                    key = (l1 + l2, r1 + r2)
                    total = nxt.get(key, ZERO) + c1 * c2
                    if total:
                        nxt[key] = total
                    else:
                        nxt.pop(key, None)
            partial = nxt
        for key, c in partial.items():
            total = result.get(key, ZERO) + c
            if total:
                result[key] = total
            else:
                result.pop(key, None)
    return result


def _letters(n, letters):
    return GenWord(n, {tuple(letters): ONE})


def _symbol_antipode(sym, xi_rule):
    n = sym.n
    if isinstance(sym, CartanPower):
        return cartan_power(n, sym.coeffs, -1)
    if isinstance(sym, CartanBracket):
        return cartan_bracket(n, [-c for c in sym.coeffs], sym.shift)
    if isinstance(sym, RootGenerator):
        if sym.j == sym.i + 1:
            return (cartan_power(n, h_coeffs(n, sym.i)) * GenWord.of(sym)).scale(-ONE)
        if sym.i == sym.j + 1:
            return (GenWord.of(sym) * cartan_power(n, h_coeffs(n, sym.j), -1)).scale(-ONE)
        raise HeckeForgeError(f"Composite {sym!r} must be expanded before the antipode")
    if isinstance(sym, Xi):
        if xi_rule is None:
            raise XiNotAllowed("The U_q antipode cannot act on the affine generator")
        return xi_rule(n)
    raise HeckeForgeError(f"Unknown generator symbol {sym!r}")


def antipode_image(word, xi_rule=None):
    """
    Anti-homomorphic extension of S_q to a GenWord.

    Args:
        word: GenWord; it may contain the affine generator only with xi_rule
        xi_rule: Optional callable n -> GenWord for S(xi)

    Returns:
        GenWord
    """
    if word.has_xi() and xi_rule is None:
        raise XiNotAllowed("antipode_image received a word containing the affine generator")
    out = GenWord(word.n)
    for letters, coeff in word.expand().terms.items():
        piece = GenWord.scalar(word.n, coeff)
        for sym in reversed(letters):
            piece = piece * _symbol_antipode(sym, xi_rule)
        out = out + piece
    return out


def counit(word):
    """epsilon extended multiplicatively; zero on root generators and xi."""
    total = ZERO
    for letters, coeff in word.terms.items():
        value = coeff
        for sym in letters:
            if isinstance(sym, (RootGenerator, Xi)):
                value = ZERO
                break
            if isinstance(sym, CartanBracket):
                value = value * _qnum_symbolic(sym.shift)
        total += value
    return total


def _qnum_symbolic(m):
    sign = 1 if m >= 0 else -1
    return sum((q_power(abs(m) - 1 - 2 * k) for k in range(abs(m))), ZERO) * sign


def coproduct_power(word, legs, bracketing="left"):
    """
    Image of Delta^{(legs)}(word) on V^{(x) legs}.

    Args:
        word: GenWord without the affine generator
        legs: Number of legs, at least 1
        bracketing: Order of the iterated coproduct

    Returns:
        RepMatrix
    """
    if word.has_xi():
        raise XiNotAllowed("coproduct_power received a word containing the affine generator")
    rep = tensor_rep(word.n, legs, bracketing)
    return RepMatrix(rep.word_image(word), word.n, legs)


def two_leg_image(terms, left, right, n):
    """Sum of coeff * kron(left(a), right(b)) over a two-leg expansion."""
    total = matrices.zeros(left.dim * right.dim)
    for (a, b), coeff in terms.items():
        value = left.coefficient(coeff)
        if value:
            term = matrices.kron(left.word_image(_letters(n, a)), right.word_image(_letters(n, b)))
            total = total.add(matrices.scale(term, value))
    return total


# Verification


def _word_checks(rep, relation_id, items):
    """matrix_check over (label, lhs GenWord, rhs GenWord) evaluated in rep."""
    return matrix_check(relation_id, ((label, rep.word_image(lhs), rep.word_image(rhs)) for label, lhs, rhs in items))


def _cartan_invertibility(n):
    for i in range(1, n + 1):
        k, k_inv = cartan_power(n, h_coeffs(n, i)), cartan_power(n, h_coeffs(n, i), -1)
        yield f"K{i}*K{i}^-1", k * k_inv, GenWord.scalar(n, ONE)
        yield f"K{i}^-1*K{i}", k_inv * k, GenWord.scalar(n, ONE)
    for m in range(1, n + 2):
        p, p_inv = cartan_power(n, unit_coeffs(n, m)), cartan_power(n, unit_coeffs(n, m), -1)
        yield f"q^e{m}{m}*q^-e{m}{m}", p * p_inv, GenWord.scalar(n, ONE)


def _cartan_commutativity(n):
    for i, j in itertools.combinations(range(1, n + 1), 2):
        a, b = cartan_power(n, h_coeffs(n, i)), cartan_power(n, h_coeffs(n, j))
        yield f"K{i}K{j}", a * b, b * a


def _weight_relations(n):
    data = RootData(n)
    for i in range(1, n + 1):
        k, k_inv = cartan_power(n, h_coeffs(n, i)), cartan_power(n, h_coeffs(n, i), -1)
        for j in range(1, n + 1):
            a = pairing(data.simple_root(i), data.simple_root(j))
            yield f"K{i}e{j}", k * e(n, j, j + 1) * k_inv, e(n, j, j + 1).scale(q_power(a))
            yield f"K{i}f{j}", k * e(n, j + 1, j) * k_inv, e(n, j + 1, j).scale(q_power(-a))


def _chevalley_commutators(n):
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            rhs = cartan_bracket(n, h_coeffs(n, i)) if i == j else GenWord(n)
            yield f"[e{i},f{j}]", commutator(e(n, i, i + 1), e(n, j + 1, j)), rhs


def _distant_serre(n):
    for i, j in itertools.combinations(range(1, n + 1), 2):
        if j - i >= 2:
            yield f"[e{i},e{j}]", commutator(e(n, i, i + 1), e(n, j, j + 1)), GenWord(n)
            yield f"[f{i},f{j}]", commutator(e(n, i + 1, i), e(n, j + 1, j)), GenWord(n)


def _q_serre(n):
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if abs(i - j) == 1:
                ei, ej = e(n, i, i + 1), e(n, j, j + 1)
                fi, fj = e(n, i + 1, i), e(n, j + 1, j)
                yield f"[[e{i},e{j}]q,e{j}]q", q_commutator(q_commutator(ei, ej), ej), GenWord(n)
                yield f"[[f{i},f{j}]q,f{j}]q", q_commutator(q_commutator(fi, fj), fj), GenWord(n)


UQ_FAMILIES = (
    ("cartan-invertibility", _cartan_invertibility),
    ("cartan-commutativity", _cartan_commutativity),
    ("weight", _weight_relations),
    ("chevalley-commutator", _chevalley_commutators),
    ("distant-serre", _distant_serre),
    ("q-serre", _q_serre),
)


def check_uq_relations(rep, subject="uq"):
    """
    Check every relation family of U_q(sl(n+1)) as exact matrix identities in rep.

    Args:
        rep: WeightRepresentation
        subject: Report subject

    Returns:
        VerificationReport with one entry per family
    """
    n = rep.n
    tasks = [lambda rid=rid, fam=fam: _word_checks(rep, rid, list(fam(n))) for rid, fam in UQ_FAMILIES]
    return VerificationReport(subject, run_checks(tasks), {"n": n, "dim": rep.dim})


def _coassociativity_check(n):
    left = tensor_rep(n, HOPF_LEGS, "left")
    right = tensor_rep(n, HOPF_LEGS, "right")
    pairs = []
    for label, word in chevalley_generators(n):
        image = left.word_image(word)
        pairs.append((f"{label}:left-right", image, right.word_image(word)))
        pairs.append((f"{label}:left-closed", image, closed_form_coproduct(n, HOPF_LEGS, label)))
    return matrix_check("coassociativity", pairs)


def _hopf_generators(n):
    gens = list(chevalley_generators(n))
    for m in range(1, n + 2):
        gens.append((f"q^e{m}{m}", cartan_power(n, unit_coeffs(n, m))))
    return gens


def _antipode_check(n):
    base = natural_rep(n)
    identity = matrices.identity(base.dim)
    pairs = []
    for label, word in _hopf_generators(n):
        expected = matrices.scale(identity, counit(word))
        left_sum = matrices.zeros(base.dim)
        right_sum = matrices.zeros(base.dim)
        for (a, b), coeff in coproduct_terms(word).items():
            wa, wb = _letters(n, a), _letters(n, b)
            left_sum = left_sum.add(matrices.scale(base.word_image(antipode_image(wa)).matmul(base.word_image(wb)), coeff))
            right_sum = right_sum.add(matrices.scale(base.word_image(wa).matmul(base.word_image(antipode_image(wb))), coeff))
        pairs.append((f"{label}:S(x1)x2", left_sum, expected))
        pairs.append((f"{label}:x1S(x2)", right_sum, expected))
    return matrix_check("antipode", pairs)


def _counit_check(n):
    base = natural_rep(n)
    pairs = []
    for label, word in _hopf_generators(n):
        expected = base.word_image(word)
        left_sum = matrices.zeros(base.dim)
        right_sum = matrices.zeros(base.dim)
        for (a, b), coeff in coproduct_terms(word).items():
            wa, wb = _letters(n, a), _letters(n, b)
            left_sum = left_sum.add(matrices.scale(base.word_image(wb), coeff * counit(wa)))
            right_sum = right_sum.add(matrices.scale(base.word_image(wa), coeff * counit(wb)))
        pairs.append((f"{label}:(eps x id)", left_sum, expected))
        pairs.append((f"{label}:(id x eps)", right_sum, expected))
    return matrix_check("counit", pairs)


def verify_hopf(n):
    """
    Coassociativity, antipode and counit axioms on every generator.

    Returns:
        VerificationReport with entries coassociativity, antipode, counit
    """
    RootData(n)
    tasks = [lambda: _coassociativity_check(n), lambda: _antipode_check(n), lambda: _counit_check(n)]
    return VerificationReport("hopf", run_checks(tasks), {"n": n})


def verify_uq(n):
    """
    Verify U_q(sl(n+1)) in the natural representation, in Delta^{(2)} and its Hopf axioms.

    Args:
        n: Rank, 1..4

    Returns:
        VerificationReport with natural/*, coproduct2/* and hopf/* entries
    """
    RootData(n)
    if n > MAX_VERIFY_RANK:
        raise HeckeForgeError(f"verify_uq supports n <= {MAX_VERIFY_RANK}, got {n}")
    _logger.debug("Verifying U_q(sl(%d))", n + 1)
    reports = [
        check_uq_relations(natural_rep(n), "natural"),
        check_uq_relations(tensor_rep(n, 2), "coproduct2"),
        verify_hopf(n),
    ]
    return VerificationReport.combine("uq", reports, {"n": n})
