# Scalar - Exact rational functions in q, eta, u, a over the rationals

from fractions import Fraction

from sympy import QQ
from sympy.polys.fields import field

from .errors import DivisionByZero, HeckeForgeError, SchemaError, SingularSpecialization

# Closed variable set, listed in monomial order (lex, q first)
VARIABLES = ("q", "eta", "u", "a")

FIELD, Q, ETA, U, A = field(",".join(VARIABLES), QQ)
DOMAIN = FIELD.to_domain()  # Ground domain for DomainMatrix
ZERO = FIELD.zero
ONE = FIELD.one

_GENERATORS = dict(zip(VARIABLES, FIELD.ring.gens))
_ALIASES = {"η": "eta"}  # Accepted spelling of eta in bindings


class LaurentPoly:
    """A Laurent polynomial in q with polynomial dependence on eta, u, a."""

    def __init__(self, terms=None):
        # Exponent vector (q, eta, u, a) -> non-zero Fraction
        self.terms = {}
        for exp, coeff in (terms or {}).items():
            value = Fraction(coeff)
            if value == 0:
                continue
            key = tuple(int(e) for e in exp)
            if len(key) != len(VARIABLES) or min(key[1:], default=0) < 0:
                raise HeckeForgeError(f"Invalid exponent vector {exp!r}")
            self.terms[key] = self.terms.get(key, 0) + value
            if self.terms[key] == 0:
                del self.terms[key]

    @classmethod
    def from_poly(cls, poly):
        """Build from a polynomial of FIELD.ring (non-negative exponents)."""
        return cls({monom: _to_fraction(coeff) for monom, coeff in poly.terms()})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return LaurentPoly({exp: -c for exp, c in self.terms.items()})

    def __add__(self, other):
        merged = dict(self.terms)
        for exp, c in other.terms.items():
            merged[exp] = merged.get(exp, 0) + c
        return LaurentPoly(merged)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        product = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                product[exp] = product.get(exp, 0) + c1 * c2
        return LaurentPoly(product)

    def sorted_terms(self):
        """Terms in the fixed monomial order (lex on q, eta, u, a, descending)."""
        return sorted(self.terms.items(), key=lambda item: item[0], reverse=True)

    def to_ratfunc(self):
        """Convert to an element of FIELD."""
        shift = min((exp[0] for exp in self.terms), default=0)
        shift = min(shift, 0)
        poly = FIELD.ring.from_dict(
            {(exp[0] - shift,) + exp[1:]: QQ(c.numerator, c.denominator) for exp, c in self.terms.items()}
        )
        return FIELD.new(poly, Q.numer**-shift)

    def __repr__(self):
        return f"LaurentPoly({self.sorted_terms()!r})"


def _to_fraction(coeff):
    """Convert a QQ ground element to a Fraction."""
    return Fraction(int(QQ.numer(coeff)), int(QQ.denom(coeff)))


def parse_rational(text):
    """
    Parse a rational number given as int, Fraction or "p/q" string.

    Returns:
        Fraction
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"Not a rational number: {text!r}") from exc


def coerce(value):
    """
    Turn ints, Fractions, rational strings, LaurentPolys and field elements into RatFuncs.

    Args:
        value: Any supported scalar representation

    Returns:
        Element of FIELD
    """
    if FIELD.is_element(value):
        return value
    if isinstance(value, LaurentPoly):
        return value.to_ratfunc()
    r = parse_rational(value)
    return FIELD.ground_new(QQ(r.numerator, r.denominator))


def ratfunc(num, den=None):
    """Build num/den from LaurentPolys (den defaults to 1)."""
    numerator = coerce(num)
    denominator = ONE if den is None else coerce(den)
    if not denominator:
        raise DivisionByZero("RatFunc denominator is the zero polynomial")
    return numerator / denominator


def ratfunc_arith(x, y, op):
    """
    Exact field arithmetic on RatFuncs.

    Args:
        x: Left operand
        y: Right operand (ignored for neg and inv)
        op: One of "add", "sub", "mul", "div", "neg", "inv"

    Returns:
        The resulting RatFunc
    """
    x = coerce(x)
    if op == "neg":
        return -x
    if op == "inv":
        return invert(x)
    y = coerce(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x * invert(y)
    raise HeckeForgeError(f"Unknown arithmetic operation {op!r}")


def invert(x):
    """Multiplicative inverse, raising DivisionByZero on zero."""
    x = coerce(x)
    if not x:
        raise DivisionByZero("Cannot invert the zero rational function")
    return FIELD.new(x.denom, x.numer)


def is_zero(x):
    return not coerce(x).numer


def equal(x, y):
    """Decide x == y by cross-multiplication."""
    x, y = coerce(x), coerce(y)
    return not (x.numer * y.denom - y.numer * x.denom)


def q_power(k):
    """The monomial q^k for any integer k."""
    if k >= 0:
        return Q**k
    return FIELD.new(FIELD.ring.one, Q.numer ** (-k))


def qnum(m):
    """
    The q-number [m]_q = q^{m-1} + q^{m-3} + ... + q^{1-m}.

    Args:
        m: Any integer; [-m]_q = -[m]_q

    Returns:
        LaurentPoly
    """
    sign = 1 if m >= 0 else -1
    size = abs(m)
    return LaurentPoly({(size - 1 - 2 * k, 0, 0, 0): sign for k in range(size)})


def qnum_value(m):
    """[m]_q as a RatFunc."""
    return qnum(m).to_ratfunc()


def normalize_bindings(bindings):
    """
    Validate a binding map and convert its values to QQ.

    Args:
        bindings: Map from variable name to a rational value

    Returns:
        List of (ring generator, QQ value) pairs in variable order
    """
    pairs = []
    names = {}
    for name, value in (bindings or {}).items():
        key = _ALIASES.get(name, name)
        if key not in _GENERATORS:
            raise HeckeForgeError(f"Unknown variable {name!r}; expected one of {VARIABLES}")
        names[key] = parse_rational(value)
    if names.get("q", 1) == 0:
        raise HeckeForgeError("q cannot be specialized to 0")
    for key in VARIABLES:
        if key in names:
            r = names[key]
            pairs.append((_GENERATORS[key], QQ(r.numerator, r.denominator)))
    return pairs


def specialize(x, bindings):
    """
    Substitute rational values for some of q, eta, u, a.

    Args:
        x: RatFunc to specialize
        bindings: Partial map {variable: rational}

    Returns:
        RatFunc in the remaining variables
    """
    x = coerce(x)
    pairs = normalize_bindings(bindings)
    if not pairs:
        return x
    denom = x.denom.subs(pairs)
    # Checked before cancelling, a vanishing numerator would otherwise mask 0/0
    if not denom:
        raise SingularSpecialization(f"Denominator {x.denom.as_expr()} vanishes under {dict(bindings)}")
    numer = x.numer.subs(pairs)
    return FIELD.new(numer, denom)


def ratfunc_to_json(x):
    x = coerce(x)
    return {
        "num": laurent_to_json(LaurentPoly.from_poly(x.numer)),
        "den": laurent_to_json(LaurentPoly.from_poly(x.denom)),
    }


def ratfunc_from_json(doc):
    if not isinstance(doc, dict) or "num" not in doc or "den" not in doc:
        raise SchemaError(f"RatFunc JSON must be an object with num and den, got {doc!r}")
    return ratfunc(laurent_from_json(doc["num"]), laurent_from_json(doc["den"]))


def laurent_to_json(poly):
    out = []
    for exp, coeff in poly.sorted_terms():
        exps = {name: e for name, e in zip(VARIABLES, exp) if e != 0}
        out.append({"coeff": f"{coeff.numerator}/{coeff.denominator}", "exp": exps})
    return out


def laurent_from_json(doc):
    if not isinstance(doc, list):
        raise SchemaError(f"LaurentPoly JSON must be a list, got {type(doc).__name__}")
    terms = {}
    for item in doc:
        try:
            exps = item.get("exp", {})
            unknown = set(exps) - set(VARIABLES)
            if unknown:
                raise SchemaError(f"Unknown exponent keys {sorted(unknown)}")
            exp = tuple(int(exps.get(name, 0)) for name in VARIABLES)
            coeff = parse_rational(item["coeff"])
        except (AttributeError, KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"Malformed LaurentPoly term {item!r}") from exc
        if min(exp[1:]) < 0:
            raise SchemaError(f"Negative exponent outside q in {item!r}")
        terms[exp] = terms.get(exp, 0) + coeff
    return LaurentPoly(terms)
