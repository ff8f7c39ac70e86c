"""Element expressions: a small parser and deterministic pretty-printers.

Grammar (whitespace insensitive):

    expr    :=  ['-'] term  (('+' | '-') term)*
    term    :=  product [ '(x)' product ]        tensor separator
    product :=  wedged ('*' wedged)*
    wedged  :=  power ('^^' power)*              wedge, exterior side only
    power   :=  atom ['^' INTEGER]
    atom    :=  NUMBER | SYMBOL | '(' expr ')'
    NUMBER  :=  digits ['/' digits]

The same grammar serves four contexts which differ only in the symbols
they admit and the algebra the operators act in:

    symmetric   S(g); symbols H1 H2 H E F E1 E2 F1 F2 a
    tensor      S(g) (x) Lambda(p); right of '(x)' the symbols E1 E2 F1 F2
                denote exterior generators and '^^' is their product
    enveloping  U(sl3) with normal-form products
    clifford    C(p); symbols E1 E2 F1 F2

H and a abbreviate H1 - H2 and H1 + H2.  Printing emits one term per
canonical key, so parse(print(x)) recovers x exactly, and print(parse(s))
canonicalizes s.
"""

from __future__ import annotations

from fractions import Fraction

from . import clifford as cl
from . import enveloping as env
from . import lie
from . import symext

CONTEXTS = ("symmetric", "enveloping", "clifford", "tensor")


class ExprError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position


_TOKEN_OPS = ("+", "-", "*", ")", "(")


def tokenize(text: str) -> list:
    """Token stream of (kind, value, position) triples."""
    out = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "(":
            j = i + 1
            while j < n and text[j].isspace():
                j += 1
            if j < n and text[j] == "x":
                k = j + 1
                while k < n and text[k].isspace():
                    k += 1
                if k < n and text[k] == ")":
                    out.append(("tensor", "(x)", i))
                    i = k + 1
                    continue
            out.append(("lparen", "(", i))
            i += 1
            continue
        if ch == ")":
            out.append(("rparen", ")", i))
            i += 1
            continue
        if ch == "^":
            if i + 1 < n and text[i + 1] == "^":
                out.append(("wedge", "^^", i))
                i += 2
            else:
                out.append(("power", "^", i))
                i += 1
            continue
        if ch in "+-*":
            out.append(("op", ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            num = int(text[i:j])
            den = 1
            if j < n and text[j] == "/":
                k = j + 1
                if k >= n or not text[k].isdigit():
                    raise ExprError("expected digits after '/'", j)
                j = k
                while j < n and text[j].isdigit():
                    j += 1
                den = int(text[k:j])
            out.append(("number", Fraction(num, den), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum()):
                j += 1
            out.append(("symbol", text[i:j], i))
            i = j
            continue
        raise ExprError("unexpected character %r" % ch, i)
    out.append(("end", "", n))
    return out


def _sym_tables():
    table = {name: symext.sym_gen(i) for i, name in enumerate(lie.BASIS_NAMES)}
    table["H"] = symext.from_gvector(lie.H_VEC)
    table["a"] = symext.from_gvector(lie.A_VEC)
    return table


def _ext_table():
    return {lie.BASIS_NAMES[i]: symext.ext_gen(i) for i in lie.P_INDICES}


def _u_table():
    table = {name: env.u_gen(i) for i, name in enumerate(lie.BASIS_NAMES)}
    table["H"] = env.from_gvector(lie.H_VEC)
    table["a"] = env.from_gvector(lie.A_VEC)
    return table


def _c_table():
    return {lie.BASIS_NAMES[i]: cl.c_gen(i) for i in lie.P_INDICES}


class _Parser:
    def __init__(self, tokens, symbols, ext_symbols, scalar, allow_tensor):
        self.tokens = tokens
        self.pos = 0
        self.symbols = symbols
        self.ext_symbols = ext_symbols
        self.scalar = scalar
        self.allow_tensor = allow_tensor

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message):
        raise ExprError(message, self.peek()[2])

    def parse(self):
        value = self.expr(False)
        if self.peek()[0] != "end":
            self.fail("unexpected trailing input")
        return value

    def expr(self, ext_mode):
        negative = False
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.advance()
            negative = val == "-"
        value = self.term(ext_mode)
        if negative:
            value = -value
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.advance()
                rhs = self.term(ext_mode)
                value = value - rhs if val == "-" else value + rhs
            else:
                return value

    def term(self, ext_mode):
        value = self.product(ext_mode)
        if self.peek()[0] == "tensor":
            if ext_mode or not self.allow_tensor:
                self.fail("'(x)' is only available in the tensor context")
            self.advance()
            value = value * self.product(True)
        return value

    def product(self, ext_mode):
        value = self.wedged(ext_mode)
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.advance()
                value = value * self.wedged(ext_mode)
            else:
                return value

    def wedged(self, ext_mode):
        value = self.power(ext_mode)
        while self.peek()[0] == "wedge":
            if not ext_mode:
                self.fail("'^^' is only available in the exterior leg")
            self.advance()
            value = value * self.power(ext_mode)
        return value

    def power(self, ext_mode):
        value = self.atom(ext_mode)
        if self.peek()[0] == "power":
            self.advance()
            kind, val, _ = self.peek()
            if kind != "number" or val.denominator != 1:
                self.fail("expected an integer exponent")
            self.advance()
            value = value ** val.numerator
        return value

    def atom(self, ext_mode):
        kind, val, _ = self.peek()
        if kind == "number":
            self.advance()
            return self.scalar(val)
        if kind == "symbol":
            table = self.ext_symbols if ext_mode else self.symbols
            if val not in table:
                self.fail("unknown symbol %r" % val)
            self.advance()
            return table[val]
        if kind == "lparen":
            self.advance()
            value = self.expr(ext_mode)
            if self.peek()[0] != "rparen":
                self.fail("expected ')'")
            self.advance()
            return value
        self.fail("expected a number, symbol or '('")


def parse_element(text: str, context: str):
    """Parse an expression in the chosen context; canonical element out."""
    if context not in CONTEXTS:
        raise ValueError("unknown context %r" % context)
    tokens = tokenize(text)
    if context == "symmetric":
        parser = _Parser(tokens, _sym_tables(), {}, symext.scalar, False)
    elif context == "tensor":
        parser = _Parser(tokens, _sym_tables(), _ext_table(), symext.scalar, True)
    elif context == "enveloping":
        parser = _Parser(tokens, _u_table(), {}, env.u_scalar, False)
    else:
        parser = _Parser(tokens, _c_table(), {}, cl.c_scalar, False)
    return parser.parse()


def _exps_str(exps) -> str | None:
    parts = []
    for i, e in enumerate(exps):
        if e == 1:
            parts.append(lie.BASIS_NAMES[i])
        elif e:
            parts.append("%s^%d" % (lie.BASIS_NAMES[i], e))
    return "*".join(parts) if parts else None


def _mask_str(mask, sep) -> str | None:
    names = [lie.BASIS_NAMES[lie.E1 + k] for k in range(4) if mask >> k & 1]
    return sep.join(names) if names else None


def _join_terms(terms) -> str:
    if not terms:
        return "0"
    out = []
    for i, (q, body) in enumerate(terms):
        mag = abs(q)
        if body is None:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = "%s*%s" % (mag, body)
        if i == 0:
            out.append("-" + text if q < 0 else text)
        else:
            out.append((" - " if q < 0 else " + ") + text)
    return "".join(out)


def _sym_key_order(key):
    exps, mask = key
    return (sum(exps) + mask.bit_count(), key)


def format_sym_tensor(x) -> str:
    terms = []
    for key in sorted(x.coeffs, key=_sym_key_order, reverse=True):
        exps, mask = key
        q = x.coeffs[key]
        sym = _exps_str(exps)
        ext = _mask_str(mask, "^^")
        if ext is None:
            terms.append((q, sym))
        else:
            left = sym if sym is not None else str(abs(q))
            body = "%s (x) %s" % (left, ext)
            if sym is None:
                # magnitude already folded into the left leg
                terms.append((Fraction(1) if q > 0 else Fraction(-1), body))
            else:
                terms.append((q, body))
    return _join_terms(terms)


def format_u(x) -> str:
    terms = []
    for key in sorted(x.coeffs, key=lambda k: (sum(k), k), reverse=True):
        terms.append((x.coeffs[key], _exps_str(key)))
    return _join_terms(terms)


def format_c(x) -> str:
    terms = []
    for mask in sorted(x.coeffs, key=lambda m: (m.bit_count(), m), reverse=True):
        terms.append((x.coeffs[mask], _mask_str(mask, "*")))
    return _join_terms(terms)


def format_uc(x) -> str:
    terms = []
    for key in sorted(
        x.coeffs, key=lambda k: (sum(k[0]) + k[1].bit_count(), k), reverse=True
    ):
        exps, mask = key
        q = x.coeffs[key]
        left = _exps_str(exps)
        right = _mask_str(mask, "*")
        if right is None:
            terms.append((q, left))
        else:
            lead = left if left is not None else str(abs(q))
            body = "%s (x) %s" % (lead, right)
            if left is None:
                terms.append((Fraction(1) if q > 0 else Fraction(-1), body))
            else:
                terms.append((q, body))
    return _join_terms(terms)


def format_element(x, context: str) -> str:
    if context in ("symmetric", "tensor"):
        return format_sym_tensor(x)
    if context == "enveloping":
        return format_u(x)
    if context == "clifford":
        return format_c(x)
    raise ValueError("unknown context %r" % context)
