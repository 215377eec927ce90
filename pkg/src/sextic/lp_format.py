"""Reader and writer for a documented subset of the LP and MPS file formats.

All numeric literals are converted to exact ``Fraction`` values; ``0.1``
becomes ``1/10``. Besides decimals, both readers accept fraction literals
``p/q``, which the writers use for non-terminating rationals. Variables
default to ``0 <= x < inf`` as in common solvers; writers therefore emit an
explicit bound line for every variable. See ``docs/lp_format.md``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional

from .exact_lp import Constraint, LPInstance, MalformedInstance

__all__ = [
    "DuplicateName",
    "FormatError",
    "LPSyntaxError",
    "UnknownColumn",
    "UnknownRow",
    "UnsupportedSection",
    "parse_lp",
    "parse_mps",
    "read_program",
    "write_lp",
    "write_mps",
]


class FormatError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class LPSyntaxError(FormatError):
    pass


class UnsupportedSection(FormatError):
    pass


class DuplicateName(FormatError):
    pass


class UnknownRow(FormatError):
    pass


class UnknownColumn(FormatError):
    pass


_NUMBER = r"\d+/\d+|(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_IDENT = r"[A-Za-z_][A-Za-z0-9_.\[\]]*"


def _number(text: str) -> Fraction:
    return Fraction(text)


def _format_number(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# --------------------------------------------------------------------------
# LP format

_TOKEN_RE = re.compile(
    rf"\s*(?:(?P<num>{_NUMBER})|(?P<ident>{_IDENT})|(?P<rel><=|>=|=<|=>|<|>|=)"
    r"|(?P<sign>[+-])|(?P<colon>:)|(?P<bad>\S))"
)

_SECTION_RE = re.compile(
    r"^(?P<kw>minimize|minimum|min|maximize|maximum|max|subject\s+to|such\s+that|s\.t\.|st"
    r"|bounds?|generals?|gen|integers?|binary|binaries|bin|semi-continuous|semis?|sos|end)"
    r"(?=\s|$)(?P<rest>.*)$",
    re.IGNORECASE,
)

_REL_NORMAL = {"<=": "<=", "=<": "<=", "<": "<=", ">=": ">=", "=>": ">=", ">": ">=", "=": "="}


class _Tok:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind, self.text, self.line, self.col = kind, text, line, col

    def __repr__(self):
        return f"{self.kind}:{self.text}@{self.line}:{self.col}"


def _tokenize(text: str, line: int, col0: int) -> list[_Tok]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        kind = m.lastgroup
        start = m.start(kind)
        if kind == "bad":
            raise LPSyntaxError(f"unexpected character {m.group(kind)!r}", line, col0 + start + 1)
        out.append(_Tok(kind, m.group(kind), line, col0 + start + 1))
        pos = m.end()
        if not text[pos:].strip():
            break
    return out


def _section_name(kw: str) -> str:
    kw = re.sub(r"\s+", " ", kw.lower())
    if kw in ("minimize", "minimum", "min"):
        return "min"
    if kw in ("maximize", "maximum", "max"):
        return "max"
    if kw in ("subject to", "such that", "s.t.", "st"):
        return "st"
    if kw in ("bound", "bounds"):
        return "bounds"
    if kw == "end":
        return "end"
    return "unsupported"


class _Stream:
    def __init__(self, toks: list[_Tok], end_pos: tuple[int, int]):
        self.toks = toks
        self.i = 0
        self.end_pos = end_pos

    def peek(self, k: int = 0) -> Optional[_Tok]:
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else None

    def next(self) -> _Tok:
        t = self.peek()
        if t is None:
            raise LPSyntaxError("unexpected end of section", *self.end_pos)
        self.i += 1
        return t

    def error(self, msg: str, tok: Optional[_Tok] = None):
        tok = tok or self.peek()
        if tok is None:
            return LPSyntaxError(msg, *self.end_pos)
        return LPSyntaxError(msg, tok.line, tok.col)

    def done(self) -> bool:
        return self.i >= len(self.toks)


def _parse_expr(s: _Stream, *, stop_on_rel: bool):
    """Parse ``[+-] [num] [ident] ...``; return (coeffs in order, constant)."""
    coeffs: dict[str, Fraction] = {}
    const = Fraction(0)
    first = True
    while True:
        t = s.peek()
        if t is None or t.kind == "rel":
            break
        if t.kind == "ident" and s.peek(1) is not None and s.peek(1).kind == "colon":
            break
        sign = 1
        saw_sign = False
        while t is not None and t.kind == "sign":
            saw_sign = True
            if t.text == "-":
                sign = -sign
            s.next()
            t = s.peek()
        if not first and not saw_sign:
            break
        coeff = None
        if t is not None and t.kind == "num":
            coeff = _number(s.next().text)
            t = s.peek()
        if t is not None and t.kind == "ident" and not (
            s.peek(1) is not None and s.peek(1).kind == "colon"
        ):
            name = s.next().text
            value = sign * (Fraction(1) if coeff is None else coeff)
            coeffs[name] = coeffs.get(name, Fraction(0)) + value
        elif coeff is not None:
            const += sign * coeff
        else:
            raise s.error("expected a number or a variable name")
        first = False
    if first and stop_on_rel:
        raise s.error("expected a linear expression")
    return coeffs, const


def _parse_signed_value(s: _Stream, allow_inf: bool) -> Fraction | float:
    sign = 1
    t = s.next()
    while t.kind == "sign":
        if t.text == "-":
            sign = -sign
        t = s.next()
    if t.kind == "num":
        return sign * _number(t.text)
    if allow_inf and t.kind == "ident" and t.text.lower() in ("inf", "infinity"):
        return sign * float("inf")
    raise s.error("expected a number", t)


def parse_lp(text: str) -> LPInstance:
    """Parse LP-format ``text`` into an :class:`LPInstance`."""
    sections: list[tuple[str, list[_Tok], tuple[int, int], _Tok | None]] = []
    current: Optional[list[_Tok]] = None
    ended = False
    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("\\", 1)[0]
        if not line.strip():
            continue
        if ended:
            raise LPSyntaxError("content after End", lineno, 1)
        m = _SECTION_RE.match(line)
        if m and not m.group("rest").lstrip().startswith(":"):
            kind = _section_name(m.group("kw"))
            col = m.start("kw") + 1
            if kind == "unsupported":
                raise UnsupportedSection(
                    f"section {m.group('kw')!r} is not supported (integrality and "
                    "special-ordered sections are rejected)",
                    lineno,
                    col,
                )
            if kind == "end":
                ended = True
                if m.group("rest").strip():
                    raise LPSyntaxError("content after End", lineno, m.start("rest") + 1)
                current = None
                continue
            current = []
            sections.append((kind, current, (lineno, len(raw) + 1), _Tok("kw", kind, lineno, col)))
            current.extend(_tokenize(m.group("rest"), lineno, m.start("rest")))
            continue
        if current is None:
            raise LPSyntaxError("expected a section header", lineno, 1)
        current.extend(_tokenize(line, lineno, 0))
        # keep the end position of the section current
        kind, toks, _, head = sections[-1]
        sections[-1] = (kind, toks, (lineno, len(raw) + 1), head)
    if not ended:
        raise LPSyntaxError("missing End", len(lines) + 1, 1)
    if not sections or sections[0][0] not in ("min", "max"):
        raise LPSyntaxError("the objective section must come first", 1, 1)

    order: dict[str, None] = {}
    objective: dict[str, Fraction] = {}
    obj_const = Fraction(0)
    obj_name = None
    constraints: list[Constraint] = []
    names: set[str] = set()
    lower: dict[str, Fraction] = {}
    upper: dict[str, Fraction] = {}
    seen_kinds: set[str] = set()

    def declare(v):
        if v not in order:
            order[v] = None

    for kind, toks, end_pos, head in sections:
        key = "obj" if kind in ("min", "max") else kind
        if key in seen_kinds:
            raise LPSyntaxError(f"repeated section {kind!r}", head.line, head.col)
        seen_kinds.add(key)
        s = _Stream(toks, end_pos)
        if key == "obj":
            if s.peek() is not None and s.peek().kind == "ident" and s.peek(1) is not None and s.peek(1).kind == "colon":
                obj_name = s.next().text
                s.next()
            coeffs, const = _parse_expr(s, stop_on_rel=False)
            if not s.done():
                raise s.error("unexpected token in objective")
            sign = -1 if kind == "max" else 1
            for v, c in coeffs.items():
                declare(v)
                objective[v] = sign * c
            obj_const = sign * const
        elif key == "st":
            while not s.done():
                name = None
                if s.peek().kind == "ident" and s.peek(1) is not None and s.peek(1).kind == "colon":
                    name_tok = s.next()
                    s.next()
                    name = name_tok.text
                    if name in names:
                        raise DuplicateName(f"duplicate constraint name {name!r}", name_tok.line, name_tok.col)
                    names.add(name)
                coeffs, const = _parse_expr(s, stop_on_rel=True)
                rel = s.next()
                if rel.kind != "rel":
                    raise s.error("expected <=, >= or =", rel)
                rhs = _parse_signed_value(s, allow_inf=False)
                for v in coeffs:
                    declare(v)
                constraints.append(Constraint(coeffs, _REL_NORMAL[rel.text], rhs - const, name))
        elif key == "bounds":
            while not s.done():
                _parse_bound(s, declare, lower, upper, order)

    # default lower bound 0 unless a bound statement changed it
    final_lower = {}
    for v in order:
        if v in lower:
            if lower[v] is not None:
                final_lower[v] = lower[v]
        else:
            final_lower[v] = Fraction(0)
    final_upper = {v: u for v, u in upper.items() if u is not None}
    try:
        return LPInstance(
            variables=tuple(order),
            objective=objective,
            objective_constant=obj_const,
            constraints=tuple(constraints),
            lower=final_lower,
            upper=final_upper,
            name=obj_name,
        )
    except MalformedInstance as exc:
        raise LPSyntaxError(str(exc)) from exc


def _bound_value(x):
    """Map an infinite bound to ``None`` (no bound); keep finite ones exact."""
    if isinstance(x, float):
        return None
    return x


def _parse_bound(s: _Stream, declare, lower, upper, order):
    t = s.peek()
    if t.kind == "ident" and t.text.lower() not in ("inf", "infinity"):
        name = s.next().text
        declare(name)
        nxt = s.next()
        if nxt.kind == "ident" and nxt.text.lower() == "free":
            lower[name] = None
            upper[name] = None
            return
        if nxt.kind != "rel":
            raise s.error("expected a relation or 'free' in bound", nxt)
        rel = _REL_NORMAL[nxt.text]
        value = _parse_signed_value(s, allow_inf=True)
        _apply_bound(s, nxt, name, rel, value, lower, upper)
        return
    value = _parse_signed_value(s, allow_inf=True)
    rel_tok = s.next()
    if rel_tok.kind != "rel":
        raise s.error("expected a relation in bound", rel_tok)
    name_tok = s.next()
    if name_tok.kind != "ident":
        raise s.error("expected a variable name in bound", name_tok)
    name = name_tok.text
    declare(name)
    flipped = {"<=": ">=", ">=": "<=", "=": "="}[_REL_NORMAL[rel_tok.text]]
    _apply_bound(s, rel_tok, name, flipped, value, lower, upper)
    t = s.peek()
    if t is not None and t.kind == "rel":
        rel2 = s.next()
        value2 = _parse_signed_value(s, allow_inf=True)
        _apply_bound(s, rel2, name, _REL_NORMAL[rel2.text], value2, lower, upper)


def _apply_bound(s, tok, name, rel, value, lower, upper):
    if rel == ">=":
        if value == float("inf"):
            raise s.error("lower bound of +inf", tok)
        lower[name] = _bound_value(value)
    elif rel == "<=":
        if value == -float("inf"):
            raise s.error("upper bound of -inf", tok)
        upper[name] = _bound_value(value)
    else:
        if isinstance(value, float):
            raise s.error("cannot fix a variable at infinity", tok)
        lower[name] = value
        upper[name] = value


def _lp_expr(coeffs, order, const=Fraction(0)) -> str:
    parts = []
    for v in order:
        c = coeffs.get(v)
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = v if mag == 1 else f"{_format_number(mag)} {v}"
        parts.append((sign, body))
    if const or not parts:
        parts.append(("-" if const < 0 else "+", _format_number(abs(const))))
    out = []
    for k, (sign, body) in enumerate(parts):
        if k == 0:
            out.append(("- " if sign == "-" else "") + body)
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


def write_lp(instance: LPInstance) -> str:
    """Render ``instance`` in the LP subset; ``parse_lp`` reads it back exactly."""
    order = instance.variables
    lines = []
    if instance.name:
        lines.append(f"\\ {instance.name}")
    lines.append("Minimize")
    lines.append(" obj: " + _lp_expr(instance.objective, order, instance.objective_constant))
    lines.append("Subject To")
    for c in instance.constraints:
        prefix = f" {c.name}: " if c.name else " "
        lines.append(f"{prefix}{_lp_expr(c.coeffs, order)} {c.relation} {_format_number(c.rhs)}")
    lines.append("Bounds")
    for v in order:
        lo, hi = instance.lower.get(v), instance.upper.get(v)
        if lo is None and hi is None:
            lines.append(f" {v} free")
        elif lo is not None and hi is not None:
            if lo == hi:
                lines.append(f" {v} = {_format_number(lo)}")
            else:
                lines.append(f" {_format_number(lo)} <= {v} <= {_format_number(hi)}")
        elif lo is not None:
            lines.append(f" {v} >= {_format_number(lo)}")
        else:
            lines.append(f" -inf <= {v} <= {_format_number(hi)}")
    lines.append("End")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# MPS format

_MPS_SECTIONS = {"NAME", "OBJSENSE", "ROWS", "COLUMNS", "RHS", "RANGES", "BOUNDS", "ENDATA"}
_MPS_UNSUPPORTED = {"QUADOBJ", "QMATRIX", "QSECTION", "QCMATRIX", "SOS", "CSECTION", "INDICATORS", "OBJSENSE_"}


def _mps_fields(line: str, lineno: int):
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]


def _mps_number(tok: tuple[str, int], lineno: int) -> Fraction:
    text, col = tok
    try:
        if not re.fullmatch(rf"[+-]?(?:{_NUMBER})", text):
            raise ValueError
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise LPSyntaxError(f"bad number {text!r}", lineno, col) from None


def parse_mps(text: str) -> LPInstance:
    """Parse free or fixed MPS (whitespace-separated fields, names without spaces)."""
    section = None
    name = None
    maximize = False
    objective_row = None
    row_rel: dict[str, str] = {}
    row_order: list[str] = []
    free_rows: set[str] = set()
    columns: dict[str, dict[str, Fraction]] = {}
    rhs: dict[str, Fraction] = {}
    ranges: dict[str, Fraction] = {}
    lower: dict[str, Optional[Fraction]] = {}
    upper: dict[str, Optional[Fraction]] = {}
    ended = False
    lines = text.splitlines()

    def need_row(tok, lineno):
        r, col = tok
        if r == objective_row or r in row_rel or r in free_rows:
            return r
        raise UnknownRow(f"unknown row {r!r}", lineno, col)

    def need_col(tok, lineno):
        c, col = tok
        if c not in columns:
            raise UnknownColumn(f"unknown column {c!r}", lineno, col)
        return c

    for lineno, raw in enumerate(lines, start=1):
        if not raw.strip() or raw.lstrip().startswith("*"):
            continue
        if ended:
            raise LPSyntaxError("content after ENDATA", lineno, 1)
        f = _mps_fields(raw, lineno)
        if not raw[0].isspace():
            head = f[0][0].upper()
            if head in _MPS_UNSUPPORTED:
                raise UnsupportedSection(f"section {head} is not supported", lineno, 1)
            if head not in _MPS_SECTIONS:
                raise LPSyntaxError(f"unknown section {f[0][0]!r}", lineno, 1)
            section = head
            if head == "NAME":
                name = f[1][0] if len(f) > 1 else None
            elif head == "OBJSENSE" and len(f) > 1:
                maximize = _objsense(f[1], lineno)
            elif head == "ENDATA":
                ended = True
            elif len(f) > 1:
                raise LPSyntaxError(f"unexpected data after {head}", lineno, f[1][1])
            continue
        if section is None:
            raise LPSyntaxError("data before the first section", lineno, f[0][1])

        if section == "OBJSENSE":
            maximize = _objsense(f[0], lineno)
        elif section == "ROWS":
            if len(f) != 2:
                raise LPSyntaxError("ROWS entries are '<type> <name>'", lineno, f[0][1])
            kind, rname = f[0][0].upper(), f[1][0]
            if rname in row_rel or rname == objective_row or rname in free_rows:
                raise DuplicateName(f"duplicate row {rname!r}", lineno, f[1][1])
            if kind == "N":
                if objective_row is None:
                    objective_row = rname
                else:
                    free_rows.add(rname)
            elif kind in ("L", "G", "E"):
                row_rel[rname] = {"L": "<=", "G": ">=", "E": "="}[kind]
                row_order.append(rname)
            else:
                raise LPSyntaxError(f"unknown row type {f[0][0]!r}", lineno, f[0][1])
        elif section == "COLUMNS":
            if any(tok.upper() == "'MARKER'" for tok, _ in f):
                raise UnsupportedSection("integrality markers are not supported", lineno, f[0][1])
            if len(f) not in (3, 5):
                raise LPSyntaxError("COLUMNS entries are '<col> <row> <value> [<row> <value>]'", lineno, f[0][1])
            col = f[0][0]
            entries = columns.setdefault(col, {})
            for k in range(1, len(f), 2):
                r = need_row(f[k], lineno)
                v = _mps_number(f[k + 1], lineno)
                if r in free_rows:
                    continue
                entries[r] = entries.get(r, Fraction(0)) + v
        elif section in ("RHS", "RANGES"):
            pairs = f[1:] if len(f) % 2 == 1 else f
            if len(pairs) not in (2, 4):
                raise LPSyntaxError(f"bad {section} entry", lineno, f[0][1])
            for k in range(0, len(pairs), 2):
                r = need_row(pairs[k], lineno)
                v = _mps_number(pairs[k + 1], lineno)
                if section == "RHS":
                    rhs[r] = v
                else:
                    if r not in row_rel:
                        raise LPSyntaxError(f"RANGES on objective row {r!r}", lineno, pairs[k][1])
                    ranges[r] = v
        elif section == "BOUNDS":
            kind = f[0][0].upper()
            if kind in ("BV", "LI", "UI", "SC", "SI"):
                raise UnsupportedSection(f"integer bound type {kind} is not supported", lineno, f[0][1])
            valued = kind in ("UP", "LO", "FX")
            if kind not in ("UP", "LO", "FX", "FR", "MI", "PL"):
                raise LPSyntaxError(f"unknown bound type {f[0][0]!r}", lineno, f[0][1])
            expected = (3, 4) if valued else (2, 3)
            if len(f) not in expected:
                raise LPSyntaxError(f"bad {kind} bound entry", lineno, f[0][1])
            has_set = len(f) == expected[1]
            col = need_col(f[2] if has_set else f[1], lineno)
            if valued:
                v = _mps_number(f[-1], lineno)
                if kind in ("LO", "FX"):
                    lower[col] = v
                if kind in ("UP", "FX"):
                    upper[col] = v
            elif kind == "FR":
                lower[col] = None
                upper[col] = None
            elif kind == "MI":
                lower[col] = None
            else:
                upper[col] = None
        elif section == "NAME":
            raise LPSyntaxError("unexpected data in NAME section", lineno, f[0][1])
    if not ended:
        raise LPSyntaxError("missing ENDATA", len(lines) + 1, 1)
    if objective_row is None:
        raise LPSyntaxError("no objective (N) row", 1, 1)

    variables = tuple(columns)
    objective = {c: e[objective_row] for c, e in columns.items() if objective_row in e}
    obj_const = -rhs.get(objective_row, Fraction(0))
    if maximize:
        objective = {c: -v for c, v in objective.items()}
        obj_const = -obj_const
    constraints = []
    for r in row_order:
        coeffs = {c: e[r] for c, e in columns.items() if r in e}
        rel, b = row_rel[r], rhs.get(r, Fraction(0))
        if r not in ranges:
            constraints.append(Constraint(coeffs, rel, b, r))
            continue
        rng = ranges[r]
        if rel == "<=":
            lo, hi = b - abs(rng), b
        elif rel == ">=":
            lo, hi = b, b + abs(rng)
        elif rng >= 0:
            lo, hi = b, b + rng
        else:
            lo, hi = b + rng, b
        if rel == "=" and lo == hi:
            constraints.append(Constraint(coeffs, "=", b, r))
        else:
            constraints.append(Constraint(coeffs, ">=", lo, r + "_lo"))
            constraints.append(Constraint(coeffs, "<=", hi, r + "_hi"))
    final_lower = {}
    for v in variables:
        lo = lower.get(v, Fraction(0))
        if lo is not None:
            final_lower[v] = lo
    final_upper = {v: u for v, u in upper.items() if u is not None}
    try:
        return LPInstance(
            variables=variables,
            objective=objective,
            objective_constant=obj_const,
            constraints=tuple(constraints),
            lower=final_lower,
            upper=final_upper,
            name=name,
        )
    except MalformedInstance as exc:
        raise LPSyntaxError(str(exc)) from exc


def _objsense(tok, lineno) -> bool:
    word = tok[0].upper()
    if word in ("MAX", "MAXIMIZE"):
        return True
    if word in ("MIN", "MINIMIZE"):
        return False
    raise LPSyntaxError(f"unknown OBJSENSE {tok[0]!r}", lineno, tok[1])


def write_mps(instance: LPInstance) -> str:
    """Render ``instance`` as free MPS. Unnamed constraints get generated row names."""
    used = set(instance.variables) | {c.name for c in instance.constraints if c.name}
    obj = "obj"
    while obj in used:
        obj += "_"
    row_names = []
    k = 0
    for c in instance.constraints:
        if c.name:
            row_names.append(c.name)
            continue
        while True:
            k += 1
            cand = f"R{k}"
            if cand not in used and cand != obj:
                break
        used.add(cand)
        row_names.append(cand)

    lines = [f"NAME {instance.name or 'PROBLEM'}", "ROWS", f" N {obj}"]
    for c, rn in zip(instance.constraints, row_names):
        lines.append(f" {'L' if c.relation == '<=' else 'G' if c.relation == '>=' else 'E'} {rn}")
    lines.append("COLUMNS")
    for v in instance.variables:
        entries = []
        if v in instance.objective:
            entries.append((obj, instance.objective[v]))
        for c, rn in zip(instance.constraints, row_names):
            if v in c.coeffs:
                entries.append((rn, c.coeffs[v]))
        if not entries:
            entries.append((obj, Fraction(0)))
        for rn, val in entries:
            lines.append(f"    {v} {rn} {_format_number(val)}")
    lines.append("RHS")
    if instance.objective_constant:
        lines.append(f"    RHS {obj} {_format_number(-instance.objective_constant)}")
    for c, rn in zip(instance.constraints, row_names):
        if c.rhs:
            lines.append(f"    RHS {rn} {_format_number(c.rhs)}")
    lines.append("BOUNDS")
    for v in instance.variables:
        lo, hi = instance.lower.get(v), instance.upper.get(v)
        if lo is not None and hi is not None and lo == hi:
            lines.append(f" FX BND {v} {_format_number(lo)}")
            continue
        if lo is None and hi is None:
            lines.append(f" FR BND {v}")
            continue
        if lo is None:
            lines.append(f" MI BND {v}")
        else:
            lines.append(f" LO BND {v} {_format_number(lo)}")
        if hi is not None:
            lines.append(f" UP BND {v} {_format_number(hi)}")
    lines.append("ENDATA")
    return "\n".join(lines) + "\n"


def read_program(path) -> LPInstance:
    """Read an ``.lp`` or ``.mps`` file, dispatching on the extension."""
    from pathlib import Path

    path = Path(path)
    text = path.read_text()
    suffix = path.suffix.lower()
    if suffix == ".lp":
        return parse_lp(text)
    if suffix == ".mps":
        return parse_mps(text)
    raise FormatError(f"unknown file extension {path.suffix!r} (expected .lp or .mps)")
