"""File formats: forms as JSON, generator sets as plain-text polynomials.

Form files are JSON objects

    { "n": int, "d": int, "basis": "monomial" | "divided",
      "terms": [ { "exp": [ints], "coeff": "p/q or integer string" } ] }

with rationals written as strings so nothing is ever rounded.

Generator exports start with a header line

    # catkit generators n=<n> d=<d> i=<i> r=<r>

followed by one expanded polynomial per line over symbols Z[e1,...,en]
with operators * ^ + - and integer coefficients, in the deterministic
order the minors were emitted in.  Identically-zero minors are written as
"0" so line numbers keep matching generator indices.  The format
round-trips through read_generators and is trivially parsed by any
computer-algebra system.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .catalecticant import GeneratorSet, MinorPolynomial
from .forms import Form, convert_basis


def _coeff_str(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def form_to_dict(f: Form, basis: str = "divided") -> dict:
    if basis == "divided":
        coeffs = f.coeffs
    elif basis == "monomial":
        coeffs = f.monomial_coeffs()
    else:
        raise ValueError(f"unknown basis {basis!r}")
    terms = [
        {"exp": list(w), "coeff": _coeff_str(c)}
        for w, c in sorted(coeffs.items(), reverse=True)
    ]
    return {"n": f.n, "d": f.d, "basis": basis, "terms": terms}


def form_from_dict(data: dict) -> Form:
    try:
        n = int(data["n"])
        d = int(data["d"])
        basis = data.get("basis", "divided")
        coeffs = {}
        for term in data.get("terms", []):
            w = tuple(int(e) for e in term["exp"])
            c = Fraction(str(term["coeff"]))
            coeffs[w] = coeffs.get(w, Fraction(0)) + c
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed form data: {exc}") from exc
    return convert_basis(n, d, coeffs, basis)


def write_form(f: Form, path, basis: str = "divided"):
    with open(path, "w", encoding="ascii") as fh:
        json.dump(form_to_dict(f, basis), fh, indent=1)
        fh.write("\n")


def read_form(path) -> Form:
    with open(path, "r", encoding="ascii") as fh:
        return form_from_dict(json.load(fh))


def _symbol(w) -> str:
    return "Z[" + ",".join(str(e) for e in w) + "]"


def _term_str(key, coeff: int) -> str:
    factors = []
    for w in sorted(set(key), reverse=True):
        m = key.count(w)
        factors.append(_symbol(w) + (f"^{m}" if m > 1 else ""))
    body = "*".join(factors)
    mag = abs(coeff)
    return body if mag == 1 else f"{mag}*{body}"


def minor_to_text(p: MinorPolynomial) -> str:
    if p.is_zero:
        return "0"
    parts = []
    # order terms by their largest factors first (graded-lex flavor)
    for key in sorted(p.terms, key=lambda k: tuple(sorted(k, reverse=True)), reverse=True):
        c = p.terms[key]
        if c.denominator != 1:
            raise ValueError("generator export expects integer coefficients")
        c = c.numerator
        if not parts:
            parts.append(("-" if c < 0 else "") + _term_str(key, c))
        else:
            parts.append(("- " if c < 0 else "+ ") + _term_str(key, c))
    return " ".join(parts)


def export_generators(gens: GeneratorSet, path):
    """Write a generator set in the documented text format."""
    if len(gens.provenance) != 1:
        raise ValueError("export expects a single-provenance generator set")
    i, _, r = gens.provenance[0]
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"# catkit generators n={gens.n} d={gens.d} i={i} r={r}\n")
        for p in gens.minors:
            fh.write(minor_to_text(p) + "\n")


_HEADER = re.compile(
    r"^# catkit generators n=(\d+) d=(\d+) i=(\d+) r=(\d+)\s*$"
)
_TERM = re.compile(
    r"^\s*(?:(\d+)\s*\*\s*)?((?:Z\[[0-9,]+\](?:\^\d+)?\s*\*?\s*)+)\s*$"
)
_FACTOR = re.compile(r"Z\[([0-9,]+)\](?:\^(\d+))?")


def _parse_polynomial(line: str, n: int, d: int, size: int) -> MinorPolynomial:
    line = line.strip()
    if line == "0":
        return MinorPolynomial(n=n, d=d, size=size, terms={})
    # split into signed chunks on " + " / " - " while keeping a leading "-"
    chunks = re.split(r"\s+([+-])\s+", line)
    signed = []
    first = chunks[0]
    sign = 1
    if first.startswith("-"):
        sign = -1
        first = first[1:].strip()
    signed.append((sign, first))
    for op, chunk in zip(chunks[1::2], chunks[2::2]):
        signed.append((1 if op == "+" else -1, chunk))
    terms = {}
    for sign, chunk in signed:
        m = _TERM.match(chunk)
        if not m:
            raise ValueError(f"cannot parse generator term {chunk!r}")
        mag = int(m.group(1)) if m.group(1) else 1
        key = []
        for fac in _FACTOR.finditer(m.group(2)):
            w = tuple(int(e) for e in fac.group(1).split(","))
            power = int(fac.group(2)) if fac.group(2) else 1
            key.extend([w] * power)
        key = tuple(sorted(key))
        terms[key] = terms.get(key, Fraction(0)) + sign * mag
    terms = {k: c for k, c in terms.items() if c}
    return MinorPolynomial(n=n, d=d, size=size, terms=terms)


def read_generators(path) -> GeneratorSet:
    """Parse a generator export back into a GeneratorSet."""
    with open(path, "r", encoding="ascii") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise ValueError("empty generator file")
    m = _HEADER.match(lines[0])
    if not m:
        raise ValueError(f"bad generator header {lines[0]!r}")
    n, d, i, r = (int(m.group(k)) for k in range(1, 5))
    minors = tuple(
        _parse_polynomial(line, n, d, r) for line in lines[1:] if line.strip()
    )
    return GeneratorSet(n=n, d=d, minors=minors, provenance=((i, d - i, r),))
