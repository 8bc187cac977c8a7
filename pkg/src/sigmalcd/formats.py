"""Text formats for codes, semi-linear maps, polynomials, and GQC inputs.

All dumps are byte-stable for identical inputs so golden-file comparisons
work.  Blank lines and lines starting with '#' are ignored on parse.
"""

from __future__ import annotations

import numpy as np

from . import poly
from .codes import LinearCode, SemiLinearMap
from .errors import DimensionMismatch, LengthMismatch, NotPrime, SigmaLcdError
from .field import Field, field, is_prime
from .gqc import GqcCode


def _lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def parse_field(text: str) -> Field:
    """`p`, `p^e`, a composite prime power like `4`, or `p^e:c0,c1,...`
    with an explicit little-endian modulus."""
    text = text.strip()
    modulus = None
    if ":" in text:
        text, mtext = text.split(":", 1)
        modulus = tuple(int(t) for t in mtext.split(","))
    if "^" in text:
        ptext, etext = text.split("^", 1)
        p, e = int(ptext), int(etext)
    else:
        v = int(text)
        if v < 2:
            raise NotPrime(f"{v} is not a prime power")
        if is_prime(v):
            p, e = v, 1
        else:
            p = next(d for d in range(2, v + 1) if v % d == 0)
            e = 0
            w = v
            while w % p == 0:
                w //= p
                e += 1
            if w != 1:
                raise NotPrime(f"{v} is not a prime power")
    return field(p, e, modulus)


def field_str(F: Field) -> str:
    return str(F.p) if F.e == 1 else f"{F.p}^{F.e}"


def parse_poly(text: str) -> np.ndarray:
    """Comma-separated little-endian coefficients, `1,0,1` = 1 + x^2."""
    parts = [t.strip() for t in text.split(",")]
    return poly.from_seq([int(t) for t in parts if t])


def poly_str(c: np.ndarray) -> str:
    c = poly.trim(c)
    if c.size == 0:
        return "0"
    return ",".join(str(int(v)) for v in c)


def _check_entries(F: Field, rows: np.ndarray):
    if rows.size and (rows.min() < 0 or rows.max() >= F.q):
        raise SigmaLcdError(f"entry out of range for GF({F.q})")


def parse_code(text: str, field_hint: Field | None = None) -> LinearCode:
    lines = _lines(text)
    if not lines:
        raise LengthMismatch("empty code file")
    head = lines[0].split()
    if len(head) != 3:
        raise LengthMismatch(f"header must be 'q n k', got {lines[0]!r}")
    F = field_hint if field_hint is not None else parse_field(head[0])
    if F.q != parse_field(head[0]).q:
        raise DimensionMismatch(f"header field {head[0]} != {field_str(F)}")
    n, k = int(head[1]), int(head[2])
    if len(lines) != 1 + k:
        raise DimensionMismatch(f"expected {k} generator rows, got {len(lines) - 1}")
    rows = np.zeros((k, n), dtype=np.int16)
    for t, line in enumerate(lines[1:]):
        vals = [int(v) for v in line.split()]
        if len(vals) != n:
            raise LengthMismatch(f"row {t} has {len(vals)} entries, expected {n}")
        rows[t] = vals
    _check_entries(F, rows)
    return LinearCode(F, n, rows)


def dump_code(code: LinearCode) -> str:
    lines = [f"{field_str(code.field)} {code.n} {code.k}"]
    for row in code.gen:
        lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def parse_sigma(text: str, F: Field, n: int) -> SemiLinearMap:
    """Three labeled lines: `perm: i0 ... i_{n-1}`, `diag: d0 ... d_{n-1}`,
    `frob: s`.  Missing lines default to the identity part."""
    perm = np.arange(n, dtype=np.int32)
    diag = np.ones(n, dtype=np.int16)
    frob = 0
    for line in _lines(text):
        if ":" not in line:
            raise SigmaLcdError(f"bad sigma line {line!r}")
        key, val = line.split(":", 1)
        key = key.strip().lower()
        vals = val.split()
        if key == "perm":
            if len(vals) != n:
                raise LengthMismatch(f"perm needs {n} entries")
            perm = np.asarray([int(v) for v in vals], dtype=np.int32)
        elif key == "diag":
            if len(vals) != n:
                raise LengthMismatch(f"diag needs {n} entries")
            diag = np.asarray([int(v) for v in vals], dtype=np.int16)
        elif key == "frob":
            frob = int(vals[0])
        else:
            raise SigmaLcdError(f"unknown sigma field {key!r}")
    return SemiLinearMap(F, perm, diag, frob)


def dump_sigma(sigma: SemiLinearMap) -> str:
    return (
        "perm: " + " ".join(str(int(v)) for v in sigma.perm) + "\n"
        "diag: " + " ".join(str(int(v)) for v in sigma.diag) + "\n"
        f"frob: {sigma.frob}\n"
    )


def sigma_from_spec(spec: str, F: Field, n: int) -> SemiLinearMap:
    """`id`, `reversal`, `frobenius:<s>`, or a path to a sigma file."""
    s = spec.strip()
    if s == "id":
        return SemiLinearMap.identity(F, n)
    if s == "reversal":
        return SemiLinearMap.reversal(F, n)
    if s.startswith("frobenius:"):
        return SemiLinearMap.frobenius_map(F, n, int(s.split(":", 1)[1]))
    with open(s, "r", encoding="utf-8") as fh:
        return parse_sigma(fh.read(), F, n)


def parse_gqc_raw(text: str, field_hint: Field | None = None):
    """(field, block lengths, generator tuples) without building the code."""
    lines = _lines(text)
    if len(lines) < 3:
        raise LengthMismatch("GQC file needs header, block lengths, and generators")
    head = lines[0].split()
    if len(head) != 2:
        raise LengthMismatch(f"header must be 'q l', got {lines[0]!r}")
    F = field_hint if field_hint is not None else parse_field(head[0])
    l = int(head[1])
    blocks = tuple(int(v) for v in lines[1].split())
    if len(blocks) != l:
        raise DimensionMismatch(f"expected {l} block lengths, got {len(blocks)}")
    gens = []
    for line in lines[2:]:
        parts = line.split(";")
        if len(parts) != l:
            raise DimensionMismatch(f"generator {line!r} has {len(parts)} blocks, expected {l}")
        gens.append(tuple(parse_poly(p) for p in parts))
    for g in gens:
        for c in g:
            _check_entries(F, np.asarray(c))
    return F, blocks, gens


def parse_gqc(text: str, field_hint: Field | None = None) -> GqcCode:
    F, blocks, gens = parse_gqc_raw(text, field_hint)
    return GqcCode.from_generators(F, blocks, gens)


def dump_gqc(code: GqcCode) -> str:
    lines = [f"{field_str(code.field)} {code.l}"]
    lines.append(" ".join(str(m) for m in code.block_lengths))
    for row in code.flat.gen:
        lines.append(";".join(poly_str(b) for b in code.block_polys(row)))
    return "\n".join(lines) + "\n"


def parse_product_spec(text: str):
    """Product-construction input: line 1 the base field, then per
    component a `m r k` header followed by k rows of r integer-encoded
    elements of GF(q^t) (t = splitting degree of the m-th roots over the
    base, with the default modulus)."""
    from .cyclotomic import mult_order

    lines = _lines(text)
    if not lines:
        raise LengthMismatch("empty product spec")
    base = parse_field(lines[0])
    raw = []
    pos = 1
    while pos < len(lines):
        head = lines[pos].split()
        if len(head) != 3:
            raise LengthMismatch(f"component header must be 'm r k', got {lines[pos]!r}")
        m, r, k = int(head[0]), int(head[1]), int(head[2])
        rows = []
        for line in lines[pos + 1 : pos + 1 + k]:
            vals = [int(v) for v in line.split()]
            if len(vals) != r:
                raise LengthMismatch(f"component row needs {r} entries, got {len(vals)}")
            rows.append(vals)
        if len(rows) != k:
            raise DimensionMismatch(f"component m={m} expected {k} rows")
        raw.append((m, r, rows))
        pos += 1 + k
    comps = []
    for m, r, rows in raw:
        t = mult_order(base.q, m)  # coset size of m-hat equals ord_m(q)
        comp_field = field(base.p, base.e * t)
        gen = np.asarray(rows, dtype=np.int16).reshape(len(rows), r)
        _check_entries(comp_field, gen)
        comps.append((m, r, LinearCode(comp_field, r, gen)))
    return base, comps
