"""Plain-text code files.

::

    field p m c0 c1 ... cm      # modulus coefficients, low to high
    code k n
    <k lines of n element indices>

Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import json
from pathlib import Path

from agtrellis.codes import LinearCode
from agtrellis.errors import AGTrellisError, ParseError
from agtrellis.field import get_field
from agtrellis.gonality import GonalitySequence, gs_explicit, gs_from_record


def dumps_code(code: LinearCode) -> str:
    F = code.field
    lines = [
        "field " + " ".join(str(x) for x in (F.p, F.m, *F.modulus)),
        f"code {code.k} {code.n}",
    ]
    lines += [" ".join(str(x) for x in row) for row in code.G.tolist()]
    return "\n".join(lines) + "\n"


def write_code(code: LinearCode, path: str | Path) -> None:
    Path(path).write_text(dumps_code(code), encoding="utf-8")


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(f"expected integers: {exc}", lineno) from None


def loads_code(text: str) -> LinearCode:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body.split()))
    if len(lines) < 2:
        raise ParseError("need a 'field' line and a 'code' line", lines[0][0] if lines else None)

    lineno, tok = lines[0]
    if tok[0] != "field" or len(tok) < 4:
        raise ParseError("first line must be 'field p m c0 ... cm'", lineno)
    p, m, *modulus = _ints(tok[1:], lineno)
    if len(modulus) != m + 1:
        raise ParseError(f"modulus needs {m + 1} coefficients, got {len(modulus)}", lineno)
    try:
        F = get_field(p, m, modulus)
    except AGTrellisError as exc:
        raise ParseError(str(exc), lineno) from None

    lineno, tok = lines[1]
    if tok[0] != "code" or len(tok) != 3:
        raise ParseError("second line must be 'code k n'", lineno)
    k, n = _ints(tok[1:], lineno)
    rows = lines[2:]
    if len(rows) != k:
        raise ParseError(f"expected {k} generator rows, got {len(rows)}", rows[-1][0] if rows else lineno)
    data = []
    for lineno, tok in rows:
        row = _ints(tok, lineno)
        if len(row) != n:
            raise ParseError(f"expected {n} entries, got {len(row)}", lineno)
        bad = [x for x in row if not 0 <= x < F.q]
        if bad:
            raise ParseError(f"entry {bad[0]} is not an element index of GF({F.q})", lineno)
        data.append(row)
    try:
        code = LinearCode(F, data)
    except AGTrellisError as exc:
        raise ParseError(str(exc), lines[1][0]) from None
    if code.k != k:
        raise ParseError(f"generator rows have rank {code.k}, header says k = {k}", lines[1][0])
    return code


def read_code(path: str | Path) -> LinearCode:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return loads_code(text)


def dumps_gonality(gs: GonalitySequence) -> str:
    return json.dumps(gs.to_record(), sort_keys=True) + "\n"


def loads_gonality(text: str) -> GonalitySequence:
    """JSON record, or the text form ``genus g`` / ``origin tag`` / ``gammas ...``."""
    text = text.strip()
    if text.startswith("{"):
        try:
            record = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc.msg}", exc.lineno) from None
        if "genus" not in record or "gammas" not in record:
            raise ParseError("record needs 'genus' and 'gammas'")
        return gs_from_record(record)
    fields: dict[str, list[str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tok = raw.split("#", 1)[0].split()
        if tok:
            fields[tok[0]] = tok[1:]
    if "genus" not in fields or "gammas" not in fields:
        raise ParseError("need 'genus' and 'gammas' lines")
    g = _ints(fields["genus"], 1)[0]
    gammas = _ints(fields["gammas"], 1)
    origin = fields.get("origin", ["explicit"])[0]
    if origin.startswith("plane("):
        return gs_from_record({"genus": g, "origin": origin, "gammas": gammas})
    return gs_explicit(g, gammas, origin)


def read_gonality(path: str | Path) -> GonalitySequence:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return loads_gonality(text)
