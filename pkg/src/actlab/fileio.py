"""Text formats for monoids and acts, plus the shipped catalog.

Monoid file::

    # comment
    monoid <n>
    <n rows of n integers>

Act file::

    act <monoid-file> <m>
    <one row of m integers per monoid element>

The monoid reference in an act file is resolved relative to the act file's
directory first and then as a catalog name (with or without ``.monoid``).
"""

from pathlib import Path

from .errors import ActlabError, ParseError

CATALOG_DIR = Path(__file__).with_name("catalog")


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _ints(source, lineno, line, count):
    try:
        vals = [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(source, lineno, f"non-integer entry in {line!r}") from None
    if len(vals) != count:
        raise ParseError(source, lineno, f"expected {count} entries, got {len(vals)}")
    return vals


def _header(source, lines, keyword):
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise ParseError(source, 1, f"missing '{keyword}' header") from None
    parts = line.split()
    if not parts or parts[0] != keyword:
        raise ParseError(source, lineno, f"expected '{keyword}' header, got {line!r}")
    return lineno, parts


def parse_monoid(text, source="<string>", name=""):
    from .monoid import validate_monoid

    lines = _content_lines(text)
    lineno, parts = _header(source, lines, "monoid")
    if len(parts) != 2 or not parts[1].isdigit() or int(parts[1]) < 1:
        raise ParseError(source, lineno, "header must be 'monoid <n>' with n >= 1")
    n = int(parts[1])
    rows = []
    last = lineno
    for lineno, line in lines:
        if len(rows) == n:
            raise ParseError(source, lineno, "extra rows after the table")
        rows.append(_ints(source, lineno, line, n))
        last = lineno
    if len(rows) != n:
        raise ParseError(source, last, f"expected {n} rows, got {len(rows)}")
    try:
        return validate_monoid(rows, name=name)
    except ParseError:
        raise
    except ActlabError as exc:
        raise ParseError(source, last, str(exc)) from exc


def load_monoid(path):
    path = Path(path)
    return parse_monoid(path.read_text(), source=path, name=path.stem)


def dump_monoid(M):
    out = [f"monoid {M.size}"]
    out += [" ".join(map(str, row)) for row in M.table]
    return "\n".join(out) + "\n"


def resolve_monoid_ref(ref, base_dir=None):
    candidates = []
    if base_dir is not None:
        candidates.append(Path(base_dir) / ref)
    candidates.append(Path(ref))
    stem = ref[:-7] if ref.endswith(".monoid") else ref
    candidates.append(CATALOG_DIR / f"{stem}.monoid")
    for c in candidates:
        if c.is_file():
            return c
    return None


def parse_act(text, source="<string>", base_dir=None, monoid=None):
    from .acts import validate_act

    lines = _content_lines(text)
    lineno, parts = _header(source, lines, "act")
    if len(parts) != 3 or not parts[2].isdigit():
        raise ParseError(source, lineno, "header must be 'act <monoid-file> <m>'")
    m = int(parts[2])
    if monoid is None:
        path = resolve_monoid_ref(parts[1], base_dir)
        if path is None:
            raise ParseError(source, lineno, f"cannot find monoid {parts[1]!r}")
        monoid = load_monoid(path)
    rows = []
    last = lineno
    if m > 0:
        for lineno, line in lines:
            if len(rows) == monoid.size:
                raise ParseError(source, lineno, "extra rows after the table")
            rows.append(_ints(source, lineno, line, m))
            last = lineno
        if len(rows) != monoid.size:
            raise ParseError(source, last, f"expected {monoid.size} rows, got {len(rows)}")
    else:
        for lineno, line in lines:
            raise ParseError(source, lineno, "an empty act has no table rows")
        rows = [[] for _ in range(monoid.size)]
    try:
        return validate_act(monoid, rows)
    except ActlabError as exc:
        raise ParseError(source, last, str(exc)) from exc


def load_act(path, monoid=None):
    path = Path(path)
    return parse_act(path.read_text(), source=path, base_dir=path.parent, monoid=monoid)


def dump_act(A, monoid_ref):
    out = [f"act {monoid_ref} {A.size}"]
    if A.size:
        out += [" ".join(map(str, row)) for row in A.action]
    return "\n".join(out) + "\n"


def catalog_names():
    return sorted(p.stem for p in CATALOG_DIR.glob("*.monoid"))


def catalog_monoid(name):
    return load_monoid(CATALOG_DIR / f"{name}.monoid")


def load_catalog(max_size=None):
    out = [catalog_monoid(n) for n in catalog_names()]
    if max_size is not None:
        out = [M for M in out if M.size <= max_size]
    return out
