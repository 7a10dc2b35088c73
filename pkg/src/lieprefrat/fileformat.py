"""Algebra files: JSON with sparse brackets, implicit antisymmetry.

Layout:

    {
      "p": 2,
      "dim": 3,
      "basis": ["x", "y", "z"],
      "brackets": [
        {"i": 0, "j": 1, "terms": [[1, 2]]}
      ]
    }

meaning [b_i, b_j] = sum of coeff * b_k over the [coeff, k] terms.  Only
i < j entries are permitted; [b_j, b_i] is filled by antisymmetry and
unlisted pairs are zero.  Parsing checks shape only (Lie-axiom validation
is a separate, reportable step); serialization is canonical, so
parse(serialize(L)) == L and repeated serializations are byte-identical.
"""

from __future__ import annotations

import json

from .algebra import LieAlgebra
from .errors import FileFormatError
from .gfp import SUPPORTED_PRIMES, Subspace


def _require(cond: bool, path: str, message: str) -> None:
    if not cond:
        raise FileFormatError(path, message)


def parse_algebra(text: str) -> LieAlgebra:
    """Parse an algebra file; raises FileFormatError with a field path."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError("$", f"not valid JSON: {exc}") from None
    _require(isinstance(data, dict), "$", "top level must be an object")
    extra = set(data) - {"p", "dim", "basis", "brackets"}
    _require(not extra, "$", f"unknown fields {sorted(extra)}")
    for field in ("p", "dim", "basis", "brackets"):
        _require(field in data, field, "missing required field")

    p = data["p"]
    _require(isinstance(p, int) and not isinstance(p, bool), "p", "must be an integer")
    _require(p in SUPPORTED_PRIMES, "p", f"must be one of {list(SUPPORTED_PRIMES)}")
    dim = data["dim"]
    _require(
        isinstance(dim, int) and not isinstance(dim, bool) and dim >= 1,
        "dim",
        "must be a positive integer",
    )
    basis = data["basis"]
    _require(isinstance(basis, list), "basis", "must be a list of strings")
    _require(len(basis) == dim, "basis", f"expected {dim} labels, got {len(basis)}")
    for idx, label in enumerate(basis):
        _require(isinstance(label, str), f"basis[{idx}]", "must be a string")

    raw = data["brackets"]
    _require(isinstance(raw, list), "brackets", "must be a list")
    brackets: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for bi, entry in enumerate(raw):
        path = f"brackets[{bi}]"
        _require(isinstance(entry, dict), path, "must be an object")
        extra = set(entry) - {"i", "j", "terms"}
        _require(not extra, path, f"unknown fields {sorted(extra)}")
        for field in ("i", "j", "terms"):
            _require(field in entry, f"{path}.{field}", "missing required field")
        i, j = entry["i"], entry["j"]
        for name, value in (("i", i), ("j", j)):
            _require(
                isinstance(value, int) and not isinstance(value, bool),
                f"{path}.{name}",
                "must be an integer",
            )
            _require(0 <= value < dim, f"{path}.{name}", f"index out of range 0..{dim - 1}")
        _require(i < j, path, f"only i < j entries permitted (got i={i}, j={j})")
        _require((i, j) not in brackets, path, f"duplicate entry for pair ({i}, {j})")
        terms = entry["terms"]
        _require(isinstance(terms, list), f"{path}.terms", "must be a list")
        parsed_terms = []
        for ti, term in enumerate(terms):
            tpath = f"{path}.terms[{ti}]"
            _require(
                isinstance(term, list) and len(term) == 2,
                tpath,
                "must be a [coeff, k] pair",
            )
            coeff, k = term
            _require(
                isinstance(coeff, int) and not isinstance(coeff, bool),
                f"{tpath}[0]",
                "coefficient must be an integer",
            )
            _require(0 <= coeff < p, f"{tpath}[0]", f"coefficient must lie in 0..{p - 1}")
            _require(
                isinstance(k, int) and not isinstance(k, bool),
                f"{tpath}[1]",
                "must be an integer",
            )
            _require(0 <= k < dim, f"{tpath}[1]", f"index out of range 0..{dim - 1}")
            parsed_terms.append((coeff, k))
        brackets[(i, j)] = parsed_terms
    return LieAlgebra.from_brackets(p, basis, brackets, validate=False)


def serialize_algebra(L: LieAlgebra) -> str:
    """Canonical file text: brackets sorted by (i, j), terms by k."""
    entries = []
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            vec = L.structure[i][j]
            terms = [[c, k] for k, c in enumerate(vec) if c]
            if terms:
                entries.append({"i": i, "j": j, "terms": terms})
    data = {
        "p": L.p,
        "dim": L.dim,
        "basis": list(L.labels),
        "brackets": entries,
    }
    return json.dumps(data, indent=2) + "\n"


def parse_subspace_spec(text: str, L: LieAlgebra) -> Subspace:
    """--u syntax: semicolon-separated vectors of comma-separated residues,
    e.g. "0,0,1,0,0;0,0,0,1,0"; the empty string or "0" means the zero
    subspace."""
    text = text.strip()
    if text in ("", "0"):
        return Subspace.zero(L.p, L.dim)
    vectors = []
    for vi, chunk in enumerate(text.split(";")):
        parts = [s.strip() for s in chunk.split(",")]
        try:
            vec = tuple(int(s) for s in parts)
        except ValueError:
            raise FileFormatError(f"u[{vi}]", f"non-integer coordinate in {chunk!r}") from None
        if len(vec) != L.dim:
            raise FileFormatError(
                f"u[{vi}]", f"expected {L.dim} coordinates, got {len(vec)}"
            )
        vectors.append(vec)
    return Subspace.span(L.p, L.dim, vectors)


def subalgebra_from_spec(text: str, L: LieAlgebra) -> Subspace:
    """Parse a subspace spec and insist it is bracket-closed.

    The span is never silently closed up: supplying a non-subalgebra would
    change the question being asked, so it is an error with a witness.
    """
    from .algebra import require_subalgebra

    return require_subalgebra(L, parse_subspace_spec(text, L))
