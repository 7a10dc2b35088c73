"""Built-in solvable test algebras and their pinned expected facts.

The headline family is truncated_weyl_algebra(p): the Heisenberg algebra
{c, s, x : [s, x] = c} acting on truncated polynomials F[t]/(t^p), with
e_i playing t^i, s acting as multiplication by t, x as d/dt and c as the
identity operator.  It is solvable but not completely solvable, its
nilpotent residual is the abelian ideal spanned by the e_i, and it is the
smallest standard example where the U-prefrattini subalgebras are not
unique (p^2 of them for U = 0).

Expected facts live in fixtures/goldens.json, regenerated only via
`python -m lieprefrat.corpus --write-goldens` so that enumeration-core
regressions show up as golden-file diffs, never as silent re-baselines.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from importlib import resources

from .algebra import (
    LieAlgebra,
    is_completely_solvable,
    is_solvable,
    nilpotent_residual,
)
from .errors import UnsupportedPrime
from .gfp import check_prime, galois_number

GOLDEN_PRIMES = (2, 3, 5)
_RICH_FACT_LIMIT = 60000  # skip lattice-sized facts when the subspace count explodes


def abelian_algebra(p: int, n: int) -> LieAlgebra:
    """GF(p)^n with the zero bracket."""
    return LieAlgebra.from_brackets(p, [f"a{i}" for i in range(n)], {})


def affine_line_algebra(p: int) -> LieAlgebra:
    """The 2-dimensional nonabelian algebra: [u, v] = v."""
    return LieAlgebra.from_brackets(p, ["u", "v"], {(0, 1): [(1, 1)]})


def heisenberg_algebra(p: int) -> LieAlgebra:
    """Basis x, y, z with [x, y] = z central."""
    return LieAlgebra.from_brackets(p, ["x", "y", "z"], {(0, 1): [(1, 2)]})


def diagonal_action_algebra(p: int) -> LieAlgebra:
    """Split extension of abelian GF(p)^2 by the affine line, acting
    diagonally: [a1, u] = a1, [a2, u] = a2, [u, v] = v, v acting trivially
    (forced: diagonal matrices commute, so v must map to 0)."""
    return LieAlgebra.from_brackets(
        p,
        ["a1", "a2", "u", "v"],
        {(0, 2): [(1, 0)], (1, 2): [(1, 1)], (2, 3): [(1, 3)]},
    )


def scaled_heisenberg_algebra(p: int) -> LieAlgebra:
    """Heisenberg extended by a grading element t of weight 1 on x, y:
    [x, y] = z, [x, t] = x, [y, t] = y, [z, t] = 2z.

    Its nilpotent residual is the whole Heisenberg part (class 2), so the
    prefrattini conjugacy theorem's hypothesis class < p fails exactly at
    p = 2; kept in the corpus to exercise that skip path.
    """
    return LieAlgebra.from_brackets(
        p,
        ["hx", "hy", "hz", "t"],
        {(0, 1): [(1, 2)], (0, 3): [(1, 0)], (1, 3): [(1, 1)], (2, 3): [(2, 2)]},
    )


def truncated_weyl_algebra(p: int) -> LieAlgebra:
    """Heisenberg acting on F[t]/(t^p): dim p + 3, basis e_0..e_{p-1}, c, s, x.

    [e_i, c] = e_i, [e_i, s] = e_{i+1} (e_{p-1} killed), [e_i, x] = i e_{i-1},
    [s, x] = c, everything else zero.
    """
    check_prime(p)
    labels = [f"e{i}" for i in range(p)] + ["c", "s", "x"]
    ic, is_, ix = p, p + 1, p + 2
    brackets: dict[tuple[int, int], list[tuple[int, int]]] = {
        (is_, ix): [(1, ic)],
    }
    for i in range(p):
        brackets[(i, ic)] = [(1, i)]
        if i < p - 1:
            brackets[(i, is_)] = [(1, i + 1)]
        if i >= 1:
            brackets[(i, ix)] = [(i, i - 1)]
    return LieAlgebra.from_brackets(p, labels, brackets)


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    algebra: LieAlgebra
    expected: dict | None  # pinned facts from goldens.json, if present


def _builders(p: int) -> list[tuple[str, LieAlgebra]]:
    return [
        ("abelian1", abelian_algebra(p, 1)),
        ("abelian2", abelian_algebra(p, 2)),
        ("abelian3", abelian_algebra(p, 3)),
        ("affine", affine_line_algebra(p)),
        ("heisenberg", heisenberg_algebra(p)),
        ("diagonal", diagonal_action_algebra(p)),
        ("scaled-heisenberg", scaled_heisenberg_algebra(p)),
        ("truncated-weyl", truncated_weyl_algebra(p)),
    ]


def load_goldens() -> dict:
    path = resources.files(__package__) / "fixtures" / "goldens.json"
    try:
        return json.loads(path.read_text())
    except FileNotFoundError:
        return {}


def standard_corpus(p: int) -> list[CorpusEntry]:
    """The standard test algebras over GF(p), p in {2, 3, 5}."""
    if p not in GOLDEN_PRIMES:
        raise UnsupportedPrime(f"standard corpus defined for p in {GOLDEN_PRIMES}")
    goldens = load_goldens()
    return [
        CorpusEntry(name, alg, goldens.get(f"{name}:p{p}"))
        for name, alg in _builders(p)
    ]


def compute_expected(L: LieAlgebra) -> dict:
    """Facts pinned per corpus entry.

    Always: solvability, complete solvability, residual dimension.  When the
    subspace lattice is small enough to enumerate, also: chief factor dims,
    the 1-based U-Frattini factor indices of the canonical series at U = 0,
    phi(0, L) dimension, and the prefrattini count/dimension at U = 0.
    """
    from .algebra import zero_space
    from .chief import chief_series, classify_series
    from .intervals import context
    from .prefrattini import prefrattini_set

    facts: dict = {
        "solvable": is_solvable(L),
        "completely_solvable": is_completely_solvable(L),
        "residual_dim": nilpotent_residual(L).dim,
    }
    if galois_number(L.dim, L.p) <= _RICH_FACT_LIMIT:
        zero = zero_space(L)
        series = chief_series(L)
        classifications = classify_series(L, series, zero)
        result = prefrattini_set(L, zero, series)
        facts.update(
            {
                "chief_factor_dims": list(series.factor_dims()),
                "frattini_indices": [
                    c.index for c in classifications if c.u_frattini
                ],
                "phi_dim": context(L).phi_of(zero).dim,
                "prefrattini_count": len(result.members),
                "prefrattini_dim": result.common_dim,
            }
        )
    return facts


def write_goldens(path=None) -> dict:
    """Recompute all golden facts; returns the dict and optionally writes it."""
    goldens = {}
    for p in GOLDEN_PRIMES:
        for name, alg in _builders(p):
            goldens[f"{name}:p{p}"] = compute_expected(alg)
    if path is not None:
        with open(path, "w") as fh:
            json.dump(goldens, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return goldens


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="lieprefrat.corpus", description="corpus golden-file maintenance"
    )
    parser.add_argument(
        "--write-goldens",
        action="store_true",
        help="recompute expected facts and overwrite fixtures/goldens.json",
    )
    parser.add_argument("--out", default=None, help="alternative output path")
    args = parser.parse_args(argv)
    if not args.write_goldens:
        parser.error("nothing to do (use --write-goldens)")
    out = args.out
    if out is None:
        out = str(resources.files(__package__) / "fixtures" / "goldens.json")
    write_goldens(out)
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
