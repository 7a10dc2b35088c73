"""Independent brute-force reference implementations.

Everything here works on plain frozensets of coordinate tuples and raw
bracket tables (dicts keyed by basis-index pairs), never on the package
under test.  Used to compute expected values that the test suite freezes,
and for live cross-validation on small algebras.

A "space" is the frozenset of ALL its vectors; a table maps (i, j) with
i < j to the coordinate tuple of [b_i, b_j] (other pairs implicit).
"""

from __future__ import annotations

import itertools

# -- vectors ----------------------------------------------------------------


def vadd(u, v, p):
    return tuple((a + b) % p for a, b in zip(u, v))


def vneg(v, p):
    return tuple(-a % p for a in v)


def vscale(c, v, p):
    return tuple((c * a) % p for a in v)


def zero_vec(n):
    return (0,) * n


def table_bracket(p, n, table, x, y):
    """Bilinear extension of a sparse i < j table."""
    out = zero_vec(n)
    for i in range(n):
        if not x[i]:
            continue
        for j in range(n):
            if not y[j]:
                continue
            if i < j:
                base = table.get((i, j))
            elif j < i:
                base = table.get((j, i))
                base = vneg(base, p) if base is not None else None
            else:
                base = None
            if base is not None:
                out = vadd(out, vscale(x[i] * y[j], base, p), p)
    return out


# -- spaces as vector sets --------------------------------------------------


def span_set(p, n, vectors):
    """Frozenset of all linear combinations."""
    vectors = [tuple(v) for v in vectors if any(v)]
    space = {zero_vec(n)}
    for v in vectors:
        space = {vadd(s, vscale(c, v, p), p) for s in space for c in range(p)}
    return frozenset(space)


def extend_span(p, space, v):
    """span(space + {v}) when space is already a span."""
    return frozenset(vadd(s, vscale(c, v, p), p) for s in space for c in range(p))


def all_subspaces(p, n):
    """Every subspace of GF(p)^n as a frozenset, by lattice extension."""
    full = [v for v in itertools.product(range(p), repeat=n)]
    done = set()
    frontier = {frozenset({zero_vec(n)})}
    while frontier:
        space = frontier.pop()
        if space in done:
            continue
        done.add(space)
        for v in full:
            if any(v) and v not in space:
                bigger = extend_span(p, space, v)
                if bigger not in done:
                    frontier.add(bigger)
    return done


def basis_of(p, n, space):
    """A greedy independent generating subset (smallest-first scan)."""
    basis = []
    current = {zero_vec(n)}
    for v in sorted(space):
        if v not in current:
            basis.append(v)
            current = extend_span(p, frozenset(current), v)
        if len(current) == len(space):
            break
    return basis


def is_closed(p, n, table, space):
    basis = basis_of(p, n, space)
    return all(
        table_bracket(p, n, table, a, b) in space for a in basis for b in basis
    )


def subalgebras(p, n, table, spaces=None):
    if spaces is None:
        spaces = all_subspaces(p, n)
    return [s for s in spaces if is_closed(p, n, table, s)]


def subalgebra_closure_set(p, n, table, space):
    current = frozenset(space)
    while True:
        basis = basis_of(p, n, current)
        extra = [
            w
            for a in basis
            for b in basis
            if (w := table_bracket(p, n, table, a, b)) not in current
        ]
        if not extra:
            return current
        current = span_set(p, n, basis + extra)


def is_ideal_set(p, n, table, space):
    units = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    basis = basis_of(p, n, space)
    return all(
        table_bracket(p, n, table, a, e) in space for a in basis for e in units
    )


def ideals(p, n, table, spaces=None):
    if spaces is None:
        spaces = all_subspaces(p, n)
    return [s for s in spaces if is_ideal_set(p, n, table, s)]


def minimal_ideals_set(p, n, table, spaces=None):
    ids = [s for s in ideals(p, n, table, spaces) if len(s) > 1]
    return [a for a in ids if not any(b < a for b in ids if len(b) > 1)]


def maximal_subalgebras(p, n, table, subs=None):
    if subs is None:
        subs = subalgebras(p, n, table)
    full_size = p**n
    proper = [s for s in subs if len(s) < full_size]
    return [s for s in proper if not any(s < t for t in proper)]


def phi_set(p, n, table, s_space, subs=None):
    """Intersection of maximal subalgebras containing s (full space if none)."""
    maximal = maximal_subalgebras(p, n, table, subs)
    over = [m for m in maximal if s_space <= m]
    if not over:
        return frozenset(itertools.product(range(p), repeat=n))
    out = over[0]
    for m in over[1:]:
        out = out & m
    return frozenset(out)


# -- omega by definition ----------------------------------------------------


def interval_complemented(p, n, table, s_space, subs, closure_cache=None):
    """Every B in [s:L] has T in [s:L] with B & T = s and <B,T> = L."""
    full_size = p**n
    members = [t for t in subs if s_space <= t]
    if closure_cache is None:
        closure_cache = {}

    def join_full(b, t):
        key = frozenset(b | t)
        if key not in closure_cache:
            closure_cache[key] = (
                len(subalgebra_closure_set(p, n, table, span_set(p, n, list(key))))
                == full_size
            )
        return closure_cache[key]

    for b in members:
        if not any((b & t) == s_space and join_full(b, t) for t in members):
            return False
    return True


def omega_sets(p, n, table, u_space, subs=None):
    if subs is None:
        subs = subalgebras(p, n, table)
    cache = {}
    return [
        s
        for s in subs
        if u_space <= s and interval_complemented(p, n, table, s, subs, cache)
    ]


def minimal_members(spaces):
    return [s for s in spaces if not any(t < s for t in spaces)]


# -- chief series and prefrattini by definition -----------------------------


def all_chief_chains(p, n, table, spaces=None):
    """All maximal chains of ideals (chief series), as tuples of vector sets.

    A factor is chief iff no ideal of L lies strictly between its endpoints,
    which is the quotient-free characterization.
    """
    ids = ideals(p, n, table, spaces)
    full = max(ids, key=len)
    chains = []

    def extend(chain):
        last = chain[-1]
        if last == full:
            chains.append(tuple(chain))
            return
        above = [a for a in ids if last < a]
        nexts = [a for a in above if not any(b < a for b in above)]
        for a in sorted(nexts, key=sorted):
            extend(chain + [a])

    extend([frozenset({zero_vec(n)})])
    return chains


def u_frattini_flag(p, n, table, u_space, prev, nxt, subs):
    v = span_set(p, n, basis_of(p, n, u_space) + basis_of(p, n, prev))
    if len(v) == p**n:
        return True
    return nxt <= phi_set(p, n, table, v, subs)


def factor_complement_family(p, n, table, u_space, prev, nxt, subs):
    v = span_set(p, n, basis_of(p, n, u_space) + basis_of(p, n, prev))
    maximal = maximal_subalgebras(p, n, table, subs)
    return [m for m in maximal if v <= m and not nxt <= m]


def prefrattini_sets(p, n, table, u_space, chain, subs=None):
    """Distinct intersections of one complement per non-Frattini factor."""
    if subs is None:
        subs = subalgebras(p, n, table)
    families = []
    for prev, nxt in zip(chain, chain[1:]):
        if not u_frattini_flag(p, n, table, u_space, prev, nxt, subs):
            families.append(factor_complement_family(p, n, table, u_space, prev, nxt, subs))
    partial = {frozenset(itertools.product(range(p), repeat=n))}
    for family in families:
        partial = {b & m for b in partial for m in family}
    return partial


# -- frozen-value report ----------------------------------------------------


def _weyl_table(p):
    n = p + 3
    ic, is_, ix = p, p + 1, p + 2
    table = {}
    for i in range(p):
        table[(i, ic)] = tuple(1 if k == i else 0 for k in range(n))
    for i in range(p - 1):
        table[(i, is_)] = tuple(1 if k == i + 1 else 0 for k in range(n))
    for i in range(1, p):
        table[(i, ix)] = tuple(i % p if k == i - 1 else 0 for k in range(n))
    table[(is_, ix)] = tuple(1 if k == ic else 0 for k in range(n))
    return n, table


def _report(name, value):
    print(f"{name} = {value!r}")


def _sorted_bases(p, n, spaces):
    return sorted(tuple(basis_of(p, n, s)) for s in spaces)


def main():
    # Heisenberg [x, y] = z over GF(2) and GF(3).
    for p in (2, 3):
        n = 3
        table = {(0, 1): (0, 0, 1)}
        subs = subalgebras(p, n, table)
        _report(f"heis p{p} subalgebra count", len(subs))
        _report(f"heis p{p} maximal", _sorted_bases(p, n, maximal_subalgebras(p, n, table, subs)))
        _report(f"heis p{p} phi(0)", sorted(phi_set(p, n, table, frozenset({zero_vec(n)}), subs)))
        _report(f"heis p{p} minimal ideals", _sorted_bases(p, n, minimal_ideals_set(p, n, table)))
        _report(f"heis p{p} chief chain count", len(all_chief_chains(p, n, table)))
        om = omega_sets(p, n, table, frozenset({zero_vec(n)}), subs)
        _report(f"heis p{p} omega_min(0)", _sorted_bases(p, n, minimal_members(om)))
        chain = sorted(all_chief_chains(p, n, table))[0]
        pf = prefrattini_sets(p, n, table, frozenset({zero_vec(n)}), list(chain), subs)
        _report(f"heis p{p} prefrattini(0)", _sorted_bases(p, n, pf))

    # Affine line [u, v] = v over GF(2) and GF(3).
    for p in (2, 3):
        n = 2
        table = {(0, 1): (0, 1)}
        subs = subalgebras(p, n, table)
        _report(f"affine p{p} subalgebra count", len(subs))
        _report(f"affine p{p} maximal", _sorted_bases(p, n, maximal_subalgebras(p, n, table, subs)))
        _report(f"affine p{p} minimal ideals", _sorted_bases(p, n, minimal_ideals_set(p, n, table)))
        _report(f"affine p{p} chief chain count", len(all_chief_chains(p, n, table)))
        om = omega_sets(p, n, table, frozenset({zero_vec(n)}), subs)
        _report(f"affine p{p} omega_min(0)", _sorted_bases(p, n, minimal_members(om)))
        chain = sorted(all_chief_chains(p, n, table))[0]
        pf = prefrattini_sets(p, n, table, frozenset({zero_vec(n)}), list(chain), subs)
        _report(f"affine p{p} prefrattini(0)", _sorted_bases(p, n, pf))

    # Abelian GF(2)^2: the interval [0:L] is the whole subspace lattice.
    _report("abelian2 p2 subalgebra count", len(subalgebras(2, 2, {})))

    # Diagonal action: [a1,u]=a1, [a2,u]=a2, [u,v]=v on basis (a1,a2,u,v).
    for p in (2,):
        n = 4
        table = {
            (0, 2): (1, 0, 0, 0),
            (1, 2): (0, 1, 0, 0),
            (2, 3): (0, 0, 0, 1),
        }
        _report(f"diagonal p{p} minimal ideals", _sorted_bases(p, n, minimal_ideals_set(p, n, table)))
        _report(f"diagonal p{p} chief chain count", len(all_chief_chains(p, n, table)))

    # Scaled Heisenberg: basis (hx,hy,hz,t); [hx,hy]=hz, [hx,t]=hx,
    # [hy,t]=hy, [hz,t]=2hz.
    for p in (2, 3):
        n = 4
        table = {
            (0, 1): (0, 0, 1, 0),
            (0, 3): (1, 0, 0, 0),
            (1, 3): (0, 1, 0, 0),
            (2, 3): (0, 0, 2 % p, 0),
        }
        _report(f"scaledheis p{p} minimal ideals", _sorted_bases(p, n, minimal_ideals_set(p, n, table)))
        chains = all_chief_chains(p, n, table)
        _report(f"scaledheis p{p} chief chain count", len(chains))
        _report(
            f"scaledheis p{p} chain dims",
            sorted({tuple(len(basis_of(p, n, s)) for s in ch) for ch in chains}),
        )

    # Truncated Weyl family at p = 2: the fully frozen worked example.
    p = 2
    n, table = _weyl_table(p)
    subs = subalgebras(p, n, table)
    _report("weyl p2 subalgebra count", len(subs))
    zero = frozenset({zero_vec(n)})
    _report("weyl p2 phi(0) size", len(phi_set(p, n, table, zero, subs)))
    _report("weyl p2 minimal ideals", _sorted_bases(p, n, minimal_ideals_set(p, n, table)))
    s_x = span_set(p, n, [(0, 0, 0, 1, 0), (0, 0, 0, 0, 1)])
    _report("weyl p2 closure(span(s,x))", sorted(basis_of(p, n, subalgebra_closure_set(p, n, table, s_x))))
    chains = all_chief_chains(p, n, table)
    _report("weyl p2 chief chain count", len(chains))
    _report(
        "weyl p2 chain dim profiles",
        sorted({tuple(len(basis_of(p, n, s)) for s in ch) for ch in chains}),
    )
    for ch in sorted(chains):
        _report("weyl p2 chain", [sorted(basis_of(p, n, s)) for s in ch])
    om = omega_sets(p, n, table, zero, subs)
    _report("weyl p2 omega(0) count", len(om))
    _report("weyl p2 omega_min(0)", _sorted_bases(p, n, minimal_members(om)))
    chain = list(sorted(chains)[0])
    flags = [
        u_frattini_flag(p, n, table, zero, prev, nxt, subs)
        for prev, nxt in zip(chain, chain[1:])
    ]
    _report("weyl p2 frattini flags (first chain)", flags)
    for ch in chains:
        pf = prefrattini_sets(p, n, table, zero, list(ch), subs)
        _report("weyl p2 prefrattini(0)", _sorted_bases(p, n, pf))
    # U = closure of span(s, x): the nontrivial golden U.
    u_sx = subalgebra_closure_set(p, n, table, s_x)
    om_u = omega_sets(p, n, table, u_sx, subs)
    _report("weyl p2 omega_min(<s,x>)", _sorted_bases(p, n, minimal_members(om_u)))
    pf_u = prefrattini_sets(p, n, table, u_sx, chain, subs)
    _report("weyl p2 prefrattini(<s,x>)", _sorted_bases(p, n, pf_u))
    flags_u = [
        u_frattini_flag(p, n, table, u_sx, prev, nxt, subs)
        for prev, nxt in zip(chain, chain[1:])
    ]
    _report("weyl p2 frattini flags (<s,x>)", flags_u)
    # exp(ad e0) on c: c + [c, e0].
    e0 = tuple(1 if k == 0 else 0 for k in range(n))
    c = tuple(1 if k == p else 0 for k in range(n))
    _report("weyl p2 [c, e0]", table_bracket(p, n, table, c, e0))


if __name__ == "__main__":
    main()
