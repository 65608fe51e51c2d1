"""Check routines shared by the unit tests and the acceptance run."""
from __future__ import annotations

import itertools
from math import comb

import sympy

from foamcalc.grassmann import GrassmannAlgebra, evaluate_at_subset, idempotents
from foamcalc.symcore import Partition
from foamcalc.webmoy import insert_digon, theta_web


def symbolic_field(N: int):
    syms = sympy.symbols(f"l1:{N + 1}")
    K = sympy.QQ.frac_field(*syms)
    gens = list(K.gens)
    T = type(gens[0])

    def conv(v):
        return v if isinstance(v, T) else K(v)

    return gens, conv


def _mult(G, x, y, env, conv):
    out = {}
    for alpha, ca in x.items():
        for beta, cb in y.items():
            for gamma, c in G.structure(alpha, beta).items():
                out[gamma] = out.get(gamma, conv(0)) + ca * cb * c.map_into(env, conv)
    return {g: v for g, v in out.items() if v != 0}


def idempotent_suite(N: int) -> None:
    """Completeness, orthogonality and the eigenvalue action over Q(l1..lN)."""
    gens, conv = symbolic_field(N)
    evals = [conv(1)] + [conv(0)] * N
    for v in gens:
        for k in range(N, 0, -1):
            evals[k] = evals[k] + evals[k - 1] * v
    env = {f"e{k}": evals[k] for k in range(1, N + 1)}
    for a in range(N + 1):
        G = GrassmannAlgebra(N, a)
        ids = idempotents(gens, a, conv)
        assert len(ids) == comb(N, a)
        total = {}
        for _, e in ids:
            for lam, c in e.items():
                total[lam] = total.get(lam, conv(0)) + c
        assert {k: v for k, v in total.items() if v != 0} == {Partition(()): conv(1)}
        for (A, eA), (B, eB) in itertools.product(ids, repeat=2):
            assert _mult(G, eA, eB, env, conv) == (eA if A == B else {})
        for A, eA in ids:
            vals = [gens[i] for i in A]
            for lam in G.basis:
                lhs = _mult(G, {lam: conv(1)}, eA, env, conv)
                pA = evaluate_at_subset(lam, vals, conv)
                assert lhs == {g: pA * c for g, c in eA.items() if pA * c != 0}


def random_closed_web(rng, max_label: int = 3):
    """A theta web with up to two random digons inserted."""
    while True:
        a, b = rng.randint(1, max_label - 1), rng.randint(1, max_label - 1)
        if a + b <= max_label:
            break
    W = theta_web(a, b)
    for _ in range(rng.randint(0, 2)):
        big = [e for e in range(W.n_edges) if W.labels[e] > 1]
        e = rng.choice(big)
        W = insert_digon(W, e, rng.randint(1, W.labels[e] - 1))
    return W
