"""Compiled inner loops for exhaustive searches over finite fields.

Field arithmetic is passed in as lookup tables (payload indices), which
covers both GF(p) and GF(p^k).
"""

import numpy as np
from numba import njit


def field_tables(f):
    q = f.order
    add = np.empty((q, q), dtype=np.int64)
    mul = np.empty((q, q), dtype=np.int64)
    neg = np.empty(q, dtype=np.int64)
    inv = np.zeros(q, dtype=np.int64)
    for a in range(q):
        neg[a] = f.neg(a)
        if a:
            inv[a] = f.inv(a)
        for b in range(q):
            add[a, b] = f.add(a, b)
            mul[a, b] = f.mul(a, b)
    return add, mul, neg, inv


@njit(cache=True)
def _left_kernel(M, n, add, mul, neg, inv):
    """Basis (rows) of {y : y M = 0} for an n x n table-field matrix."""
    # eliminate on the transpose: M^T y^T = 0
    A = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            A[i, j] = M[j, i]
    piv_col = np.full(n, -1, dtype=np.int64)
    r = 0
    for c in range(n):
        pr = -1
        for i in range(r, n):
            if A[i, c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(n):
                t = A[r, j]
                A[r, j] = A[pr, j]
                A[pr, j] = t
        s = inv[A[r, c]]
        for j in range(n):
            A[r, j] = mul[s, A[r, j]]
        for i in range(n):
            if i != r and A[i, c] != 0:
                fac = A[i, c]
                for j in range(n):
                    A[i, j] = add[A[i, j], neg[mul[fac, A[r, j]]]]
        piv_col[r] = c
        r += 1
    is_piv = np.zeros(n, dtype=np.bool_)
    for i in range(r):
        is_piv[piv_col[i]] = True
    K = np.zeros((n - r, n), dtype=np.int64)
    k = 0
    for fc in range(n):
        if is_piv[fc]:
            continue
        K[k, fc] = 1
        for i in range(r):
            K[k, piv_col[i]] = neg[A[i, fc]]
        k += 1
    return K


@njit(cache=True)
def _bracket(x, y, T, n, add, mul):
    out = np.zeros(n, dtype=np.int64)
    for i in range(n):
        if x[i] == 0:
            continue
        for j in range(n):
            if y[j] == 0:
                continue
            c = mul[x[i], y[j]]
            for k in range(n):
                if T[i, j, k] != 0:
                    out[k] = add[out[k], mul[c, T[i, j, k]]]
    return out


@njit(cache=True)
def _rank(M, rows, cols, add, mul, neg, inv):
    A = M[:rows, :cols].copy()
    r = 0
    for c in range(cols):
        pr = -1
        for i in range(r, rows):
            if A[i, c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(cols):
                t = A[r, j]
                A[r, j] = A[pr, j]
                A[pr, j] = t
        s = inv[A[r, c]]
        for j in range(cols):
            A[r, j] = mul[s, A[r, j]]
        for i in range(r + 1, rows):
            if A[i, c] != 0:
                fac = A[i, c]
                for j in range(cols):
                    A[i, j] = add[A[i, j], neg[mul[fac, A[r, j]]]]
        r += 1
        if r == rows:
            break
    return r


@njit(cache=True)
def heisenberg_search(T, n, q, add, mul, neg, inv, max_pairs):
    """Search x, y0 such that some y = y0 + k, k in ker ad(x), gives a Heisenberg triple.

    For x fixed, z = [y, x] must lie in ad(x)(ker ad(x)^2) and [z, y] = 0 is
    linear in k once z (equivalently y0 modulo ker ad(x)) is fixed.  x runs over
    normalised vectors, z over normalised combinations of a basis of
    ker ad(x)^2 modulo ker ad(x).  Returns (status, candidates, x, y0) with
    status 1 = found, 0 = exhausted, -1 = budget exceeded.
    """
    x = np.zeros(n, dtype=np.int64)
    y = np.zeros(n, dtype=np.int64)
    A = np.zeros((n, n), dtype=np.int64)
    A2 = np.zeros((n, n), dtype=np.int64)
    pairs = 0
    total = q ** n
    for idx in range(1, total):
        t = idx
        for i in range(n - 1, -1, -1):
            x[i] = t % q
            t //= q
        lead = 0
        for i in range(n):
            if x[i] != 0:
                lead = x[i]
                break
        if lead != 1:
            continue
        # A[j] = [e_j, x]
        for j in range(n):
            for k in range(n):
                A[j, k] = 0
            for i in range(n):
                if x[i] == 0:
                    continue
                for k in range(n):
                    if T[j, i, k] != 0:
                        A[j, k] = add[A[j, k], mul[x[i], T[j, i, k]]]
        for j in range(n):
            for k in range(n):
                s = 0
                for m in range(n):
                    if A[j, m] != 0 and A[m, k] != 0:
                        s = add[s, mul[A[j, m], A[m, k]]]
                A2[j, k] = s
        K1 = _left_kernel(A, n, add, mul, neg, inv)
        K2 = _left_kernel(A2, n, add, mul, neg, inv)
        d1 = K1.shape[0]
        # complement of K1 inside K2
        S = np.zeros((n + 1, n), dtype=np.int64)
        for r in range(d1):
            S[r, :] = K1[r, :]
        cur = d1
        Y = np.zeros((n, n), dtype=np.int64)
        r2 = 0
        for r in range(K2.shape[0]):
            S[cur, :] = K2[r, :]
            if _rank(S, cur + 1, n, add, mul, neg, inv) == cur + 1:
                Y[r2, :] = K2[r, :]
                r2 += 1
                cur += 1
        if r2 == 0:
            continue
        M = np.zeros((d1 + 1, n), dtype=np.int64)
        for cidx in range(1, q ** r2):
            t = cidx
            lead = 0
            coeffs = np.zeros(r2, dtype=np.int64)
            for r in range(r2 - 1, -1, -1):
                coeffs[r] = t % q
                t //= q
            for r in range(r2):
                if coeffs[r] != 0:
                    lead = coeffs[r]
                    break
            if lead != 1:
                continue
            pairs += 1
            if pairs > max_pairs:
                return -1, pairs, x, y
            for k in range(n):
                y[k] = 0
            for r in range(r2):
                c = coeffs[r]
                if c != 0:
                    for k in range(n):
                        if Y[r, k] != 0:
                            y[k] = add[y[k], mul[c, Y[r, k]]]
            z = np.zeros(n, dtype=np.int64)
            for j in range(n):
                if y[j] == 0:
                    continue
                for k in range(n):
                    if A[j, k] != 0:
                        z[k] = add[z[k], mul[y[j], A[j, k]]]
            # need k in span K1 with [z, k] = -[z, y]: rhs in row space of [z, K1_r]
            for r in range(d1):
                M[r, :] = _bracket(z, K1[r], T, n, add, mul)
            rk = _rank(M, d1, n, add, mul, neg, inv)
            M[d1, :] = _bracket(z, y, T, n, add, mul)
            if _rank(M, d1 + 1, n, add, mul, neg, inv) == rk:
                return 1, pairs, x.copy(), y.copy()
    return 0, pairs, x, y


@njit(cache=True)
def square_zero_elements(T, n, q, add, mul):
    """Indices (base-q, most significant first) of c with (ad c)^2 = 0."""
    out = []
    x = np.zeros(n, dtype=np.int64)
    A = np.zeros((n, n), dtype=np.int64)
    for idx in range(q ** n):
        t = idx
        for i in range(n - 1, -1, -1):
            x[i] = t % q
            t //= q
        for j in range(n):
            for k in range(n):
                A[j, k] = 0
            for i in range(n):
                if x[i] == 0:
                    continue
                for k in range(n):
                    if T[j, i, k] != 0:
                        A[j, k] = add[A[j, k], mul[x[i], T[j, i, k]]]
        ok = True
        for j in range(n):
            for k in range(n):
                s = 0
                for m in range(n):
                    if A[j, m] != 0 and A[m, k] != 0:
                        s = add[s, mul[A[j, m], A[m, k]]]
                if s != 0:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(idx)
    return out
