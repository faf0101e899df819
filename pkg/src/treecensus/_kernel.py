"""Compiled enumeration core for the labeled-tree census.

Hot loops for walking a lexicographic range of the code space
A^{b-1} x B^{a-1}: batched decoding into edge arrays, and canonical-class
deduplication with packed fingerprints.  Everything here is written against
plain numpy arrays so the same functions run (slowly) as ordinary Python
when numba is unavailable; callers must only hand in codes generated by the
enumeration itself, since for speed nothing is re-validated.

Fingerprints are the same integer sequences produced by
``bigraph.canonical_form``; a fingerprint of a tree on n vertices is packed
into two int64 words by treating its first ceil(n/2) values as base-(n+1)
digits of the high word and the rest as the low word, which preserves
lexicographic order and fits for n <= KERNEL_MAX_N.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(**_kwargs):
        def wrap(fn):
            return fn

        return wrap


KERNEL_MAX_N = 25
MAX_INDEX = 2 ** 62
_MIX = 2685821657736338717  # odd multiplier for hashing, < 2**63


def pack_fingerprint(fp) -> tuple[int, int]:
    """Pure-Python reference for the kernel's fingerprint packing."""
    n = len(fp)
    if n > KERNEL_MAX_N:
        raise ValueError(f"packing supports up to {KERNEL_MAX_N} vertices")
    k1 = (n + 1) // 2
    base = n + 1
    hi = 0
    for i in range(k1):
        hi = hi * base + fp[i]
    lo = 0
    for i in range(k1, n):
        lo = lo * base + fp[i]
    return hi, lo


@njit(cache=True, nogil=True)
def _expand_digits(a, b, start, digits):
    # Mixed-radix expansion of a code index: b-1 base-a digits (the A-vertex
    # sequence) followed by a-1 base-b digits, most significant first.
    x = start
    for p in range(digits.shape[0] - 1, -1, -1):
        base = a if p < b - 1 else b
        digits[p] = x % base
        x //= base


@njit(cache=True, nogil=True)
def _advance_digits(a, b, digits):
    p = digits.shape[0] - 1
    while p >= 0:
        base = a if p < b - 1 else b
        digits[p] += 1
        if digits[p] < base:
            return
        digits[p] = 0
        p -= 1


@njit(cache=True, nogil=True)
def _decode_into(a, b, digits, deg, eu, ev):
    # Smallest-leaf reconstruction with the moving-pointer trick; edges come
    # out as global vertex ids (A block 0..a-1, then B block a..a+b-1).
    n = a + b
    for v in range(n):
        deg[v] = 1
    for p in range(b - 1):
        deg[digits[p]] += 1
    for p in range(b - 1, n - 2):
        deg[a + digits[p]] += 1
    pa = 0
    pb = b - 1
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for k in range(n - 2):
        if leaf < a:
            u = a + digits[pb]
            pb += 1
        else:
            u = digits[pa]
            pa += 1
        eu[k] = leaf
        ev[k] = u
        deg[leaf] = 0
        deg[u] -= 1
        if k == n - 3:
            break
        if deg[u] == 1 and u < ptr:
            leaf = u
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    u1 = -1
    for v in range(n):
        if deg[v] == 1:
            if u1 < 0:
                u1 = v
            else:
                eu[n - 2] = u1
                ev[n - 2] = v
                break


@njit(cache=True, nogil=True)
def decode_batch(a, b, start, count, out):
    """Decode codes [start, start+count) into out[count, 2*(a+b-1)].

    Each row holds the tree's edges as flattened (a_index, b_index) pairs in
    sorted order, i.e. exactly the normalized form the tree type stores.
    """
    n = a + b
    digits = np.zeros(n - 2, np.int64)
    _expand_digits(a, b, start, digits)
    deg = np.empty(n, np.int64)
    eu = np.empty(n - 1, np.int64)
    ev = np.empty(n - 1, np.int64)
    key = np.empty(n - 1, np.int64)
    for row in range(count):
        _decode_into(a, b, digits, deg, eu, ev)
        for k in range(n - 1):
            u = eu[k]
            v = ev[k]
            if u < a:
                key[k] = u * b + (v - a)
            else:
                key[k] = v * b + (u - a)
        key.sort()
        for k in range(n - 1):
            out[row, 2 * k] = key[k] // b
            out[row, 2 * k + 1] = key[k] % b
        _advance_digits(a, b, digits)


@njit(cache=True, nogil=True)
def _centers_csr(n, adj, adj_pos, sdeg, layer, nxt):
    # Layered leaf stripping; returns (c1, c2) with c2 == -1 for a single
    # center and c1 < c2 otherwise.
    if n == 2:
        return 0, 1
    ln = 0
    for v in range(n):
        sdeg[v] = adj_pos[v + 1] - adj_pos[v]
        if sdeg[v] == 1:
            layer[ln] = v
            ln += 1
    remaining = n
    while remaining > 2:
        remaining -= ln
        nn = 0
        for i in range(ln):
            v = layer[i]
            sdeg[v] = 0
            for p in range(adj_pos[v], adj_pos[v + 1]):
                w = adj[p]
                if sdeg[w] > 0:
                    sdeg[w] -= 1
                    if sdeg[w] == 1:
                        nxt[nn] = w
                        nn += 1
        for i in range(nn):
            layer[i] = nxt[i]
        ln = nn
    if ln == 1:
        return layer[0], -1
    c1 = layer[0]
    c2 = layer[1]
    if c1 > c2:
        c1, c2 = c2, c1
    return c1, c2


@njit(cache=True, nogil=True)
def _block_less(enc, enc_len, n, c1, c2):
    l1 = enc_len[c1]
    l2 = enc_len[c2]
    b1 = c1 * n
    b2 = c2 * n
    m = l1 if l1 < l2 else l2
    for i in range(m):
        x = enc[b1 + i]
        y = enc[b2 + i]
        if x != y:
            return x < y
    return l1 < l2


@njit(cache=True, nogil=True)
def _encode_rooted(n, adj, adj_pos, root, parent, order, enc, enc_len, kids,
                   out_fp):
    # Same encoding as bigraph._rooted_encoding: subtree size, then child
    # blocks in ascending lexicographic order.
    for v in range(n):
        parent[v] = -1
    parent[root] = root
    order[0] = root
    ocount = 1
    i = 0
    while i < ocount:
        v = order[i]
        for p in range(adj_pos[v], adj_pos[v + 1]):
            w = adj[p]
            if parent[w] == -1:
                parent[w] = v
                order[ocount] = w
                ocount += 1
        i += 1
    for oi in range(n - 1, -1, -1):
        v = order[oi]
        kc = 0
        for p in range(adj_pos[v], adj_pos[v + 1]):
            w = adj[p]
            if parent[w] == v and w != v:
                kids[kc] = w
                kc += 1
        for x in range(1, kc):
            c = kids[x]
            y = x - 1
            while y >= 0 and _block_less(enc, enc_len, n, c, kids[y]):
                kids[y + 1] = kids[y]
                y -= 1
            kids[y + 1] = c
        base = v * n
        pos = 1
        for x in range(kc):
            c = kids[x]
            cl = enc_len[c]
            cbase = c * n
            for t in range(cl):
                enc[base + pos + t] = enc[cbase + t]
            pos += cl
        enc[base] = pos
        enc_len[v] = pos
    rbase = root * n
    for i in range(n):
        out_fp[i] = enc[rbase + i]


@njit(cache=True, nogil=True)
def census_range(a, b, lo, hi):
    """Canonical-class census of the code range [lo, hi).

    Returns (key_hi, key_lo, first_index) arrays with one row per distinct
    canonical fingerprint among the decoded trees; first_index is the
    smallest code index in the range producing that class.
    """
    n = a + b
    digits = np.zeros(n - 2, np.int64)
    _expand_digits(a, b, lo, digits)
    deg = np.empty(n, np.int64)
    eu = np.empty(n - 1, np.int64)
    ev = np.empty(n - 1, np.int64)
    adj = np.empty(2 * (n - 1), np.int64)
    adj_pos = np.empty(n + 1, np.int64)
    cnt = np.empty(n, np.int64)
    sdeg = np.empty(n, np.int64)
    layer = np.empty(n, np.int64)
    nxt = np.empty(n, np.int64)
    parent = np.empty(n, np.int64)
    order = np.empty(n, np.int64)
    enc = np.empty(n * n, np.int64)
    enc_len = np.empty(n, np.int64)
    kids = np.empty(n, np.int64)
    fp1 = np.empty(n, np.int64)
    fp2 = np.empty(n, np.int64)

    cap = 1024
    khi = np.zeros(cap, np.int64)
    klo = np.zeros(cap, np.int64)
    kidx = np.full(cap, -1, np.int64)
    size = 0

    k1 = (n + 1) // 2
    pbase = n + 1

    for idx in range(lo, hi):
        _decode_into(a, b, digits, deg, eu, ev)
        for v in range(n):
            cnt[v] = 0
        for k in range(n - 1):
            cnt[eu[k]] += 1
            cnt[ev[k]] += 1
        adj_pos[0] = 0
        for v in range(n):
            adj_pos[v + 1] = adj_pos[v] + cnt[v]
            cnt[v] = 0
        for k in range(n - 1):
            u = eu[k]
            v = ev[k]
            adj[adj_pos[u] + cnt[u]] = v
            cnt[u] += 1
            adj[adj_pos[v] + cnt[v]] = u
            cnt[v] += 1
        c1, c2 = _centers_csr(n, adj, adj_pos, sdeg, layer, nxt)
        _encode_rooted(n, adj, adj_pos, c1, parent, order, enc, enc_len,
                       kids, fp1)
        if c2 >= 0:
            _encode_rooted(n, adj, adj_pos, c2, parent, order, enc, enc_len,
                           kids, fp2)
            for i in range(n):
                if fp2[i] < fp1[i]:
                    for j in range(n):
                        fp1[j] = fp2[j]
                    break
                elif fp2[i] > fp1[i]:
                    break
        h = 0
        for i in range(k1):
            h = h * pbase + fp1[i]
        l = 0
        for i in range(k1, n):
            l = l * pbase + fp1[i]

        mask = cap - 1
        slot = ((int(h) * _MIX + int(l)) & 0x7FFFFFFFFFFFFFFF) & mask
        while True:
            if kidx[slot] < 0:
                khi[slot] = h
                klo[slot] = l
                kidx[slot] = idx
                size += 1
                break
            if khi[slot] == h and klo[slot] == l:
                break  # indices increase, so the stored one is the minimum
            slot = (slot + 1) & mask
        if size * 4 >= cap * 3:
            ncap = cap * 2
            nhi = np.zeros(ncap, np.int64)
            nlo = np.zeros(ncap, np.int64)
            nidx = np.full(ncap, -1, np.int64)
            nmask = ncap - 1
            for sl in range(cap):
                if kidx[sl] >= 0:
                    hh = khi[sl]
                    ll = klo[sl]
                    s2 = ((int(hh) * _MIX + int(ll)) & 0x7FFFFFFFFFFFFFFF) & nmask
                    while nidx[s2] >= 0:
                        s2 = (s2 + 1) & nmask
                    nhi[s2] = hh
                    nlo[s2] = ll
                    nidx[s2] = kidx[sl]
            khi = nhi
            klo = nlo
            kidx = nidx
            cap = ncap
        _advance_digits(a, b, digits)

    out_hi = np.empty(size, np.int64)
    out_lo = np.empty(size, np.int64)
    out_idx = np.empty(size, np.int64)
    j = 0
    for s in range(cap):
        if kidx[s] >= 0:
            out_hi[j] = khi[s]
            out_lo[j] = klo[s]
            out_idx[j] = kidx[s]
            j += 1
    return out_hi, out_lo, out_idx
