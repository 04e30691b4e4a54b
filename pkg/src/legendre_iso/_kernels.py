"""Hot loops over integer-encoded field elements.

Every kernel exists twice: a loop version compiled with ``numba.njit`` and a
vectorised pure-numpy version.  The dispatch names (``iso_scan``,
``general_scan``, ``component_labels``) point at the numba build unless numba
is missing or ``LEGENDRE_ISO_NO_NUMBA`` is set to a non-empty value other
than ``0``.

Field arithmetic is passed in as lookup tables: ``add`` and ``mul`` are q x q,
``inv`` and ``neg`` have length q.  Codes 0 and 1 are always the field's zero
and one.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAS_NUMBA = False

USE_NUMBA = HAS_NUMBA and os.environ.get("LEGENDRE_ISO_NO_NUMBA", "") in ("", "0")

__all__ = [
    "HAS_NUMBA",
    "USE_NUMBA",
    "iso_scan",
    "iso_scan_numpy",
    "general_scan",
    "general_scan_numpy",
    "component_labels",
    "component_labels_numpy",
]


def _iso_scan_loops(add, mul, inv, neg, three, restrict_r):
    # For each Legendre source lam and each (u, r), the short-form equations
    # fix the image coefficients; record the first (u, r) hitting each target.
    q = inv.shape[0]
    wu = np.full((q, q), -1, dtype=np.int64)
    wr = np.full((q, q), -1, dtype=np.int64)
    for lam in range(2, q):
        a2 = neg[add[1, lam]]
        a4 = lam
        for u in range(1, q):
            u2 = mul[u, u]
            iu2 = inv[u2]
            iu4 = mul[iu2, iu2]
            for r in range(q):
                if restrict_r and r != 0 and r != 1 and r != lam:
                    continue
                r2 = mul[r, r]
                e6 = add[add[mul[r, a4], mul[r2, a2]], mul[r2, r]]
                if e6 != 0:
                    continue
                e4 = add[add[a4, mul[add[r, r], a2]], mul[three, r2]]
                mu = mul[e4, iu4]
                if mu == 0 or mu == 1:
                    continue
                e2 = add[a2, mul[three, r]]
                if mul[e2, iu2] != neg[add[1, mu]]:
                    continue
                if wu[lam, mu] < 0:
                    wu[lam, mu] = u
                    wr[lam, mu] = r
    return wu, wr


def iso_scan_numpy(add, mul, inv, neg, three, restrict_r):
    q = inv.shape[0]
    wu = np.full((q, q), -1, dtype=np.int64)
    wr = np.full((q, q), -1, dtype=np.int64)
    us = np.arange(1, q)
    u2 = mul[us, us]
    iu2 = inv[u2]
    iu4 = mul[iu2, iu2]
    for lam in range(2, q):
        a2 = neg[add[1, lam]]
        a4 = lam
        rs = np.array([0, 1, lam]) if restrict_r else np.arange(q)
        r2 = mul[rs, rs]
        e6 = add[add[mul[rs, a4], mul[r2, a2]], mul[r2, rs]]
        e4 = add[add[a4, mul[add[rs, rs], a2]], mul[three, r2]]
        e2 = add[a2, mul[three, rs]]
        # grid is u-major so nonzero() walks hits in scan order
        mu = mul[e4[None, :], iu4[:, None]]
        ok = (e6[None, :] == 0) & (mu != 0) & (mu != 1)
        ok &= mul[e2[None, :], iu2[:, None]] == neg[add[1, mu]]
        iu, ir = np.nonzero(ok)
        if iu.size:
            targets, first = np.unique(mu[iu, ir], return_index=True)
            wu[lam, targets] = us[iu[first]]
            wr[lam, targets] = rs[ir[first]]
    return wu, wr


def _general_scan_loops(add, mul, inv, neg, two, three, src):
    # Full (u, r, s, t) scan: src[i] = (a1, a2, a3, a4, a6) codes of source i.
    # rel[i, mu] is set when some transform maps source i onto E_mu.
    q = inv.shape[0]
    n = src.shape[0]
    rel = np.zeros((n, q), dtype=np.bool_)
    for i in range(n):
        a1, a2, a3, a4, a6 = src[i, 0], src[i, 1], src[i, 2], src[i, 3], src[i, 4]
        for u in range(1, q):
            iu = inv[u]
            iu2 = mul[iu, iu]
            iu3 = mul[iu2, iu]
            iu4 = mul[iu2, iu2]
            iu6 = mul[iu4, iu2]
            for s in range(q):
                b1 = mul[add[a1, mul[two, s]], iu]
                if b1 != 0:
                    continue
                for r in range(q):
                    rs = mul[r, s]
                    r2 = mul[r, r]
                    b2 = mul[add[add[a2, neg[mul[s, a1]]], add[mul[three, r], neg[mul[s, s]]]], iu2]
                    for t in range(q):
                        b3 = mul[add[add[a3, mul[r, a1]], mul[two, t]], iu3]
                        if b3 != 0:
                            continue
                        x4 = add[a4, neg[mul[s, a3]]]
                        x4 = add[x4, mul[mul[two, r], a2]]
                        x4 = add[x4, neg[mul[add[t, rs], a1]]]
                        x4 = add[x4, mul[three, r2]]
                        x4 = add[x4, neg[mul[mul[two, s], t]]]
                        b4 = mul[x4, iu4]
                        x6 = add[a6, mul[r, a4]]
                        x6 = add[x6, mul[r2, a2]]
                        x6 = add[x6, mul[r2, r]]
                        x6 = add[x6, neg[mul[t, a3]]]
                        x6 = add[x6, neg[mul[t, t]]]
                        x6 = add[x6, neg[mul[mul[r, t], a1]]]
                        b6 = mul[x6, iu6]
                        if b6 != 0 or b4 == 0 or b4 == 1:
                            continue
                        if b2 == neg[add[1, b4]]:
                            rel[i, b4] = True
    return rel


def general_scan_numpy(add, mul, inv, neg, two, three, src):
    q = inv.shape[0]
    n = src.shape[0]
    rel = np.zeros((n, q), dtype=np.bool_)
    u, r, s, t = np.meshgrid(np.arange(1, q), np.arange(q), np.arange(q), np.arange(q), indexing="ij", sparse=True)
    iu = inv[u]
    iu2 = mul[iu, iu]
    iu3 = mul[iu2, iu]
    iu4 = mul[iu2, iu2]
    iu6 = mul[iu4, iu2]
    rs, r2 = mul[r, s], mul[r, r]
    for i in range(n):
        a1, a2, a3, a4, a6 = (int(c) for c in src[i])
        b1 = mul[add[a1, mul[two, s]], iu]
        b2 = mul[add[add[a2, neg[mul[s, a1]]], add[mul[three, r], neg[mul[s, s]]]], iu2]
        b3 = mul[add[add[a3, mul[r, a1]], mul[two, t]], iu3]
        x4 = add[a4, neg[mul[s, a3]]]
        x4 = add[x4, mul[mul[two, r], a2]]
        x4 = add[x4, neg[mul[add[t, rs], a1]]]
        x4 = add[x4, mul[three, r2]]
        x4 = add[x4, neg[mul[mul[two, s], t]]]
        b4 = mul[x4, iu4]
        x6 = add[a6, mul[r, a4]]
        x6 = add[x6, mul[r2, a2]]
        x6 = add[x6, mul[r2, r]]
        x6 = add[x6, neg[mul[t, a3]]]
        x6 = add[x6, neg[mul[t, t]]]
        x6 = add[x6, neg[mul[mul[r, t], a1]]]
        b6 = mul[x6, iu6]
        ok = (b1 == 0) & (b3 == 0) & (b6 == 0) & (b4 != 0) & (b4 != 1)
        ok = ok & (b2 == neg[add[1, b4]])
        rel[i, np.unique(np.broadcast_to(b4, ok.shape)[ok])] = True
    return rel


def _component_labels_loops(n, src, dst):
    # union-find; each node ends labelled with the smallest node of its component
    parent = np.arange(n)
    for e in range(src.shape[0]):
        a = src[e]
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        b = dst[e]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a < b:
            parent[b] = a
        elif b < a:
            parent[a] = b
    for v in range(n):
        root = v
        while parent[root] != root:
            root = parent[root]
        parent[v] = root
    return parent


def component_labels_numpy(n, src, dst):
    labels = np.arange(n)
    while True:
        prev = labels
        low = labels.copy()
        np.minimum.at(low, src, labels[dst])
        np.minimum.at(low, dst, labels[src])
        labels = low[low]
        while True:
            jumped = labels[labels]
            if np.array_equal(jumped, labels):
                break
            labels = jumped
        if np.array_equal(labels, prev):
            return labels


if HAS_NUMBA:
    iso_scan_numba = numba.njit(cache=True)(_iso_scan_loops)
    general_scan_numba = numba.njit(cache=True)(_general_scan_loops)
    component_labels_numba = numba.njit(cache=True)(_component_labels_loops)
else:  # pragma: no cover
    iso_scan_numba = general_scan_numba = component_labels_numba = None

if USE_NUMBA:
    iso_scan = iso_scan_numba
    general_scan = general_scan_numba
    component_labels = component_labels_numba
else:
    iso_scan = iso_scan_numpy
    general_scan = general_scan_numpy
    component_labels = component_labels_numpy
