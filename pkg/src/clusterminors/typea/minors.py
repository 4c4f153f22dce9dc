"""Generalized minors of SL_m through wedge-power and tensor models.

For a dominant weight mu = sum mu_k omega_k the module V is the tensor product
of mu_k copies of the k-th exterior power (k = node + 1). Two concrete models
of V are provided:

* ``wedge``: basis vectors are tuples of k-subsets, one per tensor factor;
* ``tensor``: each exterior power is embedded in (k^m)^{(x)k} by
  antisymmetrization, so basis vectors are tuples of index tuples.

In both, the minor at an extremal weight lam = w mu is the coefficient of a
chosen weight-lam basis vector (the pick) in g v_lam, divided by its
coefficient in v_lam, where v_lam is the lift of w applied to the top vector.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from ..kernel import LaurentPoly, LaurentRing, matmul, matrix_minor
from ..roots import CartanData, Weight, WeylElement, dominant_conjugate, weyl_make
from .group import lift, realize


def colex_subsets(m: int, k: int) -> list[tuple[int, ...]]:
    return sorted(itertools.combinations(range(m), k), key=lambda s: s[::-1])


def wedge_matrix(mat, k: int):
    m = len(mat)
    if not 1 <= k <= m - 1:
        raise ValueError(f"wedge degree {k} out of range for SL_{m}")
    subs = colex_subsets(m, k)
    return tuple(tuple(matrix_minor(mat, r, c) for c in subs) for r in subs)


def lift_matrix(w: WeylElement | Sequence[int], m: int, inverse: bool = False):
    return realize(lift(w, inverse), m, LaurentRing(()))


def _int_matrix(mat):
    return tuple(tuple(int(e.constant_value()) for e in row) for row in mat)


def conjugate_by_lift(mat, w: WeylElement | Sequence[int]):
    """wbar^{-1} mat wbar."""
    m = len(mat)
    return matmul(matmul(_int_matrix(lift_matrix(w, m, inverse=True)), mat), _int_matrix(lift_matrix(w, m)))


def principal_minor(mat, node: int):
    """Delta_{omega_node}: the leading principal minor of size node + 1."""
    k = node + 1
    return matrix_minor(mat, range(k), range(k))


def minor_uv(mat, node: int, u: WeylElement, v: WeylElement):
    """Delta^{u omega}_{v omega}(g) = Delta_omega(ubar^{-1} g vbar)."""
    m = len(mat)
    left = _int_matrix(lift_matrix(u, m, inverse=True))
    right = _int_matrix(lift_matrix(v, m))
    return principal_minor(matmul(matmul(left, mat), right), node)


def epsilon_weight(indices: Sequence[int], n: int) -> Weight:
    """Weight of e_{i1} (x) ... (x) e_{ik} in fundamental-weight coordinates."""
    counts = [0] * (n + 1)
    for i in indices:
        counts[i] += 1
    return tuple(counts[r] - counts[r + 1] for r in range(n))


@dataclass(frozen=True)
class TensorRep:
    """Tensor product of exterior powers, one factor per entry of wedge_degrees."""

    m: int
    wedge_degrees: tuple[int, ...]

    @classmethod
    def for_weight(cls, mu: Weight, extra: Sequence[int] = ()) -> "TensorRep":
        degrees = [k + 1 for k, mult in enumerate(mu) for _ in range(mult)]
        return cls(len(mu) + 1, tuple(degrees) + tuple(extra))

    @property
    def dimension(self) -> int:
        from math import comb

        out = 1
        for k in self.wedge_degrees:
            out *= comb(self.m, k)
        return out

    def weight_of_basis(self, basis: Sequence[Sequence[int]]) -> Weight:
        flat = [i for block in basis for i in block]
        return epsilon_weight(flat, self.m - 1)


@lru_cache(maxsize=None)
def _extremal_blocks(m: int, degrees: tuple[int, ...], word: tuple[int, ...]):
    """Per factor: the k-subset hit by wbar and the sign of wbar on that factor."""
    wbar = _int_matrix(lift_matrix(word, m))
    blocks = []
    for k in degrees:
        # wbar e_j = sign_j e_{perm_j}
        images = []
        for j in range(k):
            col = [wbar[r][j] for r in range(m)]
            (r,) = [r for r in range(m) if col[r]]
            images.append((r, col[r]))
        blocks.append(tuple(images))
    return tuple(blocks)


def _perm_sign(seq: Sequence[int]) -> int:
    sign = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def extremal_data(cd: CartanData, lam: Weight) -> tuple[Weight, WeylElement]:
    return dominant_conjugate(cd, lam)


def wedge_vector(rep: TensorRep, w: WeylElement) -> dict:
    """v_lam in the wedge model: {tuple of sorted subsets: coefficient}."""
    blocks = _extremal_blocks(rep.m, rep.wedge_degrees, w.reduced_word)
    key, coeff = [], 1
    for images in blocks:
        rows = [r for r, _ in images]
        for _, s in images:
            coeff *= s
        coeff *= _perm_sign(rows)
        key.append(tuple(sorted(rows)))
    return {tuple(key): coeff}


def tensor_block_vector(images) -> dict:
    """Antisymmetrized image of one factor: {index tuple: coefficient}."""
    out = {}
    k = len(images)
    for perm in itertools.permutations(range(k)):
        coeff = _perm_sign(perm)
        idx = []
        for p in perm:
            r, s = images[p]
            coeff *= s
            idx.append(r)
        out[tuple(idx)] = out.get(tuple(idx), 0) + coeff
    return {k_: v for k_, v in out.items() if v}


def tensor_picks(rep: TensorRep, w: WeylElement) -> list[tuple[tuple[int, ...], ...]]:
    """All basis vectors of the tensor model with nonzero coefficient in v_lam."""
    blocks = _extremal_blocks(rep.m, rep.wedge_degrees, w.reduced_word)
    per_block = [sorted(tensor_block_vector(images)) for images in blocks]
    return [tuple(p) for p in itertools.product(*per_block)]


def _one(mat):
    entry = mat[0][0]
    return entry.ring.one() if isinstance(entry, LaurentPoly) else 1


def extremal_minor(mat, cd: CartanData, lam: Weight, pick=None, model: str = "wedge", extra: Sequence[int] = ()):
    """Delta_{V, lam}(mat) with V the tensor product of exterior powers for the
    dominant conjugate of lam (plus optional ``extra`` wedge degrees)."""
    mu, w = extremal_data(cd, lam)
    rep = TensorRep.for_weight(mu, extra)
    if rep.m != len(mat):
        raise ValueError("matrix size does not match the Cartan data")
    lam = tuple(lam)
    if model == "wedge":
        vec = wedge_vector(rep, w)
        ((top, _),) = vec.items()
        pick = top if pick is None else tuple(tuple(sorted(b)) for b in pick)
        if rep.weight_of_basis(pick) != lam:
            raise ValueError(f"pick {pick} does not have weight {lam}")
        if pick != top:
            raise ValueError(f"pick {pick} has zero coefficient in the extremal vector")
        value = _one(mat)
        for block in pick:
            value = value * matrix_minor(mat, block, block)
        return value
    if model == "tensor":
        blocks = _extremal_blocks(rep.m, rep.wedge_degrees, w.reduced_word)
        vecs = [tensor_block_vector(images) for images in blocks]
        if pick is None:
            pick = tuple(min(v) for v in vecs)
        pick = tuple(tuple(b) for b in pick)
        if len(pick) != len(vecs) or rep.weight_of_basis(pick) != lam:
            raise ValueError(f"pick {pick} does not have weight {lam}")
        value = _one(mat)
        for block, vec in zip(pick, vecs):
            if block not in vec:
                raise ValueError(f"pick {pick} has zero coefficient in the extremal vector")
            # coefficient of e_block in g^{(x)k} applied to this factor
            acc = 0
            for idx, c in vec.items():
                term = c
                for a, b in zip(block, idx):
                    term = term * mat[a][b]
                    if not term:
                        break
                if term:
                    acc = acc + term
            value = value * acc
            value = value / vec[block] if vec[block] != 1 else value
        return value
    raise ValueError(f"unknown model {model!r}")


def lowest_minor(mat, node: int):
    """Delta_{-omega_node}: the trailing principal minor of size m - node - 1."""
    m = len(mat)
    rows = range(node + 1, m)
    return matrix_minor(mat, rows, rows)


def prop21_bindings(cd: CartanData, c_word: Sequence[int], mat, nodes: Sequence[int] | None = None) -> dict:
    """Initial cluster and frozen variables of the cluster algebra for c, as
    functions on the cell evaluated at ``mat``.

    ``nodes`` maps the local nodes of ``cd`` to nodes of the ambient SL_m when
    ``cd`` describes a Levi subgroup.
    """
    n = cd.n
    nodes = list(range(n)) if nodes is None else list(nodes)
    m = len(mat)
    global_c = [nodes[i] for i in c_word]
    cbar = _int_matrix(lift_matrix(global_c, m))
    cbar_inv = _int_matrix(lift_matrix(global_c, m, inverse=True))
    right = matmul(mat, cbar)
    left = matmul(cbar_inv, mat)
    pos = {s: k for k, s in enumerate(c_word)}
    up = [principal_minor(right, nodes[i]) for i in range(n)]
    down = [principal_minor(left, nodes[i]) for i in range(n)]
    out = {}
    for i in range(n):
        out[f"x{i + 1}"] = principal_minor(mat, nodes[i])
        z, zb = up[i], down[i]
        for j in range(n):
            if pos[j] < pos[i] and cd.a[j][i]:
                z = z * up[j] ** cd.a[j][i]
                zb = zb * down[j] ** cd.a[j][i]
        out[f"z{i + 1}"] = z
        out[f"zb{i + 1}"] = zb
    return out
