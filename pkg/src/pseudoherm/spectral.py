"""Eigendecompositions with biorthonormal left/right vector pairs.

A diagonalizable operator ``H`` that is not normal has eigenvectors that
are not mutually orthogonal, so the usual orthonormal machinery fails.
The standard replacement is a biorthonormal system: right eigenvectors
``psi`` (columns of ``V``) together with left vectors ``phi`` (columns of
``inv(V).conj().T``) satisfying

    <phi_m | psi_n> = delta_mn,      sum_n |psi_n><phi_n| = 1,

which restores a resolution of the identity and the spectral expansion
``H = sum_n E_n |psi_n><phi_n|``.  Everything downstream (intertwining
metrics, antilinear symmetries, non-unitary propagators) is built on
these pairs, so this module also carries the eigenvalue bookkeeping:
clustering a raw spectrum into degenerate groups and splitting the
groups into real ones and complex-conjugate partners.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exceptions import NotDiagonalizableError, NotPseudohermitianError

__all__ = [
    "BiorthonormalSystem",
    "SpectrumClassification",
    "biorthonormal_system",
    "classify_spectrum",
    "diagonalize",
    "reconstruct",
]

DEFAULT_TOL = 1e-9
DEFAULT_COND_CEILING = 1e12


def _square_complex(matrix) -> np.ndarray:
    """Validate and return ``matrix`` as a square complex ndarray."""
    a = np.asarray(matrix, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] == 0:
        raise ValueError("expected a nonempty matrix")
    if not np.all(np.isfinite(a.view(float))):
        raise ValueError("matrix entries must be finite")
    return a


def _cluster(values: np.ndarray, tol: float):
    """Group nearly equal eigenvalues.

    Returns ``(perm, means, mults)`` where ``perm`` reorders the input so
    that members of each group are adjacent and groups are sorted by
    (real, imag) of their mean.  Two values belong to the same group when
    they sit within ``tol * max(1, spectral_radius)`` of its running mean.
    """
    values = np.asarray(values, dtype=complex)
    order = np.lexsort((values.imag, values.real))
    ws = values[order]
    scale = tol * max(1.0, float(np.max(np.abs(ws))))
    # Greedy join against every existing group, not just the previous
    # value: solver jitter in the real part can interleave members of
    # +ib / -ib groups under the lexicographic sort.
    groups: list[list[int]] = []
    for i in range(len(ws)):
        best = None
        best_dist = np.inf
        for g in groups:
            dist = abs(ws[i] - np.mean(ws[g]))
            if dist < best_dist:
                best, best_dist = g, dist
        if best is not None and best_dist <= scale:
            best.append(i)
        else:
            groups.append([i])
    means = [complex(np.mean(ws[g])) for g in groups]
    gorder = sorted(range(len(groups)), key=lambda k: (means[k].real, means[k].imag))
    perm = np.array([order[i] for k in gorder for i in groups[k]])
    values_out = np.array([means[k] for k in gorder])
    mults = np.array([len(groups[k]) for k in gorder])
    return perm, values_out, mults


@dataclass
class BiorthonormalSystem:
    """Eigenvalue groups plus paired right/left eigenvector columns.

    Attributes
    ----------
    eigenvalues : ndarray
        One representative value per degenerate group, sorted by
        (real, imag).
    multiplicities : ndarray
        Group sizes; sums to the dimension.
    right_vectors : ndarray
        Columns are the right eigenvectors ``psi``, group by group.
    left_vectors : ndarray
        Columns are the left vectors ``phi``; satisfies
        ``left_vectors.conj().T @ right_vectors == 1`` exactly up to
        floating point because it is built from the inverse.
    labels : list of (int, int)
        For each column, the ``(group, member)`` index pair.
    tolerance : float
        Relative tolerance used to form the groups.
    """

    eigenvalues: np.ndarray
    multiplicities: np.ndarray
    right_vectors: np.ndarray
    left_vectors: np.ndarray
    labels: list[tuple[int, int]] = field(repr=False)
    tolerance: float = DEFAULT_TOL

    @property
    def dim(self) -> int:
        return self.right_vectors.shape[0]

    def expanded_eigenvalues(self) -> np.ndarray:
        """Group representatives repeated per multiplicity, one per column."""
        return np.repeat(self.eigenvalues, self.multiplicities)

    def group_columns(self, group: int) -> np.ndarray:
        """Column indices belonging to eigenvalue group ``group``."""
        start = int(np.sum(self.multiplicities[:group]))
        return np.arange(start, start + int(self.multiplicities[group]))


@dataclass
class SpectrumClassification:
    """Partition of eigenvalue groups into real and conjugate-paired ones.

    Attributes
    ----------
    real_groups : list of (float, int)
        Real eigenvalue and multiplicity, in ascending order.
    conjugate_pairs : list of (complex, complex, int)
        Upper half-plane member, its partner, and the shared multiplicity.
    real_group_indices : list of int
        Positions of the real groups in the clustered group ordering.
    pair_group_indices : list of (int, int)
        Positions of the (upper, lower) members of each pair.
    tolerance_used : float
    """

    real_groups: list[tuple[float, int]]
    conjugate_pairs: list[tuple[complex, complex, int]]
    real_group_indices: list[int]
    pair_group_indices: list[tuple[int, int]]
    tolerance_used: float

    @property
    def is_entirely_real(self) -> bool:
        return not self.conjugate_pairs


def diagonalize(matrix, tol: float = DEFAULT_TOL,
                cond_ceiling: float = DEFAULT_COND_CEILING):
    """Eigendecompose ``matrix``, refusing near-defective inputs.

    Parameters
    ----------
    matrix : array_like
        Square complex matrix.
    tol : float
        Relative tolerance for grouping degenerate eigenvalues.
    cond_ceiling : float
        Largest accepted condition number of the eigenvector matrix.

    Returns
    -------
    eigenvalues : ndarray
        One value per column of ``vectors`` (group representatives
        repeated by multiplicity), groups sorted by (real, imag).
    vectors : ndarray
        Right eigenvectors as columns, unit norm.

    Raises
    ------
    NotDiagonalizableError
        If ``cond(vectors)`` exceeds ``cond_ceiling``; at finite
        precision such a matrix is treated as defective.
    """
    system = biorthonormal_system(matrix, tol=tol, cond_ceiling=cond_ceiling)
    return system.expanded_eigenvalues(), system.right_vectors


def biorthonormal_system(matrix, tol: float = DEFAULT_TOL,
                         cond_ceiling: float = DEFAULT_COND_CEILING) -> BiorthonormalSystem:
    """Build the biorthonormal eigensystem of a diagonalizable matrix.

    The left vectors are the columns of ``inv(V).conj().T`` where ``V``
    holds the right eigenvectors, so biorthonormality and completeness
    hold to machine precision whenever the inverse is accurate, which the
    condition-number ceiling enforces.

    Raises
    ------
    NotDiagonalizableError
        If the eigenvector matrix has condition number above
        ``cond_ceiling``.
    ValueError
        If the input is not a finite square matrix or the tolerances are
        not positive.
    """
    a = _square_complex(matrix)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if cond_ceiling <= 0:
        raise ValueError("cond_ceiling must be positive")
    w, v = np.linalg.eig(a)
    v = v / np.linalg.norm(v, axis=0, keepdims=True)
    cond = np.linalg.cond(v)
    if not np.isfinite(cond) or cond > cond_ceiling:
        raise NotDiagonalizableError(
            f"eigenvector matrix condition number {cond:.3e} exceeds "
            f"ceiling {cond_ceiling:.3e}")
    perm, values, mults = _cluster(w, tol)
    v = v[:, perm]
    phi = np.linalg.inv(v).conj().T
    labels = [(g, m) for g, size in enumerate(mults) for m in range(int(size))]
    return BiorthonormalSystem(
        eigenvalues=values,
        multiplicities=mults,
        right_vectors=v,
        left_vectors=phi,
        labels=labels,
        tolerance=tol,
    )


def classify_spectrum(eigenvalues, tol: float = DEFAULT_TOL) -> SpectrumClassification:
    """Split a raw spectrum into real groups and conjugate pairs.

    Parameters
    ----------
    eigenvalues : array_like
        Raw eigenvalue sequence; repeats carry multiplicity.  Pass the
        expanded spectrum, not the group representatives, or the
        multiplicities will all come out as one.
    tol : float
        Relative tolerance, applied against ``max(1, spectral_radius)``
        for clustering and realness and against the group magnitudes for
        pairing.

    Returns
    -------
    SpectrumClassification

    Raises
    ------
    NotPseudohermitianError
        If some complex group has no conjugate partner within tolerance,
        or partners disagree in multiplicity.  Such a spectrum cannot
        belong to an operator similar to its own adjoint.
    """
    w = np.asarray(eigenvalues, dtype=complex).ravel()
    if w.size == 0:
        raise ValueError("expected at least one eigenvalue")
    if not np.all(np.isfinite(w.view(float))):
        raise ValueError("eigenvalues must be finite")
    if tol <= 0:
        raise ValueError("tol must be positive")
    _, values, mults = _cluster(w, tol)

    real_groups: list[tuple[float, int]] = []
    real_idx: list[int] = []
    upper: list[int] = []
    lower: list[int] = []
    for k, val in enumerate(values):
        if abs(val.imag) <= tol * max(1.0, abs(val)):
            real_groups.append((float(val.real), int(mults[k])))
            real_idx.append(k)
        elif val.imag > 0:
            upper.append(k)
        else:
            lower.append(k)

    pairs: list[tuple[complex, complex, int]] = []
    pair_idx: list[tuple[int, int]] = []
    unused = list(lower)
    for k in upper:
        target = np.conj(values[k])
        if not unused:
            raise NotPseudohermitianError(
                f"eigenvalue {values[k]:g} has no conjugate partner")
        dists = [abs(values[j] - target) for j in unused]
        jbest = unused[int(np.argmin(dists))]
        if min(dists) > tol * max(1.0, abs(values[k]), abs(values[jbest])):
            raise NotPseudohermitianError(
                f"eigenvalue {values[k]:g} has no conjugate partner "
                f"within tolerance")
        if mults[k] != mults[jbest]:
            raise NotPseudohermitianError(
                f"conjugate pair {values[k]:g} / {values[jbest]:g} has "
                f"mismatched multiplicities {mults[k]} and {mults[jbest]}")
        unused.remove(jbest)
        pairs.append((complex(values[k]), complex(values[jbest]), int(mults[k])))
        pair_idx.append((k, jbest))
    if unused:
        stray = ", ".join(f"{values[j]:g}" for j in unused)
        raise NotPseudohermitianError(
            f"eigenvalues without conjugate partners: {stray}")

    return SpectrumClassification(
        real_groups=real_groups,
        conjugate_pairs=pairs,
        real_group_indices=real_idx,
        pair_group_indices=pair_idx,
        tolerance_used=tol,
    )


def reconstruct(system: BiorthonormalSystem) -> np.ndarray:
    """Reassemble the matrix from its spectral expansion.

    Computes ``sum_n E_n |psi_n><phi_n|``; round-tripping through
    :func:`biorthonormal_system` and back reproduces the input to within
    a few units of machine roundoff times the norm.
    """
    phases = system.expanded_eigenvalues()
    return (system.right_vectors * phases) @ system.left_vectors.conj().T
