"""Random-matrix corpus builders shared across the test modules.

Test matrices are built as S D inv(S) with a controlled spectrum D and a
similarity S of bounded condition number (singular values drawn from
[0.5, 2], so cond(S) <= 4), which keeps every eigenproblem far from the
defective regime and makes 1e-9 residual targets meaningful.
"""

import numpy as np


def haar_unitary(rng, n):
    """Haar-distributed unitary via phase-fixed QR."""
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def bounded_similarity(rng, n):
    """Random invertible matrix with singular values in [0.5, 2]."""
    left = haar_unitary(rng, n)
    right = haar_unitary(rng, n)
    singulars = rng.uniform(0.5, 2.0, size=n)
    return (left * singulars) @ right


def with_spectrum(rng, eigenvalues):
    """Similarity-transform a diagonal matrix with the given spectrum."""
    values = np.asarray(eigenvalues, dtype=complex)
    s = bounded_similarity(rng, len(values))
    return s @ np.diag(values) @ np.linalg.inv(s)


def separated_reals(rng, count, taken=(), gap=0.1, lo=-3.0, hi=3.0):
    """Draw reals pairwise separated by at least ``gap``."""
    picked = []
    while len(picked) < count:
        x = float(rng.uniform(lo, hi))
        if all(abs(x - y) > gap for y in [*taken, *picked]):
            picked.append(x)
    return picked


def kramers_spectrum(rng, n):
    """Spectrum with even-multiplicity real groups and conjugate pairs."""
    values = []
    reals_taken = []
    remaining = n
    while remaining:
        mult = 4 if remaining >= 4 and rng.random() < 0.3 else 2
        if rng.random() < 0.5:
            value = separated_reals(rng, 1, taken=reals_taken)[0]
            reals_taken.append(value)
            values.extend([complex(value)] * mult)
        else:
            re = separated_reals(rng, 1, taken=reals_taken)[0]
            reals_taken.append(re)
            z = complex(re, rng.uniform(0.2, 2.0))
            half = mult // 2
            values.extend([z] * half + [z.conjugate()] * half)
        remaining -= mult
    values = np.array(values)
    return values[rng.permutation(len(values))]


def odd_real_spectrum(rng, n):
    """Real-or-paired spectrum with at least one odd real multiplicity."""
    values = []
    reals_taken = []
    odd_placed = False
    remaining = n
    while remaining:
        if not odd_placed and (remaining <= 2 or rng.random() < 0.6):
            mult = 3 if remaining >= 3 and rng.random() < 0.3 else 1
            value = separated_reals(rng, 1, taken=reals_taken)[0]
            reals_taken.append(value)
            values.extend([complex(value)] * mult)
            odd_placed = True
            remaining -= mult
        elif remaining >= 2 and rng.random() < 0.5:
            value = separated_reals(rng, 1, taken=reals_taken)[0]
            reals_taken.append(value)
            values.extend([complex(value)] * 2)
            remaining -= 2
        elif remaining >= 2:
            re = separated_reals(rng, 1, taken=reals_taken)[0]
            reals_taken.append(re)
            z = complex(re, rng.uniform(0.2, 2.0))
            values.extend([z, z.conjugate()])
            remaining -= 2
        else:
            value = separated_reals(rng, 1, taken=reals_taken)[0]
            reals_taken.append(value)
            values.append(complex(value))
            odd_placed = True
            remaining -= 1
    values = np.array(values)
    return values[rng.permutation(len(values))]
