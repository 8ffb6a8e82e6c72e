#
# Antilinear symmetry squaring to minus one: both directions
#
# A matrix commutes with an antilinear operator T with T^2 = -1 exactly
# when it is pseudohermitian and every real eigenvalue is evenly
# degenerate.  The forward direction is constructive: kramers_test hands
# back a concrete witness.  The necessity direction shows up as a
# refusal once a single odd real multiplicity appears.
#
import numpy as np

from pseudoherm import OddDegeneracyError, build_antilinear_symmetry, \
    biorthonormal_system, kramers_test


def main():
    rng = np.random.default_rng(7)

    #
    # forward direction: two doubly degenerate real levels
    #
    s = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    h = s @ np.diag([1.5, 1.5, -0.5, -0.5]) @ np.linalg.inv(s)
    report = kramers_test(h)
    print("even real degeneracies", report.real_degeneracies)
    print("witness found:", report.admits_symmetry)
    print(f"  commutator residual   {report.commutator_residual:.2e}")
    print(f"  ||T^2 + 1|| residual  {report.square_residual:.2e}")

    # antilinear action: T stores a matrix A and acts as v -> A conj(v),
    # so applying it twice to any vector must give -v back
    v = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    twice = report.witness.apply(report.witness.apply(v))
    print(f"  ||T(T v) + v|| / ||v|| {np.linalg.norm(twice + v) / np.linalg.norm(v):.2e}")

    #
    # necessity direction: make one level simple and the builder refuses
    #
    h_odd = s @ np.diag([1.5, 1.5, -0.5, 0.7]) @ np.linalg.inv(s)
    report = kramers_test(h_odd)
    print("\nodd case degeneracies ", report.real_degeneracies)
    print("witness found:", report.admits_symmetry)
    try:
        build_antilinear_symmetry(biorthonormal_system(h_odd))
    except OddDegeneracyError as exc:
        print("builder refused:", exc)

    #
    # a spectrum with no real levels at all satisfies the evenness
    # condition vacuously, so a conjugate pair admits a witness too
    #
    h_pair = np.diag([1j, -1j])
    report = kramers_test(h_pair)
    print("\nconjugate pair witness (no real levels):")
    print(np.round(report.witness.matrix.real, 12))


if __name__ == "__main__":
    main()
