import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rankrange import (CyclicIndex, EmptySpectrum, NotUnitary, ingest_matrix,
                       ingest_spectrum, reflect_labels, resolve)


def random_unitary(rng, n):
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def test_identity_matrix():
    es = ingest_matrix(np.eye(4), tol=1e-10)
    assert es.dim == 4
    np.testing.assert_allclose(es.phases, 0.0)
    np.testing.assert_allclose(es.basis, np.eye(4))


def test_diagonal_fifth_roots():
    es = ingest_matrix(np.diag(np.exp(2j * np.pi * np.arange(5) / 5)))
    np.testing.assert_allclose(es.phases, 2 * np.pi * np.arange(5) / 5,
                               atol=1e-15)
    np.testing.assert_allclose(es.basis, np.eye(5))


def test_conjugated_fifth_roots_residual():
    rng = np.random.default_rng(0)
    q = random_unitary(rng, 5)
    u = q @ np.diag(np.exp(2j * np.pi * np.arange(5) / 5)) @ q.conj().T
    es = ingest_matrix(u, tol=1e-10)
    np.testing.assert_allclose(es.phases, 2 * np.pi * np.arange(5) / 5,
                               atol=1e-12)
    # the residual contract, verified directly
    res = np.abs(u @ es.basis - es.basis * np.exp(1j * es.phases)[None, :])
    assert res.max() <= 1e-10


def test_basis_unitary_and_residual_for_random_unitaries():
    rng = np.random.default_rng(1)
    for n in (2, 7, 16, 33):
        u = random_unitary(rng, n)
        es = ingest_matrix(u)
        gram = es.basis.conj().T @ es.basis - np.eye(n)
        assert np.linalg.norm(gram) <= 1e-10
        res = np.abs(u @ es.basis - es.basis * np.exp(1j * es.phases)[None, :])
        assert res.max() <= 1e-9


def test_degenerate_spectrum_basis_still_orthonormal():
    rng = np.random.default_rng(2)
    q = random_unitary(rng, 6)
    phases = np.array([0.3, 0.3, 0.3, 1.2, 1.2, 4.0])
    u = q @ np.diag(np.exp(1j * phases)) @ q.conj().T
    es = ingest_matrix(u)
    assert np.linalg.norm(es.basis.conj().T @ es.basis - np.eye(6)) <= 1e-10
    np.testing.assert_allclose(np.sort(es.phases), np.sort(phases), atol=1e-12)


def test_not_unitary_rejected():
    with pytest.raises(NotUnitary):
        ingest_matrix(np.diag([1.0, 2.0]))


def test_ingest_spectrum_basic():
    es = ingest_spectrum([0.0])
    assert es.dim == 1 and es.phases[0] == 0.0


def test_ingest_spectrum_mod_reduction_and_sorting():
    es = ingest_spectrum([3 * np.pi, np.pi / 2])
    np.testing.assert_allclose(es.phases, [np.pi / 2, np.pi], atol=1e-15)


def test_ingest_spectrum_multiset():
    es = ingest_spectrum([0.0, 0.0, 0.0])
    assert es.dim == 3
    np.testing.assert_allclose(es.phases, 0.0)


def test_ingest_spectrum_empty_rejected():
    with pytest.raises(EmptySpectrum):
        ingest_spectrum([])


def test_spectrum_matrix_roundtrip_phases():
    # re-ingesting the implied diagonal reproduces the phase list; the trig
    # round trip costs at most a couple of ulp
    rng = np.random.default_rng(3)
    raw = rng.uniform(-30, 30, 9)
    es1 = ingest_spectrum(raw)
    es2 = ingest_matrix(np.diag(np.exp(1j * es1.phases)))
    np.testing.assert_array_max_ulp(es1.phases, es2.phases, maxulp=4)


def test_resolve_examples():
    assert resolve(CyclicIndex(6, 5)) == (1, 2 * np.pi)
    assert resolve(CyclicIndex(1, 5)) == (1, 0.0)
    assert resolve(CyclicIndex(0, 5)) == (5, -2 * np.pi)


def test_reflect_examples_n13():
    es = ingest_spectrum(np.linspace(0, 5.0, 13))
    r = reflect_labels(es, 4)  # pivot k-1 for k=5 maps index 4 to 1
    assert r(4) == 1
    assert r(1) == 4
    assert r(9) == 9


def test_reflect_examples_n5():
    es = ingest_spectrum(np.linspace(0, 5.0, 5))
    r = reflect_labels(es, 5)
    assert r(5) == 1 and r(4) == 2 and r(3) == 3


@given(n=st.integers(1, 40), j=st.integers(1, 40), c=st.integers(1, 40))
def test_reflect_involution(n, j, c):
    j = (j - 1) % n + 1
    c = (c - 1) % n + 1
    es = ingest_spectrum(np.linspace(0, 6.0, n))
    r = reflect_labels(es, c)
    assert r(r(j)) == j


def cyclic_gap_multiset(indices, n):
    s = sorted(indices)
    gaps = [s[i + 1] - s[i] for i in range(len(s) - 1)]
    gaps.append(n + s[0] - s[-1])
    return sorted(gaps)


@settings(max_examples=200)
@given(data=st.data())
def test_reflect_preserves_gap_multisets(data):
    n = data.draw(st.integers(4, 30))
    c = data.draw(st.integers(1, n))
    idx = data.draw(st.lists(st.integers(1, n), min_size=3, max_size=3,
                             unique=True))
    es = ingest_spectrum(np.linspace(0, 6.0, n))
    r = reflect_labels(es, c)
    mapped = [r(j) for j in idx]
    assert len(set(mapped)) == 3
    assert cyclic_gap_multiset(idx, n) == cyclic_gap_multiset(mapped, n)
