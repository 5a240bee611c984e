"""Goursat data extraction/reconstruction and the stabilizer taxonomy."""

import numpy as np
import pytest

from subcss import (
    GoursatData,
    Subspace,
    SubsystemCode,
    bacon_shor,
    check_complement_data,
    check_intersection_data,
    classify_stabilizer,
    five_qubit,
    goursat_of,
    reconstruct_from,
    trivial,
)
from subcss.code import _is_direct_product
from subcss.pauli import parse_pauli

from conftest import random_gauge_code

FIVE_QUBIT_E_X = ("IXXII", "IIXXI", "IIIXX", "XIIIX")
FIVE_QUBIT_E_Z = ("ZIIZI", "IZIIZ", "ZIZII", "IZIZI")


def _x_span(strings):
    rows = [parse_pauli(s, 2).x for s in strings]
    return Subspace.span(np.array(rows), 2, 5)


def _z_span(strings):
    rows = [parse_pauli(s, 2).z for s in strings]
    return Subspace.span(np.array(rows), 2, 5)


def test_five_qubit_goursat_data():
    data = goursat_of(five_qubit())
    # Internal code is trivial: no purely X- or Z-type gauge elements.
    assert data.n_x.dim == 0 and data.n_z.dim == 0
    assert data.e_x == _x_span(FIVE_QUBIT_E_X)
    assert data.e_z == _z_span(FIVE_QUBIT_E_Z)
    assert data.pair_count() == 4


def test_five_qubit_phi_pairing():
    # The displayed pairing e_X -> e_Z holds as coset equalities: since the
    # internal code is trivial, each paired product must itself lie in H.
    code = five_qubit()
    for xs, zs in zip(FIVE_QUBIT_E_X, FIVE_QUBIT_E_Z):
        v = np.concatenate([parse_pauli(xs, 2).x, parse_pauli(zs, 2).z])
        assert code.gauge.contains(v)
    # And the extracted pairs generate H together with the internal code.
    assert reconstruct_from(goursat_of(code)) == code


def test_goursat_roundtrip_random(rng):
    for _ in range(60):
        p = int(rng.choice([2, 3]))
        n = int(rng.choice([2, 3]))
        code = random_gauge_code(rng, p, n)
        assert reconstruct_from(goursat_of(code)) == code


def test_goursat_data_validation():
    e = Subspace.span([[1, 0], [0, 1]], 2, 2)
    n = Subspace.span([[1, 1]], 2, 2)
    with pytest.raises(ValueError):
        GoursatData(e_x=n, e_z=e, n_x=e, n_z=Subspace.zero(2, 2), phi_pairs=())
    with pytest.raises(ValueError):
        # Pair count does not match the quotient dimension.
        GoursatData(e_x=e, e_z=e, n_x=n, n_z=n, phi_pairs=())


def test_complement_data_checks(rng):
    assert check_complement_data(five_qubit()).passed
    for _ in range(40):
        p = int(rng.choice([2, 3]))
        n = int(rng.choice([2, 3]))
        report = check_complement_data(random_gauge_code(rng, p, n))
        assert report.passed, report.details


def test_intersection_data_checks(rng):
    for _ in range(40):
        p = int(rng.choice([2, 3]))
        n = int(rng.choice([2, 3]))
        c1 = random_gauge_code(rng, p, n)
        c2 = random_gauge_code(rng, p, n)
        report = check_intersection_data(c1, c2)
        assert report.passed, report.details
    with pytest.raises(ValueError):
        check_intersection_data(five_qubit(), trivial(3))


def test_five_qubit_is_maximal_not_minimal():
    cls = classify_stabilizer(five_qubit())
    assert cls.maximal and not cls.minimal
    assert cls.region() == "maximal stabilizer, not minimal"


def test_css_codes_are_both():
    for code in (bacon_shor(2), bacon_shor(3), trivial(2)):
        cls = classify_stabilizer(code)
        assert cls.maximal and cls.minimal
        assert cls.region().startswith("CSS")


def _minimal_conditions(code):
    """The five equivalent characterizations of minimal stabilizer."""
    data = goursat_of(code)
    n = code.n
    c1 = classify_stabilizer(code).minimal
    c2 = _is_direct_product(code.centralizer, n)
    c3 = _is_direct_product(code.stabilizer, n)

    def _product(left, right):
        rows = [np.concatenate([a, np.zeros(n, dtype=np.int64)]) for a in left.basis]
        rows += [np.concatenate([np.zeros(n, dtype=np.int64), b]) for b in right.basis]
        return Subspace.span(np.array(rows).reshape(-1, 2 * n), code.p, 2 * n)

    c4 = code.centralizer == _product(
        data.e_x + data.n_z.complement(), data.e_z + data.n_x.complement()
    )
    c5 = code.stabilizer == _product(
        data.n_x.intersect(data.e_z.complement()), data.n_z.intersect(data.e_x.complement())
    )
    return (c1, c2, c3, c4, c5)


def test_minimal_conditions_agree(rng):
    for _ in range(60):
        p = int(rng.choice([2, 3]))
        n = int(rng.choice([2, 3]))
        code = random_gauge_code(rng, p, n)
        conds = _minimal_conditions(code)
        assert len(set(conds)) == 1, conds


def test_minimal_and_maximal_iff_css(rng):
    for _ in range(60):
        p = int(rng.choice([2, 3]))
        n = int(rng.choice([2, 3]))
        code = random_gauge_code(rng, p, n)
        cls = classify_stabilizer(code)
        assert (cls.minimal and cls.maximal) == code.is_css()
