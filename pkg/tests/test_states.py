import numpy as np
import pytest

from dephasim import (
    LabelError,
    NotHermitianError,
    NotPositiveError,
    ParseError,
    TraceNotOneError,
    ZeroNormError,
    parse_ket_expression,
    pure_density,
    validate,
)
from oracles import random_pure


def test_parse_bell_singlet():
    psi = parse_ket_expression("(|10> - |01>)/sqrt(2)", (2, 2))
    expected = np.array([0.0, 1.0, -1.0, 0.0]) / np.sqrt(2)
    assert np.max(np.abs(psi.amplitudes - expected)) <= 1e-12


def test_parse_qutrit_basis_state():
    psi = parse_ket_expression("|0,0>", (3, 3))
    expected = np.zeros(9)
    expected[4] = 1.0
    assert np.array_equal(psi.amplitudes, expected)


def test_parse_qutrit_negative_labels():
    psi = parse_ket_expression("|1,-1>", (3, 3))
    assert psi.amplitudes[2] == 1.0
    psi = parse_ket_expression("|-1,1>", (3, 3))
    assert psi.amplitudes[6] == 1.0


def test_parse_coefficient_forms():
    psi = parse_ket_expression("0.5*|11> + 1/sqrt(2)*|10> + 0.5|00>", (2, 2))
    expected = np.array([0.5, 1.0 / np.sqrt(2), 0.0, 0.5])
    assert np.max(np.abs(psi.amplitudes - expected)) <= 1e-12
    psi2 = parse_ket_expression("sqrt(2)/2 * |11> + sqrt(2)/2*|00>", (2, 2))
    assert np.max(np.abs(psi2.amplitudes - np.array([1, 0, 0, 1]) / np.sqrt(2))) <= 1e-12


def test_parse_normalizes_unnormalized_input():
    psi = parse_ket_expression("|11> + |00>", (2, 2))
    assert np.max(np.abs(psi.amplitudes - np.array([1, 0, 0, 1]) / np.sqrt(2))) <= 1e-12


def test_parse_is_whitespace_insensitive():
    a = parse_ket_expression("( |10>   -|01> ) / sqrt( 2 )", (2, 2))
    b = parse_ket_expression("(|10>-|01>)/sqrt(2)", (2, 2))
    assert np.array_equal(a.amplitudes, b.amplitudes)


def test_parse_unclosed_parenthesis():
    with pytest.raises(ParseError) as excinfo:
        parse_ket_expression("(|11> + |00>", (2, 2))
    assert excinfo.value.position == 0


def test_parse_label_errors():
    with pytest.raises(LabelError):
        parse_ket_expression("|2,0>", (3, 3))
    with pytest.raises(LabelError):
        parse_ket_expression("|12>", (2, 2))
    with pytest.raises(LabelError):
        parse_ket_expression("|1>", (2, 2))


def test_parse_zero_norm():
    with pytest.raises(ZeroNormError):
        parse_ket_expression("|10> - |10>", (2, 2))


def test_parse_rejects_garbage():
    for text in ("", "0.5", "|10> |01>", "|10> + 2", "foo", "|10", "1/0*|10>", "(|10>))"):
        with pytest.raises((ParseError, ZeroNormError)):
            parse_ket_expression(text, (2, 2))


def test_parser_is_total_on_random_garbage():
    rng = np.random.default_rng(21)
    pool = list("()|><+-*/sqrt 0123456789.,")
    for _ in range(400):
        text = "".join(rng.choice(pool, size=rng.integers(1, 24)))
        try:
            psi = parse_ket_expression(text, (2, 2))
        except (ParseError, ZeroNormError):
            continue
        assert abs(np.linalg.norm(psi.amplitudes) - 1.0) <= 1e-10


def test_pure_density_singlet_block():
    rho = pure_density(parse_ket_expression("(|10> - |01>)/sqrt(2)", (2, 2)))
    m = rho.matrix
    assert abs(m[1, 1] - 0.5) <= 1e-12 and abs(m[2, 2] - 0.5) <= 1e-12
    assert abs(m[1, 2] + 0.5) <= 1e-12 and abs(m[2, 1] + 0.5) <= 1e-12
    assert abs(m[0, 0]) <= 1e-12 and abs(m[3, 3]) <= 1e-12


def test_pure_density_basis_projector():
    rho = pure_density(parse_ket_expression("|00>", (2, 2)))
    assert np.array_equal(rho.matrix, np.diag([0.0, 0.0, 0.0, 1.0]).astype(complex))


def test_pure_density_purity():
    rng = np.random.default_rng(22)
    from dephasim import StateVector

    for dims in ((2, 2), (3, 3)):
        psi = StateVector(random_pure(rng, dims[0] * dims[1]), dims)
        rho = pure_density(psi)
        purity = np.trace(rho.matrix @ rho.matrix).real
        assert abs(purity - 1.0) <= 1e-12
        assert abs(np.trace(rho.matrix) - 1.0) <= 1e-12


def test_validate_accepts_maximally_mixed():
    rho = validate(np.eye(4) / 4, (2, 2))
    assert rho.dims == (2, 2)


def test_validate_rejects_negative_eigenvalue():
    with pytest.raises(NotPositiveError):
        validate(np.diag([1.2, -0.2, 0.0, 0.0]), (2, 2))


def test_validate_rejects_wrong_trace():
    with pytest.raises(TraceNotOneError):
        validate(np.diag([0.6, 0.6, 0.0, 0.0]), (2, 2))


def test_validate_rejects_non_hermitian():
    m = np.diag([0.5, 0.5, 0.0, 0.0]).astype(complex)
    m[0, 1] = 1e-3
    with pytest.raises(NotHermitianError):
        validate(m, (2, 2))


def test_parse_pure_validate_round_trip():
    expressions = [
        ("(|10> - |01>)/sqrt(2)", (2, 2)),
        ("(|10> + |01>)/sqrt(2)", (2, 2)),
        ("(|11> + |00>)/sqrt(2)", (2, 2)),
        ("0.6*|11> + 0.8*|00>", (2, 2)),
        ("|0,0>", (3, 3)),
        ("(|1,-1> + |0,0> + |-1,1>)/sqrt(3)", (3, 3)),
        ("(|1,0> + |0,1>)/sqrt(2)", (3, 3)),
    ]
    for text, dims in expressions:
        rho = pure_density(parse_ket_expression(text, dims))
        validate(rho.matrix, dims)
