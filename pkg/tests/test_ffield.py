import pytest

from wittlab.ffield import (
    Field,
    FieldElement,
    FieldEmbedding,
    FieldError,
    evaluate_poly,
    field_create,
    find_roots,
)


def test_canonical_moduli():
    assert field_create(2, 2).modulus == (1, 1, 1)  # x^2 + x + 1
    assert field_create(3, 2).modulus == (1, 0, 1)  # x^2 + 1
    assert field_create(2, 1).modulus == (0, 1)


def test_bad_parameters():
    with pytest.raises(FieldError):
        Field(4, 1)
    with pytest.raises(FieldError):
        Field(2, 0)
    with pytest.raises(FieldError):
        Field(2, 2, modulus=(1, 0, 1))  # (x+1)^2 is reducible


@pytest.mark.parametrize("p,m", [(2, 1), (2, 2), (3, 2), (5, 1), (2, 4)])
def test_field_axioms_exhaustive(p, m):
    F = field_create(p, m)
    els = list(F.elements())
    assert len(els) == p ** m
    for a in els:
        assert a + F.zero == a
        assert a * F.one == a
        assert a + (-a) == F.zero
        if not a.is_zero():
            assert a * a.inverse() == F.one
    for a in els[: min(len(els), 8)]:
        for b in els[: min(len(els), 8)]:
            assert a * b == b * a
            for c in els[: min(len(els), 8)]:
                assert (a + b) * c == a * c + b * c


def test_frobenius():
    F = field_create(3, 2)
    for a in F.elements():
        assert a.frobenius() == a ** 3
        assert a.frobenius(2) == a  # sigma has order m = 2
        assert a.frobenius(-1).frobenius() == a
        assert a.pth_root() ** 3 == a


def test_schoolbook_matches_tables():
    F = field_create(2, 3)
    for a in F.elements():
        for b in F.elements():
            assert F._mul_schoolbook(a.coeffs, b.coeffs) == (a * b).coeffs


def test_find_roots_in_base_field():
    F2 = field_create(2, 1)
    roots, fld = find_roots([F2.zero, F2.one, F2.one])  # x^2 + x
    assert fld == F2
    assert [r.index for r in roots] == [0, 1]


def test_find_roots_needs_extension():
    F2 = field_create(2, 1)
    roots, fld = find_roots([F2.one, F2.one, F2.one])  # x^2 + x + 1
    assert fld == field_create(2, 2)
    assert len(roots) == 2
    for r in roots:
        assert (r * r + r + fld.one).is_zero()


def test_find_roots_prefer_nonzero():
    F3 = field_create(3, 1)
    # x^3 - x has roots {0, 1, 2}; nonzero preference drops 0
    poly = [F3.zero, -F3.one, F3.zero, F3.one]
    roots, fld = find_roots(poly, prefer_nonzero=True)
    assert all(not r.is_zero() for r in roots)
    assert len(roots) == 2
    # x^2 has only the zero root at every degree
    roots, fld = find_roots([F3.zero, F3.zero, F3.one], extension_budget=2,
                            prefer_nonzero=True)
    assert len(roots) == 1 and roots[0].is_zero()


def test_embedding_is_ring_hom():
    F4 = field_create(2, 2)
    F16 = field_create(2, 4)
    emb = FieldEmbedding(F4, F16)
    for a in F4.elements():
        for b in F4.elements():
            assert emb(a + b) == emb(a) + emb(b)
            assert emb(a * b) == emb(a) * emb(b)
    assert emb(F4.one) == F16.one
    with pytest.raises(FieldError):
        FieldEmbedding(F4, field_create(2, 3))


def test_evaluate_poly():
    F5 = field_create(5, 1)
    poly = [F5.from_int(2), F5.from_int(0), F5.from_int(1)]  # x^2 + 2
    assert evaluate_poly(poly, F5.from_int(3)) == F5.from_int(11)


def test_sort_key_total_order():
    F9 = field_create(3, 2)
    keys = sorted(a.sort_key() for a in F9.elements())
    assert len(set(keys)) == 9
