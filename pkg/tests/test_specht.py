import pytest

from oracles import column_tabloids_by_filling
from schurspecht.combinat import exchange_vectors, hook_dim, partitions_up_to, tabloid_count
from schurspecht.exactla import image_contains, rank, span_equal
from schurspecht.exalg import MapDescriptor, weight_basis
from schurspecht.specht import (RelationFamily, canonical_tabloid, quotient_dim, relation_vectors,
                                restricted_relation_map, schur_functor_restrict, sym_action, tabloid_basis,
                                tabloid_index)

MULTI_COLUMN = lambda r: [p for p in partitions_up_to(r) if p[0] > 1]  # noqa: E731


def test_canonical_tabloid_examples():
    assert canonical_tabloid(((2, 1), (3, 4))) == (-1, ((1, 2), (3, 4)))
    assert canonical_tabloid(((1, 2), (3, 4))) == (1, ((1, 2), (3, 4)))
    assert canonical_tabloid(((3, 2, 1),)) == (-1, ((1, 2, 3),))
    with pytest.raises(ValueError):
        canonical_tabloid(((1, 2), (2, 3)))
    with pytest.raises(ValueError):
        canonical_tabloid(((1, 5),))


@pytest.mark.parametrize("lam,count", [((2, 2), 6), ((2, 1), 3), ((1, 1), 1)])
def test_tabloid_basis_examples(lam, count):
    assert len(tabloid_basis(lam)) == count == tabloid_count(lam)


@pytest.mark.parametrize("lam", partitions_up_to(5))
def test_tabloid_basis_matches_brute_force(lam):
    assert set(tabloid_basis(lam)) == column_tabloids_by_filling(lam)
    assert len(tabloid_basis(lam)) == tabloid_count(lam)


def _named(lam, vec):
    basis = tabloid_basis(lam)
    return {basis[i]: x for i, x in vec.items()}


def test_garnir_relation_example():
    vecs = relation_vectors((2, 2), RelationFamily("GR", (1,)))
    T = ((1, 2), (3, 4))
    first = _named((2, 2), vecs[0])
    assert first == {T: 1, ((2, 3), (1, 4)): 1, ((1, 3), (2, 4)): -1}


def test_symmetrized_relation_example():
    vecs = relation_vectors((2, 2), RelationFamily("sgr", (2,)))
    assert _named((2, 2), vecs[0]) == {((1, 2), (3, 4)): 1, ((3, 4), (1, 2)): -1}


def test_single_column_has_no_relations():
    assert relation_vectors((1, 1, 1), RelationFamily("CLASSIC")) == []
    assert quotient_dim((1, 1, 1), RelationFamily("CLASSIC")) == 1


def test_invalid_family():
    with pytest.raises(ValueError):
        RelationFamily("XYZ")
    with pytest.raises(ValueError):
        relation_vectors((2, 2), RelationFamily("GR", (3,)))


@pytest.mark.parametrize("lam,family,dim", [
    ((2, 2), RelationFamily("CLASSIC"), 2),
    ((2, 2), RelationFamily("SGR", (2,)), 3),
    ((2, 2), RelationFamily("GR", (2,)), 3),
    ((2, 2, 2, 2, 1), RelationFamily("SGR", (2,)), 50),
])
def test_quotient_examples(lam, family, dim):
    assert quotient_dim(lam, family) == dim


def test_modular_quotient_agrees():
    fam = RelationFamily("SGR", (2,))
    assert quotient_dim((2, 2, 2, 2, 1), fam, "modular") == 50


@pytest.mark.parametrize("lam", partitions_up_to(6))
def test_classic_quotient_is_hook_dim(lam):
    assert quotient_dim(lam, RelationFamily("CLASSIC")) == hook_dim(lam)


def test_restriction_examples():
    psi = schur_functor_restrict(MapDescriptor("psi", a=2, b=2, k=2), 4)
    assert psi.matrix.shape == (6, 6)
    assert rank(psi.matrix) == 3
    ident = schur_functor_restrict(MapDescriptor("identity", shape=(2, 2)), 4)
    assert ident.matrix.to_dense() == [[int(i == j) for j in range(6)] for i in range(6)]
    assert len(weight_basis((2, 2), 4)) == 6
    with pytest.raises(ValueError):
        schur_functor_restrict(MapDescriptor("psi", a=2, b=2, k=2), 5)


@pytest.mark.parametrize("lam", [(2, 2), (3, 2), (2, 2, 1), (3, 1, 1)])
def test_weight_basis_is_tabloid_basis(lam):
    from schurspecht.combinat import conjugate
    assert list(weight_basis(conjugate(lam), sum(lam))) == list(tabloid_basis(lam))


def test_sym_action_examples():
    lam = (2, 2)
    T = tabloid_index(lam)[((1, 2), (3, 4))]
    assert _named(lam, sym_action(lam, 1, {T: 1})) == {((1, 2), (3, 4)): -1}
    assert _named(lam, sym_action(lam, 2, {T: 1})) == {((1, 3), (2, 4)): 1}
    v = {0: 3, 2: -1, 5: 7}
    for i in (1, 2, 3):
        assert sym_action(lam, i, sym_action(lam, i, v)) == v
    with pytest.raises(ValueError):
        sym_action(lam, 4, v)


def _families(lam):
    for k in exchange_vectors(lam):
        yield RelationFamily("SGR", k)
        yield RelationFamily("GR", k)


@pytest.mark.parametrize("lam", MULTI_COLUMN(5))
def test_bridge_small(lam):
    for fam in _families(lam):
        assert span_equal(relation_vectors(lam, fam), restricted_relation_map(lam, fam).matrix)


def _check_invariance(lam):
    for fam in list(_families(lam)) + [RelationFamily("CLASSIC")]:
        vecs = relation_vectors(lam, fam)
        moved = [sym_action(lam, i, v) for i in range(1, sum(lam)) for v in vecs]
        assert image_contains(vecs, moved)


def _check_chain(lam):
    classic = relation_vectors(lam, RelationFamily("CLASSIC"))
    for k in exchange_vectors(lam):
        sgr = relation_vectors(lam, RelationFamily("SGR", k))
        gr = relation_vectors(lam, RelationFamily("GR", k))
        assert image_contains(gr, sgr)
        assert image_contains(classic, gr)


@pytest.mark.parametrize("lam", MULTI_COLUMN(5))
def test_symmetric_group_invariance_small(lam):
    _check_invariance(lam)


@pytest.mark.parametrize("lam", MULTI_COLUMN(5))
def test_containment_chain_small(lam):
    _check_chain(lam)


@pytest.mark.slow
@pytest.mark.parametrize("lam", [p for p in MULTI_COLUMN(7) if sum(p) > 5])
def test_symmetric_group_invariance(lam):
    _check_invariance(lam)


@pytest.mark.slow
@pytest.mark.parametrize("lam", [p for p in MULTI_COLUMN(7) if sum(p) > 5])
def test_containment_chain(lam):
    _check_chain(lam)
