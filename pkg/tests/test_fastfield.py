"""Index-table arithmetic must agree with the scalar implementation."""

import numpy as np
import pytest

import ffperm.fastfield as ff
from ffperm.errors import FieldTooLarge
from ffperm.gf import inv0, make_field
from ffperm.polyring import Poly, eval_table, interpolate, ValueTable

FIELDS = [(5, 1), (3, 2), (5, 2), (11, 1), (2, 3)]


@pytest.mark.parametrize("p,n", FIELDS)
def test_tables_match_scalar_ops(p, n):
    ctx = make_field(p, n)
    t = ff.tables(ctx)
    q = ctx.q
    for i in range(q):
        a = ctx.el_at(i)
        assert int(t.neg[i]) == ctx.index_of(-a)
        assert int(t.inv0[i]) == ctx.index_of(inv0(a))
        for j in range(q):
            b = ctx.el_at(j)
            assert int(t.add[i, j]) == ctx.index_of(a + b)
            assert int(t.mul[i, j]) == ctx.index_of(a * b)


def test_pow_conventions():
    t = ff.tables(make_field(5))
    base = np.array([0, 2, 3], dtype=np.int32)
    out = t.pow_scalar_exp(base, 0)
    assert (out == t.emb[1]).all()  # 0^0 = 1 too
    out3 = t.pow_scalar_exp(base, 3)
    assert out3.tolist() == [0, 3, 2]  # 2^3=8=3, 3^3=27=2
    outer = t.pow_outer(base, np.array([0, 1, 4]))
    assert outer[0].tolist() == [t.emb[1], 0, 0]


@pytest.mark.parametrize("p,n", FIELDS)
def test_batch_eval_matches_scalar(p, n):
    ctx = make_field(p, n)
    t = ff.tables(ctx)
    q = ctx.q
    rng = np.random.default_rng(q)
    rows = rng.integers(0, q, size=(8, q)).astype(np.int32)
    tabs = t.batch_eval(rows)
    for r in range(len(rows)):
        f = Poly(ctx, tuple(ctx.el_at(int(i)) for i in rows[r]))
        expect = [ctx.index_of(v) for v in eval_table(f).values]
        assert tabs[r].tolist() == expect
    # interpolation inverts evaluation row-wise
    assert (t.batch_interp(tabs) == rows).all()


def test_chain_value_tables_match_scalar():
    from ffperm.carlitz import Chain, expand_chain
    ctx = make_field(7)
    t = ff.tables(ctx)
    a = [np.array([3], np.int32), np.array([1], np.int32),
         np.array([4], np.int32), np.array([2], np.int32)]
    tabs = ff.chain_value_tables(t, a)
    ch = Chain(ctx, tuple(ctx.el_at(int(v[0])) for v in a))
    expect = [ctx.index_of(v) for v in eval_table(expand_chain(ch)).values]
    assert tabs[0].tolist() == expect


def test_rank2_coeff_rows_match_scalar():
    from ffperm.carlitz import rank2_coeffs
    for p, n in [(5, 1), (3, 2), (7, 1)]:
        ctx = make_field(p, n)
        t = ff.tables(ctx)
        q = ctx.q
        rng = np.random.default_rng(q)
        m = 20
        a0 = rng.integers(1, q, m).astype(np.int32)
        a1 = rng.integers(0, q, m).astype(np.int32)
        a2 = rng.integers(1, q, m).astype(np.int32)
        a3 = rng.integers(0, q, m).astype(np.int32)
        rows = ff.rank2_coeff_rows(t, a0, a1, a2, a3)
        for r in range(m):
            f = rank2_coeffs(ctx.el_at(int(a0[r])), ctx.el_at(int(a1[r])),
                             ctx.el_at(int(a2[r])), ctx.el_at(int(a3[r])))
            assert rows[r].tolist() == [ctx.index_of(c) for c in f.coeffs]


def test_weight_and_degree_rows():
    rows = np.array([[0, 0, 0], [1, 0, 0], [0, 2, 3]], dtype=np.int32)
    assert ff.weight_rows(rows).tolist() == [0, 1, 2]
    assert ff.degree_rows(rows).tolist() == [-1, 0, 2]


def test_table_cap_enforced():
    with pytest.raises(FieldTooLarge):
        ff.FieldTables(make_field(4099))
