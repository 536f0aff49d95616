import pytest
from hypothesis import given, settings, strategies as st

from nichols.braiding import degree_blocks
from nichols.combinatorics import q_binomial, q_factorial, q_int
from nichols.cyclotomic import Cyclotomic
from nichols.errors import DegreeTooLarge, NotDiagonal
from nichols.fixtures import DIAGONAL, GENERIC, GROUP, fixture
from nichols.laurent import Q
from nichols.nichols import (FreeElement, NicholsEngine, apply_symmetrizer, braided_commutator,
                             factor_hilbert, factors_text, graded_dimension, hilbert_series,
                             is_primitive, is_zero_in_nichols, relations, rosso_element,
                             shuffle_coproduct, shuffle_operator, skew_derivation, symmetrizer,
                             symmetrizer_matrix, symmetrizer_matrix_naive)
from nichols.roots import cartan_matrix

z = Cyclotomic.zeta
ALL = DIAGONAL + GENERIC + GROUP
# d21alpha has top degree 18; its full series is out of brute-force reach
TERMINATING = [n for n in DIAGONAL + GROUP if n != "d21alpha"]


def x(*letters, coeff=1):
    return FreeElement.monomial([l - 1 for l in letters], coeff)


# --- symmetrizer -----------------------------------------------------------------

def test_low_degrees_are_identity():
    b = fixture("sl3")
    for k in (0, 1):
        res = symmetrizer(b, k)
        assert res.rank == 2 ** k
        assert res.kernel == []


def test_degree_two_is_id_plus_c():
    b = fixture("sl21")
    for blk in degree_blocks(b, 2):
        m = symmetrizer_matrix(b, blk)
        idx = blk.index()
        for col, (i, j) in enumerate(blk.basis):
            want = {(i, j): b.one()}
            want[(j, i)] = want.get((j, i), b.zero()) + b.q(i, j)
            got = {blk.basis[r]: m[r][col] for r in range(blk.dim) if m[r][col]}
            assert got == {w: s for w, s in want.items() if s}


@pytest.mark.parametrize("k", range(0, 7))
def test_rank_one_scalar(k):
    b = fixture("rank1_generic")
    blk = degree_blocks(b, k)[0]
    assert symmetrizer_matrix(b, blk) == [[q_factorial(k, Q)]]
    c = fixture("rank1_z5")
    assert symmetrizer_matrix(c, degree_blocks(c, k)[0]) == [[q_factorial(k, z(5))]]


def _extend(b, vec, k):
    out = {}
    for w, c in vec.items():
        for u, s in shuffle_operator(b, k - 1, 1, {w[:k]: c}).items():
            key = u + w[k:]
            out[key] = out[key] + s if key in out else s
    return {u: s for u, s in out.items() if s}


@pytest.mark.parametrize("name", ALL)
def test_factorization_identity(name):
    # Sym_n = Sym_{1,1} Sym_{2,1} ... Sym_{n-1,1}, rightmost factor first
    b = fixture(name)
    for n in range(0, 5):
        for blk in degree_blocks(b, n):
            naive = symmetrizer_matrix_naive(b, blk)
            assert symmetrizer_matrix(b, blk) == naive
            for col, w in enumerate(blk.basis):
                v = {w: b.one()}
                for k in range(n, 1, -1):
                    v = _extend(b, v, k)
                want = {blk.basis[r]: naive[r][col] for r in range(blk.dim) if naive[r][col]}
                assert v == want


def test_block_cap():
    with pytest.raises(DegreeTooLarge):
        graded_dimension(fixture("sl3"), 6, block_cap=10)


# --- Hilbert series ------------------------------------------------------------------

@pytest.mark.parametrize("order", [2, 3, 5])
def test_rank_one_truncation(order):
    h = hilbert_series(fixture(f"rank1_z{order}"), 10)
    assert h.dims[:order + 2] == [1] * order + [0, 0]
    assert h.terminated and h.total == order
    assert factor_hilbert(h) == [(1, order)]


def test_rank_one_q_equal_one_never_terminates():
    h = hilbert_series(fixture("rank1_one"), 5)
    assert h.dims == [1] * 6
    assert not h.terminated and h.total is None
    assert factor_hilbert(h) is None


def test_s3_series():
    h = hilbert_series(fixture("s3"))
    assert h.dims[:7] == [1, 3, 4, 3, 1, 0, 0]
    assert h.total == 12
    assert factor_hilbert(h) == [(1, 2), (1, 2), (1, 3)]
    assert factors_text(factor_hilbert(h)) == "(1+t)^2(1+t+t^2)"


def test_sl3_series():
    h = hilbert_series(fixture("sl3"))
    assert h.poly == [1, 2, 4, 4, 5, 4, 4, 2, 1]
    assert h.total == 27
    assert factor_hilbert(h) == [(1, 3), (1, 3), (2, 3)]


def test_generic_series_and_probabilistic_path():
    b = fixture("sl3_generic")
    exact = hilbert_series(b, 6)
    assert exact.dims == [1, 2, 4, 6, 9, 12, 16]
    assert not exact.terminated
    prob = hilbert_series(b, 6, probabilistic=True)
    assert prob.dims == exact.dims and prob.probabilistic


@pytest.mark.parametrize("name", TERMINATING)
def test_hilbert_invariants(name):
    b = fixture(name)
    h = hilbert_series(b, 20)
    assert h.dims[0] == 1 and h.dims[1] == b.dim
    if h.terminated:
        assert h.is_palindromic()
        assert h.total == sum(h.dims)


def test_workers_give_identical_results():
    b = fixture("sl3")
    one = NicholsEngine(b).hilbert_series(12)
    two = NicholsEngine(b, workers=2).hilbert_series(12)
    assert one.dims == two.dims
    flat = lambda h: [(r.degree, r.dim, r.rank) for deg in h.blocks for r in deg]
    assert flat(one) == flat(two)


# --- relations -----------------------------------------------------------------------------

@pytest.mark.parametrize("order", [2, 3, 5])
def test_rank_one_relation(order):
    rels = relations(fixture(f"rank1_z{order}"), order)
    assert rels == [x(*[1] * order)]


def test_braided_commutator_relation():
    b = fixture("a1xa1")
    rels = relations(b, 2)
    mixed = [r for r in rels if set(r.coeffs) == {(0, 1), (1, 0)}]
    assert len(mixed) == 1
    r = mixed[0]
    # normalized so the x1 x2 coefficient is 1
    assert r == x(1, 2) - x(2, 1, coeff=b.q(0, 1)) or r == x(1, 2) + x(2, 1, coeff=-b.q(0, 1))


def test_s3_degree_two_kernel():
    assert len(relations(fixture("s3"), 2)) == 5


# --- coproduct and primitivity ------------------------------------------------------------------

def test_coproduct_of_generator():
    b = fixture("sl3")
    comps = shuffle_coproduct(b, x(1))
    assert [(c.i, c.j) for c in comps] == [(0, 1), (1, 0)]
    assert all(c.element == x(1) for c in comps)


@pytest.mark.parametrize("name", ["rank1_generic", "rank1_z3", "rank1_z5"])
def test_coproduct_of_powers(name):
    b = fixture(name)
    q = b.q(0, 0)
    for n in range(0, 7):
        comps = shuffle_coproduct(b, x(*[1] * n))
        for c in comps:
            coef = q_binomial(n, c.i, q)
            want = FreeElement({(0,) * n: coef}, n)
            assert c.element == want


@pytest.mark.parametrize("name", ["sl3", "s3", "sl21", "d21alpha", "sl3_generic"])
def test_counitality(name):
    b = fixture(name)
    for k in (1, 2, 3):
        for blk in degree_blocks(b, k)[:3]:
            e = FreeElement({w: b.one() * (n + 1) for n, w in enumerate(blk.basis)}, k)
            comps = shuffle_coproduct(b, e)
            assert comps[0].element == e and comps[-1].element == e


def test_primitivity_examples():
    assert is_primitive(fixture("sl3"), x(1) + x(2))
    assert is_primitive(fixture("rank1_z2"), x(1, 1))
    assert not is_primitive(fixture("rank1_generic"), x(1, 1))
    b = fixture("a1xa1")
    assert is_primitive(b, braided_commutator(b, 0, 1))
    assert is_primitive(b, braided_commutator(b, 1, 0))
    # no such luck without q12 q21 = 1
    c = fixture("sl3")
    assert not is_primitive(c, braided_commutator(c, 0, 1))


@settings(max_examples=20)
@given(st.integers(0, 11), st.integers(0, 11), st.integers(0, 11))
def test_commutators_primitive_when_q12q21_is_one(a, b12, c):
    from nichols.braiding import DiagonalBraiding
    b = DiagonalBraiding([[a, b12], [-b12, c]], order=12)
    assert is_primitive(b, braided_commutator(b, 0, 1))


# --- skew derivations ------------------------------------------------------------------------

def test_derivation_examples():
    b = fixture("sl21")
    for i in range(2):
        for j in range(2):
            got = skew_derivation(b, i, x(j + 1))
            assert got == (FreeElement({(): b.one()}, 0) if i == j else FreeElement({}, 0))
    assert skew_derivation(b, 0, x(1, 2)) == x(2)
    assert skew_derivation(b, 0, x(2, 1)) == x(2, coeff=b.q(1, 0))
    r = fixture("rank1_generic")
    for n in range(1, 7):
        assert skew_derivation(r, 0, x(*[1] * n)) == x(*[1] * (n - 1), coeff=q_int(n, Q))
    with pytest.raises(NotDiagonal):
        skew_derivation(fixture("s3"), 0, x(1))


def test_zero_in_nichols_examples():
    b = fixture("rank1_z3")
    assert not is_zero_in_nichols(b, x(1, 1))
    assert is_zero_in_nichols(b, x(1, 1, 1))
    assert is_zero_in_nichols(b, FreeElement({}, 2))


@pytest.mark.parametrize("name", DIAGONAL + ["sl3_generic"])
def test_derivation_oracle_matches_kernel(name):
    b = fixture(name)
    eng = NicholsEngine(b)
    for k in range(1, 5):
        res = eng.degree(k, want_kernel=True)
        for blk, br in zip(degree_blocks(b, k), res.blocks):
            kern = br.kernel or []
            for r in kern:
                assert is_zero_in_nichols(b, r)
            # standard vectors off the kernel pivots span a complement
            pivots = {min(r.coeffs) for r in kern}
            for w in blk.basis:
                if w not in pivots:
                    assert not is_zero_in_nichols(b, FreeElement.monomial(w, b.one()))


# --- ideal stability and Rosso ----------------------------------------------------------------

@pytest.mark.parametrize("name", ["sl3", "sl21", "s3", "a1xa1", "rank1_z3", "d4_reflection"])
def test_kernel_is_an_ideal(name):
    b = fixture(name)
    for k in (2, 3):
        for r in relations(b, k):
            for j in range(b.dim):
                gen = FreeElement.monomial([j], b.one())
                assert apply_symmetrizer(b, gen.tensor(r)).is_zero()
                assert apply_symmetrizer(b, r.tensor(gen)).is_zero()


@pytest.mark.parametrize("name", ["sl3", "sl21", "sl3_generic", "sl21_z8"])
def test_rosso_relation(name):
    b = fixture(name)
    C = cartan_matrix(b)
    for i in range(2):
        for j in range(2):
            if i == j:
                continue
            n = 1 - C[i][j]
            e = rosso_element(b, i, j, n)
            assert not e.is_zero()
            assert apply_symmetrizer(b, e).is_zero()
            if b.mode == "generic":
                # and not before: ad(x_i)^(n-1) x_j survives
                assert not apply_symmetrizer(b, rosso_element(b, i, j, n - 1)).is_zero()


def test_rosso_matches_iterated_commutators():
    b = fixture("sl3_generic")
    # [x1, [x1, x2]_c]_c expanded by hand
    qii, qij = b.q(0, 0), b.q(0, 1)
    inner = x(1, 2) - x(2, 1, coeff=qij)
    outer = x(1).tensor(inner) - inner.tensor(x(1)).scale(qii * qij)
    assert rosso_element(b, 0, 1, 2) == outer


def test_factor_hilbert_failure():
    assert factor_hilbert([1, 2, 2]) is None
    assert factor_hilbert([1, 3, 4, 3, 1]) == [(1, 2), (1, 2), (1, 3)]
