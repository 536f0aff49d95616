from fractions import Fraction

from hypothesis import strategies as st

from nichols.cyclotomic import Cyclotomic, euler_phi

SMALL = [Fraction(x) for x in (-3, -2, -1, 0, 1, 2, 3)] + [Fraction(1, 2), Fraction(-2, 3)]


def cyclotomics(order):
    return st.lists(st.sampled_from(SMALL), min_size=euler_phi(order),
                    max_size=euler_phi(order)).map(lambda c: Cyclotomic.from_coeffs(order, c))


def vec_dict(v):
    return {w: c for w, c in v.items() if c}
