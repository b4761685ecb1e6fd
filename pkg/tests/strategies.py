from hypothesis import strategies as st

from stabred.field import Polynomial, RationalFunction


def polynomials(F, max_degree=6, nonzero=False):
    coeffs = st.lists(st.integers(0, F.q - 1), min_size=1, max_size=max_degree + 1)
    polys = coeffs.map(lambda c: Polynomial._raw(F, c))
    if nonzero:
        polys = polys.filter(lambda f: not f.is_zero())
    return polys


def rational_functions(F, max_degree=4):
    return st.builds(
        RationalFunction,
        polynomials(F, max_degree),
        polynomials(F, max_degree, nonzero=True),
    )
