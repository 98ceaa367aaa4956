"""Frozen golden values shared by several test modules.

Terms are written as strings of (node, shift) digit pairs, each pair one
inverse-A factor; e.g. "31 12" means A[3,1]^-1 A[1,2]^-1 applied to the
top monomial.
"""

from qloop.cartan import CartanData
from qloop.ymono import YMonomial, YPolynomial, a_monomial_exps


def corrected(c, top_triples, vstring, coeff=1):
    mono = YMonomial.from_triples(top_triples)
    for pair in vstring.split():
        i, s = int(pair[0]), int(pair[1])
        mono = mono * a_monomial_exps(c, i, s) ** -1
    return (mono, coeff)


def build_poly(c, top_triples, vstrings_with_coeffs):
    return YPolynomial([corrected(c, top_triples, v, coeff)
                        for v, coeff in vstrings_with_coeffs])


# 29-dimensional fundamental at the branch node of D4, term by term
D4_FUND_TERMS = [
    ("", 1),
    ("31", 1),
    ("31 12", 1),
    ("31 22", 1),
    ("31 42", 1),
    ("31 12 22", 1),
    ("31 12 42", 1),
    ("31 22 42", 1),
    ("31 12 22 42", 1),
    ("31 12 22 33", 1),
    ("31 12 42 33", 1),
    ("31 22 42 33", 1),
    ("31 12 22 42 33", 2),
    ("31 12 22 33 44", 1),
    ("31 12 42 33 24", 1),
    ("31 22 42 33 14", 1),
    ("31 12 22 42 33 33", 1),
    ("31 12 22 42 33 14", 1),
    ("31 12 22 42 33 24", 1),
    ("31 12 22 42 33 44", 1),
    ("31 12 22 42 33 33 14", 1),
    ("31 12 22 42 33 33 24", 1),
    ("31 12 22 42 33 33 44", 1),
    ("31 12 22 42 33 33 14 24", 1),
    ("31 12 22 42 33 33 14 44", 1),
    ("31 12 22 42 33 33 24 44", 1),
    ("31 12 22 42 33 33 14 24 44", 1),
    ("31 12 22 42 33 33 14 24 44 35", 1),
]

# its level-1 truncation keeps the corrections with shift xi + 1 only
D4_FUND_TRUNCATED = [
    ("", 1), ("31", 1), ("31 12", 1), ("31 22", 1), ("31 42", 1),
    ("31 12 22", 1), ("31 12 42", 1), ("31 22 42", 1), ("31 12 22 42", 1),
]

# golden rank-three fundamental q-characters
A3_FUND_NODE1 = [("", 1), ("11", 1), ("11 22", 1), ("11 22 33", 1)]
A3_FUND_NODE2 = [("", 1), ("22", 1), ("22 13", 1), ("22 33", 1),
                 ("22 13 33", 1), ("22 13 33 24", 1)]


def d4_fundamental_expected():
    c = CartanData.from_label("D4")
    return build_poly(c, ((3, 0, 1),), D4_FUND_TERMS)


def d4_truncated_expected():
    c = CartanData.from_label("D4")
    return build_poly(c, ((3, 0, 1),), D4_FUND_TRUNCATED)


def a3_fundamental_node1_expected():
    c = CartanData.from_label("A3")
    return build_poly(c, ((1, 0, 1),), A3_FUND_NODE1)


def a3_fundamental_node2_expected():
    c = CartanData.from_label("A3")
    return build_poly(c, ((2, 1, 1),), A3_FUND_NODE2)


# highest weights of the nine non-frozen level-1 prime simples in rank 3
A3_LEVEL1_PRIME_MONOMIALS = [
    ((1, 2, 1),),
    ((2, 1, 1),),
    ((3, 2, 1),),
    ((1, 0, 1),),
    ((2, 3, 1),),
    ((3, 0, 1),),
    ((1, 0, 1), (2, 3, 1)),
    ((2, 3, 1), (3, 0, 1)),
    ((1, 0, 1), (2, 3, 1), (3, 0, 1)),
]
