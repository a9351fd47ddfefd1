"""Hand-entered presentations used by several unit-test modules.

These duplicate a sample of the shipped catalog data on purpose: the
catalog files and this module are independent transcriptions, so tests
that compare the two guard against typos in either place.
"""

from degenverify.algebra import AlgebraPresentation, parse_vector


def alg(name, dim, prods, params=()):
    products = {(i - 1, j - 1): parse_vector(text, dim, params)
                for (i, j), text in prods.items()}
    return AlgebraPresentation(name, dim, products, params=params)


# -- 4-dimensional catalog --------------------------------------------------

def n3_C():
    return alg("n3_C", 4, {(1, 2): "e3"})


def n4():
    return alg("n4", 4, {(1, 2): "e3", (1, 3): "e4"})


def r2_C2():
    return alg("r2_C2", 4, {(1, 2): "e2"})


def r2_r2():
    return alg("r2_r2", 4, {(1, 2): "e2", (3, 4): "e4"})


def sl2_C():
    return alg("sl2_C", 4, {(1, 2): "e2", (1, 3): "-e3", (2, 3): "e1"})


def g1():
    return alg("g1", 4, {(1, 2): "e2", (1, 3): "e3", (1, 4): "e4"})


def g2():
    return alg("g2", 4, {(1, 2): "e2", (1, 3): "e3", (1, 4): "e3+beta*e4"},
               params=("beta",))


def g3():
    return alg("g3", 4, {(1, 2): "e2", (1, 3): "e3", (1, 4): "beta*e4",
                         (2, 3): "e4"}, params=("beta",))


def g4():
    return alg("g4", 4, {(1, 2): "e2", (1, 3): "e2+alpha*e3",
                         (1, 4): "e3+beta*e4"}, params=("alpha", "beta"))


def g5():
    return alg("g5", 4, {(1, 2): "e2", (1, 3): "e2+alpha*e3",
                         (1, 4): "(alpha+1)*e4", (2, 3): "e4"},
               params=("alpha",))


def g6():
    return alg("g6", 4, {(1, 2): "e3", (3, 4): "e3"})


def C4():
    return alg("C4", 4, {})


# -- 5-dimensional sample ---------------------------------------------------

def g5_4():
    return alg("g5_4", 5, {(1, 2): "e3", (1, 3): "e4", (2, 3): "e5"})


def g5_6():
    return alg("g5_6", 5, {(1, 2): "e3", (1, 3): "e4", (1, 4): "e5",
                           (2, 3): "e5"})


def M5():
    return alg("M5", 5, {(1, 2): "e4", (3, 4): "e5"})


# -- 6-dimensional sample ---------------------------------------------------

def z6_g5():
    return alg("g5", 6, {(1, 2): "e3", (1, 3): "e4", (1, 4): "e5",
                         (1, 5): "e6", (2, 3): "e5", (2, 4): "e6"})


def z6_M6(eps_text=None):
    a = alg("M6", 6, {(1, 2): "e3", (1, 3): "e5", (1, 5): "e6",
                      (2, 4): "epsilon*e5", (3, 4): "e6"},
            params=("epsilon",))
    if eps_text is None:
        return a
    from degenverify.exact import parse_scalar
    return a.substitute_params({"epsilon": parse_scalar(eps_text)})


def z6_M6_0():
    return alg("M6_0", 6, {(1, 2): "e3", (1, 3): "e5", (1, 5): "e6",
                           (3, 4): "e6"})


def z6_M5_1():
    return alg("M5_1", 6, {(1, 2): "e4", (1, 3): "e5", (2, 4): "e5",
                           (3, 4): "e6"})


def z6_g5C():
    # 5-dim filiform Lie algebra plus a central line
    return alg("g5C", 6, {(1, 2): "e3", (1, 3): "e4", (1, 4): "e5"})


def z6_M2(eps_text=None):
    a = alg("M2", 6, {(1, 2): "e4", (1, 3): "e5", (2, 5): "e6",
                      (3, 4): "epsilon*e6"}, params=("epsilon",))
    if eps_text is None:
        return a
    from degenverify.exact import parse_scalar
    return a.substitute_params({"epsilon": parse_scalar(eps_text)})
