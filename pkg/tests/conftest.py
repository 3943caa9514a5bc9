from fractions import Fraction


def pt(*coords):
    return tuple(Fraction(c) for c in coords)


def units(d):
    """The 2d points +-e_1..+-e_d."""
    out = []
    for i in range(d):
        for s in (1, -1):
            out.append(tuple(Fraction(s) if j == i else Fraction(0) for j in range(d)))
    return tuple(out)


def simplex(d):
    """e_1..e_d and -(1,..,1): a positive basis of size d+1."""
    out = [tuple(Fraction(1) if j == i else Fraction(0) for j in range(d)) for i in range(d)]
    out.append(tuple(Fraction(-1) for _ in range(d)))
    return tuple(out)
