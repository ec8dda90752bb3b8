"""Small named arrangements used as ground truth throughout the tests."""

from .arrangement import Arrangement


def triangle() -> Arrangement:
    return Arrangement([(1, 0, 0), (0, 1, 0), (0, 0, 1)])


def complete_quadrilateral() -> Arrangement:
    """xyz(x-y)(x-z)(y-z): four triple points and three double points."""
    return Arrangement([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, -1, 0), (1, 0, -1), (0, 1, -1)])


def generic_four() -> Arrangement:
    return Arrangement([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])


def pencil(n: int) -> Arrangement:
    """n lines through [0:0:1]."""
    return Arrangement([(k, 1, 0) for k in range(n - 1)] + [(1, 0, 0)])


def near_pencil(n: int) -> Arrangement:
    """n - 1 lines through [0:0:1] plus the line z = 0."""
    return Arrangement(list(pencil(n - 1)) + [(0, 0, 1)])


NAMED = {
    "triangle": triangle,
    "complete_quadrilateral": complete_quadrilateral,
    "generic_four": generic_four,
}
