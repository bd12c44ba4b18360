import math
from typing import Callable, Tuple

INV_PHI = (math.sqrt(5) - 1) / 2


def golden_section_max(f: Callable[[float], float],
                       a: float,
                       b: float,
                       xtol: float = 1e-8,
                       max_iter: int = 200) -> Tuple[float, float]:
    """Maximize a unimodal function on [a, b] by golden-section search.

    Returns:
        (x, f(x)) for the best point evaluated
    """
    if b < a:
        a, b = b, a
    x1 = b - INV_PHI * (b - a)
    x2 = a + INV_PHI * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(max_iter):
        if b - a <= xtol:
            break
        if f1 >= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - INV_PHI * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + INV_PHI * (b - a)
            f2 = f(x2)

    candidates = [(x1, f1), (x2, f2), (a, f(a)), (b, f(b))]
    return max(candidates, key=lambda c: c[1])
