"""Independent brute-force oracles used to freeze expected values.

These deliberately avoid the implementation paths they check.
"""

from __future__ import annotations

from fractions import Fraction


def ternary_digits(x: Fraction) -> tuple[list[int], bool]:
    """Digits of the eventually periodic ternary expansion of x in [0, 1).

    Long division: d_i = floor(3 r / q), r <- 3 r mod q, stopping when a
    remainder repeats.  Returns (digits up to the first repeated remainder,
    terminating?) where terminating means the expansion ends in zeros.
    """
    p, q = x.numerator, x.denominator
    digits: list[int] = []
    seen: set[int] = set()
    r = p
    while r not in seen:
        seen.add(r)
        d, r = divmod(3 * r, q)
        digits.append(d)
    return digits, r == 0


def cantor_brute(x: Fraction) -> bool:
    """Middle-thirds membership by inspecting the digit expansion(s).

    x is in the Cantor set iff some ternary expansion avoids the digit 1.
    The long-division expansion is the greedy one; when it terminates, the
    alternative expansion (decrement the last nonzero digit, then repeat 2s)
    is inspected as well.
    """
    if x < 0 or x > 1:
        return False
    if x == 1:
        return True  # 0.222... repeating
    digits, terminating = ternary_digits(x)
    if all(d != 1 for d in digits):
        return True
    if terminating:
        last = max(i for i, d in enumerate(digits) if d != 0)
        alternative = digits[:last] + [digits[last] - 1]
        return all(d != 1 for d in alternative)
    return False
