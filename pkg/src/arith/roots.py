from math import isqrt
from typing import Optional

from src.core.errors import InputRangeError


def integer_nth_root(n: int, k: int) -> int:
    """floor(n^(1/k)), exact: r^k <= n < (r+1)^k"""
    if n < 0 or k < 1:
        raise InputRangeError(f"integer_nth_root needs n >= 0 and k >= 1, got ({n}, {k})")
    if k == 1 or n < 2:
        return n
    if k == 2:
        return isqrt(n)
    if k >= n.bit_length():
        return 1

    # Newton from above; the first iterate is >= the true root
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def sqrt_mod(a: int, q: int) -> Optional[int]:
    """A square root of a modulo an odd prime q (Tonelli-Shanks), or None"""
    a %= q
    if a == 0:
        return 0
    if pow(a, (q - 1) // 2, q) != 1:
        return None

    s, d = 0, q - 1
    while d % 2 == 0:
        d //= 2
        s += 1
    if s == 1:
        return pow(a, (q + 1) // 4, q)

    z = 2
    while pow(z, (q - 1) // 2, q) != q - 1:
        z += 1

    c = pow(z, d, q)
    r = pow(a, (d + 1) // 2, q)
    t = pow(a, d, q)
    m = s
    while t != 1:
        i, x = 1, t * t % q
        while x != 1:
            x = x * x % q
            i += 1
        b = pow(c, 1 << (m - i - 1), q)
        r = r * b % q
        c = b * b % q
        t = t * c % q
        m = i
    return r
