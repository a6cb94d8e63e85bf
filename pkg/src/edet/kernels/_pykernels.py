"""Pure-Python integer kernels (reference and import fallback).

All kernels take an integer matrix ``B`` (list of row lists of Python ints) and
a half-open rank range of lexicographic permutations. They return exact
integers; the caller rescales and divides in the target ring.
"""

from ..combinatorics import permutations


def leibniz(B, start, stop):
    n = len(B)
    total = 0
    for perm in permutations(n, start, stop):
        img = perm.image
        p = 1
        for i in range(n):
            p *= B[i][img[i]]
        total += p if perm.sign == 1 else -p
    return total


def power_blocks(B, exponent, gamma, start, stop):
    """Block sums (L_{n-1}^e, L_{n-1}^o, L_n^o, L_n^e) of (gamma + su)**exponent."""
    n = len(B)
    e1 = o1 = o0 = e0 = 0
    for perm in permutations(n, start, stop):
        img = perm.image
        diag = [B[i][img[i]] for i in range(n)]
        full = sum(diag)
        top = (gamma + full) ** exponent
        sub = 0
        for x in diag:
            sub += (gamma + full - x) ** exponent
        if perm.sign == 1:
            e0 += top
            e1 += sub
        else:
            o0 += top
            o1 += sub
    return e1, o1, o0, e0


def polarized(B, gammas, start, stop):
    """sum_sigma sign(sigma) sum_{S subset [n]} (-1)^(n-|S|) (gamma_sigma + sum_S)^n."""
    n = len(B)
    full_mask = 1 << n
    sums = [0] * full_mask
    signs = [1 if (n - bin(m).count("1")) % 2 == 0 else -1 for m in range(full_mask)]
    total = 0
    for idx, perm in enumerate(permutations(n, start, stop)):
        img = perm.image
        diag = [B[i][img[i]] for i in range(n)]
        g = gammas[idx]
        sums[0] = g
        acc = g ** n * signs[0]
        for m in range(1, full_mask):
            low = m & -m
            sums[m] = sums[m ^ low] + diag[low.bit_length() - 1]
            term = sums[m] ** n
            acc += term if signs[m] == 1 else -term
        total += acc if perm.sign == 1 else -acc
    return total
