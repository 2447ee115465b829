from itertools import combinations


def compositions_of(total):
    """All compositions of a nonnegative integer, () for zero."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in compositions_of(total - first):
            yield (first,) + rest


def all_compositions(max_size):
    return [a for s in range(max_size + 1) for a in compositions_of(s)]


def pad_composition(alpha, positions, n):
    """Place alpha at the given positions inside a length-n zero string."""
    s = [0] * n
    for i, part in zip(positions, alpha):
        s[i] = part
    return tuple(s)


def all_paddings(alpha, n):
    return [pad_composition(alpha, pos, n) for pos in combinations(range(n), len(alpha))]
