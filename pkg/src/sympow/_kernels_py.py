"""Pure-Python monomial kernels.

Reference implementation and fallback for the compiled ``_kernels``
extension. Both modules expose the same functions with the same
semantics; exponent vectors are tuples of non-negative ints of a common
length.
"""

MAX_EXPONENT = 2**32 - 1


def _filter_minimal(vecs):
    kept = []
    for v in sorted(vecs, key=sum):
        for w in kept:
            if all(a <= b for a, b in zip(w, v)):
                break
        else:
            kept.append(v)
    return kept


def minimalize(vecs):
    """Minimal elements of ``vecs`` under divisibility, duplicates removed."""
    return _filter_minimal(list(vecs))


def lcm_all(gens_a, gens_b):
    """Minimal generators of the ideal spanned by all pairwise lcms."""
    return _filter_minimal(
        [tuple(map(max, a, b)) for a in gens_a for b in gens_b]
    )


def mul_all(gens_a, gens_b):
    """Minimal generators of the product ideal."""
    out = []
    for a in gens_a:
        for b in gens_b:
            v = tuple(x + y for x, y in zip(a, b))
            if v and max(v) > MAX_EXPONENT:
                raise OverflowError("exponent exceeds MAX_EXPONENT")
            out.append(v)
    return _filter_minimal(out)


def divides_any(gens, m):
    """True if some vector in ``gens`` is componentwise <= ``m``."""
    for g in gens:
        if all(a <= b for a, b in zip(g, m)):
            return True
    return False


def all_divisible(gens_a, gens_b):
    """True if every vector of ``gens_a`` is divisible by one of ``gens_b``."""
    return all(divides_any(gens_b, m) for m in gens_a)
