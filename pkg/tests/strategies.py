from hypothesis import strategies as st

from refinery.algebras import FiniteAlgebra, Signature, quotient
from refinery.relations import BinRel, Partition, generated_congruence


@st.composite
def algebras(draw, min_size=1, max_size=4, max_ops=2, max_arity=2):
    """ Small algebras with operations of arity 1..max_arity and uniform tables.
    """
    size = draw(st.integers(min_size, max_size))
    num_ops = draw(st.integers(1, max_ops))
    symbols, tables = [], {}
    for i in range(num_ops):
        arity = draw(st.integers(1, max_arity))
        length = size ** arity
        symbols.append((f"f{i}", arity))
        tables[f"f{i}"] = draw(st.lists(st.integers(0, size - 1), min_size=length, max_size=length))
    return FiniteAlgebra(Signature(symbols), size, tables)


@st.composite
def partitions(draw, n):
    return Partition(draw(st.lists(st.integers(0, max(n - 1, 0)), min_size=n, max_size=n)))


@st.composite
def binrels(draw, n):
    cells = draw(st.lists(st.booleans(), min_size=n * n, max_size=n * n))
    return BinRel.from_pairs(n, [(i // n, i % n) for i, cell in enumerate(cells) if cell])


@st.composite
def congruences(draw, algebra, max_pairs=3):
    """ A congruence generated by a few random pairs.
    """
    n = algebra.size
    pairs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=max_pairs))
    return generated_congruence(algebra, pairs)


@st.composite
def algebra_quotients(draw, **kwargs):
    """ (algebra, congruence E, quotient map f) with f the canonical map of a second congruence.
    """
    algebra = draw(algebras(**kwargs))
    e = draw(congruences(algebra))
    kernel = draw(congruences(algebra))
    _, f = quotient(algebra, kernel)
    return algebra, e, f


@st.composite
def algebra_pairs(draw, max_size=3):
    """ Two algebras sharing one random signature.
    """
    left = draw(algebras(max_size=max_size))
    size = draw(st.integers(1, max_size))
    tables = {}
    for symbol, arity in left.signature:
        length = size ** arity
        tables[symbol] = draw(st.lists(st.integers(0, size - 1), min_size=length, max_size=length))
    return left, FiniteAlgebra(left.signature, size, tables)
