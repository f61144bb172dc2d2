import numpy as np
import pytest

from refinery.algebras import Signature
from refinery.commutators import Application, Variable, parse_term
from refinery.datasets import cyclic_group

SIGNATURE = Signature([("+", 2), ("-", 1), ("0", 0)])


def test_parse_and_print():
    term = parse_term("(+ x1 (- x2))", SIGNATURE)
    assert term == Application("+", (Variable(1), Application("-", (Variable(2),))))
    assert str(term) == "(+ x1 (- x2))"
    assert term.max_variable() == 2
    assert str(parse_term("(0)", SIGNATURE)) == "(0)"


@pytest.mark.parametrize("text", ["(+ x1)", "(* x1 x2)", "(+ x1 x2", "(+ x1 x2))", "y1", "x0", "()", ""])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_term(text, SIGNATURE)


def test_evaluate():
    z4 = cyclic_group(4)
    term = parse_term("(+ x1 (+ x2 x2))", z4.signature)
    x, y = np.divmod(np.arange(16), 4)
    assert term.evaluate(z4).tolist() == ((x + 2 * y) % 4).tolist()
    assert Variable(2).evaluate(z4, arity=3).tolist() == [(i // 4) % 4 for i in range(64)]
    with pytest.raises(ValueError):
        term.evaluate(z4, arity=1)
