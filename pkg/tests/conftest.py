"""Shared fixtures: one small signature with tables fixed by hand.

Sorts: A = {0, 1}, B = {0, 1, 2}.  Generators:

    f : A -> B      f(a) = a + 1
    g : B -> A      g(b) = b mod 2
    h : A B -> A    h(a, b) = (a + b) mod 2
    k : A -> A A    k(a) = (a, 1 - a)
    e : A -> A      e(a) = 1 - a

Expected values in the tests are worked out from these definitions, not from
the code under test.
"""

import pytest

from cartoptics import FiniteCarrier, Gen, Generator, Interp, Obj, Signature, Sort


@pytest.fixture(scope="session")
def sig():
    a = Sort("A", FiniteCarrier(2))
    b = Sort("B", FiniteCarrier(3))
    return Signature(
        (a, b),
        (
            Generator("f", Obj((a,)), Obj((b,)), table=((1,), (2,))),
            Generator("g", Obj((b,)), Obj((a,)), table=((0,), (1,), (0,))),
            Generator(
                "h", Obj((a, b)), Obj((a,)), table=((0,), (1,), (0,), (1,), (0,), (1,))
            ),
            Generator("k", Obj((a,)), Obj((a, a)), table=((0, 1), (1, 0))),
            Generator("e", Obj((a,)), Obj((a,)), table=((1,), (0,))),
        ),
    )


@pytest.fixture(scope="session")
def interp(sig):
    return Interp.from_signature(sig)


@pytest.fixture(scope="session")
def A(sig):
    return sig.obj("A")


@pytest.fixture(scope="session")
def B(sig):
    return sig.obj("B")


@pytest.fixture(scope="session")
def f(sig):
    return Gen(sig.generator("f"))


@pytest.fixture(scope="session")
def g(sig):
    return Gen(sig.generator("g"))


@pytest.fixture(scope="session")
def h(sig):
    return Gen(sig.generator("h"))


@pytest.fixture(scope="session")
def k(sig):
    return Gen(sig.generator("k"))


@pytest.fixture(scope="session")
def e(sig):
    return Gen(sig.generator("e"))
