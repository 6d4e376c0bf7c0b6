"""Standard small presentations and a seeded random generator."""

import random

from .presentation import Presentation
from .xla import QQ


def loop(power, field=QQ, D=8):
    """One object with a loop ``x`` and the relation ``x^power``."""
    return Presentation(field, ["v"], [("x", "v", "v")], [[(1, ("x",) * power)]], D,
                        name=f"loop_x{power}")


def free(objects, arrows, field=QQ, D=6, name="free"):
    return Presentation(field, objects, arrows, [], D, name=name)


def radical_square_zero(objects, arrows, field=QQ, D=8, name="radsq"):
    """All length-2 paths are relations."""
    base = Presentation(field, objects, arrows, [], 2)
    rels = []
    for X in base.objects:
        for Y in base.objects:
            for q in base.paths(X, Y, 2):
                rels.append([(1, q)])
    return Presentation(field, objects, arrows, rels, D, name=name)


def a2(field=QQ, D=6):
    return free(["1", "2"], [("a", "1", "2")], field, D, name="A2")


def a3(field=QQ, D=6):
    return free(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")], field, D, name="A3")


def radsq_a2(field=QQ, D=8):
    return radical_square_zero(["1", "2"], [("a", "1", "2")], field, D, name="radsq_A2")


def radsq_a3(field=QQ, D=8):
    return radical_square_zero(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")], field, D,
                               name="radsq_A3")


def radsq_two_loops(field=QQ, D=8):
    return radical_square_zero(["v"], [("x", "v", "v"), ("y", "v", "v")], field, D,
                               name="radsq_2loop")


def commuting_square(field=QQ, D=6):
    arrows = [("a", "1", "2"), ("b", "1", "3"), ("c", "2", "4"), ("d", "3", "4")]
    return Presentation(field, ["1", "2", "3", "4"], arrows,
                        [[(1, ("c", "a")), (-1, ("d", "b"))]], D, name="square")


def commutative_plane(field=QQ, D=6):
    """Two loops with ``xy - yx`` (polynomial ring in two variables)."""
    return Presentation(field, ["v"], [("x", "v", "v"), ("y", "v", "v")],
                        [[(1, ("x", "y")), (-1, ("y", "x"))]], D, name="comm_plane")


def exterior_plane(field=QQ, D=6):
    return Presentation(field, ["v"], [("x", "v", "v"), ("y", "v", "v")],
                        [[(1, ("x", "x"))], [(1, ("y", "y"))], [(1, ("x", "y")), (1, ("y", "x"))]],
                        D, name="ext_plane")


def koszul_corpus(field=QQ, D=8):
    """The Koszul entries used by the duality checks."""
    return [loop(2, field, D), radsq_a2(field, D), radsq_a3(field, D), radsq_two_loops(field, D),
            commuting_square(field, D)]


def random_quadratic(seed, field=QQ, D=4, max_objects=3, max_arrows=4, max_relations=2):
    """A seeded random quadratic presentation.

    Relations are random combinations of the length-2 paths between one
    randomly chosen pair of objects that has any; coefficients lie in [-3, 3].
    """
    rng = random.Random(seed)
    for _ in range(1000):
        nobj = rng.randint(1, max_objects)
        objects = [f"o{i}" for i in range(nobj)]
        narr = rng.randint(1, max_arrows)
        arrows = [(f"a{k}", rng.choice(objects), rng.choice(objects)) for k in range(narr)]
        base = Presentation(field, objects, arrows, [], 2)
        pairs = [(X, Y) for X in objects for Y in objects if base.paths(X, Y, 2)]
        if not pairs:
            continue
        rels = []
        for _ in range(rng.randint(0, max_relations)):
            X, Y = rng.choice(pairs)
            terms = [(rng.randint(-3, 3), q) for q in base.paths(X, Y, 2)]
            if field.p:
                if not any(c % field.p for c, _ in terms):
                    continue
            elif not any(c for c, _ in terms):
                continue
            rels.append([(c, q) for c, q in terms if c])
        return Presentation(field, objects, arrows, rels, D, name=f"random_{seed}")
    raise RuntimeError("could not draw a presentation with length-2 paths")


# -- finite-dimensional algebras -------------------------------------------------

def truncated_polynomial(power, field=QQ):
    """``k[x]/(x^power)``."""
    from .filtered import FDAlgebra
    return FDAlgebra(field, ["v"], [("x", "v", "v")], [[(1, ("x",) * power)]], power,
                     name=f"k[x]/x^{power}")


def radical_square_zero_algebra(objects, arrows, field=QQ, name="radsq"):
    from .filtered import FDAlgebra
    return FDAlgebra(field, objects, arrows, [], 2, name=name)


def radsq_algebras(field=QQ):
    """Three radical-square-zero algebras: A2, A3 and two loops."""
    return [
        radical_square_zero_algebra(["1", "2"], [("a", "1", "2")], field, "radsq_A2"),
        radical_square_zero_algebra(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")], field, "radsq_A3"),
        radical_square_zero_algebra(["v"], [("x", "v", "v"), ("y", "v", "v")], field, "radsq_2loop"),
    ]


def inhomogeneous_example(field=QQ):
    """``x^2 - x^3`` with nilpotency bound 4; the algebra is ``k[x]/(x^2)``."""
    from .filtered import FDAlgebra
    return FDAlgebra(field, ["v"], [("x", "v", "v")], [[(1, ("x", "x")), (-1, ("x", "x", "x"))]], 4,
                     name="x2-x3")
