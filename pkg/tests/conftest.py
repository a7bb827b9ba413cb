import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from covergadget.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("fast", max_examples=10, deadline=None)
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def graphs(draw, min_n=1, max_n=7, p=None):
    n = draw(st.integers(min_n, max_n))
    verts = tuple(f"v{i}" for i in range(n))
    pairs = [(verts[i], verts[j]) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [e for e, keep in zip(pairs, mask) if keep]
    order = draw(st.permutations(edges)) if edges else []
    return Graph(verts, tuple(order))


@st.composite
def trees(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    verts = tuple(f"t{i}" for i in range(n))
    edges = [(verts[draw(st.integers(0, i - 1))], verts[i]) for i in range(1, n)]
    return Graph(verts, tuple(draw(st.permutations(edges)) if edges else ()))


@st.composite
def weighted_trees(draw, max_n=6, max_k=2):
    T = draw(trees(1, max_n))
    k = tuple(draw(st.lists(st.integers(0, max_k), min_size=len(T.edges), max_size=len(T.edges))))
    return T, k


@st.composite
def monomial_ideals(draw, max_vars=4, max_gens=4, max_exp=2, squarefree=False):
    n = draw(st.integers(1, max_vars))
    top = 1 if squarefree else max_exp
    gen = st.tuples(*[st.integers(0, top)] * n).filter(any)
    gens = draw(st.lists(gen, min_size=1, max_size=max_gens))
    from covergadget.ideal import MonomialIdeal
    return MonomialIdeal(tuple(f"x{i + 1}" for i in range(n)), tuple(gens))
