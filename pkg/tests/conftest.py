from fractions import Fraction
from itertools import permutations

from hypothesis import strategies as st

from intervalrank import GIMatrix, GInterval


def leibniz_det(rows):
    """Permutation-sum determinant, kept independent of the library kernel."""
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = Fraction(1)
        for i in range(n):
            term *= rows[i][perm[i]]
        total += -term if inv % 2 else term
    return total


def gauss_rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    rank, ncols = 0, len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / m[rank][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


rationals = st.builds(Fraction, st.integers(-12, 12), st.sampled_from([1, 2, 3]))


@st.composite
def entries(draw, kinds=("constant", "bounded", "left", "right", "unbounded")):
    kind = draw(st.sampled_from(kinds))
    a = draw(rationals)
    if kind == "constant":
        return GInterval.constant(a)
    if kind == "bounded":
        b = draw(rationals.filter(lambda x: x != a))
        return GInterval.bounded(min(a, b), max(a, b))
    if kind == "left":
        return GInterval.left_bounded(a)
    if kind == "right":
        return GInterval.right_bounded(a)
    return GInterval.unbounded()


@st.composite
def matrices(draw, min_p=1, max_p=3, square=True, **kw):
    p = draw(st.integers(min_p, max_p))
    q = p if square else draw(st.integers(min_p, max_p))
    return GIMatrix.of([[draw(entries(**kw)) for _ in range(q)] for _ in range(p)])


@st.composite
def rational_matrices(draw, n, m=None):
    m = n if m is None else m
    return [[draw(rationals) for _ in range(m)] for _ in range(n)]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
