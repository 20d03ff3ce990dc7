import pytest

from pipedreams.perm import (
    Permutation,
    PermutationError,
    compose,
    decompose,
    from_invcode,
    invcode,
    inverse,
    parse_permutation,
    permutations,
)
P = parse_permutation


def brute_invcode(w):
    ol = w.one_line
    return [sum(1 for j in range(i + 1, len(ol)) if ol[j] < ol[i]) for i in range(len(ol))]


def composed(v, w):
    # (v o w)(i) = v(w(i))
    return Permutation(tuple(v(w(i)) for i in range(1, w.n + 1)))


@pytest.mark.parametrize(
    "text, expected",
    [
        ("14523", (1, 4, 5, 2, 3)),
        ("4617352", (4, 6, 1, 7, 3, 5, 2)),
        ("4,6,1,7,3,5,2", (4, 6, 1, 7, 3, 5, 2)),
        (" 10,1,2,3,4,5,6,7,8,9 ", (10, 1, 2, 3, 4, 5, 6, 7, 8, 9)),
    ],
)
def test_parse(text, expected):
    assert parse_permutation(text).one_line == expected


@pytest.mark.parametrize(
    "text, message",
    [
        ("", "empty"),
        ("1224", "position 3"),
        ("125", "position 3"),
        ("0,1", "position 1"),
        ("1,x", "position 2"),
        ("1023456789", "n <= 9"),
    ],
)
def test_parse_errors_name_the_position(text, message):
    with pytest.raises(PermutationError, match=message):
        parse_permutation(text)


def test_text_forms():
    w = P("4617352")
    assert str(w) == "4,6,1,7,3,5,2"
    assert w.digits() == "4617352"
    assert w(2) == 6 and w.n == 7


def test_inverse_examples():
    assert inverse(Permutation.identity(4)) == Permutation.identity(4)
    assert inverse(P("14523")) == P("14523")
    assert inverse(P("4617352")) == P("3751624")
    for w in (P("14523"), P("4617352")):
        assert composed(w, inverse(w)).is_identity()


def test_invcode_examples():
    assert invcode(P("4617352")) == (3, 4, 0, 3, 1, 1)
    assert invcode(Permutation.identity(5)) == ()
    assert invcode(P("14523")) == (0, 2, 2)


def test_from_invcode_examples():
    assert from_invcode([0, 0, 0, 0], 4) == Permutation.identity(4)
    assert from_invcode((3, 4, 0, 3, 1, 1), 7) == P("4617352")
    assert from_invcode((0, 2, 2), 5) == P("14523")


@pytest.mark.parametrize("code, n", [((4,), 4), ((0, 0, 2), 4), ((0, 0, 0, 0, 1), 4)])
def test_from_invcode_rejects_out_of_range(code, n):
    with pytest.raises(PermutationError):
        from_invcode(code, n)


def test_decompose_examples():
    assert decompose(P("4617352")) == (3, P("516342"))
    assert decompose(Permutation.identity(5)) == (0, Permutation.identity(4))
    assert decompose(P("14523")) == (0, P("3412"))
    with pytest.raises(PermutationError):
        decompose(Permutation.identity(1))


def test_compose_examples():
    assert compose(3, P("516342")) == P("4617352")
    assert compose(0, Permutation.identity(3)) == Permutation.identity(4)
    assert decompose(compose(2, P("132"))) == (2, P("132"))
    with pytest.raises(PermutationError):
        compose(4, P("132"))


@pytest.mark.parametrize("n", range(1, 8))
def test_code_bijection_and_decomposition_exhaustive(n):
    for w in permutations(n):
        code = invcode(w)
        assert list(code.padded(n)) == brute_invcode(w)
        assert from_invcode(code, n) == w
        assert inverse(inverse(w)) == w
        if n >= 2:
            a, u = decompose(w)
            assert compose(a, u) == w
            assert invcode(w) == invcode(u).prepended(a)


def test_permutations_are_lexicographic_and_complete():
    perms = list(permutations(4))
    assert len(perms) == 24
    assert perms == sorted(perms)
