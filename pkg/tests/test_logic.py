"""Formula parsing, printing, and exhaustive model checking."""

import random

import pytest

from conftest import all_graphs, random_graph
from gslogic import (
    FormulaParseError,
    Graph,
    GraphFamily,
    SizeLimitError,
    evaluate,
    free_variables,
    generate,
    named_formula,
    neighbors,
    parse_formula,
    pretty,
    theory_member,
    theory_member_witness,
)
from gslogic.logic import (
    NAMED_FORMULA_SOURCES,
    And,
    Edge,
    Eq,
    Even,
    ExistsSet,
    ExistsVertex,
    ForallSet,
    ForallVertex,
    In,
    Not,
    Or,
)

# ------------------------------------------------------------------ oracles


def bipartite_oracle(g: Graph) -> bool:
    color: dict[int, int] = {}
    for start in range(g.n):
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for v in neighbors(g, u):
                if v not in color:
                    color[v] = color[u] ^ 1
                    stack.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def connected_oracle(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in neighbors(g, u):
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == g.n


# ------------------------------------------------------------------ parsing


def test_parse_simple_exists():
    f = parse_formula("exists x. exists y. edge(x, y)")
    assert f == ExistsVertex("x", ExistsVertex("y", Edge("x", "y")))


def test_parse_set_quantifier_by_case():
    f = parse_formula("forall X. Even(X)")
    assert f == ForallSet("X", Even("X"))
    f = parse_formula("exists s. s = s")
    assert f == ExistsVertex("s", Eq("s", "s"))


def test_precedence_not_and_or():
    f = parse_formula("x = x | x = y & !y = y")
    assert f == Or(Eq("x", "x"), And(Eq("x", "y"), Not(Eq("y", "y"))))
    f = parse_formula("!x in X & Even(X)")
    assert f == And(Not(In("x", "X")), Even("X"))


def test_connectives_associate_left():
    f = parse_formula("x = x & y = y & x = y")
    assert f == And(And(Eq("x", "x"), Eq("y", "y")), Eq("x", "y"))


def test_quantifier_scope_extends_right():
    f = parse_formula("forall x. x = x & edge(x, x)")
    assert f == ForallVertex("x", And(Eq("x", "x"), Edge("x", "x")))


def test_parenthesized_quantifiers():
    f = parse_formula("(exists x. x = x) & (forall Y. Even(Y))")
    assert f == And(ExistsVertex("x", Eq("x", "x")), ForallSet("Y", Even("Y")))


def test_double_negation_parses():
    f = parse_formula("!!x = x")
    assert f == Not(Not(Eq("x", "x")))


def test_parse_errors_and_positions():
    with pytest.raises(FormulaParseError) as info:
        parse_formula("edge(X, y)")
    assert info.value.position == 5
    with pytest.raises(FormulaParseError, match="uppercase"):
        parse_formula("exists x. x in y")
    with pytest.raises(FormulaParseError, match="uppercase"):
        parse_formula("Even(x)")
    with pytest.raises(FormulaParseError, match="keyword"):
        parse_formula("exists edge. edge = edge")
    with pytest.raises(FormulaParseError, match="stand alone"):
        parse_formula("exists X. X")
    with pytest.raises(FormulaParseError, match="trailing"):
        parse_formula("x = y)")
    with pytest.raises(FormulaParseError, match="end of input"):
        parse_formula("(x = y")
    with pytest.raises(FormulaParseError, match="end of input"):
        parse_formula("")
    with pytest.raises(FormulaParseError, match="unexpected character"):
        parse_formula("x @ y")
    with pytest.raises(FormulaParseError, match="'in' or '='"):
        parse_formula("exists x. x")
    with pytest.raises(FormulaParseError, match="expected ','"):
        parse_formula("edge(x y)")


def test_positions_are_offsets():
    try:
        parse_formula("exists x. x in y")
    except FormulaParseError as err:
        assert err.position == len("exists x. x in ")
    else:
        pytest.fail("expected a parse error")


# ----------------------------------------------------------------- printing


def _random_body(rng: random.Random, depth: int):
    if depth == 0 or rng.random() < 0.35:
        pick = rng.randrange(4)
        if pick == 0:
            return Edge(rng.choice("xy"), rng.choice("xy"))
        if pick == 1:
            return Eq(rng.choice("xy"), rng.choice("xy"))
        if pick == 2:
            return In(rng.choice("xy"), rng.choice("ST"))
        return Even(rng.choice("ST"))
    pick = rng.randrange(7)
    if pick == 0:
        return Not(_random_body(rng, depth - 1))
    if pick == 1:
        return And(_random_body(rng, depth - 1), _random_body(rng, depth - 1))
    if pick == 2:
        return Or(_random_body(rng, depth - 1), _random_body(rng, depth - 1))
    maker = (ExistsVertex, ForallVertex, ExistsSet, ForallSet)[pick - 3]
    var = rng.choice("xy") if pick < 5 else rng.choice("ST")
    return maker(var, _random_body(rng, depth - 1))


def _random_closed(rng: random.Random, depth: int = 3):
    return ExistsVertex(
        "x",
        ForallVertex("y", ExistsSet("S", ForallSet("T", _random_body(rng, depth)))),
    )


def test_pretty_round_trips_named_formulas():
    for name, source in NAMED_FORMULA_SOURCES.items():
        f = parse_formula(source)
        assert parse_formula(pretty(f)) == f, name


def test_pretty_round_trips_random_formulas():
    rng = random.Random(42)
    for _ in range(300):
        f = _random_body(rng, 4)
        assert parse_formula(pretty(f)) == f


def test_pretty_drops_redundant_parens():
    assert pretty(parse_formula("((x = y))")) == "x = y"
    assert str(parse_formula("x = y | (x = x)")) == "x = y | x = x"


def test_pretty_keeps_required_parens():
    f = Not(Or(Eq("x", "x"), Eq("y", "y")))
    assert pretty(f) == "!(x = x | y = y)"
    g = And(ExistsVertex("x", Eq("x", "x")), Eq("y", "y"))
    assert pretty(g) == "(exists x. x = x) & y = y"


# --------------------------------------------------------------- semantics


def test_free_variables():
    f = parse_formula("exists x. x in X | edge(x, y)")
    assert free_variables(f) == ({"y"}, {"X"})
    closed = named_formula("connected")
    assert free_variables(closed) == (set(), set())


def test_evaluate_rejects_open_formulas():
    with pytest.raises(ValueError, match="unbound"):
        evaluate(generate("path", 2), parse_formula("x in X"))


def test_adjacency_is_symmetric_and_irreflexive():
    sym = parse_formula("forall x. forall y. !edge(x, y) | edge(y, x)")
    irref = parse_formula("forall x. !edge(x, x)")
    rng = random.Random(6)
    for _ in range(10):
        g = random_graph(5, rng)
        assert evaluate(g, sym)
        assert evaluate(g, irref)


def test_equality_semantics():
    all_equal = parse_formula("forall x. forall y. x = y")
    assert evaluate(Graph.from_edges(0, []), all_equal)
    assert evaluate(Graph.from_edges(1, []), all_equal)
    assert not evaluate(Graph.from_edges(2, []), all_equal)


def test_even_counts_full_vertex_set():
    f = named_formula("even_order")
    for n in range(7):
        assert evaluate(Graph.from_edges(n, []), f) == (n % 2 == 0)


def test_even_on_subsets():
    # singletons are odd, so no single-vertex set passes Even
    f = parse_formula("forall X. !((exists x. x in X) & (forall x. forall y. "
                      "!(x in X) | !(y in X) | x = y)) | !Even(X)")
    assert evaluate(generate("path", 3), f)


def test_path2_formula():
    f = named_formula("path2")
    assert evaluate(generate("path", 3), f)
    assert not evaluate(Graph.from_edges(3, []), f)
    # no distinctness clause, so z may revisit x: one edge already satisfies it
    assert evaluate(Graph.from_edges(4, [(0, 1), (2, 3)]), f)
    assert evaluate(Graph.from_edges(2, [(0, 1)]), f)
    assert evaluate(generate("binary_tree", 1), f)


def test_two_colorable_matches_oracle_exhaustively():
    for n in range(5):
        f = named_formula("two_colorable")
        for g in all_graphs(n):
            assert evaluate(g, f) == bipartite_oracle(g)


def test_connected_matches_oracle_exhaustively():
    f = named_formula("connected")
    for n in range(5):
        for g in all_graphs(n):
            assert evaluate(g, f) == connected_oracle(g)


def test_de_morgan_on_random_formulas():
    rng = random.Random(7)
    graphs = [random_graph(3, rng), random_graph(4, rng)]
    for _ in range(40):
        f = _random_closed(rng)
        g = _random_closed(rng)
        for graph in graphs:
            lhs = evaluate(graph, Not(And(f, g)))
            rhs = evaluate(graph, Or(Not(f), Not(g)))
            assert lhs == rhs


def test_quantifier_duality_on_random_formulas():
    rng = random.Random(8)
    graphs = [random_graph(3, rng), random_graph(4, rng)]
    for _ in range(40):
        rest = ForallVertex(
            "y", ExistsSet("S", ForallSet("T", _random_body(rng, 3)))
        )
        for graph in graphs:
            assert evaluate(graph, Not(ExistsVertex("x", rest))) == evaluate(
                graph, ForallVertex("x", Not(rest))
            )
            assert evaluate(graph, Not(ExistsSet("U", Even("U")))) == evaluate(
                graph, ForallSet("U", Not(Even("U")))
            )


def test_shadowing_inner_binding_wins():
    # inner exists x rebinds; outer x = y comparison must still see the outer x
    f = parse_formula(
        "forall x. forall y. !(x = y) | ((exists x. !(x = y)) & x = y)"
    )
    assert evaluate(generate("path", 3), f)


def test_theory_member_and_witness():
    fam = GraphFamily.of(generate("path", k) for k in (2, 3, 4))
    f = named_formula("two_colorable")
    assert theory_member(fam, f)
    assert theory_member_witness(fam, f) == (True, None)
    fam2 = GraphFamily.of(
        [generate("path", 3), generate("cycle", 3), generate("cycle", 5)]
    )
    assert not theory_member(fam2, f)
    assert theory_member_witness(fam2, f) == (False, 1)


def test_theory_member_empty_family_is_vacuous():
    assert theory_member(GraphFamily.of([]), named_formula("connected"))


def test_cost_refusal():
    f = named_formula("two_colorable")
    with pytest.raises(SizeLimitError, match="cost"):
        evaluate(generate("complete", 40), f)
    with pytest.raises(SizeLimitError):
        evaluate(generate("path", 3), named_formula("path2"), max_cost=10)


def test_named_formula_library():
    assert named_formula("connected") is named_formula("connected")
    with pytest.raises(KeyError, match="unknown formula"):
        named_formula("nope")
    for source in NAMED_FORMULA_SOURCES.values():
        parse_formula(source)
