import pytest

from indcomplex.exprparser import ExprParserError, parse_graph_expr
from indcomplex.graph import (
    complete,
    cycle,
    disjoint_union,
    format_graph,
    graph_expression,
    lex_product,
    path,
    random_forest,
    star,
)

from .utils import GRAPHDATA


def test_families():
    assert parse_graph_expr("path:4") == path(4)
    assert parse_graph_expr("cycle:5") == cycle(5)
    assert parse_graph_expr("complete:3") == complete(3)
    assert parse_graph_expr("star:4") == star(4)
    assert parse_graph_expr("empty:2").edge_count == 0


def test_labels_keep_the_source_text():
    assert parse_graph_expr("path:4").label == "path:4"
    assert parse_graph_expr("lex(path:4, cycle:5)").label == "lex(path:4, cycle:5)"


def test_binary_operators():
    assert parse_graph_expr("lex(path:4,cycle:5)") == lex_product(path(4), cycle(5))
    assert parse_graph_expr("union(path:2,path:1)") == disjoint_union(path(2), path(1))
    assert parse_graph_expr("join(path:1,path:1)") == complete(2)
    assert parse_graph_expr(" lex( lex(path:2,path:1) , complete:2 ) ").vertex_count == 4


def test_gen_examples():
    assert format_graph(parse_graph_expr("lex(path:2,complete:2)")).startswith("4 6\n")
    assert format_graph(parse_graph_expr("path:1")) == "1 0\n"


def test_edges_expression():
    assert parse_graph_expr("edges:3:0-1:1-2") == path(3)
    assert parse_graph_expr("edges:2").edge_count == 0
    g = random_forest(8, 0.7, 11)
    assert parse_graph_expr(graph_expression(g)) == g


def test_file_expression():
    g = parse_graph_expr("lex(file:path4.txt,complete:2)", base_dir=GRAPHDATA)
    assert g == lex_product(path(4), complete(2))
    assert parse_graph_expr(f"file:{GRAPHDATA / 'spider.txt'}").vertex_count == 6


@pytest.mark.parametrize(
    "text, position, message",
    [
        ("cycle:2", 6, "cycle requires n >= 3"),
        ("foo:3", 0, "unknown graph family"),
        ("lex(path:2", 10, "expected ','"),
        ("path:3 x", 7, "unexpected trailing input"),
        ("path:", 5, "expected an integer"),
        ("(path:3)", 0, "expected a graph expression"),
        ("edges:2:0-2", 0, "out of range"),
        ("file:missing.txt", 5, "cannot read"),
        ("file:bad_header.txt", 5, "announces"),
    ],
)
def test_errors(text, position, message):
    with pytest.raises(ExprParserError) as excinfo:
        parse_graph_expr(text, base_dir=GRAPHDATA)
    assert excinfo.value.position == position
    assert message in str(excinfo.value)


def test_error_renders_caret():
    with pytest.raises(ExprParserError) as excinfo:
        parse_graph_expr("lex(path:4,cycle:2)")
    lines = str(excinfo.value).splitlines()
    assert lines[1].strip() == "lex(path:4,cycle:2)"
    assert lines[2].index("^") - lines[1].index("l") == 17
