"""Graph expression parser.

Grammar::

    expr := "path:" INT | "cycle:" INT | "complete:" INT | "star:" INT
          | "empty:" INT | "edges:" INT (":" INT "-" INT)*
          | "lex(" expr "," expr ")" | "union(" expr "," expr ")"
          | "join(" expr "," expr ")" | "file:" PATH

`PATH` runs up to the next top-level `,` or `)`.
"""

import re
from pathlib import Path
from typing import Callable, Dict, Optional, Union

from indcomplex.graph import (
    Graph,
    complete,
    complete_join,
    cycle,
    disjoint_union,
    empty_graph,
    lex_product,
    parse_graph_text,
    path,
    star,
)

_families: Dict[str, Callable[[int], Graph]] = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "star": star,
    "empty": empty_graph,
}
_binary: Dict[str, Callable[[Graph, Graph], Graph]] = {
    "lex": lex_product,
    "union": disjoint_union,
    "join": complete_join,
}

_name_re = re.compile(r"[a-z]+")
_int_re = re.compile(r"\d+")


class ExprParser:
    def __init__(self, text: str, base_dir: Union[str, Path, None] = None) -> None:
        self.text = text
        self.pos: int = 0
        self.base_dir = Path(base_dir) if base_dir is not None else None

    @property
    def rest(self) -> str:
        return self.text[self.pos :]

    def parse(self) -> Graph:
        g = self._consume_expr()
        self._consume_spaces()
        if self.pos != len(self.text):
            raise self._error("unexpected trailing input")
        return g

    def _error(self, msg: str, pos: Optional[int] = None) -> "ExprParserError":
        return ExprParserError(msg, self.text, self.pos if pos is None else pos)

    def _consume_spaces(self) -> None:
        self.pos += len(self.rest) - len(self.rest.lstrip())

    def _expect(self, token: str) -> None:
        self._consume_spaces()
        if not self.rest.startswith(token):
            raise self._error(f"expected {token!r}")
        self.pos += len(token)

    def _consume_int(self) -> int:
        self._consume_spaces()
        match = _int_re.match(self.rest)
        if not match:
            raise self._error("expected an integer")
        self.pos += match.end()
        return int(match.group())

    def _consume_expr(self) -> Graph:
        self._consume_spaces()
        start = self.pos
        match = _name_re.match(self.rest)
        if not match:
            raise self._error("expected a graph expression")
        name = match.group()
        self.pos += match.end()
        if name in _binary:
            self._expect("(")
            left = self._consume_expr()
            self._expect(",")
            right = self._consume_expr()
            self._expect(")")
            g = _binary[name](left, right)
            return Graph(g.vertex_count, g.rows, self.text[start : self.pos].strip())
        self._expect(":")
        if name == "file":
            return self._consume_file(start)
        if name == "edges":
            return self._consume_edges(start)
        if name not in _families:
            raise self._error(f"unknown graph family {name!r}", start)
        arg_pos = self.pos
        n = self._consume_int()
        try:
            return _families[name](n)
        except ValueError as e:
            raise self._error(str(e), arg_pos) from None

    def _consume_edges(self, start: int) -> Graph:
        n = self._consume_int()
        edges = []
        while self.rest.startswith(":"):
            self.pos += 1
            u = self._consume_int()
            self._expect("-")
            v = self._consume_int()
            edges.append((u, v))
        try:
            return Graph.from_edges(n, edges, self.text[start : self.pos])
        except ValueError as e:
            raise self._error(str(e), start) from None

    def _consume_file(self, start: int) -> Graph:
        path_start = self.pos
        depth = 0
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == "(":
                depth += 1
            elif ch in ",)" and depth == 0:
                break
            elif ch == ")":
                depth -= 1
            self.pos += 1
        raw = self.text[path_start : self.pos].strip()
        if not raw:
            raise self._error("expected a file path", path_start)
        file = Path(raw)
        if self.base_dir is not None and not file.is_absolute():
            file = self.base_dir / file
        try:
            text = file.read_text(encoding="utf-8")
        except OSError as e:
            raise self._error(f"cannot read {raw!r}: {e.strerror}", path_start) from None
        try:
            return parse_graph_text(text, label=self.text[start : self.pos].strip())
        except ValueError as e:
            raise self._error(f"{raw}: {e}", path_start) from None


def parse_graph_expr(text: str, base_dir: Union[str, Path, None] = None) -> Graph:
    """Parse a graph expression such as `lex(path:4,cycle:5)`."""
    return ExprParser(text, base_dir).parse()


class ExprParserError(ValueError):
    """Expression error carrying the 0-based offending position."""

    def __init__(self, msg: str, text: str, position: int) -> None:
        self.msg = msg
        self.text = text
        self.position = position
        super().__init__(f"{msg} at position {position}\n  {text}\n  {' ' * position}^")
