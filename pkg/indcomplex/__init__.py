__version__ = "0.1.0"
from indcomplex.exprparser import parse_graph_expr as parse_graph_expr
from indcomplex.graph import Graph as Graph
from indcomplex.verify import Verifier as Verifier
