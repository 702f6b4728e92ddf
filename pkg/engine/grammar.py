from lark import Lark # type: ignore


# Gluing table: a tetrahedron count, then one line per (tetrahedron, face)
# in order (0,0), (0,1), ..., (t-1,3). The third field of a gluing lists the
# images of the source face's vertices, taken in ascending order.
GLUING_EBNF = r"""
%import common.WS_INLINE
%ignore WS_INLINE

COMMENT: /#[^\n]*/
%ignore COMMENT

_NL: /(\r?\n)+/
NUMBER: /[0-9]+/
BDRY: "bdry"

table: _NL* count (_NL+ face)* _NL*

count: NUMBER

face: BDRY                      -> boundary
    | NUMBER NUMBER NUMBER      -> glued
"""


# Normal vector: whitespace-separated non-negative integers.
VECTOR_EBNF = r"""
%import common.WS
%ignore WS

COMMENT: /#[^\n]*/
%ignore COMMENT

NUMBER: /[0-9]+/

vector: NUMBER*
"""


def gluing_parser() -> Lark:
    """Make a parser for gluing tables."""
    return Lark(GLUING_EBNF, start='table', lexer='standard', propagate_positions=True)


def vector_parser() -> Lark:
    """Make a parser for normal vectors."""
    return Lark(VECTOR_EBNF, start='vector', lexer='standard')
