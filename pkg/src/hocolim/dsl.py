"""A small expression language for driving the engine from the command line.

Grammar (LL(1), whitespace-insensitive)::

    expr   := NAME tag? args? | NUMBER
    tag    := '[' NAME ']'
    args   := '(' expr (',' expr)* ')'

A ``NAME`` with arguments is a call into one of the known constructions; a
bare ``NAME`` refers to a document loaded from the fixture directory; a
``NUMBER`` is a dimension argument.  ``pretty`` prints the canonical form and
``parse(pretty(e))`` reproduces ``e`` exactly.

Diagnostics carry a position and a code: E-LEX for a bad character, E-SYN for
a malformed phrase, E-ARITY for a known head applied to the wrong arguments,
and E-UNBOUND for a reference no document satisfies.
"""

import re
from dataclasses import dataclass, field

from . import colimits as cl
from . import diagcat as dg
from . import fincat as fc
from . import sset as ss
from .errors import EngineError
from .homology import sset_homology, is_homology_iso


class DslError(EngineError):
    """A diagnostic with a stable code and a 1-based line/column position."""

    def __init__(self, code, message, line, col):
        super().__init__(f"{code} at {line}:{col}: {message}")
        self.code = code
        self.line = line
        self.col = col


# ---------------------------------------------------------------------------
# Syntax trees
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Ref:
    name: str


@dataclass(frozen=True)
class Call:
    head: str
    args: tuple
    tag: str = None


def pretty(e):
    """The canonical textual form; inverse to parse on syntax trees."""
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Ref):
        return e.name
    tag = f"[{e.tag}]" if e.tag else ""
    return f"{e.head}{tag}({', '.join(pretty(a) for a in e.args)})"


# ---------------------------------------------------------------------------
# Lexer / parser
# ---------------------------------------------------------------------------


_TOKEN = re.compile(r"[A-Za-z_][A-Za-z0-9_-]*|\d+|[()\[\],]")
_SPACE = re.compile(r"\s+")


@dataclass
class _Tok:
    kind: str  # name | number | punct | end
    text: str
    line: int
    col: int


def _lex(text):
    toks = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        m = _SPACE.match(text, i)
        if m:
            chunk = m.group()
            nl = chunk.count("\n")
            if nl:
                line += nl
                col = len(chunk) - chunk.rfind("\n")
            else:
                col += len(chunk)
            i = m.end()
            continue
        m = _TOKEN.match(text, i)
        if not m:
            raise DslError("E-LEX", f"unexpected character {text[i]!r}",
                           line, col)
        word = m.group()
        if word.isdigit():
            kind = "number"
        elif word in "()[],":
            kind = "punct"
        else:
            kind = "name"
        toks.append(_Tok(kind, word, line, col))
        col += len(word)
        i = m.end()
    toks.append(_Tok("end", "", line, col))
    return toks


class _Parser:
    def __init__(self, toks):
        self.toks = toks
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def next(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, text):
        t = self.next()
        if t.text != text:
            found = repr(t.text) if t.text else "end of input"
            raise DslError("E-SYN", f"expected {text!r}, found {found}",
                           t.line, t.col)
        return t

    def expr(self):
        t = self.next()
        if t.kind == "number":
            return Num(int(t.text))
        if t.kind != "name":
            found = repr(t.text) if t.text else "end of input"
            raise DslError("E-SYN", f"expected an expression, found {found}",
                           t.line, t.col)
        tag = None
        if self.peek().text == "[":
            self.next()
            tt = self.next()
            if tt.kind != "name":
                raise DslError("E-SYN", "expected a method name after '['",
                               tt.line, tt.col)
            tag = tt.text
            self.expect("]")
        if self.peek().text != "(":
            if tag is not None:
                t2 = self.peek()
                raise DslError("E-SYN", "a tagged head needs arguments",
                               t2.line, t2.col)
            return Ref(t.text)
        self.next()
        args = []
        if self.peek().text != ")":
            args.append(self.expr())
            while self.peek().text == ",":
                self.next()
                args.append(self.expr())
        self.expect(")")
        return Call(t.text, tuple(args), tag)


def parse(text):
    p = _Parser(_lex(text))
    e = p.expr()
    t = p.peek()
    if t.kind != "end":
        raise DslError("E-SYN", f"trailing input starting at {t.text!r}",
                       t.line, t.col)
    _check_arity(e)
    return e


# ---------------------------------------------------------------------------
# Static checks
# ---------------------------------------------------------------------------


# head -> (min args, max args, tagged?)
_HEADS = {
    "simplex": (1, 1, False),
    "boundary": (1, 1, False),
    "horn": (2, 2, False),
    "nerve": (1, 1, False),
    "product": (2, 2, False),
    "coproduct": (1, None, False),
    "exponential": (2, 2, False),
    "quotient": (3, 3, False),
    "diagram": (1, 1, False),
    "overcat": (2, 2, False),
    "colim": (1, 1, False),
    "hocolim": (1, 1, True),
    "naive_hocolim": (2, 2, True),
    "canonical_hocolim": (2, 2, True),
    "homology": (1, 1, False),
    "check_we": (1, 1, False),
    "hocored_check": (1, 1, False),
}

_METHODS = ("bk", "srep")


def _check_arity(e):
    if not isinstance(e, Call):
        return
    if e.head not in _HEADS:
        raise DslError("E-ARITY", f"unknown construction {e.head!r}", 1, 1)
    lo, hi, tagged = _HEADS[e.head]
    if len(e.args) < lo or (hi is not None and len(e.args) > hi):
        raise DslError(
            "E-ARITY",
            f"{e.head} takes {lo if lo == hi else f'{lo}+'} argument(s), "
            f"got {len(e.args)}", 1, 1)
    if e.tag is not None and not tagged:
        raise DslError("E-ARITY", f"{e.head} does not take a method tag", 1, 1)
    if tagged and e.tag is not None and e.tag not in _METHODS:
        raise DslError("E-ARITY", f"unknown method {e.tag!r}", 1, 1)
    for a in e.args:
        _check_arity(a)


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------


@dataclass
class EvalContext:
    env: object  # documents.Environment or None
    truncation: int = 3
    budget: int = ss.DEFAULT_BUDGET
    force: bool = False


def _num(e, head):
    if not isinstance(e, Num):
        raise DslError("E-ARITY", f"{head} expects a number here", 1, 1)
    return e.value


def _lookup(ctx, name, getter):
    if ctx.env is None:
        raise DslError("E-UNBOUND", f"no documents loaded; {name!r} is "
                       "unbound", 1, 1)
    try:
        return getter(ctx.env, name)
    except EngineError as exc:
        raise DslError("E-UNBOUND", str(exc), 1, 1)


def eval_sset(e, ctx):
    N = ctx.truncation
    if isinstance(e, Ref):
        return _lookup(ctx, e.name, lambda env, n: env.sset(n))
    if isinstance(e, Num):
        raise DslError("E-ARITY", "a bare number is not a simplicial set",
                       1, 1)
    h = e.head
    if h == "simplex":
        return ss.standard_simplex(_num(e.args[0], h), N)
    if h == "boundary":
        a = e.args[0]
        if isinstance(a, Num):
            return ss.boundary(a.value, N)
        if isinstance(a, Call) and a.head == "simplex":
            return ss.boundary(_num(a.args[0], h), N)
        raise DslError("E-ARITY", "boundary applies to a standard simplex",
                       1, 1)
    if h == "horn":
        return ss.horn(_num(e.args[0], h), _num(e.args[1], h), N)
    if h == "nerve":
        C = _lookup(ctx, _ref_name(e.args[0], h),
                    lambda env, n: env.category(n))
        return fc.nerve(C, N)
    if h == "product":
        return ss.product(eval_sset(e.args[0], ctx),
                          eval_sset(e.args[1], ctx))
    if h == "coproduct":
        pieces = [(i, eval_sset(a, ctx)) for i, a in enumerate(e.args)]
        return ss.coproduct(pieces)[0]
    if h == "exponential":
        Y = eval_sset(e.args[0], ctx)
        K = eval_sset(e.args[1], ctx)
        return ss.exponential(Y, K, N, budget=ctx.budget)[0]
    if h == "quotient":
        A = eval_sset(e.args[0], ctx)
        f = _lookup(ctx, _ref_name(e.args[1], h), lambda env, n: env.map(n))
        g = _lookup(ctx, _ref_name(e.args[2], h), lambda env, n: env.map(n))
        if not (f.target is A or f.target.equals(A)):
            raise DslError("E-ARITY", "quotient maps must land in the "
                           "quotiented object", 1, 1)
        return ss.coequalizer(f, g).sset
    if h in ("colim", "hocolim", "naive_hocolim", "canonical_hocolim"):
        return eval_hocolim(e, ctx).sset
    raise DslError("E-ARITY", f"{h} does not produce a simplicial set", 1, 1)


def _ref_name(e, head):
    if not isinstance(e, Ref):
        raise DslError("E-ARITY", f"{head} expects a document name here",
                       1, 1)
    return e.name


def eval_hocolim(e, ctx):
    h = e.head
    method = e.tag or "srep"
    if h == "colim":
        D = _lookup(ctx, _ref_name(e.args[0], h),
                    lambda env, n: env.diagram(n))
        col = cl.colim(D)
        return cl.HocolimResult(col.sset, "colim", colim_result=col,
                                provenance={"method": "colim"})
    if h == "hocolim":
        D = _lookup(ctx, _ref_name(e.args[0], h),
                    lambda env, n: env.diagram(n))
        if method == "bk":
            return cl.bk_hocolim(D, force=ctx.force)
        return cl.srep_hocolim(D)
    if h == "naive_hocolim":
        D = _lookup(ctx, _ref_name(e.args[0], h),
                    lambda env, n: env.diagram(n))
        X = eval_sset(e.args[1], ctx)
        res, _oc = cl.naive_hocolim(D, X, method=method, budget=ctx.budget)
        return res
    if h == "canonical_hocolim":
        D = _lookup(ctx, _ref_name(e.args[0], h),
                    lambda env, n: env.diagram(n))
        X = eval_sset(e.args[1], ctx)
        R = dg.canonical_resolution_functor(D)
        res, _extras = cl.canonical_hocolim(D, R, X, method=method,
                                            budget=ctx.budget,
                                            force=ctx.force)
        return res
    raise DslError("E-ARITY", f"{h} is not a colimit former", 1, 1)


def evaluate(e, ctx):
    """Evaluate a query (or any expression) to a plain report dict."""
    if isinstance(e, Call) and e.head == "homology":
        X = eval_sset(e.args[0], ctx)
        rep = sset_homology(X)
        return {"query": "homology", "report": rep.to_dict(),
                "sizes": [X.size(n) for n in range(X.N + 1)]}
    if isinstance(e, Call) and e.head == "check_we":
        f = _lookup(ctx, _ref_name(e.args[0], e.head),
                    lambda env, n: env.map(n))
        v = is_homology_iso(f)
        return {"query": "check_we", "iso": bool(v), "detail": v.to_dict(),
                "exit_code": 0 if v else 1}
    if isinstance(e, Call) and e.head == "hocored_check":
        from . import documents as docs
        v, _g = docs.run_scenario(ctx.env, _ref_name(e.args[0], e.head))
        return {"query": "hocored_check", "verdict": v.to_dict(),
                "exit_code": v.exit_code}
    if isinstance(e, Call) and e.head in ("colim", "hocolim", "naive_hocolim",
                                          "canonical_hocolim"):
        res = eval_hocolim(e, ctx)
        X = res.sset
        return {"query": e.head, "method": res.method,
                "sizes": [X.size(n) for n in range(X.N + 1)],
                "homology": sset_homology(X).to_dict(),
                "provenance": res.provenance}
    X = eval_sset(e, ctx)
    return {"query": "sset",
            "sizes": [X.size(n) for n in range(X.N + 1)],
            "nondegenerate": X.nondegenerate_count()}
