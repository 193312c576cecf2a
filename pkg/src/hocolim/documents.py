"""Line-oriented structured-text documents for the fixture corpus.

Every document starts with a ``kind <type>`` line; the body is a sequence of
tab-separated records whose order is canonical, so that ``save(load(text))``
reproduces the input byte for byte.  Simplicial sets are stored by their
nondegenerate simplices only; degenerate simplices are regenerated
deterministically on load.  Python-literal reprs are used for simplex ids so
that tuples, strings and integers all round-trip exactly.

Documents reference each other by name (the filename stem); an
:class:`Environment` resolves those references against a directory.
"""

import ast
import os

from . import colimits as cl
from . import diagcat as dg
from . import fincat as fc
from . import sset as ss
from .errors import DocumentError


KINDS = (
    "category", "sset", "map", "diagram", "functor", "nattrans",
    "hocored-scenario",
)


def _lit(text):
    try:
        return ast.literal_eval(text)
    except (ValueError, SyntaxError):
        raise DocumentError(f"bad literal {text!r}")


def _split(line):
    return line.split("\t")


class Document:
    """A parsed document: its kind, header fields, and records."""

    __slots__ = ("kind", "fields", "records")

    def __init__(self, kind, fields, records):
        self.kind = kind
        self.fields = fields
        self.records = records


def parse_document(text):
    lines = text.splitlines()
    if not lines or not lines[0].startswith("kind "):
        raise DocumentError("document must start with a 'kind <type>' line")
    kind = lines[0][5:].strip()
    if kind not in KINDS:
        raise DocumentError(f"unknown document kind {kind!r}")
    fields = {}
    records = []
    for ln, line in enumerate(lines[1:], start=2):
        if not line or line.startswith("#"):
            continue
        parts = _split(line)
        if len(parts) == 1 and " " in parts[0]:
            key, _, val = parts[0].partition(" ")
            fields[key] = val
        else:
            records.append(parts)
    return Document(kind, fields, records)


# ---------------------------------------------------------------------------
# Savers: each emits the canonical byte form
# ---------------------------------------------------------------------------


def save_sset(X):
    out = ["kind sset", f"truncation {X.N}"]
    for n in range(X.N + 1):
        for x in X.nondegenerate(n):
            cells = ["simplex", str(n), repr(x)]
            for i in range(n + 1) if n else ():
                f = X.face(n, i, x)
                word, base = X.ez[(n - 1, f)]
                cells.append(repr((word, base)))
            out.append("\t".join(cells))
    return "\n".join(out) + "\n"


def save_category(C):
    out = ["kind category"]
    for o in C.objects:
        out.append(f"object\t{o}")
    for m in sorted(C.mor):
        s, d = C.mor[m]
        out.append(f"morphism\t{m}\t{s}\t{d}")
    for o in C.objects:
        out.append(f"identity\t{o}\t{C.identity[o]}")
    for (g, f) in sorted(C.comp):
        out.append(f"compose\t{g}\t{f}\t{C.comp[(g, f)]}")
    return "\n".join(out) + "\n"


def save_map(f, source_name, target_name):
    out = ["kind map", f"source {source_name}", f"target {target_name}"]
    X, Y = f.source, f.target
    for n in range(X.N + 1):
        for x in X.nondegenerate(n):
            y = f(n, x)
            word, base = Y.ez[(n, y)]
            out.append("\t".join(
                ["image", str(n), repr(x), repr(word), repr(base)]))
    return "\n".join(out) + "\n"


def save_diagram(names):
    """names: (shape_name, {object: sset_name}, {morphism: map_name})."""
    shape_name, obj, mor = names
    out = ["kind diagram", f"shape {shape_name}"]
    for o in sorted(obj):
        out.append(f"object\t{o}\t{obj[o]}")
    for m in sorted(mor):
        out.append(f"morphism\t{m}\t{mor[m]}")
    return "\n".join(out) + "\n"


def save_functor(F, source_name, target_name):
    out = ["kind functor", f"source {source_name}", f"target {target_name}"]
    for o in F.source.objects:
        out.append(f"object\t{o}\t{F.ob[o]}")
    for m in sorted(F.source.mor):
        out.append(f"morphism\t{m}\t{F.mo[m]}")
    return "\n".join(out) + "\n"


def save_nattrans(eta, source_name, target_name):
    out = ["kind nattrans", f"source {source_name}", f"target {target_name}"]
    for o in eta.source.source.objects:
        out.append(f"component\t{o}\t{eta.components[o]}")
    return "\n".join(out) + "\n"


def save_hocored_scenario(f_name, g_name, eta_names, theta_names, diag_name):
    out = ["kind hocored-scenario",
           f"f {f_name or '-'}",
           f"g {g_name}",
           f"eta {','.join(eta_names) if eta_names else '-'}",
           f"theta {','.join(theta_names) if theta_names else '-'}",
           f"diagram {diag_name}"]
    return "\n".join(out) + "\n"


# header-field order per kind, matching the savers
_FIELD_ORDER = {
    "category": (),
    "sset": ("truncation",),
    "map": ("source", "target"),
    "diagram": ("shape",),
    "functor": ("source", "target"),
    "nattrans": ("source", "target"),
    "hocored-scenario": ("f", "g", "eta", "theta", "diagram"),
}


def canonical_text(doc):
    """Re-emit a parsed document in canonical byte form.

    For documents produced by the savers this is the identity on bytes, which
    is what the round-trip guarantee tests."""
    out = [f"kind {doc.kind}"]
    for key in _FIELD_ORDER[doc.kind]:
        if key in doc.fields:
            out.append(f"{key} {doc.fields[key]}")
    for rec in doc.records:
        out.append("\t".join(rec))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Environment: name resolution over a fixture directory
# ---------------------------------------------------------------------------


class Environment:
    """Resolves document names (filename stems) to loaded objects.

    ``truncation`` applies to simplicial-set documents whose own header is
    permitted to disagree only by being re-truncatable; a mismatch raises.
    Loads are cached; reference cycles raise.
    """

    def __init__(self, docs_dir, truncation=3):
        self.docs_dir = docs_dir
        self.truncation = truncation
        self._cache = {}
        self._loading = set()

    def _read(self, name):
        path = os.path.join(self.docs_dir, name + ".txt")
        if not os.path.exists(path):
            raise DocumentError(f"no document named {name!r} in {self.docs_dir}")
        with open(path, encoding="utf-8") as fh:
            return fh.read()

    def load(self, name):
        if name in self._cache:
            return self._cache[name]
        if name in self._loading:
            raise DocumentError(f"circular reference through {name!r}")
        self._loading.add(name)
        try:
            doc = parse_document(self._read(name))
            value = self._build(doc)
        finally:
            self._loading.discard(name)
        self._cache[name] = (doc.kind, value)
        return self._cache[name]

    def sset(self, name):
        kind, value = self.load(name)
        if kind != "sset":
            raise DocumentError(f"{name!r} is a {kind}, expected sset")
        return value

    def category(self, name):
        kind, value = self.load(name)
        if kind != "category":
            raise DocumentError(f"{name!r} is a {kind}, expected category")
        return value

    def map(self, name):
        kind, value = self.load(name)
        if kind != "map":
            raise DocumentError(f"{name!r} is a {kind}, expected map")
        return value

    def diagram(self, name):
        kind, value = self.load(name)
        if kind != "diagram":
            raise DocumentError(f"{name!r} is a {kind}, expected diagram")
        return value

    def functor(self, name):
        kind, value = self.load(name)
        if kind != "functor":
            raise DocumentError(f"{name!r} is a {kind}, expected functor")
        return value

    def nattrans(self, name):
        kind, value = self.load(name)
        if kind != "nattrans":
            raise DocumentError(f"{name!r} is a {kind}, expected nattrans")
        return value

    def scenario(self, name):
        kind, value = self.load(name)
        if kind != "hocored-scenario":
            raise DocumentError(f"{name!r} is a {kind}, expected scenario")
        return value

    # -- builders -------------------------------------------------------

    def _build(self, doc):
        builder = {
            "sset": self._build_sset,
            "category": self._build_category,
            "map": self._build_map,
            "diagram": self._build_diagram,
            "functor": self._build_functor,
            "nattrans": self._build_nattrans,
            "hocored-scenario": self._build_scenario,
        }[doc.kind]
        return builder(doc)

    def _build_sset(self, doc):
        N = int(doc.fields.get("truncation", self.truncation))
        if N != self.truncation:
            raise DocumentError(
                f"document truncation {N} disagrees with --truncation "
                f"{self.truncation}")
        nondeg = [[] for _ in range(N + 1)]
        face_tab = {}
        for rec in doc.records:
            if rec[0] != "simplex":
                raise DocumentError(f"unexpected record {rec[0]!r} in sset")
            n = int(rec[1])
            x = _lit(rec[2])
            if n > N:
                raise DocumentError(f"simplex above truncation: {rec!r}")
            nondeg[n].append(x)
            expected = 3 + (n + 1 if n else 0)
            if len(rec) != expected:
                raise DocumentError(f"wrong face count in {rec!r}")
            for i in range(n + 1) if n else ():
                face_tab[(n, i, x)] = _lit(rec[3 + i])

        def face_fn(n, i, x):
            return face_tab[(n, i, x)]

        return ss.SimplicialSet.from_nondegenerate(N, nondeg, face_fn)

    def _build_category(self, doc):
        objects = []
        mor = {}
        identity = {}
        comp = {}
        for rec in doc.records:
            tag = rec[0]
            if tag == "object":
                objects.append(rec[1])
            elif tag == "morphism":
                mor[rec[1]] = (rec[2], rec[3])
            elif tag == "identity":
                identity[rec[1]] = rec[2]
            elif tag == "compose":
                comp[(rec[1], rec[2])] = rec[3]
            else:
                raise DocumentError(f"unexpected record {tag!r} in category")
        return fc.FinCat(tuple(objects), mor, identity, comp)

    def _build_map(self, doc):
        X = self.sset(doc.fields["source"])
        Y = self.sset(doc.fields["target"])
        images = {}
        for rec in doc.records:
            if rec[0] != "image":
                raise DocumentError(f"unexpected record {rec[0]!r} in map")
            n = int(rec[1])
            x = _lit(rec[2])
            word = _lit(rec[3])
            base = _lit(rec[4])
            m = n - len(word)
            images[(n, x)] = Y.apply_word(word, m, base)
        return ss.SimplicialMap.from_nondegenerate_images(X, Y, images)

    def _build_diagram(self, doc):
        C = self.category(doc.fields["shape"])
        obj = {}
        mor = {}
        for rec in doc.records:
            if rec[0] == "object":
                obj[rec[1]] = self.sset(rec[2])
            elif rec[0] == "morphism":
                mor[rec[1]] = rec[2]
            else:
                raise DocumentError(f"unexpected record {rec[0]!r} in diagram")
        maps = {}
        for m, name in mor.items():
            if name == "identity":
                maps[m] = ss.SimplicialMap.identity(obj[C.src(m)])
            else:
                maps[m] = self.map(name)
        return dg.Diagram(C, obj, maps)

    def _build_functor(self, doc):
        C = self.category(doc.fields["source"])
        D = self.category(doc.fields["target"])
        ob = {}
        mo = {}
        for rec in doc.records:
            if rec[0] == "object":
                ob[rec[1]] = rec[2]
            elif rec[0] == "morphism":
                mo[rec[1]] = rec[2]
            else:
                raise DocumentError(f"unexpected record {rec[0]!r} in functor")
        return fc.Functor(C, D, ob, mo)

    def _build_nattrans(self, doc):
        F = self.functor(doc.fields["source"])
        G = self.functor(doc.fields["target"])
        components = {rec[1]: rec[2] for rec in doc.records
                      if rec[0] == "component"}
        return fc.NatTrans(F, G, components)

    def _build_scenario(self, doc):
        def names(field):
            raw = doc.fields.get(field, "-")
            return [] if raw == "-" else raw.split(",")

        f = None
        if doc.fields.get("f", "-") != "-":
            f = self.functor(doc.fields["f"])
        g = self.functor(doc.fields["g"])
        eta = [self.nattrans(n) for n in names("eta")]
        theta = [self.nattrans(n) for n in names("theta")]
        X = self.diagram(doc.fields["diagram"])
        return {"f": f, "g": g, "eta": eta, "theta": theta, "diagram": X}


def run_scenario(env, name):
    sc = env.scenario(name)
    return cl.hocored_check(sc["f"], sc["g"], sc["eta"], sc["theta"],
                            sc["diagram"])
