"""Deterministic parity automata with transition priorities.

Acceptance is min-even: an infinite run is accepting iff the smallest
priority occurring infinitely often along it is even.  Complementation
is therefore a parity shift.  The text format is line based:

    dpa v1
    alphabet a b
    states 2            # or: states s0 s1
    initial 0
    trans 0 a 1 3       # source letter target priority

Comments start with '#'; priorities are bounded by MAX_PRIORITY in
files (shifted internal copies may exceed it).
"""

from collections import deque

from .cycles import accepting_lasso_from
from .errors import AlphabetMismatch, ParseError, UnknownLetter
from .words import Alphabet, LassoWord

MAX_PRIORITY = 16

# Reserved in state and vertex names: used to join product coordinates.
RESERVED = "@"


class Dpa:
    """Complete deterministic parity automaton over a finite alphabet."""

    def __init__(self, alphabet: Alphabet, names, initial: int, delta):
        self.alphabet = alphabet
        self.names = tuple(names)
        self.initial = initial
        # delta[q][c] = (target, priority), one entry per letter
        self.delta = tuple(dict(row) for row in delta)
        if len(self.names) != len(self.delta):
            raise ParseError("state name count does not match transition table")
        if not self.names:
            raise ParseError("automaton needs at least one state")
        if len(set(self.names)) != len(self.names):
            raise ParseError("duplicate state name")
        if not 0 <= initial < len(self.names):
            raise ParseError("initial state out of range")
        self._ids = {name: i for i, name in enumerate(self.names)}
        for q, row in enumerate(self.delta):
            for c in alphabet:
                if c not in row:
                    raise ParseError(
                        "state %s has no transition on %r" % (self.names[q], c))
            for c, (tgt, pri) in row.items():
                if c not in alphabet:
                    raise UnknownLetter("letter %r not in alphabet" % c)
                if not 0 <= tgt < len(self.names):
                    raise ParseError("transition target out of range")
                if pri < 0:
                    raise ParseError("negative priority")

    @property
    def n(self) -> int:
        return len(self.names)

    def state_id(self, name: str) -> int:
        if name not in self._ids:
            raise ParseError("unknown state %r" % name)
        return self._ids[name]

    def step(self, state: int, letter: str):
        """(target, priority) for one transition."""
        row = self.delta[state]
        if letter not in row:
            raise UnknownLetter("letter %r not in alphabet" % letter)
        return row[letter]

    def __repr__(self):
        return "Dpa(%d states over %r)" % (self.n, "".join(self.alphabet))


def parse_dpa(text: str) -> Dpa:
    lines = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((no, line.split()))
    if not lines or lines[0][1] != ["dpa", "v1"]:
        raise ParseError("expected 'dpa v1' header")

    alphabet = None
    names = None
    initial_tok = None
    trans = []
    for no, toks in lines[1:]:
        key, rest = toks[0], toks[1:]
        if key == "alphabet":
            if alphabet is not None:
                raise ParseError("line %d: duplicate alphabet" % no)
            alphabet = Alphabet(rest)
        elif key == "states":
            if names is not None:
                raise ParseError("line %d: duplicate states" % no)
            if len(rest) == 1 and rest[0].isdigit():
                names = tuple(str(i) for i in range(int(rest[0])))
            elif rest:
                names = tuple(rest)
            else:
                raise ParseError("line %d: empty states line" % no)
            for name in names:
                if RESERVED in name:
                    raise ParseError(
                        "line %d: %r is reserved in state names" % (no, RESERVED))
        elif key == "initial":
            if initial_tok is not None:
                raise ParseError("line %d: duplicate initial" % no)
            if len(rest) != 1:
                raise ParseError("line %d: initial takes one state" % no)
            initial_tok = rest[0]
        elif key == "trans":
            if len(rest) != 4:
                raise ParseError(
                    "line %d: trans takes source letter target priority" % no)
            trans.append((no, rest))
        else:
            raise ParseError("line %d: unknown directive %r" % (no, key))

    if alphabet is None:
        raise ParseError("missing alphabet line")
    if names is None:
        raise ParseError("missing states line")
    if initial_tok is None:
        raise ParseError("missing initial line")
    ids = {name: i for i, name in enumerate(names)}
    if len(ids) != len(names):
        raise ParseError("duplicate state name")
    if initial_tok not in ids:
        raise ParseError("unknown initial state %r" % initial_tok)

    delta = [dict() for _ in names]
    for no, (src, c, tgt, pri_tok) in trans:
        if src not in ids:
            raise ParseError("line %d: unknown state %r" % (no, src))
        if tgt not in ids:
            raise ParseError("line %d: unknown state %r" % (no, tgt))
        if c not in alphabet:
            raise ParseError("line %d: letter %r not in alphabet" % (no, c))
        try:
            pri = int(pri_tok)
        except ValueError:
            raise ParseError("line %d: bad priority %r" % (no, pri_tok)) from None
        if not 0 <= pri <= MAX_PRIORITY:
            raise ParseError(
                "line %d: priority %d outside 0..%d" % (no, pri, MAX_PRIORITY))
        row = delta[ids[src]]
        if c in row:
            raise ParseError(
                "line %d: duplicate transition from %s on %r" % (no, src, c))
        row[c] = (ids[tgt], pri)
    for name, row in zip(names, delta):
        for c in alphabet:
            if c not in row:
                raise ParseError("state %s has no transition on %r" % (name, c))
    return Dpa(alphabet, names, ids[initial_tok], delta)


def format_dpa(a: Dpa) -> str:
    out = ["dpa v1", "alphabet " + " ".join(a.alphabet)]
    if a.names == tuple(str(i) for i in range(a.n)):
        out.append("states %d" % a.n)
    else:
        out.append("states " + " ".join(a.names))
    out.append("initial " + a.names[a.initial])
    for q in range(a.n):
        for c in a.alphabet:
            tgt, pri = a.delta[q][c]
            out.append("trans %s %s %s %d" % (a.names[q], c, a.names[tgt], pri))
    return "\n".join(out) + "\n"


def run_finite(a: Dpa, frm: int, word: str):
    """(final state, minimum priority seen or None for the empty word)."""
    best = None
    state = frm
    for c in word:
        state, pri = a.step(state, c)
        if best is None or pri < best:
            best = pri
    return state, best


def member_from(a: Dpa, frm: int, w: LassoWord) -> bool:
    """Does the run on w from `frm` satisfy min-even parity?

    Iterates whole periods until the entry state repeats; the verdict is
    the parity of the smallest block minimum on the repeating part.
    """
    state, _ = run_finite(a, frm, w.prefix)
    seen = {}
    blocks = []
    while state not in seen:
        seen[state] = len(blocks)
        state, block_min = run_finite(a, state, w.period)
        blocks.append(block_min)
    return min(blocks[seen[state]:]) % 2 == 0


def member(a: Dpa, w: LassoWord) -> bool:
    return member_from(a, a.initial, w)


def complement_shift(a: Dpa) -> Dpa:
    """Same structure with all priorities shifted by one, flipping parity."""
    delta = [{c: (tgt, pri + 1) for c, (tgt, pri) in row.items()}
             for row in a.delta]
    return Dpa(a.alphabet, a.names, a.initial, delta)


class ProductGraph:
    """Synchronous product of two automata over a shared alphabet.

    Nodes are state-id pairs; each edge carries the priority pair of the
    component transitions.
    """

    def __init__(self, a1: Dpa, a2: Dpa):
        if a1.alphabet != a2.alphabet:
            raise AlphabetMismatch("product components use different alphabets")
        self.a1 = a1
        self.a2 = a2
        self.graph = {}
        for p in range(a1.n):
            for q in range(a2.n):
                edges = []
                for c in a1.alphabet:
                    t1, pri1 = a1.delta[p][c]
                    t2, pri2 = a2.delta[q][c]
                    edges.append((c, (t1, t2), (pri1, pri2)))
                self.graph[(p, q)] = edges

    @property
    def vertices(self):
        return list(self.graph)


def product(a1: Dpa, a2: Dpa) -> ProductGraph:
    return ProductGraph(a1, a2)


def conj_nonempty_witness(g: ProductGraph, start) -> LassoWord | None:
    """A lasso accepted by both components from `start`, or None."""
    if start not in g.graph:
        raise ParseError("start %r is not a product state" % (start,))
    return accepting_lasso_from(g.graph, start)


def residual_included(a: Dpa, p: int, q: int) -> LassoWord | None:
    """None if every lasso accepted from p is accepted from q, else a
    counterexample accepted from p and rejected from q."""
    g = product(a, complement_shift(a))
    return conj_nonempty_witness(g, (p, q))


def reachable_states(a: Dpa):
    """Map from reachable state id to a shortest access word, BFS order."""
    access = {a.initial: ""}
    queue = deque([a.initial])
    while queue:
        p = queue.popleft()
        for c in a.alphabet:
            t, _ = a.delta[p][c]
            if t not in access:
                access[t] = access[p] + c
                queue.append(t)
    return access
