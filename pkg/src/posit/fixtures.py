"""Bundled example automata and arenas used by tests and the CLI."""

from importlib.resources import as_file, files

from .automata import Dpa, parse_dpa
from .games import Arena, parse_arena

DPA_NAMES = ("buchi_a", "fin_a", "onea", "infab", "rabin", "w2", "res", "ex3")
ARENA_NAMES = ("w2game", "twoloops")


def data_dir() -> str:
    with as_file(files("posit") / "data") as path:
        return str(path)


def fixture_path(name: str) -> str:
    if name in DPA_NAMES:
        filename = name + ".dpa"
    elif name in ARENA_NAMES:
        filename = name + ".arena"
    else:
        raise KeyError("unknown fixture %r" % name)
    with as_file(files("posit") / "data" / filename) as path:
        return str(path)


def load_dpa(name: str) -> Dpa:
    if name not in DPA_NAMES:
        raise KeyError("unknown automaton fixture %r" % name)
    text = (files("posit") / "data" / (name + ".dpa")).read_text()
    return parse_dpa(text)


def load_arena(name: str) -> Arena:
    if name not in ARENA_NAMES:
        raise KeyError("unknown arena fixture %r" % name)
    text = (files("posit") / "data" / (name + ".arena")).read_text()
    return parse_arena(text)
