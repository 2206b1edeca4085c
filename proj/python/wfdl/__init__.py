"""Well-founded semantics for defeasible logic and normal logic programs."""

from pathlib import Path as _Path

from ._core import (
    CapExceeded,
    ParseError,
    PreconditionError,
    Program,
    Theory,
    ValidationError,
    WfdlError,
    apply_operator,
    close_conflicts,
    decode_signs,
    dl_to_lp,
    eliminate_defeaters_priorities,
    encode_signs,
    entails,
    explicit_version,
    format_tree,
    gamma,
    lp_to_dl,
    prove,
    refutes,
    stable_models,
    stable_sets,
    validate_tree,
    wfm_dl,
    wfm_lp,
    wfm_operator,
    wfm_via_gamma,
    x_limit,
)

__version__ = "0.1.0"


def load(path):
    """Reads a .dfl theory or a .lp program, picking the parser by suffix."""
    path = _Path(path)
    text = path.read_text()
    if path.suffix == ".lp":
        return Program.parse(text)
    return Theory.parse(text)


__all__ = [name for name in dir() if not name.startswith("_")]
