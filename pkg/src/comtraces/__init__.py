"""Comtraces (combined traces) and their order- and graph-theoretic forms."""
from .alphabet import Alphabet, all_steps, build_alphabet, is_step
from .cdgraph import CdGraph, check_cdgraph, nonserializable_components
from .congruence import Comtrace, comtrace, concat, equivalent
from .errors import BoundExceeded, ComtraceError, ParseError, SemanticError
from .lsos import (LabeledStructure, LsosComtrace, canonicalize, check_lsos, check_lsos_prime,
                   lp_isomorphic)
from .sostruct import (QuotientStructure, RelationalStructure, SoStructure, brute_force_extensions,
                       check_so_axioms, cycle_classes, diamond_closure, intersect_extensions,
                       is_so_structure, quotient, stratified_extensions, synchronous_step_witness)
from .stepseq import Occ, StratifiedOrder, imap, parse, render
from .transform import (compose_cdg, compose_lsos, ct2dep, ct2lct, dep2lct, identity_cdg,
                        identity_lsos, lct2ct, lct2dep)

__all__ = [
    "Alphabet", "all_steps", "build_alphabet", "is_step",
    "CdGraph", "check_cdgraph", "nonserializable_components",
    "Comtrace", "comtrace", "concat", "equivalent",
    "BoundExceeded", "ComtraceError", "ParseError", "SemanticError",
    "LabeledStructure", "LsosComtrace", "canonicalize", "check_lsos", "check_lsos_prime",
    "lp_isomorphic",
    "QuotientStructure", "RelationalStructure", "SoStructure", "brute_force_extensions",
    "check_so_axioms", "cycle_classes", "diamond_closure", "intersect_extensions",
    "is_so_structure", "quotient", "stratified_extensions", "synchronous_step_witness",
    "Occ", "StratifiedOrder", "imap", "parse", "render",
    "compose_cdg", "compose_lsos", "ct2dep", "ct2lct", "dep2lct", "identity_cdg",
    "identity_lsos", "lct2ct", "lct2dep",
]
