"""Least generalizations and greatest specializations of clause sets."""

from .core import (
    BudgetExhausted, Clause, Const, EMPTY, Fn, Literal, PreconditionError, Var,
    apply, compose, depth, factors, is_variant, mgu, resolvents, skolemize,
    standardize_apart,
)
from .implication import (
    Budget, Verdict, deduce, derivation_closure, gottlob_filter, ground_implies,
    implies_ff, instance_set, rel_implies, term_set,
)
from .lattice import gsi, gsr, lgi, lgr_ground, self_saturate
from .subsumption import (
    BOTTOM, gss_clausal, gss_horn, lg_rel_subsumption, lgs_pair, lgs_set, reduce,
    rel_subsumes, subsumes,
)
from .syntax import ParseError, Program, parse_clause, parse_program, print_clause

__version__ = "0.1.0"
