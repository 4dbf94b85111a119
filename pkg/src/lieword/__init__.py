"""lieword: conjugacy-class complexity of finite and infinite words.

Compute factor complexity, Lie complexity and its extended and prefix
variants, build Rauzy graphs and classify their elementary circuits,
evaluate base-k automata, and mechanically verify the inequalities that
relate all of these.  See README.md for the CLI.
"""

from .core import (
    ConjugacyClass,
    FactorSet,
    canonical_rotation,
    class_contained,
    class_power_set,
    conjugacy_class,
    factor_set,
    is_primitive,
    power_to_length,
    rotations,
)
from .dfao import Dfao, builtin_dfao, digits, eval_dfao, load_dfao, parse_dfao
from .errors import (
    CircuitExplosion,
    EmptyRoot,
    EmptyWord,
    HorizonTooSmall,
    LengthExceedsPrefix,
    LiewordError,
    NotACircuit,
    ParseError,
    PartialTransition,
    RequestedBeyondFiniteWord,
    UnstableHorizon,
)
from .kernel import KERNEL_NAME
from .lie import (
    ComplexityRow,
    complexity_table,
    delta_prefix_lie,
    extended_lie_complexity,
    lie_complexity,
    prefix_lie,
    primitive_lie,
    table_to_json,
    table_to_tsv,
)
from .rauzy import (
    Circuit,
    RauzyGraph,
    build_rauzy_graph,
    circuit_root,
    classify_circuit,
    elementary_circuits,
    is_weakly_connected,
    quasi_small_count,
    to_dot,
)
from .verify import (
    TheoremReport,
    check_divisor_bijections,
    check_lemma_size,
    check_theorems,
    default_corpus,
)
from .words import (
    Automatic,
    Finite,
    Horizon,
    Morphic,
    PowerOmega,
    WordSpec,
    choose_horizon,
    materialize_prefix,
    parse_word_spec,
)

__version__ = "0.1.0"
