"""Variable neighbourhood search for labelled spanning tree and forest problems."""

from .constructive import (TemperatureSchedule, acceptance_probability, cooling_step, mvca,
                           probabilistic_construct)
from .exceptions import (InputDomainError, LabelVNSError, OracleLimitError, ParseError,
                         UnsolvableInstanceError)
from .graph import (ComponentPartition, EdgeForest, LabelledGraph, LabelSet, components,
                    extract_forest, hamming_distance)
from .instance_io import GeneratorParams, generate, generate_connected, parse_instance, write_instance
from .oracle import OracleResult, exact_solve
from .problems import Evaluation, ProblemKind, ProblemSpec, better_than, evaluate
from .vns import (SearchLog, SolveResult, SolverConfig, Variant, complementary, local_search,
                  random_initial, reactive_update_qmax, shake, solve)

__version__ = "0.1.0"
