"""Self-organizing list simulation (MTF, TRANS, FC) and exact MTF cost formulas."""

from listaccess.core import (
    CostModel,
    ListState,
    access_cost,
    move_forward_to,
    move_to_front,
    position_of,
    transpose_forward,
)
from listaccess.errors import (
    BlockMismatch,
    DuplicateItems,
    ExcludedPermutation,
    InvalidParam,
    InvalidPosition,
    ItemNotFound,
    ListAccessError,
    NotAPermutation,
    NotASubsequence,
    ParseError,
    RangeError,
    SizeViolation,
)
from listaccess.policies import (
    PolicyKind,
    RequestRecord,
    SimulationResult,
    frequency_table,
    policy_step,
    serve,
)
from listaccess.predictor import (
    Prediction,
    first_block_position_sum,
    predict,
    predict_t1,
    predict_t2,
    predict_t3,
    predict_t4,
)
from listaccess.seqgen import (
    RequestSequence,
    SequenceKind,
    SequenceSpec,
    gen_t1,
    gen_t2,
    gen_t3,
    gen_t4,
    parse_sequence_file,
    random_permutation,
    random_subsequence,
    serialize_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "BlockMismatch",
    "CostModel",
    "DuplicateItems",
    "ExcludedPermutation",
    "InvalidParam",
    "InvalidPosition",
    "ItemNotFound",
    "ListAccessError",
    "ListState",
    "NotAPermutation",
    "NotASubsequence",
    "ParseError",
    "PolicyKind",
    "Prediction",
    "RangeError",
    "RequestRecord",
    "RequestSequence",
    "SequenceKind",
    "SequenceSpec",
    "SimulationResult",
    "SizeViolation",
    "access_cost",
    "first_block_position_sum",
    "frequency_table",
    "gen_t1",
    "gen_t2",
    "gen_t3",
    "gen_t4",
    "move_forward_to",
    "move_to_front",
    "parse_sequence_file",
    "policy_step",
    "position_of",
    "predict",
    "predict_t1",
    "predict_t2",
    "predict_t3",
    "predict_t4",
    "random_permutation",
    "random_subsequence",
    "serialize_sequence",
    "serve",
    "transpose_forward",
]
