"""q-ary constant-weight sequences from weighting sequences and Gray-code prefixes."""

from .alphabet import (
    Sequence,
    add_mod,
    balancing_value,
    format_sequence,
    parse_sequence,
    seq,
    sub_mod,
    weight,
)
from .codec import (
    CodecParams,
    EncodingTrace,
    TraceRow,
    WeightBounds,
    decode,
    decode_steps,
    derive_params,
    encode,
    enumerate_encodings,
    weight_bounds,
)
from .errors import (
    ExhaustionCapExceeded,
    InvalidPrefix,
    UnsupportedLength,
    WeightOutsideBoundsWarning,
    WeightUnreachable,
)
from .graycode import gray_decode, gray_encode, gray_table, index_to_word, word_to_index
from .weighting import WeightingIndex, all_weighted_outputs, index_to_sp, weighting_sequence

__version__ = "0.1.0"
