"""Byte-stream cipher toolkit: keystream generation from divergent
polynomials over password bytes, reversible byte deconstruction, XOR
stream encryption, statistical validation, an OTP baseline, and
self-decryptable encrypted web blocks.

Experimental and educational; not a vetted cipher.
"""

from .blocks import (Block, BlockVersion, ChainItem, ChecksumMismatch,
                     build_block, build_chain, decrypt_block, parse_block,
                     password_recheck, verify_block)
from .core import (CipherParams, DEFAULT_IV, KeystreamState, Order1,
                   Order2Recursive, X0, YN_LOW_BYTE, checksum,
                   deconstruct_stream, decrypt_stream, encrypt_stream,
                   init_state, keystream, next_key)
from .errors import (InvalidParams, IoFailure, LengthMismatch,
                     MalformedHeader, NotABlock, PmseError,
                     RandomSourceUnavailable, SchemaVersionUnknown,
                     TemplateMissingSlot, TooShort, TruncatedPayload,
                     UnknownSet, UnsupportedMaxval, ZeroVariance)
from .otp import OtpComparison, compare_report, generate_pad, otp_encrypt
from .permutations import (PermutationCase, PermutationSet, builtin_set,
                           dumps_set, forward, get_set, inverse, loads_set,
                           register_set, validate_set)
from .pnm import Image, dumps_pnm, read_pnm, write_pnm
from .stats import (StreamStats, basic_stats, correlation, shannon_entropy,
                    spectrum)

__version__ = "0.1.0"
