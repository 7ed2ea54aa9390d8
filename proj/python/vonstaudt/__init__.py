# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""von Staudt constructions, matroid circuit families and exact
representation checks over Q, F_p and F_p(l, m).

Structured values are plain dicts in the same layout as the CLI's JSON
files. Field elements are strings.
"""

import json

from . import _vonstaudt
from ._vonstaudt import (
    DivisionByZero,
    Error,
    FormatError,
    InvalidArgument,
    ParseError,
    VerificationError,
)

__all__ = [
    "DivisionByZero",
    "Error",
    "FormatError",
    "InvalidArgument",
    "ParseError",
    "VerificationError",
    "atomicize",
    "build_matroid",
    "bs_search",
    "extract",
    "horn_reduce",
    "lemma_block_rank",
    "rank",
    "represent",
    "trace_obstruction",
    "verify",
    "weyl",
]


def _dump(value):
    return value if isinstance(value, str) else json.dumps(value)


def atomicize(text):
    """Atomic system for an equation file's text."""
    return json.loads(_vonstaudt.atomicize(text))


def build_matroid(atomic, unit="right"):
    """Circuit family of an atomic system with its matroid verdict."""
    return json.loads(_vonstaudt.build_matroid(_dump(atomic), unit))


def represent(atomic, solution):
    """Block-matrix representation built from a matrix solution."""
    return json.loads(_vonstaudt.represent(_dump(atomic), _dump(solution)))


def verify(rep, sweep="3", jobs=1, atomic=None):
    """Rank sweep, induced matroid and family membership of a representation."""
    return json.loads(
        _vonstaudt.verify(_dump(rep), sweep, jobs, None if atomic is None else _dump(atomic))
    )


def extract(rep, atomic):
    """Solution read back from a representation."""
    return json.loads(_vonstaudt.extract(_dump(rep), _dump(atomic)))


def weyl(p, jobs=1):
    """Weyl matrices over F_p(l, m), their rank sweep and round trip."""
    return json.loads(_vonstaudt.weyl(p, jobs))


def bs_search(field, dim, mode="exhaustive", count=1000, seed=0, jobs=1):
    """Search for matrix pairs with B A^2 B^-1 = A^3 and a nontrivial commutator word."""
    return json.loads(_vonstaudt.bs_search(field, dim, mode, count, seed, jobs))


def horn_reduce(horn):
    """Case systems of a Horn sentence, one per set of zero variables."""
    return json.loads(_vonstaudt.horn_reduce(_dump(horn)))


def rank(rows, field):
    """Exact rank of a matrix given as rows of entry strings."""
    return _vonstaudt.rank([[str(e) for e in r] for r in rows], field)


def lemma_block_rank(shape, m1, m2, m3, field):
    """(closed-form rank, direct rank) of block shape "i", "ii" or "iii"."""
    conv = lambda m: [[str(e) for e in r] for r in m]
    return _vonstaudt.lemma_block_rank(shape, conv(m1), conv(m2), conv(m3), field)


def trace_obstruction(c, field):
    """Whether c * 1 = 0 in the field."""
    return _vonstaudt.trace_obstruction(c, field)
