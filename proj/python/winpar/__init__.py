# Copyright 2026 The winpar authors
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

"""Window parity and parity-response games on finite arenas.

Thin wrapper around the ``_winpar`` extension; see its docstrings for
the operation signatures.
"""

from _winpar import (  # noqa: F401
    Arena,
    check_lasso,
    cross_check,
    export_dot,
    gallery,
    make_arena,
    parse_game,
    random_arena,
    solve,
    synthesize,
    validate,
    verify,
    write_game,
)

__all__ = [
    "Arena",
    "check_lasso",
    "cross_check",
    "export_dot",
    "gallery",
    "make_arena",
    "parse_game",
    "random_arena",
    "solve",
    "synthesize",
    "validate",
    "verify",
    "write_game",
]
