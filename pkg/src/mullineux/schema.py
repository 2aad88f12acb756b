"""Published contract for the JSON documents the CLI emits.

Every document carries schema_version and a command echo; sweep documents
add checked/status/counterexamples (and depth_exceeded where the recursion
is involved), single computations put their values under results.  Field
order is fixed by construction and documents contain no wall-clock data
unless timing was requested, so equal inputs give byte-identical output.
"""

SCHEMA_VERSION = 1

DOCUMENT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "command": {
            "enum": ["mull", "verify-conjecture", "cross-validate", "psi", "crystal-export"]
        },
        "parameters": {"type": "object"},
        "results": {"type": "object"},
        "checked": {"type": "integer", "minimum": 0},
        "status": {"enum": ["verified", "counterexample"]},
        "depth_exceeded": {"type": "integer", "minimum": 0},
        "counterexamples": {"type": "array", "items": {"type": "object"}},
        "timing": {
            "type": "object",
            "properties": {
                "total_seconds": {"type": "number"},
                "buckets": {"type": "object"},
            },
            "additionalProperties": False,
        },
        "error": {"type": "string"},
        "counterexample": {"type": ["object", "null"]},
    },
    "required": ["schema_version", "command", "parameters"],
    "additionalProperties": False,
}
