"""
gf_catalog — именованные производящие функции трёх классов и их подклассов.

Публичный API:
- CATALOG, get_entry, resolve_entries
- evaluate, coefficients, check_identities, export_bfile, bfile_lines
- entry_metadata, count_frame, verify_against_oracle
"""

from permbox.twobyfour.gf_catalog.contracts import (
    CatalogEntry,
    IdentityCheck,
    IdentityReport,
    VerifyReport,
    VerifyRow,
)
from permbox.twobyfour.gf_catalog.identities import IDENTITIES, Identity
from permbox.twobyfour.gf_catalog.operations import (
    bfile_lines,
    check_identities,
    coefficients,
    count_frame,
    entry_metadata,
    evaluate,
    export_bfile,
    oracle_query,
    verify_against_oracle,
)
from permbox.twobyfour.gf_catalog.registry import CATALOG, get_entry, resolve_entries

__all__ = [
    "CatalogEntry",
    "IdentityCheck",
    "IdentityReport",
    "VerifyRow",
    "VerifyReport",
    "Identity",
    "IDENTITIES",
    "CATALOG",
    "get_entry",
    "resolve_entries",
    "evaluate",
    "coefficients",
    "check_identities",
    "export_bfile",
    "bfile_lines",
    "entry_metadata",
    "count_frame",
    "oracle_query",
    "verify_against_oracle",
]
