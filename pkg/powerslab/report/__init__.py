"""
Result tables and their serialization.
"""

from ._table import (ReportTable, serialize, serialize_record,  # noqa
                     KINDS, PROVENANCES, FORMATS)
