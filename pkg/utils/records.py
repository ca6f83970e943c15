"""
CSV and JSON serialisation of output records.
"""

import csv
import json
from typing import Iterable, List, TextIO

from models.output_record import CSV_FIELDS, OutputRecord

FORMATS = ('csv', 'json')


def write_records(records: Iterable[OutputRecord], fmt: str, stream: TextIO) -> int:
    """Write records as CSV (header row, LF endings) or a JSON array; returns the count."""
    if fmt not in FORMATS:
        raise ValueError(f"Unknown format {fmt!r}")
    written = 0
    if fmt == 'csv':
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(CSV_FIELDS)
        for record in records:
            writer.writerow(record.to_row())
            written += 1
        return written

    stream.write('[')
    for record in records:
        stream.write(',\n' if written else '\n')
        stream.write(json.dumps(record.to_dict()))
        written += 1
    stream.write('\n]\n' if written else ']\n')
    return written


def read_records(stream: TextIO, fmt: str) -> List[OutputRecord]:
    """Parse a file produced by write_records."""
    if fmt == 'csv':
        return [OutputRecord.from_mapping(row) for row in csv.DictReader(stream)]
    if fmt == 'json':
        return [OutputRecord.from_mapping(item) for item in json.load(stream)]
    raise ValueError(f"Unknown format {fmt!r}")
