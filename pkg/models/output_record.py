"""
Data model for one line of sieve or classify output.
"""

from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Mapping

from models.position_class import PositionClass

CSV_FIELDS = ['x', 'grundy', 'class', 'z1', 'z2']


@dataclass(frozen=True)
class OutputRecord:
    """Position, Grundy value, class tag and the two smallest Zeckendorf indices."""
    x: int
    grundy: int
    position_class: PositionClass
    z1: int = 0
    z2: int = 0

    def __post_init__(self):
        if self.grundy != self.position_class.grundy:
            raise ValueError(
                f"Record for {self.x}: grundy {self.grundy} inconsistent with class {self.position_class.value}"
            )

    def to_row(self) -> List[str]:
        return [str(self.x), str(self.grundy), self.position_class.value, str(self.z1), str(self.z2)]

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data['class'] = data.pop('position_class').value
        return {name: data[name] for name in CSV_FIELDS}

    @classmethod
    def from_mapping(cls, data: Mapping[str, Any]) -> 'OutputRecord':
        """Create an OutputRecord from a parsed CSV row or JSON object."""
        return cls(
            x=int(data['x']),
            grundy=int(data['grundy']),
            position_class=PositionClass(data['class']),
            z1=int(data.get('z1', 0)),
            z2=int(data.get('z2', 0)),
        )
