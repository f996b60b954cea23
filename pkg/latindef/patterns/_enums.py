from enum import Enum


class PatternKind(Enum):
    THREE_IN_LINE = "ThreeInLine"
    RECTANGLE = "Rectangle"
    LEMMA3_CHAIN = "Lemma3Chain"
    CONFIG2 = "Config2"


class Orientation(Enum):
    ROW_FORM = "row-form"
    TRANSPOSED = "transposed"
