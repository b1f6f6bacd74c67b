class Location:
    def __init__(self, stream_name: str, line: int, column: int):
        """
        Construct Location object
        :param stream_name: Stream name
        :param line: Line number (1-based)
        :param column: Column number (1-based)
        """
        self.stream_name = stream_name
        self.line = line
        self.column = column

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Location):
            return NotImplemented
        return (self.stream_name, self.line, self.column) == (other.stream_name, other.line, other.column)

    def __hash__(self) -> int:
        return hash((self.stream_name, self.line, self.column))

    def __str__(self) -> str:
        """Overridden string representation"""
        return f"{self.stream_name}:{self.line}:{self.column}"
