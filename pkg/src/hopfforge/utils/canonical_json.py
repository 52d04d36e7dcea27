import json
from typing import Any

from ..exceptions import DeserializationError


def dumps(data: Any) -> str:
    """Sorted keys, compact separators and a trailing newline."""
    return json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise DeserializationError(f"Malformed JSON: {error}") from error


def read_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as error:
        raise DeserializationError(f"Cannot read {path}: {error}") from error
    return loads(text)


def write_json(path: str, data: Any) -> str:
    text = dumps(data)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)
    return text
