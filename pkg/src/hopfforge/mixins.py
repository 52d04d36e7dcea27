from typing import Any, Optional, Type

from pydantic import BaseModel, ValidationError

from .enums.severity_enum import Severity_Enum
from .exceptions import DeserializationError
from .forge_logging import log_debug, log_error
from .utils.canonical_json import dumps, loads, read_json, write_json


class LoadableFileResource:
    """
    Mixin class for reading a file resource.
    The JSON payload is validated against MODEL and then converted to a domain
    object by ``from_model``.
    """

    MODEL: Optional[Type[BaseModel]] = None
    RESOURCE_NAME: str = ""

    @classmethod
    def from_model(cls, model: BaseModel, **context) -> Any:
        raise NotImplementedError

    @classmethod
    def _validate(cls, data: Any, origin: str, **context) -> Any:
        try:
            model = cls.MODEL.model_validate(data)
        except ValidationError as error:
            log_error(
                Severity_Enum.Error.value,
                f"Invalid {cls.RESOURCE_NAME} in {origin}: {error.error_count()} errors",
            )
            raise DeserializationError(
                f"Invalid {cls.RESOURCE_NAME} in {origin}: {error}"
            ) from error
        return cls.from_model(model, **context)

    @classmethod
    def load(cls, path: str, **context) -> Any:
        """
        Reads and converts a resource file.

        Args:
            path (str): The file to read.
            **context: Extra arguments forwarded to ``from_model``.

        Returns:
            Any: The domain object.
        """
        log_debug(Severity_Enum.Debug.value, f"Loading {cls.RESOURCE_NAME} from {path}")
        return cls._validate(read_json(path), path, **context)

    @classmethod
    def loads(cls, text: str, **context) -> Any:
        return cls._validate(loads(text), "<string>", **context)


class DumpableFileResource:
    """
    Mixin class for writing a file resource as canonical JSON.
    """

    MODEL: Optional[Type[BaseModel]] = None
    RESOURCE_NAME: str = ""

    @classmethod
    def to_model(cls, obj: Any) -> BaseModel:
        raise NotImplementedError

    @classmethod
    def serialize(cls, obj: Any) -> Any:
        return cls.to_model(obj).model_dump(mode="json", by_alias=True)

    @classmethod
    def dumps(cls, obj: Any) -> str:
        return dumps(cls.serialize(obj))

    @classmethod
    def dump(cls, obj: Any, path: str) -> str:
        log_debug(Severity_Enum.Debug.value, f"Writing {cls.RESOURCE_NAME} to {path}")
        return write_json(path, cls.serialize(obj))
