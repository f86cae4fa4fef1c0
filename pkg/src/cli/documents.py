"""JSON documents emitted by the command-line interface."""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class ChecksDocument(BaseModel):
    """Structure checks of a word list."""

    gray: bool
    homogeneous: bool
    suffix_partitioned: bool
    rt_partitioned: bool
    first_violation: Optional[int] = None


class GreedyDocument(BaseModel):
    """Result of one greedy run."""

    language: str
    start: str
    move_order: str
    words: List[str]
    count: int
    exhausted: bool
    last_word: str
    predicted_last_word: Optional[str] = Field(
        default=None,
        description="Closed-form prediction, when one exists for the language"
    )
    checks: ChecksDocument


class GensDocument(BaseModel):
    """Generator set of a language."""

    language: str
    method: str
    move_order: str
    words: List[str]
    count: int
    closed: Optional[List[str]] = None
    agree: Optional[bool] = None
    expected_count: Optional[int] = None


class VerifyDocument(BaseModel):
    """Requested checks on a word list read from a file or stdin."""

    count: int
    results: Dict[str, bool]
    first_violation: Optional[int] = None
