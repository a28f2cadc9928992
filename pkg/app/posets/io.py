"""
JSON reading and writing of posets and digraphs.
"""

from pathlib import Path
from typing import Type, TypeVar, Union

import pydantic
from loguru import logger

from app.core.exceptions import DocumentError
from app.models.documents import DigraphDocument, PosetDocument
from app.posets.operations import transitive_reduction
from app.posets.poset import ClosurePolicy, Digraph, Poset, build_poset

PathLike = Union[str, Path]
DocumentT = TypeVar("DocumentT", bound=pydantic.BaseModel)


def load_document(path: PathLike, model: Type[DocumentT]) -> DocumentT:
    """Parse a JSON file into ``model``, raising DocumentError on bad content."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    try:
        return model.model_validate_json(text)
    except pydantic.ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or "document"
        raise DocumentError(
            f"{path}: {location}: {first['msg']}",
            path=str(path),
            details={"errors": e.error_count()},
        ) from e


def poset_from_document(
    doc: PosetDocument, closure: ClosurePolicy = ClosurePolicy.TAKE
) -> Poset:
    # Cover-pair documents are closed regardless of the requested policy
    policy = ClosurePolicy.TAKE if not doc.closed else ClosurePolicy(closure)
    return build_poset(doc.n, doc.relations, closure=policy)


def read_poset(path: PathLike, require_closed: bool = False) -> Poset:
    """Read a poset file, taking the transitive closure unless ``require_closed``."""
    doc = load_document(path, PosetDocument)
    closure = ClosurePolicy.REQUIRE if require_closed else ClosurePolicy.TAKE
    return poset_from_document(doc, closure)


def poset_to_document(P: Poset) -> PosetDocument:
    return PosetDocument(n=P.n, relations=transitive_reduction(P), closed=False)


def write_poset(P: Poset, path: PathLike) -> Path:
    """Write the cover pairs of ``P`` with a ``"closed": false`` marker."""
    path = Path(path)
    path.write_text(poset_to_document(P).model_dump_json() + "\n", encoding="utf-8")
    logger.debug("Wrote {}-element poset to {}", P.n, path)
    return path


def read_digraph(path: PathLike) -> Digraph:
    doc = load_document(path, DigraphDocument)
    return Digraph.from_edges(doc.n, doc.edges)
