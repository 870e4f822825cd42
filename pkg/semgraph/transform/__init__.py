"""Scale transformations: type coarsening and one-mode projection."""

from semgraph.transform.merge import TransformError, TypeMergeMap  # noqa: F401
from semgraph.transform.coarsen import ORIGINAL_TYPE, coarsen  # noqa: F401
from semgraph.transform.projection import (  # noqa: F401
    SHARED_COUNT,
    SHARED_VIA,
    one_mode_projection,
    projection_link_type,
)
