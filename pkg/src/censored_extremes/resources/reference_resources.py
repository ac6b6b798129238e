"""
Reference data resources
"""

import json

from ..models import FAMILIES, PRESETS


def register_reference_resources(mcp):
    """Register reference data resources"""

    @mcp.resource("censex://families")
    def get_families_resource() -> str:
        """
        Supported distribution families with their config-string syntax

        Use the syntax strings for the lifetime and censoring arguments.
        """
        families = [f.model_dump() for f in FAMILIES]
        return json.dumps({"families": families}, ensure_ascii=False, indent=2)

    @mcp.resource("censex://presets")
    def get_presets_resource() -> str:
        """Verification presets runnable with `censex verify --preset NAME`"""
        presets = [p.model_dump(exclude_none=True) for p in PRESETS.values()]
        return json.dumps({"presets": presets}, ensure_ascii=False, indent=2)
