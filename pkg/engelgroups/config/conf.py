from importlib import resources
from typing import Any, Dict, Optional

import yaml

from .. import config


class _RunDefaults:
    def __init__(self, resource: Optional[str] = None):
        """Prepare to read the packaged defaults yaml file"""
        self._yaml_dict = {}
        self.resource = resource or "defaults.yml"

    @property
    def yaml_dict(self) -> Dict[str, Any]:
        """Read data from disk once"""
        if self._yaml_dict:
            return self._yaml_dict

        with resources.files(config).joinpath(self.resource).open("r") as fid:
            self._yaml_dict = yaml.load(fid, Loader=yaml.SafeLoader)

        return self._yaml_dict

    def get(self, section: str, key: str) -> Any:
        """Return ``section.key`` from the defaults file."""
        try:
            return self.yaml_dict[section][key]
        except KeyError:
            raise KeyError(f"No default named '{section}.{key}'") from None

    def suite(self, name: str) -> Dict[str, Any]:
        """Scale defaults of a CLI suite (empty mapping if the suite has none)."""
        return dict(self.yaml_dict["suites"].get(name) or {})
