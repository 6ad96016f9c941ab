from typing import Dict

from typing_extensions import Literal

try:
    from _engelgroups_version import version as ENGELGROUPS_VERSION
except ImportError:  # source checkout without a build
    ENGELGROUPS_VERSION = "unknown"

ProcessType = Literal["verification", "experiment"]


def engelgroups_prov_attrs(process_type: ProcessType) -> Dict[str, str]:
    """
    Standard engelgroups software attributes for report provenance.

    No timestamp is recorded: two runs with the same configuration and seed
    produce byte-identical reports.

    Parameters
    ----------
    process_type : ProcessType
        Kind of run producing the report
    """
    return {
        f"{process_type}_software_name": "engelgroups",
        f"{process_type}_software_version": ENGELGROUPS_VERSION,
    }
