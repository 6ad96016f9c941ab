"""Registry of the ``verify`` suites: each runner maps resolved parameters to reports."""
from typing import Any, Callable, Dict, List

from ..alphabet import TreeSignature, parse_signature, parse_vector
from ..engel import (
    involution_check,
    left_engel_check,
    length_bound_check,
    local_checking_check,
    period_check,
    quotient_towers_check,
)
from ..finitewreath import WreathSpec, abelian_wreath_report, parse_wreath_spec, verify_engel_bound
from ..metrics import (
    VerificationReport,
    contraction_check,
    fractality_check,
    gamma3_section_check,
    max_orbit_check,
    order_check,
    regular_contraction_check,
    s_to_e_check,
    separation_check,
    transitivity_check,
    vanishing_commutator_check,
)
from ..metrics.branch import gamma3_base_level
from ..treeauto import label_set

Params = Dict[str, Any]
SuiteRunner = Callable[[Params], List[VerificationReport]]


def _sig(params: Params) -> TreeSignature:
    return parse_signature(params["sig"])


def run_order(params: Params) -> List[VerificationReport]:
    seed = params.get("seed") or 0
    return [order_check(_sig(params), params["depth"], params.get("level", 0), seed)]


def run_transitivity(params: Params) -> List[VerificationReport]:
    sig = _sig(params)
    return [transitivity_check(sig, n) for n in range(1, params["level"] + 1)]


def run_fractality(params: Params) -> List[VerificationReport]:
    return [fractality_check(_sig(params), params["level"], params["count"], params["seed"])]


def run_s_to_e(params: Params) -> List[VerificationReport]:
    return [
        s_to_e_check(
            _sig(params), params["level"], params["radius"], params["count"], params["seed"]
        )
    ]


def run_contraction(params: Params) -> List[VerificationReport]:
    return [
        contraction_check(
            _sig(params), params["level"], params["count"], params["seed"], params["cap"]
        )
    ]


def run_regular_contraction(params: Params) -> List[VerificationReport]:
    return [
        regular_contraction_check(
            _sig(params), params["radius"], params["count"], params["seed"], params["cap"]
        )
    ]


def run_separation(params: Params) -> List[VerificationReport]:
    return [
        separation_check(
            _sig(params),
            params["level"],
            params["t"],
            params["count"],
            params["seed"],
            params["cap"],
        )
    ]


def run_vanishing(params: Params) -> List[VerificationReport]:
    return [
        vanishing_commutator_check(
            _sig(params),
            params["level"],
            params["t"],
            params["depth"],
            params["count"],
            params["seed"],
            params["cap"],
        )
    ]


def run_max_orbit(params: Params) -> List[VerificationReport]:
    sig = _sig(params)
    return [
        max_orbit_check(sig, n, params["radius"], params["count"], params["seed"])
        for n in range(1, params["level"] + 1)
    ]


def _wreath_spec(params: Params) -> WreathSpec:
    """``--sig wreath:p=..,ranks=..`` directly, or ``C_p`` stacked ``depth`` times."""
    text = params["sig"]
    if text.strip().startswith("wreath:"):
        return parse_wreath_spec(text)
    return WreathSpec(parse_signature(text).p, (1,) * params["depth"])


def run_wreath_engel(params: Params) -> List[VerificationReport]:
    return [verify_engel_bound(_wreath_spec(params), params["cap"])]


def run_abelian_wreath(params: Params) -> List[VerificationReport]:
    sig = _sig(params)
    r = params.get("level", params["r"])
    return [
        abelian_wreath_report(
            sig.p, params["rank"], r, params["count"], params["seed"], params["cap"]
        )
    ]


def run_local_checking(params: Params) -> List[VerificationReport]:
    return [
        local_checking_check(
            _sig(params),
            params["depth"],
            params["iterations"],
            params["radius"],
            params["count"],
            params["seed"],
        )
    ]


def run_gamma3_sections(params: Params) -> List[VerificationReport]:
    sig = _sig(params)
    level = params["level"]
    f = f_prime = None
    if params.get("f") is not None or params.get("f_prime") is not None:
        rank = label_set(sig, gamma3_base_level(sig, level)).r
        f = parse_vector(params["f"], sig.p, rank) if params.get("f") else None
        f_prime = parse_vector(params["f_prime"], sig.p, rank) if params.get("f_prime") else None
    return [
        gamma3_section_check(
            sig, level, params["depth"], params["count"], params["seed"], f, f_prime
        )
    ]


def run_involution(params: Params) -> List[VerificationReport]:
    n = params.get("iterations", params["n"])
    return [
        involution_check(
            _sig(params), params["depth"], params["radius"], params["count"], params["seed"], n
        )
    ]


def run_left_engel(params: Params) -> List[VerificationReport]:
    return [
        left_engel_check(
            _sig(params),
            params["radius"],
            params["limit"],
            params["depth"],
            params["count"],
            params["seed"],
            params["budget"],
        )
    ]


def run_quotient_towers(params: Params) -> List[VerificationReport]:
    return [
        quotient_towers_check(
            _sig(params),
            params["depth"],
            params["radius"],
            params["limit"],
            params["count"],
            params["seed"],
            params["cap"],
        )
    ]


def run_length_bound(params: Params) -> List[VerificationReport]:
    n = params.get("iterations", params["n"])
    return [
        length_bound_check(_sig(params), params["count"], params["seed"], n, params["radius"])
    ]


def run_periodicity(params: Params) -> List[VerificationReport]:
    return [
        period_check(
            _sig(params),
            params["depth"],
            params["radius"],
            params["count"],
            params["seed"],
            params["cap"],
        )
    ]


# Please keep the choices of ``verify`` (and SAMPLED_SUITES) in sync with this dict
SUITES: Dict[str, SuiteRunner] = {
    "order": run_order,
    "transitivity": run_transitivity,
    "fractality": run_fractality,
    "s-to-e": run_s_to_e,
    "contraction": run_contraction,
    "regular-contraction": run_regular_contraction,
    "separation": run_separation,
    "vanishing": run_vanishing,
    "max-orbit": run_max_orbit,
    "wreath-engel": run_wreath_engel,
    "abelian-wreath": run_abelian_wreath,
    "local-checking": run_local_checking,
    "gamma3-sections": run_gamma3_sections,
    "involution": run_involution,
    "left-engel": run_left_engel,
    "quotient-towers": run_quotient_towers,
    "length-bound": run_length_bound,
    "periodicity": run_periodicity,
}
