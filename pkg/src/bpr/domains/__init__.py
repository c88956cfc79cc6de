"""Simulated evaluation domains, selectable by name."""

from typing import Any, Dict, Type

from ..exceptions import ConfigError, UnknownNameError
from ..records import SignalKind
from .base import Domain, EpisodeBatch
from .golf import BIN_EDGES, BIN_LABELS, CLUBS, Club, GolfDomain, error_bin, folded_normal_mean
from .surveillance import SurveillanceDomain, SurveillanceMap, generate_surveillance_map
from .telephone import CallState, TelephoneDomain, success_probability

DOMAINS: Dict[str, Type[Domain]] = {
    GolfDomain.name: GolfDomain,
    TelephoneDomain.name: TelephoneDomain,
    SurveillanceDomain.name: SurveillanceDomain,
}


def build_domain(name: str, signal_kind: SignalKind | str | None = None, **options: Any) -> Domain:
    """
    Instantiate a domain by name.

    Args:
        name: "golf", "telephone" or "surveillance"
        signal_kind: Signal kind (domain default if omitted)
        **options: Domain constructor options

    Returns:
        Domain instance

    Raises:
        UnknownNameError: If the domain or signal kind is unknown
        ConfigError: If the domain cannot emit the signal kind or an option is unknown
    """
    cls = DOMAINS.get(name)
    if cls is None:
        raise UnknownNameError("domain", name, sorted(DOMAINS))
    if signal_kind is not None:
        try:
            options["signal_kind"] = SignalKind(signal_kind)
        except ValueError:
            raise UnknownNameError(
                "signal kind", str(signal_kind), [k.value for k in SignalKind]
            )
    try:
        return cls(**options)
    except TypeError as e:
        raise ConfigError(f"domain.options of {name}", str(e)) from e


__all__ = [
    "BIN_EDGES",
    "BIN_LABELS",
    "CLUBS",
    "DOMAINS",
    "CallState",
    "Club",
    "Domain",
    "EpisodeBatch",
    "GolfDomain",
    "SurveillanceDomain",
    "SurveillanceMap",
    "TelephoneDomain",
    "build_domain",
    "error_bin",
    "folded_normal_mean",
    "generate_surveillance_map",
    "success_probability",
]
