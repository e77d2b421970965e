"""Resource guards.

Every potentially explosive computation checks a named limit before it
starts.  Guards may be lowered freely; raising one above its default is
only possible through an explicit unsafe flag (the CLI's --unsafe-guards).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GuardExceeded, InvalidInput

DEFAULT_GUARDS = {
    # coxeter
    "coxeter_enumeration": 2_000_000,   # |W| for enumeration-dependent calls
    "word_length": 64,                  # reduced length in general-matrix mode
    # cells
    "cell_elements": 5_000,             # |W x Omega| for cell computations
    # grouptheory
    "group_order": 100_000,             # permutation group enumeration
    "subgroup_group_order": 300,        # subgroup classification
    "character_table_order": 10_000,    # Dixon-Schneider
    "h2_mod2_order": 120,               # |H| for the mod-2 cohomology path
    "h2_general_order": 48,             # |H| for odd / prime-power moduli
    "h2_class_count": 4_096,            # number of enumerated H^2 classes
    # fusioncat
    "convolution_points": 64,           # |X| for K_G(X x X) structure constants
    "convolution_group_order": 300,
    "subring_basis": 20,
    "iso_basis": 40,
    "double_group_order": 1_000,
    "modcat_group_order": 150,
}


@dataclass
class Guards:
    """A guard table: defaults plus per-run overrides."""

    overrides: dict[str, int] = field(default_factory=dict)
    unsafe: bool = False

    def limit(self, name: str) -> int:
        if name not in DEFAULT_GUARDS:
            raise InvalidInput(f"unknown guard '{name}'")
        value = self.overrides.get(name, DEFAULT_GUARDS[name])
        if not self.unsafe:
            value = min(value, DEFAULT_GUARDS[name])
        return value

    def check(self, name: str, value: int) -> None:
        limit = self.limit(name)
        if value > limit:
            raise GuardExceeded(name, value, limit)

    def with_overrides(self, overrides: dict[str, int], unsafe: bool = False) -> "Guards":
        merged = dict(self.overrides)
        merged.update(overrides)
        return Guards(merged, unsafe or self.unsafe)


#: Shared default guard table (immutable by convention).
DEFAULT = Guards()
