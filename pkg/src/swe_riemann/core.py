"""Domain types and validation shared by every module."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Any

from .errors import InvalidProblem, NonPositiveGravity, NonPositiveHeight, PorosityOutOfRange

DEFAULT_G = 9.81
# heights at or below this are treated as dry and rejected
DRY_TOLERANCE = 1e-12


@dataclass(frozen=True)
class HydraulicState:
    """Water height ``h`` [m] and velocity ``u`` [m/s] on one side."""

    h: float
    u: float

    def to_dict(self) -> dict[str, float]:
        return {"h": self.h, "u": self.u}


@dataclass(frozen=True)
class TerrainSide:
    """Porosity ``theta`` and bed elevation ``z`` [m] on one side."""

    theta: float = 1.0
    z: float = 0.0

    def to_dict(self) -> dict[str, float]:
        return {"theta": self.theta, "z": self.z}


@dataclass(frozen=True)
class RiemannProblem:
    left: HydraulicState
    right: HydraulicState
    terrain_left: TerrainSide = TerrainSide()
    terrain_right: TerrainSide = TerrainSide()
    g: float = DEFAULT_G

    @property
    def theta_ratio(self) -> float:
        return self.terrain_right.theta / self.terrain_left.theta

    @property
    def dz(self) -> float:
        """Bed step ``z_R - z_L`` [m]."""
        return self.terrain_right.z - self.terrain_left.z

    @property
    def constant_terrain(self) -> bool:
        return self.terrain_left == self.terrain_right

    @property
    def h_max(self) -> float:
        """Right height at which the free surface is flat: ``h_L + z_L - z_R``."""
        return self.left.h - self.dz

    def with_right_height(self, h_r: float) -> RiemannProblem:
        return RiemannProblem(
            self.left,
            HydraulicState(h_r, self.right.u),
            self.terrain_left,
            self.terrain_right,
            self.g,
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "g": self.g,
            "left": {**self.left.to_dict(), **self.terrain_left.to_dict()},
            "right": {**self.right.to_dict(), **self.terrain_right.to_dict()},
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any], g: float | None = None) -> RiemannProblem:
        """Build a problem from the JSON problem-file layout.

        ``g`` overrides the file's value when given. Missing ``theta``/``z``
        default to 1 and 0.
        """
        sides = []
        for name in ("left", "right"):
            side = data.get(name)
            if not isinstance(side, dict):
                raise InvalidProblem(f"missing or malformed side {name!r}", name)
            try:
                h = float(side["h"])
                u = float(side["u"])
                theta = float(side.get("theta", 1.0))
                z = float(side.get("z", 0.0))
            except KeyError as exc:
                raise InvalidProblem(f"missing field {name}.{exc.args[0]}", f"{name}.{exc.args[0]}") from None
            except (TypeError, ValueError) as exc:
                raise InvalidProblem(f"bad value in {name}: {exc}", name) from None
            sides.append((HydraulicState(h, u), TerrainSide(theta, z)))
        if g is None:
            g = float(data.get("g", DEFAULT_G))
        return cls(sides[0][0], sides[1][0], sides[0][1], sides[1][1], g)


class WaveKind(str, enum.Enum):
    RAREFACTION1 = "Rarefaction1"
    SHOCK1 = "Shock1"
    TERRAIN_CONTACT = "TerrainContact"
    RAREFACTION2 = "Rarefaction2"
    SHOCK2 = "Shock2"

    @property
    def family(self) -> int:
        return {"Rarefaction1": 1, "Shock1": 1, "Rarefaction2": 2, "Shock2": 2}.get(self.value, 0)

    @property
    def is_fan(self) -> bool:
        return self in (WaveKind.RAREFACTION1, WaveKind.RAREFACTION2)


class StructureType(str, enum.Enum):
    CONSTANT_TERRAIN = "ConstantTerrain"
    TYPE_I = "TypeI"
    TYPE_II = "TypeII"
    TYPE_III = "TypeIII"


@dataclass(frozen=True)
class ElementaryWave:
    """One wave of a composite solution.

    ``speed_range`` is ``(left edge, right edge)`` in x/t; the two are equal
    for shocks and zero for the terrain contact.
    """

    kind: WaveKind
    speed_range: tuple[float, float]
    upstream: HydraulicState
    downstream: HydraulicState

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "speed_range": list(self.speed_range),
            "upstream": self.upstream.to_dict(),
            "downstream": self.downstream.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> ElementaryWave:
        return cls(
            WaveKind(d["kind"]),
            (float(d["speed_range"][0]), float(d["speed_range"][1])),
            HydraulicState(**d["upstream"]),
            HydraulicState(**d["downstream"]),
        )


@dataclass(frozen=True)
class WaveStructure:
    """Ordered waves and the constant states between them.

    ``states[i]`` sits left of ``waves[i]``; ``len(states) == len(waves) + 1``.
    """

    waves: tuple[ElementaryWave, ...]
    states: tuple[HydraulicState, ...]
    type_label: StructureType
    diagnostics: dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def contact_index(self) -> int | None:
        for i, w in enumerate(self.waves):
            if w.kind is WaveKind.TERRAIN_CONTACT:
                return i
        return None

    def to_dict(self) -> dict[str, Any]:
        return {
            "type": self.type_label.value,
            "waves": [w.to_dict() for w in self.waves],
            "states": [s.to_dict() for s in self.states],
            "diagnostics": self.diagnostics,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> WaveStructure:
        return cls(
            tuple(ElementaryWave.from_dict(w) for w in d["waves"]),
            tuple(HydraulicState(**s) for s in d["states"]),
            StructureType(d["type"]),
            dict(d.get("diagnostics", {})),
        )


def validate_problem(p: RiemannProblem, allow_any_porosity: bool = False) -> RiemannProblem:
    """Check the problem's invariants and return it unchanged.

    Porosity is restricted to ``(0, 1]`` unless ``allow_any_porosity`` is set,
    in which case any positive value passes.
    """
    if not (math.isfinite(p.g) and p.g > 0.0):
        raise NonPositiveGravity(f"g must be positive, got {p.g}", "g")
    for name, state, terrain in (
        ("left", p.left, p.terrain_left),
        ("right", p.right, p.terrain_right),
    ):
        if not (math.isfinite(state.h) and state.h > DRY_TOLERANCE):
            raise NonPositiveHeight(f"{name}.h must be > {DRY_TOLERANCE}, got {state.h}", f"{name}.h")
        if not math.isfinite(state.u):
            raise InvalidProblem(f"{name}.u must be finite, got {state.u}", f"{name}.u")
        th = terrain.theta
        upper_ok = allow_any_porosity or th <= 1.0
        if not (math.isfinite(th) and th > 0.0 and upper_ok):
            raise PorosityOutOfRange(f"{name}.theta must lie in (0, 1], got {th}", f"{name}.theta")
        if not math.isfinite(terrain.z):
            raise InvalidProblem(f"{name}.z must be finite, got {terrain.z}", f"{name}.z")
    return p


def check_height(h: float, name: str = "h") -> None:
    if not (h > DRY_TOLERANCE and math.isfinite(h)):
        raise NonPositiveHeight(f"{name} must be positive, got {h}", name)


def froude_squared(s: HydraulicState, g: float = DEFAULT_G) -> float:
    """``u**2 / (g h)``."""
    check_height(s.h)
    return s.u * s.u / (g * s.h)
