"""Line-oriented text format for Ising-gate pulse programs.

A program file holds a version header, the time-unit declaration, a
nominal-coupling placeholder and then one element per line in time order::

    version = 1
    t = 1/4J
    J = nominal
    delay multiple = 1
    pulse spin = S angle_deg = 97.18075578229403 phase_deg = 270.0
    ...

Delays are integer multiples of the unit time t = 1/4J (a quarter turn of
coupling evolution each); pulses carry the spin label, rotation angle and
axis phase in degrees.  Floats are written in shortest round-trip decimal
form, so loading a saved program reproduces the element list and therefore
the simulated gate bit-for-bit.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterable

import numpy as np

from .ising import ANGLE_PER_UNIT_TIME, IsingDelay, IsingElement, SpinPulse

FORMAT_VERSION = 1
UNIT_DECLARATION = "t = 1/4J"

_FIELD = re.compile(r"(\w+) = (\S+)")


class ProgramFormatError(ValueError):
    """A pulse-program file or element list violates the format."""


def format_program(elements: Iterable[IsingElement], j_value: str = "nominal") -> str:
    """Render elements as program text; delays must be commensurate with t = 1/4J."""
    lines = [f"version = {FORMAT_VERSION}", UNIT_DECLARATION, f"J = {j_value}"]
    for element in elements:
        if isinstance(element, IsingDelay):
            multiple = element.time_multiple
            if multiple is None:
                raise ProgramFormatError(
                    f"delay of angle {element.angle!r} is not an integer multiple of t = 1/4J"
                )
            lines.append(f"delay multiple = {multiple}")
        elif isinstance(element, SpinPulse):
            angle_deg = float(np.degrees(element.angle))
            phase_deg = float(np.degrees(element.phase))
            lines.append(
                f"pulse spin = {element.spin} angle_deg = {angle_deg!r} phase_deg = {phase_deg!r}"
            )
        else:
            raise ProgramFormatError(f"unknown element type {type(element).__name__}")
    return "\n".join(lines) + "\n"


def parse_program(text: str) -> list[IsingElement]:
    """Parse program text back into the element list, validating the header."""
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if len(lines) < 3:
        raise ProgramFormatError("truncated program: missing header")
    fields = dict(_FIELD.findall(lines[0]))
    if lines[0].split()[0] != "version" or "version" not in fields:
        raise ProgramFormatError(f"expected a version header, got {lines[0]!r}")
    if int(fields["version"]) != FORMAT_VERSION:
        raise ProgramFormatError(f"unsupported format version {fields['version']}")
    if lines[1] != UNIT_DECLARATION:
        raise ProgramFormatError(f"expected unit declaration {UNIT_DECLARATION!r}, got {lines[1]!r}")
    if lines[2].split()[0] != "J":
        raise ProgramFormatError(f"expected the nominal-J line, got {lines[2]!r}")

    elements: list[IsingElement] = []
    for line in lines[3:]:
        kind = line.split()[0]
        fields = dict(_FIELD.findall(line))
        if kind == "delay":
            multiple = int(fields["multiple"])
            if multiple < 0:
                raise ProgramFormatError(f"negative delay multiple in {line!r}")
            elements.append(IsingDelay(multiple * ANGLE_PER_UNIT_TIME))
        elif kind == "pulse":
            elements.append(SpinPulse(
                spin=fields["spin"],
                angle=float(np.radians(float(fields["angle_deg"]))),
                phase=float(np.radians(float(fields["phase_deg"]))),
            ))
        else:
            raise ProgramFormatError(f"unknown element line {line!r}")
    return elements


def save_program(elements: Iterable[IsingElement], path, j_value: str = "nominal") -> None:
    Path(path).write_text(format_program(elements, j_value), encoding="utf-8")


def load_program(path) -> list[IsingElement]:
    return parse_program(Path(path).read_text(encoding="utf-8"))
