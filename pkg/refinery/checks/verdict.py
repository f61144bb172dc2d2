# Copyright 2026 The Refinery Authors. All Rights Reserved.

import json
from collections import OrderedDict
from typing import Optional, Sequence


class Verdict(object):
    """ Outcome of a property check.

    Args:
        property (str): Property name, e.g. 'srp'.
        holds (bool):
        witness (dict, None): Re-checkable counterexample, required when holds is False.
        notes (Sequence[str]): Free-form remarks such as advisory flags.
    """

    def __init__(self, property: str, holds: bool, witness: Optional[dict] = None, notes: Sequence[str] = ()):
        if not holds and witness is None:
            raise ValueError(f"failing verdict for {property} needs a witness")
        self.property = property
        self.holds = bool(holds)
        self.witness = witness
        self.notes = list(notes)

    @classmethod
    def passed(cls, property, notes=()):
        return cls(property, True, None, notes)

    @classmethod
    def failed(cls, property, witness, notes=()):
        return cls(property, False, witness, notes)

    def renamed(self, property) -> "Verdict":
        return Verdict(property, self.holds, self.witness, self.notes)

    def to_json(self) -> OrderedDict:
        return OrderedDict([("property", self.property), ("holds", self.holds), ("witness", self.witness),
                            ("notes", list(self.notes))])

    def dumps(self, indent=None) -> str:
        return json.dumps(self.to_json(), ensure_ascii=False, indent=indent)

    def __bool__(self):
        return self.holds

    def __repr__(self):
        return f"Verdict({self.property}: {'holds' if self.holds else 'fails'})"
