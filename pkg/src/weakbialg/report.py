"""Axiom-check reports.

A report is an ordered list of named checks.  A failed check carries one
witness: the basis-index tuple where the two sides differ plus both sides as
sparse vectors.
"""

from dataclasses import dataclass, field as dc_field


@dataclass
class Witness:
    indices: tuple
    lhs: dict
    rhs: dict
    note: str = ""

    def to_json(self, fld):
        def enc(vec):
            return [[i, *fld.to_pair(x)] for i, x in sorted(vec.items())]
        out = {"indices": list(self.indices), "lhs": enc(self.lhs), "rhs": enc(self.rhs)}
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class Check:
    name: str
    passed: bool
    witness: Witness = None
    detail: str = ""


@dataclass
class Report:
    subject: str
    field: object = None
    checks: list = dc_field(default_factory=list)
    data: dict = dc_field(default_factory=dict)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.passed

    def add(self, name, passed, witness=None, detail=""):
        self.checks.append(Check(name, bool(passed), witness, detail))
        return passed

    def extend(self, other, prefix=""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witness, c.detail))
        return other.passed

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self):
        return [c.name for c in self.checks]

    def equal(self, name, lhs, rhs, index_shape=None, detail=""):
        """Record whether two parallel maps agree; on failure attach the first
        differing basis column, decoded into a multi-index via ``index_shape``."""
        lm, rm = _mat(lhs), _mat(rhs)
        if lm == rm:
            return self.add(name, True, detail=detail)
        j = first_difference(lm, rm)
        idx = unflatten(j, index_shape) if index_shape else (j,)
        w = Witness(idx, lm.column_dict(j), rm.column_dict(j))
        return self.add(name, False, w, detail)

    def summary(self):
        lines = [f"{self.subject}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            line = f"  [{mark}] {c.name}"
            if c.detail:
                line += f" ({c.detail})"
            if c.witness is not None:
                line += f" witness={c.witness.indices}"
            lines.append(line)
        return "\n".join(lines)

    def to_json(self):
        out = []
        for c in self.checks:
            d = {"name": c.name, "passed": c.passed}
            if c.detail:
                d["detail"] = c.detail
            if c.witness is not None:
                d["witness"] = c.witness.to_json(self.field)
            out.append(d)
        return out


def _mat(x):
    return getattr(x, "mat", x)


def first_difference(a, b):
    """Smallest column index where two same-shape matrices differ."""
    cols = set(a.T.rows) | set(b.T.rows)
    for j in sorted(cols):
        if a.T.rows.get(j, {}) != b.T.rows.get(j, {}):
            return j
    raise ValueError("matrices are equal")


def unflatten(j, shape):
    idx = []
    for d in reversed(shape):
        idx.append(j % d)
        j //= d
    return tuple(reversed(idx))
