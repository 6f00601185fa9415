"""Exact scalar fields: the rationals (via gmpy2.mpq) and prime fields F_p."""

from dataclasses import dataclass

from gmpy2 import is_prime, mpq

from .errors import InputError

MAX_MODULUS = 2**63 - 1


@dataclass(frozen=True)
class Field:
    """Either Q (``characteristic == 0``) or F_p.

    Elements of Q are ``gmpy2.mpq``; elements of F_p are plain ints in
    ``range(p)``.  All arithmetic helpers return normalized elements.
    """

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p < 0 or p == 1:
            raise InputError(f"invalid characteristic {p}")
        if p and (p > MAX_MODULUS or not is_prime(p)):
            raise InputError(f"modulus {p} is not a machine-word prime")

    @classmethod
    def Q(cls):
        return cls(0)

    @classmethod
    def Fp(cls, p):
        return cls(int(p))

    @property
    def is_rational(self):
        return self.characteristic == 0

    @property
    def zero(self):
        return mpq(0) if self.characteristic == 0 else 0

    @property
    def one(self):
        return mpq(1) if self.characteristic == 0 else 1

    def __str__(self):
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"

    def __call__(self, num, den=1):
        return self.convert(num, den)

    def convert(self, num, den=1):
        p = self.characteristic
        if p == 0:
            if den == 0:
                raise InputError("zero denominator")
            return mpq(num, den)
        if isinstance(num, type(mpq(0))) or isinstance(den, type(mpq(0))):
            q = mpq(num) / mpq(den)
            num, den = int(q.numerator), int(q.denominator)
        d = int(den) % p
        if d == 0:
            raise InputError(f"zero denominator ({den} ≡ 0 mod {p})")
        return int(num) * pow(d, -1, p) % p

    def norm(self, x):
        return x if self.characteristic == 0 else x % self.characteristic

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("division by zero in exact field")
        if self.characteristic == 0:
            return 1 / x
        return pow(x, -1, self.characteristic)

    def to_pair(self, x):
        """``(numerator, denominator)`` with a positive denominator."""
        if self.characteristic == 0:
            return int(x.numerator), int(x.denominator)
        return int(x) % self.characteristic, 1

    def descriptor(self):
        return "Q" if self.characteristic == 0 else {"Fp": self.characteristic}

    @classmethod
    def parse(cls, text):
        """Accept ``"Q"``, ``"Fp:7"``, ``"F7"`` or ``{"Fp": 7}``."""
        if isinstance(text, dict):
            if set(text) != {"Fp"}:
                raise InputError(f"bad field descriptor {text!r}")
            return cls.Fp(_as_int(text["Fp"]))
        if text in ("Q", "QQ"):
            return cls.Q()
        if isinstance(text, str):
            for prefix in ("Fp:", "GF:", "F"):
                if text.startswith(prefix):
                    return cls.Fp(_as_int(text[len(prefix):]))
        raise InputError(f"bad field descriptor {text!r}")


def _as_int(value):
    try:
        return int(value)
    except (TypeError, ValueError):
        raise InputError(f"not an integer: {value!r}") from None


QQ = Field.Q()
