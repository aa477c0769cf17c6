"""wittlab: exact computational algebra for truncated Witt vectors,
cyclic Dieudonne modules and finite Hopf algebras over finite fields."""

__version__ = "0.1.0"
