"""Substitutions on finite alphabets, incidence matrices and word combinatorics.

Letters are short strings, words are tuples of letters.  Substitution images
are applied by concatenation; counting questions (length of sigma^n(letter),
weighted lengths) are answered through big-integer incidence-matrix powers so
that they stay exact for arbitrary n.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

Word = tuple[str, ...]


def as_word(letters: Iterable[str]) -> Word:
    return tuple(letters)


class Substitution:
    """A morphism letter -> word, possibly between two different alphabets."""

    def __init__(self, images: Mapping[str, Sequence[str]]):
        self.images: dict[str, Word] = {k: tuple(v) for k, v in images.items()}
        self.alphabet: tuple[str, ...] = tuple(self.images)
        target: list[str] = []
        for w in self.images.values():
            for letter in w:
                if letter not in target:
                    target.append(letter)
        self.target_alphabet: tuple[str, ...] = tuple(target)

    @property
    def is_endomorphism(self) -> bool:
        return set(self.target_alphabet) <= set(self.alphabet)

    def __call__(self, word: Iterable[str]) -> Word:
        out: list[str] = []
        for letter in word:
            out.extend(self.images[letter])
        return tuple(out)

    def apply_power(self, word: Iterable[str], n: int) -> Word:
        w = tuple(word)
        for _ in range(n):
            w = self(w)
        return w

    def reversed(self) -> Substitution:
        """The morphism with every image word reversed (letter counts unchanged)."""
        return Substitution({k: v[::-1] for k, v in self.images.items()})

    def compose(self, other: Substitution) -> Substitution:
        """self after other: letter -> self(other(letter))."""
        return Substitution({k: self(v) for k, v in other.images.items()})

    def max_image_length(self) -> int:
        return max(len(v) for v in self.images.values())

    # -- exact counting ------------------------------------------------------

    def incidence_matrix(self) -> list[list[int]]:
        """M[i][j] = number of occurrences of letter i in the image of letter j.

        Rows and columns are both indexed by self.alphabet, which therefore
        must contain every letter appearing in an image.
        """
        if not set(self.target_alphabet) <= set(self.alphabet):
            raise ValueError("incidence matrix requires an endomorphism")
        index = {letter: i for i, letter in enumerate(self.alphabet)}
        k = len(self.alphabet)
        m = [[0] * k for _ in range(k)]
        for j, letter in enumerate(self.alphabet):
            for occurring in self.images[letter]:
                m[index[occurring]][j] += 1
        return m

    def letter_counts(self, word: Iterable[str], n: int) -> dict[str, int]:
        """Occurrences of each letter in sigma^n(word), via matrix powers."""
        index = {letter: i for i, letter in enumerate(self.alphabet)}
        vec = [0] * len(self.alphabet)
        for letter in word:
            vec[index[letter]] += 1
        m = _mat_pow(self.incidence_matrix(), n)
        out = [sum(m[i][j] * vec[j] for j in range(len(vec))) for i in range(len(vec))]
        return {letter: out[i] for letter, i in index.items()}

    def word_length(self, word: Iterable[str], n: int) -> int:
        return sum(self.letter_counts(word, n).values())

    def weighted_length(self, word: Iterable[str], n: int, tau: Mapping[str, int]) -> int:
        counts = self.letter_counts(word, n)
        return sum(tau[letter] * c for letter, c in counts.items())


def _mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    k = len(a)
    return [
        [sum(a[i][t] * b[t][j] for t in range(k)) for j in range(k)]
        for i in range(k)
    ]


def _mat_pow(m: list[list[int]], n: int) -> list[list[int]]:
    k = len(m)
    result = [[int(i == j) for j in range(k)] for i in range(k)]
    base = m
    while n > 0:
        if n & 1:
            result = _mat_mul(result, base)
        base = _mat_mul(base, base)
        n >>= 1
    return result


# -- Thue-Morse connection ---------------------------------------------------

TM_SUB = Substitution({"0": "01", "1": "10"})
RUNLEN_SUB = Substitution({"0": "010", "1": "01110"})

# the two-letter substitution induced on the golden-mean inducing domain, and
# the block morphism carrying the run-length fixed point onto its fixed point
GOLDEN_SUB = Substitution({"0": "0", "1": "101101"})
BLOCK_MORPHISM = Substitution({"0": "10", "1": "110"})


def thue_morse_word(min_length: int) -> Word:
    """Prefix of the Thue-Morse fixed point (starting with 0) of at least min_length letters."""
    w: Word = ("0",)
    while len(w) < min_length:
        w = TM_SUB(w)
    return w


def run_lengths(word: Sequence[str]) -> list[int]:
    out: list[int] = []
    last: str | None = None
    for letter in word:
        if letter == last:
            out[-1] += 1
        else:
            out.append(1)
            last = letter
    return out


def thue_morse_check(n: int) -> bool:
    """Check over n letters that the Thue-Morse run lengths, each reduced by 1,
    form the fixed point of 0 -> 010, 1 -> 01110, and that the block morphism
    0 -> 10, 1 -> 110 carries that fixed point onto the fixed point of the
    golden-mean substitution 0 -> 0, 1 -> 101101 (the image identities
    sigma(10) = (10)(110)(10) and sigma(110) = (10)(110)(110)(110)(10))."""
    fixed: Word = ("0",)
    while len(fixed) < n + 1:
        fixed = RUNLEN_SUB(fixed)
    # drop the final (possibly truncated) run of the Thue-Morse prefix
    tm = thue_morse_word(8 * n + 16)
    runs = run_lengths(tm)[:-1]
    if len(runs) < n:
        raise ValueError("internal prefix too short")
    derived = tuple(str(r - 1) for r in runs[:n])
    if derived != fixed[:n]:
        return False
    # intertwining identity: sigma(h(a)) = h(rho(a)) letter by letter ...
    for letter in "01":
        if GOLDEN_SUB(BLOCK_MORPHISM((letter,))) != BLOCK_MORPHISM(RUNLEN_SUB((letter,))):
            return False
    # ... hence h maps the run-length fixed point onto the fixed point of sigma
    golden: Word = ("1",)
    while len(golden) < n:
        golden = GOLDEN_SUB(golden)
    return BLOCK_MORPHISM(fixed)[:n] == golden[:n]
