"""Porter suffix-stripping stemmer.

Implements the original 1980 algorithm: all five step groups, no
vendor extensions, and no special-casing of one- or two-letter words.
Conformance is pinned by tests/data/porter_reference.txt.
"""

from __future__ import annotations

_VOWELS = "aeiou"


class PorterStemmer:
    """Stateless stemmer for lowercase alphabetic tokens."""

    def stem(self, word: str) -> str:
        word = self._step1a(word)
        word = self._step1b(word)
        word = self._step1c(word)
        word = self._step2(word)
        word = self._step3(word)
        word = self._step4(word)
        word = self._step5a(word)
        word = self._step5b(word)
        return word

    # -- character classes ------------------------------------------------

    def _cons(self, word: str, i: int) -> bool:
        ch = word[i]
        if ch in _VOWELS:
            return False
        if ch == "y":
            return i == 0 or not self._cons(word, i - 1)
        return True

    def _m(self, stem: str) -> int:
        # counts VC alternations in the form [C](VC)^m[V]
        i, n = 0, len(stem)
        while i < n and self._cons(stem, i):
            i += 1
        m = 0
        while i < n:
            while i < n and not self._cons(stem, i):
                i += 1
            if i >= n:
                break
            while i < n and self._cons(stem, i):
                i += 1
            m += 1
        return m

    def _has_vowel(self, stem: str) -> bool:
        return any(not self._cons(stem, i) for i in range(len(stem)))

    def _double_cons(self, word: str) -> bool:
        return len(word) >= 2 and word[-1] == word[-2] and self._cons(word, len(word) - 1)

    def _cvc(self, word: str) -> bool:
        n = len(word)
        return (
            n >= 3
            and self._cons(word, n - 1)
            and not self._cons(word, n - 2)
            and self._cons(word, n - 3)
            and word[-1] not in "wxy"
        )

    def _replace(self, word: str, suffix: str, repl: str, min_m: int) -> str | None:
        """Strip suffix and append repl if the stem measure exceeds min_m."""
        stem = word[: len(word) - len(suffix)]
        if self._m(stem) > min_m:
            return stem + repl
        return word

    # -- steps -------------------------------------------------------------

    def _step1a(self, word: str) -> str:
        if word.endswith("sses"):
            return word[:-2]
        if word.endswith("ies"):
            return word[:-2]
        if word.endswith("ss"):
            return word
        if word.endswith("s"):
            return word[:-1]
        return word

    def _step1b(self, word: str) -> str:
        if word.endswith("eed"):
            if self._m(word[:-3]) > 0:
                return word[:-1]
            return word
        if word.endswith("ed") and self._has_vowel(word[:-2]):
            word = word[:-2]
        elif word.endswith("ing") and self._has_vowel(word[:-3]):
            word = word[:-3]
        else:
            return word
        if word.endswith("at") or word.endswith("bl") or word.endswith("iz"):
            return word + "e"
        if self._double_cons(word):
            if word[-1] not in "lsz":
                return word[:-1]
            return word
        if self._m(word) == 1 and self._cvc(word):
            return word + "e"
        return word

    def _step1c(self, word: str) -> str:
        if word.endswith("y") and self._has_vowel(word[:-1]):
            return word[:-1] + "i"
        return word

    def _step2(self, word: str) -> str:
        if len(word) < 2:
            return word
        ch = word[-2]
        if ch == "a":
            if word.endswith("ational"):
                return self._replace(word, "ational", "ate", 0)
            if word.endswith("tional"):
                return self._replace(word, "tional", "tion", 0)
        elif ch == "c":
            if word.endswith("enci"):
                return self._replace(word, "enci", "ence", 0)
            if word.endswith("anci"):
                return self._replace(word, "anci", "ance", 0)
        elif ch == "e":
            if word.endswith("izer"):
                return self._replace(word, "izer", "ize", 0)
        elif ch == "l":
            if word.endswith("abli"):
                return self._replace(word, "abli", "able", 0)
            if word.endswith("alli"):
                return self._replace(word, "alli", "al", 0)
            if word.endswith("entli"):
                return self._replace(word, "entli", "ent", 0)
            if word.endswith("eli"):
                return self._replace(word, "eli", "e", 0)
            if word.endswith("ousli"):
                return self._replace(word, "ousli", "ous", 0)
        elif ch == "o":
            if word.endswith("ization"):
                return self._replace(word, "ization", "ize", 0)
            if word.endswith("ation"):
                return self._replace(word, "ation", "ate", 0)
            if word.endswith("ator"):
                return self._replace(word, "ator", "ate", 0)
        elif ch == "s":
            if word.endswith("alism"):
                return self._replace(word, "alism", "al", 0)
            if word.endswith("iveness"):
                return self._replace(word, "iveness", "ive", 0)
            if word.endswith("fulness"):
                return self._replace(word, "fulness", "ful", 0)
            if word.endswith("ousness"):
                return self._replace(word, "ousness", "ous", 0)
        elif ch == "t":
            if word.endswith("aliti"):
                return self._replace(word, "aliti", "al", 0)
            if word.endswith("iviti"):
                return self._replace(word, "iviti", "ive", 0)
            if word.endswith("biliti"):
                return self._replace(word, "biliti", "ble", 0)
        return word

    def _step3(self, word: str) -> str:
        ch = word[-1] if word else ""
        if ch == "e":
            if word.endswith("icate"):
                return self._replace(word, "icate", "ic", 0)
            if word.endswith("ative"):
                return self._replace(word, "ative", "", 0)
            if word.endswith("alize"):
                return self._replace(word, "alize", "al", 0)
        elif ch == "i":
            if word.endswith("iciti"):
                return self._replace(word, "iciti", "ic", 0)
        elif ch == "l":
            if word.endswith("ical"):
                return self._replace(word, "ical", "ic", 0)
            if word.endswith("ful"):
                return self._replace(word, "ful", "", 0)
        elif ch == "s":
            if word.endswith("ness"):
                return self._replace(word, "ness", "", 0)
        return word

    def _step4(self, word: str) -> str:
        if len(word) < 2:
            return word
        ch = word[-2]
        if ch == "a":
            if word.endswith("al"):
                return self._replace(word, "al", "", 1)
        elif ch == "c":
            if word.endswith("ance"):
                return self._replace(word, "ance", "", 1)
            if word.endswith("ence"):
                return self._replace(word, "ence", "", 1)
        elif ch == "e":
            if word.endswith("er"):
                return self._replace(word, "er", "", 1)
        elif ch == "i":
            if word.endswith("ic"):
                return self._replace(word, "ic", "", 1)
        elif ch == "l":
            if word.endswith("able"):
                return self._replace(word, "able", "", 1)
            if word.endswith("ible"):
                return self._replace(word, "ible", "", 1)
        elif ch == "n":
            if word.endswith("ant"):
                return self._replace(word, "ant", "", 1)
            if word.endswith("ement"):
                return self._replace(word, "ement", "", 1)
            if word.endswith("ment"):
                return self._replace(word, "ment", "", 1)
            if word.endswith("ent"):
                return self._replace(word, "ent", "", 1)
        elif ch == "o":
            if word.endswith("ion"):
                stem = word[:-3]
                if stem.endswith(("s", "t")) and self._m(stem) > 1:
                    return stem
                return word
            if word.endswith("ou"):
                return self._replace(word, "ou", "", 1)
        elif ch == "s":
            if word.endswith("ism"):
                return self._replace(word, "ism", "", 1)
        elif ch == "t":
            if word.endswith("ate"):
                return self._replace(word, "ate", "", 1)
            if word.endswith("iti"):
                return self._replace(word, "iti", "", 1)
        elif ch == "u":
            if word.endswith("ous"):
                return self._replace(word, "ous", "", 1)
        elif ch == "v":
            if word.endswith("ive"):
                return self._replace(word, "ive", "", 1)
        elif ch == "z":
            if word.endswith("ize"):
                return self._replace(word, "ize", "", 1)
        return word

    def _step5a(self, word: str) -> str:
        if word.endswith("e"):
            stem = word[:-1]
            m = self._m(stem)
            if m > 1 or (m == 1 and not self._cvc(stem)):
                return stem
        return word

    def _step5b(self, word: str) -> str:
        if word.endswith("l") and self._double_cons(word) and self._m(word) > 1:
            return word[:-1]
        return word


_STEMMER = PorterStemmer()


def porter_stem(token: str) -> str:
    """Stem one lowercase alphabetic token."""
    return _STEMMER.stem(token)
