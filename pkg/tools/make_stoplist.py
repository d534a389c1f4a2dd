#!/usr/bin/env python3
"""Materialize the default English stoplist shipped with the package.

Seeds the list from scikit-learn's frozen English stop-word set so the
package itself carries a plain text file and no scikit-learn dependency.
Run from the repository root; rewrites src/tweetmine/data/stopwords_en.txt.
"""

from pathlib import Path

from sklearn.feature_extraction.text import ENGLISH_STOP_WORDS

OUT = Path(__file__).resolve().parents[1] / "src" / "tweetmine" / "data" / "stopwords_en.txt"


def main() -> None:
    words = sorted(ENGLISH_STOP_WORDS)
    assert all(w == w.lower() and " " not in w for w in words)
    OUT.write_text("\n".join(words) + "\n", encoding="utf-8")
    print(f"wrote {len(words)} stopwords to {OUT}")


if __name__ == "__main__":
    main()
