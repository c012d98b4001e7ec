"""Which occupancy patterns can the bisectors of a cyclic polygon produce?

Walk through the decision procedure on a few words, then build an explicit
witness configuration for a realizable one and read its word back off the
circle.
"""

from fractions import Fraction

from bisector_words import (
    PointConfig,
    canonical_bracelet,
    is_realizable,
    occupancy_word,
    realize,
    signature,
    verify_direction_patterns,
    word_from_string,
)

candidates = [
    "101100",  # the only triangle pattern (up to shifts and reversal)
    "010101",  # perfectly alternating: never realizable
    "000010101101111001",  # a realizable 9-gon pattern
    "111000",  # n points in n consecutive regions: also impossible
]

print("== deciding realizability ==")
for text in candidates:
    w = word_from_string(text)
    sig = "".join(map(str, signature(w)))
    print(f"{text:>20}  signature={sig:>10}  realizable={is_realizable(w)}")

print()
print("== constructing a witness for 101100 ==")
w = word_from_string("101100")
config = realize(w)
print("positions:", ", ".join(config.to_strings()))
print("word read back:", "".join(map(str, occupancy_word(config))))
print("same bracelet:", canonical_bracelet(occupancy_word(config)) == canonical_bracelet(w))

print()
print("== geometry of a hand-picked triangle ==")
triangle = PointConfig((Fraction(0), Fraction(1, 10), Fraction(3, 10)))
print("word:", "".join(map(str, occupancy_word(triangle))))
print("look-direction patterns match region types:", verify_direction_patterns(triangle))
