"""
Words in the generators
=======================

Every object is a product of P1^1 and the semisimple objects (P0^1)^n.
"""

from nilops import enumerate_up_to, format_object, format_pickets, generator_word, parse_object, star_all, star_power

for text in ["P1^3", "P0^2+P1^1", "P1^2+P0^1+P0^1"]:

    x = parse_object(text)
    word = generator_word(x)
    print(f"{text:>16s} = " + " * ".join(f"[{format_pickets(w)}]" for w in word))
    assert star_all(word) == x

# powers of a single picket
for k in range(4):
    print(k, format_object(star_power(parse_object("P1^2"), k)))

# every object with b <= 5 folds back from its word
print(sum(star_all(generator_word(x)) == x for x in enumerate_up_to(5)), "objects checked")
