"""
A first annihilator census
==========================

Build a small group algebra, poke at individual elements, then let the
census sweep everything and report the probability that a random product
vanishes.
"""

from fractions import Fraction

# the three building blocks: a coefficient ring, a group, their algebra
from nullity import annihilator_histogram, field, s3
from nullity.groupring import annihilator_size, element_vector, gr_multiply
from nullity.oracle import histogram_record, record_text

K = field(2)
G = s3()
print(f"coefficients {K.spec}, group {G.spec}, algebra dimension {G.order}")

# elements are coefficient vectors indexed by group elements; the sum of
# all six group elements is a classic zero divisor
sigma = (1, 1, 1, 1, 1, 1)
print("sigma * sigma =", gr_multiply(K, G, sigma, sigma))

# its annihilator is huge: every element with coefficient sum zero kills it
print("|Ann_l(sigma)| =", annihilator_size(K, G, sigma, "left"))

# a unit, by contrast, annihilates nothing but zero
one = element_vector(K, G, 1)
print("|Ann_l(1)| =", annihilator_size(K, G, one, "left"))

# the census visits all 2^6 = 64 elements and histograms annihilator sizes
hist = annihilator_histogram(K, G, "left")
print()
print(record_text(histogram_record(hist)))

# counts[k] elements have annihilator size 2^k; summing |Ann| over the
# ring and dividing by 64^2 gives the zero-product probability
print()
print("P =", hist.probability(), "=", float(hist.probability()))
assert hist.probability() == Fraction(29, 256)

# the twosided census asks for alpha*x = x*alpha = 0 instead
two = annihilator_histogram(K, G, "twosided")
print("twosided P =", two.probability(), "=", float(two.probability()))
