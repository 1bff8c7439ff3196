"""
Checking a braid identity two ways
==================================

Two words in the 5-strand braid group, each a product of four conjugated
bands, turn out to be the same braid even though they share no obvious
rewriting path.
"""

from qpkit import data
from qpkit.braid import closure_components, closure_permutation, exponent_sum, invert, parse_word
from qpkit.garside import canonical_form, words_equal
from qpkit.handle_reduction import is_trivial

beta = parse_word(data.path("beta.braid").read_text(), 5)
beta_prime = parse_word(data.path("beta_prime.braid").read_text(), 5)
print("beta  =", beta)
print("beta' =", beta_prime)

# cheap invariants first: they can only rule equality out
print("exponent sums:", exponent_sum(beta), exponent_sum(beta_prime))
print("permutations: ", closure_permutation(beta).images, closure_permutation(beta_prime).images)

# the left-greedy normal form decides the word problem
nf = canonical_form(beta)
print("normal form: Delta^%d times %d simple factors" % (nf.delta_power, len(nf.factors)))
print("equal by normal form:", words_equal(beta, beta_prime))

# handle reduction is an unrelated algorithm; beta * beta'^-1 must reduce to nothing
print("equal by handle reduction:", is_trivial(beta * invert(beta_prime)))

# the closure of beta is a knot; adding one more crossing sigma_2 makes it a 2-component link
print("closure components of beta:", closure_components(beta))
print("closure components of sigma_2 beta:", closure_components(parse_word("2", 5) * beta))
